#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bullwhip/policies.hpp"
#include "bullwhip/types.hpp"

namespace bullwhip {

/// Everything one run needs. Replication r derives seed base_seed + r.
struct RunConfig {
    int horizon = 150;
    std::uint64_t base_seed = 42;
    PolicyKind policy = PolicyKind::StaticBaseline;
    PolicySource policy_source = PolicySource::Fixed;
    DisruptionScenario scenario{};
    CostParameters costs{};
    DemandModel demand{};
    SimParameters sim{};
    // Targets used with PolicySource::Fixed, indexed by Role.
    std::array<std::int64_t, 3> out_levels{200, 150, 100};
    std::string policies_kb_path;
    std::string strategies_kb_path;
    std::optional<StrategyParameters> strategy_override;
    std::optional<int> premium_window_end;  // defaults to the scenario window end

    void validate() const;  // throws ConfigError
};

/// Scenario plus any what-if strategy applied on top of it.
struct ScenarioPlan {
    DisruptionScenario scenario{};
    std::optional<StrategyParameters> strategy_override;
    std::optional<int> premium_window_end;

    int premium_end() const {
        return premium_window_end ? *premium_window_end
                                  : scenario.start_day + scenario.duration_days;
    }
};

/// Per-run policy machinery: which decision rule runs each day, the selfish
/// agent's cooldown, and the knowledge base it consults.
struct PolicyRuntime {
    PolicyKind kind = PolicyKind::StaticBaseline;
    EmergencyState emergency{};
    const KnowledgeBase* kb = nullptr;
    std::int64_t retrieval_fallbacks = 0;
    std::int64_t emergencies_fired = 0;
};

/// Moves stock between entities: ships min(quantity, origin on-hand), applies
/// the active inbound-lead modifier and premium for Manufacturer-bound goods,
/// and increments the destination pipeline. Returns nothing when the origin
/// shelf is empty. Order shortfalls are the caller's bookkeeping.
std::optional<Shipment> dispatch(WorldState& world, Role origin, Role destination,
                                 std::int64_t quantity);

/// Deliver every shipment due today.
void receive_arrivals(WorldState& world);

/// Derive today's modifier set from the plan; applies the one-shot quality
/// wipe as a side effect. Unknown kinds are a configuration error.
void apply_disruption(WorldState& world, const ScenarioPlan& plan,
                      const CostParameters& costs);

/// Advance the world by one day: receive, disrupt, sell, clear backlog,
/// decide, dispatch, produce, account.
DayRecord step_day(WorldState& world, PolicyRuntime& policy, const ScenarioPlan& plan,
                   const CostParameters& costs);

struct RunResult {
    std::vector<DayRecord> trace;
    KpiReport report;
    WorldState world;  // final state
    std::int64_t retrieval_fallbacks = 0;
    std::int64_t emergencies_fired = 0;
};

/// Initial world for a config. Targets come from the config or, for
/// SGA-driven policies, from the policy knowledge base.
WorldState make_world(const RunConfig& config, std::uint64_t seed,
                      const std::map<Role, std::int64_t>& targets);

/// Seeds, steps the full horizon, and reports. Loads knowledge bases when the
/// policy needs them; configuration problems surface before any stepping.
RunResult run_simulation(const RunConfig& config);

/// Resolve targets for a config: fixed levels or SGA retrieval at t=0.
std::map<Role, std::int64_t> resolve_targets(const RunConfig& config,
                                             const KnowledgeBase* policies_kb);

}  // namespace bullwhip
