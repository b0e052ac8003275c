#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "bullwhip/knowledge.hpp"
#include "bullwhip/types.hpp"

namespace bullwhip {

enum class PolicyKind {
    StaticBaseline,
    SelfishRag,
    HoardingVmi,
    CollaborativeVmi,
};

enum class PolicySource { Fixed, SgaAtT0 };

std::string_view to_string(PolicyKind k);
std::optional<PolicyKind> policy_from_string(std::string_view name);

/// The VMI variants only run with strategy-generated targets.
constexpr bool requires_sga(PolicyKind k) {
    return k == PolicyKind::HoardingVmi || k == PolicyKind::CollaborativeVmi;
}

struct EmergencyState {
    int cooldown_until = 0;
};

struct Order {
    Role entity = Role::Retailer;  // the entity placing the order
    std::int64_t quantity = 0;
};

struct Push {
    Role origin = Role::Manufacturer;
    Role destination = Role::Retailer;
    std::int64_t quantity = 0;
};

struct DecisionSet {
    std::vector<Order> replenishment_orders;
    std::vector<Push> push_shipments;
};

/// Decentralized order-up-to: every entity orders its target deficit from
/// upstream. Supplier orders trigger its own production.
DecisionSet baseline_decide(const WorldState& world);

struct SelfishDecision {
    DecisionSet decisions;
    EmergencyState state;
    bool emergency_triggered = false;
    bool retrieval_fallback = false;
};

/// Baseline plus a reactive Manufacturer: on a stockout with downstream
/// backlog it consults the knowledge base and places an emergency order
/// lifting its target to twice the normal level, then cools down for ten
/// days. Retrieval failure degrades to plain baseline behavior.
SelfishDecision selfish_decide(const WorldState& world, const KnowledgeBase& kb,
                               EmergencyState state);

/// Centralized ordering with the push step missing: reproduces the VMI
/// failure mode where the Manufacturer absorbs all inbound stock.
DecisionSet hoarding_vmi_decide(const WorldState& world);

/// Centralized ordering plus a proactive downstream push sized to restore
/// the Retailer's position before the Manufacturer keeps anything.
DecisionSet collaborative_vmi_decide(const WorldState& world);

/// Reads `order_up_to_level` for each role from the best-matching POLICY
/// document. Throws ConfigError when a role has no match.
std::map<Role, std::int64_t> sga_set_policies(const KnowledgeBase& kb);

}  // namespace bullwhip
