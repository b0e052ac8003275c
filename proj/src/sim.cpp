#include "bullwhip/sim.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <utility>

namespace bullwhip {

void RunConfig::validate() const {
    if (horizon < 1) throw ConfigError("horizon must be >= 1");
    for (double rate : costs.holding_rate)
        if (rate < 0) throw ConfigError("holding_rate must be >= 0");
    if (costs.backorder_penalty < 0) throw ConfigError("backorder_penalty must be >= 0");
    if (costs.premium_per_shipment < 0) throw ConfigError("premium_per_shipment must be >= 0");
    if (demand.base_rate < 0) throw ConfigError("demand base_rate must be >= 0");
    if (demand.surge_multiplier < 0) throw ConfigError("surge_multiplier must be >= 0");
    if (sim.lead_supplier_to_manufacturer < 1 || sim.lead_manufacturer_to_retailer < 1 ||
        sim.production_lead < 1)
        throw ConfigError("lead times must be >= 1 day");
    if (sim.production_capacity < 0) throw ConfigError("production_capacity must be >= 0");
    for (const auto& init : sim.initial_on_hand)
        if (init && *init < 0) throw ConfigError("initial_on_hand must be >= 0");
    for (std::int64_t level : out_levels)
        if (level < 0) throw ConfigError("out_level must be >= 0");
    if (scenario.start_day < 0) throw ConfigError("scenario start_day must be >= 0");
    if (scenario.duration_days < 0) throw ConfigError("scenario duration_days must be >= 0");
    if (scenario.kind == DisruptionKind::QualityFailure &&
        (scenario.magnitude < 0.0 || scenario.magnitude > 1.0))
        throw ConfigError("quality_failure magnitude is a wipe fraction in [0, 1]");
    if (scenario.magnitude < 0) throw ConfigError("scenario magnitude must be >= 0");
    if (requires_sga(policy) && policy_source == PolicySource::Fixed)
        throw ConfigError(std::string(to_string(policy)) +
                          " requires strategy-generated targets (policy_source sga)");
    if (strategy_override && strategy_override->extra_lead_time < 0)
        throw ConfigError("strategy extra_lead_time must be >= 0");
    if (strategy_override && strategy_override->transport_cost_premium < 0)
        throw ConfigError("strategy transport_cost_premium must be >= 0");
}

std::optional<Shipment> dispatch(WorldState& world, Role origin, Role destination,
                                 std::int64_t quantity) {
    if (quantity <= 0) throw std::invalid_argument("dispatch: quantity must be > 0");
    EntityState& from = world.entity(origin);
    EntityState& to = world.entity(destination);
    const std::int64_t shipped = std::min(quantity, from.on_hand);
    if (shipped == 0) return std::nullopt;

    int lead = destination == Role::Retailer ? world.params.lead_manufacturer_to_retailer
                                             : world.params.lead_supplier_to_manufacturer;
    double premium = 0.0;
    if (destination == Role::Manufacturer) {
        lead += world.modifiers.extra_inbound_lead;
        if (world.modifiers.premium_window) premium = world.modifiers.premium_per_shipment;
    }

    Shipment sh;
    sh.origin = origin;
    sh.destination = destination;
    sh.quantity = shipped;
    sh.dispatch_day = world.day;
    sh.arrival_day = world.day + std::max(1, lead);
    sh.premium_applied = premium;

    from.on_hand -= shipped;
    to.on_order += shipped;
    world.ledger.premium += premium;
    world.in_transit.push_back(sh);
    return sh;
}

void receive_arrivals(WorldState& world) {
    auto due = [&](const Shipment& sh) { return sh.arrival_day == world.day; };
    for (const Shipment& sh : world.in_transit) {
        if (!due(sh)) continue;
        EntityState& to = world.entity(sh.destination);
        to.on_hand += sh.quantity;
        to.on_order -= sh.quantity;
    }
    std::erase_if(world.in_transit, due);
}

void apply_disruption(WorldState& world, const ScenarioPlan& plan,
                      const CostParameters& costs) {
    world.modifiers = ActiveModifiers{};
    const DisruptionScenario& sc = plan.scenario;
    switch (sc.kind) {
        case DisruptionKind::None:
            break;
        case DisruptionKind::SupplierFailure:
            if (sc.in_window(world.day))
                world.modifiers.production_lead_multiplier = sc.magnitude;
            break;
        case DisruptionKind::TransportDisruption: {
            if (sc.in_window(world.day)) {
                world.modifiers.extra_inbound_lead =
                    plan.strategy_override ? plan.strategy_override->extra_lead_time
                                           : static_cast<int>(sc.magnitude);
            }
            const double premium = plan.strategy_override
                                       ? plan.strategy_override->transport_cost_premium
                                       : costs.premium_per_shipment;
            if (premium > 0.0 && world.day >= sc.start_day && world.day < plan.premium_end()) {
                world.modifiers.premium_window = true;
                world.modifiers.premium_per_shipment = premium;
            }
            break;
        }
        case DisruptionKind::DemandSurge:
            if (sc.in_window(world.day)) world.modifiers.demand_multiplier = sc.magnitude;
            break;
        case DisruptionKind::QualityFailure:
            if (world.day == sc.start_day && !world.wipe_applied) {
                EntityState& mfg = world.entity(Role::Manufacturer);
                // Exactly floor(fraction * on_hand) units are destroyed. The
                // epsilon shields decimal fractions from FP round-down.
                const auto wiped = static_cast<std::int64_t>(
                    std::floor(sc.magnitude * static_cast<double>(mfg.on_hand) + 1e-9));
                mfg.on_hand -= wiped;
                world.wipe_losses += wiped;
                world.wipe_applied = true;
            }
            break;
        default:
            throw ConfigError("unknown disruption kind");
    }
}

namespace {

DecisionSet run_policy(const WorldState& world, PolicyRuntime& rt) {
    switch (rt.kind) {
        case PolicyKind::StaticBaseline:
            return baseline_decide(world);
        case PolicyKind::SelfishRag: {
            if (!rt.kb) {
                ++rt.retrieval_fallbacks;
                return baseline_decide(world);
            }
            SelfishDecision r = selfish_decide(world, *rt.kb, rt.emergency);
            rt.emergency = r.state;
            if (r.retrieval_fallback) ++rt.retrieval_fallbacks;
            if (r.emergency_triggered) ++rt.emergencies_fired;
            return std::move(r.decisions);
        }
        case PolicyKind::HoardingVmi:
            return hoarding_vmi_decide(world);
        case PolicyKind::CollaborativeVmi:
            return collaborative_vmi_decide(world);
    }
    throw ConfigError("unknown policy kind");
}

}  // namespace

DayRecord step_day(WorldState& world, PolicyRuntime& policy, const ScenarioPlan& plan,
                   const CostParameters& costs) {
    if (world.day >= world.horizon)
        throw std::logic_error("step_day called past the horizon");

    std::array<std::int64_t, 3> demand_tally{};
    std::array<std::int64_t, 3> fulfilled_tally{};
    std::array<double, 3> premium_tally{};

    // 1. arrivals due today
    receive_arrivals(world);

    // 2. disruption modifiers, quality wipe
    apply_disruption(world, plan, costs);

    // 3. customer demand at the Retailer
    const std::int64_t demand = sample_demand(world.rng, world.day, world.demand_model,
                                              world.modifiers.demand_multiplier);
    world.total_demand += demand;
    demand_tally[index_of(Role::Retailer)] += demand;
    const FulfillmentResult fr = fulfill_demand(world.entity(Role::Retailer), demand);
    world.total_fulfilled += fr.filled;
    fulfilled_tally[index_of(Role::Retailer)] += fr.filled;

    // 4. clear outstanding downstream backlog
    constexpr std::array<std::pair<Role, Role>, 2> links{
        std::pair{Role::Manufacturer, Role::Retailer},
        std::pair{Role::Supplier, Role::Manufacturer}};
    for (const auto& [up, down] : links) {
        EntityState& u = world.entity(up);
        const std::int64_t q = std::min(u.on_hand, u.backorders);
        if (q <= 0) continue;
        const auto sh = dispatch(world, up, down, q);
        u.backorders -= q;
        fulfilled_tally[index_of(up)] += q;
        premium_tally[index_of(down)] += sh ? sh->premium_applied : 0.0;
    }

    // 5. policy decision
    const DecisionSet decisions = run_policy(world, policy);

    std::array<std::int64_t, 3> position_after_order{};
    for (Role r : kAllRoles)
        position_after_order[index_of(r)] = inventory_position(world.entity(r));
    for (const Order& o : decisions.replenishment_orders)
        position_after_order[index_of(o.entity)] += o.quantity;

    // 6. dispatch today's orders, then pushes
    std::int64_t production_request = 0;
    for (const Order& o : decisions.replenishment_orders) {
        if (o.quantity <= 0) continue;
        if (o.entity == Role::Supplier) {
            production_request += o.quantity;
            continue;
        }
        const Role up = upstream_of(o.entity);
        demand_tally[index_of(up)] += o.quantity;
        const auto sh = dispatch(world, up, o.entity, o.quantity);
        const std::int64_t shipped = sh ? sh->quantity : 0;
        fulfilled_tally[index_of(up)] += shipped;
        premium_tally[index_of(o.entity)] += sh ? sh->premium_applied : 0.0;
        world.entity(up).backorders += o.quantity - shipped;
    }
    for (const Push& p : decisions.push_shipments) {
        if (p.quantity <= 0) continue;
        const auto sh = dispatch(world, p.origin, p.destination, p.quantity);
        if (sh) {
            fulfilled_tally[index_of(p.origin)] += sh->quantity;
            premium_tally[index_of(p.destination)] += sh->premium_applied;
        }
    }

    // 7. production, capacity-limited; the remainder is re-derived tomorrow
    if (production_request > 0) {
        EntityState& sup = world.entity(Role::Supplier);
        const std::int64_t produced = std::min(production_request, sup.production_capacity);
        if (produced > 0) {
            const int lead = std::max(
                1, static_cast<int>(std::lround(world.params.production_lead *
                                                world.modifiers.production_lead_multiplier)));
            Shipment batch;
            batch.origin = Role::Supplier;
            batch.destination = Role::Supplier;
            batch.quantity = produced;
            batch.dispatch_day = world.day;
            batch.arrival_day = world.day + lead;
            world.in_transit.push_back(batch);
            sup.on_order += produced;
            world.total_produced += produced;
        }
    }

    // 8. end-of-day cost accrual and trace record
    DayRecord rec;
    rec.day = world.day;
    rec.position_after_order = position_after_order;
    for (Role r : kAllRoles) {
        const std::size_t i = index_of(r);
        EntityState& e = world.entity(r);
        const double held = static_cast<double>(e.on_hand) * costs.holding_rate[i];
        world.ledger.holding += held;
        world.ledger.holding_by_role[i] += held;
        double penalty = 0.0;
        if (r == Role::Retailer) {
            penalty = static_cast<double>(e.backorders) * costs.backorder_penalty;
            world.ledger.backorder += penalty;
        }
        rec.entities[i] = EntityDayRecord{e.on_hand,         e.backorders,
                                          e.on_order,        demand_tally[i],
                                          fulfilled_tally[i], held,
                                          penalty,           premium_tally[i]};
    }
    ++world.day;
    return rec;
}

std::map<Role, std::int64_t> resolve_targets(const RunConfig& config,
                                             const KnowledgeBase* policies_kb) {
    if (config.policy_source == PolicySource::SgaAtT0) {
        if (!policies_kb)
            throw ConfigError("policy knowledge base required for SGA-set targets");
        return sga_set_policies(*policies_kb);
    }
    std::map<Role, std::int64_t> targets;
    for (Role r : kAllRoles) targets[r] = config.out_levels[index_of(r)];
    return targets;
}

WorldState make_world(const RunConfig& config, std::uint64_t seed,
                      const std::map<Role, std::int64_t>& targets) {
    WorldState world;
    world.horizon = config.horizon;
    world.params = config.sim;
    world.demand_model = config.demand;
    world.rng = SplitMix64(seed);
    for (Role r : kAllRoles) {
        EntityState& e = world.entity(r);
        e.role = r;
        e.out_level = targets.at(r);
        if (r == Role::Supplier) e.production_capacity = config.sim.production_capacity;
        const auto& init = config.sim.initial_on_hand[index_of(r)];
        if (init) {
            e.on_hand = *init;
        } else {
            // Warm start upstream; the Retailer opens at half target so the
            // first replenishment cycle is observable.
            e.on_hand = r == Role::Retailer ? e.out_level / 2 : e.out_level;
        }
    }
    return world;
}

RunResult run_simulation(const RunConfig& config) {
    config.validate();

    std::optional<KnowledgeBase> policies_kb;
    const bool needs_policy_kb =
        config.policy_source == PolicySource::SgaAtT0 || config.policy == PolicyKind::SelfishRag;
    if (needs_policy_kb && !config.policies_kb_path.empty()) {
        try {
            policies_kb = KnowledgeBase::load(config.policies_kb_path);
        } catch (const std::exception& e) {
            if (config.policy_source == PolicySource::SgaAtT0) throw;
            // The selfish agent degrades to baseline behavior without its
            // knowledge base; the run itself must not abort.
            std::clog << "bullwhip: knowledge base unavailable (" << e.what()
                      << "), selfish agent falls back to baseline ordering\n";
        }
    } else if (config.policy_source == PolicySource::SgaAtT0 &&
               config.policies_kb_path.empty()) {
        throw ConfigError("policy knowledge base path required for SGA-set targets");
    }

    const auto targets = resolve_targets(config, policies_kb ? &*policies_kb : nullptr);
    WorldState world = make_world(config, config.base_seed, targets);

    PolicyRuntime runtime;
    runtime.kind = config.policy;
    runtime.kb = policies_kb ? &*policies_kb : nullptr;

    ScenarioPlan plan{config.scenario, config.strategy_override, config.premium_window_end};

    RunResult result;
    result.trace.reserve(static_cast<std::size_t>(config.horizon));
    for (int day = 0; day < config.horizon; ++day)
        result.trace.push_back(step_day(world, runtime, plan, config.costs));

    result.report = make_report(world);
    result.retrieval_fallbacks = runtime.retrieval_fallbacks;
    result.emergencies_fired = runtime.emergencies_fired;
    result.world = std::move(world);
    return result;
}

}  // namespace bullwhip
