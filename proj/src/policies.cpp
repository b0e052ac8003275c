#include "bullwhip/policies.hpp"

#include <algorithm>

namespace bullwhip {

namespace {

constexpr int kEmergencyCooldownDays = 10;
constexpr std::int64_t kEmergencyTargetMultiplier = 2;

// Query for the reactive document consulted before an emergency order. The
// entity name keeps it anchored to the Manufacturer's own policy document.
constexpr std::string_view kEmergencyQuery = "Manufacturer stockout emergency buffer";

std::int64_t order_up_to(const EntityState& e, std::int64_t target) {
    return std::max<std::int64_t>(0, target - inventory_position(e));
}

}  // namespace

std::string_view to_string(PolicyKind k) {
    switch (k) {
        case PolicyKind::StaticBaseline: return "static-baseline";
        case PolicyKind::SelfishRag: return "selfish-rag";
        case PolicyKind::HoardingVmi: return "hoarding-vmi";
        case PolicyKind::CollaborativeVmi: return "collaborative-vmi";
    }
    return "?";
}

std::optional<PolicyKind> policy_from_string(std::string_view name) {
    if (name == "static-baseline") return PolicyKind::StaticBaseline;
    if (name == "selfish-rag") return PolicyKind::SelfishRag;
    if (name == "hoarding-vmi") return PolicyKind::HoardingVmi;
    if (name == "collaborative-vmi") return PolicyKind::CollaborativeVmi;
    return std::nullopt;
}

DecisionSet baseline_decide(const WorldState& world) {
    DecisionSet ds;
    for (Role role : kAllRoles) {
        const EntityState& e = world.entity(role);
        const std::int64_t q = order_up_to(e, e.out_level);
        if (q > 0) ds.replenishment_orders.push_back({role, q});
    }
    return ds;
}

SelfishDecision selfish_decide(const WorldState& world, const KnowledgeBase& kb,
                               EmergencyState state) {
    SelfishDecision result;
    result.state = state;

    const EntityState& mfg = world.entity(Role::Manufacturer);
    const bool stocked_out = mfg.on_hand == 0 && mfg.backorders > 0;
    bool emergency = stocked_out && world.day >= state.cooldown_until;

    if (emergency) {
        try {
            (void)kb.retrieve(kEmergencyQuery);
        } catch (const NoMatchError&) {
            emergency = false;
            result.retrieval_fallback = true;
        }
    }

    for (Role role : kAllRoles) {
        const EntityState& e = world.entity(role);
        std::int64_t target = e.out_level;
        if (emergency && role == Role::Manufacturer)
            target = kEmergencyTargetMultiplier * e.out_level;
        const std::int64_t q = order_up_to(e, target);
        if (q > 0) result.decisions.replenishment_orders.push_back({role, q});
    }

    if (emergency) {
        result.emergency_triggered = true;
        result.state.cooldown_until = world.day + kEmergencyCooldownDays;
    }
    return result;
}

namespace {

// Centralized VMI order: one consolidated Manufacturer order sized against
// the combined Manufacturer + Retailer position, plus the Supplier's own
// production ordering.
DecisionSet vmi_orders(const WorldState& world) {
    DecisionSet ds;
    const EntityState& mfg = world.entity(Role::Manufacturer);
    const EntityState& ret = world.entity(Role::Retailer);
    const std::int64_t system_target = mfg.out_level + ret.out_level;
    const std::int64_t system_position = inventory_position(mfg) + inventory_position(ret);
    const std::int64_t consolidated = std::max<std::int64_t>(0, system_target - system_position);
    if (consolidated > 0)
        ds.replenishment_orders.push_back({Role::Manufacturer, consolidated});

    const EntityState& sup = world.entity(Role::Supplier);
    const std::int64_t production = order_up_to(sup, sup.out_level);
    if (production > 0) ds.replenishment_orders.push_back({Role::Supplier, production});
    return ds;
}

}  // namespace

DecisionSet hoarding_vmi_decide(const WorldState& world) {
    // Deliberately no push step: stock accumulates at the Manufacturer.
    return vmi_orders(world);
}

DecisionSet collaborative_vmi_decide(const WorldState& world) {
    DecisionSet ds = vmi_orders(world);
    const EntityState& mfg = world.entity(Role::Manufacturer);
    const EntityState& ret = world.entity(Role::Retailer);
    // Downstream deficit is covered before the Manufacturer keeps anything.
    const std::int64_t deficit = std::max<std::int64_t>(0, ret.out_level - inventory_position(ret));
    const std::int64_t push = std::min(mfg.on_hand, deficit);
    if (push > 0) ds.push_shipments.push_back({Role::Manufacturer, Role::Retailer, push});
    return ds;
}

std::map<Role, std::int64_t> sga_set_policies(const KnowledgeBase& kb) {
    std::map<Role, std::int64_t> targets;
    for (Role role : kAllRoles) {
        std::string query(to_string(role));
        try {
            const KnowledgeDocument& doc = kb.retrieve(query, DocKind::Policy);
            const auto it = doc.parameters.find("order_up_to_level");
            if (it == doc.parameters.end())
                throw ConfigError("policy document '" + doc.name +
                                  "' lacks an order_up_to_level");
            targets[role] = it->second;
        } catch (const NoMatchError&) {
            throw ConfigError("no policy document matches role '" + query + "'");
        }
    }
    return targets;
}

}  // namespace bullwhip
