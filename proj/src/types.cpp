#include "bullwhip/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace bullwhip {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::string_view to_string(Role r) {
    switch (r) {
        case Role::Supplier: return "supplier";
        case Role::Manufacturer: return "manufacturer";
        case Role::Retailer: return "retailer";
    }
    return "?";
}

std::optional<Role> role_from_string(std::string_view name) {
    const std::string n = lowercase(name);
    if (n == "supplier") return Role::Supplier;
    if (n == "manufacturer") return Role::Manufacturer;
    if (n == "retailer") return Role::Retailer;
    return std::nullopt;
}

std::string_view to_string(DisruptionKind k) {
    switch (k) {
        case DisruptionKind::None: return "none";
        case DisruptionKind::SupplierFailure: return "supplier_failure";
        case DisruptionKind::TransportDisruption: return "transport_disruption";
        case DisruptionKind::DemandSurge: return "demand_surge";
        case DisruptionKind::QualityFailure: return "quality_failure";
    }
    return "?";
}

std::optional<DisruptionKind> disruption_from_string(std::string_view name) {
    const std::string n = lowercase(name);
    if (n == "none") return DisruptionKind::None;
    if (n == "supplier_failure") return DisruptionKind::SupplierFailure;
    if (n == "transport_disruption") return DisruptionKind::TransportDisruption;
    if (n == "demand_surge") return DisruptionKind::DemandSurge;
    if (n == "quality_failure") return DisruptionKind::QualityFailure;
    return std::nullopt;
}

DisruptionScenario DisruptionScenario::defaults_for(DisruptionKind kind) {
    DisruptionScenario s;
    s.kind = kind;
    s.start_day = 60;
    switch (kind) {
        case DisruptionKind::None:
            s.duration_days = 0;
            s.magnitude = 0.0;
            break;
        case DisruptionKind::SupplierFailure:  // production time doubles
            s.duration_days = 20;
            s.magnitude = 2.0;
            break;
        case DisruptionKind::TransportDisruption:  // extra inbound lead days
            s.duration_days = 15;
            s.magnitude = 4.0;
            break;
        case DisruptionKind::DemandSurge:  // demand rate multiplier
            s.duration_days = 20;
            s.magnitude = 1.5;
            break;
        case DisruptionKind::QualityFailure:  // on-hand wipe fraction
            s.duration_days = 0;
            s.magnitude = 0.7;
            break;
    }
    return s;
}

FulfillmentResult fulfill_demand(EntityState& entity, std::int64_t demand) {
    if (demand < 0) throw std::invalid_argument("fulfill_demand: negative demand");
    const std::int64_t prior_backlog = entity.backorders;
    const std::int64_t owed = prior_backlog + demand;
    const std::int64_t filled = std::min(entity.on_hand, owed);
    entity.on_hand -= filled;
    entity.backorders = owed - filled;
    // Backlog is served first; the unmet slice of today's demand is new debt.
    const std::int64_t served_backlog = std::min(filled, prior_backlog);
    return {filled, demand - (filled - served_backlog)};
}

KpiReport make_report(const WorldState& world) {
    KpiReport r;
    r.holding_cost = world.ledger.holding;
    r.backorder_cost = world.ledger.backorder;
    r.premium_cost = world.ledger.premium;
    r.total_cost = r.holding_cost + r.backorder_cost + r.premium_cost;
    r.holding_by_role = world.ledger.holding_by_role;
    r.total_demand = world.total_demand;
    r.total_fulfilled = world.total_fulfilled;
    r.service_level = world.total_demand == 0
                          ? 0.0
                          : 100.0 * static_cast<double>(world.total_fulfilled) /
                                static_cast<double>(world.total_demand);
    return r;
}

std::int64_t sample_demand(SplitMix64& rng, int day, const DemandModel& model,
                           double extra_multiplier) {
    const double rate = model.effective_rate(day) * extra_multiplier;
    if (rate < 0.0) throw std::invalid_argument("sample_demand: negative rate");
    if (model.deterministic) return static_cast<std::int64_t>(std::llround(rate));
    return poisson_sample(rng, rate);
}

}  // namespace bullwhip
