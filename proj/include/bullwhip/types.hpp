#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bullwhip/rng.hpp"

namespace bullwhip {

/// Raised for invalid run configuration (bad policy name, horizon < 1, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Chain entities
// ---------------------------------------------------------------------------

enum class Role { Supplier = 0, Manufacturer = 1, Retailer = 2 };

inline constexpr std::array<Role, 3> kAllRoles{Role::Supplier, Role::Manufacturer,
                                               Role::Retailer};

constexpr std::size_t index_of(Role r) { return static_cast<std::size_t>(r); }

std::string_view to_string(Role r);
std::optional<Role> role_from_string(std::string_view name);

/// Upstream trading partner. The Supplier is its own source (production).
constexpr Role upstream_of(Role r) {
    switch (r) {
        case Role::Retailer: return Role::Manufacturer;
        case Role::Manufacturer: return Role::Supplier;
        case Role::Supplier: return Role::Supplier;
    }
    return Role::Supplier;
}

/// One echelon's inventory bookkeeping.
///
/// `backorders` are units owed downstream: customer backorders for the
/// Retailer, unfilled downstream orders for the Manufacturer and Supplier.
/// `on_order` counts only units physically in transit toward this entity.
struct EntityState {
    Role role = Role::Retailer;
    std::int64_t on_hand = 0;
    std::int64_t backorders = 0;
    std::int64_t on_order = 0;
    std::int64_t out_level = 0;
    std::int64_t production_capacity = 0;  // Supplier only
};

/// on_hand + on_order - backorders
inline std::int64_t inventory_position(const EntityState& e) {
    return e.on_hand + e.on_order - e.backorders;
}

struct FulfillmentResult {
    std::int64_t filled = 0;
    std::int64_t new_backorders = 0;
};

/// Clears outstanding backorders before new demand (FIFO), then fills as much
/// of today's demand as stock allows.
FulfillmentResult fulfill_demand(EntityState& entity, std::int64_t demand);

// ---------------------------------------------------------------------------
// Goods in motion
// ---------------------------------------------------------------------------

/// A quantity of goods in transit. Production batches are modeled as
/// self-shipments of the Supplier (origin == destination == Supplier).
struct Shipment {
    Role origin = Role::Supplier;
    Role destination = Role::Manufacturer;
    std::int64_t quantity = 0;
    int dispatch_day = 0;
    int arrival_day = 0;
    double premium_applied = 0.0;
};

// ---------------------------------------------------------------------------
// Demand
// ---------------------------------------------------------------------------

/// Poisson customer demand with an optional surge window. When
/// `deterministic` is set the model yields round(rate) without consuming
/// random numbers, which makes steady-state identities testable.
struct DemandModel {
    double base_rate = 10.0;
    double surge_multiplier = 1.5;
    std::optional<std::pair<int, int>> surge_window;  // [start, end)
    bool deterministic = false;

    double effective_rate(int day) const {
        if (surge_window && day >= surge_window->first && day < surge_window->second)
            return base_rate * surge_multiplier;
        return base_rate;
    }
};

/// Poisson-distributed draw for one day. `extra_multiplier` carries any
/// scenario-driven demand modifier.
std::int64_t sample_demand(SplitMix64& rng, int day, const DemandModel& model,
                           double extra_multiplier = 1.0);

// ---------------------------------------------------------------------------
// Disruptions
// ---------------------------------------------------------------------------

enum class DisruptionKind {
    None,
    SupplierFailure,
    TransportDisruption,
    DemandSurge,
    QualityFailure,
};

std::string_view to_string(DisruptionKind k);
std::optional<DisruptionKind> disruption_from_string(std::string_view name);

/// Shock description. `magnitude` is kind-specific: production-lead
/// multiplier, extra lead days, demand multiplier, or wipe fraction.
struct DisruptionScenario {
    DisruptionKind kind = DisruptionKind::None;
    int start_day = 60;
    int duration_days = 0;
    double magnitude = 0.0;

    bool in_window(int day) const {
        return kind != DisruptionKind::None && day >= start_day &&
               day < start_day + duration_days;
    }

    /// Scenario with the stock magnitude and duration for `kind`.
    static DisruptionScenario defaults_for(DisruptionKind kind);
};

// ---------------------------------------------------------------------------
// Costs
// ---------------------------------------------------------------------------

struct CostParameters {
    std::array<double, 3> holding_rate{1.0, 1.0, 1.0};  // per role, per unit-day
    double backorder_penalty = 10.0;                    // Retailer customer backorders
    double premium_per_shipment = 0.0;  // inbound-Manufacturer dispatches in window
};

struct CostLedger {
    double holding = 0.0;
    double backorder = 0.0;
    double premium = 0.0;
    std::array<double, 3> holding_by_role{};

    double total() const { return holding + backorder + premium; }
};

/// Mitigation parameters extracted from a strategy document.
struct StrategyParameters {
    int extra_lead_time = 0;
    double transport_cost_premium = 0.0;

    friend bool operator==(const StrategyParameters&, const StrategyParameters&) = default;
};

// ---------------------------------------------------------------------------
// World
// ---------------------------------------------------------------------------

/// Lead times and capacity. Defaults keep the chain feasible (capacity at
/// twice the mean demand) while leaving it exposed to order amplification.
struct SimParameters {
    int lead_supplier_to_manufacturer = 4;
    int lead_manufacturer_to_retailer = 2;
    int production_lead = 2;
    std::int64_t production_capacity = 20;
    // Empty slots fall back to the policy targets (Retailer at half target).
    std::array<std::optional<std::int64_t>, 3> initial_on_hand{};
};

/// Modifiers currently in force, re-derived every day from the scenario.
struct ActiveModifiers {
    int extra_inbound_lead = 0;               // added to Manufacturer-inbound dispatches
    double production_lead_multiplier = 1.0;  // SupplierFailure
    double demand_multiplier = 1.0;           // DemandSurge
    bool premium_window = false;
    double premium_per_shipment = 0.0;
};

/// Full state of one run.
struct WorldState {
    int day = 0;
    int horizon = 150;
    std::array<EntityState, 3> entities{};
    std::vector<Shipment> in_transit;
    CostLedger ledger;
    std::int64_t total_demand = 0;
    std::int64_t total_fulfilled = 0;
    std::int64_t total_produced = 0;
    std::int64_t wipe_losses = 0;
    bool wipe_applied = false;
    SplitMix64 rng;
    ActiveModifiers modifiers;
    SimParameters params;
    DemandModel demand_model;

    EntityState& entity(Role r) { return entities[index_of(r)]; }
    const EntityState& entity(Role r) const { return entities[index_of(r)]; }

    std::int64_t on_hand_total() const {
        std::int64_t s = 0;
        for (const auto& e : entities) s += e.on_hand;
        return s;
    }
    std::int64_t in_transit_total() const {
        std::int64_t s = 0;
        for (const auto& sh : in_transit) s += sh.quantity;
        return s;
    }
};

// ---------------------------------------------------------------------------
// Per-day trace and KPIs
// ---------------------------------------------------------------------------

struct EntityDayRecord {
    std::int64_t on_hand = 0;
    std::int64_t backorders = 0;
    std::int64_t on_order = 0;
    std::int64_t demand = 0;     // customer demand (Retailer) or orders received
    std::int64_t fulfilled = 0;  // units shipped downstream / to customers
    double holding_cost = 0.0;
    double backorder_cost = 0.0;
    double premium_cost = 0.0;
};

struct DayRecord {
    int day = 0;
    std::array<EntityDayRecord, 3> entities{};
    // Inventory position at the instant the day's order was placed, with the
    // order itself counted as incoming. Not serialized.
    std::array<std::int64_t, 3> position_after_order{};
};

/// Cost decomposition and fill rate for one finished run.
struct KpiReport {
    double total_cost = 0.0;
    double holding_cost = 0.0;
    double backorder_cost = 0.0;
    double premium_cost = 0.0;
    double service_level = 0.0;  // percent in [0, 100]
    std::array<double, 3> holding_by_role{};
    std::int64_t total_demand = 0;
    std::int64_t total_fulfilled = 0;
};

KpiReport make_report(const WorldState& world);

}  // namespace bullwhip
