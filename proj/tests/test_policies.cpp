#include "doctest.h"

#include "bullwhip/policies.hpp"
#include "bullwhip/sim.hpp"
#include "support.hpp"

using namespace bullwhip;

namespace {

WorldState world_with(std::int64_t sup_oh, std::int64_t mfg_oh, std::int64_t ret_oh) {
    WorldState w;
    w.entities[index_of(Role::Supplier)] =
        EntityState{Role::Supplier, sup_oh, 0, 0, 200, 20};
    w.entities[index_of(Role::Manufacturer)] =
        EntityState{Role::Manufacturer, mfg_oh, 0, 0, 150, 0};
    w.entities[index_of(Role::Retailer)] = EntityState{Role::Retailer, ret_oh, 0, 0, 100, 0};
    return w;
}

std::int64_t order_for(const DecisionSet& ds, Role role) {
    for (const Order& o : ds.replenishment_orders)
        if (o.entity == role) return o.quantity;
    return 0;
}

KnowledgeBase policies_kb() {
    return KnowledgeBase::load((testsupport::data_dir() / "policies.kb").string());
}

}  // namespace

TEST_CASE("baseline orders the target deficit") {
    WorldState w = world_with(200, 150, 40);
    w.entity(Role::Retailer).on_order = 0;
    auto ds = baseline_decide(w);
    CHECK(order_for(ds, Role::Retailer) == 60);
    CHECK(ds.push_shipments.empty());

    w.entity(Role::Retailer).on_hand = 130;
    ds = baseline_decide(w);
    CHECK(order_for(ds, Role::Retailer) == 0);
}

TEST_CASE("baseline counts pipeline and backorders in the position") {
    WorldState w = world_with(200, 150, 30);
    EntityState& r = w.entity(Role::Retailer);
    r.on_order = 20;
    r.backorders = 10;
    CHECK(inventory_position(r) == 40);
    CHECK(order_for(baseline_decide(w), Role::Retailer) == 60);
}

TEST_CASE("selfish emergency doubles the manufacturer target") {
    WorldState w = world_with(200, 0, 100);
    EntityState& m = w.entity(Role::Manufacturer);
    m.backorders = 25;
    m.on_order = 65;  // position 40
    w.day = 50;
    const KnowledgeBase kb = policies_kb();

    SUBCASE("emergency fires when off cooldown") {
        auto result = selfish_decide(w, kb, EmergencyState{0});
        CHECK(result.emergency_triggered);
        CHECK_FALSE(result.retrieval_fallback);
        CHECK(order_for(result.decisions, Role::Manufacturer) == 260);  // 300 - 40
        CHECK(result.state.cooldown_until == 60);
    }

    SUBCASE("cooldown suppresses the emergency") {
        auto result = selfish_decide(w, kb, EmergencyState{55});
        CHECK_FALSE(result.emergency_triggered);
        CHECK(order_for(result.decisions, Role::Manufacturer) == 110);  // 150 - 40
        CHECK(result.state.cooldown_until == 55);
    }

    SUBCASE("no trigger without a downstream backlog") {
        m.backorders = 0;
        m.on_order = 40;
        auto result = selfish_decide(w, kb, EmergencyState{0});
        CHECK_FALSE(result.emergency_triggered);
        CHECK(order_for(result.decisions, Role::Manufacturer) == 110);
    }
}

TEST_CASE("selfish falls back to baseline when retrieval finds nothing") {
    WorldState w = world_with(200, 0, 100);
    w.entity(Role::Manufacturer).backorders = 25;
    const KnowledgeBase empty = KnowledgeBase::parse(
        "[POLICY: UNRELATED]\ndescription: nothing shared\norder_up_to_level: 5\n");
    auto result = selfish_decide(w, empty, EmergencyState{0});
    CHECK(result.retrieval_fallback);
    CHECK_FALSE(result.emergency_triggered);
    CHECK(order_for(result.decisions, Role::Manufacturer) ==
          order_for(baseline_decide(w), Role::Manufacturer));
}

TEST_CASE("selfish with an infinite cooldown is exactly baseline") {
    const KnowledgeBase kb = policies_kb();
    SplitMix64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        WorldState w = world_with(static_cast<std::int64_t>(rng.next_u64() % 300),
                                  static_cast<std::int64_t>(rng.next_u64() % 300),
                                  static_cast<std::int64_t>(rng.next_u64() % 300));
        for (Role role : kAllRoles) {
            w.entity(role).backorders = static_cast<std::int64_t>(rng.next_u64() % 60);
            w.entity(role).on_order = static_cast<std::int64_t>(rng.next_u64() % 60);
        }
        w.day = static_cast<int>(rng.next_u64() % 150);
        const EmergencyState never{std::numeric_limits<int>::max()};
        const auto selfish = selfish_decide(w, kb, never);
        const auto base = baseline_decide(w);
        REQUIRE(selfish.decisions.replenishment_orders.size() ==
                base.replenishment_orders.size());
        for (std::size_t i = 0; i < base.replenishment_orders.size(); ++i) {
            CHECK(selfish.decisions.replenishment_orders[i].entity ==
                  base.replenishment_orders[i].entity);
            CHECK(selfish.decisions.replenishment_orders[i].quantity ==
                  base.replenishment_orders[i].quantity);
        }
    }
}

TEST_CASE("hoarding consolidates and never pushes") {
    WorldState w = world_with(200, 0, 0);
    EntityState& m = w.entity(Role::Manufacturer);
    EntityState& r = w.entity(Role::Retailer);
    m.on_order = 50;  // position 50
    r.on_hand = 30;   // position 30
    const auto ds = hoarding_vmi_decide(w);
    CHECK(ds.push_shipments.empty());
    CHECK(order_for(ds, Role::Retailer) == 0);
    CHECK(order_for(ds, Role::Manufacturer) == 170);  // 250 - 80
}

TEST_CASE("collaborative pushes the retailer deficit capped by stock") {
    WorldState w = world_with(200, 80, 0);
    w.entity(Role::Retailer).on_hand = 60;
    auto ds = collaborative_vmi_decide(w);
    REQUIRE(ds.push_shipments.size() == 1);
    CHECK(ds.push_shipments[0].quantity == 40);
    CHECK(ds.push_shipments[0].origin == Role::Manufacturer);
    CHECK(ds.push_shipments[0].destination == Role::Retailer);
    CHECK(order_for(ds, Role::Retailer) == 0);

    w.entity(Role::Manufacturer).on_hand = 20;
    ds = collaborative_vmi_decide(w);
    REQUIRE(ds.push_shipments.size() == 1);
    CHECK(ds.push_shipments[0].quantity == 20);

    w.entity(Role::Retailer).on_hand = 120;
    w.entity(Role::Manufacturer).on_hand = 80;
    ds = collaborative_vmi_decide(w);
    CHECK(ds.push_shipments.empty());
}

TEST_CASE("pushes never exceed manufacturer stock over random states") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        WorldState w = world_with(static_cast<std::int64_t>(rng.next_u64() % 400),
                                  static_cast<std::int64_t>(rng.next_u64() % 400),
                                  static_cast<std::int64_t>(rng.next_u64() % 400));
        w.entity(Role::Retailer).backorders = static_cast<std::int64_t>(rng.next_u64() % 100);
        w.entity(Role::Retailer).on_order = static_cast<std::int64_t>(rng.next_u64() % 100);
        const auto ds = collaborative_vmi_decide(w);
        for (const Push& p : ds.push_shipments) {
            CHECK(p.quantity >= 0);
            CHECK(p.quantity <= w.entity(Role::Manufacturer).on_hand);
        }
        // The consolidated order never lifts the joint position above target.
        const auto& m = w.entity(Role::Manufacturer);
        const auto& r = w.entity(Role::Retailer);
        const std::int64_t joint = inventory_position(m) + inventory_position(r);
        CHECK(joint + order_for(ds, Role::Manufacturer) <= std::max(joint, m.out_level + r.out_level));
    }
}

TEST_CASE("sga policy setting reads the shipped target levels") {
    const auto targets = sga_set_policies(policies_kb());
    CHECK(targets.at(Role::Retailer) == 100);
    CHECK(targets.at(Role::Manufacturer) == 150);
    CHECK(targets.at(Role::Supplier) == 200);
}

TEST_CASE("sga policy setting fails fast without a matching document") {
    const KnowledgeBase kb = KnowledgeBase::parse(
        "[POLICY: RETAILER_ONLY]\ndescription: retailer coverage\nentity: Retailer\n"
        "order_up_to_level: 10\n");
    CHECK_THROWS_AS(sga_set_policies(kb), ConfigError);
}

TEST_CASE("policy names round-trip") {
    for (PolicyKind k : {PolicyKind::StaticBaseline, PolicyKind::SelfishRag,
                         PolicyKind::HoardingVmi, PolicyKind::CollaborativeVmi}) {
        CHECK(policy_from_string(to_string(k)) == k);
    }
    CHECK_FALSE(policy_from_string("clever-policy").has_value());
}
