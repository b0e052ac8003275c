#include "doctest.h"

#include "bullwhip/knowledge.hpp"
#include "support.hpp"

using namespace bullwhip;

namespace {

KnowledgeBase load_policies() {
    return KnowledgeBase::load((testsupport::data_dir() / "policies.kb").string());
}

KnowledgeBase load_strategies() {
    return KnowledgeBase::load((testsupport::data_dir() / "strategies.kb").string());
}

}  // namespace

TEST_CASE("policy base parses to three documents with the expected levels") {
    const KnowledgeBase kb = load_policies();
    REQUIRE(kb.documents().size() == 3);
    CHECK(kb.find("RETAILER_STABLE")->parameters.at("order_up_to_level") == 100);
    CHECK(kb.find("MANUFACTURER_BUFFER")->parameters.at("order_up_to_level") == 150);
    CHECK(kb.find("SUPPLIER_PRODUCTION")->parameters.at("order_up_to_level") == 200);
    CHECK(kb.find("RETAILER_STABLE")->entity == Role::Retailer);
    CHECK(kb.find("RETAILER_STABLE")->kind == DocKind::Policy);
}

TEST_CASE("wrapped descriptions join onto one line") {
    const KnowledgeBase kb = load_strategies();
    CHECK(kb.find("ABSORB_COST")->description ==
          "The most cost-effective option. Do not react, allow lead times to increase, "
          "and accept the risk of lower service.");
}

TEST_CASE("missing premium defaults to zero on extraction") {
    const KnowledgeBase kb = load_strategies();
    const KnowledgeDocument* absorb = kb.find("ABSORB_COST");
    REQUIRE(absorb != nullptr);
    CHECK(absorb->parameters.count("transport_cost_premium") == 0);
    const StrategyParameters p = extract_parameters(*absorb);
    CHECK(p.extra_lead_time == 4);
    CHECK(p.transport_cost_premium == 0.0);
}

TEST_CASE("extraction matches the shipped strategy parameters") {
    const KnowledgeBase kb = load_strategies();
    CHECK(extract_parameters(*kb.find("REROUTE_PARTIAL")) == StrategyParameters{2, 75.0});
    CHECK(extract_parameters(*kb.find("EXPEDITE_SHIPPING")) == StrategyParameters{0, 200.0});
    CHECK(extract_parameters(*kb.find("ABSORB_COST")) == StrategyParameters{4, 0.0});
}

TEST_CASE("extraction rejects policy documents") {
    const KnowledgeBase kb = load_policies();
    CHECK_THROWS_AS(extract_parameters(*kb.find("RETAILER_STABLE")), KindError);
}

TEST_CASE("malformed input reports a line number") {
    CHECK_THROWS_AS(KnowledgeBase::parse("POLICY: X]"), KbParseError);
    CHECK_THROWS_AS(KnowledgeBase::parse("[POLICY: X\ndescription: y"), KbParseError);
    CHECK_THROWS_AS(KnowledgeBase::parse("[WIDGET: X]\ndescription: y"), KbParseError);
    try {
        KnowledgeBase::parse("[POLICY: A]\ndescription: a\n\n[POLICY: A]\ndescription: b\n");
        FAIL("duplicate names must be rejected");
    } catch (const KbParseError& e) {
        CHECK(e.line == 4);
    }
    CHECK_THROWS_AS(KnowledgeBase::parse("[STRATEGY: S]\nparameters: {'a' 1}"), KbParseError);
    CHECK_THROWS_AS(KnowledgeBase::parse("[STRATEGY: S]\nparameters: 'a': 1"), KbParseError);
}

TEST_CASE("tokenization is lowercase alphanumeric runs") {
    CHECK(tokenize("Policy for RETAILER_STABLE, v2!") ==
          std::vector<std::string>{"policy", "for", "retailer", "stable", "v2"});
    CHECK(tokenize("").empty());
}

TEST_CASE("similarity has the cosine fixed points") {
    const auto a = tokenize("a b");
    const auto b = tokenize("b c");
    CHECK(similarity(a, a) == doctest::Approx(1.0));
    CHECK(similarity(a, tokenize("x y")) == doctest::Approx(0.0));
    CHECK(similarity(a, b) == doctest::Approx(0.5));
    CHECK(similarity({}, a) == doctest::Approx(0.0));
}

TEST_CASE("similarity is symmetric and bounded on random token sets") {
    SplitMix64 rng(2024);
    const std::array<std::string, 8> vocab{"alpha", "beta", "gamma", "delta",
                                           "epsilon", "zeta", "eta", "theta"};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> a, b;
        const auto fill = [&](std::vector<std::string>& v) {
            const int len = static_cast<int>(rng.next_u64() % 12);
            for (int i = 0; i < len; ++i) v.push_back(vocab[rng.next_u64() % vocab.size()]);
        };
        fill(a);
        fill(b);
        const double ab = similarity(a, b);
        CHECK(ab == doctest::Approx(similarity(b, a)));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0 + 1e-12);
    }
}

TEST_CASE("retrieve resolves the expected documents") {
    const KnowledgeBase policies = load_policies();
    CHECK(policies.retrieve("Retailer").name == "RETAILER_STABLE");
    CHECK(policies.retrieve("Manufacturer").name == "MANUFACTURER_BUFFER");
    CHECK(policies.retrieve("Supplier").name == "SUPPLIER_PRODUCTION");

    const KnowledgeBase strategies = load_strategies();
    CHECK(strategies.retrieve("fastest premium freight").name == "EXPEDITE_SHIPPING");
    CHECK_THROWS_AS(strategies.retrieve("zzz qqq"), NoMatchError);
}

TEST_CASE("retrieve is deterministic") {
    const KnowledgeBase kb = load_strategies();
    const std::string q = "option";
    const std::string first = kb.retrieve(q).name;
    for (int i = 0; i < 10; ++i) CHECK(kb.retrieve(q).name == first);
}

TEST_CASE("kind filter narrows retrieval") {
    KnowledgeBase kb = KnowledgeBase::parse(
        "[POLICY: FOO]\ndescription: shared words here\nentity: Retailer\n"
        "order_up_to_level: 1\n\n"
        "[STRATEGY: BAR]\ndescription: shared words here\nparameters: {'extra_lead_time': 1}\n");
    CHECK(kb.retrieve("shared words", DocKind::Strategy).name == "BAR");
    CHECK(kb.retrieve("shared words", DocKind::Policy).name == "FOO");
    // Tie without filter breaks to the lexicographically smaller name.
    CHECK(kb.retrieve("shared words").name == "BAR");
}

TEST_CASE("portfolio returns every strategy, ranked then named") {
    const KnowledgeBase kb = load_strategies();
    const auto docs = kb.retrieve_portfolio("transportation disruption response");
    REQUIRE(docs.size() == 3);
    // Only EXPEDITE_SHIPPING shares a token with the query; the zero-score
    // tail is ordered by name.
    CHECK(docs[0].name == "EXPEDITE_SHIPPING");
    CHECK(docs[1].name == "ABSORB_COST");
    CHECK(docs[2].name == "REROUTE_PARTIAL");

    KnowledgeBase single = KnowledgeBase::parse(
        "[STRATEGY: ONLY]\ndescription: lone option\nparameters: {'extra_lead_time': 1}\n");
    CHECK(single.retrieve_portfolio("anything").size() == 1);

    const KnowledgeBase policies = load_policies();
    CHECK_THROWS_AS(policies.retrieve_portfolio("anything"), NoMatchError);
}

TEST_CASE("every document retrieves itself by its own description") {
    for (const KnowledgeBase& kb : {load_policies(), load_strategies()}) {
        for (const auto& doc : kb.documents()) {
            CHECK(kb.retrieve(doc.description).name == doc.name);
        }
    }
}

TEST_CASE("parse, serialize, parse round-trips the knowledge base") {
    for (const KnowledgeBase& kb : {load_policies(), load_strategies()}) {
        const KnowledgeBase reparsed = KnowledgeBase::parse(kb.serialize());
        CHECK(reparsed == kb);
    }
}
