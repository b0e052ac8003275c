#include "doctest.h"

#include "bullwhip/rng.hpp"
#include "bullwhip/types.hpp"

using namespace bullwhip;

TEST_CASE("poisson sample mean tracks the rate") {
    SplitMix64 rng(12345);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += static_cast<double>(poisson_sample(rng, 10.0));
    const double mean = sum / n;
    CHECK(mean >= 9.85);
    CHECK(mean <= 10.15);
}

TEST_CASE("zero rate always yields zero") {
    SplitMix64 rng(7);
    for (int i = 0; i < 100; ++i) CHECK(poisson_sample(rng, 0.0) == 0);
}

TEST_CASE("negative rate is rejected") {
    SplitMix64 rng(7);
    CHECK_THROWS_AS(poisson_sample(rng, -1.0), std::invalid_argument);
}

TEST_CASE("identical seeds give identical streams") {
    SplitMix64 a(99), b(99);
    for (int i = 0; i < 1000; ++i) CHECK(poisson_sample(a, 10.0) == poisson_sample(b, 10.0));
    CHECK(a == b);
}

TEST_CASE("surge window scales the effective rate") {
    DemandModel model;
    model.base_rate = 10.0;
    model.surge_multiplier = 1.5;
    model.surge_window = {{60, 80}};
    CHECK(model.effective_rate(59) == doctest::Approx(10.0));
    CHECK(model.effective_rate(60) == doctest::Approx(15.0));
    CHECK(model.effective_rate(79) == doctest::Approx(15.0));
    CHECK(model.effective_rate(80) == doctest::Approx(10.0));
}

TEST_CASE("deterministic demand model skips the generator") {
    DemandModel model;
    model.base_rate = 10.0;
    model.deterministic = true;
    SplitMix64 rng(5);
    const SplitMix64 before = rng;
    CHECK(sample_demand(rng, 0, model) == 10);
    CHECK(rng == before);
}

TEST_CASE("scenario multiplier stacks onto the model rate") {
    DemandModel model;
    model.base_rate = 10.0;
    model.deterministic = true;
    SplitMix64 rng(5);
    CHECK(sample_demand(rng, 0, model, 1.5) == 15);
}
