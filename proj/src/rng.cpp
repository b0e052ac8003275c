#include "bullwhip/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace bullwhip {

std::int64_t poisson_sample(SplitMix64& rng, double lambda) {
    if (lambda < 0.0 || !std::isfinite(lambda))
        throw std::invalid_argument("poisson_sample: rate must be finite and >= 0");
    if (lambda == 0.0) return 0;
    // Sequential search keeps exp(-lambda) representable only for moderate
    // rates; the simulator stays far below this bound.
    if (lambda > 500.0)
        throw std::invalid_argument("poisson_sample: rate too large for inversion");

    const double u = rng.next_double();
    double p = std::exp(-lambda);
    double cum = p;
    std::int64_t k = 0;
    while (u >= cum) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cum += p;
        if (p <= 0.0) break;  // numeric tail guard
    }
    return k;
}

}  // namespace bullwhip
