#ifndef QAW_RNG_HPP
#define QAW_RNG_HPP

// Deterministic draws for the seeded verification suites.  mt19937_64 with
// explicit bit-to-double conversion (never std::uniform_real_distribution,
// whose output is implementation-defined) so identical seeds give identical
// draw sequences on every platform.

#include <cstdint>
#include <numbers>
#include <random>

#include "qaw/types.hpp"

namespace qaw {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1) with 53 random bits
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // modulus in [r_lo, r_hi), phase in [0, 2pi)
    cplx annulus(double r_lo, double r_hi) {
        const double r = uniform(r_lo, r_hi);
        const double phase = uniform(0.0, 2.0 * std::numbers::pi);
        return std::polar(r, phase);
    }

    cplx on_circle() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace qaw

#endif
