#ifndef QAW_CONFIG_HPP
#define QAW_CONFIG_HPP

// Run configuration shared by the CLI and the verification suites.  The
// default parameter set lies in the guard-certified real-orthogonality
// regime (all moduli < |q|^{1/2}, -1 < eps < 1) so every suite runs out of
// the box.

#include <cstdint>
#include <string>

#include "qaw/continued_fraction.hpp"
#include "qaw/parameters.hpp"
#include "qaw/types.hpp"

namespace qaw {

struct RunConfig {
    QParameters params{0.5, 0.4, 0.4, 0.4, 0.4, 0.5};
    ToleranceConfig tolerance{};
    CfConfig cf{};
    std::string output_format = "json";
    std::uint64_t seed = 20240915;
    bool serial = false;
};

}  // namespace qaw

#endif
