#ifndef QAW_VERIFY_HPP
#define QAW_VERIFY_HPP

// Seeded verification suites over the library's mathematical invariants.
// Each suite enumerates its random draws in the check details so a report is
// fully reproducible from (suite, seed); identical configs give identical
// reports byte for byte.

#include <cstdint>
#include <string>
#include <vector>

#include "qaw/config.hpp"

namespace qaw {

struct CheckResult {
    std::string name;    // invariant plus draw/index identification
    std::string detail;  // enumerated draw values (no commas; CSV-safe)
    double residual;     // worst observed value of the checked quantity
    double threshold;
    bool pass;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed;
    std::vector<CheckResult> checks;
    bool passed;
};

// Suite names accepted by run_suite: contiguous, solutions, pincherle,
// wronskian, dougall, orthogonality.
const std::vector<std::string>& suite_names();

SuiteReport verify_contiguous(const RunConfig& cfg);
SuiteReport verify_solutions(const RunConfig& cfg);
SuiteReport verify_pincherle(const RunConfig& cfg);
SuiteReport verify_wronskian(const RunConfig& cfg);
SuiteReport verify_dougall(const RunConfig& cfg);
SuiteReport verify_orthogonality(const RunConfig& cfg);

// DomainError on an unknown name ("all" is expanded by the caller).
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace qaw

#endif
