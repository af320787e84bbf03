#ifndef CYCDIAG_VERIFY_HPP
#define CYCDIAG_VERIFY_HPP

#include <string>
#include <vector>

#include "cycdiag/cohomology.hpp"

namespace cyd {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyScope {
    int r = 3;
    int n = 3;     // largest ambient dimension for exhaustive sweeps
    int qmax = 8;  // largest resolution degree
};

// Named property suites: signs, phi, psi, f, mu, suspension, power, all.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyScope& scope);

// Replays every frozen golden value wired into the library.
std::vector<CheckResult> run_selftest();

}  // namespace cyd

#endif
