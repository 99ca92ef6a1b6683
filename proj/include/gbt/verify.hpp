#pragma once

#include <string>

#include "json.hpp"

#include "gbt/degree_sequence.hpp"
#include "gbt/spectra.hpp"

namespace gbt {

// One named, runnable check of a spectral claim. pass is a pure function of
// expected vs observed.
struct VerificationOutcome {
    std::string claim_id;
    std::string instance;
    std::string expected;
    nlohmann::json observed;
    bool pass = false;
};

nlohmann::json to_json(const VerificationOutcome& outcome);

// (alpha^2 - alpha + 1, alpha): three levels, two main eigenvalues.
DegreeSequence hou_degrees(int alpha);

// claim "thm1": the divisors of both the Bethe tree and the quasi-regular
// complete tree with k levels have exactly k main eigenvalues.
VerificationOutcome verify_theorem1(int d, int k);

// claim "hou": the divisor of (alpha^2 - alpha + 1, alpha) has exactly two
// main eigenvalues despite three levels.
VerificationOutcome verify_hou(int alpha);

// claim "thm3": for even k >= 6 the counterexample family has at most k-1
// main eigenvalues; checks the xi eigenvector identity, the Krylov count and
// that -2 is a root of the divisor characteristic polynomial.
VerificationOutcome verify_counterexample(int k);

// claim "lem8": the tree and its level-partition divisor have the same main
// spectrum; numeric full-tree count must match the exact divisor count and
// every numeric main eigenvalue must bracket a sign change of the exact
// divisor characteristic polynomial.
VerificationOutcome verify_main_spectrum_equality(const DegreeSequence& ds,
                                                  double tol_cluster = kTolCluster,
                                                  std::int64_t cap = kDefaultEigenCap);

}  // namespace gbt
