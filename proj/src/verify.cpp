#include "gbt/verify.hpp"

#include <cmath>
#include <sstream>

#include "gbt/exact.hpp"
#include "gbt/partition.hpp"

namespace gbt {

using nlohmann::json;

json to_json(const VerificationOutcome& outcome) {
    return json{{"claim_id", outcome.claim_id},
                {"instance", outcome.instance},
                {"expected", outcome.expected},
                {"observed", outcome.observed},
                {"pass", outcome.pass}};
}

DegreeSequence hou_degrees(int alpha) {
    if (alpha < 2) throw std::invalid_argument("hou family needs alpha >= 2");
    return DegreeSequence({alpha * alpha - alpha + 1, alpha});
}

VerificationOutcome verify_theorem1(int d, int k) {
    if (d < 2 || k < 3) throw std::invalid_argument("verify_theorem1 needs d >= 2 and k >= 3");
    VerificationOutcome outcome;
    outcome.claim_id = "thm1";
    outcome.instance = "d=" + std::to_string(d) + ", k=" + std::to_string(k);
    outcome.expected = "divisors of the Bethe and quasi-regular trees both have exactly " +
                       std::to_string(k) + " main eigenvalues";
    const int bethe_count = main_count_divisor(divisor_matrix(bethe_degrees(d, k)));
    const int quasi_count = main_count_divisor(divisor_matrix(quasi_regular_degrees(d, k)));
    outcome.observed = {{"bethe_main_count", bethe_count}, {"quasi_regular_main_count", quasi_count}};
    outcome.pass = bethe_count == k && quasi_count == k;
    return outcome;
}

VerificationOutcome verify_hou(int alpha) {
    VerificationOutcome outcome;
    outcome.claim_id = "hou";
    const DegreeSequence ds = hou_degrees(alpha);
    outcome.instance = "alpha=" + std::to_string(alpha) + ", degrees=(" + ds.to_string() + ")";
    outcome.expected = "divisor has exactly 2 main eigenvalues";
    const int count = main_count_divisor(divisor_matrix(ds));
    outcome.observed = {{"main_count", count}};
    outcome.pass = count == 2;
    return outcome;
}

VerificationOutcome verify_counterexample(int k) {
    VerificationOutcome outcome;
    outcome.claim_id = "thm3";
    outcome.instance = "k=" + std::to_string(k);
    outcome.expected = "xi identity holds, divisor main count <= k-1, charpoly(-2) = 0";

    const XiIdentityReport xi = verify_xi_identity(k);  // rejects odd or small k
    const DegreeSequence ds = counterexample_degrees(k);
    const IntMatrix b = divisor_matrix(ds);
    const int count = main_count_divisor(b);
    const Rat at_minus_two = charpoly_tridiagonal(b)(Rat(-2));

    outcome.observed = {{"xi_eigen_ok", xi.eigen_ok},
                        {"xi_orthogonal_ok", xi.orthogonal_ok},
                        {"main_count", count},
                        {"charpoly_at_minus_2", to_string(at_minus_two)}};
    if (xi.offending_row) outcome.observed["xi_offending_row"] = *xi.offending_row;
    outcome.pass = xi.pass() && count <= k - 1 && at_minus_two == 0;
    return outcome;
}

namespace {

// Sign-change test: does p change sign over [x - halfwidth, x + halfwidth]?
// Exact evaluation at rational endpoints; an exact zero at an endpoint counts.
bool brackets_root(const Poly& p, double x, const Rat& halfwidth) {
    const Rat center = rat_from_double(x);
    const Rat lo = p(center - halfwidth);
    const Rat hi = p(center + halfwidth);
    if (lo == 0 || hi == 0) return true;
    return sign(lo) != sign(hi);
}

}  // namespace

VerificationOutcome verify_main_spectrum_equality(const DegreeSequence& ds, double tol_cluster,
                                                  std::int64_t cap) {
    VerificationOutcome outcome;
    outcome.claim_id = "lem8";
    outcome.instance = "degrees=(" + ds.to_string() + ")";
    outcome.expected =
        "numeric full-tree main count equals exact divisor count; numeric main "
        "eigenvalues bracket roots of the divisor charpoly";

    const BetheTree tree = build_tree(ds, cap);
    const MainSpectrumReport numeric = main_spectrum_numeric(dense_adjacency(tree, cap));
    const IntMatrix b = divisor_matrix(ds);
    const int exact_count = main_count_divisor(b);
    const Poly p = charpoly_tridiagonal(b);

    const Rat halfwidth = rat_from_double(tol_cluster);
    bool all_bracket = true;
    json values = json::array();
    for (double value : numeric.main_values()) {
        const bool ok = brackets_root(p, value, halfwidth);
        all_bracket = all_bracket && ok;
        values.push_back({{"value", value}, {"brackets_divisor_root", ok}});
    }

    outcome.observed = {{"numeric_main_count", numeric.main_count},
                        {"exact_main_count", exact_count},
                        {"numeric_main_values", values},
                        {"n", tree.vertex_count()}};
    outcome.pass = numeric.main_count == exact_count && all_bracket;
    return outcome;
}

}  // namespace gbt
