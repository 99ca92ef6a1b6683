#pragma once

#include <optional>
#include <vector>

#include "gbt/degree_sequence.hpp"
#include "gbt/matrix.hpp"
#include "gbt/poly.hpp"
#include "gbt/tree.hpp"

namespace gbt {

// Rank over the rationals of [v, Mv, ..., M^{k-1}v], by exact Gaussian
// elimination. M must be square with v of matching length.
int krylov_rank(const RatMatrix& m, const std::vector<Rat>& v);

// Rank of a rational matrix by exact elimination (first-nonzero pivoting,
// pivot rows normalized).
int rational_rank(RatMatrix a);

// Number of main eigenvalues of a divisor matrix B: eigenvalues whose B^T
// eigenspace is not orthogonal to the all-ones vector. B must be tridiagonal
// with positive sub- and superdiagonal entries; that makes it similar to a
// symmetric Jacobi matrix via the positive diagonal scaling that also maps
// B to B^T, so the count equals the Krylov rank of (B, e_k).
int main_count_divisor(const IntMatrix& b);

// det(xI - B) for tridiagonal B with zero diagonal, via the three-term
// recurrence p_i = x p_{i-1} - (b_{i-1,i} b_{i,i-1}) p_{i-2}. Monic with
// integer coefficients.
Poly charpoly_tridiagonal(const IntMatrix& b);

// det(xI - A) for the full tree, computed level by level: all subtrees
// hanging below a level are identical, so one (phi, psi) pair per level
// suffices. phi = charpoly of the rooted subtree, psi = charpoly of the
// subtree minus its root; a root with c copies of child subtree S has
// phi = phi(S)^{c-1} (x phi(S) - c psi(S)), psi = phi(S)^c; leaves have
// phi = x, psi = 1.
Poly charpoly_tree(const DegreeSequence& ds, std::int64_t max_vertices = kDefaultMaxVertices);

// The exact eigenvector of B^T for eigenvalue -2 of the counterexample
// divisor: (1, -2, -1, 2(k-3), -4(k-4), 4(k-5), ..., -8, 4). k even, >= 6.
std::vector<Int> xi_vector(int k);

// B^T xi = lambda xi, checked entrywise over the integers.
bool is_transpose_eigenpair(const IntMatrix& b, const std::vector<Int>& xi, const Int& lambda);
// 1-based row of the first violated identity row, nullopt when it holds.
std::optional<std::size_t> first_eigenpair_violation(const IntMatrix& b, const std::vector<Int>& xi,
                                                     const Int& lambda);

struct XiIdentityReport {
    bool eigen_ok = false;       // B^T xi = -2 xi for the counterexample divisor
    bool orthogonal_ok = false;  // sum of xi entries is 0
    std::optional<std::size_t> offending_row;  // 1-based, set when eigen_ok is false
    bool pass() const { return eigen_ok && orthogonal_ok; }
};

XiIdentityReport verify_xi_identity(int k);

}  // namespace gbt
