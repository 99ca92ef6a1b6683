#include "gbt/exact.hpp"

#include <stdexcept>

#include "gbt/partition.hpp"

namespace gbt {

int rational_rank(RatMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row)
            for (std::size_t j = col; j < cols; ++j) std::swap(a(row, j), a(pivot, j));
        const Rat inv_pivot = Rat(1) / a(row, col);
        for (std::size_t j = col; j < cols; ++j) a(row, j) *= inv_pivot;
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (a(r, col) == 0) continue;
            const Rat factor = a(r, col);
            for (std::size_t j = col; j < cols; ++j) a(r, j) -= factor * a(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

int krylov_rank(const RatMatrix& m, const std::vector<Rat>& v) {
    if (!m.square() || m.rows() != v.size())
        throw std::invalid_argument("krylov_rank: dimension mismatch");
    const std::size_t k = v.size();
    RatMatrix krylov(k, k);
    std::vector<Rat> column = v;
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < k; ++i) krylov(i, j) = column[i];
        if (j + 1 < k) column = m.apply(column);
    }
    return rational_rank(std::move(krylov));
}

namespace {

void require_tridiagonal(const IntMatrix& b) {
    if (!b.square() || b.rows() < 2)
        throw std::invalid_argument("divisor matrix must be square with k >= 2");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if ((i > j + 1 || j > i + 1) && b(i, j) != 0)
                throw std::invalid_argument("matrix is not tridiagonal");
}

}  // namespace

int main_count_divisor(const IntMatrix& b) {
    require_tridiagonal(b);
    for (std::size_t i = 0; i + 1 < b.rows(); ++i)
        if (b(i, i + 1) <= 0 || b(i + 1, i) <= 0)
            throw std::invalid_argument("divisor off-diagonal entries must be positive");
    return krylov_rank(to_rational(b), std::vector<Rat>(b.rows(), Rat(1)));
}

Poly charpoly_tridiagonal(const IntMatrix& b) {
    require_tridiagonal(b);
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (b(i, i) != 0) throw std::invalid_argument("charpoly recurrence requires zero diagonal");
    Poly prev = Poly::one();
    Poly cur = Poly::x();
    for (std::size_t i = 1; i < b.rows(); ++i) {
        const Rat offdiag_product(b(i - 1, i) * b(i, i - 1));
        Poly next = Poly::x() * cur - offdiag_product * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly charpoly_tree(const DegreeSequence& ds, std::int64_t max_vertices) {
    const std::vector<Int> sizes = level_sizes(ds);
    Int projected(0);
    for (const Int& s : sizes) projected += s;
    if (projected > max_vertices)
        throw std::length_error("tree B(" + ds.to_string() + ") would have " + projected.get_str() +
                                " vertices, above the cap of " + std::to_string(max_vertices));

    const int k = ds.levels();
    Poly phi = Poly::x();   // subtree rooted at a leaf
    Poly psi = Poly::one();
    for (int level = k - 1; level >= 1; --level) {
        const unsigned long children = static_cast<unsigned long>(
            level == 1 ? ds.degree_at_level(1) : ds.degree_at_level(level) - 1);
        Poly phi_pow = phi.pow(children - 1);
        Poly combined = Poly::x() * phi - Rat(children) * psi;
        psi = phi_pow * phi;       // phi^children
        phi = phi_pow * combined;  // phi^(children-1) (x phi - c psi)
    }
    return phi;
}

std::vector<Int> xi_vector(int k) {
    if (k < 6 || k % 2 != 0)
        throw std::invalid_argument("xi vector is defined for even k >= 6, got k = " +
                                    std::to_string(k));
    std::vector<Int> xi = {Int(1), Int(-2), Int(-1), Int(2) * (k - 3)};
    for (int j = 1; j <= k - 4; ++j) {
        Int entry = Int(4) * (k - 3 - j);
        xi.push_back(j % 2 == 1 ? Int(-entry) : entry);
    }
    return xi;
}

std::optional<std::size_t> first_eigenpair_violation(const IntMatrix& b, const std::vector<Int>& xi,
                                                     const Int& lambda) {
    if (!b.square() || b.rows() != xi.size())
        throw std::invalid_argument("eigenpair check: dimension mismatch");
    const std::size_t k = b.rows();
    for (std::size_t i = 0; i < k; ++i) {
        Int acc(0);
        for (std::size_t j = 0; j < k; ++j) acc += b(j, i) * xi[j];  // (B^T xi)_i
        if (acc != lambda * xi[i]) return i + 1;
    }
    return std::nullopt;
}

bool is_transpose_eigenpair(const IntMatrix& b, const std::vector<Int>& xi, const Int& lambda) {
    return !first_eigenpair_violation(b, xi, lambda).has_value();
}

XiIdentityReport verify_xi_identity(int k) {
    const IntMatrix b = divisor_matrix(counterexample_degrees(k));
    const std::vector<Int> xi = xi_vector(k);
    XiIdentityReport report;
    report.offending_row = first_eigenpair_violation(b, xi, Int(-2));
    report.eigen_ok = !report.offending_row.has_value();
    Int sum(0);
    for (const Int& entry : xi) sum += entry;
    report.orthogonal_ok = (sum == 0);
    return report;
}

}  // namespace gbt
