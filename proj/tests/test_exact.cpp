#include "doctest.h"

#include <random>

#include "gbt/exact.hpp"
#include "gbt/partition.hpp"
#include "oracles.hpp"

using namespace gbt;

namespace {

std::vector<Rat> ones(std::size_t k) { return std::vector<Rat>(k, Rat(1)); }

Poly int_poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

RatMatrix dense_rational_adjacency(const BetheTree& tree) {
    const auto n = static_cast<std::size_t>(tree.vertex_count());
    RatMatrix a(n, n);
    for (const auto& [u, v] : tree.edges()) {
        a(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) = 1;
        a(static_cast<std::size_t>(v), static_cast<std::size_t>(u)) = 1;
    }
    return a;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("krylov rank of the star divisor transpose") {
    // columns (1,1) and (1,3) are independent
    RatMatrix bt(2, 2);
    bt(0, 1) = 1;
    bt(1, 0) = 3;
    CHECK(krylov_rank(bt, ones(2)) == 2);
}

TEST_CASE("krylov rank of the identity is 1") {
    CHECK(krylov_rank(RatMatrix::identity(5), ones(5)) == 1);
}

TEST_CASE("krylov rank rejects dimension mismatches") {
    CHECK_THROWS_AS(krylov_rank(RatMatrix(3, 3), ones(2)), std::invalid_argument);
    CHECK_THROWS_AS(krylov_rank(RatMatrix(2, 3), ones(3)), std::invalid_argument);
}

TEST_CASE("krylov rank is invariant under scaling of the start vector") {
    std::mt19937 rng(1123);
    std::uniform_int_distribution<long> num(1, 9);
    for (int trial = 0; trial < 10; ++trial) {
        const DegreeSequence ds = oracle::random_degree_sequence(rng, 7, 5);
        const RatMatrix b = to_rational(divisor_matrix(ds));
        const Rat scale = make_rat(Int(num(rng)), Int(num(rng)));
        std::vector<Rat> v = ones(b.rows());
        std::vector<Rat> scaled = v;
        for (Rat& entry : scaled) entry *= scale;
        CHECK(krylov_rank(b, v) == krylov_rank(b, scaled));
    }
}

TEST_CASE("the orientation of the Krylov realization matters") {
    // For the k=6 counterexample divisor the count must come from (B, e):
    // (B^T, e) overcounts because the similarity reweighting is inverted,
    // while (B^T, D e) with D = diag(cell sizes) agrees with (B, e).
    const DegreeSequence ds = counterexample_degrees(6);
    const RatMatrix b = to_rational(divisor_matrix(ds));
    CHECK(krylov_rank(b, ones(6)) == 5);
    CHECK(krylov_rank(b.transposed(), ones(6)) == 6);

    const std::vector<Int> sizes = level_sizes(ds);
    std::vector<Rat> weighted;
    for (const Int& s : sizes) weighted.emplace_back(s);
    CHECK(krylov_rank(b.transposed(), weighted) == 5);
}

TEST_CASE("main count: stars and the three-level two-main family") {
    CHECK(main_count_divisor(divisor_matrix(DegreeSequence({3}))) == 2);
    CHECK(main_count_divisor(divisor_matrix(DegreeSequence({9}))) == 2);
    CHECK(main_count_divisor(divisor_matrix(DegreeSequence({3, 2}))) == 2);
    CHECK(main_count_divisor(divisor_matrix(DegreeSequence({7, 3}))) == 2);
}

TEST_CASE("main count of the 6-level counterexample divisor is 5") {
    CHECK(main_count_divisor(divisor_matrix(counterexample_degrees(6))) == 5);
}

TEST_CASE("main count stays at or below k-1 across the counterexample family") {
    for (int k = 6; k <= 40; k += 2) {
        const int count = main_count_divisor(divisor_matrix(counterexample_degrees(k)));
        CHECK(count <= k - 1);
        CHECK(count >= 1);
    }
}

TEST_CASE("main count input validation") {
    IntMatrix full(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) full(i, j) = 1;
    CHECK_THROWS_AS(main_count_divisor(full), std::invalid_argument);

    IntMatrix zero_offdiag(2, 2);
    zero_offdiag(0, 1) = 0;
    zero_offdiag(1, 0) = 1;
    CHECK_THROWS_AS(main_count_divisor(zero_offdiag), std::invalid_argument);
}

TEST_CASE("main count is at least 1 for random divisors") {
    std::mt19937 rng(515);
    for (int trial = 0; trial < 20; ++trial) {
        const DegreeSequence ds = oracle::random_degree_sequence(rng, 7, 6);
        const int count = main_count_divisor(divisor_matrix(ds));
        CHECK(count >= 1);
        CHECK(count <= ds.levels());
    }
}

TEST_CASE("tridiagonal charpoly: star") {
    CHECK(charpoly_tridiagonal(divisor_matrix(DegreeSequence({3}))) == int_poly({-3, 0, 1}));
}

TEST_CASE("tridiagonal charpoly of the k=6 counterexample divisor") {
    const Poly p = charpoly_tridiagonal(divisor_matrix(counterexample_degrees(6)));
    CHECK(p == int_poly({-20, 0, 45, 0, -14, 0, 1}));
    CHECK(p(Rat(-2)) == 0);
    CHECK(p(Rat(2)) == 0);
    CHECK(p.is_monic());
}

TEST_CASE("tridiagonal charpoly agrees with Laplace expansion") {
    std::mt19937 rng(88172);
    for (int trial = 0; trial < 12; ++trial) {
        const DegreeSequence ds = oracle::random_degree_sequence(rng, 8, 5);
        const IntMatrix b = divisor_matrix(ds);
        CHECK(charpoly_tridiagonal(b) == oracle::charpoly_laplace(b));
    }
}

TEST_CASE("tridiagonal charpoly rejects nonzero diagonals and non-tridiagonal input") {
    IntMatrix diag(2, 2);
    diag(0, 0) = 1;
    diag(0, 1) = 1;
    diag(1, 0) = 1;
    CHECK_THROWS_AS(charpoly_tridiagonal(diag), std::invalid_argument);
    IntMatrix wide(4, 4);
    wide(0, 3) = 1;
    CHECK_THROWS_AS(charpoly_tridiagonal(wide), std::invalid_argument);
}

TEST_CASE("tree charpoly of small closed forms") {
    CHECK(charpoly_tree(DegreeSequence({3})) == int_poly({0, 0, -3, 0, 1}));  // x^4 - 3x^2
    CHECK(charpoly_tree(DegreeSequence({2})) == int_poly({0, -2, 0, 1}));     // x^3 - 2x
}

TEST_CASE("tree charpoly matches dense Faddeev-LeVerrier on the figure-1 tree") {
    const DegreeSequence ds({3, 3, 2});
    const Poly by_levels = charpoly_tree(ds);
    CHECK(by_levels.degree() == 16);
    const Poly dense = oracle::charpoly_faddeev(dense_rational_adjacency(build_tree(ds)));
    CHECK(by_levels == dense);
}

TEST_CASE("tree charpoly has degree n and zero trace coefficient") {
    std::mt19937 rng(3301);
    int checked = 0;
    while (checked < 10) {
        const DegreeSequence ds = oracle::random_degree_sequence(rng, 5, 4);
        Int n(0);
        for (const Int& s : level_sizes(ds)) n += s;
        if (n > 300) continue;
        ++checked;
        const Poly p = charpoly_tree(ds);
        CHECK(p.degree() == static_cast<int>(n.get_si()));
        CHECK(p.is_monic());
        CHECK(p.coefficient(static_cast<std::size_t>(p.degree()) - 1) == 0);
        CHECK(poly_divides(charpoly_tridiagonal(divisor_matrix(ds)), p));
    }
}

TEST_CASE("divisor charpoly divides the tree charpoly for the counterexample") {
    const DegreeSequence ds = counterexample_degrees(6);
    CHECK(poly_divides(charpoly_tridiagonal(divisor_matrix(ds)), charpoly_tree(ds)));
}

TEST_CASE("tree charpoly honors the vertex cap") {
    CHECK_THROWS_AS(charpoly_tree(DegreeSequence({5, 3, 5, 3, 2}), 100), std::length_error);
}

TEST_CASE("xi vector values") {
    CHECK(xi_vector(6) == std::vector<Int>{1, -2, -1, 6, -8, 4});
    CHECK(xi_vector(8) == std::vector<Int>{1, -2, -1, 10, -16, 12, -8, 4});
    CHECK_THROWS_AS(xi_vector(5), std::invalid_argument);
    CHECK_THROWS_AS(xi_vector(7), std::invalid_argument);
    CHECK_THROWS_AS(xi_vector(4), std::invalid_argument);
}

TEST_CASE("xi entries sum to zero and the tail alternates in sign") {
    for (int k = 6; k <= 40; k += 2) {
        const std::vector<Int> xi = xi_vector(k);
        REQUIRE(xi.size() == static_cast<std::size_t>(k));
        Int sum(0);
        for (const Int& entry : xi) sum += entry;
        CHECK(sum == 0);
        for (std::size_t i = 4; i < xi.size(); ++i) CHECK(sign(xi[i]) == -sign(xi[i - 1]));
        CHECK(xi.back() == 4);
        CHECK(xi[xi.size() - 2] == -8);
    }
}

TEST_CASE("xi identity holds for the whole family") {
    for (int k = 6; k <= 40; k += 2) {
        const XiIdentityReport report = verify_xi_identity(k);
        CHECK(report.eigen_ok);
        CHECK(report.orthogonal_ok);
        CHECK(report.pass());
    }
    CHECK_THROWS_AS(verify_xi_identity(7), std::invalid_argument);
}

TEST_CASE("a tampered xi vector is not an eigenvector") {
    const IntMatrix b = divisor_matrix(counterexample_degrees(6));
    std::vector<Int> xi = xi_vector(6);
    CHECK(is_transpose_eigenpair(b, xi, Int(-2)));
    xi.back() = 5;
    CHECK_FALSE(is_transpose_eigenpair(b, xi, Int(-2)));
    // changing xi_6 first breaks row 5: (B^T xi)_5 = 2 xi_4 + xi_6
    CHECK(first_eigenpair_violation(b, xi, Int(-2)) == 5);
}

}  // TEST_SUITE
