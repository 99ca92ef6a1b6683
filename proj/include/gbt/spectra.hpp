#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "gbt/tree.hpp"

namespace gbt {

inline constexpr double kTolResid = 1e-10;
inline constexpr double kTolOrth = 1e-10;
inline constexpr double kTolCluster = 1e-7;
inline constexpr double kTolMain = 1e-8;
inline constexpr double kTolRank = 1e-8;
inline constexpr std::int64_t kDefaultEigenCap = 2000;

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // column i pairs with eigenvalue i, orthonormal
};

// Full symmetric eigendecomposition. Validates the residual bound
// ||Av - lambda v|| <= tol_resid * ||A||_2 per pair and orthonormality of the
// eigenvector matrix; rejects asymmetric input and oversized matrices.
EigenDecomposition symmetric_eigen(const Eigen::MatrixXd& a, double tol_resid = kTolResid,
                                   std::int64_t cap = kDefaultEigenCap);

struct SpectralCluster {
    double value = 0.0;            // mean of the clustered eigenvalues
    int multiplicity = 0;
    double projection_norm = 0.0;  // ||P_lambda e_n||_2
    bool is_main = false;
    bool borderline = false;       // projection within 10x of the decision threshold
};

struct MainSpectrumReport {
    std::string method;  // "numeric" or "exact"
    std::int64_t n = 0;
    std::vector<SpectralCluster> clusters;
    int main_count = 0;

    std::vector<double> main_values() const;
};

// Groups eigenvalues into clusters (consecutive gap <= tol_cluster), computes
// the projection of the all-ones vector onto each cluster's eigenspace and
// flags clusters with projection_norm > tol_main * sqrt(n) as main.
MainSpectrumReport main_spectrum_numeric(const Eigen::MatrixXd& a, double tol_cluster = kTolCluster,
                                         double tol_main = kTolMain, double tol_resid = kTolResid,
                                         std::int64_t cap = kDefaultEigenCap);

// Numerical rank of the walk matrix [e, Ae, ..., A^{n-1}e], columns
// normalized before assembly; singular values above tol_rank times the
// largest count toward the rank.
int walk_matrix_rank(const Eigen::MatrixXd& a, double tol_rank = kTolRank,
                     std::int64_t cap = kDefaultEigenCap);

Eigen::MatrixXd dense_adjacency(const BetheTree& tree, std::int64_t cap = kDefaultEigenCap);

}  // namespace gbt
