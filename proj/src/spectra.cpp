#include "gbt/spectra.hpp"

#include <cmath>
#include <stdexcept>

namespace gbt {

namespace {

void require_size(const Eigen::MatrixXd& a, std::int64_t cap, const char* who) {
    if (a.rows() != a.cols()) throw std::invalid_argument(std::string(who) + ": matrix not square");
    if (a.rows() > cap)
        throw std::length_error(std::string(who) + ": matrix order " + std::to_string(a.rows()) +
                                " above the cap of " + std::to_string(cap));
}

}  // namespace

EigenDecomposition symmetric_eigen(const Eigen::MatrixXd& a, double tol_resid, std::int64_t cap) {
    require_size(a, cap, "symmetric_eigen");
    if (a.size() > 0 && (a - a.transpose()).cwiseAbs().maxCoeff() != 0.0)
        throw std::invalid_argument("symmetric_eigen: input matrix is not symmetric");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric_eigen: eigensolver failed to converge");

    EigenDecomposition dec{solver.eigenvalues(), solver.eigenvectors()};

    const std::int64_t n = a.rows();
    const double norm_a = n > 0 ? dec.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double resid =
            (a * dec.eigenvectors.col(i) - dec.eigenvalues(i) * dec.eigenvectors.col(i)).norm();
        if (resid > tol_resid * norm_a)
            throw std::runtime_error("symmetric_eigen: residual " + std::to_string(resid) +
                                     " exceeds tolerance for eigenpair " + std::to_string(i));
    }
    if (n > 0) {
        const double orth = (dec.eigenvectors.transpose() * dec.eigenvectors -
                             Eigen::MatrixXd::Identity(n, n))
                                .cwiseAbs()
                                .maxCoeff();
        if (orth > kTolOrth)
            throw std::runtime_error("symmetric_eigen: eigenvectors not orthonormal, deviation " +
                                     std::to_string(orth));
    }
    return dec;
}

std::vector<double> MainSpectrumReport::main_values() const {
    std::vector<double> values;
    for (const auto& cluster : clusters)
        if (cluster.is_main) values.push_back(cluster.value);
    return values;
}

MainSpectrumReport main_spectrum_numeric(const Eigen::MatrixXd& a, double tol_cluster,
                                         double tol_main, double tol_resid, std::int64_t cap) {
    const EigenDecomposition dec = symmetric_eigen(a, tol_resid, cap);
    const std::int64_t n = a.rows();
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    const double threshold = tol_main * std::sqrt(static_cast<double>(n));

    MainSpectrumReport report;
    report.method = "numeric";
    report.n = n;

    std::int64_t start = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
        if (i < n && dec.eigenvalues(i) - dec.eigenvalues(i - 1) <= tol_cluster) continue;
        SpectralCluster cluster;
        cluster.multiplicity = static_cast<int>(i - start);
        cluster.value = dec.eigenvalues.segment(start, i - start).mean();
        // eigenvectors are orthonormal, so ||P e|| = ||V_cluster^T e||
        cluster.projection_norm = (dec.eigenvectors.middleCols(start, i - start).transpose() * ones).norm();
        cluster.is_main = cluster.projection_norm > threshold;
        const double ratio = cluster.projection_norm / threshold;
        cluster.borderline = ratio >= 0.1 && ratio <= 10.0;
        if (cluster.is_main) ++report.main_count;
        report.clusters.push_back(cluster);
        start = i;
    }
    return report;
}

int walk_matrix_rank(const Eigen::MatrixXd& a, double tol_rank, std::int64_t cap) {
    require_size(a, cap, "walk_matrix_rank");
    const std::int64_t n = a.rows();
    if (n == 0) return 0;

    Eigen::MatrixXd walk(n, n);
    Eigen::VectorXd column = Eigen::VectorXd::Ones(n);
    for (std::int64_t j = 0; j < n; ++j) {
        const double norm = column.norm();
        if (norm == 0.0) {
            walk.rightCols(n - j).setZero();
            break;
        }
        walk.col(j) = column / norm;
        column = a * walk.col(j);
    }

    Eigen::BDCSVD<Eigen::MatrixXd> svd(walk);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol_rank * sv(0)) ++rank;
    return rank;
}

Eigen::MatrixXd dense_adjacency(const BetheTree& tree, std::int64_t cap) {
    if (tree.vertex_count() > cap)
        throw std::length_error("dense adjacency: tree order " +
                                std::to_string(tree.vertex_count()) + " above the cap of " +
                                std::to_string(cap));
    const std::int64_t n = tree.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : tree.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

}  // namespace gbt
