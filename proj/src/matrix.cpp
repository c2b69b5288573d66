#include "simdiag/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace simdiag {

void ToleranceConfig::validate() const {
    if (!(rank_rel_tol > 0.0) || !(eig_cluster_tol > 0.0) || !(residual_tol > 0.0)) {
        throw std::invalid_argument("tolerances must be strictly positive");
    }
    if (max_rank_samples < 1) {
        throw std::invalid_argument("max_rank_samples must be at least 1");
    }
}

double max_abs(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().maxCoeff();
}

double norm2(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

bool is_symmetric(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    if (m.size() == 0) return true;
    return max_abs(m - m.transpose()) <= tol * std::max(1.0, max_abs(m));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    const auto n = u.rows();
    return max_abs(u.adjoint() * u - ComplexMatrix::Identity(n, n)) <= tol;
}

bool is_orthogonal(const ComplexMatrix& u, double tol) {
    if (u.rows() != u.cols()) return false;
    const auto n = u.rows();
    return max_abs(u.transpose() * u - ComplexMatrix::Identity(n, n)) <= tol;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

double max_off_diagonal(const ComplexMatrix& m) {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (i != j) worst = std::max(worst, std::abs(m(i, j)));
        }
    }
    return worst;
}

}  // namespace simdiag
