#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace simdiag {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by every stage of the pipeline.
///
/// All tolerances are relative. `rank_rel_tol` scales the largest singular
/// value, `eig_cluster_tol` scales max(1, |M|) when grouping eigenvalues and
/// `residual_tol` bounds every reported residual.
struct ToleranceConfig {
    double rank_rel_tol = 1e-10;
    double eig_cluster_tol = 1e-8;
    double residual_tol = 1e-8;
    int max_rank_samples = 32;
    std::uint64_t rng_seed = 0;

    /// Throws std::invalid_argument if any tolerance is not strictly positive
    /// or max_rank_samples < 1.
    void validate() const;
};

/// Largest entry magnitude.
double max_abs(const ComplexMatrix& m);

/// Spectral norm (largest singular value). Zero for empty matrices.
double norm2(const ComplexMatrix& m);

/// M == M^T entrywise (plain transpose) within tol * max(1, |M|_max).
bool is_symmetric(const ComplexMatrix& m, double tol);

/// |conj(U)^T U - I|_max <= tol.
bool is_unitary(const ComplexMatrix& u, double tol);

/// |U^T U - I|_max <= tol.
bool is_orthogonal(const ComplexMatrix& u, double tol);

/// Block-diagonal direct sum a (+) b.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest off-diagonal magnitude of a square matrix.
double max_off_diagonal(const ComplexMatrix& m);

}  // namespace simdiag
