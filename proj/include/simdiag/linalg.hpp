#pragma once

#include <cstddef>
#include <vector>

#include "simdiag/matrix.hpp"

namespace simdiag {

/// Singular values in descending order.
RealVector singular_values(const ComplexMatrix& m);

/// Number of singular values above rank_rel_tol * max(rows, cols) * sigma_max.
/// The zero matrix has rank 0.
std::size_t numerical_rank(const ComplexMatrix& m, const ToleranceConfig& cfg);

/// Same threshold rule, but measured against `reference_scale` instead of the
/// largest singular value of `m` itself. Used for shifted matrices M - mu*I,
/// whose own sigma_max can be pure rounding noise.
std::size_t numerical_rank(const ComplexMatrix& m, const ToleranceConfig& cfg,
                           double reference_scale);

/// Orthonormal basis (columns) of the numerical kernel of `m`.
/// Column count = cols - numerical_rank(m).
ComplexMatrix nullspace_basis(const ComplexMatrix& m, const ToleranceConfig& cfg);

/// A group of numerically coincident eigenvalues.
struct EigenCluster {
    Complex center;                    // mean of the members
    std::vector<std::size_t> members;  // indices into EigResult::values
    bool defective = false;
};

struct EigResult {
    ComplexVector values;   // sorted by (Re, Im)
    ComplexMatrix vectors;  // unit columns, column i pairs with values(i)
    bool defect_flag = false;
    std::vector<EigenCluster> clusters;  // ordered by center, (Re, Im)
};

/// Eigendecomposition with per-cluster defect detection.
///
/// Eigenvalues are grouped by union-find: two values merge when their
/// distance is below eig_cluster_tol * max(1, |M|), widened by the
/// first-order perturbation radius (kappa_i + kappa_j) * rank_rel_tol * max(1, |M|)
/// where kappa is the eigenvalue condition number. The widening catches
/// rounding-split Jordan blocks, whose computed eigenvalues spread by about
/// eps^(1/k) for a block of size k.
///
/// A cluster of size k around mean mu is defective iff
/// numerical_rank(M - mu I) > n - k, measured against the scale of M.
///
/// Throws std::invalid_argument for non-square input.
EigResult eig(const ComplexMatrix& m, const ToleranceConfig& cfg);

struct TakagiResult {
    ComplexMatrix V;  // unitary
    RealVector d;     // nonnegative, descending; V^T C V = diag(d)
};

/// Takagi factorization of a complex symmetric matrix: V^T C V = diag(d).
///
/// Built from the SVD C = U S W^H. Singular values are grouped into clusters
/// of near-equal values; on each cluster the symmetric block
/// G = U_c^H C conj(U_c) is re-factored exactly (a phase for 1x1 blocks, the
/// real symmetric embedding [[Re G, Im G], [Im G, -Re G]] otherwise). The
/// numerically-zero cluster keeps U_c unchanged.
///
/// Throws std::invalid_argument if C is not square or not symmetric within
/// residual_tol.
TakagiResult takagi(const ComplexMatrix& c, const ToleranceConfig& cfg);

}  // namespace simdiag
