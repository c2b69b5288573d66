#pragma once

#include <cstddef>
#include <vector>

#include "simdiag/matrix.hpp"

namespace simdiag {

/// The family {A_1, ..., A_m} of n x n complex symmetric matrices and its
/// linear pencil lambda -> sum_j lambda_j A_j.
class LinearPencil {
public:
    /// Throws std::invalid_argument if the family is empty, the members are
    /// not all square of one size, or any member is not symmetric within
    /// `symmetry_tol` (relative to max(1, |A_j|_max)).
    explicit LinearPencil(std::vector<ComplexMatrix> matrices, double symmetry_tol = 1e-8);

    std::size_t n() const { return n_; }
    std::size_t m() const { return matrices_.size(); }
    const std::vector<ComplexMatrix>& matrices() const { return matrices_; }
    const ComplexMatrix& operator[](std::size_t j) const { return matrices_[j]; }

    /// sum_j lambda_j A_j. Throws std::invalid_argument on a length mismatch.
    ComplexMatrix evaluate(const ComplexVector& lambda) const;

    /// max_j |A_j|_2
    double scale() const;

private:
    std::size_t n_ = 0;
    std::vector<ComplexMatrix> matrices_;
};

/// Maximum pencil rank r and a unit-norm point lambda0 attaining it.
struct MaxRankWitness {
    std::size_t r = 0;
    ComplexVector lambda0;
    /// Singular values of A(lambda0), descending; sigma_r / sigma_{r+1}
    /// is the rank gap reported in diagnostics.
    RealVector singular_values;
    /// Index into the candidate list (0..m-1 basis vectors, m the all-ones
    /// vector, m+1.. random draws).
    std::size_t candidate_index = 0;
};

/// Ordered candidate points: the m standard basis vectors, the all-ones
/// vector, then cfg.max_rank_samples seeded complex Gaussian draws. All are
/// normalized to unit Euclidean norm.
std::vector<ComplexVector> rank_candidates(std::size_t m, const ToleranceConfig& cfg);

/// Maximum numerical rank of A(lambda) over rank_candidates(); ties go to
/// the earliest candidate.
MaxRankWitness max_rank_point(const LinearPencil& p, const ToleranceConfig& cfg);

}  // namespace simdiag
