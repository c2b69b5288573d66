#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "simdiag/matrix.hpp"
#include "simdiag/pencil.hpp"
#include "simdiag/reduction.hpp"

namespace simdiag {

/// L_j = A~(lambda0)^{-1} A~_j on the reduced r-dimensional problem.
/// Satisfies sum_j lambda0_j L_j = I_r.
struct ReducedFamily {
    std::vector<ComplexMatrix> L;
    ComplexVector lambda0;

    std::size_t size() const { return L.empty() ? 0 : static_cast<std::size_t>(L.front().rows()); }
};

/// Solves A~(lambda0) L_j = A~_j by LU. Throws std::domain_error if
/// A~(lambda0) is numerically singular (witness and tolerances disagree).
ReducedFamily build_reduced_family(const ReductionResult& rr, const MaxRankWitness& w,
                                   const ToleranceConfig& cfg);

/// First pair (j, k), j < k, 0-based, whose commutator exceeds
/// residual_tol * |L_j|_2 * |L_k|_2 in max-norm; nullopt if all commute.
std::optional<std::pair<std::size_t, std::size_t>> pairwise_commute(const ReducedFamily& f,
                                                                    const ToleranceConfig& cfg);

enum class SdsVerdict { SDS, NonCommuting, Defective };

struct SdsResult {
    SdsVerdict verdict = SdsVerdict::SDS;
    std::pair<std::size_t, std::size_t> noncommuting{0, 0};  // valid for NonCommuting
    std::size_t defective = 0;                               // valid for Defective (0-based)

    /// Joint eigenbasis (unit columns), grouped by joint tuple in
    /// lexicographic (Re, Im) order. Valid for SDS.
    ComplexMatrix P;
    /// diagonals[j](i) is the eigenvalue of L_j on column i of P.
    std::vector<ComplexVector> diagonals;
    /// Sizes of the joint-eigenspace blocks, in column order.
    std::vector<std::size_t> block_sizes;
    /// One tuple per block: tuples[a](j) = eigenvalue of L_j on block a.
    std::vector<ComplexVector> tuples;
};

/// Simultaneous diagonalization by similarity via recursive eigenspace
/// refinement: the space is split by the eigenspaces of L_1, each piece by
/// those of L_2 restricted to it, and so on. A defective restriction stops
/// the refinement with Defective(j).
SdsResult joint_diagonalize(const ReducedFamily& f, const ToleranceConfig& cfg);

}  // namespace simdiag
