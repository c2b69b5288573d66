#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "simdiag/matrix.hpp"
#include "simdiag/pencil.hpp"

namespace simdiag {

/// Orthonormal basis of the common kernel of all A_j, computed as the
/// nullspace of the (m n) x n vertical stack [A_1; ...; A_m].
ComplexMatrix kernel_intersection(const LinearPencil& p, const ToleranceConfig& cfg);

/// Q^T A_j Q = reduced_j (+) 0_{n-r} with Q unitary, kernel columns last.
struct ReductionResult {
    ComplexMatrix Q;
    std::vector<ComplexMatrix> reduced;  // m symmetric r x r blocks
    ComplexMatrix kernel_basis;          // n x (n - r)
    std::size_t r = 0;
    /// Largest discarded entry outside the leading r x r block, over all j.
    double off_block = 0.0;
    /// The measured common kernel was larger than n - r (rank tolerance
    /// inconsistency); only the n - r most-null directions were kept.
    bool kernel_excess = false;
    std::size_t measured_kernel_dim = 0;
};

/// Common kernel smaller than n - r: the family is not SDC.
struct KernelDeficit {
    std::size_t dim = 0;       // measured dim of the common kernel
    std::size_t expected = 0;  // n - r
};

using ReductionOutcome = std::variant<ReductionResult, KernelDeficit>;

/// Kernel-dimension test followed by the block reduction.
/// Throws std::invalid_argument if the witness does not fit the pencil.
ReductionOutcome reduce(const LinearPencil& p, const MaxRankWitness& w, const ToleranceConfig& cfg);

}  // namespace simdiag
