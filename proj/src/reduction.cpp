#include "simdiag/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "simdiag/linalg.hpp"

namespace simdiag {

namespace {

ComplexMatrix stack(const LinearPencil& p) {
    const auto n = static_cast<Eigen::Index>(p.n());
    ComplexMatrix s(n * static_cast<Eigen::Index>(p.m()), n);
    for (std::size_t j = 0; j < p.m(); ++j) s.middleRows(static_cast<Eigen::Index>(j) * n, n) = p[j];
    return s;
}

// Unitary Q whose trailing k columns are `kernel` (orthonormal) and whose
// leading columns complete it via Householder QR.
ComplexMatrix complete_basis(const ComplexMatrix& kernel, Eigen::Index n) {
    const Eigen::Index k = kernel.cols();
    if (k == 0) return ComplexMatrix::Identity(n, n);
    if (k == n) return kernel;
    Eigen::HouseholderQR<ComplexMatrix> qr(kernel);
    const ComplexMatrix full = qr.householderQ() * ComplexMatrix::Identity(n, n);
    ComplexMatrix q(n, n);
    q.leftCols(n - k) = full.rightCols(n - k);
    q.rightCols(k) = kernel;
    return q;
}

}  // namespace

ComplexMatrix kernel_intersection(const LinearPencil& p, const ToleranceConfig& cfg) {
    return nullspace_basis(stack(p), cfg);
}

ReductionOutcome reduce(const LinearPencil& p, const MaxRankWitness& w, const ToleranceConfig& cfg) {
    if (static_cast<std::size_t>(w.lambda0.size()) != p.m() || w.r > p.n()) {
        throw std::invalid_argument("witness does not match the pencil dimensions");
    }
    const auto n = static_cast<Eigen::Index>(p.n());
    const auto r = static_cast<Eigen::Index>(w.r);
    ComplexMatrix kernel = kernel_intersection(p, cfg);
    const auto measured = static_cast<std::size_t>(kernel.cols());
    const std::size_t expected = p.n() - w.r;
    if (measured < expected) return KernelDeficit{measured, expected};

    ReductionResult out;
    out.r = w.r;
    out.measured_kernel_dim = measured;
    if (measured > expected) {
        // Nullspace columns come in ascending singular-value order from the
        // right, so the last ones are the most null.
        out.kernel_excess = true;
        kernel = kernel.rightCols(static_cast<Eigen::Index>(expected)).eval();
    }
    if (w.r == 0) {
        // Whole space is kernel; identity is the natural choice.
        kernel = ComplexMatrix::Identity(n, n);
    }
    out.kernel_basis = kernel;
    out.Q = complete_basis(kernel, n);
    out.reduced.reserve(p.m());
    for (std::size_t j = 0; j < p.m(); ++j) {
        const ComplexMatrix full = out.Q.transpose() * p[j] * out.Q;
        ComplexMatrix block = full.topLeftCorner(r, r);
        block = 0.5 * (block + block.transpose()).eval();
        if (r < n) {
            out.off_block = std::max(out.off_block, max_abs(full.rightCols(n - r)));
            out.off_block = std::max(out.off_block, max_abs(full.bottomRows(n - r)));
        }
        out.reduced.push_back(std::move(block));
    }
    return out;
}

}  // namespace simdiag
