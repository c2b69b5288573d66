#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simdiag/matrix.hpp"
#include "simdiag/pencil.hpp"
#include "simdiag/reduction.hpp"
#include "simdiag/sds.hpp"

namespace simdiag {

enum class Verdict { SDC, NotSDC };

enum class NotSdcReason {
    None,
    KernelDeficit,     // dim of the common kernel < n - r
    NonCommuting,      // some L_j, L_k do not commute
    Defective,         // some L_j is not diagonalizable
    NumericalFailure,  // all tests passed but the assembled transform failed verification
};

std::string_view to_string(Verdict v);
std::string_view to_string(NotSdcReason r);

/// Joint-eigenvalue blocks p_1..p_d of the reduced problem. Distinct blocks
/// differ in at least one tuple entry.
struct BlockGrouping {
    std::vector<std::size_t> sizes;
    std::vector<ComplexVector> tuples;  // tuples[a](j) = alpha_a^(j)
};

/// Adjacent SDS blocks whose tuples agree within eig_cluster_tol are merged.
BlockGrouping group_blocks(const SdsResult& sds, const ToleranceConfig& cfg);

struct CongruenceTransform {
    ComplexMatrix P;                       // n x n
    std::vector<ComplexVector> diagonals;  // m vectors of length n, trailing n - r zeros
    BlockGrouping grouping;
    /// Largest entry of P_sds^T A~(lambda0) P_sds outside the tuple blocks,
    /// relative to its largest entry.
    double off_block = 0.0;
};

/// Builds P = Q (P_sds V (+) I_{n-r}) where V is the direct sum of Takagi
/// factors of the diagonal blocks C_a of P_sds^T A~(lambda0) P_sds.
/// Throws std::domain_error if the off-block part of that matrix exceeds
/// sqrt(residual_tol), or std::invalid_argument if sds is not SDS.
CongruenceTransform assemble_congruence(const ReductionResult& rr, const SdsResult& sds,
                                        const MaxRankWitness& w, const ToleranceConfig& cfg);

struct VerificationReport {
    bool pass = false;
    bool singular = false;
    double residual = 0.0;   // max_j max_{k != l} |(P^T A_j P)_kl| / max(1, max_j |A_j|_2)
    double condition = 0.0;  // sigma_max(P) / sigma_min(P), +inf when singular
    std::vector<ComplexVector> diagonals;  // diag(P^T A_j P)
};

/// Throws std::invalid_argument if P is not n x n.
VerificationReport verify_certificate(const LinearPencil& p, const ComplexMatrix& P,
                                      const ToleranceConfig& cfg);

struct SdcDiagnostics {
    double sigma_r = 0.0;        // smallest retained singular value of A(lambda0)
    double sigma_r_next = 0.0;   // largest discarded one, 0 if r = n
    double reduction_off_block = 0.0;
    bool kernel_excess = false;  // measured common kernel exceeded n - r
    double block_off_diagonal = 0.0;
    double condition = 0.0;
    bool marginal = false;       // passing residual within a factor 10 of residual_tol
    std::string note;
};

struct SdcCertificate {
    Verdict verdict = Verdict::NotSDC;
    NotSdcReason reason = NotSdcReason::None;
    std::size_t n = 0;
    std::size_t m = 0;
    MaxRankWitness witness;

    std::size_t kernel_dim = 0;           // measured dim of the common kernel
    std::size_t expected_kernel_dim = 0;  // n - r
    std::pair<std::size_t, std::size_t> noncommuting{0, 0};  // 0-based
    std::size_t defective = 0;                               // 0-based

    ComplexMatrix P;                       // valid on SDC
    std::vector<ComplexVector> diagonals;  // valid on SDC
    BlockGrouping grouping;
    double residual = 0.0;
    SdcDiagnostics diagnostics;
};

/// The full decision procedure: maximum pencil rank, kernel test and
/// reduction, reduced family, joint diagonalization, assembly and
/// verification. SDC is only returned together with a verified P.
/// Throws std::invalid_argument if any A_j is not symmetric within residual_tol.
SdcCertificate decide_sdc(const LinearPencil& p, const ToleranceConfig& cfg);

/// Same procedure from a caller-chosen witness. `w.r` must be the maximum
/// pencil rank; throws std::invalid_argument if A(w.lambda0) does not have
/// numerical rank w.r.
SdcCertificate decide_sdc(const LinearPencil& p, const MaxRankWitness& w, const ToleranceConfig& cfg);

}  // namespace simdiag
