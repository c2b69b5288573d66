#include "simdiag/sdc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "simdiag/linalg.hpp"

namespace simdiag {

std::string_view to_string(Verdict v) { return v == Verdict::SDC ? "SDC" : "NotSDC"; }

std::string_view to_string(NotSdcReason r) {
    switch (r) {
        case NotSdcReason::None: return "none";
        case NotSdcReason::KernelDeficit: return "kernel-deficit";
        case NotSdcReason::NonCommuting: return "non-commuting";
        case NotSdcReason::Defective: return "defective";
        case NotSdcReason::NumericalFailure: return "numerical-failure";
    }
    return "unknown";
}

BlockGrouping group_blocks(const SdsResult& sds, const ToleranceConfig& cfg) {
    BlockGrouping g;
    for (std::size_t a = 0; a < sds.block_sizes.size(); ++a) {
        const ComplexVector& t = sds.tuples[a];
        if (!g.tuples.empty()) {
            const ComplexVector& prev = g.tuples.back();
            bool same = true;
            for (Eigen::Index j = 0; j < t.size() && same; ++j) {
                const double tol = cfg.eig_cluster_tol * std::max({1.0, std::abs(t(j)), std::abs(prev(j))});
                same = std::abs(t(j) - prev(j)) <= tol;
            }
            if (same) {
                g.sizes.back() += sds.block_sizes[a];
                continue;
            }
        }
        g.sizes.push_back(sds.block_sizes[a]);
        g.tuples.push_back(t);
    }
    return g;
}

CongruenceTransform assemble_congruence(const ReductionResult& rr, const SdsResult& sds,
                                        const MaxRankWitness& w, const ToleranceConfig& cfg) {
    if (sds.verdict != SdsVerdict::SDS) throw std::invalid_argument("assemble_congruence needs an SDS result");
    const auto n = rr.Q.rows();
    const auto r = static_cast<Eigen::Index>(rr.r);
    const std::size_t m = rr.reduced.size();

    CongruenceTransform out;
    out.grouping = group_blocks(sds, cfg);
    out.diagonals.assign(m, ComplexVector::Zero(n));
    if (r == 0) {
        out.P = rr.Q;
        return out;
    }

    ComplexMatrix pencil = ComplexMatrix::Zero(r, r);
    for (std::size_t j = 0; j < m; ++j) pencil += w.lambda0(static_cast<Eigen::Index>(j)) * rr.reduced[j];
    const ComplexMatrix b = sds.P.transpose() * pencil * sds.P;

    // Off-block part of B(lambda0) vanishes between distinct tuples.
    double off = 0.0;
    Eigen::Index start = 0;
    for (std::size_t a = 0; a < out.grouping.sizes.size(); ++a) {
        const auto k = static_cast<Eigen::Index>(out.grouping.sizes[a]);
        for (Eigen::Index i = start; i < start + k; ++i) {
            for (Eigen::Index c = 0; c < r; ++c) {
                if (c < start || c >= start + k) off = std::max(off, std::abs(b(i, c)));
            }
        }
        start += k;
    }
    const double bmax = max_abs(b);
    out.off_block = bmax > 0.0 ? off / bmax : 0.0;
    if (out.off_block > std::sqrt(cfg.residual_tol)) {
        throw std::domain_error("joint eigenbasis does not block-diagonalize the reduced pencil");
    }

    ComplexMatrix v = ComplexMatrix::Zero(r, r);
    RealVector d(r);
    start = 0;
    for (std::size_t a = 0; a < out.grouping.sizes.size(); ++a) {
        const auto k = static_cast<Eigen::Index>(out.grouping.sizes[a]);
        ComplexMatrix block = b.block(start, start, k, k);
        block = 0.5 * (block + block.transpose()).eval();
        const TakagiResult tk = takagi(block, cfg);
        v.block(start, start, k, k) = tk.V;
        d.segment(start, k) = tk.d;
        for (std::size_t j = 0; j < m; ++j) {
            const Complex alpha = out.grouping.tuples[a](static_cast<Eigen::Index>(j));
            for (Eigen::Index i = 0; i < k; ++i) out.diagonals[j](start + i) = tk.d(i) * alpha;
        }
        start += k;
    }

    const ComplexMatrix pr = sds.P * v;
    ComplexMatrix lift = ComplexMatrix::Identity(n, n);
    lift.topLeftCorner(r, r) = pr;
    out.P = rr.Q * lift;
    return out;
}

VerificationReport verify_certificate(const LinearPencil& p, const ComplexMatrix& P,
                                      const ToleranceConfig& cfg) {
    const auto n = static_cast<Eigen::Index>(p.n());
    if (P.rows() != n || P.cols() != n) throw std::invalid_argument("transform must be n x n");
    VerificationReport rep;
    if (n == 0) {
        rep.pass = true;
        rep.condition = 1.0;
        rep.diagonals.assign(p.m(), ComplexVector(0));
        return rep;
    }
    const RealVector sv = singular_values(P);
    const double smin = sv(sv.size() - 1);
    rep.condition = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
    rep.singular = numerical_rank(P, cfg) < p.n();

    const double scale = std::max(1.0, p.scale());
    double worst = 0.0;
    for (const auto& a : p.matrices()) {
        const ComplexMatrix t = P.transpose() * a * P;
        worst = std::max(worst, max_off_diagonal(t));
        rep.diagonals.push_back(t.diagonal());
    }
    rep.residual = worst / scale;
    rep.pass = !rep.singular && rep.residual <= cfg.residual_tol;
    return rep;
}

namespace {

void check_symmetric(const LinearPencil& p, const ToleranceConfig& cfg) {
    for (std::size_t j = 0; j < p.m(); ++j) {
        if (!is_symmetric(p[j], cfg.residual_tol)) {
            throw std::invalid_argument("matrix " + std::to_string(j + 1) + " is not symmetric");
        }
    }
}

}  // namespace

SdcCertificate decide_sdc(const LinearPencil& p, const ToleranceConfig& cfg) {
    cfg.validate();
    check_symmetric(p, cfg);
    return decide_sdc(p, max_rank_point(p, cfg), cfg);
}

SdcCertificate decide_sdc(const LinearPencil& p, const MaxRankWitness& witness, const ToleranceConfig& cfg) {
    cfg.validate();
    check_symmetric(p, cfg);
    if (static_cast<std::size_t>(witness.lambda0.size()) != p.m()) {
        throw std::invalid_argument("witness length does not match the family size");
    }
    if (numerical_rank(p.evaluate(witness.lambda0), cfg) != witness.r) {
        throw std::invalid_argument("witness rank does not match A(lambda0)");
    }

    SdcCertificate cert;
    cert.n = p.n();
    cert.m = p.m();
    cert.witness = witness;
    if (cert.witness.singular_values.size() == 0) {
        cert.witness.singular_values = singular_values(p.evaluate(witness.lambda0));
    }
    const auto& w = cert.witness;
    const auto r = static_cast<Eigen::Index>(w.r);
    if (w.singular_values.size() > 0) {
        cert.diagnostics.sigma_r = r > 0 ? w.singular_values(r - 1) : 0.0;
        cert.diagnostics.sigma_r_next = r < w.singular_values.size() ? w.singular_values(r) : 0.0;
    }
    cert.expected_kernel_dim = p.n() - w.r;

    const ReductionOutcome outcome = reduce(p, w, cfg);
    if (const auto* deficit = std::get_if<KernelDeficit>(&outcome)) {
        cert.reason = NotSdcReason::KernelDeficit;
        cert.kernel_dim = deficit->dim;
        return cert;
    }
    const auto& rr = std::get<ReductionResult>(outcome);
    cert.kernel_dim = rr.measured_kernel_dim;
    cert.diagnostics.reduction_off_block = rr.off_block;
    cert.diagnostics.kernel_excess = rr.kernel_excess;

    try {
        const ReducedFamily family = build_reduced_family(rr, w, cfg);
        const SdsResult sds = joint_diagonalize(family, cfg);
        if (sds.verdict == SdsVerdict::NonCommuting) {
            cert.reason = NotSdcReason::NonCommuting;
            cert.noncommuting = sds.noncommuting;
            return cert;
        }
        if (sds.verdict == SdsVerdict::Defective) {
            cert.reason = NotSdcReason::Defective;
            cert.defective = sds.defective;
            return cert;
        }

        CongruenceTransform ct = assemble_congruence(rr, sds, w, cfg);
        cert.diagnostics.block_off_diagonal = ct.off_block;
        const VerificationReport rep = verify_certificate(p, ct.P, cfg);
        cert.residual = rep.residual;
        cert.diagnostics.condition = rep.condition;
        if (!rep.pass) {
            cert.reason = NotSdcReason::NumericalFailure;
            cert.diagnostics.note = rep.singular ? "assembled transform is singular"
                                                 : "assembled transform exceeds residual tolerance";
            return cert;
        }
        cert.verdict = Verdict::SDC;
        cert.P = std::move(ct.P);
        cert.diagonals = std::move(ct.diagonals);
        cert.grouping = std::move(ct.grouping);
        cert.diagnostics.marginal = cert.residual > cfg.residual_tol / 10.0;
    } catch (const std::domain_error& e) {
        cert.reason = NotSdcReason::NumericalFailure;
        cert.diagnostics.note = e.what();
    }
    return cert;
}

}  // namespace simdiag
