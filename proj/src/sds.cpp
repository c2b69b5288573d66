#include "simdiag/sds.hpp"

#include <algorithm>
#include <stdexcept>

#include "simdiag/linalg.hpp"

namespace simdiag {

namespace {

struct Piece {
    ComplexMatrix basis;  // orthonormal columns spanning a common invariant subspace
    std::vector<Complex> tuple;
};

// Orthonormal basis of the eigenspace of `m` for the cluster centered at mu
// with multiplicity k: the k least-significant right singular vectors of
// m - mu I.
ComplexMatrix cluster_eigenspace(const ComplexMatrix& m, Complex mu, Eigen::Index k) {
    const ComplexMatrix shifted = m - mu * ComplexMatrix::Identity(m.rows(), m.cols());
    Eigen::JacobiSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullV);
    return svd.matrixV().rightCols(k);
}

}  // namespace

ReducedFamily build_reduced_family(const ReductionResult& rr, const MaxRankWitness& w,
                                   const ToleranceConfig& cfg) {
    if (static_cast<std::size_t>(w.lambda0.size()) != rr.reduced.size()) {
        throw std::invalid_argument("witness length does not match the family size");
    }
    ReducedFamily f;
    f.lambda0 = w.lambda0;
    const auto r = static_cast<Eigen::Index>(rr.r);
    if (r == 0) {
        f.L.assign(rr.reduced.size(), ComplexMatrix(0, 0));
        return f;
    }
    ComplexMatrix pencil = ComplexMatrix::Zero(r, r);
    for (std::size_t j = 0; j < rr.reduced.size(); ++j) {
        pencil += w.lambda0(static_cast<Eigen::Index>(j)) * rr.reduced[j];
    }
    if (numerical_rank(pencil, cfg) != rr.r) {
        throw std::domain_error("reduced pencil is numerically singular at the witness point");
    }
    Eigen::PartialPivLU<ComplexMatrix> lu(pencil);
    f.L.reserve(rr.reduced.size());
    for (const auto& a : rr.reduced) f.L.push_back(lu.solve(a));
    return f;
}

std::optional<std::pair<std::size_t, std::size_t>> pairwise_commute(const ReducedFamily& f,
                                                                    const ToleranceConfig& cfg) {
    std::vector<double> norms;
    norms.reserve(f.L.size());
    for (const auto& l : f.L) norms.push_back(norm2(l));
    for (std::size_t j = 0; j < f.L.size(); ++j) {
        for (std::size_t k = j + 1; k < f.L.size(); ++k) {
            const ComplexMatrix comm = f.L[j] * f.L[k] - f.L[k] * f.L[j];
            if (max_abs(comm) > cfg.residual_tol * norms[j] * norms[k]) return std::make_pair(j, k);
        }
    }
    return std::nullopt;
}

SdsResult joint_diagonalize(const ReducedFamily& f, const ToleranceConfig& cfg) {
    SdsResult out;
    const auto r = static_cast<Eigen::Index>(f.size());
    const std::size_t m = f.L.size();
    if (r == 0 || m == 0) {
        out.P = ComplexMatrix(r, r);
        out.diagonals.assign(m, ComplexVector(0));
        return out;
    }
    if (auto pair = pairwise_commute(f, cfg)) {
        out.verdict = SdsVerdict::NonCommuting;
        out.noncommuting = *pair;
        return out;
    }

    std::vector<Piece> pieces{{ComplexMatrix::Identity(r, r), {}}};
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Piece> next;
        for (const auto& piece : pieces) {
            const ComplexMatrix restricted = piece.basis.adjoint() * f.L[j] * piece.basis;
            const EigResult er = eig(restricted, cfg);
            if (er.defect_flag) {
                out.verdict = SdsVerdict::Defective;
                out.defective = j;
                return out;
            }
            for (const auto& cl : er.clusters) {
                Piece child;
                child.tuple = piece.tuple;
                child.tuple.push_back(cl.center);
                if (er.clusters.size() == 1) {
                    child.basis = piece.basis;
                } else {
                    const auto k = static_cast<Eigen::Index>(cl.members.size());
                    child.basis = piece.basis * cluster_eigenspace(restricted, cl.center, k);
                }
                next.push_back(std::move(child));
            }
        }
        pieces = std::move(next);
    }

    std::vector<double> scales;
    for (const auto& l : f.L) scales.push_back(cfg.eig_cluster_tol * std::max(1.0, norm2(l)));
    auto tuple_less = [&](const Piece& a, const Piece& b) {
        for (std::size_t j = 0; j < m; ++j) {
            const Complex x = a.tuple[j];
            const Complex y = b.tuple[j];
            if (std::abs(x.real() - y.real()) > scales[j]) return x.real() < y.real();
            if (std::abs(x.imag() - y.imag()) > scales[j]) return x.imag() < y.imag();
        }
        return false;
    };
    std::stable_sort(pieces.begin(), pieces.end(), tuple_less);

    out.P.resize(r, r);
    out.diagonals.assign(m, ComplexVector(r));
    Eigen::Index col = 0;
    for (const auto& piece : pieces) {
        const Eigen::Index k = piece.basis.cols();
        out.P.middleCols(col, k) = piece.basis;
        for (std::size_t j = 0; j < m; ++j) out.diagonals[j].segment(col, k).setConstant(piece.tuple[j]);
        ComplexVector t(static_cast<Eigen::Index>(m));
        for (std::size_t j = 0; j < m; ++j) t(static_cast<Eigen::Index>(j)) = piece.tuple[j];
        out.tuples.push_back(std::move(t));
        out.block_sizes.push_back(static_cast<std::size_t>(k));
        col += k;
    }
    return out;
}

}  // namespace simdiag
