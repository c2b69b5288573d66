#include "simdiag/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace simdiag {

namespace {

double rank_threshold(const ComplexMatrix& m, const ToleranceConfig& cfg, double scale) {
    return cfg.rank_rel_tol * static_cast<double>(std::max(m.rows(), m.cols())) * scale;
}

std::size_t count_above(const RealVector& sv, double threshold) {
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) ++rank;
    }
    return rank;
}

bool lex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// kappa_i = |x_i| |y_i| / |y_i^H x_i| with unit right vectors x_i; the left
// vectors are the rows of X^{-1}, so kappa_i = |row_i(X^{-1})|.
std::vector<double> eigenvalue_conditions(const ComplexMatrix& vectors) {
    const auto n = static_cast<std::size_t>(vectors.cols());
    const double huge = 1.0 / std::numeric_limits<double>::epsilon();
    std::vector<double> kappa(n, huge);
    if (n == 0) return kappa;
    Eigen::JacobiSVD<ComplexMatrix> svd(vectors);
    const RealVector& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= std::numeric_limits<double>::epsilon() * sv(0)) return kappa;
    const ComplexMatrix inv = vectors.fullPivLu().inverse();
    for (std::size_t i = 0; i < n; ++i) {
        kappa[i] = std::min(huge, inv.row(static_cast<Eigen::Index>(i)).norm());
    }
    return kappa;
}

// Takagi factor of a small symmetric block whose singular values are all
// bounded away from zero: the +sigma eigenvectors [x; y] of the real
// embedding give columns x + i y.
void takagi_block(const ComplexMatrix& g, ComplexMatrix& t, RealVector& d) {
    const auto k = g.rows();
    if (k == 1) {
        const double mag = std::abs(g(0, 0));
        const double phase = std::arg(g(0, 0));
        t.resize(1, 1);
        t(0, 0) = std::polar(1.0, phase / 2.0);
        d.resize(1);
        d(0) = mag;
        return;
    }
    Eigen::MatrixXd h(2 * k, 2 * k);
    h.topLeftCorner(k, k) = g.real();
    h.topRightCorner(k, k) = g.imag();
    h.bottomLeftCorner(k, k) = g.imag();
    h.bottomRightCorner(k, k) = -g.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    t.resize(k, k);
    d.resize(k);
    // Ascending eigenvalues; the top k are the singular values.
    for (Eigen::Index c = 0; c < k; ++c) {
        const Eigen::Index src = 2 * k - 1 - c;
        d(c) = std::max(0.0, es.eigenvalues()(src));
        const auto v = es.eigenvectors().col(src);
        for (Eigen::Index i = 0; i < k; ++i) t(i, c) = Complex(v(i), v(k + i));
    }
}

}  // namespace

RealVector singular_values(const ComplexMatrix& m) {
    if (m.size() == 0) return RealVector();
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues();
}

std::size_t numerical_rank(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    const RealVector sv = singular_values(m);
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    return count_above(sv, rank_threshold(m, cfg, sv(0)));
}

std::size_t numerical_rank(const ComplexMatrix& m, const ToleranceConfig& cfg,
                           double reference_scale) {
    const RealVector sv = singular_values(m);
    if (sv.size() == 0) return 0;
    const double scale = std::max(reference_scale, sv(0));
    if (scale == 0.0) return 0;
    return count_above(sv, rank_threshold(m, cfg, scale));
}

ComplexMatrix nullspace_basis(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    const auto cols = m.cols();
    if (m.rows() == 0) return ComplexMatrix::Identity(cols, cols);
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
    const RealVector& sv = svd.singularValues();
    std::size_t rank = 0;
    if (sv.size() > 0 && sv(0) > 0.0) rank = count_above(sv, rank_threshold(m, cfg, sv(0)));
    const auto r = static_cast<Eigen::Index>(rank);
    return svd.matrixV().rightCols(cols - r);
}

EigResult eig(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eig: matrix must be square");
    const auto n = static_cast<std::size_t>(m.rows());
    EigResult out;
    if (n == 0) {
        out.values.resize(0);
        out.vectors.resize(0, 0);
        return out;
    }

    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, true);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eig: solver did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(solver.eigenvalues()(static_cast<Eigen::Index>(a)),
                        solver.eigenvalues()(static_cast<Eigen::Index>(b)));
    });
    out.values.resize(static_cast<Eigen::Index>(n));
    out.vectors.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const auto src = static_cast<Eigen::Index>(order[i]);
        const auto dst = static_cast<Eigen::Index>(i);
        out.values(dst) = solver.eigenvalues()(src);
        ComplexVector v = solver.eigenvectors().col(src);
        const double nv = v.norm();
        if (nv > 0.0) v /= nv;
        out.vectors.col(dst) = v;
    }

    const double scale = std::max(1.0, norm2(m));
    const double base = cfg.eig_cluster_tol * scale;
    const std::vector<double> kappa = eigenvalue_conditions(out.vectors);

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double widen = (kappa[i] + kappa[j]) * cfg.rank_rel_tol * scale;
            const double radius = base + widen;
            const auto ii = static_cast<Eigen::Index>(i);
            const auto jj = static_cast<Eigen::Index>(j);
            if (std::abs(out.values(ii) - out.values(jj)) <= radius) uf.unite(i, j);
        }
    }

    // Roots are the smallest member index, so iterating in index order yields
    // clusters ordered by their first (lexicographically smallest) member.
    std::vector<std::ptrdiff_t> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = uf.find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::ptrdiff_t>(out.clusters.size());
            out.clusters.emplace_back();
        }
        out.clusters[static_cast<std::size_t>(slot[root])].members.push_back(i);
    }

    const double m_scale = norm2(m);
    const ComplexMatrix eye = ComplexMatrix::Identity(m.rows(), m.cols());
    for (auto& cl : out.clusters) {
        Complex sum{0.0, 0.0};
        for (std::size_t idx : cl.members) sum += out.values(static_cast<Eigen::Index>(idx));
        cl.center = sum / static_cast<double>(cl.members.size());
        const std::size_t k = cl.members.size();
        const std::size_t rank = numerical_rank(m - cl.center * eye, cfg, m_scale);
        cl.defective = rank > n - k;
        if (cl.defective) out.defect_flag = true;
    }
    return out;
}

TakagiResult takagi(const ComplexMatrix& c, const ToleranceConfig& cfg) {
    if (c.rows() != c.cols()) throw std::invalid_argument("takagi: matrix must be square");
    if (!is_symmetric(c, cfg.residual_tol)) {
        throw std::invalid_argument("takagi: matrix is not symmetric within tolerance");
    }
    const auto n = c.rows();
    TakagiResult out;
    out.V = ComplexMatrix::Identity(n, n);
    out.d = RealVector::Zero(n);
    if (n == 0) return out;

    const ComplexMatrix sym = 0.5 * (c + c.transpose());
    Eigen::JacobiSVD<ComplexMatrix> svd(sym, Eigen::ComputeFullU);
    const RealVector& sv = svd.singularValues();
    const ComplexMatrix& u = svd.matrixU();
    if (sv(0) == 0.0) return out;

    // Singular values below this are rounding noise; their left singular
    // vectors already satisfy C conj(u) = 0.
    const double zero_thr = 4.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * sv(0);
    constexpr double kRelativeGap = 0.1;

    ComplexMatrix w(n, n);
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index end = start + 1;
        if (sv(start) <= zero_thr) {
            end = n;
        } else {
            while (end < n && sv(end) > zero_thr && sv(end - 1) - sv(end) <= kRelativeGap * sv(end - 1)) ++end;
        }
        const Eigen::Index k = end - start;
        const ComplexMatrix uc = u.middleCols(start, k);
        if (sv(start) <= zero_thr) {
            w.middleCols(start, k) = uc;
            out.d.segment(start, k) = sv.segment(start, k);
        } else {
            ComplexMatrix g = uc.adjoint() * sym * uc.conjugate();
            g = 0.5 * (g + g.transpose()).eval();
            ComplexMatrix t;
            RealVector dc;
            takagi_block(g, t, dc);
            w.middleCols(start, k) = uc * t;
            out.d.segment(start, k) = dc;
        }
        start = end;
    }
    out.V = w.conjugate();
    return out;
}

}  // namespace simdiag
