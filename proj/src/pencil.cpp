#include "simdiag/pencil.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "simdiag/linalg.hpp"

namespace simdiag {

LinearPencil::LinearPencil(std::vector<ComplexMatrix> matrices, double symmetry_tol)
    : matrices_(std::move(matrices)) {
    if (matrices_.empty()) throw std::invalid_argument("pencil needs at least one matrix");
    n_ = static_cast<std::size_t>(matrices_.front().rows());
    for (std::size_t j = 0; j < matrices_.size(); ++j) {
        const auto& a = matrices_[j];
        if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != n_) {
            throw std::invalid_argument("matrix " + std::to_string(j + 1) + " is not " +
                                        std::to_string(n_) + "x" + std::to_string(n_));
        }
        if (!is_symmetric(a, symmetry_tol)) {
            throw std::invalid_argument("matrix " + std::to_string(j + 1) + " is not symmetric");
        }
    }
}

ComplexMatrix LinearPencil::evaluate(const ComplexVector& lambda) const {
    if (static_cast<std::size_t>(lambda.size()) != m()) {
        throw std::invalid_argument("lambda has length " + std::to_string(lambda.size()) +
                                    ", expected " + std::to_string(m()));
    }
    const auto n = static_cast<Eigen::Index>(n_);
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (std::size_t j = 0; j < m(); ++j) out += lambda(static_cast<Eigen::Index>(j)) * matrices_[j];
    return out;
}

double LinearPencil::scale() const {
    double s = 0.0;
    for (const auto& a : matrices_) s = std::max(s, norm2(a));
    return s;
}

std::vector<ComplexVector> rank_candidates(std::size_t m, const ToleranceConfig& cfg) {
    const auto mm = static_cast<Eigen::Index>(m);
    std::vector<ComplexVector> out;
    out.reserve(m + 1 + static_cast<std::size_t>(cfg.max_rank_samples));
    for (Eigen::Index j = 0; j < mm; ++j) out.push_back(ComplexVector::Unit(mm, j));
    out.push_back(ComplexVector::Ones(mm).normalized());

    std::mt19937_64 rng(cfg.rng_seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < cfg.max_rank_samples; ++s) {
        ComplexVector v(mm);
        for (Eigen::Index j = 0; j < mm; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            v(j) = Complex(re, im);
        }
        const double nv = v.norm();
        out.push_back(nv > 0.0 ? ComplexVector(v / nv) : ComplexVector::Unit(mm, 0));
    }
    return out;
}

MaxRankWitness max_rank_point(const LinearPencil& p, const ToleranceConfig& cfg) {
    cfg.validate();
    const auto candidates = rank_candidates(p.m(), cfg);
    MaxRankWitness best;
    bool have = false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const ComplexMatrix a = p.evaluate(candidates[i]);
        const std::size_t rank = numerical_rank(a, cfg);
        if (!have || rank > best.r) {
            best.r = rank;
            best.lambda0 = candidates[i];
            best.singular_values = singular_values(a);
            best.candidate_index = i;
            have = true;
        }
        if (best.r == p.n()) break;
    }
    return best;
}

}  // namespace simdiag
