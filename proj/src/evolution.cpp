#include "simdiag/evolution.hpp"

#include <algorithm>
#include <string>

namespace simdiag {

NonCommutativeTensor::NonCommutativeTensor(std::size_t i, std::size_t j, std::size_t k)
    : std::invalid_argument("structure tensor is not commutative at (i, j, k) = (" + std::to_string(i + 1) + ", " +
                            std::to_string(j + 1) + ", " + std::to_string(k + 1) + "): m_ijk != m_jik"),
      index{i, j, k} {}

void check_commutative(const StructureTensor& t, double tol) {
    double scale = 1.0;
    for (const auto& z : t.entries) scale = std::max(scale, std::abs(z));
    for (std::size_t i = 0; i < t.n; ++i) {
        for (std::size_t j = i + 1; j < t.n; ++j) {
            for (std::size_t k = 0; k < t.n; ++k) {
                if (std::abs(t.at(i, j, k) - t.at(j, i, k)) > tol * scale) throw NonCommutativeTensor(i, j, k);
            }
        }
    }
}

std::vector<ComplexMatrix> structure_matrices(const StructureTensor& t) {
    const auto n = static_cast<Eigen::Index>(t.n);
    std::vector<ComplexMatrix> out;
    out.reserve(t.n);
    for (std::size_t k = 0; k < t.n; ++k) {
        ComplexMatrix mk(n, n);
        for (std::size_t i = 0; i < t.n; ++i) {
            for (std::size_t j = 0; j < t.n; ++j) {
                mk(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = t.at(i, j, k);
            }
        }
        out.push_back(std::move(mk));
    }
    return out;
}

SdcCertificate decide_evolution(const StructureTensor& t, const ToleranceConfig& cfg) {
    if (t.n == 0) throw std::invalid_argument("structure tensor has dimension 0");
    check_commutative(t, cfg.residual_tol);
    LinearPencil pencil(structure_matrices(t), cfg.residual_tol);
    return decide_sdc(pencil, cfg);
}

}  // namespace simdiag
