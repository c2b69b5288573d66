#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "simdiag/io.hpp"
#include "simdiag/matrix.hpp"
#include "simdiag/sdc.hpp"

namespace simdiag {

/// m_ijk != m_jik for the reported (0-based) indices; what() prints them 1-based.
class NonCommutativeTensor : public std::invalid_argument {
public:
    NonCommutativeTensor(std::size_t i, std::size_t j, std::size_t k);
    std::array<std::size_t, 3> index;
};

/// Throws NonCommutativeTensor on the first violation of m_ijk = m_jik
/// beyond tol * max(1, max |m|).
void check_commutative(const StructureTensor& t, double tol);

/// M_k = (m_ijk)_{i,j} for k = 1..n.
std::vector<ComplexMatrix> structure_matrices(const StructureTensor& t);

/// The algebra is an evolution algebra iff its structure matrices are SDC;
/// on SDC the columns of P are the coordinates of a natural basis.
/// Throws NonCommutativeTensor or std::invalid_argument (n = 0).
SdcCertificate decide_evolution(const StructureTensor& t, const ToleranceConfig& cfg);

}  // namespace simdiag
