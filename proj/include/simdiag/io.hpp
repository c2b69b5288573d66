#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simdiag/matrix.hpp"

namespace simdiag {

/// Malformed or invalid input file. `what()` is a single line.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Contents of a matrix-set document.
///
/// Layout (JSON):
///   {"format": "simdiag.matrix-set", "version": 1, "role": "family",
///    "name": ..., "seed": ..., "provenance": ...,      (optional)
///    "n": N, "m": M, "matrices": [M x N x N x [re, im]]}
///
/// role is "family" for inputs and "transform" for emitted certificates
/// (matrices = [P, D_1, ..., D_m]).
struct MatrixSet {
    std::string role = "family";
    std::optional<std::string> name;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> provenance;
    std::vector<ComplexMatrix> matrices;

    std::size_t n() const { return matrices.empty() ? 0 : static_cast<std::size_t>(matrices.front().rows()); }
    std::size_t m() const { return matrices.size(); }
};

/// Parses a matrix-set document. When `symmetry_tol` is set every matrix
/// must be symmetric within it. Throws FormatError.
MatrixSet parse_matrix_set(std::string_view text, std::optional<double> symmetry_tol);
MatrixSet read_matrix_set(const std::filesystem::path& path, std::optional<double> symmetry_tol);

/// Canonical text: fixed layout, one matrix row per line, every double
/// printed with 17 significant digits. parse + format is the identity on
/// canonical text.
std::string format_matrix_set(const MatrixSet& set);
void write_matrix_set(const std::filesystem::path& path, const MatrixSet& set);

/// Structure constants of a finite-dimensional commutative algebra:
/// e_i e_j = sum_k m_ijk e_k.
///
/// Layout (JSON):
///   {"format": "simdiag.structure-tensor", "version": 1, "n": N,
///    "entries": N x N x N x [re, im]}   indexed [i][j][k]
struct StructureTensor {
    std::size_t n = 0;
    std::vector<Complex> entries;  // n^3, index (i * n + j) * n + k

    Complex& at(std::size_t i, std::size_t j, std::size_t k) { return entries[(i * n + j) * n + k]; }
    const Complex& at(std::size_t i, std::size_t j, std::size_t k) const { return entries[(i * n + j) * n + k]; }
};

StructureTensor parse_structure_tensor(std::string_view text);
StructureTensor read_structure_tensor(const std::filesystem::path& path);
std::string format_structure_tensor(const StructureTensor& t);
void write_structure_tensor(const std::filesystem::path& path, const StructureTensor& t);

/// Canonical JSON text of a single matrix: rows of [re, im] pairs, indented by
/// `indent` spaces. Shared by the sidecar and report writers.
std::string format_matrix(const ComplexMatrix& m, int indent);

/// 17-significant-digit decimal; -0 is written as 0.
std::string format_double(double x);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace simdiag
