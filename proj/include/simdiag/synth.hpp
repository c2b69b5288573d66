#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simdiag/io.hpp"
#include "simdiag/matrix.hpp"

namespace simdiag {

enum class SynthKind { Sdc, NonCommuting, Defective };

std::string_view to_string(SynthKind k);
/// Throws std::invalid_argument for unknown names.
SynthKind parse_synth_kind(std::string_view name);

/// Ground truth behind a synthetic family A_j = Q0^T (R_j (+) 0_{n-r}) Q0.
struct SynthTruth {
    SynthKind kind = SynthKind::Sdc;
    std::size_t r = 0;
    ComplexMatrix Q0;                  // invertible n x n
    std::vector<ComplexMatrix> blocks; // the r x r R_j (diagonal for kind sdc)
    std::string construction;
};

struct SynthInstance {
    MatrixSet family;
    SynthTruth truth;
};

/// Seeded synthetic family.
///
///   sdc           R_j diagonal with random unit-scale entries; about a quarter
///                 of the joint tuples repeat an earlier one so that
///                 multi-column blocks occur.
///   noncommuting  R_j random complex symmetric; needs m >= 3 and r >= 2
///                 (for m = 2 the reduced matrices always commute).
///   defective     R_j = B (c_j I + e_j J) with J a Jordan block of size 2
///                 plus a random diagonal and B = exchange (+) diagonal, so
///                 every R_j is symmetric and the reduced L_1 is a non-trivial
///                 function of J; needs m >= 2 and r >= 2.
///
/// Q0 = U diag(s) W with Haar-like unitary U, W and s in [0.5, 2].
/// Throws std::invalid_argument for invalid dimensions.
SynthInstance synthesize(std::size_t n, std::size_t m, std::size_t r, std::uint64_t seed, SynthKind kind);

/// Sidecar JSON document describing the ground truth.
std::string format_truth(const SynthTruth& truth);

}  // namespace simdiag
