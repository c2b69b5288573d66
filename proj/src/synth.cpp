#include "simdiag/synth.hpp"

#include <numbers>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace simdiag {

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    Complex gaussian() {
        const double re = gauss_(rng_);
        const double im = gauss_(rng_);
        return {re, im};
    }

    /// Magnitude in [0.5, 1.5], uniform phase.
    Complex unit_scale() { return std::polar(uniform(0.5, 1.5), uniform(0.0, 2.0 * std::numbers::pi)); }

    ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
        ComplexMatrix out(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j) {
            for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = gaussian();
        }
        return out;
    }

    ComplexMatrix unitary(Eigen::Index n) {
        Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_matrix(n, n));
        return qr.householderQ() * ComplexMatrix::Identity(n, n);
    }

    ComplexMatrix well_conditioned(Eigen::Index n) {
        const ComplexMatrix u = unitary(n);
        const ComplexMatrix w = unitary(n);
        ComplexVector s(n);
        for (Eigen::Index i = 0; i < n; ++i) s(i) = uniform(0.5, 2.0);
        return u * s.asDiagonal() * w;
    }

    std::size_t index_below(std::size_t k) {
        return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng_);
    }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> gauss_{0.0, 1.0};
};

std::vector<ComplexMatrix> sdc_blocks(Sampler& s, std::size_t m, std::size_t r) {
    const auto rr = static_cast<Eigen::Index>(r);
    // tuples(i, j): entry i of diagonal j
    ComplexMatrix tuples(rr, static_cast<Eigen::Index>(m));
    for (Eigen::Index i = 0; i < rr; ++i) {
        if (i > 0 && s.uniform(0.0, 1.0) < 0.25) {
            tuples.row(i) = tuples.row(static_cast<Eigen::Index>(s.index_below(static_cast<std::size_t>(i))));
        } else {
            for (Eigen::Index j = 0; j < tuples.cols(); ++j) tuples(i, j) = s.unit_scale();
        }
    }
    std::vector<ComplexMatrix> out;
    for (Eigen::Index j = 0; j < tuples.cols(); ++j) out.push_back(tuples.col(j).asDiagonal());
    return out;
}

std::vector<ComplexMatrix> noncommuting_blocks(Sampler& s, std::size_t m, std::size_t r) {
    const auto rr = static_cast<Eigen::Index>(r);
    std::vector<ComplexMatrix> out;
    for (std::size_t j = 0; j < m; ++j) {
        const ComplexMatrix g = s.gaussian_matrix(rr, rr);
        out.push_back(0.5 * (g + g.transpose()));
    }
    return out;
}

std::vector<ComplexMatrix> defective_blocks(Sampler& s, std::size_t m, std::size_t r) {
    const auto rr = static_cast<Eigen::Index>(r);
    ComplexMatrix jordan = ComplexMatrix::Zero(rr, rr);
    const Complex mu = s.unit_scale();
    jordan(0, 0) = mu;
    jordan(1, 1) = mu;
    jordan(0, 1) = 1.0;
    for (Eigen::Index i = 2; i < rr; ++i) jordan(i, i) = mu + s.unit_scale();

    ComplexMatrix b = ComplexMatrix::Zero(rr, rr);
    b(0, 1) = 1.0;
    b(1, 0) = 1.0;
    for (Eigen::Index i = 2; i < rr; ++i) b(i, i) = s.unit_scale();

    const ComplexMatrix eye = ComplexMatrix::Identity(rr, rr);
    std::vector<ComplexMatrix> out;
    out.push_back(b);
    for (std::size_t j = 1; j < m; ++j) {
        const Complex c = s.unit_scale();
        const Complex e = s.unit_scale();
        ComplexMatrix a = b * (c * eye + e * jordan);
        out.push_back(0.5 * (a + a.transpose()));
    }
    return out;
}

const char* construction_text(SynthKind kind) {
    switch (kind) {
        case SynthKind::Sdc:
            return "A_j = Q0^T (D_j (+) 0) Q0 with diagonal D_j; expected verdict SDC";
        case SynthKind::NonCommuting:
            return "A_j = Q0^T (S_j (+) 0) Q0 with random complex symmetric S_j; reduced matrices do not "
                   "commute; expected verdict NotSDC (non-commuting)";
        case SynthKind::Defective:
            return "A_j = Q0^T (B p_j(J) (+) 0) Q0, J = Jordan block of size 2 (+) random diagonal, "
                   "B = exchange (+) diagonal, p_1 = 1, p_j = c_j + e_j x; reduced matrices commute but "
                   "L_1 is not diagonalizable; expected verdict NotSDC (defective)";
    }
    return "";
}

}  // namespace

std::string_view to_string(SynthKind k) {
    switch (k) {
        case SynthKind::Sdc: return "sdc";
        case SynthKind::NonCommuting: return "noncommuting";
        case SynthKind::Defective: return "defective";
    }
    return "unknown";
}

SynthKind parse_synth_kind(std::string_view name) {
    if (name == "sdc") return SynthKind::Sdc;
    if (name == "noncommuting") return SynthKind::NonCommuting;
    if (name == "defective") return SynthKind::Defective;
    throw std::invalid_argument("unknown synth kind \"" + std::string(name) + "\"");
}

SynthInstance synthesize(std::size_t n, std::size_t m, std::size_t r, std::uint64_t seed, SynthKind kind) {
    if (n < 1 || r < 1 || r > n) throw std::invalid_argument("need 1 <= r <= n");
    if (m < 1) throw std::invalid_argument("need m >= 1");
    if (kind == SynthKind::NonCommuting && (m < 3 || r < 2)) {
        throw std::invalid_argument("noncommuting families need m >= 3 and r >= 2");
    }
    if (kind == SynthKind::Defective && (m < 2 || r < 2)) {
        throw std::invalid_argument("defective families need m >= 2 and r >= 2");
    }

    Sampler s(seed);
    SynthInstance inst;
    inst.truth.kind = kind;
    inst.truth.r = r;
    inst.truth.construction = construction_text(kind);
    inst.truth.Q0 = s.well_conditioned(static_cast<Eigen::Index>(n));
    switch (kind) {
        case SynthKind::Sdc: inst.truth.blocks = sdc_blocks(s, m, r); break;
        case SynthKind::NonCommuting: inst.truth.blocks = noncommuting_blocks(s, m, r); break;
        case SynthKind::Defective: inst.truth.blocks = defective_blocks(s, m, r); break;
    }

    const auto nn = static_cast<Eigen::Index>(n);
    const auto rr = static_cast<Eigen::Index>(r);
    for (const auto& blk : inst.truth.blocks) {
        ComplexMatrix padded = ComplexMatrix::Zero(nn, nn);
        padded.topLeftCorner(rr, rr) = blk;
        ComplexMatrix a = inst.truth.Q0.transpose() * padded * inst.truth.Q0;
        inst.family.matrices.push_back(0.5 * (a + a.transpose()));
    }
    inst.family.name = "synth-" + std::string(to_string(kind)) + "-n" + std::to_string(n) + "-m" +
                       std::to_string(m) + "-r" + std::to_string(r);
    inst.family.seed = seed;
    inst.family.provenance = inst.truth.construction;
    return inst;
}

std::string format_truth(const SynthTruth& truth) {
    std::string out = "{\n";
    out += "  \"format\": \"simdiag.synth-truth\",\n";
    out += "  \"version\": 1,\n";
    out += "  \"kind\": \"" + std::string(to_string(truth.kind)) + "\",\n";
    out += "  \"r\": " + std::to_string(truth.r) + ",\n";
    out += "  \"construction\": " + nlohmann::json(truth.construction).dump() + ",\n";
    out += "  \"Q0\": " + format_matrix(truth.Q0, 2) + ",\n";
    out += "  \"blocks\": [\n";
    for (std::size_t j = 0; j < truth.blocks.size(); ++j) {
        out += "    " + format_matrix(truth.blocks[j], 4);
        out += j + 1 < truth.blocks.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

}  // namespace simdiag
