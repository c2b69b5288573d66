// simdiag command-line front end.
//
//   simdiag decide FILE [--json] [--emit-transform OUT]
//   simdiag transform FILE OUT [--json]
//   simdiag synth --n N --m M --r R --seed S --kind sdc|noncommuting|defective -o OUT [--truth PATH]
//   simdiag evolution FILE [--json] [--emit-transform OUT]
//
// Exit codes: 0 = SDC (or synth success), 1 = NotSDC, 2 = input or usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "simdiag/evolution.hpp"
#include "simdiag/io.hpp"
#include "simdiag/report.hpp"
#include "simdiag/sdc.hpp"
#include "simdiag/synth.hpp"

namespace {

constexpr int kExitSdc = 0;
constexpr int kExitNotSdc = 1;
constexpr int kExitError = 2;

struct CommonOptions {
    simdiag::ToleranceConfig cfg;
    bool json = false;
    std::string emit;
};

void add_tolerance_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--tol-rank", opts.cfg.rank_rel_tol, "relative rank tolerance");
    cmd->add_option("--tol-residual", opts.cfg.residual_tol, "residual acceptance tolerance");
    cmd->add_option("--seed", opts.cfg.rng_seed, "seed for the maximum-rank search");
    cmd->add_option("--samples", opts.cfg.max_rank_samples, "random points tried in the maximum-rank search");
    cmd->add_flag("--json", opts.json, "print the report as JSON");
}

int report(const simdiag::SdcCertificate& cert, const CommonOptions& opts) {
    if (opts.json) {
        std::cout << simdiag::report_json(cert).dump(2) << "\n";
    } else {
        std::cout << simdiag::report_text(cert);
    }
    if (cert.verdict == simdiag::Verdict::SDC && !opts.emit.empty()) {
        simdiag::write_matrix_set(opts.emit, simdiag::transform_set(cert));
        if (!opts.json) std::cout << "transform written to " << opts.emit << "\n";
    }
    return cert.verdict == simdiag::Verdict::SDC ? kExitSdc : kExitNotSdc;
}

int run_decide(const std::string& input, const CommonOptions& opts) {
    opts.cfg.validate();
    const auto set = simdiag::read_matrix_set(input, opts.cfg.residual_tol);
    if (set.role != "family") throw simdiag::FormatError(input + ": expected a file with role \"family\"");
    simdiag::LinearPencil pencil(set.matrices, opts.cfg.residual_tol);
    return report(simdiag::decide_sdc(pencil, opts.cfg), opts);
}

int run_evolution(const std::string& input, const CommonOptions& opts) {
    opts.cfg.validate();
    const auto tensor = simdiag::read_structure_tensor(input);
    return report(simdiag::decide_evolution(tensor, opts.cfg), opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simultaneous diagonalization via congruence of complex symmetric matrices"};
    app.require_subcommand(1);

    CommonOptions opts;
    if (const char* env = std::getenv("SDC_DEFAULT_TOL")) {
        try {
            opts.cfg.residual_tol = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "error: SDC_DEFAULT_TOL is not a number: " << env << "\n";
            return kExitError;
        }
    }

    std::string input;
    auto* decide = app.add_subcommand("decide", "decide whether a matrix family is SDC");
    decide->add_option("file", input, "matrix-set file")->required();
    decide->add_option("--emit-transform", opts.emit, "write P and D_j here on SDC");
    add_tolerance_flags(decide, opts);

    auto* transform = app.add_subcommand("transform", "decide and write P and D_j on SDC");
    transform->add_option("file", input, "matrix-set file")->required();
    transform->add_option("output", opts.emit, "transform output file")->required();
    add_tolerance_flags(transform, opts);

    std::size_t n = 0, m = 0, r = 0;
    std::uint64_t synth_seed = 0;
    std::string kind_name = "sdc";
    std::string out_path;
    std::string truth_path;
    auto* synth = app.add_subcommand("synth", "generate a seeded synthetic family");
    synth->add_option("--n", n, "matrix dimension")->required();
    synth->add_option("--m", m, "family size")->required();
    synth->add_option("--r", r, "pencil rank")->required();
    synth->add_option("--seed", synth_seed, "generator seed")->required();
    synth->add_option("--kind", kind_name, "sdc | noncommuting | defective")
        ->check(CLI::IsMember({"sdc", "noncommuting", "defective"}));
    synth->add_option("-o,--output", out_path, "matrix-set output file")->required();
    synth->add_option("--truth", truth_path, "ground-truth sidecar (default: OUTPUT.truth.json)");

    auto* evolution = app.add_subcommand("evolution", "decide whether an algebra is an evolution algebra");
    evolution->add_option("file", input, "structure-tensor file")->required();
    evolution->add_option("--emit-transform", opts.emit, "write the natural-basis matrix P here on success");
    add_tolerance_flags(evolution, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*decide || *transform) return run_decide(input, opts);
        if (*evolution) return run_evolution(input, opts);
        if (*synth) {
            const auto inst = simdiag::synthesize(n, m, r, synth_seed, simdiag::parse_synth_kind(kind_name));
            simdiag::write_matrix_set(out_path, inst.family);
            simdiag::write_text_file(truth_path.empty() ? out_path + ".truth.json" : truth_path,
                                     simdiag::format_truth(inst.truth));
            return kExitSdc;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
