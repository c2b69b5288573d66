#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "simdiag/evolution.hpp"
#include "simdiag/io.hpp"
#include "simdiag/linalg.hpp"
#include "simdiag/pencil.hpp"
#include "simdiag/reduction.hpp"
#include "simdiag/report.hpp"
#include "simdiag/sdc.hpp"
#include "simdiag/synth.hpp"

namespace py = pybind11;
using namespace simdiag;

namespace {

LinearPencil make_pencil(const std::vector<ComplexMatrix>& matrices, const ToleranceConfig& cfg) {
    return LinearPencil(matrices, cfg.residual_tol);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Simultaneous diagonalization via congruence of complex symmetric matrices.";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<ToleranceConfig>(m, "ToleranceConfig")
        .def(py::init<>())
        .def(py::init([](double rank_rel_tol, double eig_cluster_tol, double residual_tol, int max_rank_samples,
                         std::uint64_t rng_seed) {
                 ToleranceConfig c{rank_rel_tol, eig_cluster_tol, residual_tol, max_rank_samples, rng_seed};
                 c.validate();
                 return c;
             }),
             py::arg("rank_rel_tol") = 1e-10, py::arg("eig_cluster_tol") = 1e-8, py::arg("residual_tol") = 1e-8,
             py::arg("max_rank_samples") = 32, py::arg("rng_seed") = 0)
        .def_readwrite("rank_rel_tol", &ToleranceConfig::rank_rel_tol)
        .def_readwrite("eig_cluster_tol", &ToleranceConfig::eig_cluster_tol)
        .def_readwrite("residual_tol", &ToleranceConfig::residual_tol)
        .def_readwrite("max_rank_samples", &ToleranceConfig::max_rank_samples)
        .def_readwrite("rng_seed", &ToleranceConfig::rng_seed);

    m.def("numerical_rank", py::overload_cast<const ComplexMatrix&, const ToleranceConfig&>(&numerical_rank),
          py::arg("m"), py::arg("cfg") = ToleranceConfig{});
    m.def("nullspace_basis", &nullspace_basis, py::arg("m"), py::arg("cfg") = ToleranceConfig{});

    m.def(
        "eig",
        [](const ComplexMatrix& mat, const ToleranceConfig& cfg) {
            const EigResult r = eig(mat, cfg);
            return py::make_tuple(r.values, r.vectors, r.defect_flag);
        },
        py::arg("m"), py::arg("cfg") = ToleranceConfig{}, "Returns (values, vectors, defect_flag).");

    m.def(
        "takagi",
        [](const ComplexMatrix& c, const ToleranceConfig& cfg) {
            const TakagiResult r = takagi(c, cfg);
            return py::make_tuple(r.V, r.d);
        },
        py::arg("c"), py::arg("cfg") = ToleranceConfig{}, "Returns (V, d) with V.T @ C @ V = diag(d).");

    py::class_<MaxRankWitness>(m, "MaxRankWitness")
        .def_readonly("r", &MaxRankWitness::r)
        .def_readonly("lambda0", &MaxRankWitness::lambda0)
        .def_readonly("singular_values", &MaxRankWitness::singular_values);

    m.def(
        "max_rank_point",
        [](const std::vector<ComplexMatrix>& mats, const ToleranceConfig& cfg) {
            return max_rank_point(make_pencil(mats, cfg), cfg);
        },
        py::arg("matrices"), py::arg("cfg") = ToleranceConfig{});

    m.def(
        "kernel_intersection",
        [](const std::vector<ComplexMatrix>& mats, const ToleranceConfig& cfg) {
            return kernel_intersection(make_pencil(mats, cfg), cfg);
        },
        py::arg("matrices"), py::arg("cfg") = ToleranceConfig{});

    py::class_<SdcCertificate>(m, "SdcCertificate")
        .def_property_readonly("is_sdc", [](const SdcCertificate& c) { return c.verdict == Verdict::SDC; })
        .def_property_readonly("verdict", [](const SdcCertificate& c) { return std::string(to_string(c.verdict)); })
        .def_property_readonly("reason",
                               [](const SdcCertificate& c) -> py::object {
                                   if (c.verdict == Verdict::SDC) return py::none();
                                   return py::str(std::string(to_string(c.reason)));
                               })
        .def_readonly("n", &SdcCertificate::n)
        .def_readonly("m", &SdcCertificate::m)
        .def_property_readonly("r", [](const SdcCertificate& c) { return c.witness.r; })
        .def_property_readonly("lambda0", [](const SdcCertificate& c) { return c.witness.lambda0; })
        .def_readonly("kernel_dim", &SdcCertificate::kernel_dim)
        .def_readonly("expected_kernel_dim", &SdcCertificate::expected_kernel_dim)
        .def_readonly("P", &SdcCertificate::P)
        .def_readonly("diagonals", &SdcCertificate::diagonals)
        .def_readonly("residual", &SdcCertificate::residual)
        .def_property_readonly("block_sizes", [](const SdcCertificate& c) { return c.grouping.sizes; })
        .def("report", [](const SdcCertificate& c) { return report_json(c).dump(); },
             "JSON report (schema simdiag.report v1).")
        .def("__repr__", [](const SdcCertificate& c) {
            return "<SdcCertificate " + std::string(to_string(c.verdict)) +
                   (c.verdict == Verdict::SDC ? "" : " " + std::string(to_string(c.reason))) +
                   " r=" + std::to_string(c.witness.r) + ">";
        });

    m.def(
        "decide_sdc",
        [](const std::vector<ComplexMatrix>& mats, const ToleranceConfig& cfg) {
            return decide_sdc(make_pencil(mats, cfg), cfg);
        },
        py::arg("matrices"), py::arg("cfg") = ToleranceConfig{});

    m.def(
        "verify_certificate",
        [](const std::vector<ComplexMatrix>& mats, const ComplexMatrix& p, const ToleranceConfig& cfg) {
            const VerificationReport rep = verify_certificate(make_pencil(mats, cfg), p, cfg);
            return py::make_tuple(rep.pass, rep.residual, rep.condition);
        },
        py::arg("matrices"), py::arg("P"), py::arg("cfg") = ToleranceConfig{},
        "Returns (passed, residual, condition).");

    m.def(
        "synthesize",
        [](std::size_t n, std::size_t mm, std::size_t r, std::uint64_t seed, const std::string& kind) {
            const SynthInstance inst = synthesize(n, mm, r, seed, parse_synth_kind(kind));
            return py::make_tuple(inst.family.matrices, inst.truth.Q0, inst.truth.blocks);
        },
        py::arg("n"), py::arg("m"), py::arg("r"), py::arg("seed"), py::arg("kind") = "sdc",
        "Returns (matrices, Q0, blocks) with A_j = Q0^T (blocks[j] (+) 0) Q0.");

    m.def(
        "decide_evolution",
        [](const std::vector<ComplexMatrix>& structure, const ToleranceConfig& cfg) {
            // structure[k][i, j] = m_ijk
            StructureTensor t;
            t.n = structure.size();
            t.entries.assign(t.n * t.n * t.n, Complex{});
            for (std::size_t k = 0; k < t.n; ++k) {
                const auto& mk = structure[k];
                if (static_cast<std::size_t>(mk.rows()) != t.n || static_cast<std::size_t>(mk.cols()) != t.n) {
                    throw std::invalid_argument("structure matrices must be n x n with n = len(structure)");
                }
                for (std::size_t i = 0; i < t.n; ++i) {
                    for (std::size_t j = 0; j < t.n; ++j) {
                        t.at(i, j, k) = mk(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                    }
                }
            }
            return decide_evolution(t, cfg);
        },
        py::arg("structure_matrices"), py::arg("cfg") = ToleranceConfig{});

    m.def(
        "read_matrix_set", [](const std::filesystem::path& p) { return read_matrix_set(p, std::nullopt).matrices; },
        py::arg("path"));
    m.def(
        "write_matrix_set",
        [](const std::filesystem::path& p, const std::vector<ComplexMatrix>& mats) {
            MatrixSet s;
            s.matrices = mats;
            write_matrix_set(p, s);
        },
        py::arg("path"), py::arg("matrices"));
}
