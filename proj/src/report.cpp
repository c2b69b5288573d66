#include "simdiag/report.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace simdiag {

using nlohmann::json;

namespace {

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string complex_text(const Complex& z) {
    std::ostringstream ss;
    ss.precision(6);
    ss << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return ss.str();
}

}  // namespace

json report_json(const SdcCertificate& cert) {
    json j;
    j["schema"] = "simdiag.report";
    j["version"] = 1;
    j["verdict"] = std::string(to_string(cert.verdict));
    j["reason"] = cert.verdict == Verdict::SDC ? json(nullptr) : json(std::string(to_string(cert.reason)));
    j["n"] = cert.n;
    j["m"] = cert.m;
    j["r"] = cert.witness.r;
    json lambda = json::array();
    for (Eigen::Index i = 0; i < cert.witness.lambda0.size(); ++i) lambda.push_back(complex_json(cert.witness.lambda0(i)));
    j["lambda0"] = lambda;
    j["kernel_dim"] = cert.kernel_dim;
    j["expected_kernel_dim"] = cert.expected_kernel_dim;

    json detail = json::object();
    if (cert.reason == NotSdcReason::NonCommuting) {
        detail["pair"] = json::array({cert.noncommuting.first + 1, cert.noncommuting.second + 1});
    } else if (cert.reason == NotSdcReason::Defective) {
        detail["matrix"] = cert.defective + 1;
    }
    j["detail"] = detail;

    j["residual"] = cert.verdict == Verdict::SDC ? json(cert.residual) : json(nullptr);
    if (cert.verdict == Verdict::SDC) {
        j["blocks"] = cert.grouping.sizes;
    } else {
        j["blocks"] = nullptr;
    }
    const auto& d = cert.diagnostics;
    j["diagnostics"] = {
        {"sigma_r", d.sigma_r},
        {"sigma_r_next", d.sigma_r_next},
        {"reduction_off_block", d.reduction_off_block},
        {"kernel_excess", d.kernel_excess},
        {"block_off_diagonal", d.block_off_diagonal},
        {"condition", finite_or_null(d.condition)},
        {"marginal", d.marginal},
        {"note", d.note},
    };
    return j;
}

std::string report_text(const SdcCertificate& cert) {
    std::ostringstream out;
    out << "verdict: " << to_string(cert.verdict) << "\n";
    if (cert.verdict == Verdict::NotSDC) {
        out << "reason: " << to_string(cert.reason);
        switch (cert.reason) {
            case NotSdcReason::KernelDeficit:
                out << " (dim " << cert.kernel_dim << " < " << cert.expected_kernel_dim << ")";
                break;
            case NotSdcReason::NonCommuting:
                out << " (L_" << cert.noncommuting.first + 1 << ", L_" << cert.noncommuting.second + 1 << ")";
                break;
            case NotSdcReason::Defective:
                out << " (L_" << cert.defective + 1 << ")";
                break;
            default:
                if (!cert.diagnostics.note.empty()) out << " (" << cert.diagnostics.note << ")";
                break;
        }
        out << "\n";
    }
    out << "n: " << cert.n << "  m: " << cert.m << "\n";
    out << "r: " << cert.witness.r << "\n";
    out << "lambda0: (";
    for (Eigen::Index i = 0; i < cert.witness.lambda0.size(); ++i) {
        if (i > 0) out << ", ";
        out << complex_text(cert.witness.lambda0(i));
    }
    out << ")\n";
    out << "kernel dim: " << cert.kernel_dim << " (n - r = " << cert.expected_kernel_dim << ")\n";
    out << "rank gap: sigma_r = " << cert.diagnostics.sigma_r << ", sigma_r+1 = " << cert.diagnostics.sigma_r_next
        << "\n";
    if (cert.verdict == Verdict::SDC) {
        out << "residual: " << cert.residual << (cert.diagnostics.marginal ? " (marginal)" : "") << "\n";
        out << "cond(P): " << cert.diagnostics.condition << "\n";
        out << "blocks:";
        for (auto s : cert.grouping.sizes) out << " " << s;
        out << "\n";
    }
    return out.str();
}

MatrixSet transform_set(const SdcCertificate& cert) {
    if (cert.verdict != Verdict::SDC) throw std::invalid_argument("no transform for a NotSDC certificate");
    MatrixSet set;
    set.role = "transform";
    set.provenance = "matrices[0] = P; matrices[j] = P^T A_j P (diagonal), j = 1..m";
    set.matrices.push_back(cert.P);
    for (const auto& d : cert.diagonals) set.matrices.push_back(d.asDiagonal());
    return set;
}

}  // namespace simdiag
