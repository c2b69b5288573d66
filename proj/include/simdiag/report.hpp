#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "simdiag/io.hpp"
#include "simdiag/sdc.hpp"

namespace simdiag {

/// Machine-readable report (schema "simdiag.report", version 1). Indices
/// in the report are 1-based.
nlohmann::json report_json(const SdcCertificate& cert);

/// Human-readable multi-line report.
std::string report_text(const SdcCertificate& cert);

/// Transform document: matrices = [P, diag(D_1), ..., diag(D_m)].
/// Throws std::invalid_argument unless the verdict is SDC.
MatrixSet transform_set(const SdcCertificate& cert);

}  // namespace simdiag
