#include "simdiag/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace simdiag {

using nlohmann::json;

namespace {

constexpr std::string_view kMatrixSetFormat = "simdiag.matrix-set";
constexpr std::string_view kTensorFormat = "simdiag.structure-tensor";

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                          ": malformed JSON");
    }
}

const json& require(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

std::size_t require_count(const json& doc, const char* key) {
    const json& v = require(doc, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw FormatError(std::string("field \"") + key + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

void check_format(const json& doc, std::string_view expected) {
    const json& f = require(doc, "format");
    if (!f.is_string() || f.get<std::string>() != expected) {
        throw FormatError("field \"format\" must be \"" + std::string(expected) + "\"");
    }
    if (doc.contains("version") && (!doc["version"].is_number_integer() || doc["version"].get<int>() != 1)) {
        throw FormatError("unsupported version (expected 1)");
    }
}

Complex parse_entry(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw FormatError(where + ": expected [re, im] pair");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& v, std::size_t n, const std::string& where) {
    if (!v.is_array() || v.size() != n) {
        throw FormatError(where + ": expected " + std::to_string(n) + " rows");
    }
    const auto nn = static_cast<Eigen::Index>(n);
    ComplexMatrix out(nn, nn);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = v[i];
        const std::string rw = where + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != n) {
            throw FormatError(rw + ": expected " + std::to_string(n) + " entries");
        }
        for (std::size_t j = 0; j < n; ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                parse_entry(row[j], rw + "[" + std::to_string(j) + "]");
        }
    }
    return out;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string entry_text(const Complex& z) {
    return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
}

}  // namespace

std::string format_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("cannot serialize a non-finite value");
    if (x == 0.0) x = 0.0;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_matrix(const ComplexMatrix& m, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    std::string out = "[\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out += pad + "  [";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ", ";
            out += entry_text(m(i, j));
        }
        out += i + 1 < m.rows() ? "],\n" : "]\n";
    }
    out += pad + "]";
    return out;
}

MatrixSet parse_matrix_set(std::string_view text, std::optional<double> symmetry_tol) {
    const json doc = parse_json(text);
    check_format(doc, kMatrixSetFormat);
    MatrixSet set;
    if (doc.contains("role")) {
        if (!doc["role"].is_string()) throw FormatError("field \"role\" must be a string");
        set.role = doc["role"].get<std::string>();
        if (set.role != "family" && set.role != "transform") {
            throw FormatError("field \"role\" must be \"family\" or \"transform\"");
        }
    }
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw FormatError("field \"name\" must be a string");
        set.name = doc["name"].get<std::string>();
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) throw FormatError("field \"seed\" must be a non-negative integer");
        set.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("provenance")) {
        if (!doc["provenance"].is_string()) throw FormatError("field \"provenance\" must be a string");
        set.provenance = doc["provenance"].get<std::string>();
    }
    const std::size_t n = require_count(doc, "n");
    const std::size_t m = require_count(doc, "m");
    if (m == 0) throw FormatError("field \"m\" must be at least 1");
    const json& mats = require(doc, "matrices");
    if (!mats.is_array() || mats.size() != m) {
        throw FormatError("\"matrices\" must hold " + std::to_string(m) + " matrices (declared m)");
    }
    for (std::size_t j = 0; j < m; ++j) {
        set.matrices.push_back(parse_matrix(mats[j], n, "matrices[" + std::to_string(j) + "]"));
    }
    if (symmetry_tol) {
        for (std::size_t j = 0; j < m; ++j) {
            const ComplexMatrix& a = set.matrices[j];
            const double tol = *symmetry_tol * std::max(1.0, max_abs(a));
            for (Eigen::Index r = 0; r < a.rows(); ++r) {
                for (Eigen::Index c = r + 1; c < a.cols(); ++c) {
                    if (std::abs(a(r, c) - a(c, r)) > tol) {
                        throw FormatError("matrices[" + std::to_string(j) + "]: entry [" + std::to_string(r) +
                                          "][" + std::to_string(c) + "] differs from [" + std::to_string(c) +
                                          "][" + std::to_string(r) + "] (matrix is not symmetric)");
                    }
                }
            }
        }
    }
    return set;
}

MatrixSet read_matrix_set(const std::filesystem::path& path, std::optional<double> symmetry_tol) {
    try {
        return parse_matrix_set(read_text_file(path), symmetry_tol);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string format_matrix_set(const MatrixSet& set) {
    std::string out = "{\n";
    out += "  \"format\": " + quoted(std::string(kMatrixSetFormat)) + ",\n";
    out += "  \"version\": 1,\n";
    out += "  \"role\": " + quoted(set.role) + ",\n";
    if (set.name) out += "  \"name\": " + quoted(*set.name) + ",\n";
    if (set.seed) out += "  \"seed\": " + std::to_string(*set.seed) + ",\n";
    if (set.provenance) out += "  \"provenance\": " + quoted(*set.provenance) + ",\n";
    out += "  \"n\": " + std::to_string(set.n()) + ",\n";
    out += "  \"m\": " + std::to_string(set.m()) + ",\n";
    out += "  \"matrices\": [\n";
    for (std::size_t j = 0; j < set.matrices.size(); ++j) {
        out += "    " + format_matrix(set.matrices[j], 4);
        out += j + 1 < set.matrices.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

void write_matrix_set(const std::filesystem::path& path, const MatrixSet& set) {
    write_text_file(path, format_matrix_set(set));
}

StructureTensor parse_structure_tensor(std::string_view text) {
    const json doc = parse_json(text);
    check_format(doc, kTensorFormat);
    StructureTensor t;
    t.n = require_count(doc, "n");
    const json& e = require(doc, "entries");
    const std::size_t n = t.n;
    if (!e.is_array() || e.size() != n) throw FormatError("\"entries\" must have " + std::to_string(n) + " slices");
    t.entries.assign(n * n * n, Complex{});
    for (std::size_t i = 0; i < n; ++i) {
        if (!e[i].is_array() || e[i].size() != n) {
            throw FormatError("entries[" + std::to_string(i) + "]: expected " + std::to_string(n) + " rows");
        }
        for (std::size_t j = 0; j < n; ++j) {
            const json& row = e[i][j];
            const std::string where = "entries[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            if (!row.is_array() || row.size() != n) {
                throw FormatError(where + ": expected " + std::to_string(n) + " entries");
            }
            for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = parse_entry(row[k], where + "[" + std::to_string(k) + "]");
        }
    }
    return t;
}

StructureTensor read_structure_tensor(const std::filesystem::path& path) {
    try {
        return parse_structure_tensor(read_text_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string format_structure_tensor(const StructureTensor& t) {
    std::string out = "{\n";
    out += "  \"format\": " + quoted(std::string(kTensorFormat)) + ",\n";
    out += "  \"version\": 1,\n";
    out += "  \"n\": " + std::to_string(t.n) + ",\n";
    out += "  \"entries\": [\n";
    for (std::size_t i = 0; i < t.n; ++i) {
        out += "    [\n";
        for (std::size_t j = 0; j < t.n; ++j) {
            out += "      [";
            for (std::size_t k = 0; k < t.n; ++k) {
                if (k > 0) out += ", ";
                out += entry_text(t.at(i, j, k));
            }
            out += j + 1 < t.n ? "],\n" : "]\n";
        }
        out += i + 1 < t.n ? "    ],\n" : "    ]\n";
    }
    out += "  ]\n}\n";
    return out;
}

void write_structure_tensor(const std::filesystem::path& path, const StructureTensor& t) {
    write_text_file(path, format_structure_tensor(t));
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path.string() + ": cannot open file for writing");
    out << text;
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace simdiag
