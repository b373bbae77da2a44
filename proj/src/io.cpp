#include "pctk/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace pctk {

using nlohmann::json;

std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

namespace {

double parse_double(std::string_view token, int line_no) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    while (last != first && (*(last - 1) == ' ' || *(last - 1) == '\t' || *(last - 1) == '\r')) --last;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        fail(Errc::ParseError, "line " + std::to_string(line_no) + ": bad number '" +
                                   std::string(token) + "'");
    return value;
}

json spec_to_json_obj(const FamilySpec& spec) {
    json j;
    j["kind"] = kind_name(spec.kind);
    if (spec.kind != Kind::CC) j["x"] = spec.x;
    j["n"] = spec.n;
    if (spec.kind == Kind::CkPC) j["k"] = spec.k;
    if (spec.placement) j["placement"] = {spec.placement->first, spec.placement->second};
    if (spec.offsets) j["offsets"] = *spec.offsets;
    return j;
}

json hypothesis_row_to_json_obj(const HypothesisRow& row) {
    return json{{"x", row.x},
                {"n", row.n},
                {"r", row.r},
                {"R", row.R},
                {"one_plus_H", row.h_bound},
                {"lambda_max", row.lambda_max},
                {"one_plus_G", row.g_bound},
                {"lower_margin", row.lower_margin},
                {"upper_margin", row.upper_margin},
                {"holds", row.holds}};
}

}  // namespace

std::string matrix_to_csv(const PcMatrix& m) {
    std::string out;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) out += ',';
            out += format_double(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string matrix_to_json(const PcMatrix& m) {
    json j;
    j["n"] = m.order();
    j["entries"] = m.rows();
    return j.dump();
}

PcMatrix read_matrix_csv(std::istream& in, double reciprocity_tol) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::string_view token =
                std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos
                                                                                : comma - start);
            row.push_back(parse_double(token, line_no));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) fail(Errc::ParseError, "empty matrix file");
    return PcMatrix::from_rows(rows, reciprocity_tol);
}

PcMatrix read_matrix_json(std::istream& in, double reciprocity_tol) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(Errc::ParseError, e.what());
    }
    if (!j.is_object() || !j.contains("entries"))
        fail(Errc::ParseError, "expected an object with an 'entries' array");
    std::vector<std::vector<double>> rows;
    try {
        rows = j["entries"].get<std::vector<std::vector<double>>>();
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("entries: ") + e.what());
    }
    if (j.contains("n") && j["n"].is_number_integer() &&
        j["n"].get<int>() != static_cast<int>(rows.size()))
        fail(Errc::NonSquare, "declared n does not match the entry grid");
    return PcMatrix::from_rows(rows, reciprocity_tol);
}

PcMatrix load_matrix(const std::filesystem::path& path, double reciprocity_tol) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open " + path.string());
    if (path.extension() == ".json") return read_matrix_json(in, reciprocity_tol);
    return read_matrix_csv(in, reciprocity_tol);
}

std::string family_spec_to_json(const FamilySpec& spec) {
    return spec_to_json_obj(spec).dump();
}

FamilySpec family_spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(Errc::ParseError, e.what());
    }
    FamilySpec spec;
    if (!j.contains("kind") || !j["kind"].is_string())
        fail(Errc::ParseError, "family spec needs a 'kind' string");
    const auto kind = kind_from_name(j["kind"].get<std::string>());
    if (!kind) fail(Errc::ParseError, "unknown family kind '" + j["kind"].get<std::string>() + "'");
    spec.kind = *kind;
    if (j.contains("x")) spec.x = j["x"].get<double>();
    if (j.contains("n")) spec.n = j["n"].get<int>();
    if (j.contains("k")) spec.k = j["k"].get<int>();
    if (j.contains("placement")) {
        const auto p = j["placement"].get<std::vector<int>>();
        if (p.size() != 2) fail(Errc::ParseError, "placement must be a pair [i, j]");
        spec.placement = {p[0], p[1]};
    }
    if (j.contains("offsets")) spec.offsets = j["offsets"].get<std::vector<int>>();
    validate_spec(spec);
    return spec;
}

std::string spectral_result_to_json(const SpectralResult& result) {
    json j;
    j["lambda_max"] = result.lambda_max;
    j["perron_vector"] = result.perron_vector;
    j["iterations"] = result.iterations;
    j["residual"] = result.residual;
    return j.dump();
}

std::string spectrum_to_json(std::span<const std::complex<double>> eigenvalues) {
    json j = json::array();
    for (const auto& z : eigenvalues) j.push_back({z.real(), z.imag()});
    return j.dump();
}

std::string report_to_json(const ConsistencyReport& report) {
    json j;
    j["n"] = report.n;
    j["x"] = report.x;
    j["lambda_max"] = report.lambda_max;
    j["ci"] = report.ci;
    j["kii"] = report.kii;
    j["ci_upper"] = report.ci_upper;
    j["ag_bounds"] = {report.ag_bounds.first, report.ag_bounds.second};
    if (report.closed_form_ci)
        j["closed_form_ci"] = *report.closed_form_ci;
    else
        j["closed_form_ci"] = nullptr;
    json estimates = json::array();
    for (const auto& e : report.estimates)
        estimates.push_back({{"name", e.name},
                             {"value", e.value},
                             {"is_upper", e.is_upper},
                             {"satisfied", e.satisfied}});
    j["estimates"] = std::move(estimates);
    return j.dump();
}

std::string hypothesis_rows_to_csv(std::span<const HypothesisRow> rows) {
    std::string out =
        "x,n,r,R,one_plus_H,lambda_max,one_plus_G,lower_margin,upper_margin,holds\n";
    for (const auto& row : rows) {
        out += format_double(row.x);
        out += ',';
        out += std::to_string(row.n);
        for (const double v : {row.r, row.R, row.h_bound, row.lambda_max, row.g_bound,
                               row.lower_margin, row.upper_margin}) {
            out += ',';
            out += format_double(v);
        }
        out += ',';
        out += row.holds ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string hypothesis_rows_to_json(std::span<const HypothesisRow> rows) {
    json j = json::array();
    for (const auto& row : rows) j.push_back(hypothesis_row_to_json_obj(row));
    return j.dump();
}

}  // namespace pctk
