#include "pctk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "pctk/generators.hpp"
#include "pctk/hypothesis.hpp"
#include "pctk/indices.hpp"
#include "pctk/io.hpp"
#include "pctk/svg.hpp"
#include "pctk/verify.hpp"

namespace pctk {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

double to_double(const std::string& token) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        fail(Errc::ParseError, "bad number '" + token + "'");
    }
}

int to_int(const std::string& token) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        fail(Errc::ParseError, "bad integer '" + token + "'");
    }
}

}  // namespace

std::vector<double> parse_value_grid(const std::string& text) {
    if (text.empty()) fail(Errc::ParseError, "empty grid");
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) fail(Errc::ParseError, "range must be a:b:step, got '" + text + "'");
        const double a = to_double(parts[0]), b = to_double(parts[1]), s = to_double(parts[2]);
        if (!(s > 0.0)) fail(Errc::ParseError, "range step must be positive");
        if (b < a) fail(Errc::ParseError, "range end below start");
        std::vector<double> grid;
        for (double v = a; v <= b + 1e-9 * s; v += s) grid.push_back(std::min(v, b));
        return grid;
    }
    std::vector<double> grid;
    for (const auto& token : split(text, ',')) grid.push_back(to_double(token));
    return grid;
}

std::vector<int> parse_order_grid(const std::string& text) {
    if (text.empty()) fail(Errc::ParseError, "empty grid");
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) fail(Errc::ParseError, "range must be a:b:step, got '" + text + "'");
        const int a = to_int(parts[0]), b = to_int(parts[1]), s = to_int(parts[2]);
        if (s <= 0) fail(Errc::ParseError, "range step must be positive");
        if (b < a) fail(Errc::ParseError, "range end below start");
        std::vector<int> grid;
        for (int v = a; v <= b; v += s) grid.push_back(v);
        return grid;
    }
    std::vector<int> grid;
    for (const auto& token : split(text, ',')) grid.push_back(to_int(token));
    return grid;
}

namespace {

struct FamilyFlags {
    std::string kind;
    double x = 2.0;
    int n = 5;
    int k = 1;
    std::string placement;
    std::string offsets;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& flags, bool kind_required) {
    auto* kind = cmd->add_option("--kind", flags.kind, "family: cc, cpc, lpc, ckpc or fpc");
    if (kind_required) kind->required();
    cmd->add_option("--x", flags.x, "family parameter x > 0");
    cmd->add_option("--n", flags.n, "matrix order");
    cmd->add_option("--k", flags.k, "number of deviating offsets (ckpc)");
    cmd->add_option("--placement", flags.placement, "deviating pair i,j (cpc; 1-based)");
    cmd->add_option("--offsets", flags.offsets, "comma list of cyclic offsets (ckpc)");
}

FamilySpec build_spec(const FamilyFlags& flags) {
    const auto kind = kind_from_name(flags.kind);
    if (!kind) fail(Errc::ParseError, "unknown family kind '" + flags.kind + "'");
    FamilySpec spec;
    spec.kind = *kind;
    spec.x = flags.x;
    spec.n = flags.n;
    spec.k = flags.k;
    if (!flags.placement.empty()) {
        const auto parts = split(flags.placement, ',');
        if (parts.size() != 2) fail(Errc::ParseError, "placement must be i,j");
        spec.placement = {to_int(parts[0]), to_int(parts[1])};
    }
    if (!flags.offsets.empty()) {
        std::vector<int> offsets;
        for (const auto& token : split(flags.offsets, ',')) offsets.push_back(to_int(token));
        spec.offsets = std::move(offsets);
    }
    validate_spec(spec);
    return spec;
}

void write_output(const std::string& content, const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
        fallback << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) fail(Errc::ParseError, "cannot write " + path);
    file << content;
}

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
    return true;
}

bool strictly_increasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
    return true;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"pairwise-comparison matrix toolkit: generators, spectra, consistency indices"};
    app.name("pctk");
    app.require_subcommand(1);

    FamilyFlags gen_flags;
    std::string gen_format = "csv", gen_out;
    auto* gen = app.add_subcommand("gen", "generate a family matrix");
    add_family_flags(gen, gen_flags, true);
    gen->add_option("--format", gen_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    gen->add_option("--out", gen_out, "output path (default stdout)");

    FamilyFlags analyze_flags;
    std::string analyze_input, analyze_out;
    double analyze_tol = 1e-12;
    int analyze_max_iter = 200000;
    auto* analyze_cmd = app.add_subcommand("analyze", "consistency report for a matrix");
    add_family_flags(analyze_cmd, analyze_flags, false);
    analyze_cmd->add_option("--input", analyze_input, "matrix file (.csv or .json)");
    analyze_cmd->add_option("--out", analyze_out, "output path (default stdout)");
    analyze_cmd->add_option("--tol", analyze_tol, "oracle tolerance");
    analyze_cmd->add_option("--max-iter", analyze_max_iter, "oracle iteration cap");

    std::string sweep_x = "2:9:1", sweep_n = "4,6,12", sweep_format = "csv", sweep_out;
    bool sweep_strict = false;
    double sweep_tol = 1e-12;
    int sweep_max_iter = 200000;
    auto* sweep = app.add_subcommand("sweep", "even-order LPC Perron-root sweep with mean bounds");
    sweep->add_option("--x", sweep_x, "x grid (a:b:s or comma list)");
    sweep->add_option("--n", sweep_n, "even order grid");
    sweep->add_option("--format", sweep_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", sweep_out, "output path (default stdout)");
    sweep->add_flag("--strict", sweep_strict, "fail on conjectured-bound violations");
    sweep->add_option("--tol", sweep_tol, "oracle tolerance");
    sweep->add_option("--max-iter", sweep_max_iter, "oracle iteration cap");

    std::string verify_x = "1.25,1.5,2,3,5,9", verify_n = "3:12:1";
    double verify_tol = 1e-12;
    int verify_max_iter = 200000;
    auto* verify = app.add_subcommand("verify", "check every closed form against the oracle");
    verify->add_option("--x", verify_x, "x grid");
    verify->add_option("--n", verify_n, "order grid");
    verify->add_option("--tol", verify_tol, "oracle tolerance");
    verify->add_option("--max-iter", verify_max_iter, "oracle iteration cap");

    FamilyFlags discs_flags;
    std::string discs_input, discs_out;
    auto* discs = app.add_subcommand("discs", "Gerschgorin disc picture as SVG");
    add_family_flags(discs, discs_flags, false);
    discs->add_option("--input", discs_input, "matrix file (.csv or .json)");
    discs->add_option("--out", discs_out, "output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            const PcMatrix m = generate(build_spec(gen_flags));
            write_output(gen_format == "json" ? matrix_to_json(m) + "\n" : matrix_to_csv(m),
                         gen_out, out);
            return 0;
        }

        if (analyze_cmd->parsed()) {
            if (analyze_input.empty() == analyze_flags.kind.empty())
                fail(Errc::ParseError, "analyze needs exactly one of --input or --kind");
            const PowerOptions opt{analyze_tol, analyze_max_iter};
            ConsistencyReport report;
            if (!analyze_input.empty()) {
                report = pctk::analyze(load_matrix(analyze_input), std::nullopt, opt);
            } else {
                const FamilySpec spec = build_spec(analyze_flags);
                report = pctk::analyze(generate(spec), spec, opt);
            }
            write_output(report_to_json(report) + "\n", analyze_out, out);
            return 0;
        }

        if (sweep->parsed()) {
            const auto xs = parse_value_grid(sweep_x);
            const auto ns = parse_order_grid(sweep_n);
            const PowerOptions opt{sweep_tol, sweep_max_iter};
            const auto rows = sweep_table(xs, ns, opt);
            write_output(sweep_format == "json" ? hypothesis_rows_to_json(rows) + "\n"
                                                : hypothesis_rows_to_csv(rows),
                         sweep_out, out);
            if (sweep_strict) {
                int violations = 0;
                for (const auto& row : rows)
                    if (!row.holds) {
                        ++violations;
                        err << "conjecture violation at x = " << format_double(row.x)
                            << ", n = " << row.n << "\n";
                    }
                if (strictly_increasing(xs) && strictly_increasing(ns)) {
                    for (const auto& v : monotonicity_probe(xs, ns, opt)) {
                        ++violations;
                        err << "monotonicity violation along " << v.axis << ": lambda("
                            << format_double(v.x_from) << "," << v.n_from << ") = "
                            << format_double(v.lambda_from) << " -> lambda("
                            << format_double(v.x_to) << "," << v.n_to << ") = "
                            << format_double(v.lambda_to) << "\n";
                    }
                }
                if (violations > 0) return 1;
            }
            return 0;
        }

        if (verify->parsed()) {
            VerifyOptions opt;
            opt.x_values = parse_value_grid(verify_x);
            opt.n_values = parse_order_grid(verify_n);
            opt.power = PowerOptions{verify_tol, verify_max_iter};
            const VerifyReport report = run_verification(opt);
            for (const auto& check : report.checks) {
                if (check.passed()) {
                    out << "PASS " << check.name << " (" << check.cases << " cases)\n";
                } else {
                    out << "FAIL " << check.name << " (" << check.failures << "/" << check.cases
                        << " failed)\n";
                    for (const auto& detail : check.failure_details) err << "  " << detail << "\n";
                }
            }
            out << (report.all_passed() ? "all checks passed" : "checks FAILED") << " ("
                << report.total_cases() << " cases)\n";
            return report.all_passed() ? 0 : 1;
        }

        if (discs->parsed()) {
            if (discs_input.empty() == discs_flags.kind.empty())
                fail(Errc::ParseError, "discs needs exactly one of --input or --kind");
            std::vector<GerschgorinDisc> disc_list;
            std::vector<std::complex<double>> eigenvalues;
            if (!discs_input.empty()) {
                const PcMatrix m = load_matrix(discs_input);
                disc_list = gerschgorin_discs(m);
                if (m.detect_structure() == Structure::Circulant)
                    eigenvalues = circulant_spectrum(circulant_row(m));
                else
                    eigenvalues = {{perron_power(m).lambda_max, 0.0}};
            } else {
                const FamilySpec spec = build_spec(discs_flags);
                const PcMatrix m = generate(spec);
                disc_list = gerschgorin_discs(m);
                if (const auto eig = closed_form_spectrum(spec))
                    eigenvalues = *eig;
                else
                    eigenvalues = {{perron_power(m).lambda_max, 0.0}};
            }
            write_output(disc_plot_svg(disc_list, eigenvalues), discs_out, out);
            return 0;
        }
    } catch (const PcError& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::NoConvergence ? 1 : 2;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace pctk
