#include "pctk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "pctk/generators.hpp"
#include "pctk/hypothesis.hpp"
#include "pctk/indices.hpp"
#include "pctk/io.hpp"

namespace pctk {

namespace {

class Checker {
  public:
    explicit Checker(std::string name) { check_.name = std::move(name); }

    void expect(bool ok, const std::string& detail) {
        ++check_.cases;
        if (!ok) {
            ++check_.failures;
            if (check_.failure_details.size() < 16) check_.failure_details.push_back(detail);
        }
    }

    VerifyCheck take() { return std::move(check_); }

  private:
    VerifyCheck check_;
};

std::string cell(const FamilySpec& spec) {
    return family_spec_to_json(spec);
}

std::vector<FamilySpec> grid_specs(const VerifyOptions& opt) {
    std::vector<FamilySpec> specs;
    for (const int n : opt.n_values) {
        specs.push_back({Kind::CC, 1.0, n, 1, {}, {}});
        for (const double x : opt.x_values) {
            if (n >= 3) {
                specs.push_back({Kind::CPC, x, n, 1, {}, {}});
                specs.push_back({Kind::LPC, x, n, 1, {}, {}});
                specs.push_back({Kind::FPC, x, n, 1, {}, {}});
                for (int k = 1; 2 * k <= n - 1; ++k)
                    specs.push_back({Kind::CkPC, x, n, k, {}, {}});
            }
        }
    }
    return specs;
}

}  // namespace

bool VerifyReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.passed(); });
}

int VerifyReport::total_cases() const noexcept {
    int total = 0;
    for (const auto& c : checks) total += c.cases;
    return total;
}

VerifyReport run_verification(const VerifyOptions& opt) {
    Checker oracle_agreement("closed_form_vs_oracle");
    Checker cubic_residual("cpc_cubic_residual");
    Checker perron_bracket("perron_root_brackets");
    Checker even_chain("lpc_even_bound_chain");
    Checker containment("gerschgorin_containment");
    Checker maximal("maximal_ci_families");
    Checker circulant("circulant_spectrum_identities");

    const std::vector<FamilySpec> specs = grid_specs(opt);
    for (const FamilySpec& spec : specs) {
        const PcMatrix m = generate(spec);
        const SpectralResult sr = perron_power(m, opt.power);
        const double lambda = sr.lambda_max;

        if (const auto cf = closed_form_perron(spec))
            oracle_agreement.expect(std::abs(*cf - lambda) <= 1e-9 * lambda,
                                    cell(spec) + ": closed form " + format_double(*cf) +
                                        " vs oracle " + format_double(lambda));

        const auto sums = m.row_sums();
        const auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
        const double slack = 1e-9 * lambda;
        perron_bracket.expect(*lo - slack <= lambda && lambda <= *hi + slack,
                              cell(spec) + ": row-sum bracket");
        const auto [ag_lo, ag_hi] = ag_perron_bounds(m.max_entry_ratio(), spec.n);
        perron_bracket.expect(ag_lo - slack <= lambda && lambda <= ag_hi + slack,
                              cell(spec) + ": entry-ratio bracket");

        if (const auto eig = closed_form_spectrum(spec)) {
            const auto discs = gerschgorin_discs(m);
            containment.expect(spectrum_in_discs(*eig, discs), cell(spec) + ": containment");
        }

        if (spec.kind == Kind::CPC) {
            const CpcSpectrum s = cpc_spectrum(spec.x, spec.n);
            const double c = (spec.n - 2.0) * (spec.x - 1.0) * (spec.x - 1.0) / spec.x;
            const double root = s.roots.real_root;
            const double f = (root - spec.n) * root * root - c;
            const double scale = root * root * root + spec.n * root * root + c;
            cubic_residual.expect(std::abs(f) / scale <= 1e-9, cell(spec) + ": residual");
            const double root_sum = root + 2.0 * s.roots.complex_root.real();
            cubic_residual.expect(std::abs(root_sum - spec.n) <= 1e-10,
                                  cell(spec) + ": root sum " + format_double(root_sum));
        }

        if (spec.kind == Kind::LPC && spec.n % 2 == 0 && spec.x > 1.0) {
            const auto [r, R] = lpc_even_radii(spec.x, spec.n);
            const double mean = (r + R) / 2.0;
            even_chain.expect(1.0 + r - slack <= lambda && lambda < 1.0 + mean + slack,
                              cell(spec) + ": proven chain");
            const double upper = (spec.x - 1.0) * (spec.x - 1.0) / (2.0 * spec.x);
            const double lower = upper - (spec.x * spec.x - 1.0) / (2.0 * spec.x * (spec.n - 1.0));
            const double ci_val = ci(lambda, spec.n);
            even_chain.expect(lower - 1e-9 <= ci_val && ci_val < upper + 1e-9,
                              cell(spec) + ": CI sandwich");
        }

        if (spec.kind == Kind::LPC && spec.n % 2 == 1) {
            const double target = (spec.x - 1.0) * (spec.x - 1.0) / (2.0 * spec.x);
            const double cf_ci = ci(*closed_form_perron(spec), spec.n);
            maximal.expect(std::abs(cf_ci - target) <= 1e-13 * (1.0 + target),
                           cell(spec) + ": closed-form maximal CI");
            maximal.expect(std::abs(ci(lambda, spec.n) - target) <= 1e-9 * (1.0 + target),
                           cell(spec) + ": oracle maximal CI");
            // The same value must come from the circulant family at k = (n-1)/2.
            const FamilySpec twin{Kind::CkPC, spec.x, spec.n, (spec.n - 1) / 2, {}, {}};
            const auto pred = family_ci(twin);
            maximal.expect(pred.exact && std::abs(*pred.exact - target) <= 1e-13 * (1.0 + target),
                           cell(twin) + ": CkPC maximal CI");
        }

        if (m.detect_structure() == Structure::Circulant) {
            const CirculantRow row = circulant_row(m);
            const auto eig = circulant_spectrum(row);
            circulant.expect(std::abs(eig[0].real() - sums[0]) <= 1e-12 * sums[0] &&
                                 std::abs(eig[0].imag()) <= 1e-12 * sums[0],
                             cell(spec) + ": m = 0 row sum");
            std::complex<double> total{0.0, 0.0};
            for (const auto& z : eig) total += z;
            circulant.expect(std::abs(total - std::complex<double>(spec.n, 0.0)) <= 1e-10 * spec.n,
                             cell(spec) + ": trace");
        }

        if (spec.kind == Kind::LPC && spec.n % 2 == 1) {
            // The Perron root must sit on the single disc boundary.
            const auto discs = gerschgorin_discs(m);
            containment.expect(discs.size() == 1, cell(spec) + ": disc count");
            const double dist = std::abs(std::complex<double>(lambda, 0.0) - discs[0].center);
            containment.expect(std::abs(dist - discs[0].radius) <= 1e-9,
                               cell(spec) + ": boundary distance");
        }
    }

    VerifyReport report;
    report.checks.push_back(oracle_agreement.take());
    report.checks.push_back(cubic_residual.take());
    report.checks.push_back(perron_bracket.take());
    report.checks.push_back(even_chain.take());
    report.checks.push_back(containment.take());
    report.checks.push_back(maximal.take());
    report.checks.push_back(circulant.take());
    return report;
}

}  // namespace pctk
