#include "pctk/indices.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pctk {

double ci(double lambda_max, int n) {
    if (n < 2) fail(Errc::BadOrder, "order must be at least 2, got " + std::to_string(n));
    if (!std::isfinite(lambda_max) || lambda_max < n - 1e-9)
        fail(Errc::BadInput, "lambda_max = " + std::to_string(lambda_max) +
                                 " below the Perron floor n = " + std::to_string(n));
    return std::max(0.0, (lambda_max - n) / (n - 1));
}

double kii(const PcMatrix& m) {
    const int n = m.order();
    if (n < 3) return 0.0;  // no triads
    // Ordered triads i<j<k suffice: the expression is invariant under the
    // reciprocal swap of any index pair.
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const double q = m.at(i, k) / (m.at(i, j) * m.at(j, k));
                worst = std::max(worst, 1.0 - std::min(q, 1.0 / q));
            }
    return worst;
}

double ci_upper_bound(double x) {
    if (!(x >= 1.0) || !std::isfinite(x)) fail(Errc::BadInput, "entry ratio x must be >= 1");
    return (x - 1.0) * (x - 1.0) / (2.0 * x);
}

std::pair<double, double> ag_perron_bounds(double x, int n) {
    if (n < 2) fail(Errc::BadOrder, "order must be at least 2");
    if (!(x >= 1.0) || !std::isfinite(x)) fail(Errc::BadInput, "entry ratio x must be >= 1");
    return {static_cast<double>(n), 1.0 + (n - 1) / 2.0 * (x + 1.0 / x)};
}

double fpc_ci_limit(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) fail(Errc::BadInput, "x must be finite and positive");
    if (x == 1.0) return 0.0;  // consistent limit
    return (x * x - 1.0) / (2.0 * x * std::log(x)) - 1.0;
}

CiPrediction family_ci(const FamilySpec& spec) {
    validate_spec(spec);
    const double x = spec.x;
    const double dn = static_cast<double>(spec.n);
    CiPrediction out;
    switch (spec.kind) {
        case Kind::CC:
            out.exact = 0.0;
            break;
        case Kind::LPC:
            if (spec.n % 2 == 1) {
                out.exact = (x - 1.0) * (x - 1.0) / (2.0 * x);
            } else {
                const double upper = (x - 1.0) * (x - 1.0) / (2.0 * x);
                const double lower = upper - (x * x - 1.0) / (2.0 * x * (dn - 1.0));
                out.bounds = {lower, upper};
            }
            break;
        case Kind::CkPC:
            out.exact = spec.k / (dn - 1.0) * (x - 1.0) * (x - 1.0) / x;
            break;
        case Kind::FPC:
            if (spec.n == 3) {
                const double cbx = std::cbrt(x);
                out.exact = (cbx - 1.0) * (cbx - 1.0) / (2.0 * cbx);
            } else {
                out.exact = ci(*closed_form_perron(spec), spec.n);
            }
            break;
        case Kind::CPC: {
            const double coarse = x / (dn * dn);
            const double improved = (dn - 2.0) / (dn * dn * (dn - 1.0)) * (x - 1.0) * (x - 1.0) / x;
            out.bounds = {0.0, std::min(coarse, improved)};
            break;
        }
    }
    return out;
}

ConsistencyReport analyze(const PcMatrix& m, const std::optional<FamilySpec>& spec,
                          const PowerOptions& opt) {
    ConsistencyReport rep;
    rep.n = m.order();
    const double ratio = m.max_entry_ratio();
    rep.x = spec && spec->kind != Kind::CC ? spec->x : ratio;

    const SpectralResult sr = perron_power(m, opt);
    rep.lambda_max = sr.lambda_max;
    rep.ci = ci(sr.lambda_max, rep.n);
    rep.kii = kii(m);
    rep.ci_upper = ci_upper_bound(ratio);
    rep.ag_bounds = ag_perron_bounds(ratio, rep.n);

    const double tol = 1e-12 * (1.0 + rep.ci);
    rep.estimates.push_back(
        {"ci_upper_entry_ratio", rep.ci_upper, true, rep.ci <= rep.ci_upper + tol});

    if (spec) {
        const CiPrediction pred = family_ci(*spec);
        if (spec->kind == Kind::CPC) {
            // The exact CPC value comes from the cubic; the family prediction
            // contributes its two estimates.
            rep.closed_form_ci = ci(cpc_spectrum(spec->x, spec->n).roots.real_root, spec->n);
            const double dn = static_cast<double>(spec->n);
            const double coarse = spec->x / (dn * dn);
            const double improved =
                (dn - 2.0) / (dn * dn * (dn - 1.0)) * (spec->x - 1.0) * (spec->x - 1.0) / spec->x;
            rep.estimates.push_back({"cpc_ci_upper", coarse, true, rep.ci <= coarse + tol});
            rep.estimates.push_back(
                {"cpc_ci_upper_improved", improved, true, rep.ci <= improved + tol});
        } else if (pred.exact) {
            rep.closed_form_ci = *pred.exact;
        }
        if (spec->kind == Kind::LPC && spec->n % 2 == 0 && pred.bounds) {
            rep.estimates.push_back(
                {"lpc_even_ci_lower", pred.bounds->first, false, rep.ci >= pred.bounds->first - tol});
            rep.estimates.push_back(
                {"lpc_even_ci_upper", pred.bounds->second, true, rep.ci <= pred.bounds->second + tol});
        }
    }
    return rep;
}

}  // namespace pctk
