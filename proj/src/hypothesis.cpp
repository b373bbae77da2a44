#include "pctk/hypothesis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pctk/generators.hpp"

namespace pctk {

std::pair<double, double> lpc_even_radii(double x, int n) {
    if (n < 4 || n % 2 != 0) fail(Errc::OddOrder, "even order n >= 4 required, got " + std::to_string(n));
    if (!(x > 1.0) || !std::isfinite(x)) fail(Errc::XNotAboveOne, "x > 1 required");
    const double base = n / 2.0 * (x + 1.0 / x);
    return {base - x, base - 1.0 / x};
}

HypothesisRow check_hypothesis(double x, int n, const PowerOptions& opt) {
    const auto [r, R] = lpc_even_radii(x, n);
    const double harmonic = 2.0 * r * R / (r + R);
    const double geometric = std::sqrt(r * R);
    const double arithmetic = (r + R) / 2.0;

    const SpectralResult sr = perron_power(gen_lpc(x, n), opt);
    const double lambda = sr.lambda_max;
    const double slack = 10.0 * opt.tol * lambda;

    // Row-sum bracket plus the strict arithmetic-mean cap is proven fact; a
    // violation can only be an implementation defect.
    if (!(1.0 + r - slack <= lambda && lambda < 1.0 + arithmetic + slack))
        throw std::logic_error("proven Perron bound chain violated at x = " + std::to_string(x) +
                               ", n = " + std::to_string(n));

    HypothesisRow row;
    row.x = x;
    row.n = n;
    row.r = r;
    row.R = R;
    row.h_bound = 1.0 + harmonic;
    row.lambda_max = lambda;
    row.g_bound = 1.0 + geometric;
    row.lower_margin = lambda - row.h_bound;
    row.upper_margin = row.g_bound - lambda;
    row.holds = row.h_bound - slack <= lambda && lambda <= row.g_bound + slack;
    return row;
}

std::vector<HypothesisRow> sweep_table(const std::vector<double>& x_values,
                                       const std::vector<int>& n_values,
                                       const PowerOptions& opt) {
    std::vector<HypothesisRow> rows;
    rows.reserve(x_values.size() * n_values.size());
    for (const double x : x_values)
        for (const int n : n_values) rows.push_back(check_hypothesis(x, n, opt));
    return rows;
}

namespace {

void require_increasing_x(const std::vector<double>& xs) {
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) fail(Errc::BadInput, "x grid must be strictly increasing");
}

void require_increasing_n(const std::vector<int>& ns) {
    for (const int n : ns)
        if (n < 4 || n % 2 != 0) fail(Errc::OddOrder, "n grid must hold even orders >= 4");
    for (std::size_t i = 1; i < ns.size(); ++i)
        if (!(ns[i] > ns[i - 1])) fail(Errc::BadInput, "n grid must be strictly increasing");
}

}  // namespace

std::vector<MonotonicityViolation> monotonicity_probe(const std::vector<double>& x_values,
                                                      const std::vector<int>& n_values,
                                                      const PowerOptions& opt) {
    require_increasing_x(x_values);
    require_increasing_n(n_values);

    const auto lambda_of = [&](double x, int n) { return perron_power(gen_lpc(x, n), opt).lambda_max; };

    std::vector<MonotonicityViolation> violations;
    // Flag only decreases distinguishable from oracle noise.
    for (const int n : n_values)
        for (std::size_t i = 1; i < x_values.size(); ++i) {
            const double a = lambda_of(x_values[i - 1], n);
            const double b = lambda_of(x_values[i], n);
            if (b < a - 10.0 * opt.tol * a)
                violations.push_back({'x', x_values[i - 1], x_values[i], n, n, a, b});
        }
    for (const double x : x_values)
        for (std::size_t i = 1; i < n_values.size(); ++i) {
            const double a = lambda_of(x, n_values[i - 1]);
            const double b = lambda_of(x, n_values[i]);
            if (b < a - 10.0 * opt.tol * a)
                violations.push_back({'n', x, x, n_values[i - 1], n_values[i], a, b});
        }
    return violations;
}

}  // namespace pctk
