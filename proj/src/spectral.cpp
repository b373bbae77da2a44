#include "pctk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace pctk {

namespace {

double cubic_value(double lambda, double n, double c) {
    return (lambda - n) * lambda * lambda - c;
}

double cubic_relative_residual(double lambda, double n, double c) {
    const double scale = std::abs(lambda * lambda * lambda) + n * lambda * lambda + std::abs(c);
    return std::abs(cubic_value(lambda, n, c)) / scale;
}

}  // namespace

SpectralResult perron_power(const PcMatrix& m, const PowerOptions& opt) {
    if (!(opt.tol > 0.0) || !std::isfinite(opt.tol))
        fail(Errc::BadInput, "tolerance must be finite and positive");
    if (opt.max_iter < 1) fail(Errc::BadInput, "max_iter must be at least 1");

    const int n = m.order();
    std::vector<double> v(n, 1.0 / n), w(n);
    double lambda_prev = 0.0;
    double residual = 0.0;
    for (int it = 1; it <= opt.max_iter; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += m.at(i, j) * v[j];
            w[i] = s;
        }
        // v has unit sum, so the sum of A*v estimates the Perron root.
        double lambda = 0.0;
        for (const double wi : w) lambda += wi;
        residual = 0.0;
        for (int i = 0; i < n; ++i) residual = std::max(residual, std::abs(w[i] - lambda * v[i]));
        residual /= lambda;
        if (std::abs(lambda - lambda_prev) <= opt.tol * lambda && residual <= opt.tol)
            return SpectralResult{lambda, std::move(v), it, residual};
        lambda_prev = lambda;
        for (int i = 0; i < n; ++i) v[i] = w[i] / lambda;
    }
    fail(Errc::NoConvergence, "no convergence after " + std::to_string(opt.max_iter) +
                                  " iterations, last residual " + std::to_string(residual));
}

std::vector<std::complex<double>> circulant_spectrum(const CirculantRow& row) {
    const int n = row.order();
    if (n < 1) fail(Errc::OrderTooSmall, "empty circulant row");
    std::vector<std::complex<double>> eig(n);
    for (int m = 0; m < n; ++m) {
        double re = 0.0, im = 0.0;
        for (int k = 0; k < n; ++k) {
            // Reduce m*k mod n before forming the angle.
            const long long mk = static_cast<long long>(m) * k % n;
            const double theta = -2.0 * std::numbers::pi * static_cast<double>(mk) / n;
            re += row.c[k] * std::cos(theta);
            im += row.c[k] * std::sin(theta);
        }
        eig[m] = {re, im};
    }
    return eig;
}

CpcSpectrum cpc_spectrum(double x, int n) {
    if (!(x > 0.0) || !std::isfinite(x)) fail(Errc::BadInput, "x must be finite and positive");
    if (x == 1.0) fail(Errc::DegenerateX, "x = 1 yields the consistent matrix with root n");
    if (n < 3) fail(Errc::OrderTooSmall, "CPC needs n >= 3");

    // Nonzero eigenvalues solve lambda^3 - n lambda^2 - c = 0 with
    // c = (n-2)(x-1)^2/x > 0. Depressing by lambda = t + n/3 gives
    // t^3 + p t + q, p = -n^2/3, q = -(2n^3/27 + c); Cardano's real root is
    // B + n^2/(9B) + n/3 with B^3 = n^3/27 + c/2 + sqrt(n^3 c/27 + c^2/4).
    // Every term of B^3 is positive, so this branch has no cancellation for
    // any x > 0, on either side of 1.
    const double dn = static_cast<double>(n);
    const double c = (dn - 2.0) * (x - 1.0) * (x - 1.0) / x;
    const double b3 = dn * dn * dn / 27.0 + c / 2.0 + std::sqrt(dn * dn * dn * c / 27.0 + c * c / 4.0);
    const double b = std::cbrt(b3);
    double lambda = b + dn * dn / (9.0 * b) + dn / 3.0;

    // Newton polish against the cubic; one or two steps at most.
    for (int it = 0; it < 8; ++it) {
        if (cubic_relative_residual(lambda, dn, c) < 1e-16) break;
        const double f = cubic_value(lambda, dn, c);
        const double fp = 3.0 * lambda * lambda - 2.0 * dn * lambda;
        if (fp == 0.0) break;
        lambda -= f / fp;
    }

    // Deflate: lambda^2 + (lambda1 - n) lambda + c/lambda1 holds the pair.
    const double half = (dn - lambda) / 2.0;
    const double disc = 4.0 * c / lambda - (lambda - dn) * (lambda - dn);
    const double imag = disc > 0.0 ? std::sqrt(disc) / 2.0 : 0.0;

    CpcSpectrum result;
    result.roots.real_root = lambda;
    result.roots.complex_root = {half, imag};
    result.zero_multiplicity = n - 3;
    return result;
}

std::optional<double> closed_form_perron(const FamilySpec& spec) {
    validate_spec(spec);
    const double x = spec.x;
    const double dn = static_cast<double>(spec.n);
    switch (spec.kind) {
        case Kind::CC:
            return dn;
        case Kind::LPC:
            if (spec.n % 2 == 0) return std::nullopt;  // only bounds exist
            return 1.0 + (dn - 1.0) / 2.0 * (x + 1.0 / x);
        case Kind::CkPC:
            return dn + spec.k * (x - 1.0) * (x - 1.0) / x;
        case Kind::FPC: {
            if (x == 1.0) return dn;  // removable singularity
            const double xp = std::exp(2.0 / dn * std::log(x));
            return (x - 1.0) / x * (x + xp) / (xp - 1.0);
        }
        case Kind::CPC:
            return cpc_spectrum(x, spec.n).roots.real_root;
    }
    return std::nullopt;
}

std::optional<std::vector<std::complex<double>>> closed_form_spectrum(const FamilySpec& spec) {
    validate_spec(spec);
    switch (spec.kind) {
        case Kind::CC:
        case Kind::CkPC:
            return circulant_spectrum(circulant_row(generate(spec)));
        case Kind::LPC:
            if (spec.n % 2 == 0) return std::nullopt;
            return circulant_spectrum(circulant_row(generate(spec)));
        case Kind::CPC: {
            const CpcSpectrum s = cpc_spectrum(spec.x, spec.n);
            std::vector<std::complex<double>> eig;
            eig.reserve(spec.n);
            eig.emplace_back(s.roots.real_root, 0.0);
            eig.push_back(s.roots.complex_root);
            eig.push_back(std::conj(s.roots.complex_root));
            for (int i = 0; i < s.zero_multiplicity; ++i) eig.emplace_back(0.0, 0.0);
            return eig;
        }
        case Kind::FPC:
            return std::nullopt;  // not circulant for x != 1; no closed spectrum
    }
    return std::nullopt;
}

std::vector<GerschgorinDisc> gerschgorin_discs(const PcMatrix& m) {
    const int n = m.order();
    std::vector<GerschgorinDisc> discs;
    discs.reserve(n);
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) radius += std::abs(m.at(i, j));
        discs.push_back({{m.at(i, i), 0.0}, radius});
    }
    std::sort(discs.begin(), discs.end(),
              [](const GerschgorinDisc& a, const GerschgorinDisc& b) { return a.radius < b.radius; });
    std::vector<GerschgorinDisc> unique;
    for (const auto& d : discs) {
        if (!unique.empty()) {
            const auto& last = unique.back();
            const double tol = 1e-9 * std::max(1.0, d.radius);
            if (std::abs(last.radius - d.radius) <= tol &&
                std::abs(last.center.real() - d.center.real()) <= tol)
                continue;
        }
        unique.push_back(d);
    }
    return unique;
}

bool spectrum_in_discs(std::span<const std::complex<double>> eigenvalues,
                       std::span<const GerschgorinDisc> discs, double slack) {
    for (const auto& z : eigenvalues) {
        bool inside = false;
        for (const auto& d : discs)
            if (std::abs(z - d.center) <= d.radius + slack * (1.0 + d.radius)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

}  // namespace pctk
