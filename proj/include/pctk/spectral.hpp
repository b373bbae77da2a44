#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "pctk/generators.hpp"
#include "pctk/matrix.hpp"

namespace pctk {

struct PowerOptions {
    double tol = 1e-12;
    int max_iter = 200000;
};

struct SpectralResult {
    double lambda_max = 0.0;
    std::vector<double> perron_vector;  // strictly positive, unit sum
    int iterations = 0;
    double residual = 0.0;  // ||A v - lambda v||_inf / lambda
};

/// Power iteration for the Perron root of a positive matrix. Starts from the
/// uniform vector and stops once successive eigenvalue estimates agree to
/// tol * lambda and the residual is below tol.
SpectralResult perron_power(const PcMatrix& m, const PowerOptions& opt = {});

/// Eigenvalues lambda_m = sum_k c_k exp(-2*pi*i*m*k/n) for m = 0..n-1.
/// m = 0 yields the row sum, the Perron root of a positive circulant matrix.
std::vector<std::complex<double>> circulant_spectrum(const CirculantRow& row);

struct CubicRoots {
    double real_root = 0.0;
    std::complex<double> complex_root;  // the third root is its conjugate
};

/// Nonzero eigenvalues of CPC(x, n); 0 fills the remaining n - 3 slots.
struct CpcSpectrum {
    CubicRoots roots;
    int zero_multiplicity = 0;
};

/// Roots of the characteristic cubic lambda^3 - n*lambda^2 - (n-2)(x-1)^2/x
/// via Cardano's method with a Newton polish; the complex pair follows by
/// deflation.
CpcSpectrum cpc_spectrum(double x, int n);

/// Perron root in closed form where one exists: CC, odd-order LPC, CkPC, FPC
/// and CPC (through the cubic). Even-order LPC admits only bounds and yields
/// nullopt.
std::optional<double> closed_form_perron(const FamilySpec& spec);

/// Full spectrum where computable: circulant families (CC, odd-order LPC,
/// CkPC) through the circulant formula, CPC through the cubic plus zeros.
std::optional<std::vector<std::complex<double>>> closed_form_spectrum(const FamilySpec& spec);

struct GerschgorinDisc {
    std::complex<double> center;  // 1 + 0i for a PC matrix
    double radius = 0.0;          // row sum minus the diagonal entry
};

/// Distinct Gerschgorin discs of the matrix, ascending by radius. Radii equal
/// within a relative 1e-9 collapse to one disc.
std::vector<GerschgorinDisc> gerschgorin_discs(const PcMatrix& m);

/// True iff every eigenvalue lies in the union of the closed discs, with
/// slack * (1 + radius) of float headroom at each boundary.
bool spectrum_in_discs(std::span<const std::complex<double>> eigenvalues,
                       std::span<const GerschgorinDisc> discs, double slack = 1e-9);

}  // namespace pctk
