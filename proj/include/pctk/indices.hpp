#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pctk/generators.hpp"
#include "pctk/matrix.hpp"
#include "pctk/spectral.hpp"

namespace pctk {

/// Eigenvalue-based consistency index (lambda_max - n) / (n - 1).
/// Negative float noise up to 1e-9 is clamped to 0.
double ci(double lambda_max, int n);

/// Distance-based inconsistency index: worst relative triad violation,
/// max over triads of 1 - min(a_ik/(a_ij a_jk), (a_ij a_jk)/a_ik). In [0, 1).
double kii(const PcMatrix& m);

/// Upper bound (x-1)^2 / (2x) on CI for matrices with entries in [1/x, x].
double ci_upper_bound(double x);

/// Perron root bracket (n, 1 + (n-1)/2 * (x + 1/x)).
std::pair<double, double> ag_perron_bounds(double x, int n);

/// Limit of CI(FPC(x, n)) for n -> inf: (x^2 - 1)/(2 x ln x) - 1.
/// Returns 0 at x = 1, the consistent limit.
double fpc_ci_limit(double x);

/// Closed-form CI prediction of a family member: an exact value, a bounds
/// pair, or both absent when only generic bounds apply.
struct CiPrediction {
    std::optional<double> exact;
    std::optional<std::pair<double, double>> bounds;
};

CiPrediction family_ci(const FamilySpec& spec);

/// One named bound with the direction it constrains and whether it held.
struct Estimate {
    std::string name;
    double value = 0.0;
    bool is_upper = true;
    bool satisfied = false;
};

struct ConsistencyReport {
    int n = 0;
    double x = 1.0;  // family parameter, or max entry ratio without one
    double lambda_max = 0.0;
    double ci = 0.0;
    double kii = 0.0;
    double ci_upper = 0.0;  // (x-1)^2/(2x) at x = max entry ratio
    std::pair<double, double> ag_bounds{0.0, 0.0};
    std::optional<double> closed_form_ci;
    std::vector<Estimate> estimates;
};

/// Full index report: oracle Perron root, CI, Kii, the generic bounds, and
/// when a family spec is supplied, its closed forms and estimates with a
/// satisfied flag each. The CPC closed-form CI comes from the cubic root.
ConsistencyReport analyze(const PcMatrix& m, const std::optional<FamilySpec>& spec = {},
                          const PowerOptions& opt = {});

}  // namespace pctk
