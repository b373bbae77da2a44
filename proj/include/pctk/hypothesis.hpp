#pragma once

#include <utility>
#include <vector>

#include "pctk/spectral.hpp"

namespace pctk {

/// One grid cell of the even-order LPC study: the two Gerschgorin radii,
/// the conjectured harmonic/geometric-mean bracket around the Perron root,
/// and the margins to both ends.
struct HypothesisRow {
    double x = 0.0;
    int n = 0;
    double r = 0.0;
    double R = 0.0;
    double h_bound = 0.0;  // 1 + H(r, R)
    double lambda_max = 0.0;
    double g_bound = 0.0;  // 1 + G(r, R)
    double lower_margin = 0.0;  // lambda_max - (1 + H)
    double upper_margin = 0.0;  // (1 + G) - lambda_max
    bool holds = false;
};

/// Radii (r, R) = (n/2 (x + 1/x) - x, n/2 (x + 1/x) - 1/x) of the two
/// concentric Gerschgorin circles of LPC(x, n) with n even and x > 1.
std::pair<double, double> lpc_even_radii(double x, int n);

/// Evaluates one grid cell. The proven bracket 1 + r <= lambda < 1 + (r+R)/2
/// is enforced unconditionally (a violation throws std::logic_error); the
/// conjectured mean bracket is reported through `holds`, judged with
/// 10 * oracle_tol * lambda of slack.
HypothesisRow check_hypothesis(double x, int n, const PowerOptions& opt = {});

/// All grid cells, x outer and n inner; deterministic row order.
std::vector<HypothesisRow> sweep_table(const std::vector<double>& x_values,
                                       const std::vector<int>& n_values,
                                       const PowerOptions& opt = {});

/// An adjacent grid pair along one axis where the Perron root decreased.
struct MonotonicityViolation {
    char axis = 'x';  // 'x': n fixed, x step; 'n': x fixed, n step
    double x_from = 0.0;
    double x_to = 0.0;
    int n_from = 0;
    int n_to = 0;
    double lambda_from = 0.0;
    double lambda_to = 0.0;
};

/// Scans strictly increasing grids for Perron-root decreases along either
/// axis, beyond 10 * oracle_tol * lambda of slack. An empty result is
/// consistent with the conjectured monotonicity.
std::vector<MonotonicityViolation> monotonicity_probe(const std::vector<double>& x_values,
                                                      const std::vector<int>& n_values,
                                                      const PowerOptions& opt = {});

}  // namespace pctk
