#pragma once

#include <string>
#include <vector>

#include "pctk/spectral.hpp"

namespace pctk {

struct VerifyOptions {
    std::vector<double> x_values = {1.25, 1.5, 2.0, 3.0, 5.0, 9.0};
    std::vector<int> n_values = {3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    PowerOptions power{};
};

struct VerifyCheck {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> failure_details;

    bool passed() const noexcept { return failures == 0; }
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_passed() const noexcept;
    int total_cases() const noexcept;
};

/// Proven-fact verification over the family grid: every closed-form Perron
/// root against the power-iteration oracle, the cubic residual of the
/// Cardano root, row-sum and entry-ratio brackets, the even-LPC bound chain
/// and CI sandwich, Gerschgorin containment of computable spectra, and the
/// maximal-CI families. Conjectured bounds are not part of this report.
VerifyReport run_verification(const VerifyOptions& opt = {});

}  // namespace pctk
