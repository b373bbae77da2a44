#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pctk/matrix.hpp"

namespace pctk {

/// The special-case matrix families: all-ones (CC), single deviating pair
/// (CPC, "corner"), alternating diagonals (LPC, "layer-cake"), circulant with
/// k deviating offsets (CkPC), and constant upper triangle (FPC, "full").
enum class Kind { CC, CPC, LPC, CkPC, FPC };

const char* kind_name(Kind k) noexcept;
std::optional<Kind> kind_from_name(std::string_view name);

/// Parameters selecting one member of a family. `placement` picks the
/// deviating pair of a CPC-type matrix (1-based, default the (1, n) corner);
/// `offsets` picks which cyclic diagonals of a CkPC matrix carry x.
struct FamilySpec {
    Kind kind = Kind::CC;
    double x = 1.0;  // ignored for CC
    int n = 3;
    int k = 1;  // CkPC only
    std::optional<std::pair<int, int>> placement;
    std::optional<std::vector<int>> offsets;
};

/// Validates the parameter set without building the matrix.
void validate_spec(const FamilySpec& spec);

PcMatrix gen_cc(int n);
PcMatrix gen_cpc(double x, int n, std::optional<std::pair<int, int>> placement = {});
PcMatrix gen_lpc(double x, int n);
PcMatrix gen_ckpc(double x, int n, int k, std::optional<std::vector<int>> offsets = {});
PcMatrix gen_fpc(double x, int n);

PcMatrix generate(const FamilySpec& spec);

/// Offset sets S of size k with S and {n - s : s in S} disjoint, in
/// lexicographic order. Used by the family-invariance checks.
std::vector<std::vector<int>> valid_offset_subsets(int n, int k);

}  // namespace pctk
