#include "pctk/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace pctk {

namespace {

void check_x_positive(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) fail(Errc::BadInput, "x must be finite and positive");
}

void check_x_family(double x) {
    check_x_positive(x);
    if (x == 1.0) fail(Errc::DegenerateX, "x = 1 yields the consistent all-ones matrix");
}

// Default CkPC offsets {1..k}; valid because 2k <= n-1 keeps them below n-k.
std::vector<int> default_offsets(int k) {
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

void check_offsets(const std::vector<int>& offsets, int n, int k) {
    if (static_cast<int>(offsets.size()) != k)
        fail(Errc::BadInput, "expected " + std::to_string(k) + " offsets, got " +
                                 std::to_string(offsets.size()));
    std::set<int> seen;
    for (const int d : offsets) {
        if (d < 1 || d > n - 1)
            fail(Errc::BadInput, "offset " + std::to_string(d) + " outside 1.." + std::to_string(n - 1));
        if (!seen.insert(d).second)
            fail(Errc::BadInput, "duplicate offset " + std::to_string(d));
    }
    for (const int d : offsets)
        if (seen.count(n - d))
            fail(Errc::OffsetsClash, "offsets contain both " + std::to_string(d) + " and " +
                                         std::to_string(n - d) +
                                         " (reciprocal positions clash)");
}

PcMatrix from_circulant_first_row(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size());
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = c[(j - i + n) % n];
    return PcMatrix::from_rows(rows);
}

}  // namespace

const char* kind_name(Kind k) noexcept {
    switch (k) {
        case Kind::CC: return "cc";
        case Kind::CPC: return "cpc";
        case Kind::LPC: return "lpc";
        case Kind::CkPC: return "ckpc";
        case Kind::FPC: return "fpc";
    }
    return "unknown";
}

std::optional<Kind> kind_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (lower == "cc") return Kind::CC;
    if (lower == "cpc") return Kind::CPC;
    if (lower == "lpc") return Kind::LPC;
    if (lower == "ckpc" || lower == "c1pc") return Kind::CkPC;
    if (lower == "fpc") return Kind::FPC;
    return std::nullopt;
}

void validate_spec(const FamilySpec& spec) {
    switch (spec.kind) {
        case Kind::CC:
            if (spec.n < 2) fail(Errc::OrderTooSmall, "CC needs n >= 2");
            break;
        case Kind::CPC: {
            if (spec.n < 3) fail(Errc::OrderTooSmall, "CPC needs n >= 3");
            check_x_family(spec.x);
            if (spec.placement) {
                const auto [i, j] = *spec.placement;
                if (i < 1 || i > spec.n || j < 1 || j > spec.n || i == j)
                    fail(Errc::BadPlacement, "placement (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ") invalid for n = " +
                                                 std::to_string(spec.n));
            }
            break;
        }
        case Kind::LPC:
            if (spec.n < 3) fail(Errc::OrderTooSmall, "LPC needs n >= 3");
            check_x_family(spec.x);
            break;
        case Kind::CkPC: {
            if (spec.n < 3) fail(Errc::OrderTooSmall, "CkPC needs n >= 3");
            check_x_family(spec.x);
            if (spec.k < 1) fail(Errc::BadInput, "k must be at least 1");
            if (2 * spec.k > spec.n - 1)
                fail(Errc::KTooLarge, "2k <= n-1 required: k = " + std::to_string(spec.k) +
                                          ", n = " + std::to_string(spec.n));
            check_offsets(spec.offsets ? *spec.offsets : default_offsets(spec.k), spec.n, spec.k);
            break;
        }
        case Kind::FPC:
            if (spec.n < 3) fail(Errc::OrderTooSmall, "FPC needs n >= 3");
            check_x_positive(spec.x);  // x = 1 allowed: the consistent limit
            break;
    }
}

PcMatrix gen_cc(int n) {
    if (n < 2) fail(Errc::OrderTooSmall, "CC needs n >= 2");
    return PcMatrix::from_rows(std::vector<std::vector<double>>(n, std::vector<double>(n, 1.0)));
}

PcMatrix gen_cpc(double x, int n, std::optional<std::pair<int, int>> placement) {
    FamilySpec spec{Kind::CPC, x, n, 1, placement, {}};
    validate_spec(spec);
    const auto [i, j] = placement.value_or(std::pair<int, int>{1, n});
    const double inv = 1.0 / x;
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
    rows[i - 1][j - 1] = x;
    rows[j - 1][i - 1] = inv;
    return PcMatrix::from_rows(rows);
}

PcMatrix gen_lpc(double x, int n) {
    FamilySpec spec{Kind::LPC, x, n, 1, {}, {}};
    validate_spec(spec);
    const double inv = 1.0 / x;
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int d = j - i;
            if (d > 0)
                rows[i][j] = d % 2 == 1 ? x : inv;
            else if (d < 0)
                rows[i][j] = (-d) % 2 == 1 ? inv : x;
        }
    return PcMatrix::from_rows(rows);
}

PcMatrix gen_ckpc(double x, int n, int k, std::optional<std::vector<int>> offsets) {
    FamilySpec spec{Kind::CkPC, x, n, k, {}, offsets};
    validate_spec(spec);
    const std::vector<int> chosen = offsets ? *offsets : default_offsets(k);
    const double inv = 1.0 / x;
    std::vector<double> c(n, 1.0);
    for (const int d : chosen) {
        c[d] = x;
        c[n - d] = inv;
    }
    return from_circulant_first_row(c);
}

PcMatrix gen_fpc(double x, int n) {
    FamilySpec spec{Kind::FPC, x, n, 1, {}, {}};
    validate_spec(spec);
    const double inv = 1.0 / x;
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < j)
                rows[i][j] = x;
            else if (i > j)
                rows[i][j] = inv;
        }
    return PcMatrix::from_rows(rows);
}

PcMatrix generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case Kind::CC: return gen_cc(spec.n);
        case Kind::CPC: return gen_cpc(spec.x, spec.n, spec.placement);
        case Kind::LPC: return gen_lpc(spec.x, spec.n);
        case Kind::CkPC: return gen_ckpc(spec.x, spec.n, spec.k, spec.offsets);
        case Kind::FPC: return gen_fpc(spec.x, spec.n);
    }
    fail(Errc::BadInput, "unknown family kind");
}

std::vector<std::vector<int>> valid_offset_subsets(int n, int k) {
    if (n < 3 || k < 1 || 2 * k > n - 1) return {};
    std::vector<std::vector<int>> result;
    std::vector<int> current;
    // Depth-first over increasing offsets, pruning reciprocal clashes.
    auto extend = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == k) {
            result.push_back(current);
            return;
        }
        for (int d = next; d <= n - 1; ++d) {
            if (2 * d == n) continue;  // self-reciprocal diagonal
            bool clash = false;
            for (const int s : current)
                if (s == n - d) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            current.push_back(d);
            self(self, d + 1);
            current.pop_back();
        }
    };
    extend(extend, 1);
    return result;
}

}  // namespace pctk
