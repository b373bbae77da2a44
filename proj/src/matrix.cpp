#include "pctk/matrix.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace pctk {

namespace {

constexpr double kUlp = std::numeric_limits<double>::epsilon();
// "Exact" reciprocity: what a generator that computes 1/x once can guarantee.
constexpr double kExactTol = 4.0 * kUlp;

std::string pos(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

const char* structure_name(Structure s) noexcept {
    switch (s) {
        case Structure::General: return "general";
        case Structure::Toeplitz: return "toeplitz";
        case Structure::Circulant: return "circulant";
    }
    return "unknown";
}

PcMatrix PcMatrix::from_rows(const std::vector<std::vector<double>>& rows,
                             double reciprocity_tol) {
    const int n = static_cast<int>(rows.size());
    if (n < 2) fail(Errc::OrderTooSmall, "matrix order must be at least 2, got " + std::to_string(n));
    if (reciprocity_tol < 0.0 || !std::isfinite(reciprocity_tol))
        fail(Errc::BadInput, "reciprocity tolerance must be finite and nonnegative");

    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            fail(Errc::NonSquare, "row " + std::to_string(i + 1) + " has " +
                                      std::to_string(rows[i].size()) + " entries, expected " +
                                      std::to_string(n));
        for (int j = 0; j < n; ++j) {
            const double v = rows[i][j];
            if (!(v > 0.0) || !std::isfinite(v))
                fail(Errc::NonPositiveEntry, "entry " + pos(i, j) + " = " + std::to_string(v));
            entries.push_back(v);
        }
    }

    const double tol = reciprocity_tol > 0.0 ? reciprocity_tol : kExactTol;
    for (int i = 0; i < n; ++i) {
        const double d = entries[static_cast<std::size_t>(i) * n + i];
        if (std::abs(d - 1.0) > tol)
            fail(Errc::DiagonalNotOne, "diagonal entry " + pos(i, i) + " = " + std::to_string(d));
    }
    double worst = 0.0;
    int wi = 0, wj = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double prod = entries[static_cast<std::size_t>(i) * n + j] *
                                entries[static_cast<std::size_t>(j) * n + i];
            const double err = std::abs(prod - 1.0);
            if (err > worst) {
                worst = err;
                wi = i;
                wj = j;
            }
        }
    }
    if (worst > tol)
        fail(Errc::ReciprocityViolation,
             "worst pair " + pos(wi, wj) + "/" + pos(wj, wi) + ", |a_ij*a_ji - 1| = " +
                 std::to_string(worst));

    return PcMatrix(n, std::move(entries), reciprocity_tol);
}

PcMatrix PcMatrix::from_weights(const std::vector<double>& weights) {
    const int n = static_cast<int>(weights.size());
    if (n < 2) fail(Errc::OrderTooSmall, "need at least 2 weights, got " + std::to_string(n));
    for (int i = 0; i < n; ++i)
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
            fail(Errc::NonPositiveWeight,
                 "weight " + std::to_string(i + 1) + " = " + std::to_string(weights[i]));

    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = i == j ? 1.0 : weights[i] / weights[j];
    return from_rows(rows);
}

std::vector<std::vector<double>> PcMatrix::rows() const {
    std::vector<std::vector<double>> out(n_);
    for (int i = 0; i < n_; ++i)
        out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                      entries_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
    return out;
}

std::vector<double> PcMatrix::row_sums() const {
    std::vector<double> sums(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += at(i, j);
        sums[i] = s;
    }
    return sums;
}

double PcMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const double v : entries_) s += v * v;
    return std::sqrt(s);
}

double PcMatrix::max_entry_ratio() const {
    double hi = entries_[0], lo = entries_[0];
    for (const double v : entries_) {
        hi = std::max(hi, v);
        lo = std::min(lo, v);
    }
    return std::max(hi, 1.0 / lo);
}

bool PcMatrix::is_consistent(double tol) const {
    if (tol < 0.0) fail(Errc::BadInput, "tolerance must be nonnegative");
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k)
                if (std::abs(at(i, j) * at(j, k) / at(i, k) - 1.0) > tol) return false;
    return true;
}

Structure PcMatrix::detect_structure(double tol) const {
    bool toeplitz = true;
    for (int i = 1; i < n_ && toeplitz; ++i)
        for (int j = 1; j < n_; ++j)
            if (std::abs(at(i, j) - at(i - 1, j - 1)) > tol) {
                toeplitz = false;
                break;
            }
    if (!toeplitz) return Structure::General;

    for (int i = 1; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (std::abs(at(i, j) - at(0, (j - i + n_) % n_)) > tol) return Structure::Toeplitz;
    return Structure::Circulant;
}

CirculantRow circulant_row(const PcMatrix& m, double tol) {
    if (m.detect_structure(tol) != Structure::Circulant)
        fail(Errc::BadInput, "matrix is not circulant");
    CirculantRow row;
    row.c.assign(m.data().begin(), m.data().begin() + m.order());
    return row;
}

}  // namespace pctk
