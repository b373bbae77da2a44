#pragma once

#include <cstddef>
#include <vector>

#include "pctk/errors.hpp"

namespace pctk {

/// Structural class of a square matrix. Circulant implies Toeplitz.
enum class Structure { General, Toeplitz, Circulant };

const char* structure_name(Structure s) noexcept;

/// Positive reciprocal pairwise-comparison matrix: strictly positive entries,
/// unit diagonal and a_ij * a_ji = 1. Immutable once constructed, so instances
/// can be shared across threads freely.
class PcMatrix {
  public:
    /// Reciprocity tolerance applied to matrices read from files, where the
    /// decimal round-trip already costs a few ulps.
    static constexpr double kFileReciprocityTol = 1e-9;
    /// Default tolerance of the multiplicative triad test.
    static constexpr double kConsistencyTol = 1e-9;
    /// Entry comparison tolerance for structure detection.
    static constexpr double kStructureTol = 1e-12;

    /// Validates and adopts a square grid of entries. A reciprocity_tol of 0
    /// demands exactness within 4 ulps, which generator output achieves;
    /// pass kFileReciprocityTol for parsed input.
    static PcMatrix from_rows(const std::vector<std::vector<double>>& rows,
                              double reciprocity_tol = 0.0);

    /// Consistent matrix generated by a weight vector: a_ij = w_i / w_j.
    static PcMatrix from_weights(const std::vector<double>& weights);

    int order() const noexcept { return n_; }
    double reciprocity_tol() const noexcept { return reciprocity_tol_; }

    /// 0-based access; bounds are the caller's responsibility.
    double at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    const std::vector<double>& data() const noexcept { return entries_; }
    std::vector<std::vector<double>> rows() const;

    std::vector<double> row_sums() const;
    double frobenius_norm() const;

    /// Smallest x >= 1 with 1/x <= a_ij <= x for all entries.
    double max_entry_ratio() const;

    /// Exhaustive multiplicative triad test |a_ij * a_jk / a_ik - 1| <= tol.
    /// Matrices of order 2 have no triads and are always consistent.
    bool is_consistent(double tol = kConsistencyTol) const;

    Structure detect_structure(double tol = kStructureTol) const;

  private:
    PcMatrix(int n, std::vector<double> entries, double reciprocity_tol)
        : n_(n), entries_(std::move(entries)), reciprocity_tol_(reciprocity_tol) {}

    int n_;
    std::vector<double> entries_;  // row-major
    double reciprocity_tol_;
};

/// First row (c_0 ... c_{n-1}) of a circulant matrix.
struct CirculantRow {
    std::vector<double> c;

    int order() const noexcept { return static_cast<int>(c.size()); }
};

/// Extracts the defining row of a circulant PcMatrix.
/// Fails with BadInput if the matrix is not circulant under `tol`.
CirculantRow circulant_row(const PcMatrix& m, double tol = PcMatrix::kStructureTol);

}  // namespace pctk
