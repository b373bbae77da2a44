#pragma once

#include <complex>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "pctk/generators.hpp"
#include "pctk/hypothesis.hpp"
#include "pctk/indices.hpp"
#include "pctk/matrix.hpp"
#include "pctk/spectral.hpp"

namespace pctk {

/// Shortest decimal form that round-trips to the same double. Locale-free.
std::string format_double(double value);

/// CSV: one matrix row per line, '.' decimal separator, ',' field separator.
std::string matrix_to_csv(const PcMatrix& m);
/// JSON object {"n": ..., "entries": [[...], ...]}.
std::string matrix_to_json(const PcMatrix& m);

PcMatrix read_matrix_csv(std::istream& in, double reciprocity_tol = PcMatrix::kFileReciprocityTol);
PcMatrix read_matrix_json(std::istream& in, double reciprocity_tol = PcMatrix::kFileReciprocityTol);

/// Dispatches on the ".json" extension, everything else parses as CSV.
PcMatrix load_matrix(const std::filesystem::path& path,
                     double reciprocity_tol = PcMatrix::kFileReciprocityTol);

std::string family_spec_to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const std::string& text);

std::string spectral_result_to_json(const SpectralResult& result);
/// Array of [re, im] pairs.
std::string spectrum_to_json(std::span<const std::complex<double>> eigenvalues);

std::string report_to_json(const ConsistencyReport& report);

std::string hypothesis_rows_to_csv(std::span<const HypothesisRow> rows);
std::string hypothesis_rows_to_json(std::span<const HypothesisRow> rows);

}  // namespace pctk
