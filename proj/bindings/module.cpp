#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "pctk/cli.hpp"
#include "pctk/generators.hpp"
#include "pctk/hypothesis.hpp"
#include "pctk/indices.hpp"
#include "pctk/io.hpp"
#include "pctk/matrix.hpp"
#include "pctk/spectral.hpp"
#include "pctk/svg.hpp"

namespace py = pybind11;
using namespace pctk;

PYBIND11_MODULE(_pctk, m) {
    m.doc() = "Pairwise-comparison matrix toolkit: Toeplitz/circulant family "
              "generators, Perron spectra and consistency indices.";

    py::register_exception<PcError>(m, "PcError", PyExc_ValueError);

    py::enum_<Structure>(m, "Structure")
        .value("General", Structure::General)
        .value("Toeplitz", Structure::Toeplitz)
        .value("Circulant", Structure::Circulant);

    py::enum_<Kind>(m, "Kind")
        .value("CC", Kind::CC)
        .value("CPC", Kind::CPC)
        .value("LPC", Kind::LPC)
        .value("CkPC", Kind::CkPC)
        .value("FPC", Kind::FPC);

    py::class_<PcMatrix>(m, "PcMatrix")
        .def_static("from_rows", &PcMatrix::from_rows, py::arg("rows"),
                    py::arg("reciprocity_tol") = 0.0)
        .def_static("from_weights", &PcMatrix::from_weights, py::arg("weights"))
        .def_property_readonly("n", &PcMatrix::order)
        .def("at", &PcMatrix::at, py::arg("i"), py::arg("j"))
        .def("rows", &PcMatrix::rows)
        .def("row_sums", &PcMatrix::row_sums)
        .def("frobenius_norm", &PcMatrix::frobenius_norm)
        .def("max_entry_ratio", &PcMatrix::max_entry_ratio)
        .def("is_consistent", &PcMatrix::is_consistent,
             py::arg("tol") = PcMatrix::kConsistencyTol)
        .def("detect_structure", &PcMatrix::detect_structure,
             py::arg("tol") = PcMatrix::kStructureTol)
        .def("__repr__", [](const PcMatrix& self) {
            return "<PcMatrix n=" + std::to_string(self.order()) + ">";
        });

    py::class_<CirculantRow>(m, "CirculantRow")
        .def(py::init([](std::vector<double> c) { return CirculantRow{std::move(c)}; }))
        .def_readonly("c", &CirculantRow::c);
    m.def("circulant_row", &circulant_row, py::arg("matrix"),
          py::arg("tol") = PcMatrix::kStructureTol);

    py::class_<FamilySpec>(m, "FamilySpec")
        .def(py::init([](Kind kind, double x, int n, int k,
                         std::optional<std::pair<int, int>> placement,
                         std::optional<std::vector<int>> offsets) {
                 FamilySpec spec{kind, x, n, k, std::move(placement), std::move(offsets)};
                 validate_spec(spec);
                 return spec;
             }),
             py::arg("kind"), py::arg("x") = 1.0, py::arg("n") = 3, py::arg("k") = 1,
             py::arg("placement") = std::nullopt, py::arg("offsets") = std::nullopt)
        .def_readwrite("kind", &FamilySpec::kind)
        .def_readwrite("x", &FamilySpec::x)
        .def_readwrite("n", &FamilySpec::n)
        .def_readwrite("k", &FamilySpec::k)
        .def_readwrite("placement", &FamilySpec::placement)
        .def_readwrite("offsets", &FamilySpec::offsets);

    m.def("gen_cc", &gen_cc, py::arg("n"));
    m.def("gen_cpc", &gen_cpc, py::arg("x"), py::arg("n"),
          py::arg("placement") = std::nullopt);
    m.def("gen_lpc", &gen_lpc, py::arg("x"), py::arg("n"));
    m.def("gen_ckpc", &gen_ckpc, py::arg("x"), py::arg("n"), py::arg("k"),
          py::arg("offsets") = std::nullopt);
    m.def("gen_fpc", &gen_fpc, py::arg("x"), py::arg("n"));
    m.def("generate", &generate, py::arg("spec"));
    m.def("valid_offset_subsets", &valid_offset_subsets, py::arg("n"), py::arg("k"));

    py::class_<SpectralResult>(m, "SpectralResult")
        .def_readonly("lambda_max", &SpectralResult::lambda_max)
        .def_readonly("perron_vector", &SpectralResult::perron_vector)
        .def_readonly("iterations", &SpectralResult::iterations)
        .def_readonly("residual", &SpectralResult::residual);

    py::class_<CubicRoots>(m, "CubicRoots")
        .def_readonly("real_root", &CubicRoots::real_root)
        .def_readonly("complex_root", &CubicRoots::complex_root);

    py::class_<CpcSpectrum>(m, "CpcSpectrum")
        .def_readonly("roots", &CpcSpectrum::roots)
        .def_readonly("zero_multiplicity", &CpcSpectrum::zero_multiplicity);

    py::class_<GerschgorinDisc>(m, "GerschgorinDisc")
        .def_readonly("center", &GerschgorinDisc::center)
        .def_readonly("radius", &GerschgorinDisc::radius);

    m.def(
        "perron_power",
        [](const PcMatrix& matrix, double tol, int max_iter) {
            return perron_power(matrix, PowerOptions{tol, max_iter});
        },
        py::arg("matrix"), py::arg("tol") = 1e-12, py::arg("max_iter") = 200000);
    m.def("circulant_spectrum", &circulant_spectrum, py::arg("row"));
    m.def("cpc_spectrum", &cpc_spectrum, py::arg("x"), py::arg("n"));
    m.def("closed_form_perron", &closed_form_perron, py::arg("spec"));
    m.def("closed_form_spectrum", &closed_form_spectrum, py::arg("spec"));
    m.def("gerschgorin_discs", &gerschgorin_discs, py::arg("matrix"));
    m.def(
        "spectrum_in_discs",
        [](const std::vector<std::complex<double>>& eigenvalues,
           const std::vector<GerschgorinDisc>& discs, double slack) {
            return spectrum_in_discs(eigenvalues, discs, slack);
        },
        py::arg("eigenvalues"), py::arg("discs"), py::arg("slack") = 1e-9);

    m.def("ci", &ci, py::arg("lambda_max"), py::arg("n"));
    m.def("kii", &kii, py::arg("matrix"));
    m.def("ci_upper_bound", &ci_upper_bound, py::arg("x"));
    m.def("ag_perron_bounds", &ag_perron_bounds, py::arg("x"), py::arg("n"));
    m.def("fpc_ci_limit", &fpc_ci_limit, py::arg("x"));

    py::class_<CiPrediction>(m, "CiPrediction")
        .def_readonly("exact", &CiPrediction::exact)
        .def_readonly("bounds", &CiPrediction::bounds);
    m.def("family_ci", &family_ci, py::arg("spec"));

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("name", &Estimate::name)
        .def_readonly("value", &Estimate::value)
        .def_readonly("is_upper", &Estimate::is_upper)
        .def_readonly("satisfied", &Estimate::satisfied);

    py::class_<ConsistencyReport>(m, "ConsistencyReport")
        .def_readonly("n", &ConsistencyReport::n)
        .def_readonly("x", &ConsistencyReport::x)
        .def_readonly("lambda_max", &ConsistencyReport::lambda_max)
        .def_readonly("ci", &ConsistencyReport::ci)
        .def_readonly("kii", &ConsistencyReport::kii)
        .def_readonly("ci_upper", &ConsistencyReport::ci_upper)
        .def_readonly("ag_bounds", &ConsistencyReport::ag_bounds)
        .def_readonly("closed_form_ci", &ConsistencyReport::closed_form_ci)
        .def_readonly("estimates", &ConsistencyReport::estimates)
        .def("to_json", &report_to_json);
    m.def(
        "analyze",
        [](const PcMatrix& matrix, const std::optional<FamilySpec>& spec, double tol,
           int max_iter) { return analyze(matrix, spec, PowerOptions{tol, max_iter}); },
        py::arg("matrix"), py::arg("spec") = std::nullopt, py::arg("tol") = 1e-12,
        py::arg("max_iter") = 200000);

    py::class_<HypothesisRow>(m, "HypothesisRow")
        .def_readonly("x", &HypothesisRow::x)
        .def_readonly("n", &HypothesisRow::n)
        .def_readonly("r", &HypothesisRow::r)
        .def_readonly("R", &HypothesisRow::R)
        .def_readonly("h_bound", &HypothesisRow::h_bound)
        .def_readonly("lambda_max", &HypothesisRow::lambda_max)
        .def_readonly("g_bound", &HypothesisRow::g_bound)
        .def_readonly("lower_margin", &HypothesisRow::lower_margin)
        .def_readonly("upper_margin", &HypothesisRow::upper_margin)
        .def_readonly("holds", &HypothesisRow::holds);

    m.def("lpc_even_radii", &lpc_even_radii, py::arg("x"), py::arg("n"));
    m.def(
        "check_hypothesis",
        [](double x, int n, double tol, int max_iter) {
            return check_hypothesis(x, n, PowerOptions{tol, max_iter});
        },
        py::arg("x"), py::arg("n"), py::arg("tol") = 1e-12, py::arg("max_iter") = 200000);
    m.def(
        "sweep_table",
        [](const std::vector<double>& xs, const std::vector<int>& ns, double tol, int max_iter) {
            return sweep_table(xs, ns, PowerOptions{tol, max_iter});
        },
        py::arg("x_values"), py::arg("n_values"), py::arg("tol") = 1e-12,
        py::arg("max_iter") = 200000);

    py::class_<MonotonicityViolation>(m, "MonotonicityViolation")
        .def_readonly("axis", &MonotonicityViolation::axis)
        .def_readonly("x_from", &MonotonicityViolation::x_from)
        .def_readonly("x_to", &MonotonicityViolation::x_to)
        .def_readonly("n_from", &MonotonicityViolation::n_from)
        .def_readonly("n_to", &MonotonicityViolation::n_to)
        .def_readonly("lambda_from", &MonotonicityViolation::lambda_from)
        .def_readonly("lambda_to", &MonotonicityViolation::lambda_to);
    m.def(
        "monotonicity_probe",
        [](const std::vector<double>& xs, const std::vector<int>& ns, double tol, int max_iter) {
            return monotonicity_probe(xs, ns, PowerOptions{tol, max_iter});
        },
        py::arg("x_values"), py::arg("n_values"), py::arg("tol") = 1e-12,
        py::arg("max_iter") = 200000);

    m.def("format_double", &format_double, py::arg("value"));
    m.def("matrix_to_csv", &matrix_to_csv, py::arg("matrix"));
    m.def("matrix_to_json", &matrix_to_json, py::arg("matrix"));
    m.def("load_matrix", &load_matrix, py::arg("path"),
          py::arg("reciprocity_tol") = PcMatrix::kFileReciprocityTol);
    m.def("family_spec_to_json", &family_spec_to_json, py::arg("spec"));
    m.def("family_spec_from_json", &family_spec_from_json, py::arg("text"));
    m.def("report_to_json", &report_to_json, py::arg("report"));
    m.def(
        "hypothesis_rows_to_csv",
        [](const std::vector<HypothesisRow>& rows) { return hypothesis_rows_to_csv(rows); },
        py::arg("rows"));
    m.def(
        "disc_plot_svg",
        [](const std::vector<GerschgorinDisc>& discs,
           const std::vector<std::complex<double>>& eigenvalues) {
            return disc_plot_svg(discs, eigenvalues);
        },
        py::arg("discs"), py::arg("eigenvalues"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command line front end; returns (exit_code, stdout, stderr).");
}
