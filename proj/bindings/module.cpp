#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <sstream>

#include "cvren/binning.hpp"
#include "cvren/config.hpp"
#include "cvren/criteria.hpp"
#include "cvren/density.hpp"
#include "cvren/entropy.hpp"
#include "cvren/figures.hpp"
#include "cvren/index_algebra.hpp"
#include "cvren/io.hpp"
#include "cvren/states.hpp"
#include "cvren/validate.hpp"

namespace py = pybind11;
using namespace cvren;

namespace {

// Python callers pass float('inf') where the C++ API uses the marker.
Index index_from_double(double v) {
  return std::isinf(v) ? Index::infinity() : Index(v);
}

double index_to_double(const Index& idx) {
  return idx.is_infinity() ? std::numeric_limits<double>::infinity()
                           : idx.value();
}

}  // namespace

PYBIND11_MODULE(_cvren, m) {
  m.doc() = "Renyi-entropy separability conditions for continuous-variable "
            "multipartite systems";

  // ---- index algebra ----
  m.def("conjugate_index",
        [](double x) { return index_to_double(conjugate_index(x)); },
        py::arg("x"),
        "Conjugate exponent x' with 1/x + 1/x' = 1 (inf at x = 1).");
  m.def("kappa", &kappa, py::arg("tau"));
  m.def("big_k", &big_k, py::arg("t"));
  m.def("young_c",
        [](double x) { return young_c(x); }, py::arg("x"),
        "Sharp convolution constant C(x).");
  m.def("criterion_bound", &criterion_bound, py::arg("n"), py::arg("t"),
        "Right-hand side ln(n K(t) pi).");
  m.def("constant_identity_residual", &constant_identity_residual,
        py::arg("n"), py::arg("t"));
  m.def("pure_state_constant", &pure_state_constant, py::arg("n"),
        py::arg("t"));

  // ---- densities ----
  py::class_<AnalyticDensity>(m, "AnalyticDensity")
      .def_static("gaussian", &AnalyticDensity::gaussian, py::arg("mean"),
                  py::arg("variance"))
      .def("__call__",
           [](const AnalyticDensity& d, double x) { return d(x); })
      .def_property_readonly("domain_min", &AnalyticDensity::domain_min)
      .def_property_readonly("domain_max", &AnalyticDensity::domain_max)
      .def_property_readonly("term_count", [](const AnalyticDensity& d) {
        return d.terms().size();
      });

  py::class_<GridDensity>(m, "GridDensity")
      .def(py::init<double, double, std::vector<double>, double>(),
           py::arg("left_edge"), py::arg("spacing"), py::arg("values"),
           py::arg("source_tail_mass") = 0.0)
      .def_static("sample", &GridDensity::sample, py::arg("density"),
                  py::arg("spacing"))
      .def_property_readonly("left_edge", &GridDensity::left_edge)
      .def_property_readonly("spacing", &GridDensity::spacing)
      .def_property_readonly("values", &GridDensity::values)
      .def("to_csv",
           [](const GridDensity& d) {
             std::ostringstream out;
             write_csv(d, out);
             return out.str();
           })
      .def_static("from_csv", [](const std::string& text) {
        std::istringstream in(text);
        return read_grid_density_csv(in);
      });

  m.def("convolve",
        [](const AnalyticDensity& a, const AnalyticDensity& b) {
          return convolve(a, b);
        },
        py::arg("d1"), py::arg("d2"));
  m.def("convolve_grid", &convolve_grid, py::arg("d1"), py::arg("d2"));
  m.def("reflect_scale", &reflect_scale, py::arg("density"), py::arg("sign"));
  m.def("mix", &mix, py::arg("weights"), py::arg("densities"));
  m.def("lp_functional",
        [](const AnalyticDensity& d, double alpha) {
          return lp_functional(d, index_from_double(alpha));
        },
        py::arg("density"), py::arg("alpha"));
  m.def("lp_functional_grid",
        [](const GridDensity& d, double alpha) {
          return lp_functional(d, index_from_double(alpha));
        },
        py::arg("density"), py::arg("alpha"));
  m.def("sup_value", &sup_value, py::arg("density"));

  // ---- entropies ----
  py::class_<DiscreteDistribution>(m, "DiscreteDistribution")
      .def(py::init<std::vector<double>, double>(), py::arg("probabilities"),
           py::arg("sum_tol") = 1e-10)
      .def_property_readonly("probabilities",
                             &DiscreteDistribution::probabilities);
  m.def("renyi_differential",
        [](const AnalyticDensity& d, double alpha) {
          return renyi_differential(d, index_from_double(alpha));
        },
        py::arg("density"), py::arg("alpha"));
  m.def("shannon_differential",
        [](const AnalyticDensity& d) { return shannon_differential(d); },
        py::arg("density"));
  m.def("renyi_discrete",
        [](const DiscreteDistribution& q, double alpha) {
          return renyi_discrete(q, index_from_double(alpha));
        },
        py::arg("distribution"), py::arg("alpha"));
  m.def("shannon_discrete", &shannon_discrete, py::arg("distribution"));
  m.def("tsallis_discrete", &tsallis_discrete, py::arg("distribution"),
        py::arg("alpha"));
  m.def("alpha_log", &alpha_log, py::arg("x"), py::arg("alpha"));
  m.def("binary_entropy", &binary_entropy, py::arg("eta"));

  // ---- states and observables ----
  py::enum_<Observable>(m, "Observable")
      .value("R", Observable::R)
      .value("S", Observable::S);

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init([](int n, std::vector<double> thetas,
                       std::vector<int> r_signs, std::vector<int> s_signs) {
             QuadratureConfig cfg{n, std::move(thetas), std::move(r_signs),
                                  std::move(s_signs)};
             cfg.validate();
             return cfg;
           }),
           py::arg("n"), py::arg("thetas"), py::arg("r_signs"),
           py::arg("s_signs"))
      .def_static("standard", &QuadratureConfig::standard, py::arg("n"))
      .def_static("all_plus", &QuadratureConfig::all_plus, py::arg("n"))
      .def_readonly("n", &QuadratureConfig::n)
      .def_readonly("thetas", &QuadratureConfig::thetas)
      .def_readonly("r_signs", &QuadratureConfig::r_signs)
      .def_readonly("s_signs", &QuadratureConfig::s_signs)
      .def_property_readonly("commutator_sum",
                             &QuadratureConfig::commutator_sum)
      .def_property_readonly("commuting", &QuadratureConfig::commuting);

  py::class_<CoherentProduct>(m, "CoherentProduct")
      .def(py::init<std::vector<std::complex<double>>>(),
           py::arg("amplitudes"))
      .def_readonly("amplitudes", &CoherentProduct::amplitudes);
  py::class_<DephasedCat>(m, "DephasedCat")
      .def(py::init<int, double, double>(), py::arg("n"), py::arg("z"),
           py::arg("c"))
      .def_readonly("n", &DephasedCat::n)
      .def_readonly("z", &DephasedCat::z)
      .def_readonly("c", &DephasedCat::c);
  py::class_<AntisymCatPure>(m, "AntisymCatPure")
      .def(py::init<int, double>(), py::arg("n"), py::arg("z"))
      .def_readonly("n", &AntisymCatPure::n)
      .def_readonly("z", &AntisymCatPure::z);

  py::class_<MarginalPair>(m, "MarginalPair")
      .def_readonly("w", &MarginalPair::w)
      .def_readonly("u", &MarginalPair::u);

  m.def("coherent_quadrature_density", &coherent_quadrature_density,
        py::arg("z"), py::arg("theta"), py::arg("which"), py::arg("sign"));
  m.def("marginal_pair", &marginal_pair, py::arg("state"), py::arg("config"));
  m.def("local_reduced_densities", &local_reduced_densities, py::arg("state"),
        py::arg("config"));
  m.def("normalization_factor", &normalization_factor, py::arg("state"));

  // ---- binning ----
  py::class_<BinGrid>(m, "BinGrid")
      .def(py::init<std::vector<double>>(), py::arg("marks"))
      .def_static("uniform", &BinGrid::uniform, py::arg("min"), py::arg("max"),
                  py::arg("bin_count"))
      .def_property_readonly("marks", &BinGrid::marks)
      .def_property_readonly("bin_count", &BinGrid::bin_count)
      .def_property_readonly("max_width", &BinGrid::max_width);
  py::class_<BinnedDistribution>(m, "BinnedDistribution")
      .def_readonly("grid", &BinnedDistribution::grid)
      .def_readonly("probabilities", &BinnedDistribution::probabilities);
  py::class_<HistogramDensity>(m, "HistogramDensity")
      .def_readonly("grid", &HistogramDensity::grid)
      .def_readonly("heights", &HistogramDensity::heights)
      .def("__call__", &HistogramDensity::value)
      .def("lp_power_sum", &HistogramDensity::lp_power_sum, py::arg("a"));
  m.def("sample_into_bins",
        [](const AnalyticDensity& d, const BinGrid& grid) {
          return sample_into_bins(d, grid);
        },
        py::arg("density"), py::arg("grid"));
  m.def("histogram_density", &histogram_density, py::arg("binned"));
  m.def("apply_inefficiency", &apply_inefficiency, py::arg("distribution"),
        py::arg("eta"));

  // ---- criteria ----
  py::enum_<ConditionId>(m, "ConditionId")
      .value("Prop1", ConditionId::Prop1)
      .value("Prop1Twin", ConditionId::Prop1Twin)
      .value("Prop2Hist", ConditionId::Prop2Hist)
      .value("Prop2Binned", ConditionId::Prop2Binned)
      .value("Prop2BinnedTwin", ConditionId::Prop2BinnedTwin)
      .value("TsallisBinned", ConditionId::TsallisBinned)
      .value("TsallisBinnedTwin", ConditionId::TsallisBinnedTwin)
      .value("ShannonDiff", ConditionId::ShannonDiff)
      .value("InefficiencyShannon", ConditionId::InefficiencyShannon)
      .value("PureState", ConditionId::PureState)
      .value("HausdorffYoung", ConditionId::HausdorffYoung);

  py::class_<CriterionReport>(m, "CriterionReport")
      .def_readonly("condition", &CriterionReport::condition)
      .def_readonly("lhs", &CriterionReport::lhs)
      .def_readonly("rhs", &CriterionReport::rhs)
      .def_readonly("margin", &CriterionReport::margin)
      .def_readonly("violated", &CriterionReport::violated)
      .def("line", &CriterionReport::line)
      .def("__repr__", [](const CriterionReport& r) {
        return "<CriterionReport " + r.line() + ">";
      });

  m.def("check_prop1", &check_prop1, py::arg("pair"), py::arg("n"),
        py::arg("t"), py::arg("swapped") = false);
  m.def("check_shannon_diff", &check_shannon_diff, py::arg("pair"),
        py::arg("n"));
  m.def("check_prop2", &check_prop2, py::arg("pair"), py::arg("r_grid"),
        py::arg("s_grid"), py::arg("n"), py::arg("t"),
        py::arg("use_histogram"), py::arg("swapped") = false);
  m.def("check_tsallis", &check_tsallis, py::arg("p"), py::arg("q"),
        py::arg("n"), py::arg("t"), py::arg("swapped") = false);
  m.def("check_inefficiency", &check_inefficiency, py::arg("p"), py::arg("q"),
        py::arg("n"), py::arg("eta"));
  m.def("check_pure", &check_pure, py::arg("state"), py::arg("config"),
        py::arg("a"), py::arg("n"));
  m.def("q_characteristic",
        [](const DephasedCat& family, double a) {
          return q_characteristic(family, a);
        },
        py::arg("family"), py::arg("a"),
        "Returns z -> Q_a(z); positive values certify entanglement.");
  m.def("a_characteristic",
        [](const AntisymCatPure& family) { return a_characteristic(family); },
        py::arg("family"), "Returns z -> A(z).");
  m.def("fourier_pair_check", &fourier_pair_check, py::arg("hermite_index"),
        py::arg("alpha"), py::arg("beta"));

  // ---- figures and validation ----
  py::class_<CurveTable>(m, "CurveTable")
      .def_readonly("x_label", &CurveTable::x_label)
      .def_readonly("labels", &CurveTable::labels)
      .def_readonly("x", &CurveTable::x)
      .def_readonly("columns", &CurveTable::columns)
      .def("to_csv", [](const CurveTable& t) {
        std::ostringstream out;
        write_curve_csv(t, out);
        return out.str();
      });
  m.def("compute_figure",
        [](const std::string& which, int threads) {
          return compute_figure(figure_from_string(which), threads);
        },
        py::arg("which"), py::arg("threads") = 0);
  m.def("positivity_border", &positivity_border, py::arg("x"), py::arg("y"));

  py::class_<SuiteResult>(m, "SuiteResult")
      .def_readonly("name", &SuiteResult::name)
      .def_readonly("checks", &SuiteResult::checks)
      .def_readonly("worst", &SuiteResult::worst)
      .def_readonly("tolerance", &SuiteResult::tolerance)
      .def_readonly("passed", &SuiteResult::passed);
  m.def("run_all_suites", &run_all_suites, py::arg("seed") = 20240101,
        py::call_guard<py::gil_scoped_release>());
}
