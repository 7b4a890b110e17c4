#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "qapround/experiments.hpp"
#include "qapround/instance.hpp"
#include "qapround/lap.hpp"
#include "qapround/permutation.hpp"
#include "qapround/projection.hpp"
#include "qapround/qaplib_io.hpp"
#include "qapround/random.hpp"
#include "qapround/rounding.hpp"

namespace py = pybind11;
using namespace qapround;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rounding heuristics for quadratic assignment problems";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("image"))
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_static("from_one_based", &Permutation::from_one_based, py::arg("image"))
      .def_property_readonly("image", &Permutation::image)
      .def("one_based", &Permutation::one_based)
      .def("inverse", &Permutation::inverse)
      .def("to_matrix", &Permutation::to_matrix)
      .def("__len__", &Permutation::size)
      .def("__call__", &Permutation::operator(), py::arg("i"))
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__repr__", [](const Permutation& p) {
        std::ostringstream out;
        out << "Permutation([";
        for (int i = 0; i < p.size(); ++i) out << (i ? ", " : "") << p(i);
        out << "])";
        return out.str();
      });

  py::class_<Instance>(m, "Instance")
      .def(py::init<std::string, Matrix, Matrix, Matrix>(), py::arg("name"),
           py::arg("A"), py::arg("B"), py::arg("C"))
      .def(py::init<std::string, Matrix, Matrix>(), py::arg("name"), py::arg("A"),
           py::arg("B"))
      .def_property_readonly("name", &Instance::name)
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("A", &Instance::A)
      .def_property_readonly("B", &Instance::B)
      .def_property_readonly("C", &Instance::C)
      .def("__repr__", [](const Instance& inst) {
        return "Instance(name='" + inst.name() + "', n=" + std::to_string(inst.n()) +
               ")";
      });

  m.def("objective", &objective, py::arg("inst"), py::arg("perm"));
  m.def("objective_general", &objective_general, py::arg("inst"), py::arg("X"));
  m.def("gradient", &gradient, py::arg("inst"), py::arg("X"));

  py::class_<BruteForceResult>(m, "BruteForceResult")
      .def_readonly("perm", &BruteForceResult::perm)
      .def_readonly("value", &BruteForceResult::value);
  m.def("brute_force_min", &brute_force_min, py::arg("inst"));

  py::class_<LapSolution>(m, "LapSolution")
      .def_readonly("assignment", &LapSolution::assignment)
      .def_readonly("value", &LapSolution::value)
      .def_readonly("dual_feasible", &LapSolution::dual_feasible);
  m.def("solve_lap_min", &solve_lap_min, py::arg("cost"));
  m.def("solve_lap_max", &solve_lap_max, py::arg("profit"));
  py::enum_<Sense>(m, "Sense")
      .value("minimize", Sense::minimize)
      .value("maximize", Sense::maximize);
  m.def("brute_force_lap", &brute_force_lap, py::arg("cost"), py::arg("sense"));

  py::class_<RoundingResult>(m, "RoundingResult")
      .def_readonly("theta", &RoundingResult::theta)
      .def_readonly("perm", &RoundingResult::perm)
      .def_readonly("objective", &RoundingResult::objective)
      .def_readonly("lap_solves", &RoundingResult::lap_solves)
      .def("__repr__", [](const RoundingResult& r) {
        return "RoundingResult(theta=" + format_number(r.theta) +
               ", objective=" + format_number(r.objective) +
               ", lap_solves=" + std::to_string(r.lap_solves) + ")";
      });

  py::class_<ThetaSample>(m, "ThetaSample")
      .def_readonly("theta", &ThetaSample::theta)
      .def_readonly("objective", &ThetaSample::objective)
      .def_readonly("perm", &ThetaSample::perm);
  py::class_<ThetaProfile>(m, "ThetaProfile")
      .def_readonly("samples", &ThetaProfile::samples)
      .def_readonly("theta_max", &ThetaProfile::theta_max);

  m.def("nearest_permutation", &nearest_permutation, py::arg("xc"));
  m.def("round_x0", &round_x0, py::arg("inst"), py::arg("xc"));
  m.def("round_theta", &round_theta, py::arg("inst"), py::arg("xc"),
        py::arg("theta"));
  m.def("gamma_star", &gamma_star, py::arg("inst"));
  m.def("theta2", &theta2, py::arg("inst"));
  m.def("round_x2", &round_x2, py::arg("inst"), py::arg("xc"));
  m.def("default_theta_max", &default_theta_max, py::arg("inst"));
  m.def("golden_section_search",
        py::overload_cast<const Instance&, const Matrix&>(&golden_section_search),
        py::arg("inst"), py::arg("xc"));
  m.def("golden_section_search",
        py::overload_cast<const Instance&, const Matrix&, double>(
            &golden_section_search),
        py::arg("inst"), py::arg("xc"), py::arg("theta_max"));
  m.def("theta_profile", &theta_profile, py::arg("inst"), py::arg("xc"),
        py::arg("grid_points"), py::arg("theta_max"));

  py::class_<ProjectionBasis>(m, "ProjectionBasis")
      .def_readonly("n", &ProjectionBasis::n)
      .def_readonly("V", &ProjectionBasis::v);
  m.def("householder_basis", &householder_basis, py::arg("n"));
  m.def("gram_schmidt_basis", &gram_schmidt_basis, py::arg("n"), py::arg("seed"));
  py::class_<ReducedHessian>(m, "ReducedHessian")
      .def_readonly("n", &ReducedHessian::n)
      .def_readonly("H", &ReducedHessian::h);
  m.def("reduced_hessian", &reduced_hessian, py::arg("inst"), py::arg("basis"));
  m.def("best_gamma_numeric", &best_gamma_numeric, py::arg("H"));
  m.def("reduced_gamma", &reduced_gamma, py::arg("inst"), py::arg("basis"));

  py::class_<BasisCheck>(m, "BasisCheck")
      .def_readonly("label", &BasisCheck::label)
      .def_readonly("gamma", &BasisCheck::gamma)
      .def_readonly("gamma_deviation", &BasisCheck::gamma_deviation)
      .def_readonly("trace_deviation_a", &BasisCheck::trace_deviation_a)
      .def_readonly("trace_deviation_b", &BasisCheck::trace_deviation_b);
  py::class_<BasisIndependenceReport>(m, "BasisIndependenceReport")
      .def_readonly("gamma_closed_form", &BasisIndependenceReport::gamma_closed_form)
      .def_readonly("checks", &BasisIndependenceReport::checks)
      .def_readonly("max_gamma_deviation", &BasisIndependenceReport::max_gamma_deviation)
      .def_readonly("max_trace_deviation", &BasisIndependenceReport::max_trace_deviation)
      .def_readonly("passed", &BasisIndependenceReport::passed)
      .def_readonly("worst_basis", &BasisIndependenceReport::worst_basis);
  m.def("verify_basis_independence", &verify_basis_independence, py::arg("inst"), py::arg("trials"),
        py::arg("seed"));

  py::class_<DoublyStochastic>(m, "DoublyStochastic")
      .def(py::init<Matrix>(), py::arg("value"))
      .def_property_readonly("value", &DoublyStochastic::value)
      .def_property_readonly("n", &DoublyStochastic::n);

  py::class_<XcSpec>(m, "XcSpec")
      .def(py::init<int, std::vector<double>>(), py::arg("r"), py::arg("weights"))
      .def_static("uniform", &XcSpec::uniform, py::arg("r"))
      .def_readonly("r", &XcSpec::r)
      .def_readonly("weights", &XcSpec::weights);
  m.def("random_xc", &random_xc, py::arg("n"), py::arg("spec"), py::arg("seed"));

  py::class_<ComparisonRow>(m, "ComparisonRow")
      .def_readonly("instance", &ComparisonRow::instance)
      .def_readonly("n", &ComparisonRow::n)
      .def_readonly("r", &ComparisonRow::r)
      .def_readonly("runs", &ComparisonRow::runs)
      .def_readonly("seed", &ComparisonRow::seed)
      .def_readonly("mean_f0", &ComparisonRow::mean_f0)
      .def_readonly("mean_f1", &ComparisonRow::mean_f1)
      .def_readonly("mean_f2", &ComparisonRow::mean_f2)
      .def_readonly("mean_ratio0", &ComparisonRow::mean_ratio0)
      .def_readonly("mean_ratio1", &ComparisonRow::mean_ratio1)
      .def_readonly("mean_ratio2", &ComparisonRow::mean_ratio2)
      .def_readonly("theta2", &ComparisonRow::theta2)
      .def_readonly("mean_theta1", &ComparisonRow::mean_theta1)
      .def_readonly("mean_lap_solves", &ComparisonRow::mean_lap_solves)
      .def_readonly("mean_run_seconds", &ComparisonRow::mean_run_seconds);
  m.def("run_comparison", &run_comparison, py::arg("inst"), py::arg("spec"),
        py::arg("runs"), py::arg("seed"));

  py::enum_<RMode>(m, "RMode").value("two", RMode::two).value("half_n", RMode::half_n);
  py::class_<TableEntry>(m, "TableEntry")
      .def_readonly("row", &TableEntry::row)
      .def_readonly("error", &TableEntry::error);
  m.def("run_table", &run_table, py::arg("instances"), py::arg("mode"),
        py::arg("runs"), py::arg("seed"));

  m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("label"),
        py::arg("index"));

  m.def(
      "parse_instance",
      [](const std::string& text, std::string name) {
        return parse_instance(std::string_view(text), std::move(name));
      },
      py::arg("text"), py::arg("name"));
  m.def("load_instance", &load_instance, py::arg("path"));
  m.def(
      "parse_solution",
      [](const std::string& text) { return parse_solution(std::string_view(text)); },
      py::arg("text"));
  m.def("load_solution", &load_solution, py::arg("path"));
  py::class_<SolutionFile>(m, "SolutionFile")
      .def_readonly("n", &SolutionFile::n)
      .def_readonly("value", &SolutionFile::value)
      .def_readonly("perm", &SolutionFile::perm);

  m.def(
      "profile_csv",
      [](const ThetaProfile& profile) {
        std::ostringstream out;
        write_profile_csv(profile, out);
        return out.str();
      },
      py::arg("profile"));
  m.def(
      "comparison_csv",
      [](const std::vector<ComparisonRow>& rows) {
        std::ostringstream out;
        write_comparison_csv(rows, out);
        return out.str();
      },
      py::arg("rows"));
}
