// Python module: thin, stateless, text-in/text-out wrappers around the core
// pipeline.  Values travel as exact rational strings ("a/b"); the package
// __init__ upgrades them to fractions.Fraction.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dltl/awa.hpp"
#include "dltl/checker.hpp"
#include "dltl/errors.hpp"
#include "dltl/eval.hpp"
#include "dltl/kripke.hpp"
#include "dltl/lasso.hpp"
#include "dltl/nba.hpp"
#include "dltl/parser.hpp"

namespace py = pybind11;

namespace {

dltl::Rational parse_rational(const std::string& text, const char* what) {
  std::optional<dltl::Rational> value = dltl::Rational::parse(text);
  if (!value) throw dltl::ModelError(std::string("cannot parse ") + what + " '" + text + "'");
  return *value;
}

std::string eval_lasso_text(const std::string& lasso_text, const std::string& formula_text) {
  dltl::FormulaFactory factory;
  dltl::Lasso lasso = dltl::Lasso::parse(lasso_text);
  dltl::FormulaId phi = dltl::parse_formula(factory, formula_text);
  return dltl::eval_lasso(factory, phi, lasso).str();
}

std::tuple<bool, std::optional<std::string>, std::optional<std::string>> check_at_least_text(
    const std::string& model_text, const std::string& formula_text,
    const std::string& threshold_text) {
  dltl::FormulaFactory factory;
  dltl::KripkeStructure k = dltl::load_kripke(model_text);
  dltl::FormulaId phi = dltl::parse_formula(factory, formula_text);
  dltl::CheckVerdict verdict =
      dltl::check_at_least(factory, k, phi, parse_rational(threshold_text, "threshold"));
  if (verdict.holds) return {true, std::nullopt, std::nullopt};
  return {false, verdict.counterexample->to_text(), verdict.counterexample_value.str()};
}

std::optional<std::pair<std::string, std::string>> satisfiable_above_text(
    const std::string& formula_text, const std::string& threshold_text,
    const std::vector<std::string>& extra_atoms) {
  dltl::FormulaFactory factory;
  dltl::FormulaId phi = dltl::parse_formula(factory, formula_text);
  std::vector<std::string> atoms = factory.atoms(phi);
  atoms.insert(atoms.end(), extra_atoms.begin(), extra_atoms.end());
  std::optional<dltl::Lasso> witness =
      dltl::satisfiable_above(factory, phi, parse_rational(threshold_text, "threshold"),
                              dltl::boolean_alphabet(std::move(atoms)));
  if (!witness) return std::nullopt;
  return std::make_pair(witness->to_text(), dltl::eval_lasso(factory, phi, *witness).str());
}

std::pair<std::string, std::string> value_bounds_text(const std::string& model_text,
                                                      const std::string& formula_text,
                                                      const std::string& epsilon_text) {
  dltl::FormulaFactory factory;
  dltl::KripkeStructure k = dltl::load_kripke(model_text);
  dltl::FormulaId phi = dltl::parse_formula(factory, formula_text);
  dltl::ValueInterval interval =
      dltl::approximate_value(factory, k, phi, parse_rational(epsilon_text, "epsilon"));
  return {interval.lo.str(), interval.hi.str()};
}

std::string translate_text(const std::string& formula_text, const std::string& threshold_text,
                           bool with_nba) {
  dltl::FormulaFactory factory;
  dltl::FormulaId phi = dltl::parse_formula(factory, formula_text);
  dltl::Awa awa =
      dltl::build_awa(factory, phi, dltl::Cmp::Greater, parse_rational(threshold_text, "threshold"),
                      dltl::boolean_alphabet(factory.atoms(phi)));
  std::string out = dltl::dump_awa(awa, factory);
  if (with_nba) out += dltl::dump_nba(dltl::awa_to_nba(factory, awa));
  return out;
}

std::string pretty_text(const std::string& formula_text) {
  dltl::FormulaFactory factory;
  return factory.to_text(dltl::parse_formula(factory, formula_text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Threshold verification for linear temporal logic with discounting";
  py::register_exception<dltl::ParseError>(m, "FormulaParseError", PyExc_ValueError);
  py::register_exception<dltl::ModelError>(m, "ModelInputError", PyExc_ValueError);
  py::register_exception<dltl::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("eval_lasso", &eval_lasso_text, py::arg("lasso"), py::arg("formula"),
        "Exact value of the formula on the lasso word, as a rational string.");
  m.def("check_at_least", &check_at_least_text, py::arg("model"), py::arg("formula"),
        py::arg("threshold"),
        "Returns (holds, counterexample lasso or None, counterexample value or None).");
  m.def("satisfiable_above", &satisfiable_above_text, py::arg("formula"), py::arg("threshold"),
        py::arg("extra_atoms") = std::vector<std::string>{},
        "Returns (witness lasso, value) with value strictly above the threshold, or None.");
  m.def("value_bounds", &value_bounds_text, py::arg("model"), py::arg("formula"),
        py::arg("epsilon"), "Returns (lo, hi) bracketing the model's value within epsilon.");
  m.def("translate", &translate_text, py::arg("formula"), py::arg("threshold"),
        py::arg("with_nba") = true, "Deterministic automaton dumps for formula > threshold.");
  m.def("pretty", &pretty_text, py::arg("formula"), "Canonical text form of the formula.");
}
