// Command line front end.  One subcommand per query kind; every rational is
// printed exactly.  Exit codes: 0 success (holds / sat / value printed),
// 1 negative verdict (violated / unsat), 2 usage or input error, 3 internal
// consistency failure (a produced witness failed its re-verification).

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dltl/awa.hpp"
#include "dltl/checker.hpp"
#include "dltl/errors.hpp"
#include "dltl/eval.hpp"
#include "dltl/kripke.hpp"
#include "dltl/lasso.hpp"
#include "dltl/nba.hpp"
#include "dltl/parser.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dltl::ModelError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Inline text, or the contents of a file when prefixed with '@'.
std::string inline_or_file(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return read_file(arg.substr(1));
  return arg;
}

dltl::Rational parse_rational_arg(const std::string& text, const char* what) {
  std::optional<dltl::Rational> value = dltl::Rational::parse(text);
  if (!value) throw dltl::ModelError(std::string("cannot parse ") + what + " '" + text + "'");
  return *value;
}

std::vector<std::string> split_atoms(const std::string& list) {
  std::vector<std::string> out;
  std::string current;
  for (char c : list) {
    if (c == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

int run_check(const std::string& model_path, const std::string& formula_arg,
              const std::string& threshold_arg) {
  dltl::FormulaFactory factory;
  dltl::KripkeStructure k = dltl::load_kripke(read_file(model_path));
  dltl::FormulaId phi = dltl::parse_formula(factory, inline_or_file(formula_arg));
  dltl::Rational v = parse_rational_arg(threshold_arg, "threshold");
  dltl::CheckVerdict verdict = dltl::check_at_least(factory, k, phi, v);
  if (verdict.holds) {
    std::cout << "HOLDS\n";
    return 0;
  }
  std::cout << "VIOLATED\n";
  std::cout << "counterexample: " << verdict.counterexample->to_text() << "\n";
  std::cout << "value: " << verdict.counterexample_value.str() << "\n";
  return 1;
}

int run_sat(const std::string& formula_arg, const std::string& threshold_arg,
            const std::string& atoms_arg) {
  dltl::FormulaFactory factory;
  dltl::FormulaId phi = dltl::parse_formula(factory, inline_or_file(formula_arg));
  dltl::Rational v = parse_rational_arg(threshold_arg, "threshold");
  std::vector<std::string> atoms = factory.atoms(phi);
  for (const std::string& extra : split_atoms(atoms_arg)) atoms.push_back(extra);
  std::optional<dltl::Lasso> witness =
      dltl::satisfiable_above(factory, phi, v, dltl::boolean_alphabet(std::move(atoms)));
  if (!witness) {
    std::cout << "UNSAT\n";
    return 1;
  }
  std::cout << "SAT\n";
  std::cout << "witness: " << witness->to_text() << "\n";
  std::cout << "value: " << dltl::eval_lasso(factory, phi, *witness).str() << "\n";
  return 0;
}

int run_eval(const std::string& lasso_arg, const std::string& formula_arg) {
  dltl::FormulaFactory factory;
  dltl::Lasso lasso = dltl::Lasso::parse(lasso_arg);
  dltl::FormulaId phi = dltl::parse_formula(factory, inline_or_file(formula_arg));
  std::cout << dltl::eval_lasso(factory, phi, lasso).str() << "\n";
  return 0;
}

int run_translate(const std::string& formula_arg, const std::string& threshold_arg, bool with_nba,
                  bool with_graph) {
  dltl::FormulaFactory factory;
  dltl::FormulaId phi = dltl::parse_formula(factory, inline_or_file(formula_arg));
  dltl::Rational v = parse_rational_arg(threshold_arg, "threshold");
  dltl::Awa awa = dltl::build_awa(factory, phi, dltl::Cmp::Greater, v,
                                  dltl::boolean_alphabet(factory.atoms(phi)));
  std::cout << dltl::dump_awa(awa, factory);
  if (with_graph) std::cout << dltl::dump_awa_dot(awa, factory);
  if (with_nba) {
    dltl::Nba nba = dltl::awa_to_nba(factory, awa);
    std::cout << dltl::dump_nba(nba);
    if (with_graph) std::cout << dltl::dump_nba_dot(nba);
  }
  return 0;
}

int run_value(const std::string& model_path, const std::string& formula_arg,
              const std::string& epsilon_arg) {
  dltl::FormulaFactory factory;
  dltl::KripkeStructure k = dltl::load_kripke(read_file(model_path));
  dltl::FormulaId phi = dltl::parse_formula(factory, inline_or_file(formula_arg));
  dltl::Rational epsilon = parse_rational_arg(epsilon_arg, "epsilon");
  dltl::ValueInterval interval = dltl::approximate_value(factory, k, phi, epsilon);
  std::cout << "[" << interval.lo.str() << ", " << interval.hi.str() << "]\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold verification for linear temporal logic with discounting"};
  app.require_subcommand(1);

  std::string model_path;
  std::string formula_arg;
  std::string threshold_arg;
  std::string epsilon_arg;
  std::string lasso_arg;
  std::string atoms_arg;
  bool with_nba = false;
  bool with_graph = false;

  CLI::App* check = app.add_subcommand(
      "check", "Does every computation of the model satisfy the formula with value >= threshold?");
  check->add_option("model", model_path, "Model file")->required();
  check->add_option("formula", formula_arg, "Formula text, or @file")->required();
  check->add_option("threshold", threshold_arg, "Rational threshold in [0,1]")->required();

  CLI::App* sat = app.add_subcommand(
      "sat", "Find a computation whose value is strictly above the threshold");
  sat->add_option("formula", formula_arg, "Formula text, or @file")->required();
  sat->add_option("threshold", threshold_arg, "Rational threshold in [0,1]")->required();
  sat->add_option("--atoms", atoms_arg, "Extra atoms for the alphabet, comma separated");

  CLI::App* eval = app.add_subcommand("eval", "Exact value of a formula on a lasso word");
  eval->add_option("lasso", lasso_arg, "Lasso text: \"u-letters ; v-letters\"")->required();
  eval->add_option("formula", formula_arg, "Formula text, or @file")->required();

  CLI::App* translate =
      app.add_subcommand("translate", "Dump the automata compiled from formula > threshold");
  translate->add_option("formula", formula_arg, "Formula text, or @file")->required();
  translate->add_option("threshold", threshold_arg, "Rational threshold in [0,1]")->required();
  translate->add_flag("--nba", with_nba, "Also dump the nondeterministic automaton");
  translate->add_flag("--graph", with_graph, "Also emit graphviz descriptions");

  CLI::App* value = app.add_subcommand(
      "value", "Bracket the model's satisfaction value within epsilon by binary search");
  value->add_option("model", model_path, "Model file")->required();
  value->add_option("formula", formula_arg, "Formula text, or @file")->required();
  value->add_option("epsilon", epsilon_arg, "Positive rational width bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(check)) return run_check(model_path, formula_arg, threshold_arg);
    if (app.got_subcommand(sat)) return run_sat(formula_arg, threshold_arg, atoms_arg);
    if (app.got_subcommand(eval)) return run_eval(lasso_arg, formula_arg);
    if (app.got_subcommand(translate)) {
      return run_translate(formula_arg, threshold_arg, with_nba, with_graph);
    }
    if (app.got_subcommand(value)) return run_value(model_path, formula_arg, epsilon_arg);
  } catch (const dltl::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const dltl::ParseError& e) {
    if (e.line() > 0) {
      std::cerr << "parse error at " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    } else {
      std::cerr << "parse error: " << e.what() << "\n";
    }
    return 2;
  } catch (const dltl::ModelError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
