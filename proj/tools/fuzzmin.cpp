// fuzzmin: command-line front end for the fuzzymin library.
//
// Exit codes: 0 decided (either verdict), 2 input or usage error,
// 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fuzzymin/fuzzymin.hpp"

namespace {

using namespace fuzzymin;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// FUZZMIN_BUDGET is either a bare number (candidate ceiling) or a comma
/// separated list of key=value with keys candidates, phi, vectors, words.
Budgets budgets_from_env() {
  Budgets b;
  const char* env = std::getenv("FUZZMIN_BUDGET");
  if (!env || !*env) return b;
  auto to_u64 = [](const std::string& s) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw InvalidInput("FUZZMIN_BUDGET: '" + s + "' is not a number");
    return static_cast<std::uint64_t>(v);
  };
  std::string text(env);
  if (text.find('=') == std::string::npos) {
    b.candidates = to_u64(text);
    return b;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("FUZZMIN_BUDGET: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::uint64_t v = to_u64(item.substr(eq + 1));
    if (key == "candidates") b.candidates = v;
    else if (key == "phi") b.phi = v;
    else if (key == "vectors") b.vectors = v;
    else if (key == "words") b.words = v;
    else throw InvalidInput("FUZZMIN_BUDGET: unknown key '" + key + "'");
  }
  return b;
}

std::string format_interval(const Chain& c, const Interval& i) {
  if (i.is_empty()) return "EMPTY";
  return "[" + c.label(i.lo()) + "," + c.label(i.hi()) + "]";
}

std::string format_vector(const Chain& c, const IntervalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ", ";
    out += format_interval(c, v[i]);
  }
  return out + ")";
}

std::string format_point(const Chain& c, const PointAssignment& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    if (i) out += ", ";
    out += c.label(p.values[i]);
  }
  return out + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivalence and state minimization of fuzzy automata over finite chains"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t budget_candidates = 0, budget_phi = 0;
  app.add_option("--budget-candidates", budget_candidates, "Ceiling on candidate automata the minimizer may enumerate");
  app.add_option("--budget-phi", budget_phi, "Ceiling on suffix vectors per equivalence check");

  // eval
  auto* eval = app.add_subcommand("eval", "Print the degree f(word) to which an automaton accepts a word");
  std::string eval_file, eval_word;
  eval->add_option("automaton", eval_file, "Automaton document")->required();
  eval->add_option("word", eval_word, "Whitespace-separated symbols; empty string is the empty word")->required();

  // equiv
  auto* equiv = app.add_subcommand("equiv", "Decide whether two automata recognize the same fuzzy language");
  std::string eq_a, eq_b;
  bool oracle_bound = false;
  equiv->add_option("first", eq_a, "Automaton document")->required();
  equiv->add_option("second", eq_b, "Automaton document")->required();
  equiv->add_flag("--oracle-bound", oracle_bound, "Check every word up to the d^(n1+n2)-1 length bound instead of the fixpoint");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve a system of fuzzy polynomial equations");
  std::string solve_file, mode = "intervals";
  solve->add_option("system", solve_file, "System document")->required();
  solve->add_option("--mode", mode, "intervals or points")->check(CLI::IsMember({"intervals", "points"}));

  // decide-min
  auto* decide = app.add_subcommand("decide-min", "Find a k-state automaton equivalent to the input, or report empty");
  std::string decide_file;
  std::size_t decide_k_arg = 0;
  decide->add_option("document", decide_file, "Automaton or instance document")->required();
  decide->add_option("k", decide_k_arg, "Target state count (taken from an instance document when omitted)");

  // minimize
  auto* minim = app.add_subcommand("minimize", "Emit a state-minimal equivalent automaton");
  std::string minimize_file;
  minim->add_option("automaton", minimize_file, "Automaton document")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random automaton or equation system");
  gen->require_subcommand(1);
  std::uint64_t seed = 0;
  std::size_t chain_size = 3;
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--chain-size", chain_size, "Number of chain values (>= 2)");
  auto* gen_aut = gen->add_subcommand("automaton", "Random automaton");
  std::size_t states = 2, symbols = 2;
  gen_aut->add_option("--states", states, "State count");
  gen_aut->add_option("--symbols", symbols, "Alphabet size");
  auto* gen_sys = gen->add_subcommand("system", "Random equation system");
  std::size_t vars = 3, equations = 2, monomials = 2;
  gen_sys->add_option("--vars", vars, "Variable count");
  gen_sys->add_option("--equations", equations, "Equation count");
  gen_sys->add_option("--monomials", monomials, "Maximum monomials per equation");
  gen->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Budgets budget = budgets_from_env();
    if (budget_candidates) budget.candidates = budget_candidates;
    if (budget_phi) budget.phi = budget_phi;

    if (*eval) {
      FuzzyAutomaton a = io::parse_automaton(read_file(eval_file));
      Word w = a.parse_word(eval_word);
      std::cout << a.chain().label(language_value(a, w)) << "\n";
    } else if (*equiv) {
      FuzzyAutomaton a1 = io::parse_automaton(read_file(eq_a));
      FuzzyAutomaton a2 = io::parse_automaton(read_file(eq_b));
      if (oracle_bound) {
        std::uint64_t bound = theorem3_bound(a1, a2, budget.words);
        EquivalenceResult r = k_equivalent(a1, a2, bound, budget);
        if (r.equivalent) std::cout << "equivalent\nword bound: " << bound << "\n";
        else std::cout << "not equivalent\ncounterexample: " << a1.format_word(*r.counterexample) << "\n";
      } else {
        EquivalenceResult r = equivalent_fixpoint(a1, a2, {true, budget});
        if (r.equivalent) std::cout << "equivalent\nstabilization index: " << *r.stabilization_index << "\n";
        else std::cout << "not equivalent\ncounterexample: " << a1.format_word(*r.counterexample) << "\n";
      }
    } else if (*solve) {
      EquationSystem sys = io::parse_system(read_file(solve_file));
      if (mode == "points") {
        auto p = solve_points(sys);
        std::cout << (p ? format_point(sys.chain(), *p) : std::string("unsolvable")) << "\n";
      } else {
        SolutionSet s = solve_intervals(sys, budget);
        auto members = s.nonempty_vectors();
        if (members.empty()) std::cout << "unsolvable\n";
        for (const auto& v : members) std::cout << format_vector(sys.chain(), v) << "\n";
      }
    } else if (*decide) {
      io::Document doc = io::parse_document(read_file(decide_file));
      std::optional<MinimizeInstance> inst;
      if (auto* a = std::get_if<FuzzyAutomaton>(&doc)) {
        if (!decide_k_arg) throw InvalidInput("decide-min on an automaton document needs k");
        inst.emplace(*a, decide_k_arg);
      } else if (auto* i = std::get_if<MinimizeInstance>(&doc)) {
        inst.emplace(i->automaton, decide_k_arg ? decide_k_arg : i->k);
      } else {
        throw InvalidInput("decide-min expects an automaton or instance document");
      }
      DecideResult r = decide_k(*inst, budget);
      std::cout << (r.witness ? io::render_automaton(*r.witness) : std::string("empty\n"));
    } else if (*minim) {
      FuzzyAutomaton a = io::parse_automaton(read_file(minimize_file));
      std::cout << io::render_automaton(minimize(a, budget));
    } else if (*gen) {
      if (*gen_aut) std::cout << io::render_automaton(random::gen_random(seed, states, symbols, chain_size));
      else std::cout << io::render_system(random::gen_random_system(seed, vars, equations, monomials, chain_size));
    }
  } catch (const MinimizeBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\ncount: " << e.count() << "\nundecided k: " << e.k() << "\n";
    return kExitBudget;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\ncount: " << e.count() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
