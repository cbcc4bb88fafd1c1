#ifndef FUZZYMIN_IO_HPP
#define FUZZYMIN_IO_HPP

// JSON documents for automata, equation systems and minimization instances.
//
// Values are decimal strings and must be members of the declared chain.
// Rendering is canonical: fixed key order, two-space indentation, compact
// arrays, canonical decimals, trailing newline.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fuzzymin/automaton.hpp"
#include "fuzzymin/minimizer.hpp"
#include "fuzzymin/sfpe.hpp"

namespace fuzzymin::io {

using json = nlohmann::json;

/// Malformed document. `line`/`column` are 1-based and 0 when not applicable.
class ParseError : public InvalidInput {
public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : InvalidInput(line ? what + " at line " + std::to_string(line) + ", column " + std::to_string(column) : what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_, column_;
};

namespace detail {

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character
    std::size_t line = 1, col = 1;
    std::size_t end = std::min<std::size_t>(e.byte ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line, col);
  }
}

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

inline const json& array_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  return v;
}

inline std::size_t count_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

inline std::string string_value(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": values must be decimal strings");
  return v.get<std::string>();
}

inline ChainValue chain_value(const Chain& c, const json& v, const std::string& where) {
  std::string s = string_value(v, where);
  try {
    return c.value_of(s);
  } catch (const InvalidInput& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Chain parse_chain(const json& doc) {
  std::vector<std::string> labels;
  for (const auto& v : array_field(doc, "chain")) labels.push_back(string_value(v, "chain"));
  try {
    return Chain(labels);
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("chain: ") + e.what());
  }
}

inline void expect_kind(const json& doc, const char* kind) {
  const json& k = field(doc, "kind");
  if (!k.is_string() || k.get<std::string>() != kind)
    throw ParseError(std::string("expected a document of kind '") + kind + "'");
}

inline std::string dump_labels(const Chain& c, std::span<const ChainValue> vs) {
  json arr = json::array();
  for (auto v : vs) arr.push_back(c.label(v));
  return arr.dump();
}

inline FuzzyAutomaton automaton_from_json(const json& doc) {
  expect_kind(doc, "automaton");
  Chain chain = parse_chain(doc);
  std::vector<std::string> alphabet;
  for (const auto& s : array_field(doc, "alphabet")) {
    if (!s.is_string()) throw ParseError("alphabet: symbols must be strings");
    alphabet.push_back(s.get<std::string>());
  }
  const std::size_t n = count_field(doc, "n");
  if (n == 0) throw ParseError("n: an automaton needs at least one state");

  auto vector_of = [&](const char* key) {
    const json& arr = array_field(doc, key);
    if (arr.size() != n) throw ParseError(std::string(key) + ": expected " + std::to_string(n) + " values, got " + std::to_string(arr.size()));
    std::vector<ChainValue> out;
    for (const auto& v : arr) out.push_back(chain_value(chain, v, key));
    return out;
  };
  FuzzyMatrix pi(chain, 1, n, vector_of("pi"));
  FuzzyMatrix eta(chain, n, 1, vector_of("eta"));

  const json& d = field(doc, "delta");
  if (!d.is_object()) throw ParseError("delta must map each symbol to an n x n matrix");
  for (const auto& [sym, _] : d.items())
    if (std::find(alphabet.begin(), alphabet.end(), sym) == alphabet.end())
      throw ParseError("delta: symbol '" + sym + "' is not in the alphabet");
  std::vector<FuzzyMatrix> delta;
  for (const auto& sym : alphabet) {
    auto it = d.find(sym);
    if (it == d.end()) throw ParseError("delta: missing matrix for symbol '" + sym + "'");
    const std::string where = "delta." + sym;
    if (!it->is_array() || it->size() != n) throw ParseError(where + ": expected " + std::to_string(n) + " rows");
    std::vector<ChainValue> entries;
    for (const auto& row : *it) {
      if (!row.is_array() || row.size() != n) throw ParseError(where + ": every row needs " + std::to_string(n) + " values");
      for (const auto& v : row) entries.push_back(chain_value(chain, v, where));
    }
    delta.emplace_back(chain, n, n, std::move(entries));
  }
  try {
    return FuzzyAutomaton(chain, std::move(alphabet), std::move(pi), std::move(eta), std::move(delta));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

inline std::string automaton_body(const FuzzyAutomaton& a, const std::string& indent) {
  const Chain& c = a.chain();
  const std::size_t n = a.states();
  json alphabet = a.alphabet();
  std::string out;
  out += indent + "\"kind\": \"automaton\",\n";
  out += indent + "\"chain\": " + json(c.labels()).dump() + ",\n";
  out += indent + "\"alphabet\": " + alphabet.dump() + ",\n";
  out += indent + "\"n\": " + std::to_string(n) + ",\n";
  out += indent + "\"pi\": " + dump_labels(c, a.pi().entries()) + ",\n";
  out += indent + "\"eta\": " + dump_labels(c, a.eta().entries()) + ",\n";
  out += indent + "\"delta\": {\n";
  for (std::size_t s = 0; s < a.alphabet().size(); ++s) {
    json rows = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < n; ++j) row.push_back(c.label(a.delta(s)(i, j)));
      rows.push_back(std::move(row));
    }
    out += indent + "  " + json(a.alphabet()[s]).dump() + ": " + rows.dump();
    out += s + 1 < a.alphabet().size() ? ",\n" : "\n";
  }
  out += indent + "}\n";
  return out;
}

}  // namespace detail

inline FuzzyAutomaton parse_automaton(std::string_view text) { return detail::automaton_from_json(detail::parse_json(text)); }

inline std::string render_automaton(const FuzzyAutomaton& a) { return "{\n" + detail::automaton_body(a, "  ") + "}\n"; }

/// Equation systems: variables are 1-based in the document.
inline EquationSystem parse_system(std::string_view text) {
  json doc = detail::parse_json(text);
  detail::expect_kind(doc, "system");
  Chain chain = detail::parse_chain(doc);
  const std::size_t n_vars = detail::count_field(doc, "n_vars");
  std::vector<Equation> eqs;
  std::size_t idx = 0;
  for (const auto& e : detail::array_field(doc, "equations")) {
    ++idx;
    const std::string where = "equation " + std::to_string(idx);
    std::vector<Monomial> ms;
    const json& mono = e.is_object() ? e.value("monomials", json()) : json();
    if (!mono.is_array() || mono.empty()) throw ParseError(where + ": needs a nonempty 'monomials' array");
    for (const auto& m : mono) {
      if (!m.is_array() || m.empty()) throw ParseError(where + ": each monomial is a nonempty list of variable indices");
      std::vector<std::size_t> vars;
      for (const auto& v : m) {
        if (!v.is_number_unsigned() || v.get<std::size_t>() == 0 || v.get<std::size_t>() > n_vars)
          throw ParseError(where + ": variable indices run from 1 to " + std::to_string(n_vars));
        vars.push_back(v.get<std::size_t>() - 1);
      }
      ms.emplace_back(std::move(vars));
    }
    if (!e.contains("rhs")) throw ParseError(where + ": missing 'rhs'");
    eqs.push_back({Polynomial(std::move(ms)), Relation::EQ, detail::chain_value(chain, e["rhs"], where)});
  }
  return EquationSystem(chain, n_vars, std::move(eqs));
}

inline std::string render_system(const EquationSystem& sys) {
  if (!sys.all_equalities()) throw InvalidInput("only systems of equations can be rendered");
  const Chain& c = sys.chain();
  std::string out = "{\n";
  out += "  \"kind\": \"system\",\n";
  out += "  \"chain\": " + json(c.labels()).dump() + ",\n";
  out += "  \"n_vars\": " + std::to_string(sys.n_vars()) + ",\n";
  out += "  \"equations\": [";
  const auto& eqs = sys.equations();
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    json mono = json::array();
    for (const auto& m : eqs[i].lhs.monomials()) {
      json vars = json::array();
      for (auto v : m.vars()) vars.push_back(v + 1);
      mono.push_back(std::move(vars));
    }
    out += i ? ",\n" : "\n";
    out += "    {\"monomials\": " + mono.dump() + ", \"rhs\": " + json(c.label(eqs[i].rhs)).dump() + "}";
  }
  out += eqs.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

inline MinimizeInstance parse_instance(std::string_view text) {
  json doc = detail::parse_json(text);
  detail::expect_kind(doc, "instance");
  const std::size_t k = detail::count_field(doc, "k");
  if (k == 0) throw ParseError("k: target state count must be at least 1");
  return MinimizeInstance(detail::automaton_from_json(detail::field(doc, "automaton")), k);
}

inline std::string render_instance(const MinimizeInstance& inst) {
  std::string out = "{\n";
  out += "  \"kind\": \"instance\",\n";
  out += "  \"k\": " + std::to_string(inst.k) + ",\n";
  out += "  \"automaton\": {\n" + detail::automaton_body(inst.automaton, "    ") + "  }\n";
  out += "}\n";
  return out;
}

using Document = std::variant<FuzzyAutomaton, EquationSystem, MinimizeInstance>;

/// Dispatches on the document's "kind".
inline Document parse_document(std::string_view text) {
  json doc = detail::parse_json(text);
  const json& kind = detail::field(doc, "kind");
  if (!kind.is_string()) throw ParseError("'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "automaton") return detail::automaton_from_json(doc);
  if (k == "system") return parse_system(text);
  if (k == "instance") return parse_instance(text);
  throw ParseError("unknown document kind '" + k + "'");
}

inline std::string render_document(const Document& d) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FuzzyAutomaton>) return render_automaton(v);
        else if constexpr (std::is_same_v<T, EquationSystem>) return render_system(v);
        else return render_instance(v);
      },
      d);
}

}  // namespace fuzzymin::io

#endif  // FUZZYMIN_IO_HPP
