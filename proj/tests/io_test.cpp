#include <gtest/gtest.h>

#include "fuzzymin/io.hpp"
#include "fuzzymin/random.hpp"
#include "support.hpp"

using namespace fuzzymin;

namespace {

const char* kMinimal = R"({"kind": "automaton", "chain": ["0", "1"], "alphabet": ["a"], "n": 1,
 "pi": ["1"], "eta": ["1"], "delta": {"a": [["0"]]}})";

const char* kCanonical =
    "{\n"
    "  \"kind\": \"automaton\",\n"
    "  \"chain\": [\"0\",\"0.5\",\"0.6\",\"0.8\",\"1\"],\n"
    "  \"alphabet\": [\"a\"],\n"
    "  \"n\": 2,\n"
    "  \"pi\": [\"1\",\"1\"],\n"
    "  \"eta\": [\"0.8\",\"0.8\"],\n"
    "  \"delta\": {\n"
    "    \"a\": [[\"0.6\",\"0.6\"],[\"0.6\",\"0.6\"]]\n"
    "  }\n"
    "}\n";

}  // namespace

TEST(AutomatonDocument, MinimalParses) {
  FuzzyAutomaton a = io::parse_automaton(kMinimal);
  EXPECT_EQ(a.states(), 1u);
  EXPECT_EQ(a.alphabet(), std::vector<std::string>{"a"});
  EXPECT_EQ(a.delta(0)(0, 0), a.chain().bottom());
}

TEST(AutomatonDocument, CanonicalRender) {
  EXPECT_EQ(io::render_automaton(support::duplicated()), kCanonical);
  EXPECT_EQ(io::render_automaton(io::parse_automaton(kCanonical)), kCanonical);
  // labels are canonicalized on the way in
  std::string sloppy = R"({"delta": {"a": [[".60", "0.6"], ["0.6", "0.60"]]}, "n": 2, "eta": ["0.80", "0.8"],
    "pi": ["1.0", "1"], "alphabet": ["a"], "chain": ["0", "0.5", "0.6", "0.8", "1"], "kind": "automaton"})";
  EXPECT_EQ(io::render_automaton(io::parse_automaton(sloppy)), kCanonical);
}

TEST(AutomatonDocument, ValueNotInChain) {
  std::string doc = R"({"kind": "automaton", "chain": ["0", "0.5", "1"], "alphabet": ["a"], "n": 1,
    "pi": ["1"], "eta": ["0.65"], "delta": {"a": [["0"]]}})";
  try {
    io::parse_automaton(doc);
    FAIL() << "expected ParseError";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("0.65"), std::string::npos) << e.what();
  }
}

TEST(AutomatonDocument, SyntaxErrorPosition) {
  std::string doc = "{\n  \"kind\": \"automaton\",\n  \"chain\": [\"0\" \"1\"]\n}";
  try {
    io::parse_automaton(doc);
    FAIL() << "expected ParseError";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 19u);  // last character of the unexpected "1"
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(AutomatonDocument, ShapeErrors) {
  auto with = [](const std::string& n, const std::string& pi, const std::string& delta) {
    return R"({"kind": "automaton", "chain": ["0", "1"], "alphabet": ["a"], "n": )" + n + R"(, "pi": )" + pi +
           R"(, "eta": ["1"], "delta": )" + delta + "}";
  };
  EXPECT_NO_THROW(io::parse_automaton(with("1", R"(["1"])", R"({"a": [["1"]]})")));
  EXPECT_THROW(io::parse_automaton(with("1", R"(["1", "0"])", R"({"a": [["1"]]})")), io::ParseError);
  EXPECT_THROW(io::parse_automaton(with("1", R"(["1"])", R"({"a": [["1", "0"]]})")), io::ParseError);
  EXPECT_THROW(io::parse_automaton(with("1", R"(["1"])", R"({"b": [["1"]]})")), io::ParseError);
  EXPECT_THROW(io::parse_automaton(with("1", R"(["1"])", R"({})")), io::ParseError);
  EXPECT_THROW(io::parse_automaton(with("0", R"([])", R"({"a": []})")), io::ParseError);
  EXPECT_THROW(io::parse_automaton(R"({"kind": "system"})"), io::ParseError);
  EXPECT_THROW(io::parse_automaton("[]"), io::ParseError);
}

TEST(SystemDocument, ParseAndRender) {
  std::string doc = R"({"kind": "system", "chain": ["0", "0.5", "1"], "n_vars": 3,
    "equations": [{"monomials": [[2, 1], [3]], "rhs": "0.5"}, {"monomials": [[3]], "rhs": "0"}]})";
  EquationSystem sys = io::parse_system(doc);
  EXPECT_EQ(sys.n_vars(), 3u);
  ASSERT_EQ(sys.equations().size(), 2u);
  EXPECT_EQ(sys.equations()[0].lhs, (Polynomial{{0, 1}, {2}}));
  const std::string canonical =
      "{\n"
      "  \"kind\": \"system\",\n"
      "  \"chain\": [\"0\",\"0.5\",\"1\"],\n"
      "  \"n_vars\": 3,\n"
      "  \"equations\": [\n"
      "    {\"monomials\": [[1,2],[3]], \"rhs\": \"0.5\"},\n"
      "    {\"monomials\": [[3]], \"rhs\": \"0\"}\n"
      "  ]\n"
      "}\n";
  EXPECT_EQ(io::render_system(sys), canonical);
  EXPECT_EQ(io::parse_system(canonical), sys);
}

TEST(SystemDocument, Errors) {
  auto with = [](const std::string& eqs) {
    return R"({"kind": "system", "chain": ["0", "1"], "n_vars": 2, "equations": )" + eqs + "}";
  };
  EXPECT_NO_THROW(io::parse_system(with("[]")));
  EXPECT_THROW(io::parse_system(with(R"([{"monomials": [[0]], "rhs": "1"}])")), io::ParseError);
  EXPECT_THROW(io::parse_system(with(R"([{"monomials": [[3]], "rhs": "1"}])")), io::ParseError);
  EXPECT_THROW(io::parse_system(with(R"([{"monomials": [], "rhs": "1"}])")), io::ParseError);
  EXPECT_THROW(io::parse_system(with(R"([{"monomials": [[1]]}])")), io::ParseError);
  EXPECT_THROW(io::parse_system(with(R"([{"monomials": [[1]], "rhs": "0.3"}])")), InvalidInput);
}

TEST(InstanceDocument, RoundTrip) {
  MinimizeInstance inst(support::duplicated(), 1);
  std::string text = io::render_instance(inst);
  MinimizeInstance back = io::parse_instance(text);
  EXPECT_EQ(back.k, 1u);
  EXPECT_EQ(io::render_automaton(back.automaton), kCanonical);
  EXPECT_EQ(io::render_instance(back), text);
  auto doc = io::parse_document(text);
  EXPECT_TRUE(std::holds_alternative<MinimizeInstance>(doc));
  EXPECT_EQ(io::render_document(doc), text);
  EXPECT_THROW(io::parse_document(R"({"kind": "graph"})"), io::ParseError);
}

TEST(Generation, RoundTripOnGeneratedDocuments) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    FuzzyAutomaton a = random::gen_random(seed, 1 + seed % 4, 1 + seed % 3, 2 + seed % 5);
    std::string text = io::render_automaton(a);
    EXPECT_EQ(io::render_automaton(io::parse_automaton(text)), text);
    EquationSystem s = random::gen_random_system(seed, 1 + seed % 4, seed % 5, 1 + seed % 3, 2 + seed % 5);
    std::string st = io::render_system(s);
    EXPECT_EQ(io::parse_system(st), s);
    EXPECT_EQ(io::render_system(io::parse_system(st)), st);
  }
}

TEST(Generation, Deterministic) {
  EXPECT_EQ(io::render_automaton(random::gen_random(7, 3, 2, 4)), io::render_automaton(random::gen_random(7, 3, 2, 4)));
  EXPECT_NE(io::render_automaton(random::gen_random(7, 3, 2, 4)), io::render_automaton(random::gen_random(8, 3, 2, 4)));
  EXPECT_EQ(io::render_system(random::gen_random_system(7, 3, 3, 2, 4)),
            io::render_system(random::gen_random_system(7, 3, 3, 2, 4)));
}

TEST(Generation, DegenerateBoolean) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FuzzyAutomaton a = random::gen_random(seed, 1, 1, 2);
    EXPECT_EQ(a.states(), 1u);
    EXPECT_EQ(a.chain(), (Chain{"0", "1"}));
    EXPECT_NO_THROW(NfaView{a});
  }
  EXPECT_THROW(random::gen_random(0, 1, 1, 1), InvalidInput);
}
