#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "strata/corpus.hpp"
#include "strata/program.hpp"

using namespace strata;

namespace {

TruthValue F(Level l) { return TruthValue::f(l); }
TruthValue T(Level l) { return TruthValue::t(l); }
const TruthValue Z = TruthValue::zero();

const char* kExample = "p :- not q.\nq :- not r.\ns :- p.\ns :- not s.\nt.\n";

// Forward chaining to the least model of a negation-free program.
std::set<std::string> least_model(const Program& p) {
  std::set<std::string> truth;
  const auto& names = *p.atoms();
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : p.rules()) {
      const bool fires = std::all_of(r.body.begin(), r.body.end(),
                                     [&](const Literal& l) { return truth.count(names[l.atom]) > 0; });
      if (fires && truth.insert(names[r.head]).second) changed = true;
    }
  }
  return truth;
}

// Printing drops atoms that occur in no rule; put them back.
Program with_atoms(const Program& parsed, const Program& like) {
  const auto& names = *parsed.atoms();
  std::vector<RuleText> rules;
  for (const auto& r : parsed.rules()) {
    RuleText t{names[r.head], {}};
    for (const auto& l : r.body) t.body.emplace_back(names[l.atom], l.negated);
    rules.push_back(t);
  }
  return Program(rules, *like.atoms());
}

std::vector<std::string> rule_lines(const Program& p) {
  std::vector<std::string> out;
  std::istringstream in(to_string(p));
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("parsing") {
  const auto fact = parse_program("t.");
  CHECK(*fact.atoms() == std::vector<std::string>{"t"});
  REQUIRE(fact.rules().size() == 1);
  CHECK(fact.rules()[0].body.empty());

  const auto neg = parse_program("p :- not q.");
  CHECK(*neg.atoms() == std::vector<std::string>{"p", "q"});
  REQUIRE(neg.rules().size() == 1);
  CHECK(neg.rules()[0].head == neg.index_of("p"));
  CHECK(neg.rules()[0].body == std::vector<Literal>{{neg.index_of("q"), true}});

  // Comments, CRLF line endings, blank lines and duplicate rules.
  const auto noisy = parse_program("% header\r\np :- not q. % trailing\r\n\r\np:-not q.\r\nnotx :- not_y, nothing.\r\n");
  CHECK(noisy.rules().size() == 2);
  CHECK(*noisy.atoms() == std::vector<std::string>{"not_y", "nothing", "notx", "p", "q"});

  try {
    parse_program("p :- q not r.");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 8);
  }
  for (const char* bad : {"p", "p :- .", "P.", "p :- q,.", "p.. ", ":- q.", "p :- not.", "p :- q\nr."}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_program(bad), SyntaxError);
  }
  try {
    parse_program("a.\nb :- c\nd.");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("printing round-trips") {
  const auto p = parse_program(kExample);
  CHECK(parse_program(to_string(p)) == p);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto r = random_program(seed);
    CHECK(with_atoms(parse_program(to_string(r)), r) == r);
  }
}

TEST_CASE("immediate consequence") {
  const auto facts = parse_program("t.");
  CHECK(immediate_consequence(facts, Interpretation::bottom(facts.atoms())).at("t") == T(0));

  const auto q = parse_program("q :- not r.");
  const Interpretation x({{"q", F(0)}, {"r", F(0)}});
  CHECK(immediate_consequence(q, x).at("q") == T(1));
  for (auto v : {F(0), F(3), Z, T(2), T(0)}) {
    CHECK(immediate_consequence(q, Interpretation({{"q", v}, {"r", v}})).at("r") == F(0));
  }

  // Join over rules of the meet of the bodies.
  const auto p = parse_program("a :- b, not c.\na :- d.");
  const Interpretation y({{"a", F(0)}, {"b", T(2)}, {"c", F(0)}, {"d", F(4)}});
  CHECK(immediate_consequence(p, y).at("a") == T(2));
  const Interpretation w({{"a", F(0)}, {"b", F(3)}, {"c", T(0)}, {"d", F(4)}});
  CHECK(immediate_consequence(p, w).at("a") == F(4));
}

TEST_CASE("solving") {
  const auto example = solve(parse_program(kExample));
  CHECK(example.model == Interpretation({{"p", F(2)}, {"q", T(1)}, {"r", F(0)}, {"s", Z}, {"t", T(0)}}));
  const auto& atoms = *example.model.atoms();
  const auto settled = [&](const char* a) {
    return example.settled_at[std::find(atoms.begin(), atoms.end(), a) - atoms.begin()];
  };
  CHECK(settled("r") == 0u);
  CHECK(settled("t") == 0u);
  CHECK(settled("q") == 1u);
  CHECK(settled("p") == 2u);
  CHECK_FALSE(settled("s").has_value());

  const auto loop = solve(parse_program("p :- not p."));
  CHECK(loop.model == Interpretation({{"p", Z}}));
  CHECK(solve(parse_program("q. p :- q.")).model == Interpretation({{"p", T(0)}, {"q", T(0)}}));

  const auto collapsed = collapse_wfs(example.model);
  const std::vector<Truth3> expected{Truth3::False, Truth3::True, Truth3::False, Truth3::Undefined, Truth3::True};
  CHECK(collapsed.values == expected);
  CHECK(wfs_oracle(parse_program(kExample)) == collapsed);
  CHECK(wfs_oracle(parse_program("p :- not p.")).values == std::vector<Truth3>{Truth3::Undefined});
  CHECK(wfs_oracle(parse_program("q. p :- q.")).values == std::vector<Truth3>{Truth3::True, Truth3::True});

  SolveOptions tight;
  tight.stratum_budget = 2;
  CHECK_THROWS_AS(solve(parse_program(kExample), tight), NotConverged);

  SolveOptions traced;
  traced.keep_trace = true;
  const auto with_trace = solve(parse_program(kExample), traced);
  REQUIRE(with_trace.trace.size() == with_trace.strata_used);
  CHECK(with_trace.trace[0].z ==
        Interpretation({{"p", F(1)}, {"q", F(1)}, {"r", F(0)}, {"s", F(1)}, {"t", T(0)}}));
}

TEST_CASE("solution json") {
  const auto j = solution_json(solve(parse_program(kExample)));
  CHECK(j["wfs"]["s"] == "undefined");
  CHECK(j["wfs"]["q"] == "true");
  CHECK(j["settled_at"]["s"] == "limit");
  CHECK(j["settled_at"]["p"] == 2);
  CHECK(j["strata_used"] == 4);
  CHECK(j["model"].contains("t"));
}

TEST_CASE("solve ignores rule order and atom order") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto p = random_program(seed);
    auto lines = rule_lines(p);
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string text;
    for (const auto& l : lines) text += l + "\n";
    const auto shuffled = with_atoms(parse_program(text), p);
    CHECK(shuffled == p);
    CHECK(solve(shuffled).model == solve(p).model);

    // Renaming atoms so that their sorted order is reversed.
    const auto& names = *p.atoms();
    auto rename = [&](std::size_t i) { return "x" + std::string(1, static_cast<char>('a' + names.size() - 1 - i)); };
    std::vector<RuleText> texts;
    for (const auto& r : p.rules()) {
      RuleText t{rename(r.head), {}};
      for (const auto& l : r.body) t.body.emplace_back(rename(l.atom), l.negated);
      texts.push_back(t);
    }
    std::vector<std::string> all;
    for (std::size_t i = 0; i < names.size(); ++i) all.push_back(rename(i));
    const auto original = solve(p).model;
    const auto moved = solve(Program(texts, all)).model;
    for (std::size_t i = 0; i < names.size(); ++i) CHECK(moved.at(rename(i)) == original.at(names[i]));
  }
}

TEST_CASE("negation-free programs give the classical least model") {
  RandomProgramOptions options;
  options.max_negation_density = 0.0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto p = random_program(seed, options);
    for (const auto& r : p.rules()) {
      for (const auto& l : r.body) REQUIRE_FALSE(l.negated);
    }
    const auto m = solve(p).model;
    const auto truth = least_model(p);
    for (const auto& a : *p.atoms()) {
      const auto v = m.at(a);
      CHECK((v == T(0) || v == F(0)));
      CHECK((v == T(0)) == (truth.count(a) > 0));
    }
  }
}

TEST_CASE("immediate consequence is alpha-monotone on sampled pairs") {
  const TruthValue values[] = {F(0), F(1), F(2), F(3), Z, T(3), T(2), T(1), T(0)};
  std::mt19937_64 rng(5);
  std::size_t related = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomProgramOptions small;
    small.max_atoms = 3;
    const auto p = random_program(seed, small);
    const auto n = p.atom_count();
    for (int k = 0; k < 200; ++k) {
      std::vector<TruthValue> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = values[rng() % 9];
        b[i] = rng() % 2 ? a[i] : values[rng() % 9];
      }
      const Interpretation x(p.atoms(), a), y(p.atoms(), b);
      for (Stratum alpha = 0; alpha <= 4; ++alpha) {
        if (!sq_alpha(x, y, alpha)) continue;
        ++related;
        CHECK(sq_alpha(immediate_consequence(p, x), immediate_consequence(p, y), alpha));
      }
    }
  }
  CHECK(related > 5000);
}

TEST_CASE("corpus: fixed points, oracle agreement, execution modes") {
  const auto serial = run_corpus(3, 200, {}, Execution::Serial);
  const auto parallel = run_corpus(3, 200, {}, Execution::Parallel);
  CHECK(serial.ok());
  REQUIRE(serial.cases.size() == parallel.cases.size());
  for (std::size_t i = 0; i < serial.cases.size(); ++i) {
    CHECK(to_json(serial.cases[i]) == to_json(parallel.cases[i]));
  }
}

TEST_CASE("the shipped example file") {
  std::ifstream in(std::string(STRATA_SOURCE_DIR) + "/fixtures/example_program.lp");
  REQUIRE(in);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(parse_program(text.str()) == parse_program(kExample));
}
