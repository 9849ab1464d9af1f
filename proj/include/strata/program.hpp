#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "strata/fixpoint.hpp"
#include "strata/interpretation.hpp"

namespace strata {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

class FixpointCheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Literal {
  std::size_t atom;
  bool negated = false;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

struct Rule {
  std::size_t head;
  std::vector<Literal> body;

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// A rule in terms of atom names, as written in source.
struct RuleText {
  std::string head;
  std::vector<std::pair<std::string, bool>> body;  // (atom, negated)
};

/// A propositional program. Atoms are sorted; rules are sorted with
/// duplicates removed, so equal rule sets give equal programs.
class Program {
 public:
  /// Atoms are those of the rules plus `extra_atoms`.
  explicit Program(const std::vector<RuleText>& rules, std::vector<std::string> extra_atoms = {});

  const AtomList& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_->size(); }
  const std::vector<Rule>& rules() const { return rules_; }
  std::size_t index_of(std::string_view atom) const;

  friend bool operator==(const Program& a, const Program& b) {
    return *a.atoms_ == *b.atoms_ && a.rules_ == b.rules_;
  }

 private:
  AtomList atoms_;
  std::vector<Rule> rules_;
};

/// rule := atom (":-" literal ("," literal)*)? "." ; literal := atom | "not" atom
/// atom := [a-z][A-Za-z0-9_]* ; "%" starts a comment. Throws SyntaxError.
Program parse_program(std::string_view text);
/// Renders a program in the input grammar.
std::string to_string(const Program& p);

/// One application of the rules: each atom gets the join over its rules of
/// the meet of the body values; facts give T0, atoms without rules F0.
Interpretation immediate_consequence(const Program& p, const Interpretation& x, Level cap = kDefaultLevelCap);

struct SolveOptions {
  /// 0 means 4 * atoms + 4.
  Stratum stratum_budget = 0;
  /// 0 means atoms + 2.
  std::size_t plateau = 0;
  std::size_t inner_budget = 100000;
  Level level_cap = kDefaultLevelCap;
  bool keep_trace = false;
};

struct Solution {
  Interpretation model;
  Stratum strata_used = 0;
  /// Stratum at which each atom's value was pinned; nullopt for atoms sent
  /// to 0 by the limit step.
  std::vector<std::optional<Stratum>> settled_at;
  std::vector<StratumRecord<Interpretation>> trace;
};

/// The least fixed point of the immediate consequence operator. Strata are
/// computed until one pins no new atom at its own level; the atoms still
/// open are then sent to 0. The result is always re-checked to be a fixed
/// point. Throws NotConverged, FixpointCheckFailed.
Solution solve(const Program& p, const SolveOptions& options = {});

enum class Truth3 { False, True, Undefined };
std::string_view to_string(Truth3 t);

struct ThreeValued {
  AtomList atoms;
  std::vector<Truth3> values;

  friend bool operator==(const ThreeValued& a, const ThreeValued& b) {
    return *a.atoms == *b.atoms && a.values == b.values;
  }
};

/// F_a -> false, T_a -> true, 0 -> undefined.
ThreeValued collapse_wfs(const Interpretation& model);

/// Well-founded model by the alternating fixpoint of the reduct operator.
/// Shares no code with solve().
ThreeValued wfs_oracle(const Program& p);

nlohmann::json to_json(const ThreeValued& t);
nlohmann::json solution_json(const Solution& s);

struct RandomProgramOptions {
  std::size_t max_atoms = 8;
  std::size_t max_rules = 15;
  std::size_t max_body = 3;
  double max_negation_density = 0.7;
};

/// Seed-deterministic random program.
Program random_program(std::uint64_t seed, const RandomProgramOptions& options = {});

}  // namespace strata
