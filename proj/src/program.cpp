#include "strata/program.hpp"

#include <algorithm>
#include <cctype>
#include <random>

namespace strata {

Program::Program(const std::vector<RuleText>& rules, std::vector<std::string> extra_atoms) {
  for (const auto& r : rules) {
    extra_atoms.push_back(r.head);
    for (const auto& [atom, negated] : r.body) extra_atoms.push_back(atom);
  }
  atoms_ = make_atom_list(std::move(extra_atoms));
  for (const auto& r : rules) {
    Rule rule{index_of(r.head), {}};
    for (const auto& [atom, negated] : r.body) rule.body.push_back({index_of(atom), negated});
    std::sort(rule.body.begin(), rule.body.end());
    rule.body.erase(std::unique(rule.body.begin(), rule.body.end()), rule.body.end());
    rules_.push_back(std::move(rule));
  }
  std::sort(rules_.begin(), rules_.end());
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
}

std::size_t Program::index_of(std::string_view atom) const {
  auto it = std::lower_bound(atoms_->begin(), atoms_->end(), atom);
  if (it == atoms_->end() || *it != atom) throw std::out_of_range("unknown atom '" + std::string(atom) + "'");
  return static_cast<std::size_t>(it - atoms_->begin());
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Program parse() {
    std::vector<RuleText> rules;
    skip_space();
    while (pos_ < text_.size()) {
      rules.push_back(rule());
      skip_space();
    }
    return Program(rules);
  }

 private:
  RuleText rule() {
    RuleText r{atom("rule head"), {}};
    skip_space();
    if (peek(":-")) {
      advance(2);
      do {
        skip_space();
        r.body.push_back(literal());
        skip_space();
      } while (accept(','));
    }
    skip_space();
    if (!accept('.')) fail("expected '.' to end the rule");
    return r;
  }

  std::pair<std::string, bool> literal() {
    std::string first = atom("body literal");
    if (first != "not") return {first, false};
    const bool spaced = skip_space();
    if (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) {
      if (!spaced) fail("expected an atom after 'not'");
      return {atom("negated atom"), true};
    }
    fail("expected an atom after 'not'");
  }

  std::string atom(const char* what) {
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("expected an atom as ") + what);
    }
    const auto start = pos_;
    while (pos_ < text_.size()) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (!std::isalnum(c) && c != '_') break;
      advance(1);
    }
    std::string name(text_.substr(start, pos_ - start));
    if (name == "not" && what == std::string("rule head")) fail("'not' cannot be a rule head");
    return name;
  }

  // Skips whitespace and comments; true when anything was skipped.
  bool skip_space() {
    const auto start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(1);
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else {
        break;
      }
    }
    return pos_ != start;
  }

  bool peek(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance(1);
      return true;
    }
    return false;
  }

  void advance(std::size_t k) {
    for (std::size_t i = 0; i < k && pos_ < text_.size(); ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw SyntaxError(message + ", found " + found, line_, column_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Program parse_program(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Program& p) {
  const auto& names = *p.atoms();
  std::string out;
  for (const auto& r : p.rules()) {
    out += names[r.head];
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      out += i == 0 ? " :- " : ", ";
      if (r.body[i].negated) out += "not ";
      out += names[r.body[i].atom];
    }
    out += ".\n";
  }
  // Atoms that occur in no rule cannot be written as rules; keep them in a
  // comment so the rendering documents the full atom set.
  std::vector<bool> used(names.size(), false);
  for (const auto& r : p.rules()) {
    used[r.head] = true;
    for (const auto& l : r.body) used[l.atom] = true;
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!used[i]) out += "% atom " + names[i] + "\n";
  }
  return out;
}

Interpretation immediate_consequence(const Program& p, const Interpretation& x, Level cap) {
  Interpretation out(p.atoms(), kBottomValue);
  for (const auto& r : p.rules()) {
    TruthValue body = kTopValue;
    for (const auto& l : r.body) body = meet(body, l.negated ? negate(x[l.atom], cap) : x[l.atom]);
    out[r.head] = join(out[r.head], body);
  }
  return out;
}

Solution solve(const Program& p, const SolveOptions& options) {
  const auto n = p.atom_count();
  VZModel model(p.atoms());
  auto f = [&](const Interpretation& x) { return immediate_consequence(p, x, options.level_cap); };

  OuterOptions outer;
  outer.policy = StratumPolicy::Stabilize;
  outer.strata = options.stratum_budget != 0 ? options.stratum_budget : static_cast<Stratum>(4 * n + 4);
  outer.inner.plateau = options.plateau != 0 ? options.plateau : n + 2;
  outer.inner.budget = options.inner_budget;
  outer.keep_trace = options.keep_trace;

  Solution sol{Interpretation(p.atoms(), kBottomValue), 0, std::vector<std::optional<Stratum>>(n), {}};
  std::vector<bool> settled(n, false);

  auto settle = [&](Stratum alpha, const Interpretation& z) -> std::optional<Interpretation> {
    std::size_t fresh = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!settled[i] && z[i].level() == alpha) {
        settled[i] = true;
        sol.settled_at[i] = alpha;
        ++fresh;
      }
    }
    if (f(z) == z) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!settled[i] && !z[i].is_zero()) sol.settled_at[i] = z[i].level();
      }
      return z;
    }
    if (fresh != 0) return std::nullopt;
    Interpretation limit = z;
    for (std::size_t i = 0; i < n; ++i) {
      if (!settled[i]) limit[i] = TruthValue::zero();
    }
    if (!(f(limit) == limit)) {
      throw FixpointCheckFailed("limit step produced " + to_string(limit) + ", which is not a fixed point");
    }
    return limit;
  };

  auto result = stratified_fix(model, f, outer, settle);
  if (!(f(result.value) == result.value)) {
    throw FixpointCheckFailed("solver result " + to_string(result.value) + " is not a fixed point");
  }
  sol.model = std::move(result.value);
  sol.strata_used = result.strata_used;
  sol.trace = std::move(result.trace);
  return sol;
}

std::string_view to_string(Truth3 t) {
  switch (t) {
    case Truth3::False: return "false";
    case Truth3::True: return "true";
    case Truth3::Undefined: break;
  }
  return "undefined";
}

ThreeValued collapse_wfs(const Interpretation& model) {
  ThreeValued out{model.atoms(), {}};
  for (auto v : model.values()) {
    out.values.push_back(v.is_zero() ? Truth3::Undefined : v.is_true() ? Truth3::True : Truth3::False);
  }
  return out;
}

nlohmann::json to_json(const ThreeValued& t) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < t.values.size(); ++i) j[(*t.atoms)[i]] = to_string(t.values[i]);
  return j;
}

nlohmann::json solution_json(const Solution& s) {
  nlohmann::json settled = nlohmann::json::object();
  for (std::size_t i = 0; i < s.settled_at.size(); ++i) {
    const auto& atom = (*s.model.atoms())[i];
    if (s.settled_at[i]) {
      settled[atom] = *s.settled_at[i];
    } else {
      settled[atom] = "limit";
    }
  }
  return {{"model", to_json(s.model)},
          {"wfs", to_json(collapse_wfs(s.model))},
          {"strata_used", s.strata_used},
          {"settled_at", settled}};
}

Program random_program(std::uint64_t seed, const RandomProgramOptions& options) {
  // Raw engine output only, so programs are identical across platforms.
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  const std::size_t atoms = 1 + pick(options.max_atoms);
  const std::size_t rule_count = pick(options.max_rules + 1);
  const double density = unit() * options.max_negation_density;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms; ++i) names.push_back("a" + std::to_string(i));

  std::vector<RuleText> rules;
  for (std::size_t r = 0; r < rule_count; ++r) {
    RuleText rule{names[pick(atoms)], {}};
    const std::size_t body = pick(options.max_body + 1);
    for (std::size_t b = 0; b < body; ++b) {
      const auto& atom = names[pick(atoms)];
      rule.body.emplace_back(atom, unit() < density);
    }
    rules.push_back(std::move(rule));
  }
  return Program(rules, names);
}

}  // namespace strata
