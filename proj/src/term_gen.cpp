#include "strata/term_gen.hpp"

#include <random>

namespace strata {

TruthValue evaluate(const Term& t, std::span<const TruthValue> vars, Level cap) {
  switch (t.op) {
    case Term::Op::Var: return vars[t.var];
    case Term::Op::Const: return t.value;
    case Term::Op::Or: return join(evaluate(t.args[0], vars, cap), evaluate(t.args[1], vars, cap));
    case Term::Op::And: return meet(evaluate(t.args[0], vars, cap), evaluate(t.args[1], vars, cap));
    case Term::Op::Not: return negate(evaluate(t.args[0], vars, cap), cap);
  }
  return t.value;
}

std::string to_string(const Term& t) {
  switch (t.op) {
    case Term::Op::Var: return "x" + std::to_string(t.var);
    case Term::Op::Const: return to_string(t.value);
    case Term::Op::Or: return "(" + to_string(t.args[0]) + " | " + to_string(t.args[1]) + ")";
    case Term::Op::And: return "(" + to_string(t.args[0]) + " & " + to_string(t.args[1]) + ")";
    case Term::Op::Not: return "~" + to_string(t.args[0]);
  }
  return "?";
}

std::vector<TruthValue> TermFn::operator()(std::span<const TruthValue> in) const {
  std::vector<TruthValue> out;
  out.reserve(outputs.size());
  for (const auto& t : outputs) out.push_back(evaluate(t, in));
  return out;
}

namespace {

// Raw engine output keeps sequences identical across standard libraries.
class TermBuilder {
 public:
  TermBuilder(std::uint64_t seed, const TermSignature& sig) : rng_(seed), sig_(sig) {}

  Term build(std::size_t depth) {
    const bool leaf = depth >= sig_.max_depth || pick(3) == 0;
    if (leaf) {
      if (sig_.inputs == 0 || pick(4) == 0) return Term::constant(random_value());
      return Term::variable(pick(sig_.inputs));
    }
    switch (pick(negation_allowed() ? 5 : 4)) {
      case 0:
      case 1: return Term::join(build(depth + 1), build(depth + 1));
      case 2:
      case 3: return Term::meet(build(depth + 1), build(depth + 1));
      default: return negation(depth);
    }
  }

 private:
  std::size_t pick(std::size_t k) { return static_cast<std::size_t>(rng_() % k); }

  bool negation_allowed() const { return !sig_.truncation || *sig_.truncation > 0; }

  Term negation(std::size_t depth) {
    if (!sig_.truncation) return Term::negation(build(depth + 1));
    const Level below = static_cast<Level>(pick(*sig_.truncation));
    return Term::negation(Term::constant(pick(2) == 0 ? TruthValue::f(below) : TruthValue::t(below)));
  }

  TruthValue random_value() {
    const Level top = sig_.truncation ? *sig_.truncation : 3;
    const auto k = pick(2 * (top + 1) + 1);
    if (k == 2 * (top + 1)) return TruthValue::zero();
    const auto level = static_cast<Level>(k / 2);
    return k % 2 == 0 ? TruthValue::f(level) : TruthValue::t(level);
  }

  std::mt19937_64 rng_;
  TermSignature sig_;
};

}  // namespace

TermFn gen_term_fn(std::uint64_t seed, const TermSignature& signature) {
  TermBuilder builder(seed, signature);
  TermFn fn{signature, {}};
  for (std::size_t i = 0; i < signature.outputs; ++i) fn.outputs.push_back(builder.build(0));
  return fn;
}

StratifiedFn tabulate(const TermFn& fn, const ProductView& domain, const ProductView& codomain, Level n,
                      std::size_t atoms_per_factor) {
  const auto values = truncated_v_values(n);
  const auto base = static_cast<Elem>(values.size());
  auto index_of = [&](TruthValue v) {
    for (Elem i = 0; i < base; ++i) {
      if (values[i] == v) return i;
    }
    throw std::out_of_range("term value " + to_string(v) + " lies outside truncated V");
  };

  StratifiedFn out{domain, codomain, std::vector<Elem>(domain.size()), Provenance::TermGenerated};
  std::vector<TruthValue> in(domain.arity() * atoms_per_factor);
  for (Elem x = 0; x < domain.size(); ++x) {
    for (std::size_t f = 0; f < domain.arity(); ++f) {
      Elem e = domain.digit(x, f);
      for (std::size_t a = atoms_per_factor; a-- > 0;) {
        in[f * atoms_per_factor + a] = values[e % base];
        e /= base;
      }
    }
    const auto result = fn(in);
    Elem y = 0;
    for (auto v : result) y = y * base + index_of(v);
    out.graph[x] = y;
  }
  return out;
}

}  // namespace strata
