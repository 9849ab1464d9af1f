#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strata/stratified_fn.hpp"

namespace strata {

/// Closed term over variables x0, x1, ... built from constants, join, meet
/// and negation.
struct Term {
  enum class Op { Var, Const, Or, And, Not };
  Op op = Op::Const;
  std::size_t var = 0;
  TruthValue value = kBottomValue;
  std::vector<Term> args;

  static Term variable(std::size_t i) { return {Op::Var, i, kBottomValue, {}}; }
  static Term constant(TruthValue v) { return {Op::Const, 0, v, {}}; }
  static Term join(Term a, Term b) { return {Op::Or, 0, kBottomValue, {std::move(a), std::move(b)}}; }
  static Term meet(Term a, Term b) { return {Op::And, 0, kBottomValue, {std::move(a), std::move(b)}}; }
  static Term negation(Term a) { return {Op::Not, 0, kBottomValue, {std::move(a)}}; }
};

TruthValue evaluate(const Term& t, std::span<const TruthValue> vars, Level cap = kDefaultLevelCap);
std::string to_string(const Term& t);

struct TermSignature {
  std::size_t inputs = 1;
  std::size_t outputs = 1;
  /// Truncated V_n when set. Negation is then applied only to constants of
  /// level below n, so every value stays inside the carrier.
  std::optional<Level> truncation;
  std::size_t max_depth = 3;
};

/// A tuple of terms, one per output coordinate.
struct TermFn {
  TermSignature signature;
  std::vector<Term> outputs;

  std::vector<TruthValue> operator()(std::span<const TruthValue> in) const;
};

/// Seed-deterministic random term tuple.
TermFn gen_term_fn(std::uint64_t seed, const TermSignature& signature);

/// Graph of a term function over products of truncated_v_model(n, atoms)
/// factors, each with `atoms_per_factor` atoms; variables are numbered
/// factor-major.
StratifiedFn tabulate(const TermFn& fn, const ProductView& domain, const ProductView& codomain, Level n,
                      std::size_t atoms_per_factor);

}  // namespace strata
