#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/interpretation.hpp"

namespace strata {

class PreconditionViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InnerNotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What the engine needs from a model: an element type, bottom, the strata
/// preorders and their equivalences, binary and set joins, and restriction.
template <class M>
concept StratifiedModel = requires(const M& m, const typename M::Element& a, Stratum s,
                                   std::span<const typename M::Element> xs) {
  { m.bottom() } -> std::convertible_to<typename M::Element>;
  { m.sq(s, a, a) } -> std::convertible_to<bool>;
  { m.eq(s, a, a) } -> std::convertible_to<bool>;
  { m.join(xs) } -> std::convertible_to<typename M::Element>;
  { m.restrict(a, s) } -> std::convertible_to<typename M::Element>;
};

struct InnerOptions {
  std::size_t budget = 100000;
  /// Consecutive steps with an unchanged restriction required before the
  /// chain counts as settled at the stratum.
  std::size_t plateau = 1;
};

template <class E>
struct InnerResult {
  E z;
  std::size_t steps = 0;
  /// x_0, x_1, ... when requested.
  std::vector<E> chain;
};

/// The least z with x sq_alpha z =_alpha f(z): iterate x_{n+1} = f(x_n) and
/// stop once the alpha-restriction of the chain stops moving.
template <StratifiedModel M, class F>
InnerResult<typename M::Element> inner_fix(const M& model, F&& f, typename M::Element x, Stratum alpha,
                                           const InnerOptions& options = {}, bool keep_chain = false) {
  using E = typename M::Element;
  InnerResult<E> out{x, 0, {}};
  const E start = x;
  E next = f(x);
  if (!model.sq(alpha, x, next)) {
    throw PreconditionViolated("start point is not below its image at stratum " + std::to_string(alpha));
  }
  if (keep_chain) out.chain.push_back(x);

  E current = std::move(x);
  E settled = model.restrict(current, alpha);
  std::size_t unchanged = 0;
  for (std::size_t step = 1;; ++step) {
    if (step > options.budget) {
      throw InnerNotConverged("inner iteration budget exhausted at stratum " + std::to_string(alpha));
    }
    if (keep_chain) out.chain.push_back(next);
    E r = model.restrict(next, alpha);
    unchanged = (r == settled) ? unchanged + 1 : 0;
    settled = std::move(r);
    current = std::move(next);
    out.steps = step;
    if (unchanged >= options.plateau) break;
    next = f(current);
    if (!model.sq(alpha, current, next)) {
      throw PreconditionViolated("iteration chain is not increasing at stratum " + std::to_string(alpha));
    }
  }

  out.z = std::move(settled);
  if (!model.eq(alpha, out.z, f(out.z)) || !model.sq(alpha, start, out.z)) {
    throw InnerNotConverged("restriction plateau is not a fixed point at stratum " + std::to_string(alpha));
  }
  return out;
}

template <class E>
struct StratumRecord {
  Stratum alpha;
  E x;
  E z;
  std::size_t inner_steps;
};

template <class E>
struct OuterResult {
  E value;
  /// Number of strata computed.
  Stratum strata_used = 0;
  std::vector<StratumRecord<E>> trace;
};

enum class StratumPolicy {
  /// Run strata 0..kappa-1 and return the join of the approximants.
  Exhaust,
  /// Stop at the first approximant that is a fixed point of f.
  Stabilize,
};

struct OuterOptions {
  StratumPolicy policy = StratumPolicy::Exhaust;
  /// Number of strata for Exhaust; stratum budget for Stabilize.
  Stratum strata = 1;
  InnerOptions inner;
  bool keep_trace = false;
};

/// Optional per-stratum hook: sees (alpha, z_alpha) and may return a final
/// value, which ends the construction.
template <class E>
using StratumHook = std::function<std::optional<E>(Stratum, const E&)>;

/// The stratified least fixed point of f: x_alpha is the join of the earlier
/// approximants and z_alpha = inner_fix(f, x_alpha, alpha).
template <StratifiedModel M, class F>
OuterResult<typename M::Element> stratified_fix(const M& model, F&& f, const OuterOptions& options,
                                                const StratumHook<typename M::Element>& hook = {}) {
  using E = typename M::Element;
  OuterResult<E> out{model.bottom(), 0, {}};
  std::vector<E> approximants;
  E x = model.bottom();
  for (Stratum alpha = 0; alpha < options.strata; ++alpha) {
    auto inner = inner_fix(model, f, x, alpha, options.inner);
    out.strata_used = alpha + 1;
    if (options.keep_trace) out.trace.push_back({alpha, x, inner.z, inner.steps});
    approximants.push_back(inner.z);

    if (hook) {
      if (auto done = hook(alpha, inner.z)) {
        out.value = std::move(*done);
        return out;
      }
    }
    if (options.policy == StratumPolicy::Stabilize && f(inner.z) == inner.z) {
      out.value = std::move(inner.z);
      return out;
    }
    const E pair[] = {x, inner.z};
    x = model.join(std::span<const E>(pair));
  }
  if (options.policy == StratumPolicy::Stabilize) {
    throw NotConverged("no fixed point within " + std::to_string(options.strata) + " strata");
  }
  out.value = model.join(std::span<const E>(approximants));
  return out;
}

/// True iff v sqsubseteq w for every pre-fixed point w (f(w) sqsubseteq w) of
/// a finite model. Brute force over the carrier.
template <class M, class F>
bool least_prefix_check(const M& model, F&& f, typename M::Element v) {
  for (typename M::Element w = 0; w < model.size(); ++w) {
    if (model.global_sq(f(w), w) && !model.global_sq(v, w)) return false;
  }
  return true;
}

}  // namespace strata
