#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "strata/axioms.hpp"
#include "strata/fixpoint.hpp"
#include "strata/stratified_fn.hpp"

namespace strata {

class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FunctionSpaceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

class AxiomPreconditionFailed : public std::invalid_argument {
 public:
  AxiomPreconditionFailed(const std::string& message, AxiomReport report)
      : std::invalid_argument(message), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// Parameter object of f: the domain factors after the first `skip`.
ProductView parameter_view(const StratifiedFn& f, std::size_t skip);

/// f^dagger for f: L x P -> L, where L is the codomain and P the remaining
/// domain factors. The result maps P to L.
StratifiedFn dagger(const StratifiedFn& f, StratumPolicy policy = StratumPolicy::Exhaust);

enum class CheckStatus { Pass, Fail, Vacuous };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string identity;
  CheckStatus status = CheckStatus::Pass;
  /// On failure: the parameter point where the sides differ and both values.
  std::string point;
  std::string lhs;
  std::string rhs;
  std::uint64_t case_id = 0;
  std::uint64_t seed = 0;
  std::string detail;

  bool passed() const { return status == CheckStatus::Pass; }
};

nlohmann::json to_json(const CheckResult& r);

/// f^dagger = f o <f^dagger, id>, f: L x P -> L.
CheckResult check_fixed_point(const StratifiedFn& f);
/// f^dagger o g = (f o (id x g))^dagger, f: L x P -> L, g: Q -> P.
CheckResult check_parameter(const StratifiedFn& f, const StratifiedFn& g);
/// (g o <f, pi>)^dagger = g o <(f o <g, pi>)^dagger, id>,
/// f: L x P -> M, g: M x P -> L.
CheckResult check_composition(const StratifiedFn& f, const StratifiedFn& g);
/// (f o (diagonal x id))^dagger = f^dagger^dagger, f: L x L x P -> L.
CheckResult check_double_dagger(const StratifiedFn& f);
/// Joint dagger of <f, g> against solving for L first, then K.
/// f: L x K x P -> L, g: L x K x P -> K.
CheckResult check_bekic(const StratifiedFn& f, const StratifiedFn& g);
/// If f o (diagonal x id) = diagonal o g then f^dagger = diagonal o g^dagger,
/// f: L^n x P -> L^n, g: L x P -> L. Vacuous when the premise fails.
CheckResult check_weak_functorial(const StratifiedFn& f, const StratifiedFn& g, std::size_t n);

/// Largest function space the exponential construction accepts.
inline constexpr std::size_t kMaxFunctionSpace = 200;

/// The model of alpha-monotonic functions source -> target with pointwise
/// orders. Throws FunctionSpaceTooLarge.
struct Exponential {
  FiniteModel model;
  std::vector<StratifiedFn> functions;
  /// Index of a graph in `functions`, if it is one of them.
  std::optional<Elem> find(const std::vector<Elem>& graph) const;
};
Exponential exponential(const ProductView& source, const ProductView& target);

/// For f: L x P -> L, the dagger of h |-> (p |-> f(h(p), p)) inside the
/// exponential (P -> L) equals f^dagger. Requires Ax5 and Ax6 on every factor.
CheckResult check_abstraction(const StratifiedFn& f);
/// Every g in (P -> L) with f o <g, id> sqsubseteq g satisfies
/// f^dagger sqsubseteq g.
CheckResult check_fp_induction(const StratifiedFn& f);

/// Least fixed point of a monotone self-map by plain iteration from bottom
/// w.r.t. <=. For f: L x P -> L, one value per parameter.
StratifiedFn kleene_lfp(const StratifiedFn& f);

}  // namespace strata
