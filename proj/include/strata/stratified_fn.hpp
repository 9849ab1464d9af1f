#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "strata/product_view.hpp"

namespace strata {

enum class Provenance { TableChecked, TermGenerated };

/// A function between finite products given by its graph.
struct StratifiedFn {
  ProductView domain;
  ProductView codomain;
  std::vector<Elem> graph;
  Provenance provenance = Provenance::TableChecked;

  Elem operator()(Elem x) const { return graph[x]; }
};

/// A pair (a, b) with a sq_alpha b whose images are not related, if any.
struct MonotonicityBreach {
  Stratum alpha;
  Elem a, b;
};
std::optional<MonotonicityBreach> find_monotonicity_breach(const StratifiedFn& f);
bool is_alpha_monotonic(const StratifiedFn& f);

/// Largest domain accepted by the enumerators.
inline constexpr std::size_t kMaxEnumerationDomain = 125;

/// Visits every function domain -> codomain that is alpha-monotonic at every
/// stratum, in lexicographic order of graphs. The visitor returns false to
/// stop early. Returns the number visited. Throws TooLarge.
std::size_t for_each_monotonic_fn(const ProductView& domain, const ProductView& codomain,
                                  const std::function<bool(const StratifiedFn&)>& visit);

/// All alpha-monotonic functions; throws TooLarge beyond `limit` functions.
std::vector<StratifiedFn> enumerate_monotonic_fns(const ProductView& domain, const ProductView& codomain,
                                                  std::size_t limit = 1'000'000);
/// Functions M^arity -> M.
std::vector<StratifiedFn> enumerate_monotonic_fns(const ModelPtr& model, std::size_t arity,
                                                  std::size_t limit = 1'000'000);

std::size_t count_monotonic_fns(const ProductView& domain, const ProductView& codomain);

/// Composition helpers on graphs.
StratifiedFn compose(const StratifiedFn& g, const StratifiedFn& f);  // g o f
/// <f1, ..., fk> for functions sharing a domain.
StratifiedFn tuple(const std::vector<const StratifiedFn*>& fs);
StratifiedFn identity_fn(const ProductView& v);
/// Projection onto the factors [first, first + count).
StratifiedFn projection(const ProductView& v, std::size_t first, std::size_t count);
StratifiedFn constant_fn(const ProductView& domain, const ProductView& codomain, Elem value);

}  // namespace strata
