// Well-founded semantics by the alternating fixpoint. Deliberately written
// against the plain rule list with its own least-model routine so that it
// can serve as an independent check on solve().

#include <vector>

#include "strata/program.hpp"

namespace strata {

namespace {

// Least model of the reduct of p with respect to `assumed`: rules with a
// negative literal on an assumed-true atom are dropped, remaining negative
// literals are deleted.
std::vector<bool> reduct_least_model(const Program& p, const std::vector<bool>& assumed) {
  std::vector<bool> derived(p.atom_count(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : p.rules()) {
      if (derived[rule.head]) continue;
      bool fires = true;
      for (const auto& lit : rule.body) {
        if (lit.negated ? assumed[lit.atom] : !derived[lit.atom]) {
          fires = false;
          break;
        }
      }
      if (fires) {
        derived[rule.head] = true;
        changed = true;
      }
    }
  }
  return derived;
}

}  // namespace

ThreeValued wfs_oracle(const Program& p) {
  const auto n = p.atom_count();
  std::vector<bool> under(n, false);
  std::vector<bool> over = reduct_least_model(p, under);
  while (true) {
    auto next_under = reduct_least_model(p, over);
    auto next_over = reduct_least_model(p, next_under);
    if (next_under == under && next_over == over) break;
    under = std::move(next_under);
    over = std::move(next_over);
  }
  ThreeValued out{p.atoms(), std::vector<Truth3>(n, Truth3::Undefined)};
  for (std::size_t i = 0; i < n; ++i) {
    if (under[i]) {
      out.values[i] = Truth3::True;
    } else if (!over[i]) {
      out.values[i] = Truth3::False;
    }
  }
  return out;
}

}  // namespace strata
