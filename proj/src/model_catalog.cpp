#include "strata/model_catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "strata/axioms.hpp"

namespace strata {

namespace {

using Key = std::vector<bool>;

void append_relation(Key& key, const Relation& r, const std::vector<Elem>& perm) {
  const auto n = r.size();
  // Entry (i, j) of the relabelled relation is r(perm^-1(i), perm^-1(j)).
  std::vector<Elem> inverse(n);
  for (Elem i = 0; i < n; ++i) inverse[perm[i]] = i;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) key.push_back(r(inverse[i], inverse[j]));
  }
}

Key canonical_key(const std::vector<const Relation*>& relations, std::size_t n) {
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Key best;
  do {
    Key key;
    for (const auto* r : relations) append_relation(key, *r, perm);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_lattice(const Relation& leq) {
  LatticeSpec spec{std::vector<std::string>(leq.size()), leq};
  for (std::size_t i = 0; i < leq.size(); ++i) spec.names[i] = std::to_string(i);
  try {
    lattice_as_model(spec, 1);
    return true;
  } catch (const NotALattice&) {
    return false;
  }
}

}  // namespace

std::vector<Relation> all_preorders(std::size_t n) {
  if (n > 5) throw TooLarge("preorder enumeration is limited to 5 elements");
  std::vector<std::pair<Elem, Elem>> off;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      if (i != j) off.emplace_back(i, j);
    }
  }
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    Relation r = Relation::identity(n);
    for (std::size_t k = 0; k < off.size(); ++k) {
      if (mask >> k & 1U) r.set(off[k].first, off[k].second);
    }
    if (r.transitive()) out.push_back(std::move(r));
  }
  return out;
}

std::vector<LatticeSpec> lattices_of_size(std::size_t n) {
  if (n == 0 || n > 6) throw TooLarge("lattice enumeration is limited to 1..6 elements");
  // Every poset has a linear extension, so it suffices to try relations that
  // only relate i to j for i < j.
  std::vector<std::pair<Elem, Elem>> upper;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = i + 1; j < n; ++j) upper.emplace_back(i, j);
  }
  std::map<Key, LatticeSpec> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << upper.size()); ++mask) {
    Relation r = Relation::identity(n);
    for (std::size_t k = 0; k < upper.size(); ++k) {
      if (mask >> k & 1U) r.set(upper[k].first, upper[k].second);
    }
    if (!r.transitive() || !is_lattice(r)) continue;
    auto key = canonical_key({&r}, n);
    if (classes.contains(key)) continue;
    LatticeSpec spec{{}, r};
    for (std::size_t i = 0; i < n; ++i) spec.names.push_back(std::to_string(i));
    classes.emplace(std::move(key), std::move(spec));
  }
  std::vector<LatticeSpec> out;
  for (auto& [key, spec] : classes) out.push_back(std::move(spec));
  return out;
}

std::vector<LatticeSpec> lattices_up_to(std::size_t max_size) {
  std::vector<LatticeSpec> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto more = lattices_of_size(n);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

namespace {

struct ModelSearch {
  const LatticeSpec& lattice;
  Stratum kappa;
  const std::vector<Relation>& preorders;
  std::vector<Relation> chosen;
  std::map<Key, FiniteModel>& found;

  bool stratum_ok() const {
    const auto alpha = static_cast<Stratum>(chosen.size() - 1);
    const Relation& sq = chosen.back();
    const auto n = sq.size();
    const Relation eq = sq.intersect(sq.transpose());
    if (alpha > 0) {
      const Relation& prev = chosen[alpha - 1];
      const Relation prev_eq = prev.intersect(prev.transpose());
      for (Elem a = 0; a < n; ++a) {
        if (!sq.row(a).subset_of(prev_eq.row(a))) return false;
      }
    }
    if (alpha + 1 == kappa && !sq.antisymmetric()) return false;
    auto model = FiniteModel::create(lattice.names, alpha + 1, lattice.leq, chosen);
    // Lower strata were already accepted; Ax3 and Ax4 recheck them cheaply.
    const Axiom local[] = {Axiom::Ax4, Axiom::Ax3};
    return check_axioms(model, local, Execution::Serial).all_hold();
  }

  void extend() {
    if (chosen.size() == kappa) {
      auto model = FiniteModel::create(lattice.names, kappa, lattice.leq, chosen);
      if (!check_axioms(model, kModelAxioms, Execution::Serial).all_hold()) return;
      std::vector<const Relation*> rels{&lattice.leq};
      for (const auto& r : chosen) rels.push_back(&r);
      found.try_emplace(canonical_key(rels, lattice.names.size()), std::move(model));
      return;
    }
    for (const auto& r : preorders) {
      chosen.push_back(r);
      if (stratum_ok()) extend();
      chosen.pop_back();
    }
  }
};

}  // namespace

std::vector<FiniteModel> models_up_to(std::size_t max_size, Stratum max_kappa) {
  if (max_size > 4) throw TooLarge("model enumeration is limited to 4 elements");
  std::vector<FiniteModel> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto preorders = all_preorders(n);
    const auto lattices = lattices_of_size(n);
    for (Stratum kappa = 1; kappa <= max_kappa; ++kappa) {
      std::map<Key, FiniteModel> found;
      for (const auto& lattice : lattices) {
        ModelSearch search{lattice, kappa, preorders, {}, found};
        search.extend();
      }
      for (auto& [key, model] : found) out.push_back(std::move(model));
    }
  }
  return out;
}

}  // namespace strata
