#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/truth_value.hpp"

namespace strata {

using Stratum = Level;

class MixedAtomSets : public std::invalid_argument {
 public:
  MixedAtomSets() : std::invalid_argument("interpretations range over different atom sets") {}
};

class NotAlphaCompatible : public std::invalid_argument {
 public:
  explicit NotAlphaCompatible(const std::string& atom)
      : std::invalid_argument("values for atom '" + atom +
                              "' disagree below the requested stratum") {}
};

/// Sorted, duplicate-free list of atom names shared between interpretations.
using AtomList = std::shared_ptr<const std::vector<std::string>>;

AtomList make_atom_list(std::vector<std::string> names);

/// A total map from a finite ordered set of atoms to truth values: an element
/// of V^Z ordered pointwise.
class Interpretation {
 public:
  Interpretation(AtomList atoms, TruthValue fill);
  Interpretation(AtomList atoms, std::vector<TruthValue> values);
  /// Atoms are taken from the keys of `values`.
  explicit Interpretation(const std::map<std::string, TruthValue>& values);

  static Interpretation bottom(AtomList atoms) { return {std::move(atoms), kBottomValue}; }
  static Interpretation top(AtomList atoms) { return {std::move(atoms), kTopValue}; }

  const AtomList& atoms() const { return atoms_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<TruthValue>& values() const { return values_; }

  TruthValue operator[](std::size_t i) const { return values_[i]; }
  TruthValue& operator[](std::size_t i) { return values_[i]; }
  /// Throws std::out_of_range for unknown atoms.
  TruthValue at(const std::string& atom) const;

  bool same_atoms(const Interpretation& other) const;

  /// Largest finite level occurring, or 0 when every value is 0.
  Level max_level() const;

  friend bool operator==(const Interpretation& a, const Interpretation& b);

 private:
  AtomList atoms_;
  std::vector<TruthValue> values_;
};

Interpretation join(const Interpretation& a, const Interpretation& b);
Interpretation meet(const Interpretation& a, const Interpretation& b);
/// Pointwise max over a nonempty set.
Interpretation join(std::span<const Interpretation> xs);
/// Pointwise min over a nonempty set.
Interpretation meet(std::span<const Interpretation> xs);
Interpretation negate(const Interpretation& x, Level cap = kDefaultLevelCap);

bool leq(const Interpretation& a, const Interpretation& b);

/// I sqsubseteq_alpha J.
bool sq_alpha(const Interpretation& a, const Interpretation& b, Stratum alpha);
/// I =_alpha J.
bool eq_alpha(const Interpretation& a, const Interpretation& b, Stratum alpha);

/// The least element of the =_alpha class of x.
Interpretation restrict(const Interpretation& x, Stratum alpha);

/// Stratified supremum of xs at alpha. `witness` fixes the class (x]_alpha and
/// is required when xs is empty; all of xs (and the witness) must agree below
/// alpha or NotAlphaCompatible is thrown.
Interpretation lub_alpha(std::span<const Interpretation> xs, Stratum alpha,
                         const std::optional<Interpretation>& witness = std::nullopt);

/// The global order: a == b, or a sqsubseteq_alpha b but not a =_alpha b for
/// some alpha. Strata are searched up to max level + 1; above that
/// sqsubseteq_alpha is equality.
bool global_sq(const Interpretation& a, const Interpretation& b);

/// `{p:F2, q:T1}` style rendering.
std::string to_string(const Interpretation& x);
nlohmann::json to_json(const Interpretation& x);
Interpretation interpretation_from_json(const nlohmann::json& j);

/// Adapter exposing V^Z over a fixed atom list to the fixed-point engine.
class VZModel {
 public:
  using Element = Interpretation;

  explicit VZModel(AtomList atoms) : atoms_(std::move(atoms)) {}

  const AtomList& atoms() const { return atoms_; }

  Element bottom() const { return Interpretation::bottom(atoms_); }
  bool sq(Stratum alpha, const Element& a, const Element& b) const { return sq_alpha(a, b, alpha); }
  bool eq(Stratum alpha, const Element& a, const Element& b) const { return eq_alpha(a, b, alpha); }
  Element join(std::span<const Element> xs) const;
  Element restrict(const Element& x, Stratum alpha) const { return strata::restrict(x, alpha); }

 private:
  AtomList atoms_;
};

}  // namespace strata
