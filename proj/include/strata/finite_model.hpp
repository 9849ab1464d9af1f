#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "strata/element_set.hpp"
#include "strata/interpretation.hpp"

namespace strata {

class NotALattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class KappaMismatch : public std::invalid_argument {
 public:
  KappaMismatch() : std::invalid_argument("models have different numbers of strata") {}
};

class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An explicit finite stratified lattice: a complete lattice (carrier, <=)
/// together with one preorder per stratum alpha < kappa.
///
/// Construction validates that <= is a lattice order and every stratum
/// relation is a preorder. It does not check the model axioms; use
/// check_axioms for that.
class FiniteModel {
 public:
  using Element = Elem;

  static FiniteModel create(std::vector<std::string> names, Stratum kappa, Relation leq,
                            std::vector<Relation> sq);

  std::size_t size() const { return names_.size(); }
  Stratum kappa() const { return static_cast<Stratum>(sq_.size()); }

  const std::string& name(Elem e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Throws std::out_of_range for unknown names.
  Elem index_of(const std::string& name) const;

  bool leq(Elem a, Elem b) const { return leq_(a, b); }
  bool sq(Stratum alpha, Elem a, Elem b) const { return sq_[alpha](a, b); }
  bool eq(Stratum alpha, Elem a, Elem b) const { return eq_[alpha](a, b); }

  const Relation& leq_relation() const { return leq_; }
  const Relation& geq_relation() const { return geq_; }
  const Relation& sq_relation(Stratum alpha) const { return sq_[alpha]; }
  const Relation& sq_transpose(Stratum alpha) const { return sq_t_[alpha]; }
  const Relation& eq_relation(Stratum alpha) const { return eq_[alpha]; }

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  /// Supremum w.r.t. <=; the empty join is bottom.
  Elem join(std::span<const Elem> xs) const;
  Elem meet(std::span<const Elem> xs) const;

  /// (w]_alpha: elements equivalent to w at every stratum below alpha.
  ElementSet prefix_class(Stratum alpha, Elem w) const;

  /// The element required by the stratified-supremum axiom for xs inside
  /// (w]_alpha, where w is `witness` or the first member of xs. Found by
  /// exhaustive search; nullopt when no element qualifies.
  std::optional<Elem> lub(Stratum alpha, std::span<const Elem> xs,
                          std::optional<Elem> witness = std::nullopt) const;
  /// Dual of lub.
  std::optional<Elem> glb(Stratum alpha, std::span<const Elem> xs,
                          std::optional<Elem> witness = std::nullopt) const;

  /// x|_alpha, the <=-least element of the =_alpha class of x. Throws
  /// InvalidModel when the class has no least element.
  Elem restrict(Elem x, Stratum alpha) const;
  bool has_restrictions() const { return has_restrictions_; }

  /// a sqsubseteq b: equal, or a sqsubseteq_alpha b but not a =_alpha b for
  /// some alpha. Reading the strict part as a != b instead would make F1 and
  /// F2 of V each below the other at stratum 0.
  bool global_sq(Elem a, Elem b) const;

  friend bool operator==(const FiniteModel& a, const FiniteModel& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_ && a.sq_ == b.sq_;
  }

 private:
  FiniteModel() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  Relation leq_, geq_;
  std::vector<Relation> sq_, sq_t_, eq_;
  std::vector<Elem> join_, meet_;
  std::vector<Elem> restrict_;  // kappa * size, kNoElement when missing
  bool has_restrictions_ = true;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

inline constexpr Elem kNoElement = static_cast<Elem>(-1);

/// A finite lattice given by element names and its order relation.
struct LatticeSpec {
  std::vector<std::string> names;
  Relation leq;

  /// 0 < 1 < ... < k-1.
  static LatticeSpec chain(std::size_t k);
  /// bottom < a, b < top with a, b incomparable.
  static LatticeSpec diamond();
};

/// Every complete lattice as a model: sqsubseteq_0 is <=, higher strata are
/// equality. Throws NotALattice.
FiniteModel lattice_as_model(const LatticeSpec& lattice, Stratum kappa);

/// Which of the three equivalent compatibility conditions failed.
class ConditionViolated : public std::invalid_argument {
 public:
  ConditionViolated(std::string message, std::vector<int> failed, Elem x, Elem y)
      : std::invalid_argument(std::move(message)), failed_(std::move(failed)), x_(x), y_(y) {}
  /// Condition numbers (1, 2, 3) that do not hold.
  const std::vector<int>& failed() const { return failed_; }
  /// A pair with x sqsubseteq_0 y but not x <= y.
  Elem x() const { return x_; }
  Elem y() const { return y_; }

 private:
  std::vector<int> failed_;
  Elem x_, y_;
};

/// Model from two lattice orders on one carrier; strata above 0 are equality.
/// Accepted iff x sqsubseteq_0 y implies x <= y.
FiniteModel two_order_model(const std::vector<std::string>& names, const Relation& leq,
                            const Relation& sq0, Stratum kappa = 2);

/// V truncated to levels <= n, raised to the given atoms; kappa = n + 1.
FiniteModel truncated_v_model(Level n, const std::vector<std::string>& atoms);
/// The carrier values of truncated V in increasing order.
std::vector<TruthValue> truncated_v_values(Level n);

/// The four-element model on {0,1}^2 whose <=-greatest element is 11 and
/// whose sqsubseteq-greatest element is 10.
FiniteModel example26_model();

/// Pointwise product; element (a, b) has index a * |M2| + b.
FiniteModel product(const FiniteModel& m1, const FiniteModel& m2);
FiniteModel power(const FiniteModel& m, std::size_t n);

/// {carrier, kappa, leq: pairs, sq: [pairs per stratum]} using element names.
nlohmann::json to_json(const FiniteModel& m);
FiniteModel model_from_json(const nlohmann::json& j);

}  // namespace strata
