#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "strata/finite_model.hpp"

namespace strata {

using ModelPtr = std::shared_ptr<const FiniteModel>;

/// A finite product of models without materialized tables. Elements are
/// mixed-radix indices, first factor most significant; all orders and
/// operations are computed pointwise. No factors is the one-point model.
class ProductView {
 public:
  using Element = Elem;

  /// All factors must have the same number of strata; `kappa` is used only
  /// for the empty product. Throws KappaMismatch, TooLarge.
  explicit ProductView(std::vector<ModelPtr> factors = {}, Stratum kappa = 1);

  const std::vector<ModelPtr>& factors() const { return factors_; }
  std::size_t arity() const { return factors_.size(); }
  std::size_t size() const { return size_; }
  Stratum kappa() const { return kappa_; }

  Elem digit(Elem e, std::size_t i) const { return (e / stride_[i]) % factors_[i]->size(); }
  Elem encode(std::span<const Elem> digits) const;
  std::vector<Elem> decode(Elem e) const;

  bool leq(Elem a, Elem b) const;
  bool sq(Stratum alpha, Elem a, Elem b) const;
  bool eq(Stratum alpha, Elem a, Elem b) const;
  /// Same strict-part rule as FiniteModel::global_sq.
  bool global_sq(Elem a, Elem b) const;

  Elem bottom() const { return bottom_; }
  Elem join(Elem a, Elem b) const;
  Elem join(std::span<const Elem> xs) const;
  Elem restrict(Elem x, Stratum alpha) const;

  std::string name(Elem e) const;

  /// Concatenation of the factor lists.
  friend ProductView operator*(const ProductView& a, const ProductView& b);
  friend bool operator==(const ProductView& a, const ProductView& b);

 private:
  std::vector<ModelPtr> factors_;
  std::vector<Elem> stride_;
  std::size_t size_ = 1;
  Stratum kappa_ = 1;
  Elem bottom_ = 0;
};

}  // namespace strata
