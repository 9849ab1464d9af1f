#include "strata/product_view.hpp"

namespace strata {

ProductView::ProductView(std::vector<ModelPtr> factors, Stratum kappa)
    : factors_(std::move(factors)), kappa_(kappa) {
  if (!factors_.empty()) kappa_ = factors_.front()->kappa();
  for (const auto& f : factors_) {
    if (f->kappa() != kappa_) throw KappaMismatch();
  }
  stride_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    stride_[i] = static_cast<Elem>(size_);
    size_ *= factors_[i]->size();
    if (size_ > (std::size_t{1} << 24)) throw TooLarge("product view exceeds 2^24 elements");
  }
  std::vector<Elem> bottoms;
  for (const auto& f : factors_) bottoms.push_back(f->bottom());
  bottom_ = encode(bottoms);
}

Elem ProductView::encode(std::span<const Elem> digits) const {
  Elem e = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) e += digits[i] * stride_[i];
  return e;
}

std::vector<Elem> ProductView::decode(Elem e) const {
  std::vector<Elem> out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = digit(e, i);
  return out;
}

bool ProductView::leq(Elem a, Elem b) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i]->leq(digit(a, i), digit(b, i))) return false;
  }
  return true;
}

bool ProductView::sq(Stratum alpha, Elem a, Elem b) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i]->sq(alpha, digit(a, i), digit(b, i))) return false;
  }
  return true;
}

bool ProductView::eq(Stratum alpha, Elem a, Elem b) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i]->eq(alpha, digit(a, i), digit(b, i))) return false;
  }
  return true;
}

bool ProductView::global_sq(Elem a, Elem b) const {
  if (a == b) return true;
  for (Stratum alpha = 0; alpha < kappa_; ++alpha) {
    if (sq(alpha, a, b) && !sq(alpha, b, a)) return true;
  }
  return false;
}

Elem ProductView::join(Elem a, Elem b) const {
  Elem e = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) e += factors_[i]->join(digit(a, i), digit(b, i)) * stride_[i];
  return e;
}

Elem ProductView::join(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (auto x : xs) acc = join(acc, x);
  return acc;
}

Elem ProductView::restrict(Elem x, Stratum alpha) const {
  Elem e = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) e += factors_[i]->restrict(digit(x, i), alpha) * stride_[i];
  return e;
}

std::string ProductView::name(Elem e) const {
  if (factors_.size() == 1) return factors_[0]->name(e);
  std::string out = "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i != 0) out += ";";
    out += factors_[i]->name(digit(e, i));
  }
  return out + ")";
}

ProductView operator*(const ProductView& a, const ProductView& b) {
  if (a.factors_.empty()) return b;
  if (b.factors_.empty()) return a;
  auto factors = a.factors_;
  factors.insert(factors.end(), b.factors_.begin(), b.factors_.end());
  return ProductView(std::move(factors));
}

bool operator==(const ProductView& a, const ProductView& b) {
  if (a.factors_.size() != b.factors_.size() || a.kappa_ != b.kappa_) return false;
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    if (a.factors_[i] != b.factors_[i] && !(*a.factors_[i] == *b.factors_[i])) return false;
  }
  return true;
}

}  // namespace strata
