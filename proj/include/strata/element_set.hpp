#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace strata {

using Elem = std::uint32_t;

/// Fixed-size bitset over carrier indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t size, bool fill = false)
      : size_(size), words_((size + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const { return size_; }

  bool test(Elem i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(Elem i, bool on = true) {
    const auto mask = std::uint64_t{1} << (i & 63);
    if (on) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<unsigned>(std::countr_zero(bits));
        fn(static_cast<Elem>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Square boolean matrix stored as one ElementSet per row.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n, bool fill = false) : rows_(n, ElementSet(n, fill)) {}

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (Elem i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  std::size_t size() const { return rows_.size(); }
  bool operator()(Elem a, Elem b) const { return rows_[a].test(b); }
  void set(Elem a, Elem b, bool on = true) { rows_[a].set(b, on); }
  const ElementSet& row(Elem a) const { return rows_[a]; }

  Relation transpose() const {
    Relation t(size());
    for (Elem a = 0; a < size(); ++a) rows_[a].for_each([&](Elem b) { t.set(b, a); });
    return t;
  }
  Relation intersect(const Relation& other) const {
    Relation r = *this;
    for (Elem a = 0; a < size(); ++a) r.rows_[a] &= other.rows_[a];
    return r;
  }

  bool reflexive() const {
    for (Elem a = 0; a < size(); ++a) {
      if (!rows_[a].test(a)) return false;
    }
    return true;
  }
  bool transitive() const {
    for (Elem a = 0; a < size(); ++a) {
      bool ok = true;
      rows_[a].for_each([&](Elem b) { ok = ok && rows_[b].subset_of(rows_[a]); });
      if (!ok) return false;
    }
    return true;
  }
  bool antisymmetric() const {
    for (Elem a = 0; a < size(); ++a) {
      for (Elem b = a + 1; b < size(); ++b) {
        if ((*this)(a, b) && (*this)(b, a)) return false;
      }
    }
    return true;
  }
  bool preorder() const { return reflexive() && transitive(); }
  bool partial_order() const { return preorder() && antisymmetric(); }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<ElementSet> rows_;
};

}  // namespace strata
