#include "strata/stratified_fn.hpp"

namespace strata {

std::optional<MonotonicityBreach> find_monotonicity_breach(const StratifiedFn& f) {
  const auto n = static_cast<Elem>(f.domain.size());
  for (Stratum alpha = 0; alpha < f.domain.kappa(); ++alpha) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (f.domain.sq(alpha, a, b) && !f.codomain.sq(alpha, f(a), f(b))) return MonotonicityBreach{alpha, a, b};
      }
    }
  }
  return std::nullopt;
}

bool is_alpha_monotonic(const StratifiedFn& f) { return !find_monotonicity_breach(f).has_value(); }

namespace {

struct Constraint {
  Elem earlier;
  Stratum alpha;
  bool earlier_below;  // earlier sq_alpha current; otherwise current sq_alpha earlier
};

class Enumerator {
 public:
  Enumerator(const ProductView& domain, const ProductView& codomain) : fn_{domain, codomain, {}} {
    if (domain.size() > kMaxEnumerationDomain) {
      throw TooLarge("domain of " + std::to_string(domain.size()) + " elements exceeds the enumeration guard");
    }
    if (domain.kappa() != codomain.kappa()) throw KappaMismatch();
    const auto n = static_cast<Elem>(domain.size());
    const auto m = static_cast<Elem>(codomain.size());
    for (Stratum alpha = 0; alpha < codomain.kappa(); ++alpha) {
      Relation r(m);
      for (Elem a = 0; a < m; ++a) {
        for (Elem b = 0; b < m; ++b) r.set(a, b, codomain.sq(alpha, a, b));
      }
      above_.push_back(r);
      below_.push_back(r.transpose());
    }
    constraints_.resize(n);
    for (Elem d = 0; d < n; ++d) {
      for (Elem e = 0; e < d; ++e) {
        for (Stratum alpha = 0; alpha < domain.kappa(); ++alpha) {
          if (domain.sq(alpha, e, d)) constraints_[d].push_back({e, alpha, true});
          if (domain.sq(alpha, d, e)) constraints_[d].push_back({e, alpha, false});
        }
      }
    }
    fn_.graph.assign(n, 0);
  }

  std::size_t run(const std::function<bool(const StratifiedFn&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    count_ = 0;
    if (fn_.domain.size() == 0) return 0;
    descend(0);
    return count_;
  }

 private:
  void descend(Elem d) {
    if (d == fn_.graph.size()) {
      ++count_;
      if (!(*visit_)(fn_)) stopped_ = true;
      return;
    }
    ElementSet allowed(fn_.codomain.size(), true);
    for (const auto& c : constraints_[d]) {
      const Elem v = fn_.graph[c.earlier];
      allowed &= c.earlier_below ? above_[c.alpha].row(v) : below_[c.alpha].row(v);
    }
    for (Elem v : allowed.elements()) {
      fn_.graph[d] = v;
      descend(d + 1);
      if (stopped_) return;
    }
  }

  StratifiedFn fn_;
  std::vector<Relation> above_, below_;
  std::vector<std::vector<Constraint>> constraints_;
  const std::function<bool(const StratifiedFn&)>* visit_ = nullptr;
  bool stopped_ = false;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_monotonic_fn(const ProductView& domain, const ProductView& codomain,
                                  const std::function<bool(const StratifiedFn&)>& visit) {
  Enumerator e(domain, codomain);
  return e.run(visit);
}

std::vector<StratifiedFn> enumerate_monotonic_fns(const ProductView& domain, const ProductView& codomain,
                                                  std::size_t limit) {
  std::vector<StratifiedFn> out;
  for_each_monotonic_fn(domain, codomain, [&](const StratifiedFn& f) {
    if (out.size() == limit) throw TooLarge("more than " + std::to_string(limit) + " monotonic functions");
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<StratifiedFn> enumerate_monotonic_fns(const ModelPtr& model, std::size_t arity, std::size_t limit) {
  ProductView cod({model});
  ProductView dom(std::vector<ModelPtr>(arity, model), model->kappa());
  return enumerate_monotonic_fns(dom, cod, limit);
}

std::size_t count_monotonic_fns(const ProductView& domain, const ProductView& codomain) {
  return for_each_monotonic_fn(domain, codomain, [](const StratifiedFn&) { return true; });
}

StratifiedFn compose(const StratifiedFn& g, const StratifiedFn& f) {
  StratifiedFn out{f.domain, g.codomain, std::vector<Elem>(f.graph.size())};
  for (Elem x = 0; x < f.graph.size(); ++x) out.graph[x] = g(f(x));
  out.provenance = f.provenance == Provenance::TermGenerated && g.provenance == Provenance::TermGenerated
                       ? Provenance::TermGenerated
                       : Provenance::TableChecked;
  return out;
}

StratifiedFn tuple(const std::vector<const StratifiedFn*>& fs) {
  ProductView cod;
  for (const auto* f : fs) cod = cod * f->codomain;
  const auto& dom = fs.front()->domain;
  StratifiedFn out{dom, cod, std::vector<Elem>(dom.size())};
  for (Elem x = 0; x < dom.size(); ++x) {
    Elem e = 0;
    for (const auto* f : fs) e = e * static_cast<Elem>(f->codomain.size()) + (*f)(x);
    out.graph[x] = e;
  }
  return out;
}

StratifiedFn identity_fn(const ProductView& v) {
  StratifiedFn out{v, v, std::vector<Elem>(v.size())};
  for (Elem x = 0; x < v.size(); ++x) out.graph[x] = x;
  return out;
}

StratifiedFn projection(const ProductView& v, std::size_t first, std::size_t count) {
  std::vector<ModelPtr> factors(v.factors().begin() + static_cast<std::ptrdiff_t>(first),
                                v.factors().begin() + static_cast<std::ptrdiff_t>(first + count));
  ProductView cod(std::move(factors), v.kappa());
  StratifiedFn out{v, cod, std::vector<Elem>(v.size())};
  for (Elem x = 0; x < v.size(); ++x) {
    Elem e = 0;
    for (std::size_t i = first; i < first + count; ++i) e = e * static_cast<Elem>(v.factors()[i]->size()) + v.digit(x, i);
    out.graph[x] = e;
  }
  return out;
}

StratifiedFn constant_fn(const ProductView& domain, const ProductView& codomain, Elem value) {
  return {domain, codomain, std::vector<Elem>(domain.size(), value)};
}

}  // namespace strata
