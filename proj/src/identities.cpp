#include "strata/identities.hpp"

#include <map>

namespace strata {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ArityMismatch(what);
}

ProductView factor_range(const ProductView& v, std::size_t first, std::size_t count) {
  require(first + count <= v.arity(), "not enough domain factors");
  std::vector<ModelPtr> fs(v.factors().begin() + static_cast<std::ptrdiff_t>(first),
                           v.factors().begin() + static_cast<std::ptrdiff_t>(first + count));
  return ProductView(std::move(fs), v.kappa());
}

bool starts_with(const ProductView& v, const ProductView& prefix, std::size_t offset = 0) {
  return v.arity() >= offset + prefix.arity() && factor_range(v, offset, prefix.arity()) == prefix;
}

CheckResult compare(std::string identity, const StratifiedFn& lhs, const StratifiedFn& rhs) {
  CheckResult r;
  r.identity = std::move(identity);
  for (Elem p = 0; p < lhs.graph.size(); ++p) {
    if (lhs(p) != rhs(p)) {
      r.status = CheckStatus::Fail;
      r.point = lhs.domain.name(p);
      r.lhs = lhs.codomain.name(lhs(p));
      r.rhs = rhs.codomain.name(rhs(p));
      break;
    }
  }
  return r;
}

StratifiedFn table(const ProductView& dom, const ProductView& cod) {
  return {dom, cod, std::vector<Elem>(dom.size(), 0)};
}

}  // namespace

ProductView parameter_view(const StratifiedFn& f, std::size_t skip) {
  return factor_range(f.domain, skip, f.domain.arity() - skip);
}

StratifiedFn dagger(const StratifiedFn& f, StratumPolicy policy) {
  const ProductView& space = f.codomain;
  require(starts_with(f.domain, space), "dagger needs f: L x P -> L");
  const ProductView params = parameter_view(f, space.arity());
  const auto np = static_cast<Elem>(params.size());

  OuterOptions options;
  options.policy = policy;
  options.strata = space.kappa();
  StratifiedFn out = table(params, space);
  for (Elem p = 0; p < np; ++p) {
    auto step = [&](Elem x) { return f(x * np + p); };
    out.graph[p] = stratified_fix(space, step, options).value;
  }
  return out;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Vacuous: break;
  }
  return "vacuous";
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j{{"identity", r.identity}, {"status", to_string(r.status)}, {"case", r.case_id}, {"seed", r.seed}};
  if (r.status == CheckStatus::Fail) {
    j["point"] = r.point;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

CheckResult check_fixed_point(const StratifiedFn& f) {
  const StratifiedFn fd = dagger(f);
  const auto np = static_cast<Elem>(fd.domain.size());
  StratifiedFn rhs = table(fd.domain, fd.codomain);
  for (Elem p = 0; p < np; ++p) rhs.graph[p] = f(fd(p) * np + p);
  return compare("fixed_point", fd, rhs);
}

CheckResult check_parameter(const StratifiedFn& f, const StratifiedFn& g) {
  const ProductView& space = f.codomain;
  const ProductView params = parameter_view(f, space.arity());
  require(g.codomain == params, "parameter identity needs g: Q -> P");
  const auto np = static_cast<Elem>(params.size());
  const auto nq = static_cast<Elem>(g.domain.size());

  StratifiedFn h = table(space * g.domain, space);
  for (Elem x = 0; x < space.size(); ++x) {
    for (Elem q = 0; q < nq; ++q) h.graph[x * nq + q] = f(x * np + g(q));
  }
  const StratifiedFn lhs = compose(dagger(f), g);
  return compare("parameter", lhs, dagger(h));
}

CheckResult check_composition(const StratifiedFn& f, const StratifiedFn& g) {
  const ProductView& l = g.codomain;
  const ProductView& m = f.codomain;
  require(starts_with(f.domain, l), "composition identity needs f: L x P -> M");
  const ProductView params = parameter_view(f, l.arity());
  require(g.domain == m * params, "composition identity needs g: M x P -> L");
  const auto np = static_cast<Elem>(params.size());

  StratifiedFn h = table(f.domain, l);  // (x, p) |-> g(f(x, p), p)
  for (Elem x = 0; x < l.size(); ++x) {
    for (Elem p = 0; p < np; ++p) h.graph[x * np + p] = g(f(x * np + p) * np + p);
  }
  StratifiedFn k = table(g.domain, m);  // (y, p) |-> f(g(y, p), p)
  for (Elem y = 0; y < m.size(); ++y) {
    for (Elem p = 0; p < np; ++p) k.graph[y * np + p] = f(g(y * np + p) * np + p);
  }
  const StratifiedFn kd = dagger(k);
  StratifiedFn rhs = table(params, l);
  for (Elem p = 0; p < np; ++p) rhs.graph[p] = g(kd(p) * np + p);
  return compare("composition", dagger(h), rhs);
}

CheckResult check_double_dagger(const StratifiedFn& f) {
  const ProductView& l = f.codomain;
  require(starts_with(f.domain, l) && starts_with(f.domain, l, l.arity()),
          "double dagger identity needs f: L x L x P -> L");
  const ProductView params = parameter_view(f, 2 * l.arity());
  const auto np = static_cast<Elem>(params.size());
  const auto nl = static_cast<Elem>(l.size());

  StratifiedFn diagonal = table(l * params, l);
  for (Elem x = 0; x < nl; ++x) {
    for (Elem p = 0; p < np; ++p) diagonal.graph[x * np + p] = f((x * nl + x) * np + p);
  }
  return compare("double_dagger", dagger(diagonal), dagger(dagger(f)));
}

CheckResult check_bekic(const StratifiedFn& f, const StratifiedFn& g) {
  const ProductView& l = f.codomain;
  const ProductView& k = g.codomain;
  require(starts_with(f.domain, l) && starts_with(f.domain, k, l.arity()), "Bekic needs f: L x K x P -> L");
  require(g.domain == f.domain, "Bekic needs f and g on the same domain");
  const ProductView params = parameter_view(f, l.arity() + k.arity());
  const auto np = static_cast<Elem>(params.size());
  const auto nk = static_cast<Elem>(k.size());

  StratifiedFn joint = table(f.domain, l * k);
  for (Elem e = 0; e < f.domain.size(); ++e) joint.graph[e] = f(e) * nk + g(e);
  const StratifiedFn together = dagger(joint);

  const StratifiedFn fd = dagger(f);  // K x P -> L
  StratifiedFn reduced = table(k * params, k);
  for (Elem yp = 0; yp < reduced.graph.size(); ++yp) reduced.graph[yp] = g(fd(yp) * nk * np + yp);
  const StratifiedFn kd = dagger(reduced);  // P -> K
  StratifiedFn staged = table(params, l * k);
  for (Elem p = 0; p < np; ++p) staged.graph[p] = fd(kd(p) * np + p) * nk + kd(p);
  return compare("bekic", together, staged);
}

CheckResult check_weak_functorial(const StratifiedFn& f, const StratifiedFn& g, std::size_t n) {
  const ProductView& l = g.codomain;
  require(n >= 1 && f.codomain.arity() == n * l.arity(), "weak functorial dagger needs f: L^n x P -> L^n");
  for (std::size_t i = 0; i < n; ++i) {
    require(starts_with(f.codomain, l, i * l.arity()), "weak functorial dagger needs f: L^n x P -> L^n");
  }
  require(starts_with(g.domain, l), "weak functorial dagger needs g: L x P -> L");
  const ProductView params = parameter_view(g, l.arity());
  require(parameter_view(f, n * l.arity()) == params, "f and g must share the parameter object");
  const auto np = static_cast<Elem>(params.size());
  const auto nl = static_cast<Elem>(l.size());
  auto diag = [&](Elem x) {
    Elem e = 0;
    for (std::size_t i = 0; i < n; ++i) e = e * nl + x;
    return e;
  };

  CheckResult r;
  r.identity = "weak_functorial";
  for (Elem x = 0; x < nl; ++x) {
    for (Elem p = 0; p < np; ++p) {
      if (f(diag(x) * np + p) != diag(g(x * np + p))) {
        r.status = CheckStatus::Vacuous;
        r.detail = "premise fails at " + l.name(x);
        return r;
      }
    }
  }
  const StratifiedFn gd = dagger(g);
  StratifiedFn rhs = table(params, f.codomain);
  for (Elem p = 0; p < np; ++p) rhs.graph[p] = diag(gd(p));
  auto out = compare("weak_functorial", dagger(f), rhs);
  return out;
}

std::optional<Elem> Exponential::find(const std::vector<Elem>& graph) const {
  // Functions are enumerated in lexicographic order of their graphs.
  auto it = std::lower_bound(functions.begin(), functions.end(), graph,
                             [](const StratifiedFn& fn, const std::vector<Elem>& g) { return fn.graph < g; });
  if (it == functions.end() || it->graph != graph) return std::nullopt;
  return static_cast<Elem>(it - functions.begin());
}

Exponential exponential(const ProductView& source, const ProductView& target) {
  std::vector<StratifiedFn> fns;
  for_each_monotonic_fn(source, target, [&](const StratifiedFn& fn) {
    if (fns.size() == kMaxFunctionSpace) {
      throw FunctionSpaceTooLarge("more than " + std::to_string(kMaxFunctionSpace) + " monotonic functions");
    }
    fns.push_back(fn);
    return true;
  });
  const auto n = fns.size();
  std::vector<std::string> names;
  for (const auto& fn : fns) {
    std::string name = "[";
    for (Elem y = 0; y < fn.graph.size(); ++y) name += (y != 0 ? "," : "") + target.name(fn(y));
    names.push_back(name + "]");
  }
  auto pointwise = [&](auto rel) {
    Relation r(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        bool all = true;
        for (Elem y = 0; y < source.size() && all; ++y) all = rel(fns[a](y), fns[b](y));
        r.set(a, b, all);
      }
    }
    return r;
  };
  Relation leq = pointwise([&](Elem u, Elem v) { return target.leq(u, v); });
  std::vector<Relation> sq;
  for (Stratum alpha = 0; alpha < target.kappa(); ++alpha) {
    sq.push_back(pointwise([&](Elem u, Elem v) { return target.sq(alpha, u, v); }));
  }
  return {FiniteModel::create(std::move(names), target.kappa(), std::move(leq), std::move(sq)), std::move(fns)};
}

namespace {

void require_ax5_ax6(const ProductView& v) {
  const Axiom needed[] = {Axiom::Ax5, Axiom::Ax6};
  for (const auto& factor : v.factors()) {
    auto report = check_axioms(*factor, needed, Execution::Serial);
    if (!report.all_hold()) throw AxiomPreconditionFailed("abstraction needs Ax5 and Ax6", std::move(report));
  }
}

struct Curried {
  Exponential space;
  StratifiedFn lifted;  // h |-> (p |-> f(h(p), p)) on the exponential
  Elem fixed;           // f^dagger as an element of the exponential
};

Curried curry(const StratifiedFn& f) {
  const ProductView& l = f.codomain;
  require(starts_with(f.domain, l), "abstraction needs f: L x P -> L");
  const ProductView params = parameter_view(f, l.arity());
  const auto np = static_cast<Elem>(params.size());
  Curried c{exponential(params, l), StratifiedFn{ProductView(), ProductView(), {}}, 0};
  auto model = std::make_shared<const FiniteModel>(c.space.model);
  ProductView e({model});
  c.lifted = table(e, e);
  for (Elem h = 0; h < c.space.functions.size(); ++h) {
    std::vector<Elem> graph(np);
    for (Elem p = 0; p < np; ++p) graph[p] = f(c.space.functions[h](p) * np + p);
    auto idx = c.space.find(graph);
    if (!idx) throw std::logic_error("lifted map leaves the function space");
    c.lifted.graph[h] = *idx;
  }
  auto fixed = c.space.find(dagger(f).graph);
  if (!fixed) throw std::logic_error("dagger of f is not alpha-monotonic");
  c.fixed = *fixed;
  return c;
}

}  // namespace

CheckResult check_abstraction(const StratifiedFn& f) {
  require_ax5_ax6(f.domain);
  const Curried c = curry(f);
  CheckResult r;
  r.identity = "abstraction";
  const Elem lhs = dagger(c.lifted)(0);
  if (lhs != c.fixed) {
    r.status = CheckStatus::Fail;
    r.point = "()";
    r.lhs = c.space.model.name(lhs);
    r.rhs = c.space.model.name(c.fixed);
  }
  return r;
}

CheckResult check_fp_induction(const StratifiedFn& f) {
  const Curried c = curry(f);
  CheckResult r;
  r.identity = "fp_induction";
  const auto& m = c.space.model;
  for (Elem g = 0; g < m.size(); ++g) {
    if (m.global_sq(c.lifted(g), g) && !m.global_sq(c.fixed, g)) {
      r.status = CheckStatus::Fail;
      r.point = m.name(g);
      r.lhs = m.name(c.fixed);
      r.rhs = m.name(g);
      break;
    }
  }
  return r;
}

StratifiedFn kleene_lfp(const StratifiedFn& f) {
  const ProductView& l = f.codomain;
  require(starts_with(f.domain, l), "least fixed point needs f: L x P -> L");
  const ProductView params = parameter_view(f, l.arity());
  const auto np = static_cast<Elem>(params.size());
  StratifiedFn out = table(params, l);
  for (Elem p = 0; p < np; ++p) {
    Elem x = l.bottom();
    for (std::size_t steps = 0;; ++steps) {
      const Elem next = f(x * np + p);
      if (next == x) break;
      if (!l.leq(x, next) || steps > l.size()) throw std::logic_error("function is not monotone");
      x = next;
    }
    out.graph[p] = x;
  }
  return out;
}

}  // namespace strata
