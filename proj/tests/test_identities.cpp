#include <doctest.h>

#include <memory>

#include "strata/identities.hpp"
#include "strata/model_catalog.hpp"

using namespace strata;

namespace {

ModelPtr share(FiniteModel m) { return std::make_shared<const FiniteModel>(std::move(m)); }

ProductView chain2(Stratum kappa) { return ProductView({share(lattice_as_model(LatticeSpec::chain(2), kappa))}); }

StratifiedFn from_graph(const ProductView& dom, const ProductView& cod, auto&& rule) {
  StratifiedFn f{dom, cod, std::vector<Elem>(dom.size())};
  for (Elem x = 0; x < dom.size(); ++x) f.graph[x] = rule(x);
  return f;
}

// Least fixed point of x |-> f(x, p) by listing all fixed points.
Elem least_fixed_point(const StratifiedFn& f, Elem p) {
  const auto& l = f.codomain;
  const auto np = f.domain.size() / l.size();
  std::optional<Elem> best;
  for (Elem x = 0; x < l.size(); ++x) {
    if (f(x * np + p) != x) continue;
    if (!best || l.leq(x, *best)) best = x;
  }
  for (Elem x = 0; x < l.size(); ++x) {
    if (f(x * np + p) == x) REQUIRE(l.leq(*best, x));
  }
  return *best;
}

}  // namespace

TEST_CASE("conway identities on small cases") {
  const auto l = chain2(2);
  const auto p = chain2(2);
  for (Elem c = 0; c < 2; ++c) {
    const auto f = constant_fn(l * p, l, c);
    const auto r = check_fixed_point(f);
    CHECK(r.passed());
    CHECK(dagger(f).graph == std::vector<Elem>{c, c});
  }
  // g = id: both sides are f^dagger.
  for_each_monotonic_fn(l * p, l, [&](const StratifiedFn& f) {
    CHECK(check_parameter(f, identity_fn(p)).passed());
    CHECK(check_fixed_point(f).passed());
    return true;
  });
  std::size_t pairs = 0;
  for_each_monotonic_fn(l * p, l, [&](const StratifiedFn& f) {
    for_each_monotonic_fn(l * p, l, [&](const StratifiedFn& g) {
      ++pairs;
      CHECK(check_composition(f, g).passed());
      return true;
    });
    return true;
  });
  CHECK(pairs > 0);
  for_each_monotonic_fn(l * l * p, l, [&](const StratifiedFn& f) {
    CHECK(check_double_dagger(f).passed());
    return true;
  });
}

TEST_CASE("bekic") {
  const auto l = chain2(2);
  const auto k = ProductView({share(truncated_v_model(1, {"a"}))});
  const auto p = chain2(2);
  const auto lk = l * k;
  const auto nk = static_cast<Elem>(k.size()), np = static_cast<Elem>(p.size());
  std::size_t cases = 0;
  for_each_monotonic_fn(l * p, l, [&](const StratifiedFn& f0) {
    for_each_monotonic_fn(k * p, k, [&](const StratifiedFn& g0) {
      // Decoupled: f ignores K and g ignores L.
      const auto f = from_graph(lk * p, l, [&](Elem x) { return f0((x / (nk * np)) * np + x % np); });
      const auto g = from_graph(lk * p, k, [&](Elem x) { return g0(x % (nk * np)); });
      ++cases;
      CHECK(check_bekic(f, g).passed());
      // Then the joint solution is the pair of separate daggers.
      const auto fd = dagger(f0), gd = dagger(g0);
      for (Elem q = 0; q < np; ++q) {
        const auto jf = from_graph(lk * p, lk, [&](Elem x) { return f(x) * nk + g(x); });
        CHECK(dagger(jf)(q) == fd(q) * nk + gd(q));
      }
      return cases < 400;
    });
    return cases < 400;
  });
  CHECK(cases == 400);
}

TEST_CASE("weak functorial dagger") {
  const auto l = chain2(2);
  const auto p = chain2(2);
  const auto nl = static_cast<Elem>(l.size()), np = static_cast<Elem>(p.size());
  std::size_t vacuous = 0, checked = 0;
  for_each_monotonic_fn(l * p, l, [&](const StratifiedFn& g) {
    auto split = [&](Elem x) { return std::array<Elem, 3>{x / (nl * np), (x / np) % nl, x % np}; };
    const auto copy = from_graph(l * l * p, l * l, [&](Elem x) {
      const auto [a, b, q] = split(x);
      return g(a * np + q) * nl + g(b * np + q);
    });
    const auto swap = from_graph(l * l * p, l * l, [&](Elem x) {
      const auto [a, b, q] = split(x);
      return g(b * np + q) * nl + g(a * np + q);
    });
    for (const auto* f : {&copy, &swap}) {
      const auto r = check_weak_functorial(*f, g, 2);
      CHECK(r.status == CheckStatus::Pass);
      ++checked;
    }
    // Constant bottom in both coordinates breaks the premise unless g is
    // constant bottom on the diagonal.
    const auto bottom = constant_fn(l * l * p, l * l, 0);
    const auto r = check_weak_functorial(bottom, g, 2);
    bool g_bottom = true;
    for (Elem x = 0; x < g.graph.size(); ++x) g_bottom = g_bottom && g(x) == 0;
    if (!g_bottom) {
      CHECK(r.status == CheckStatus::Vacuous);
      CHECK(r.detail.rfind("premise fails at ", 0) == 0);
      ++vacuous;
    }
    return true;
  });
  CHECK(checked > 0);
  CHECK(vacuous > 0);
  CHECK_THROWS_AS(check_weak_functorial(constant_fn(l * p, l, 0), constant_fn(l * p, l, 0), 2), ArityMismatch);
}

TEST_CASE("abstraction and induction") {
  const auto c = chain2(2);
  const auto v = ProductView({share(truncated_v_model(1, {"a"}))});
  CHECK(exponential(c, c).functions.size() == 3);
  CHECK(exponential(c, v).functions.size() == 18);
  // The acceptance run covers all of them; a prefix of each space here.
  for (const auto& [target, source] : {std::pair{c, c}, std::pair{v, c}}) {
    const auto space = exponential(source, target);
    std::size_t count = 0;
    for_each_monotonic_fn(target * source, target, [&](const StratifiedFn& f) {
      CHECK(check_abstraction(f).passed());
      CHECK(check_fp_induction(f).passed());
      // f^dagger itself satisfies the induction premise with equality.
      const auto fd = dagger(f);
      const auto at = space.find(fd.graph);
      REQUIRE(at);
      const auto np = static_cast<Elem>(source.size());
      for (Elem q = 0; q < np; ++q) CHECK(f(fd(q) * np + q) == fd(q));
      return ++count < 1500;
    });
    CHECK(count > 0);
  }

  for (Elem k = 0; k < 2; ++k) CHECK(check_abstraction(constant_fn(c * c, c, k)).passed());

  const auto broken = ProductView({share(example26_model())});
  try {
    check_abstraction(constant_fn(broken * c, broken, 0));
    FAIL("expected AxiomPreconditionFailed");
  } catch (const AxiomPreconditionFailed& e) {
    CHECK_FALSE(e.report().holds(Axiom::Ax5));
  }
  CHECK_THROWS_AS(exponential(v * v, v), FunctionSpaceTooLarge);
  CHECK_THROWS_AS(dagger(constant_fn(c * c, v, 0)), ArityMismatch);
}

TEST_CASE("dagger on plain lattices is the classical least fixed point") {
  std::size_t functions = 0;
  for (const auto& lattice : lattices_up_to(4)) {
    for (Stratum kappa = 1; kappa <= 2; ++kappa) {
      const ProductView l({share(lattice_as_model(lattice, kappa))});
      for (const auto& p : {ProductView({}, kappa), chain2(kappa)}) {
        for_each_monotonic_fn(l * p, l, [&](const StratifiedFn& f) {
          ++functions;
          const auto d = dagger(f);
          CHECK(kleene_lfp(f).graph == d.graph);
          for (Elem q = 0; q < p.size(); ++q) CHECK(d(q) == least_fixed_point(f, q));
          return true;
        });
      }
    }
  }
  CHECK(functions > 100);
  const auto c = chain2(1);
  CHECK_THROWS_AS(kleene_lfp(StratifiedFn{c, c, {1, 0}}), std::logic_error);
}

TEST_CASE("result json") {
  CheckResult r;
  r.identity = "bekic";
  r.case_id = 3;
  r.seed = 9;
  CHECK(to_json(r) == nlohmann::json{{"identity", "bekic"}, {"status", "pass"}, {"case", 3}, {"seed", 9}});
  r.status = CheckStatus::Fail;
  r.point = "(1)";
  r.lhs = "0";
  r.rhs = "1";
  const auto j = to_json(r);
  CHECK(j["status"] == "fail");
  CHECK(j["point"] == "(1)");
  CHECK(j["lhs"] == "0");
  CHECK(j["rhs"] == "1");
}
