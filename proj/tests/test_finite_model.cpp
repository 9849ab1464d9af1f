#include <doctest.h>

#include "strata/axioms.hpp"
#include "strata/finite_model.hpp"
#include "strata/model_catalog.hpp"

using namespace strata;

namespace {

Relation from_pairs(std::size_t n, std::initializer_list<std::pair<Elem, Elem>> pairs) {
  Relation r = Relation::identity(n);
  for (auto [a, b] : pairs) r.set(a, b);
  return r;
}

// 0 < 1 < 2 < 3 as <=, and a diamond 0 < 1, 2 < 3 as the stratum-0 order.
FiniteModel chain_with_diamond() {
  const Relation leq = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const Relation sq0 = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  return two_order_model({"a", "b", "c", "d"}, leq, sq0);
}

}  // namespace

TEST_CASE("construction validates the carrier order and the strata") {
  const Relation chain = from_pairs(2, {{0, 1}});
  CHECK_NOTHROW(FiniteModel::create({"0", "1"}, 1, chain, {chain}));
  // Two incomparable elements have no join.
  CHECK_THROWS_AS(FiniteModel::create({"a", "b"}, 1, Relation::identity(2), {chain}), NotALattice);
  CHECK_THROWS_AS(FiniteModel::create({"0", "1"}, 2, chain, {chain}), InvalidModel);
  CHECK_THROWS_AS(FiniteModel::create({"0", "0"}, 1, chain, {chain}), InvalidModel);
  Relation not_transitive = from_pairs(3, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(FiniteModel::create({"0", "1", "2"}, 1, from_pairs(3, {{0, 1}, {1, 2}, {0, 2}}), {not_transitive}),
                  InvalidModel);
}

TEST_CASE("lattices as models") {
  const auto m = lattice_as_model(LatticeSpec::diamond(), 3);
  CHECK(m.size() == 4);
  CHECK(m.kappa() == 3);
  CHECK(m.leq(m.bottom(), m.top()));
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      CHECK(m.sq(0, a, b) == m.leq(a, b));
      CHECK(m.sq(1, a, b) == (a == b));
      CHECK(m.sq(2, a, b) == (a == b));
    }
  }
  // With sqsubseteq_0 = <= every restriction is the identity and the global
  // order is <=.
  for (Elem a = 0; a < 4; ++a) {
    for (Stratum alpha = 0; alpha < 3; ++alpha) CHECK(m.restrict(a, alpha) == a);
    for (Elem b = 0; b < 4; ++b) CHECK(m.global_sq(a, b) == m.leq(a, b));
  }
  CHECK(check_axioms(m, kAllAxioms).all_hold());
}

TEST_CASE("two-order models") {
  const auto m = chain_with_diamond();
  CHECK(check_axioms(m, kModelAxioms).all_hold());

  // A stratum-0 order not contained in <= breaks all three conditions.
  const Relation leq = from_pairs(2, {{0, 1}});
  const Relation reversed = from_pairs(2, {{1, 0}});
  try {
    two_order_model({"0", "1"}, leq, reversed);
    FAIL("expected ConditionViolated");
  } catch (const ConditionViolated& e) {
    CHECK(e.failed() == std::vector<int>{1, 2, 3});
    CHECK(e.x() == 1);
    CHECK(e.y() == 0);
  }
}

TEST_CASE("truncated V") {
  CHECK(truncated_v_values(1) == std::vector<TruthValue>{TruthValue::f(0), TruthValue::f(1), TruthValue::zero(),
                                                          TruthValue::t(1), TruthValue::t(0)});
  const auto m = truncated_v_model(1, {"p", "q"});
  CHECK(m.size() == 25);
  CHECK(m.kappa() == 2);
  CHECK(m.name(m.bottom()) == "F0,F0");
  CHECK(m.name(m.top()) == "T0,T0");
  // Orders agree with the per-coordinate rules of V.
  const auto vals = truncated_v_values(1);
  for (Elem a = 0; a < 25; ++a) {
    for (Elem b = 0; b < 25; ++b) {
      const TruthValue a1 = vals[a / 5], a2 = vals[a % 5], b1 = vals[b / 5], b2 = vals[b % 5];
      CHECK(m.leq(a, b) == (a1 <= b1 && a2 <= b2));
      for (Stratum alpha = 0; alpha < 2; ++alpha) {
        CHECK(m.sq(alpha, a, b) == (below_at(a1, b1, alpha) && below_at(a2, b2, alpha)));
      }
    }
  }
  for (Level n = 0; n <= 2; ++n) {
    for (std::size_t atoms = 1; atoms <= 2; ++atoms) {
      std::vector<std::string> names{"a", "b"};
      names.resize(atoms);
      CHECK(check_axioms(truncated_v_model(n, names), kAllAxioms).all_hold());
    }
  }
}

TEST_CASE("example26 maxima differ between the two orders") {
  const auto m = example26_model();
  CHECK(m.name(leq_maximum(m)) == "11");
  const auto sq_max = global_maximum(m);
  REQUIRE(sq_max);
  CHECK(m.name(*sq_max) == "10");
  // The global order is the chain 00 < 01 < 11 < 10.
  const std::vector<std::string> order{"00", "01", "11", "10"};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(m.global_sq(m.index_of(order[i]), m.index_of(order[j])) == (i <= j));
    }
  }
}

TEST_CASE("products are pointwise and preserve the axioms") {
  const auto c = lattice_as_model(LatticeSpec::chain(2), 2);
  const auto v = truncated_v_model(1, {"p"});
  const auto p = product(c, v);
  CHECK(p.size() == 10);
  CHECK(p.name(6) == "(1,F1)");
  for (Elem a = 0; a < 10; ++a) {
    for (Elem b = 0; b < 10; ++b) {
      CHECK(p.leq(a, b) == (c.leq(a / 5, b / 5) && v.leq(a % 5, b % 5)));
      CHECK(p.sq(1, a, b) == (c.sq(1, a / 5, b / 5) && v.sq(1, a % 5, b % 5)));
    }
  }
  CHECK(check_axioms(p, kAllAxioms).all_hold());
  CHECK(check_axioms(power(chain_with_diamond(), 2), kModelAxioms).all_hold());
  CHECK_THROWS_AS(product(c, lattice_as_model(LatticeSpec::chain(2), 3)), KappaMismatch);
  CHECK(power(c, 3).size() == 8);
}

TEST_CASE("json round trip") {
  for (const auto& m : {example26_model(), truncated_v_model(1, {"p"}), chain_with_diamond()}) {
    CHECK(model_from_json(to_json(m)) == m);
  }
  auto j = to_json(example26_model());
  auto broken = j;
  broken["sq"][0].push_back({"11", "00"});
  CHECK_THROWS_AS(model_from_json(broken), InvalidModel);
  broken = j;
  broken["carrier"].push_back("xx");
  CHECK_THROWS(model_from_json(broken));
}

TEST_CASE("stratified suprema on a finite model") {
  const auto m = truncated_v_model(1, {"p"});
  auto e = [&](const char* name) { return m.index_of(name); };
  const Elem xs[] = {e("F1"), e("0")};
  CHECK(m.lub(0, xs) == e("F1"));
  CHECK(m.lub(1, xs) == e("0"));
  const Elem ts[] = {e("T1"), e("F1")};
  CHECK(m.lub(1, ts) == e("T1"));
  CHECK(m.glb(1, ts) == e("F1"));
  CHECK(m.restrict(e("T1"), 0) == e("F1"));
  CHECK(m.restrict(e("T0"), 0) == e("T0"));
}

TEST_CASE("catalogue sizes") {
  // Preorders on a labelled n-set: 1, 4, 29, 355, 6942.
  const std::size_t preorders[] = {1, 4, 29, 355, 6942};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(all_preorders(n).size() == preorders[n - 1]);
  // Unlabelled lattices with n elements: 1, 1, 1, 2, 5, 15.
  const std::size_t lattices[] = {1, 1, 1, 2, 5, 15};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(lattices_of_size(n).size() == lattices[n - 1]);
  CHECK(lattices_up_to(5).size() == 10);
}

TEST_CASE("model catalogue: valid, distinct, and complete on two elements") {
  const auto models = models_up_to(4, 3);
  CHECK(models.size() == 132);
  for (const auto& m : models) CHECK(check_axioms(m, kModelAxioms).all_hold());

  // Brute force for two elements: every lattice order and every choice of
  // preorders, filtered by the axioms, up to swapping the elements.
  std::size_t expected = 0;
  const auto pre = all_preorders(2);
  for (Stratum kappa = 1; kappa <= 3; ++kappa) {
    std::vector<std::size_t> pick(kappa, 0);
    while (true) {
      std::vector<Relation> sq;
      for (auto i : pick) sq.push_back(pre[i]);
      const Relation leq = from_pairs(2, {{0, 1}});
      const auto m = FiniteModel::create({"0", "1"}, kappa, leq, sq);
      if (check_axioms(m, kModelAxioms, Execution::Serial).all_hold()) ++expected;
      std::size_t k = 0;
      while (k < kappa && ++pick[k] == pre.size()) pick[k++] = 0;
      if (k == kappa) break;
    }
  }
  std::size_t two = 0;
  for (const auto& m : models) two += m.size() == 2;
  // The two-element lattice has no nontrivial automorphism.
  CHECK(two == expected);
}
