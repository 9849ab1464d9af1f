#include "strata/finite_model.hpp"

#include <algorithm>

namespace strata {

namespace {

struct LatticeTables {
  std::vector<Elem> join, meet;
  Elem bottom = 0, top = 0;
};

// Least element of `candidates` w.r.t. an order given by its "below" rows
// (below.row(z) = elements <= z). kNoElement if there is no unique minimum.
Elem unique_minimum(const ElementSet& candidates, const Relation& below) {
  Elem found = kNoElement;
  bool ambiguous = false;
  candidates.for_each([&](Elem z) {
    if ((below.row(z) & candidates).count() == 1) {
      if (found != kNoElement) ambiguous = true;
      found = z;
    }
  });
  return ambiguous ? kNoElement : found;
}

LatticeTables lattice_tables(const Relation& leq, const std::string& what) {
  const auto n = leq.size();
  if (n == 0) throw NotALattice(what + ": empty carrier");
  if (!leq.partial_order()) throw NotALattice(what + ": not a partial order");
  const Relation geq = leq.transpose();
  LatticeTables t;
  t.join.resize(n * n);
  t.meet.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      const Elem j = unique_minimum(leq.row(a) & leq.row(b), geq);
      const Elem m = unique_minimum(geq.row(a) & geq.row(b), leq);
      if (j == kNoElement || m == kNoElement) {
        throw NotALattice(what + ": elements " + std::to_string(a) + " and " + std::to_string(b) +
                          " lack a supremum or infimum");
      }
      t.join[a * n + b] = t.join[b * n + a] = j;
      t.meet[a * n + b] = t.meet[b * n + a] = m;
    }
  }
  t.bottom = unique_minimum(ElementSet(n, true), geq);
  t.top = unique_minimum(ElementSet(n, true), leq);
  return t;
}

}  // namespace

FiniteModel FiniteModel::create(std::vector<std::string> names, Stratum kappa, Relation leq,
                                std::vector<Relation> sq) {
  const auto n = names.size();
  if (kappa == 0) throw InvalidModel("a model needs at least one stratum");
  if (sq.size() != kappa) throw InvalidModel("expected one relation per stratum");
  if (leq.size() != n) throw InvalidModel("order relation does not match the carrier");
  for (const auto& r : sq) {
    if (r.size() != n) throw InvalidModel("stratum relation does not match the carrier");
    if (!r.preorder()) throw InvalidModel("stratum relation is not a preorder");
  }

  FiniteModel m;
  auto tables = lattice_tables(leq, "carrier order");
  m.names_ = std::move(names);
  for (Elem i = 0; i < n; ++i) {
    if (!m.index_.emplace(m.names_[i], i).second) {
      throw InvalidModel("duplicate element name '" + m.names_[i] + "'");
    }
  }
  m.leq_ = std::move(leq);
  m.geq_ = m.leq_.transpose();
  m.sq_ = std::move(sq);
  for (const auto& r : m.sq_) {
    m.sq_t_.push_back(r.transpose());
    m.eq_.push_back(r.intersect(m.sq_t_.back()));
  }
  m.join_ = std::move(tables.join);
  m.meet_ = std::move(tables.meet);
  m.bottom_ = tables.bottom;
  m.top_ = tables.top;

  m.restrict_.assign(static_cast<std::size_t>(kappa) * n, kNoElement);
  for (Stratum alpha = 0; alpha < kappa; ++alpha) {
    for (Elem x = 0; x < n; ++x) {
      const Elem least = unique_minimum(m.eq_[alpha].row(x), m.geq_);
      m.restrict_[alpha * n + x] = least;
      if (least == kNoElement) m.has_restrictions_ = false;
    }
  }
  return m;
}

Elem FiniteModel::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown element '" + name + "'");
  return it->second;
}

Elem FiniteModel::join(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (auto x : xs) acc = join(acc, x);
  return acc;
}

Elem FiniteModel::meet(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (auto x : xs) acc = meet(acc, x);
  return acc;
}

ElementSet FiniteModel::prefix_class(Stratum alpha, Elem w) const {
  ElementSet out(size(), true);
  for (Stratum beta = 0; beta < alpha; ++beta) out &= eq_[beta].row(w);
  return out;
}

std::optional<Elem> FiniteModel::lub(Stratum alpha, std::span<const Elem> xs,
                                     std::optional<Elem> witness) const {
  if (!witness && xs.empty()) {
    throw std::invalid_argument("stratified supremum of an empty set needs a witness");
  }
  const ElementSet cls = prefix_class(alpha, witness ? *witness : xs.front());
  ElementSet upper = cls;
  for (auto x : xs) {
    if (!cls.test(x)) return std::nullopt;
    upper &= sq_[alpha].row(x);
  }
  std::optional<Elem> found;
  upper.for_each([&](Elem z) {
    if (!found && upper.subset_of(sq_[alpha].row(z) & leq_.row(z))) found = z;
  });
  return found;
}

std::optional<Elem> FiniteModel::glb(Stratum alpha, std::span<const Elem> xs,
                                     std::optional<Elem> witness) const {
  if (!witness && xs.empty()) {
    throw std::invalid_argument("stratified infimum of an empty set needs a witness");
  }
  const ElementSet cls = prefix_class(alpha, witness ? *witness : xs.front());
  ElementSet lower = cls;
  for (auto x : xs) {
    if (!cls.test(x)) return std::nullopt;
    lower &= sq_t_[alpha].row(x);
  }
  std::optional<Elem> found;
  lower.for_each([&](Elem z) {
    if (!found && lower.subset_of(sq_t_[alpha].row(z) & geq_.row(z))) found = z;
  });
  return found;
}

Elem FiniteModel::restrict(Elem x, Stratum alpha) const {
  const Elem r = restrict_[alpha * size() + x];
  if (r == kNoElement) {
    throw InvalidModel("class of '" + names_[x] + "' at stratum " + std::to_string(alpha) +
                       " has no least element");
  }
  return r;
}

bool FiniteModel::global_sq(Elem a, Elem b) const {
  if (a == b) return true;
  for (Stratum alpha = 0; alpha < kappa(); ++alpha) {
    if (sq_[alpha](a, b) && !sq_[alpha](b, a)) return true;
  }
  return false;
}

LatticeSpec LatticeSpec::chain(std::size_t k) {
  LatticeSpec spec;
  spec.leq = Relation(k);
  for (Elem i = 0; i < k; ++i) {
    spec.names.push_back(std::to_string(i));
    for (Elem j = i; j < k; ++j) spec.leq.set(i, j);
  }
  return spec;
}

LatticeSpec LatticeSpec::diamond() {
  LatticeSpec spec;
  spec.names = {"bot", "a", "b", "top"};
  spec.leq = Relation::identity(4);
  for (Elem x = 0; x < 4; ++x) {
    spec.leq.set(0, x);
    spec.leq.set(x, 3);
  }
  return spec;
}

FiniteModel lattice_as_model(const LatticeSpec& lattice, Stratum kappa) {
  lattice_tables(lattice.leq, "lattice");
  std::vector<Relation> sq;
  sq.push_back(lattice.leq);
  for (Stratum alpha = 1; alpha < kappa; ++alpha) sq.push_back(Relation::identity(lattice.names.size()));
  return FiniteModel::create(lattice.names, kappa, lattice.leq, std::move(sq));
}

FiniteModel two_order_model(const std::vector<std::string>& names, const Relation& leq,
                            const Relation& sq0, Stratum kappa) {
  const auto n = names.size();
  const auto le = lattice_tables(leq, "<= order");
  const auto sqt = lattice_tables(sq0, "stratum-0 order");

  // Condition 2 on pairs.
  std::optional<std::pair<Elem, Elem>> bad_pair;
  for (Elem x = 0; x < n && !bad_pair; ++x) {
    for (Elem y = 0; y < n && !bad_pair; ++y) {
      if (sq0(x, y) && !leq(x, y)) bad_pair = {x, y};
    }
  }
  if (bad_pair) {
    std::vector<int> failed{2};
    if (n <= 16) {
      // Conditions 1 and 3 quantify over subsets.
      bool c1 = true, c3 = true;
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        Elem sup_le = le.bottom, sup_sq = sqt.bottom;
        for (Elem i = 0; i < n; ++i) {
          if (mask & (1U << i)) {
            sup_le = le.join[sup_le * n + i];
            sup_sq = sqt.join[sup_sq * n + i];
          }
        }
        if (!leq(sup_le, sup_sq)) c3 = false;
        for (Elem y = 0; y < n; ++y) {
          if (sq0(sup_sq, y) && !leq(sup_sq, y)) c1 = false;
        }
      }
      if (!c1) failed.insert(failed.begin(), 1);
      if (!c3) failed.push_back(3);
    }
    std::string msg = "stratum-0 order is not contained in <=: " + names[bad_pair->first] +
                      " sqsubseteq_0 " + names[bad_pair->second];
    throw ConditionViolated(msg, failed, bad_pair->first, bad_pair->second);
  }

  std::vector<Relation> sq{sq0};
  for (Stratum alpha = 1; alpha < kappa; ++alpha) sq.push_back(Relation::identity(n));
  return FiniteModel::create(names, kappa, leq, std::move(sq));
}

std::vector<TruthValue> truncated_v_values(Level n) {
  std::vector<TruthValue> out;
  for (Level l = 0; l <= n; ++l) out.push_back(TruthValue::f(l));
  out.push_back(TruthValue::zero());
  for (Level l = n + 1; l-- > 0;) out.push_back(TruthValue::t(l));
  return out;
}

FiniteModel truncated_v_model(Level n, const std::vector<std::string>& atoms) {
  if (atoms.empty()) throw std::invalid_argument("truncated V needs at least one atom");
  const auto values = truncated_v_values(n);
  const std::size_t k = values.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    total *= k;
    if (total > 4096) throw TooLarge("truncated V carrier exceeds 4096 elements");
  }

  // Mixed radix, first atom most significant.
  auto digits = [&](Elem e) {
    std::vector<std::size_t> d(atoms.size());
    for (std::size_t i = atoms.size(); i-- > 0;) {
      d[i] = e % k;
      e /= static_cast<Elem>(k);
    }
    return d;
  };

  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> decoded;
  for (Elem e = 0; e < total; ++e) {
    decoded.push_back(digits(e));
    std::string name;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (i != 0) name += ",";
      name += to_string(values[decoded.back()[i]]);
    }
    names.push_back(std::move(name));
  }

  Relation leq(total);
  std::vector<Relation> sq(n + 1, Relation(total));
  for (Elem a = 0; a < total; ++a) {
    for (Elem b = 0; b < total; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < atoms.size(); ++i) le = le && values[decoded[a][i]] <= values[decoded[b][i]];
      leq.set(a, b, le);
      for (Stratum alpha = 0; alpha <= n; ++alpha) {
        bool below = true;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
          below = below && below_at(values[decoded[a][i]], values[decoded[b][i]], alpha);
        }
        sq[alpha].set(a, b, below);
      }
    }
  }
  return FiniteModel::create(std::move(names), n + 1, std::move(leq), std::move(sq));
}

FiniteModel example26_model() {
  std::vector<std::string> names{"00", "01", "10", "11"};
  auto bit = [](Elem e, int i) { return i == 1 ? (e >> 1) & 1U : e & 1U; };
  Relation leq(4), sq0(4), sq1(4);
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) {
      leq.set(x, y, bit(x, 1) <= bit(y, 1) && bit(x, 2) <= bit(y, 2));
      sq0.set(x, y, bit(x, 1) == bit(y, 1) || bit(x, 1) <= bit(y, 1));
      const bool low = bit(x, 1) == 0 && bit(y, 1) == 0 && bit(x, 2) <= bit(y, 2);
      const bool high = bit(x, 1) == 1 && bit(y, 1) == 1 && bit(x, 2) >= bit(y, 2);
      sq1.set(x, y, low || high);
    }
  }
  return FiniteModel::create(std::move(names), 2, std::move(leq), {std::move(sq0), std::move(sq1)});
}

FiniteModel product(const FiniteModel& m1, const FiniteModel& m2) {
  if (m1.kappa() != m2.kappa()) throw KappaMismatch();
  const auto n1 = m1.size(), n2 = m2.size();
  if (n1 * n2 > 4096) throw TooLarge("product carrier exceeds 4096 elements");
  const auto n = n1 * n2;
  std::vector<std::string> names;
  for (Elem a = 0; a < n1; ++a) {
    for (Elem b = 0; b < n2; ++b) names.push_back("(" + m1.name(a) + "," + m2.name(b) + ")");
  }
  Relation leq(n);
  std::vector<Relation> sq(m1.kappa(), Relation(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem x1 = x / n2, x2 = x % n2, y1 = y / n2, y2 = y % n2;
      leq.set(x, y, m1.leq(x1, y1) && m2.leq(x2, y2));
      for (Stratum alpha = 0; alpha < m1.kappa(); ++alpha) {
        sq[alpha].set(x, y, m1.sq(alpha, x1, y1) && m2.sq(alpha, x2, y2));
      }
    }
  }
  return FiniteModel::create(std::move(names), m1.kappa(), std::move(leq), std::move(sq));
}

FiniteModel power(const FiniteModel& m, std::size_t n) {
  if (n == 0) throw std::invalid_argument("power needs a positive exponent");
  FiniteModel acc = m;
  for (std::size_t i = 1; i < n; ++i) acc = product(m, acc);
  return acc;
}

nlohmann::json to_json(const FiniteModel& m) {
  auto pairs = [&](const Relation& r) {
    nlohmann::json out = nlohmann::json::array();
    for (Elem a = 0; a < m.size(); ++a) {
      r.row(a).for_each([&](Elem b) { out.push_back({m.name(a), m.name(b)}); });
    }
    return out;
  };
  nlohmann::json sq = nlohmann::json::array();
  for (Stratum alpha = 0; alpha < m.kappa(); ++alpha) sq.push_back(pairs(m.sq_relation(alpha)));
  return {{"carrier", m.names()}, {"kappa", m.kappa()}, {"leq", pairs(m.leq_relation())}, {"sq", sq}};
}

FiniteModel model_from_json(const nlohmann::json& j) {
  auto names = j.at("carrier").get<std::vector<std::string>>();
  const auto kappa = j.at("kappa").get<Stratum>();
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < names.size(); ++i) index.emplace(names[i], i);
  auto relation = [&](const nlohmann::json& pairs) {
    Relation r(names.size());
    for (const auto& p : pairs) {
      const auto a = p.at(0).get<std::string>(), b = p.at(1).get<std::string>();
      if (!index.contains(a) || !index.contains(b)) {
        throw InvalidModel("relation mentions unknown element");
      }
      r.set(index.at(a), index.at(b));
    }
    return r;
  };
  std::vector<Relation> sq;
  for (const auto& layer : j.at("sq")) sq.push_back(relation(layer));
  return FiniteModel::create(std::move(names), kappa, relation(j.at("leq")), std::move(sq));
}

}  // namespace strata
