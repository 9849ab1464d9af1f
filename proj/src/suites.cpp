#include "strata/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <stdexcept>

#include "strata/model_catalog.hpp"
#include "strata/term_gen.hpp"

namespace strata {

namespace {

constexpr std::array<Suite, 5> kSuites = {Suite::Conway, Suite::Bekic, Suite::Functorial, Suite::Abstraction,
                                          Suite::Induction};

}  // namespace

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Conway: return "conway";
    case Suite::Bekic: return "bekic";
    case Suite::Functorial: return "functorial";
    case Suite::Abstraction: return "abstraction";
    case Suite::Induction: break;
  }
  return "induction";
}

Suite parse_suite(std::string_view name) {
  for (auto s : kSuites) {
    if (suite_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

const std::vector<std::string>& suite_identities(Suite s) {
  static const std::vector<std::string> conway = {"fixed_point", "parameter", "composition", "double_dagger"};
  static const std::vector<std::string> bekic = {"bekic"};
  static const std::vector<std::string> functorial = {"weak_functorial"};
  static const std::vector<std::string> abstraction = {"abstraction"};
  static const std::vector<std::string> induction = {"fp_induction"};
  switch (s) {
    case Suite::Conway: return conway;
    case Suite::Bekic: return bekic;
    case Suite::Functorial: return functorial;
    case Suite::Abstraction: return abstraction;
    case Suite::Induction: break;
  }
  return induction;
}

VShape parse_shape(std::string_view text) {
  constexpr std::string_view prefix = "truncated-v:";
  auto bad = [&] { return std::invalid_argument("expected truncated-v:N:Z, got '" + std::string(text) + "'"); };
  if (text.substr(0, prefix.size()) != prefix) throw bad();
  const std::string rest(text.substr(prefix.size()));
  const auto colon = rest.find(':');
  if (colon == std::string::npos) throw bad();
  VShape s;
  try {
    std::size_t used = 0;
    s.n = static_cast<Level>(std::stoul(rest.substr(0, colon), &used));
    if (used != colon) throw bad();
    const auto tail = rest.substr(colon + 1);
    s.atoms = std::stoul(tail, &used);
    if (used != tail.size()) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (s.n > 2 || s.atoms == 0 || s.atoms > 2) throw std::invalid_argument("randomized suites use n <= 2, 1 <= |Z| <= 2");
  return s;
}

std::string to_string(const VShape& s) {
  return "truncated-v:" + std::to_string(s.n) + ":" + std::to_string(s.atoms);
}

SuiteConfig suite_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("suite config must be a JSON object");
  SuiteConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "suite") {
        c.suite = parse_suite(value.get<std::string>());
      } else if (key == "cases") {
        c.cases = value.get<std::size_t>();
      } else if (key == "seed") {
        c.seed = value.get<std::uint64_t>();
      } else if (key == "exhaustive") {
        c.exhaustive = value.get<bool>();
      } else if (key == "models") {
        c.shapes.clear();
        for (const auto& m : value) c.shapes.push_back(parse_shape(m.get<std::string>()));
      } else {
        throw std::invalid_argument("unknown suite config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad suite config: ") + e.what());
  }
  if (c.shapes.empty()) throw std::invalid_argument("suite config lists no models");
  return c;
}

nlohmann::json to_json(const SuiteConfig& c) {
  nlohmann::json models = nlohmann::json::array();
  for (const auto& s : c.shapes) models.push_back(to_string(s));
  nlohmann::json j{{"suite", suite_name(c.suite)}, {"seed", c.seed}, {"exhaustive", c.exhaustive}};
  if (c.exhaustive) {
    j["max_model_size"] = c.max_model_size;
    j["max_kappa"] = c.max_kappa;
  } else {
    j["cases"] = c.cases;
    j["models"] = models;
  }
  return j;
}

void Tally::add(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: ++passed; break;
    case CheckStatus::Fail: ++failed; break;
    case CheckStatus::Vacuous: ++vacuous; break;
  }
}

void Tally::merge(const Tally& other) {
  passed += other.passed;
  failed += other.failed;
  vacuous += other.vacuous;
}

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& [name, t] : tallies) n += t.failed;
  return n;
}

nlohmann::json summary_json(const SuiteReport& r) {
  nlohmann::json identities = nlohmann::json::object();
  for (const auto& [name, t] : r.tallies) {
    identities[name] = {{"pass", t.passed}, {"fail", t.failed}, {"vacuous", t.vacuous}};
  }
  return {{"summary", identities}, {"failures", r.failures()}};
}

std::uint64_t random_case_seed(std::uint64_t suite_seed, std::size_t identity_index, std::uint64_t case_id) {
  return case_seed(suite_seed, (static_cast<std::uint64_t>(identity_index) << 32) ^ case_id);
}

namespace {

ModelPtr v_factor(Level n) {
  static const std::array<ModelPtr, 3> models = [] {
    std::array<ModelPtr, 3> out;
    for (Level k = 0; k < 3; ++k) out[k] = std::make_shared<const FiniteModel>(truncated_v_model(k, {"v"}));
    return out;
  }();
  if (n >= models.size()) throw std::invalid_argument("truncated V level out of range");
  return models[n];
}

// Rebuilds the functions of a randomized case from its seed. Multi-atom
// interpretations are products of one-atom factors, which have the same
// pointwise orders as V_n^Z.
class RandomCase {
 public:
  RandomCase(std::uint64_t seed, const std::vector<VShape>& shapes) : rng_(seed) {
    if (shapes.empty()) throw std::invalid_argument("no model shapes");
    shape_ = shapes[pick(shapes.size())];
  }

  std::size_t pick(std::size_t k) { return static_cast<std::size_t>(rng_() % k); }
  const VShape& shape() const { return shape_; }

  ProductView power(std::size_t k) const {
    return ProductView(std::vector<ModelPtr>(k, v_factor(shape_.n)), static_cast<Stratum>(shape_.n + 1));
  }
  ProductView space() const { return power(shape_.atoms); }

  TermFn terms(std::size_t inputs, std::size_t outputs) {
    return gen_term_fn(rng_(), TermSignature{inputs, outputs, shape_.n, 3});
  }
  StratifiedFn fn(const ProductView& dom, const ProductView& cod) {
    return table(terms(dom.arity(), cod.arity()), dom, cod);
  }
  StratifiedFn table(const TermFn& t, const ProductView& dom, const ProductView& cod) const {
    return tabulate(t, dom, cod, shape_.n, 1);
  }

 private:
  std::mt19937_64 rng_;
  VShape shape_;
};

Term substitute(const Term& t, const std::function<Term(std::size_t)>& var) {
  if (t.op == Term::Op::Var) return var(t.var);
  Term out = t;
  for (auto& a : out.args) a = substitute(a, var);
  return out;
}

// f: L^n x P -> L^n with coordinate i = g(combine_i(x), p), where combine_i
// reads one coordinate (copy, permutation) or joins/meets several. All
// agree with g on the diagonal, so the premise holds by construction.
CheckResult functorial_case(RandomCase& rc) {
  const std::size_t k = rc.shape().atoms;
  const std::size_t n = k == 1 ? 2 + rc.pick(2) : 2;
  const ProductView l = rc.space();
  const ProductView p = rc.power(rc.pick(2));
  const TermFn g = rc.terms(k + p.arity(), k);

  const std::size_t kind = rc.pick(3);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  if (kind == 1) {
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rc.pick(i)]);
  }
  std::vector<std::vector<std::size_t>> sources(n);
  std::vector<bool> use_join(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    if (kind < 2) {
      sources[i] = {order[i]};
      continue;
    }
    for (std::size_t m = 0; m < n; ++m) {
      if (rc.pick(2) == 0) sources[i].push_back(m);
    }
    if (sources[i].empty()) sources[i].push_back(rc.pick(n));
    use_join[i] = rc.pick(2) == 0;
  }

  TermFn f{TermSignature{n * k + p.arity(), n * k, rc.shape().n, 3}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    auto var = [&](std::size_t v) {
      if (v >= k) return Term::variable(n * k + (v - k));
      Term acc = Term::variable(sources[i][0] * k + v);
      for (std::size_t s = 1; s < sources[i].size(); ++s) {
        Term next = Term::variable(sources[i][s] * k + v);
        acc = use_join[i] ? Term::join(std::move(acc), std::move(next)) : Term::meet(std::move(acc), std::move(next));
      }
      return acc;
    };
    for (const auto& t : g.outputs) f.outputs.push_back(substitute(t, var));
  }

  const ProductView ln = rc.power(n * k);
  static constexpr std::array<const char*, 3> kinds = {"copy", "permutation", "lattice"};
  auto r = check_weak_functorial(rc.table(f, ln * p, ln), rc.table(g, l * p, l), n);
  r.detail = (r.detail.empty() ? "" : r.detail + "; ") + kinds[kind] + " square, n=" + std::to_string(n);
  return r;
}

// Function spaces of term functions over V_1 x V_1 exceed the exponential
// guard, so sampled cases draw from the two enumerable configurations:
// L = 2-chain or truncated V_1 on one atom, P = 2-chain, two strata.
const std::vector<StratifiedFn>& function_space_fns(std::size_t which) {
  static const std::array<std::vector<StratifiedFn>, 2> fns = [] {
    const auto chain = std::make_shared<const FiniteModel>(lattice_as_model(LatticeSpec::chain(2), 2));
    std::array<std::vector<StratifiedFn>, 2> out;
    for (std::size_t i = 0; i < 2; ++i) {
      const ProductView l({i == 0 ? chain : v_factor(1)}), p({chain});
      out[i] = enumerate_monotonic_fns(l * p, l);
    }
    return out;
  }();
  return fns[which];
}

CheckResult abstraction_case(RandomCase& rc, bool induction) {
  const std::size_t which = rc.pick(2);
  const auto& fns = function_space_fns(which);
  const StratifiedFn& f = fns[rc.pick(fns.size())];
  auto r = induction ? check_fp_induction(f) : check_abstraction(f);
  r.detail = which == 0 ? "L=2-chain" : "L=truncated-v:1:1";
  return r;
}

}  // namespace

CheckResult run_random_case(std::string_view identity, std::uint64_t seed, const std::vector<VShape>& shapes) {
  RandomCase rc(seed, shapes);
  const ProductView l = rc.space();
  CheckResult r;
  if (identity == "fixed_point") {
    const ProductView p = rc.power(rc.pick(2));
    r = check_fixed_point(rc.fn(l * p, l));
  } else if (identity == "parameter") {
    const ProductView p = rc.power(1);
    const ProductView q = rc.power(rc.pick(3));
    const StratifiedFn f = rc.fn(l * p, l);
    r = check_parameter(f, rc.fn(q, p));
  } else if (identity == "composition") {
    const ProductView p = rc.power(rc.pick(2));
    const ProductView m = rc.power(1 + rc.pick(2));
    const StratifiedFn f = rc.fn(l * p, m);
    r = check_composition(f, rc.fn(m * p, l));
  } else if (identity == "double_dagger") {
    const ProductView p = rc.power(rc.pick(2));
    r = check_double_dagger(rc.fn(l * l * p, l));
  } else if (identity == "bekic") {
    const ProductView k = rc.power(1 + rc.pick(2));
    const ProductView p = rc.power(rc.pick(2));
    const StratifiedFn f = rc.fn(l * k * p, l);
    r = check_bekic(f, rc.fn(l * k * p, k));
  } else if (identity == "weak_functorial") {
    r = functorial_case(rc);
  } else if (identity == "abstraction" || identity == "fp_induction") {
    r = abstraction_case(rc, identity == "fp_induction");
    r.seed = seed;
    return r;
  } else {
    throw std::invalid_argument("unknown identity '" + std::string(identity) + "'");
  }
  r.seed = seed;
  r.detail = r.detail.empty() ? to_string(rc.shape()) : to_string(rc.shape()) + "; " + r.detail;
  return r;
}

namespace {

std::string graph_string(const StratifiedFn& f) {
  std::string s = "[";
  for (Elem x = 0; x < f.graph.size(); ++x) s += (x != 0 ? "," : "") + f.codomain.name(f(x));
  return s + "]";
}

struct Partial {
  std::map<std::string, Tally> tallies;
  std::vector<CheckResult> failures;

  void record(CheckResult r, const std::string& where) {
    tallies[r.identity].add(r.status);
    if (r.status == CheckStatus::Fail) {
      r.detail = where + (r.detail.empty() ? "" : "; " + r.detail);
      failures.push_back(std::move(r));
    }
  }
};

using Fns = std::vector<StratifiedFn>;

Fns all_fns(const ProductView& dom, const ProductView& cod) { return enumerate_monotonic_fns(dom, cod); }

// Every schema instance over one finite model L, with the 2-chain C and the
// one-point model as the other objects.
Partial exhaustive_model(Suite suite, const FiniteModel& model, std::size_t index) {
  const auto kappa = model.kappa();
  const auto lp = std::make_shared<const FiniteModel>(model);
  const auto cp = std::make_shared<const FiniteModel>(lattice_as_model(LatticeSpec::chain(2), kappa));
  const ProductView l({lp}), c({cp}), one({}, kappa);
  const std::string where = "model " + std::to_string(index);
  Partial out;
  auto record = [&](CheckResult r, const std::string& fns) { out.record(std::move(r), where + " " + fns); };

  if (suite == Suite::Conway) {
    for (const ProductView* p : {&one, &c}) {
      for (const auto& f : all_fns(l * *p, l)) record(check_fixed_point(f), "f=" + graph_string(f));
    }
    const Fns param_fs = all_fns(l * c, l);
    for (const ProductView* q : {&one, &c}) {
      for (const auto& g : all_fns(*q, c)) {
        for (const auto& f : param_fs) {
          record(check_parameter(f, g), "f=" + graph_string(f) + " g=" + graph_string(g));
        }
      }
    }
    const std::array<std::pair<const ProductView*, const ProductView*>, 3> shapes = {
        {{&l, &one}, {&c, &one}, {&c, &c}}};
    for (const auto& [m, p] : shapes) {
      const Fns fs = all_fns(l * *p, *m);
      const Fns gs = all_fns(*m * *p, l);
      for (const auto& f : fs) {
        for (const auto& g : gs) {
          record(check_composition(f, g), "f=" + graph_string(f) + " g=" + graph_string(g));
        }
      }
    }
    for_each_monotonic_fn(l * l, l, [&](const StratifiedFn& f) {
      record(check_double_dagger(f), "f=" + graph_string(f));
      return true;
    });
  } else if (suite == Suite::Bekic) {
    const Fns gs = all_fns(l * c, c);
    for_each_monotonic_fn(l * c, l, [&](const StratifiedFn& f) {
      for (const auto& g : gs) record(check_bekic(f, g), "f=" + graph_string(f) + " g=" + graph_string(g));
      return true;
    });
  } else if (suite == Suite::Functorial) {
    // Copy and swap squares over L x L.
    const auto nl = static_cast<Elem>(l.size());
    for (const ProductView* p : {&one, &c}) {
      const auto np = static_cast<Elem>(p->size());
      for (const auto& g : all_fns(l * *p, l)) {
        for (bool swap : {false, true}) {
          StratifiedFn f{l * l * *p, l * l, std::vector<Elem>(nl * nl * np)};
          for (Elem x1 = 0; x1 < nl; ++x1) {
            for (Elem x2 = 0; x2 < nl; ++x2) {
              for (Elem y = 0; y < np; ++y) {
                const Elem a = g((swap ? x2 : x1) * np + y), b = g((swap ? x1 : x2) * np + y);
                f.graph[(x1 * nl + x2) * np + y] = a * nl + b;
              }
            }
          }
          record(check_weak_functorial(f, g, 2), "g=" + graph_string(g) + (swap ? " swap" : " copy"));
        }
      }
    }
  }
  return out;
}

// The function-space configurations: (2-chain, 2-chain) and
// (truncated V_1 on one atom, 2-chain), both with two strata.
Partial exhaustive_function_space(Suite suite, std::size_t which) {
  const auto chain = std::make_shared<const FiniteModel>(lattice_as_model(LatticeSpec::chain(2), 2));
  const ProductView l({which == 0 ? chain : v_factor(1)}), p({chain});
  Partial out;
  const std::string where = which == 0 ? "L=2-chain, P=2-chain" : "L=truncated-v:1:1, P=2-chain";
  for_each_monotonic_fn(l * p, l, [&](const StratifiedFn& f) {
    out.record(suite == Suite::Abstraction ? check_abstraction(f) : check_fp_induction(f),
               where + " f=" + graph_string(f));
    return true;
  });
  return out;
}

SuiteReport merge(const SuiteConfig& config, std::vector<Partial> parts) {
  SuiteReport report{config, {}, {}};
  for (const auto& id : suite_identities(config.suite)) report.tallies[id];
  for (auto& part : parts) {
    for (const auto& [id, t] : part.tallies) report.tallies[id].merge(t);
    for (auto& r : part.failures) report.results.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < report.results.size(); ++i) report.results[i].case_id = i;
  return report;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config, Execution mode) {
  if (config.exhaustive) {
    if (config.suite == Suite::Abstraction || config.suite == Suite::Induction) {
      return merge(config, map_indexed<Partial>(2, mode, [&](std::size_t i) {
                     return exhaustive_function_space(config.suite, i);
                   }));
    }
    const auto models = models_up_to(config.max_model_size, config.max_kappa);
    return merge(config, map_indexed<Partial>(models.size(), mode, [&](std::size_t i) {
                   return exhaustive_model(config.suite, models[i], i);
                 }));
  }

  const auto& ids = suite_identities(config.suite);
  const std::size_t per = config.cases;
  auto results = map_indexed<CheckResult>(ids.size() * per, mode, [&](std::size_t i) {
    const std::size_t k = i / per, j = i % per;
    auto r = run_random_case(ids[k], random_case_seed(config.seed, k, j), config.shapes);
    r.case_id = j;
    return r;
  });
  SuiteReport report{config, {}, {}};
  for (const auto& id : ids) report.tallies[id];
  for (const auto& r : results) report.tallies[r.identity].add(r.status);
  report.results = std::move(results);
  return report;
}

}  // namespace strata
