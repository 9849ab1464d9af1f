// Acceptance gate: one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals --known-failures
// (empty by default), so a known failure that starts passing also breaks it.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "strata/axioms.hpp"
#include "strata/corpus.hpp"
#include "strata/fixpoint.hpp"
#include "strata/identities.hpp"
#include "strata/model_catalog.hpp"
#include "strata/program.hpp"
#include "strata/suites.hpp"

using namespace strata;

namespace {

using Clock = std::chrono::steady_clock;

// Pinned limits, seconds.
constexpr double kExampleLimit = 1.0;
constexpr double kCorpusLimit = 60.0;
constexpr double kRandomSuiteLimit = 300.0;

constexpr std::size_t kCorpusSize = 500;
constexpr std::size_t kRandomCases = 1000;
constexpr std::size_t kFunctorialCases = 200;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v, int digits = 2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

ModelPtr share(FiniteModel m) { return std::make_shared<const FiniteModel>(std::move(m)); }

Outcome worked_example() {
  const auto start = Clock::now();
  const auto solution = solve(parse_program("p :- not q.\nq :- not r.\ns :- p.\ns :- not s.\nt.\n"));
  const double t = seconds_since(start);
  const Interpretation expected({{"p", TruthValue::f(2)},
                                 {"q", TruthValue::t(1)},
                                 {"r", TruthValue::f(0)},
                                 {"s", TruthValue::zero()},
                                 {"t", TruthValue::t(0)}});
  const bool exact = solution.model == expected;
  return {exact && t < kExampleLimit,
          to_string(solution.model) + " in " + fixed(t, 4) + "s (limit " + fixed(kExampleLimit, 0) + "s)"};
}

struct CorpusRun {
  CorpusReport report;
  double seconds = 0;
};

CorpusRun corpus_run(Execution mode) {
  const auto start = Clock::now();
  CorpusRun r{run_corpus(kDefaultSeed, kCorpusSize, {}, mode), 0};
  r.seconds = seconds_since(start);
  return r;
}

Outcome fixed_point_soundness(const CorpusRun& run) {
  const auto bad = run.report.fixed_point_failures() + run.report.errors();
  return {bad == 0 && run.seconds < kCorpusLimit,
          std::to_string(run.report.cases.size() - bad) + "/" + std::to_string(run.report.cases.size()) +
              " programs are fixed points in " + fixed(run.seconds) + "s (limit " + fixed(kCorpusLimit, 0) + "s)"};
}

Outcome oracle_agreement(const CorpusRun& run) {
  const auto bad = run.report.oracle_mismatches() + run.report.errors();
  return {bad == 0, std::to_string(run.report.cases.size() - bad) + "/" + std::to_string(run.report.cases.size()) +
                        " agree with the alternating fixpoint"};
}

Outcome axiom_suite(Execution mode) {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  auto check = [&](const FiniteModel& m, std::span<const Axiom> which, const std::string& label) {
    ++checked;
    const auto report = check_axioms(m, which, mode);
    for (const auto& s : report.results) {
      if (!s.holds) failures.push_back(label + ":" + std::string(axiom_name(s.axiom)));
    }
  };
  for (Level n = 0; n <= 2; ++n) {
    check(truncated_v_model(n, {"a"}), kAllAxioms, "V" + std::to_string(n) + "^1");
    check(truncated_v_model(n, {"a", "b"}), kAllAxioms, "V" + std::to_string(n) + "^2");
  }
  std::size_t lattice_id = 0;
  for (const auto& lattice : lattices_up_to(5)) {
    for (Stratum kappa = 1; kappa <= 3; ++kappa) {
      check(lattice_as_model(lattice, kappa), kAllAxioms,
            "lattice" + std::to_string(lattice_id) + "/k" + std::to_string(kappa));
    }
    ++lattice_id;
  }
  // Stated as a model only: Ax1-Ax4 apply.
  const auto ex = example26_model();
  check(ex, kModelAxioms, "example26");
  const auto sq_max = global_maximum(ex);
  const bool maxima = sq_max && ex.name(*sq_max) == "10" && ex.name(leq_maximum(ex)) == "11";

  std::string detail = std::to_string(checked) + " models checked";
  if (!failures.empty()) {
    detail += ", failing";
    for (const auto& f : failures) detail += " " + f;
  }
  detail += "; example26 sq-max " + (sq_max ? ex.name(*sq_max) : std::string("none")) + ", leq-max " +
            ex.name(leq_maximum(ex));
  return {failures.empty() && maxima, detail};
}

std::string tally_text(const SuiteReport& r) {
  std::string out;
  for (const auto& id : suite_identities(r.config.suite)) {
    const auto& t = r.tallies.at(id);
    if (!out.empty()) out += ", ";
    out += id + " " + std::to_string(t.passed) + "/" + std::to_string(t.total());
  }
  return out;
}

SuiteReport exhaustive(Suite s, Execution mode) {
  SuiteConfig c;
  c.suite = s;
  c.exhaustive = true;
  return run_suite(c, mode);
}

SuiteReport randomized(Suite s, std::size_t cases, Execution mode) {
  SuiteConfig c;
  c.suite = s;
  c.cases = cases;
  return run_suite(c, mode);
}

Outcome suites_outcome(const std::vector<SuiteReport>& reports, const std::string& suffix = {}) {
  bool ok = true;
  std::string detail;
  for (const auto& r : reports) {
    ok = ok && r.ok();
    for (const auto& [id, t] : r.tallies) ok = ok && t.passed > 0;
    if (!detail.empty()) detail += "; ";
    detail += tally_text(r);
  }
  return {ok, detail + suffix};
}

Outcome conway_exhaustive(Execution mode) {
  return suites_outcome({exhaustive(Suite::Conway, mode), exhaustive(Suite::Bekic, mode)});
}

Outcome conway_randomized(Execution mode) {
  const auto start = Clock::now();
  auto outcome = suites_outcome({randomized(Suite::Conway, kRandomCases, mode),
                                 randomized(Suite::Bekic, kRandomCases, mode)});
  const double t = seconds_since(start);
  outcome.pass = outcome.pass && t < kRandomSuiteLimit;
  outcome.detail += " in " + fixed(t) + "s (limit " + fixed(kRandomSuiteLimit, 0) + "s)";
  return outcome;
}

Outcome weak_functorial(Execution mode) {
  const auto r = randomized(Suite::Functorial, kFunctorialCases, mode);
  const auto& t = r.tallies.at("weak_functorial");
  return {t.failed == 0 && t.passed > 0, std::to_string(t.passed) + "/" + std::to_string(t.passed + t.failed) +
                                             " non-vacuous squares hold, " + std::to_string(t.vacuous) +
                                             " vacuous"};
}

Outcome abstraction_induction(Execution mode) {
  return suites_outcome({exhaustive(Suite::Abstraction, mode), exhaustive(Suite::Induction, mode)});
}

// Every model of at most 4 elements, f: L -> L through the fixpoint engine and
// f: L x C -> L through the dagger, one parameter at a time.
Outcome least_prefix(Execution mode) {
  const auto models = models_up_to(4, 3);
  struct Count {
    std::size_t functions = 0;
    std::size_t failures = 0;
  };
  const auto counts = map_indexed<Count>(models.size(), mode, [&](std::size_t i) {
    Count c;
    const auto& m = models[i];
    const auto ptr = share(m);
    const ProductView l({ptr});
    OuterOptions options;
    options.strata = m.kappa();
    for_each_monotonic_fn(l, l, [&](const StratifiedFn& f) {
      ++c.functions;
      const auto r = stratified_fix(l, f, options);
      if (!least_prefix_check(m, f, r.value)) ++c.failures;
      return true;
    });
    const ProductView chain({share(lattice_as_model(LatticeSpec::chain(2), m.kappa()))});
    const auto np = static_cast<Elem>(chain.size());
    for_each_monotonic_fn(l * chain, l, [&](const StratifiedFn& f) {
      ++c.functions;
      const auto d = dagger(f);
      for (Elem p = 0; p < np; ++p) {
        const auto at = [&](Elem x) { return f(x * np + p); };
        if (!least_prefix_check(m, at, d(p))) {
          ++c.failures;
          break;
        }
      }
      return true;
    });
    return c;
  });
  Count total;
  for (const auto& c : counts) {
    total.functions += c.functions;
    total.failures += c.failures;
  }
  return {total.failures == 0, std::to_string(total.functions - total.failures) + "/" +
                                   std::to_string(total.functions) + " functions on " +
                                   std::to_string(models.size()) + " models"};
}

// All lattices of at most 5 elements, kappa 1..3, with and without a 2-chain
// parameter.
Outcome classical_degeneration(Execution mode) {
  struct Job {
    LatticeSpec lattice;
    Stratum kappa;
  };
  std::vector<Job> jobs;
  for (const auto& lattice : lattices_up_to(5)) {
    for (Stratum kappa = 1; kappa <= 3; ++kappa) jobs.push_back({lattice, kappa});
  }
  using Count = std::pair<std::size_t, std::size_t>;
  const auto counts = map_indexed<Count>(jobs.size(), mode, [&](std::size_t i) {
    Count c{0, 0};
    const ProductView l({share(lattice_as_model(jobs[i].lattice, jobs[i].kappa))});
    const ProductView one({}, jobs[i].kappa);
    const ProductView chain({share(lattice_as_model(LatticeSpec::chain(2), jobs[i].kappa))});
    for (const auto& p : {one, chain}) {
      for_each_monotonic_fn(l * p, l, [&](const StratifiedFn& f) {
        ++c.first;
        if (dagger(f).graph != kleene_lfp(f).graph) ++c.second;
        return true;
      });
    }
    return c;
  });
  std::size_t functions = 0, failures = 0;
  for (const auto& [n, bad] : counts) {
    functions += n;
    failures += bad;
  }
  return {failures == 0, std::to_string(functions - failures) + "/" + std::to_string(functions) +
                             " functions over " + std::to_string(jobs.size()) + " lattice/kappa pairs"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Runs the acceptance criteria."};
  std::vector<int> known;
  bool serial = false;
  std::vector<int> only;
  app.add_option("--known-failures", known, "criteria expected to fail")->delimiter(',');
  app.add_option("--only", only, "run only these criteria")->delimiter(',')->check(CLI::Range(1, 10));
  app.add_flag("--serial", serial, "use the serial kernels");
  CLI11_PARSE(app, argc, argv);
  const auto mode = serial ? Execution::Serial : Execution::Parallel;

  std::optional<CorpusRun> corpus;
  auto corpus_once = [&]() -> const CorpusRun& {
    if (!corpus) corpus = corpus_run(mode);
    return *corpus;
  };

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked example", worked_example},
      {"fixed-point soundness", [&] { return fixed_point_soundness(corpus_once()); }},
      {"oracle agreement", [&] { return oracle_agreement(corpus_once()); }},
      {"axiom suite", [&] { return axiom_suite(mode); }},
      {"conway exhaustive", [&] { return conway_exhaustive(mode); }},
      {"conway randomized", [&] { return conway_randomized(mode); }},
      {"weak functorial", [&] { return weak_functorial(mode); }},
      {"abstraction and induction", [&] { return abstraction_induction(mode); }},
      {"least pre-fixed point", [&] { return least_prefix(mode); }},
      {"classical degeneration", [&] { return classical_degeneration(mode); }},
  };

  std::set<int> failing;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failing.insert(id);
    std::printf("criterion %2d %s  %s: %s [%ss]\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), fixed(seconds_since(start)).c_str());
    std::fflush(stdout);
  }

  std::set<int> expected;
  for (int k : known) {
    if (only.empty() || std::find(only.begin(), only.end(), k) != only.end()) expected.insert(k);
  }
  if (failing == expected) {
    std::printf("acceptance: %zu failing, as expected\n", failing.size());
    return 0;
  }
  std::ostringstream msg;
  msg << "acceptance: failing {";
  for (int k : failing) msg << ' ' << k;
  msg << " } but expected {";
  for (int k : expected) msg << ' ' << k;
  msg << " }";
  std::printf("%s\n", msg.str().c_str());
  return 1;
}
