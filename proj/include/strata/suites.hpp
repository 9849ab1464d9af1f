#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "strata/identities.hpp"
#include "strata/parallel.hpp"
#include "strata/seeding.hpp"

namespace strata {

enum class Suite { Conway, Bekic, Functorial, Abstraction, Induction };

std::string_view suite_name(Suite s);
/// Throws std::invalid_argument.
Suite parse_suite(std::string_view name);
/// Identity names checked by a suite, in report order.
const std::vector<std::string>& suite_identities(Suite s);

/// Truncated V_n on `atoms` atoms, used by the randomized suites.
struct VShape {
  Level n = 1;
  std::size_t atoms = 1;

  friend bool operator==(const VShape&, const VShape&) = default;
};
/// "truncated-v:N:Z"; throws std::invalid_argument.
VShape parse_shape(std::string_view text);
std::string to_string(const VShape& s);

struct SuiteConfig {
  Suite suite = Suite::Conway;
  std::uint64_t seed = kDefaultSeed;
  /// Randomized cases per identity.
  std::size_t cases = 1000;
  /// Enumerate all alpha-monotonic functions instead of sampling terms.
  bool exhaustive = false;
  /// Model pool for randomized runs: n <= 2, |Z| <= 2 by default.
  std::vector<VShape> shapes = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  /// Bounds of the finite-model catalogue for exhaustive runs.
  std::size_t max_model_size = 4;
  Stratum max_kappa = 3;
};

/// {"suite", "cases", "seed", "exhaustive", "models": ["truncated-v:2:1", ...]};
/// absent keys keep their defaults. Throws std::invalid_argument.
SuiteConfig suite_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SuiteConfig& c);

struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t vacuous = 0;

  void add(CheckStatus s);
  void merge(const Tally& other);
  std::size_t total() const { return passed + failed + vacuous; }
};

struct SuiteReport {
  SuiteConfig config;
  std::map<std::string, Tally> tallies;
  /// Randomized runs keep every case, ordered by identity then case id.
  /// Exhaustive runs keep failures only.
  std::vector<CheckResult> results;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

nlohmann::json summary_json(const SuiteReport& r);

/// Runs a suite. Cases are independent and merged by case id, so both
/// execution modes give identical reports.
SuiteReport run_suite(const SuiteConfig& config, Execution mode = Execution::Parallel);

/// Per-case seed of case `case_id` of an identity in a suite run.
std::uint64_t random_case_seed(std::uint64_t suite_seed, std::size_t identity_index, std::uint64_t case_id);

/// One randomized case, rebuilt from its case seed alone.
CheckResult run_random_case(std::string_view identity, std::uint64_t case_seed, const std::vector<VShape>& shapes);

}  // namespace strata
