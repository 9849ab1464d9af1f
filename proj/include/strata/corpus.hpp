#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "strata/parallel.hpp"
#include "strata/program.hpp"

namespace strata {

/// Outcome of solving one random program and cross-checking it.
struct CorpusCase {
  std::uint64_t seed = 0;
  bool fixed_point = false;
  bool oracle_agrees = false;
  Stratum strata_used = 0;
  /// Exception text when solving failed.
  std::string error;

  bool ok() const { return error.empty() && fixed_point && oracle_agrees; }
};

struct CorpusReport {
  std::vector<CorpusCase> cases;

  std::size_t fixed_point_failures() const;
  std::size_t oracle_mismatches() const;
  std::size_t errors() const;
  bool ok() const { return fixed_point_failures() == 0 && oracle_mismatches() == 0 && errors() == 0; }
};

CorpusCase run_corpus_case(std::uint64_t program_seed, const RandomProgramOptions& options = {});

/// Program i uses seed case_seed(seed, i).
CorpusReport run_corpus(std::uint64_t seed, std::size_t count, const RandomProgramOptions& options = {},
                        Execution mode = Execution::Parallel);

nlohmann::json to_json(const CorpusCase& c);

}  // namespace strata
