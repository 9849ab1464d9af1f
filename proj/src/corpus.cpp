#include "strata/corpus.hpp"

#include <algorithm>

#include "strata/seeding.hpp"

namespace strata {

std::size_t CorpusReport::fixed_point_failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CorpusCase& c) { return c.error.empty() && !c.fixed_point; }));
}

std::size_t CorpusReport::oracle_mismatches() const {
  return static_cast<std::size_t>(std::count_if(
      cases.begin(), cases.end(), [](const CorpusCase& c) { return c.error.empty() && !c.oracle_agrees; }));
}

std::size_t CorpusReport::errors() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CorpusCase& c) { return !c.error.empty(); }));
}

CorpusCase run_corpus_case(std::uint64_t program_seed, const RandomProgramOptions& options) {
  CorpusCase c;
  c.seed = program_seed;
  const Program p = random_program(program_seed, options);
  try {
    const Solution s = solve(p);
    c.fixed_point = immediate_consequence(p, s.model) == s.model;
    c.oracle_agrees = collapse_wfs(s.model) == wfs_oracle(p);
    c.strata_used = s.strata_used;
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

CorpusReport run_corpus(std::uint64_t seed, std::size_t count, const RandomProgramOptions& options, Execution mode) {
  return {map_indexed<CorpusCase>(count, mode,
                                  [&](std::size_t i) { return run_corpus_case(case_seed(seed, i), options); })};
}

nlohmann::json to_json(const CorpusCase& c) {
  nlohmann::json j{{"seed", c.seed},
                   {"fixed_point", c.fixed_point},
                   {"oracle_agrees", c.oracle_agrees},
                   {"strata_used", c.strata_used}};
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

}  // namespace strata
