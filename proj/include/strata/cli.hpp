#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/axioms.hpp"
#include "strata/program.hpp"
#include "strata/suites.hpp"

namespace strata::cli {

inline constexpr int kExitOk = 0;
/// A check ran and found axiom violations or identity counterexamples.
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitSyntax = 2;
inline constexpr int kExitNotConverged = 3;
inline constexpr int kExitConsistency = 4;
inline constexpr int kExitBadData = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitUsage = 64;

class UsageError : public std::invalid_argument {
 public:
  UsageError(const std::string& message, std::string usage)
      : std::invalid_argument(message), usage_(std::move(usage)) {}
  const std::string& usage() const { return usage_; }

 private:
  std::string usage_;
};

enum class Verb { Solve, Wfs, CheckAxioms, CheckIdentities, Trace };
enum class Format { Text, Json };

struct Command {
  Verb verb = Verb::Solve;
  Format format = Format::Text;
  std::uint64_t seed = kDefaultSeed;
  Execution execution = Execution::Parallel;
  /// Set when --help was requested; execute() prints it and exits 0.
  std::string help;

  // solve, wfs, trace
  std::string program_path;
  SolveOptions solve;
  bool verify = false;
  bool trace = false;
  std::string replay_dir = "replay";

  // check-axioms: a .json fixture or example26, chain2, diamond, truncated-v:N:Z
  std::string model = "example26";
  std::vector<Axiom> axioms = {Axiom::Ax1, Axiom::Ax2, Axiom::Ax3, Axiom::Ax4};

  // check-identities
  SuiteConfig suite;
  std::string config_path;
  std::optional<std::uint64_t> case_seed;
  std::string identity;
};

/// args excludes the program name. Throws UsageError.
Command parse_args(const std::vector<std::string>& args);

/// Runs a command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
int execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + execute with usage errors mapped to exit 64.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builtin model name or path to a model JSON fixture. Throws
/// std::invalid_argument, std::runtime_error for unreadable files.
FiniteModel load_model(const std::string& spec);

}  // namespace strata::cli
