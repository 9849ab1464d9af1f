#include "strata/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "strata/finite_model.hpp"

namespace strata::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view verb_name(Verb v) {
  switch (v) {
    case Verb::Solve: return "solve";
    case Verb::Wfs: return "wfs";
    case Verb::CheckAxioms: return "check-axioms";
    case Verb::CheckIdentities: return "check-identities";
    case Verb::Trace: break;
  }
  return "trace";
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Stratified least fixed points, logic programs and identity checks.", "strata"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  Command cmd;
  std::string format = "text";
  bool serial = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--seed", cmd.seed, "Seed for all randomness, echoed in the header")->capture_default_str();
  };
  auto program_options = [&](CLI::App* sub) {
    sub->add_option("program", cmd.program_path, "Program file (.lp)")->required();
    sub->add_option("--stratum-budget", cmd.solve.stratum_budget, "Strata before giving up (0: 4 * atoms + 4)");
    sub->add_option("--plateau", cmd.solve.plateau, "Inner plateau length (0: atoms + 2)");
    sub->add_option("--inner-budget", cmd.solve.inner_budget, "Inner iterations per stratum")->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "Minimum model of a program");
  common(solve);
  program_options(solve);
  solve->add_flag("--verify", cmd.verify, "Cross-check against the alternating-fixpoint oracle");
  solve->add_flag("--trace", cmd.trace, "Include one record per stratum");
  solve->add_option("--replay-dir", cmd.replay_dir, "Where --verify writes mismatch bundles")->capture_default_str();

  auto* wfs = app.add_subcommand("wfs", "Three-valued model, checked against the oracle");
  common(wfs);
  program_options(wfs);
  wfs->add_option("--replay-dir", cmd.replay_dir, "Where mismatch bundles are written")->capture_default_str();

  auto* trace = app.add_subcommand("trace", "Per-stratum records of the solver run");
  common(trace);
  program_options(trace);

  std::string axioms = "Ax1-Ax4";
  auto* check_axioms = app.add_subcommand("check-axioms", "Exhaustive axiom check of a finite model");
  common(check_axioms);
  check_axioms
      ->add_option("--model", cmd.model, "Model JSON file, or example26, chain2, diamond, truncated-v:N:Z")
      ->capture_default_str();
  check_axioms->add_option("--axioms", axioms, "Axiom list, e.g. Ax1-Ax4,Ax7, model, all")->capture_default_str();
  check_axioms->add_flag("--serial", serial, "Use the serial reference checker");

  std::string suite = "conway";
  std::size_t cases = 1000;
  std::uint64_t case_seed = 0;
  auto* identities = app.add_subcommand("check-identities", "Extensional identity suites");
  common(identities);
  auto* suite_opt = identities->add_option("--suite", suite, "conway, bekic, functorial, abstraction, induction")
                        ->check(CLI::IsMember({"conway", "bekic", "functorial", "abstraction", "induction"}))
                        ->capture_default_str();
  auto* cases_opt = identities->add_option("--cases", cases, "Randomized cases per identity")->capture_default_str();
  identities->add_option("--config", cmd.config_path, "Suite config JSON; flags given explicitly override it");
  auto* exhaustive_opt = identities->add_flag("--exhaustive", "Enumerate all functions on small finite models");
  auto* case_opt = identities->add_option("--case-seed", case_seed, "Replay the randomized case with this seed");
  identities->add_option("--identity", cmd.identity, "Identity to replay (default: all of the suite)")
      ->needs(case_opt);
  identities->add_flag("--serial", serial, "Run cases in order on one thread");

  std::vector<const char*> argv{"strata"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream text;
    const int code = app.exit(e, text, text);
    if (code == 0) {
      cmd.help = text.str();
      return cmd;
    }
    throw UsageError(e.what(), app.help());
  }

  auto* used = app.get_subcommands().front();
  const std::string name = used->get_name();
  cmd.verb = name == "solve"          ? Verb::Solve
             : name == "wfs"          ? Verb::Wfs
             : name == "trace"        ? Verb::Trace
             : name == "check-axioms" ? Verb::CheckAxioms
                                      : Verb::CheckIdentities;
  cmd.format = format == "json" ? Format::Json : Format::Text;
  cmd.execution = serial ? Execution::Serial : Execution::Parallel;
  cmd.solve.keep_trace = cmd.trace || cmd.verb == Verb::Trace;

  try {
    if (cmd.verb == Verb::CheckAxioms) cmd.axioms = parse_axiom_list(axioms);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what(), used->help());
  }

  if (cmd.verb == Verb::CheckIdentities) {
    if (!cmd.config_path.empty()) {
      try {
        cmd.suite = suite_config_from_json(nlohmann::json::parse(read_file(cmd.config_path)));
      } catch (const std::exception& e) {
        throw UsageError(e.what(), used->help());
      }
      if (used->count("--seed") == 0) cmd.seed = cmd.suite.seed;
    }
    if (cmd.config_path.empty() || suite_opt->count() != 0) cmd.suite.suite = parse_suite(suite);
    if (cmd.config_path.empty() || cases_opt->count() != 0) cmd.suite.cases = cases;
    if (exhaustive_opt->count() != 0) cmd.suite.exhaustive = true;
    cmd.suite.seed = cmd.seed;
    if (case_opt->count() != 0) {
      if (cmd.suite.exhaustive) throw UsageError("--case-seed replays randomized cases only", used->help());
      cmd.case_seed = case_seed;
      const auto& ids = suite_identities(cmd.suite.suite);
      if (!cmd.identity.empty() && std::find(ids.begin(), ids.end(), cmd.identity) == ids.end()) {
        throw UsageError("identity '" + cmd.identity + "' is not part of suite " +
                             std::string(suite_name(cmd.suite.suite)),
                         used->help());
      }
    }
  }
  return cmd;
}

FiniteModel load_model(const std::string& spec) {
  if (spec == "example26") return example26_model();
  if (spec == "chain2") return lattice_as_model(LatticeSpec::chain(2), 2);
  if (spec == "diamond") return lattice_as_model(LatticeSpec::diamond(), 2);
  if (spec.rfind("truncated-v:", 0) == 0) {
    const VShape shape = parse_shape(spec);
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < shape.atoms; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
    return truncated_v_model(shape.n, atoms);
  }
  const std::string text = read_file(spec);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("'" + spec + "' is not valid JSON: " + e.what());
  }
  return model_from_json(j);
}

namespace {

nlohmann::json program_config(const Command& cmd, const Program& p) {
  const auto n = p.atom_count();
  return {{"verb", verb_name(cmd.verb)},
          {"program", cmd.program_path},
          {"seed", cmd.seed},
          {"stratum_budget", cmd.solve.stratum_budget != 0 ? cmd.solve.stratum_budget : 4 * n + 4},
          {"plateau", cmd.solve.plateau != 0 ? cmd.solve.plateau : n + 2},
          {"inner_budget", cmd.solve.inner_budget},
          {"verify", cmd.verify},
          {"trace", cmd.trace}};
}

void text_header(std::ostream& out, const nlohmann::json& config) {
  out << "#";
  for (const auto& [key, value] : config.items()) {
    out << " " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
  }
  out << "\n";
}

nlohmann::json trace_json(const Solution& s) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : s.trace) {
    records.push_back({{"alpha", r.alpha}, {"x", to_json(r.x)}, {"z", to_json(r.z)}, {"inner_steps", r.inner_steps}});
  }
  return records;
}

std::string bundle_path(const Command& cmd, const std::string& program_text) {
  // FNV-1a of the program text names the bundle.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : program_text) h = (h ^ c) * 0x100000001b3ULL;
  std::ostringstream name;
  name << "mismatch-" << std::hex << h << ".json";
  return (std::filesystem::path(cmd.replay_dir) / name.str()).string();
}

std::string write_bundle(const Command& cmd, const Program& p, const nlohmann::json& solved,
                         const nlohmann::json& oracle) {
  const std::string text = to_string(p);
  std::filesystem::create_directories(cmd.replay_dir);
  const std::string path = bundle_path(cmd, text);
  std::ofstream f(path);
  f << nlohmann::json{{"program", text}, {"source", cmd.program_path}, {"solve", solved}, {"oracle", oracle}}.dump(2)
    << "\n";
  if (!f) throw InputError("cannot write replay bundle '" + path + "'");
  return path;
}

int run_program_verb(const Command& cmd, std::ostream& out, std::ostream& err) {
  const Program p = parse_program(read_file(cmd.program_path));
  const nlohmann::json config = program_config(cmd, p);
  const Solution s = solve(p, cmd.solve);
  const ThreeValued collapsed = collapse_wfs(s.model);
  const auto& names = *p.atoms();

  if (cmd.verb == Verb::Trace) {
    if (cmd.format == Format::Json) {
      out << nlohmann::json{{"config", config}}.dump() << "\n";
      for (const auto& record : trace_json(s)) out << record.dump() << "\n";
    } else {
      text_header(out, config);
      for (const auto& r : s.trace) {
        out << "alpha " << r.alpha << ": x = " << to_string(r.x) << ", z = " << to_string(r.z) << ", "
            << r.inner_steps << " inner steps\n";
      }
      out << "result " << to_string(s.model) << "\n";
    }
    return kExitOk;
  }

  const bool check_oracle = cmd.verify || cmd.verb == Verb::Wfs;
  bool agrees = true;
  std::optional<ThreeValued> oracle;
  if (check_oracle) {
    oracle = wfs_oracle(p);
    agrees = *oracle == collapsed;
  }

  nlohmann::json doc = solution_json(s);
  if (cmd.verb == Verb::Wfs) doc = {{"wfs", to_json(collapsed)}};
  doc["config"] = config;
  if (check_oracle) {
    doc["oracle"] = to_json(*oracle);
    doc["oracle_agrees"] = agrees;
  }
  if (cmd.trace) doc["trace"] = trace_json(s);

  if (cmd.format == Format::Json) {
    out << doc.dump(2) << "\n";
  } else {
    text_header(out, config);
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << names[i] << " ";
      if (cmd.verb == Verb::Wfs) {
        out << to_string(collapsed.values[i]);
      } else {
        out << to_string(s.model[i]) << " " << to_string(collapsed.values[i]) << " ";
        out << (s.settled_at[i] ? "settled at " + std::to_string(*s.settled_at[i]) : std::string("limit"));
      }
      out << "\n";
    }
    if (cmd.verb == Verb::Solve) out << "strata used " << s.strata_used << "\n";
    if (cmd.trace) {
      for (const auto& r : s.trace) {
        out << "alpha " << r.alpha << ": x = " << to_string(r.x) << ", z = " << to_string(r.z) << "\n";
      }
    }
    if (check_oracle) out << (agrees ? "oracle agrees" : "ORACLE MISMATCH") << "\n";
  }
  if (!agrees) {
    const auto path = write_bundle(cmd, p, solution_json(s), to_json(*oracle));
    err << "strata: well-founded oracle disagrees; replay bundle written to " << path << "\n";
    return kExitConsistency;
  }
  return kExitOk;
}

int run_check_axioms(const Command& cmd, std::ostream& out) {
  const FiniteModel model = load_model(cmd.model);
  const AxiomReport report = check_axioms(model, cmd.axioms, cmd.execution);
  const auto sq_max = global_maximum(model);
  const Elem leq_max = leq_maximum(model);

  nlohmann::json axioms = nlohmann::json::array();
  for (auto a : cmd.axioms) axioms.push_back(axiom_name(a));
  const nlohmann::json config{{"verb", "check-axioms"}, {"model", cmd.model}, {"axioms", axioms}, {"seed", cmd.seed}};

  if (cmd.format == Format::Json) {
    nlohmann::json doc = to_json(report, model);
    doc["config"] = config;
    doc["size"] = model.size();
    doc["kappa"] = model.kappa();
    doc["sq_maximum"] = sq_max ? nlohmann::json(model.name(*sq_max)) : nlohmann::json(nullptr);
    doc["leq_maximum"] = model.name(leq_max);
    out << doc.dump(2) << "\n";
  } else {
    text_header(out, config);
    out << "model: " << model.size() << " elements, " << model.kappa() << " strata\n";
    for (const auto& s : report.results) {
      out << axiom_name(s.axiom) << " " << (s.holds ? "holds" : "fails");
      if (s.witness) {
        out << ": alpha=" << s.witness->alpha << " beta=" << s.witness->beta << " elements";
        for (auto e : s.witness->elems) out << " " << model.name(e);
      }
      if (!s.note.empty()) out << " (" << s.note << ")";
      out << "\n";
    }
    out << (report.all_hold() ? "all hold" : "some axioms fail") << "\n";
    out << "sq-maximum " << (sq_max ? model.name(*sq_max) : std::string("none")) << "\n";
    out << "leq-maximum " << model.name(leq_max) << "\n";
  }
  return report.all_hold() ? kExitOk : kExitCheckFailed;
}

int run_check_identities(const Command& cmd, std::ostream& out) {
  SuiteReport report;
  nlohmann::json config = to_json(cmd.suite);
  config["verb"] = "check-identities";
  if (cmd.case_seed) {
    config["case_seed"] = *cmd.case_seed;
    if (!cmd.identity.empty()) config["identity"] = cmd.identity;
    report.config = cmd.suite;
    for (const auto& id : suite_identities(cmd.suite.suite)) {
      if (!cmd.identity.empty() && id != cmd.identity) continue;
      auto r = run_random_case(id, *cmd.case_seed, cmd.suite.shapes);
      report.tallies[id].add(r.status);
      report.results.push_back(std::move(r));
    }
  } else {
    report = run_suite(cmd.suite, cmd.execution);
  }

  if (cmd.format == Format::Json) {
    out << nlohmann::json{{"config", config}}.dump() << "\n";
    for (const auto& r : report.results) out << to_json(r).dump() << "\n";
    out << summary_json(report).dump() << "\n";
  } else {
    text_header(out, config);
    for (const auto& r : report.results) {
      if (r.status != CheckStatus::Fail) continue;
      out << "FAIL " << r.identity << " case " << r.case_id << " seed " << r.seed << " at " << r.point << ": "
          << r.lhs << " != " << r.rhs << " (" << r.detail << ")\n";
    }
    for (const auto& [id, t] : report.tallies) {
      out << id << ": " << t.passed << " pass, " << t.failed << " fail, " << t.vacuous << " vacuous\n";
    }
    out << (report.ok() ? "no counterexamples" : std::to_string(report.failures()) + " counterexamples") << "\n";
  }
  return report.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (!cmd.help.empty()) {
    out << cmd.help;
    return kExitOk;
  }
  try {
    switch (cmd.verb) {
      case Verb::Solve:
      case Verb::Wfs:
      case Verb::Trace: return run_program_verb(cmd, out, err);
      case Verb::CheckAxioms: return run_check_axioms(cmd, out);
      case Verb::CheckIdentities: return run_check_identities(cmd, out);
    }
  } catch (const SyntaxError& e) {
    err << "strata: " << cmd.program_path << ":" << e.what() << "\n";
    return kExitSyntax;
  } catch (const NotConverged& e) {
    err << "strata: not converged: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const InnerNotConverged& e) {
    err << "strata: not converged: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const FixpointCheckFailed& e) {
    err << "strata: consistency check failed: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const InputError& e) {
    err << "strata: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const std::exception& e) {
    err << "strata: " << e.what() << "\n";
    return kExitBadData;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const UsageError& e) {
    err << "strata: " << e.what() << "\n\n" << e.usage();
    return kExitUsage;
  }
  return execute(cmd, out, err);
}

}  // namespace strata::cli
