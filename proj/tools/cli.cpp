#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <string>
#include <thread>

#include "cyclepack/edge_list.hpp"
#include "cyclepack/errors.hpp"
#include "cyclepack/gadgets.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/oracle.hpp"
#include "cyclepack/packing.hpp"
#include "cyclepack/report.hpp"
#include "cyclepack/solver.hpp"
#include "cyclepack/verification.hpp"

namespace cyclepack::cli {

namespace {

struct Options {
  std::string input;
  std::size_t r = 0;
  std::size_t s = 0;
  std::uint64_t budget = SearchBudget{}.node_limit;
  bool trace = false;
  std::string lemma;
  bool exhaustive = false;
  int n = 0;
  unsigned workers = 1;
  std::string kind;
  double p = 0.5;
  std::uint64_t seed = 0;
};

std::optional<Graph> load(const std::string& path, std::ostream& err) {
  try {
    return read_edge_list_file(path);
  } catch (const std::exception& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = load(o.input, err);
  if (!g) return kIoError;
  const ConditionReport conditions = check_conditions(*g, o.r, o.s);
  SearchBudget budget;
  budget.node_limit = o.budget;
  SolveTrace trace;
  try {
    const Packing p = solve(*g, o.r, o.s, budget, &trace);
    out << partition_report(conditions, &p, trace, nullptr, o.trace).dump(2) << '\n';
    return kOk;
  } catch (const SolverError& e) {
    out << partition_report(conditions, nullptr, trace, &e, o.trace).dump(2) << '\n';
    return kHypothesisViolation;
  }
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = load(o.input, err);
  if (!g) return kIoError;
  out << to_json(check_conditions(*g, o.r, o.s)).dump(2) << '\n';
  return kOk;
}

int cmd_verify_lemma(const Options& o, std::ostream& out, std::ostream& err) {
  const auto lemma = parse_lemma(o.lemma);
  if (!lemma) {
    err << "error: unknown lemma '" << o.lemma << "'\n";
    return kUsage;
  }
  const LemmaSweep sweep = sweep_lemma(*lemma, o.exhaustive);
  out << lemma_name(*lemma) << ": " << sweep.witnessed << '/' << sweep.configurations
      << " configurations witnessed";
  if (*lemma == Lemma::C4P4Max) out << " (" << sweep.improved << " by improvement)";
  out << '\n';
  for (std::size_t i = 0; i < sweep.failed_patterns.size(); ++i) {
    out << "  pattern " << sweep.failed_patterns[i] << ": " << sweep.failure_details[i] << '\n';
  }
  return sweep.complete() ? kOk : kHypothesisViolation;
}

int cmd_verify_theorem(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.s == 0 || static_cast<std::size_t>(o.n) != 3 * o.r + 4 * o.s || o.n > 8) {
    err << "error: verify-theorem needs n = 3r + 4s <= 8 with s >= 1\n";
    return kUsage;
  }
  const TheoremSweep t = sweep_theorem(o.n, o.r, o.s, o.workers);
  nlohmann::json j;
  j["graphs"] = t.graphs;
  j["qualifying"] = t.qualifying;
  j["oracle_found"] = t.oracle_found;
  j["solved"] = t.solved;
  j["refine_dense"] = t.refine_dense;
  j["trace_monotone"] = t.trace_monotone;
  j["thresholds_met"] = t.thresholds_met;
  j["lemma_calls"] = t.lemma_calls;
  j["longest_refine_trace"] = t.longest_trace;
  j["failures"] = nlohmann::json::array();
  for (std::size_t i = 0; i < t.failed_codes.size() && i < 20; ++i)
    j["failures"].push_back({{"code", t.failed_codes[i]}, {"detail", t.failure_details[i]}});
  j["status"] = t.clean() ? "ok" : "failed";
  out << j.dump(2) << '\n';
  return t.clean() ? kOk : kHypothesisViolation;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  auto g = load(o.input, err);
  if (!g) return kIoError;
  if (static_cast<std::size_t>(g->order()) != 3 * o.r + 4 * o.s) {
    err << "error: graph order " << g->order() << " is not 3r + 4s\n";
    return kHypothesisViolation;
  }
  const auto p = exact_partition(*g, o.r, o.s);
  nlohmann::json j;
  j["found"] = p.has_value();
  if (p) {
    const nlohmann::json body = to_json(*p);
    j["triangles"] = body["triangles"];
    j["quadrilaterals"] = body["quadrilaterals"];
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
  GeneratorSpec spec;
  spec.n = o.n;
  spec.p = o.p;
  spec.seed = o.seed;
  spec.r = o.r;
  spec.s = o.s;
  if (o.kind == "random") {
    spec.kind = GeneratorKind::UniformRandom;
  } else if (o.kind == "conditioned") {
    spec.kind = GeneratorKind::ConditionFiltered;
  } else {
    err << "error: unknown generator kind '" << o.kind << "'\n";
    return kUsage;
  }
  try {
    out << emit_edge_list(random_graph(spec));
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition graphs into vertex-disjoint triangles and quadrilaterals"};
  app.name("cyclepack");
  app.require_subcommand(1);
  Options o;

  auto* solve_cmd = app.add_subcommand("solve", "Partition a graph into r C3 and s C4");
  solve_cmd->add_option("--input", o.input, "Edge-list file")->required();
  solve_cmd->add_option("--r", o.r, "Number of triangles")->required();
  solve_cmd->add_option("--s", o.s, "Number of quadrilaterals")->required();
  solve_cmd->add_option("--budget", o.budget, "Node limit for the exact packing search");
  solve_cmd->add_flag("--trace", o.trace, "Include every lemma invocation in the report");

  auto* check_cmd = app.add_subcommand("check", "Report the degree-sum conditions");
  check_cmd->add_option("--input", o.input, "Edge-list file")->required();
  check_cmd->add_option("--r", o.r, "Number of triangles")->required();
  check_cmd->add_option("--s", o.s, "Number of quadrilaterals")->required();

  auto* lemma_cmd = app.add_subcommand("verify-lemma", "Run an exchange lemma over its gadgets");
  lemma_cmd->add_option("--lemma", o.lemma, "Lemma id")
      ->required()
      ->check(CLI::IsMember({"p3p2", "p3p3", "c4pair", "c3pair", "c4edges", "c3edges", "c4p4max",
                             "f4quad", "f4tri", "f4tri7"}));
  lemma_cmd->add_flag("--exhaustive", o.exhaustive, "Every admissible pattern, not a sample");

  auto* theorem_cmd =
      app.add_subcommand("verify-theorem", "Compare solver and oracle on all labeled graphs");
  theorem_cmd->add_option("--n", o.n, "Order")->required();
  theorem_cmd->add_option("--r", o.r, "Number of triangles")->required();
  theorem_cmd->add_option("--s", o.s, "Number of quadrilaterals")->required();
  theorem_cmd->add_option("--workers", o.workers, "Threads")->check(CLI::Range(1u, 256u));

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact partition search");
  oracle_cmd->add_option("--input", o.input, "Edge-list file")->required();
  oracle_cmd->add_option("--r", o.r, "Number of triangles")->required();
  oracle_cmd->add_option("--s", o.s, "Number of quadrilaterals")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random edge-list document");
  gen_cmd->add_option("--kind", o.kind, "random | conditioned")
      ->required()
      ->check(CLI::IsMember({"random", "conditioned"}));
  gen_cmd->add_option("--n", o.n, "Order")->required()->check(CLI::Range(0, 100000));
  gen_cmd->add_option("--p", o.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", o.seed, "Seed")->required();
  gen_cmd->add_option("--r", o.r, "Triangles (conditioned)");
  gen_cmd->add_option("--s", o.s, "Quadrilaterals (conditioned)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  if (*solve_cmd) return cmd_solve(o, out, err);
  if (*check_cmd) return cmd_check(o, out, err);
  if (*lemma_cmd) return cmd_verify_lemma(o, out, err);
  if (*theorem_cmd) return cmd_verify_theorem(o, out, err);
  if (*oracle_cmd) return cmd_oracle(o, out, err);
  if (*gen_cmd) return cmd_gen(o, out, err);
  err << app.help();
  return kUsage;
}

}  // namespace cyclepack::cli
