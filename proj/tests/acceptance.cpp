// Acceptance suite: one PASS/FAIL line per criterion. Failing instances are
// written under counterexamples/ as edge-list files.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include "cyclepack/edge_list.hpp"
#include "cyclepack/enumerate.hpp"
#include "cyclepack/errors.hpp"
#include "cyclepack/gadgets.hpp"
#include "cyclepack/generators.hpp"
#include "cyclepack/oracle.hpp"
#include "cyclepack/solver.hpp"
#include "cyclepack/verification.hpp"

namespace cp = cyclepack;

namespace {

// Pinned tolerances.
constexpr double kLemmaSweepSeconds = 120.0;  // criterion 1 runtime ceiling
constexpr std::uint64_t kGraphsOnSeven = 2'097'152;
constexpr std::uint64_t kRandomInstances = 1000;
constexpr double kRandomDensity = 0.6;
constexpr std::uint64_t kRatioInstances = 200;
constexpr double kRatioDensity = 0.55;
constexpr std::uint64_t kAllowedFailures = 0;  // every criterion demands 100%

const std::filesystem::path kCounterexamples = "counterexamples";

struct Ledger {
  std::uint64_t calls = 0;
  std::uint64_t below = 0;
  std::map<std::string, std::uint64_t> per_lemma;

  void add(const cp::SolveTrace& trace) {
    for (const cp::LemmaCall& call : trace.calls) {
      ++calls;
      ++per_lemma[call.lemma];
      if (call.measured < call.threshold) ++below;
    }
  }
};

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  if (!pass) ++failures;
}

void persist(const std::string& name, const cp::Graph& g, const std::string& note) {
  std::filesystem::create_directories(kCounterexamples);
  std::ofstream out(kCounterexamples / (name + ".txt"));
  out << "# " << note << '\n' << cp::emit_edge_list(g);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// c4p4max with chords on C: the bare gadget always improves, so the dense
// conclusion is exercised on the chorded variants.
struct ChordSweep {
  std::uint64_t configurations = 0;
  std::uint64_t witnessed = 0;
  std::uint64_t dense = 0;
};

ChordSweep sweep_c4p4max_chords() {
  ChordSweep out;
  const std::vector<std::vector<cp::Edge>> chords = {{{0, 2}}, {{1, 3}}, {{0, 2}, {1, 3}}};
  for (const auto& extra : chords) {
    cp::GadgetStream stream(cp::Lemma::C4P4Max);
    while (auto gadget = stream.next()) {
      std::vector<cp::Edge> edges = gadget->graph.edges();
      edges.insert(edges.end(), extra.begin(), extra.end());
      cp::Gadget chorded{gadget->lemma, cp::Graph(8, edges), gadget->pattern,
                         gadget->cross_edges};
      ++out.configurations;
      const cp::GadgetVerdict verdict = cp::check_gadget(chorded);
      if (!verdict.witnessed) continue;
      ++out.witnessed;
      if (!verdict.improved) ++out.dense;
    }
  }
  return out;
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t configurations = 0;
  std::uint64_t witnessed = 0;
  std::string detail;
  for (cp::Lemma lemma : cp::all_lemmas()) {
    const cp::LemmaSweep sweep = cp::sweep_lemma(lemma, true);
    configurations += sweep.configurations;
    witnessed += sweep.witnessed;
    detail += std::string(cp::lemma_name(lemma)) + " " + std::to_string(sweep.witnessed) + "/" +
              std::to_string(sweep.configurations) + ", ";
    for (std::size_t i = 0; i < sweep.failed_patterns.size(); ++i) {
      const cp::Gadget g = cp::build_gadget(lemma, sweep.failed_patterns[i]);
      persist("lemma_" + std::string(cp::lemma_name(lemma)) + "_" +
                  std::to_string(sweep.failed_patterns[i]),
              g.graph, sweep.failure_details[i]);
    }
  }
  const ChordSweep chords = sweep_c4p4max_chords();
  const double elapsed = seconds_since(start);
  detail += "c4p4max+chords " + std::to_string(chords.witnessed) + "/" +
            std::to_string(chords.configurations) + " (" + std::to_string(chords.dense) +
            " dense); " + std::to_string(elapsed) + "s";
  report(1,
         witnessed == configurations && chords.witnessed == chords.configurations &&
             chords.dense > 0 && elapsed < kLemmaSweepSeconds,
         detail);
}

void persist_sweep_failures(const cp::TheoremSweep& sweep, const std::string& prefix) {
  for (std::size_t i = 0; i < sweep.failed_codes.size(); ++i)
    persist(prefix + "_" + std::to_string(sweep.failed_codes[i]),
            cp::EnumerationStream::decode(7, sweep.failed_codes[i]), sweep.failure_details[i]);
}

void criteria_2_and_3(Ledger& ledger) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  const cp::TheoremSweep sweep = cp::sweep_theorem(7, 1, 1, workers);
  persist_sweep_failures(sweep, "theorem_1_1");
  ledger.calls += sweep.lemma_calls;
  ledger.below += sweep.qualifying - sweep.thresholds_met;
  const auto q = sweep.qualifying;
  report(2,
         sweep.graphs == kGraphsOnSeven && q > 0 && sweep.oracle_found == q && sweep.solved == q,
         std::to_string(sweep.graphs) + " graphs, " + std::to_string(q) + " with sigma2 >= 8, " +
             "oracle " + std::to_string(sweep.oracle_found) + ", solved " +
             std::to_string(sweep.solved));
  report(3, q > 0 && sweep.refine_dense == q && sweep.trace_monotone == q,
         "dense remainder " + std::to_string(sweep.refine_dense) + "/" + std::to_string(q) +
             ", monotone trace within 4 + M_max " + std::to_string(sweep.trace_monotone) + "/" +
             std::to_string(q) + ", longest refine trace " + std::to_string(sweep.longest_trace));
}

cp::Graph conditioned(int n, std::size_t r, std::size_t s, std::uint64_t seed, double p) {
  cp::GeneratorSpec spec;
  spec.kind = cp::GeneratorKind::ConditionFiltered;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  spec.r = r;
  spec.s = s;
  return cp::random_graph(spec);
}

void criterion_4(Ledger& ledger) {
  std::string detail;
  std::uint64_t bad = 0;
  for (auto [n, r, s] : {std::tuple{10, std::size_t{2}, std::size_t{1}},
                         std::tuple{14, std::size_t{2}, std::size_t{2}}}) {
    std::uint64_t ok = 0;
    for (std::uint64_t seed = 1; seed <= kRandomInstances; ++seed) {
      const cp::Graph g = conditioned(n, r, s, seed, kRandomDensity);
      const std::string name = "random_" + std::to_string(n) + "_" + std::to_string(seed);
      try {
        cp::SolveTrace trace;
        const cp::Packing p = cp::solve(g, r, s, {}, &trace);
        ledger.add(trace);
        if (auto why = cp::verify_packing(g, p, r, s)) {
          persist(name, g, *why);
          continue;
        }
        ++ok;
      } catch (const std::exception& e) {
        persist(name, g, e.what());
      }
    }
    bad += kRandomInstances - ok;
    detail += "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(s) +
              ") " + std::to_string(ok) + "/" + std::to_string(kRandomInstances) + " ";
  }
  report(4, bad <= kAllowedFailures, detail + "solved and validated");
}

void criterion_5() {
  bool pass = true;
  std::string detail;

  const cp::ConditionReport c7 = cp::check_conditions(cp::Graph::cycle(7), 1, 1);
  bool c7_fails = !c7.sigma_ok;
  try {
    cp::solve(cp::Graph::cycle(7), 1, 1);
    c7_fails = false;
  } catch (const cp::SolverError&) {
  }
  pass &= c7_fails;
  detail += std::string("C7 sigma_ok=") + (c7.sigma_ok ? "true" : "false") + "; ";

  const bool k34_none = !cp::exact_partition(cp::Graph::complete_bipartite(3, 4), 1, 1);
  pass &= k34_none;
  detail += std::string("K3,4 oracle ") + (k34_none ? "none" : "found") + "; ";

  std::uint64_t ratio_flagged = 0;
  std::uint64_t dense = 0;
  for (std::uint64_t seed = 1; seed <= kRatioInstances; ++seed) {
    const cp::Graph g = conditioned(11, 1, 2, seed, kRatioDensity);
    const cp::ConditionReport report = cp::check_conditions(g, 1, 2);
    if (!report.ratio_ok && report.sigma_ok) ++ratio_flagged;
    const std::string name = "ratio_11_" + std::to_string(seed);
    try {
      const cp::Packing p = cp::refine_remainder(g, cp::initial_packing(g, 1, 2));
      if (cp::induced_edge_count(g, p.remainder) >= 4)
        ++dense;
      else
        persist(name, g, "refine ended below four remainder edges");
    } catch (const std::exception& e) {
      persist(name, g, e.what());
    }
  }
  pass &= ratio_flagged == kRatioInstances && dense == kRatioInstances;
  detail += "(1,2) n=11 ratio_ok=false on " + std::to_string(ratio_flagged) + "/" +
            std::to_string(kRatioInstances) + ", remainder >= 4 edges on " +
            std::to_string(dense) + "/" + std::to_string(kRatioInstances);
  report(5, pass, detail);
}

void criterion_6(const Ledger& ledger) {
  std::string detail = std::to_string(ledger.calls) + " lemma calls, " +
                       std::to_string(ledger.below) + " below threshold;";
  for (const auto& [lemma, count] : ledger.per_lemma)
    detail += " " + lemma + "=" + std::to_string(count);
  report(6, ledger.calls > 0 && ledger.below == 0, detail);
}

}  // namespace

int main() {
  Ledger ledger;
  criterion_1();
  criteria_2_and_3(ledger);
  criterion_4(ledger);
  criterion_5();
  criterion_6(ledger);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
