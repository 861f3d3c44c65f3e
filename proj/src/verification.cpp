#include "cyclepack/verification.hpp"

#include <algorithm>
#include <thread>

#include "cyclepack/enumerate.hpp"
#include "cyclepack/errors.hpp"
#include "cyclepack/oracle.hpp"

namespace cyclepack {

LemmaSweep sweep_lemma(Lemma lemma, bool exhaustive, std::size_t sample_limit) {
  LemmaSweep sweep;
  sweep.lemma = lemma;
  std::vector<Gadget> gadgets;
  GadgetStream stream(lemma);
  while (auto gadget = stream.next()) gadgets.push_back(std::move(*gadget));

  std::size_t stride = 1;
  if (!exhaustive && sample_limit > 0 && gadgets.size() > sample_limit) {
    stride = (gadgets.size() + sample_limit - 1) / sample_limit;
  }
  for (std::size_t i = 0; i < gadgets.size(); i += stride) {
    ++sweep.configurations;
    const GadgetVerdict verdict = check_gadget(gadgets[i]);
    if (verdict.witnessed) {
      ++sweep.witnessed;
      if (verdict.improved) ++sweep.improved;
    } else {
      sweep.failed_patterns.push_back(gadgets[i].pattern);
      sweep.failure_details.push_back(verdict.detail);
    }
  }
  return sweep;
}

RunCheck check_instance(const Graph& g, std::size_t r, std::size_t s, const SearchBudget& budget) {
  RunCheck check;
  check.oracle_found = exact_partition(g, r, s).has_value();
  SolveTrace trace;
  try {
    const Packing p = solve(g, r, s, budget, &trace);
    check.solved = !verify_packing(g, p, r, s).has_value();
  } catch (const SolverError& e) {
    check.failure = e.what();
  }
  if (!check.solved) {
    if (check.failure.empty()) check.failure = "solve output failed verification";
    return check;
  }

  // solve's trace: refinement potentials, then one entry from absorption.
  const auto& pot = trace.potentials;
  check.trace_length = pot.empty() ? 0 : pot.size() - 1;
  check.refine_dense = check.trace_length > 0 && pot[check.trace_length - 1].stage >= Stage::Dense;
  const std::size_t m_max = max_packed_edges(r, s - 1);
  check.trace_monotone = check.trace_length <= 4 + m_max &&
                         std::adjacent_find(pot.begin(), pot.end(), [](const auto& a, const auto& b) {
                           return !(a < b);
                         }) == pot.end();
  check.lemma_calls = trace.calls.size();
  check.thresholds_met = std::all_of(trace.calls.begin(), trace.calls.end(),
                                     [](const LemmaCall& c) { return c.measured >= c.threshold; });
  if (!check.oracle_found) check.failure = "oracle found no partition";
  else if (!check.refine_dense) check.failure = "refinement ended below four remainder edges";
  else if (!check.trace_monotone) check.failure = "potential trace not strictly increasing";
  else if (!check.thresholds_met) check.failure = "lemma invoked below threshold";
  return check;
}

namespace {

void sweep_range(int n, std::size_t r, std::size_t s, std::uint64_t begin, std::uint64_t end,
                 TheoremSweep& out) {
  const auto bound = static_cast<std::int64_t>(n) + static_cast<std::int64_t>(r);
  for (std::uint64_t code = begin; code < end; ++code) {
    const Graph g = EnumerationStream::decode(n, code);
    ++out.graphs;
    if (!sigma2(g).at_least(bound)) continue;
    ++out.qualifying;
    const RunCheck c = check_instance(g, r, s);
    out.oracle_found += c.oracle_found;
    out.solved += c.solved;
    out.refine_dense += c.refine_dense;
    out.trace_monotone += c.trace_monotone;
    out.thresholds_met += c.thresholds_met;
    out.lemma_calls += c.lemma_calls;
    out.longest_trace = std::max(out.longest_trace, c.trace_length);
    if (!c.ok()) {
      out.failed_codes.push_back(code);
      out.failure_details.push_back(c.failure);
    }
  }
}

}  // namespace

TheoremSweep sweep_theorem(int n, std::size_t r, std::size_t s, unsigned workers) {
  if (static_cast<std::size_t>(n) != 3 * r + 4 * s || s == 0) {
    throw GraphError("sweep_theorem: n must equal 3r + 4s with s >= 1");
  }
  const std::uint64_t total = EnumerationStream(n).total();
  workers = std::max(1u, workers);
  std::vector<TheoremSweep> parts(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    threads.emplace_back(sweep_range, n, r, s, begin, end, std::ref(parts[w]));
  }
  for (auto& t : threads) t.join();

  TheoremSweep all;
  for (const auto& part : parts) {
    all.graphs += part.graphs;
    all.qualifying += part.qualifying;
    all.oracle_found += part.oracle_found;
    all.solved += part.solved;
    all.refine_dense += part.refine_dense;
    all.trace_monotone += part.trace_monotone;
    all.thresholds_met += part.thresholds_met;
    all.lemma_calls += part.lemma_calls;
    all.longest_trace = std::max(all.longest_trace, part.longest_trace);
    all.failed_codes.insert(all.failed_codes.end(), part.failed_codes.begin(), part.failed_codes.end());
    all.failure_details.insert(all.failure_details.end(), part.failure_details.begin(),
                               part.failure_details.end());
  }
  return all;
}

}  // namespace cyclepack
