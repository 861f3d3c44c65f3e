#include "cyclepack/solver.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <variant>

#include "cyclepack/errors.hpp"
#include "cyclepack/exchanges.hpp"

namespace cyclepack {

namespace {

// ---------------------------------------------------------------------------
// Initial packing

class Harvester {
 public:
  Harvester(const Graph& g, std::vector<Vertex> order) : g_(g), order_(std::move(order)) {
    rank_.resize(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = i;
    used_.assign(static_cast<std::size_t>(g.order()), false);
  }

  std::optional<Packing> run(std::size_t triangles, std::size_t quadrilaterals) {
    Packing p;
    for (std::size_t i = 0; i < triangles; ++i) {
      auto c = take(3);
      if (!c) return std::nullopt;
      p.triangles.push_back(*c);
    }
    for (std::size_t i = 0; i < quadrilaterals; ++i) {
      auto c = take(4);
      if (!c) return std::nullopt;
      p.quadrilaterals.push_back(*c);
    }
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (!used_[v]) rest.push_back(v);
    p.remainder = VertexSet(std::move(rest));
    return p;
  }

 private:
  std::optional<Cycle> take(std::size_t k) {
    std::vector<Vertex> seq;
    for (Vertex start : order_) {
      if (used_[start]) continue;
      seq.assign(1, start);
      if (extend(seq, k)) {
        for (Vertex v : seq) used_[v] = true;
        return Cycle(seq);
      }
    }
    return std::nullopt;
  }

  bool extend(std::vector<Vertex>& seq, std::size_t k) {
    if (seq.size() == k) return g_.adjacent(seq.back(), seq.front());
    std::vector<Vertex> next;
    for (Vertex w : g_.neighbors(seq.back()))
      if (!used_[w] && std::find(seq.begin(), seq.end(), w) == seq.end()) next.push_back(w);
    std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
    for (Vertex w : next) {
      seq.push_back(w);
      if (extend(seq, k)) return true;
      seq.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> rank_;
  std::vector<bool> used_;
};

// Exact search: the lowest uncovered vertex goes into a triangle, a
// quadrilateral, or the remainder.
class PackingSearch {
 public:
  PackingSearch(const Graph& g, std::size_t r, std::size_t q, std::size_t leftover,
                std::uint64_t node_limit)
      : g_(g), node_limit_(node_limit) {
    left_[0] = r;
    left_[1] = q;
    left_[2] = leftover;
    used_.assign(static_cast<std::size_t>(g.order()), false);
  }

  std::optional<Packing> run() {
    if (descend(0)) return packing_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  bool descend(Vertex from) {
    if (++nodes_ > node_limit_) {
      exhausted_ = true;
      return false;
    }
    Vertex v = from;
    while (v < g_.order() && used_[v]) ++v;
    if (v == g_.order()) return left_[0] == 0 && left_[1] == 0 && left_[2] == 0;

    auto free_neighbors = [&](Vertex x) {
      std::vector<Vertex> out;
      for (Vertex w : g_.neighbors(x))
        if (w > v && !used_[w]) out.push_back(w);
      return out;
    };

    if (left_[0] > 0) {
      const auto nb = free_neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!g_.adjacent(nb[i], nb[j])) continue;
          if (place({v, nb[i], nb[j]}, 0, v)) return true;
          if (exhausted_) return false;
        }
    }
    if (left_[1] > 0) {
      const auto nb = free_neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          for (Vertex mid : g_.neighbors(nb[i])) {
            if (mid <= v || used_[mid] || mid == nb[j] || !g_.adjacent(mid, nb[j])) continue;
            if (place({v, nb[i], mid, nb[j]}, 1, v)) return true;
            if (exhausted_) return false;
          }
    }
    if (left_[2] > 0) {
      --left_[2];
      used_[v] = true;
      leftover_.push_back(v);
      if (descend(v + 1)) return true;
      leftover_.pop_back();
      used_[v] = false;
      ++left_[2];
    }
    return false;
  }

  bool place(std::vector<Vertex> cycle, int kind, Vertex v) {
    --left_[kind];
    for (Vertex w : cycle) used_[w] = true;
    auto& list = kind == 0 ? packing_.triangles : packing_.quadrilaterals;
    list.emplace_back(cycle);
    if (descend(v + 1)) {
      packing_.remainder = VertexSet(leftover_);
      return true;
    }
    list.pop_back();
    for (Vertex w : cycle) used_[w] = false;
    ++left_[kind];
    return false;
  }

  const Graph& g_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::size_t left_[3] = {0, 0, 0};
  std::vector<bool> used_;
  std::vector<Vertex> leftover_;
  Packing packing_;
};

// ---------------------------------------------------------------------------
// Refinement helpers

struct Target {
  bool quadrilateral = false;
  std::size_t index = 0;
  std::int64_t measured = 0;
};

Ledger counting_ledger(const Graph& g, const Packing& p, const VertexSet& from,
                       std::int64_t threshold) {
  Ledger ledger;
  const DegreeSum s2 = sigma2(g);
  ledger["n"] = g.order();
  ledger["r"] = static_cast<std::int64_t>(p.triangles.size());
  ledger["s"] = static_cast<std::int64_t>(p.quadrilaterals.size() + 1);
  ledger["sigma2"] = s2.is_infinite() ? -1 : s2.value();
  ledger["threshold"] = threshold;
  std::int64_t total = 0;
  std::int64_t best = 0;
  for (const auto* list : {&p.quadrilaterals, &p.triangles})
    for (const auto& c : *list) {
      const auto e = static_cast<std::int64_t>(cross_edge_count(g, from, c.vertex_set()));
      total += e;
      best = std::max(best, e);
    }
  ledger["cross_edges_into_H"] = total;
  ledger["max_cross_edges_to_one_cycle"] = best;
  ledger["pigeonhole_bound"] = (threshold - 1) * static_cast<std::int64_t>(p.cycle_count());
  return ledger;
}

// Quadrilaterals first, then triangles, ascending index; first hit wins.
Target find_target(const Graph& g, const Packing& p, const VertexSet& from,
                   std::int64_t threshold, const char* step) {
  for (std::size_t i = 0; i < p.quadrilaterals.size(); ++i) {
    const auto e =
        static_cast<std::int64_t>(cross_edge_count(g, from, p.quadrilaterals[i].vertex_set()));
    if (e >= threshold) return Target{true, i, e};
  }
  for (std::size_t i = 0; i < p.triangles.size(); ++i) {
    const auto e = static_cast<std::int64_t>(cross_edge_count(g, from, p.triangles[i].vertex_set()));
    if (e >= threshold) return Target{false, i, e};
  }
  throw SolverError("refine", "no-qualifying-cycle",
                    std::string(step) + ": no cycle receives " + std::to_string(threshold) +
                        " edges from the remainder; the degree-sum counting bound does not hold",
                    counting_ledger(g, p, from, threshold));
}

const Cycle& target_cycle(const Packing& p, const Target& t) {
  return t.quadrilateral ? p.quadrilaterals[t.index] : p.triangles[t.index];
}

Cycle& target_cycle(Packing& p, const Target& t) {
  return t.quadrilateral ? p.quadrilaterals[t.index] : p.triangles[t.index];
}

void record(SolveTrace* trace, const char* lemma, const Target& t, std::int64_t threshold) {
  // Pigeonhole soundness: the chosen cycle meets the lemma's threshold.
  if (t.measured < threshold) {
    throw std::logic_error(std::string(lemma) + " invoked below its threshold");
  }
  if (trace) trace->calls.push_back(LemmaCall{lemma, t.quadrilateral, t.index, t.measured, threshold});
}

// Non-adjacent x, y in the remainder: swap through a cycle C with
// e({x,y}, C) >= 5, after which the remainder gains an edge at x or y.
void pair_exchange(const Graph& g, Packing& p, Vertex x, Vertex y, SolveTrace* trace) {
  const VertexSet pair{x, y};
  const Target t = find_target(g, p, pair, 5, "sparse remainder");
  const Cycle& c = target_cycle(p, t);
  const char* lemma = t.quadrilateral ? "exchange_c4_pair" : "exchange_c3_pair";
  record(trace, lemma, t, 5);
  const CyclePlusEdge out =
      t.quadrilateral ? exchange_c4_pair(g, c, x, y) : exchange_c3_pair(g, c, x, y);
  p.remainder = p.remainder.minus(pair).united(VertexSet{out.edge.u, out.edge.v});
  target_cycle(p, t) = out.cycle;
}

void lift_sparse(const Graph& g, Packing& p, SolveTrace* trace) {
  const VertexSet& d = p.remainder;
  if (induced_edge_count(g, d) == 0) pair_exchange(g, p, d[0], d[1], trace);
  if (remainder_stage(g, p.remainder) != Stage::Sparse) return;

  // Some edge uv exists and no two remainder edges are independent, so the
  // other two vertices z, w are non-adjacent and send at most two edges to uv.
  const VertexSet& rem = p.remainder;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!g.adjacent(rem[i], rem[j])) continue;
      const VertexSet others = rem.minus(VertexSet{rem[i], rem[j]});
      if (g.adjacent(others[0], others[1])) {
        throw std::logic_error("sparse remainder holds two independent edges");
      }
      pair_exchange(g, p, others[0], others[1], trace);
      return;
    }
  throw std::logic_error("sparse remainder lost its edge");
}

void lift_matching(const Graph& g, Packing& p, SolveTrace* trace) {
  const VertexSet& d = p.remainder;
  const int matchings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  std::optional<std::pair<Edge, Edge>> edges;
  for (const auto& m : matchings)
    if (g.adjacent(d[m[0]], d[m[1]]) && g.adjacent(d[m[2]], d[m[3]])) {
      edges.emplace(Edge(d[m[0]], d[m[1]]), Edge(d[m[2]], d[m[3]]));
      break;
    }
  if (!edges) throw std::logic_error("matching remainder without independent edges");

  const Target t = find_target(g, p, d, 9, "matching remainder");
  const Cycle& c = target_cycle(p, t);
  if (t.quadrilateral) {
    record(trace, "exchange_c4_two_edges", t, 9);
    const CyclePlusPath4 out = exchange_c4_two_edges(g, c, edges->first, edges->second);
    p.remainder = VertexSet{out.path[0], out.path[1], out.path[2], out.path[3]};
    target_cycle(p, t) = out.cycle;
  } else {
    record(trace, "exchange_c3_two_edges", t, 9);
    const CyclePlusDense4 out = exchange_c3_two_edges(g, c, edges->first, edges->second);
    p.remainder = out.dense;
    target_cycle(p, t) = out.cycle;
  }
}

void lift_path(const Graph& g, Packing& p, SolveTrace* trace) {
  const auto path = find_path4(g, p.remainder);
  if (!path) throw std::logic_error("path remainder without a P4");
  const Target t = find_target(g, p, p.remainder, 9, "path remainder");
  const Cycle& c = target_cycle(p, t);
  if (t.quadrilateral) {
    record(trace, "exchange_c4_p4_max", t, 9);
    auto out = exchange_c4_p4_max(g, c, *path);
    if (auto* dense = std::get_if<CyclePlusDense4>(&out)) {
      p.remainder = dense->dense;
      target_cycle(p, t) = dense->cycle;
    } else {
      const auto& better = std::get<CyclePlusPath4>(out);
      p.remainder = VertexSet{better.path[0], better.path[1], better.path[2], better.path[3]};
      target_cycle(p, t) = better.cycle;
    }
  } else {
    record(trace, "exchange_c3_two_edges", t, 9);
    const auto& q = *path;
    const CyclePlusDense4 out = exchange_c3_two_edges(g, c, Edge(q[0], q[1]), Edge(q[2], q[3]));
    p.remainder = out.dense;
    target_cycle(p, t) = out.cycle;
  }
}

void require_shape(const Graph& g, const Packing& p, const char* stage) {
  if (p.remainder.size() != 4) {
    throw SolverError(stage, "invalid-input", "remainder must have exactly four vertices");
  }
  if (auto why = packing_violation(g, p)) throw SolverError(stage, "invalid-input", *why);
}

// Runs a stage, retagging lemma-level failures with the stage name.
template <typename Fn>
auto tagged(const char* stage, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const HypothesisFailure& e) {
    throw SolverError(stage, "hypothesis-failure", e.what(),
                      Ledger{{"measured", e.measured()}, {"threshold", e.threshold()}});
  } catch (const WitnessNotFound& e) {
    throw SolverError(stage, "witness-not-found", e.what());
  }
}

}  // namespace

Packing initial_packing(const Graph& g, std::size_t r, std::size_t s, const SearchBudget& budget) {
  const auto n = static_cast<std::size_t>(g.order());
  if (s == 0 || n != 3 * r + 4 * s) {
    throw SolverError("initial", "invalid-input",
                      "graph order " + std::to_string(n) + " is not 3r + 4s with s >= 1");
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (auto p = Harvester(g, order).run(r, s - 1)) return *p;

  std::mt19937_64 rng(budget.seed);
  for (int pass = 0; pass < budget.restarts; ++pass) {
    std::shuffle(order.begin(), order.end(), rng);
    if (auto p = Harvester(g, order).run(r, s - 1)) return *p;
  }

  PackingSearch search(g, r, s - 1, 4, budget.node_limit);
  if (auto p = search.run()) return *p;
  const DegreeSum s2 = sigma2(g);
  throw SolverError(
      "initial", "not-found",
      search.exhausted() ? "search budget exhausted" : "no packing of the required shape exists",
      Ledger{{"nodes", static_cast<std::int64_t>(search.nodes())},
             {"budget_exhausted", search.exhausted() ? 1 : 0},
             {"sigma_ok", s2.at_least(static_cast<std::int64_t>(n + r)) ? 1 : 0}});
}

Packing refine_remainder(const Graph& g, Packing p, SolveTrace* trace) {
  require_shape(g, p, "refine");
  Potential current = potential(g, p);
  if (trace) trace->potentials.push_back(current);
  // Stages 0..2 are each left at most once; stage 2 repeats only while the
  // packed edge count rises.
  const std::size_t bound =
      3 + max_packed_edges(p.triangles.size(), p.quadrilaterals.size());
  for (std::size_t iteration = 0; current.stage < Stage::Dense; ++iteration) {
    if (iteration > bound) {
      throw SolverError("refine", "iteration-bound", "potential failed to terminate");
    }
    tagged("refine", [&] {
      switch (current.stage) {
        case Stage::Sparse: lift_sparse(g, p, trace); break;
        case Stage::Matching: lift_matching(g, p, trace); break;
        case Stage::Path: lift_path(g, p, trace); break;
        default: break;
      }
    });
    const Potential next = potential(g, p);
    if (!(next > current)) throw std::logic_error("refine step did not increase the potential");
    current = next;
    if (trace) trace->potentials.push_back(current);
  }
  return p;
}

Packing absorb_remainder(const Graph& g, Packing p, SolveTrace* trace) {
  require_shape(g, p, "absorb");
  const RemainderShape shape = detect_remainder(g, p.remainder);
  if (std::holds_alternative<NoStructure>(shape)) {
    throw SolverError("absorb", "invalid-input", "remainder induces fewer than four edges");
  }
  if (const auto* c = std::get_if<Cycle>(&shape)) {
    p.quadrilaterals.push_back(*c);
    p.remainder = VertexSet{};
    if (trace) trace->potentials.push_back(potential(g, p));
    return p;
  }

  const F4Config f = std::get<F4Config>(shape);
  const VertexSet outer = f.outer();
  auto finish = [&](Packing& done) -> Packing& {
    done.remainder = VertexSet{};
    if (trace) trace->potentials.push_back(potential(g, done));
    return done;
  };

  return tagged("absorb", [&]() -> Packing {
    for (std::size_t i = 0; i < p.quadrilaterals.size(); ++i) {
      const auto e = static_cast<std::int64_t>(cross_edge_count(g, outer, p.quadrilaterals[i].vertex_set()));
      if (e < 9) continue;
      record(trace, "absorb_f4_quadrilateral", Target{true, i, e}, 9);
      const TwoQuadrilaterals out = absorb_f4_quadrilateral(g, p.quadrilaterals[i], f);
      p.quadrilaterals[i] = out.first;
      p.quadrilaterals.push_back(out.second);
      return finish(p);
    }
    for (std::size_t i = 0; i < p.triangles.size(); ++i) {
      const auto e = static_cast<std::int64_t>(cross_edge_count(g, outer, p.triangles[i].vertex_set()));
      if (e < 7) continue;
      record(trace, "absorb_f4_triangle_7", Target{false, i, e}, 7);
      const TrianglePlusQuadrilateral out = absorb_f4_triangle_7(g, p.triangles[i], f);
      p.triangles[i] = out.triangle;
      p.quadrilaterals.push_back(out.quadrilateral);
      return finish(p);
    }
    for (std::size_t i = 0; i < p.triangles.size(); ++i) {
      const VertexSet ts = p.triangles[i].vertex_set();
      const auto e = static_cast<std::int64_t>(cross_edge_count(g, outer, ts));
      const auto to_u3 = static_cast<std::int64_t>(degree_toward(g, f.u3, ts));
      if (!(to_u3 >= 2 || (e >= 6 && to_u3 > 0))) continue;
      // Recorded against whichever branch of the hypothesis holds.
      record(trace, "absorb_f4_triangle", Target{false, i, to_u3 >= 2 ? to_u3 : e},
             to_u3 >= 2 ? 2 : 6);
      const TrianglePlusQuadrilateral out = absorb_f4_triangle(g, p.triangles[i], f);
      p.triangles[i] = out.triangle;
      p.quadrilaterals.push_back(out.quadrilateral);
      return finish(p);
    }

    // No target: report the degree ledger the counting argument runs on.
    Ledger ledger;
    const DegreeSum s2 = sigma2(g);
    ledger["sigma2"] = s2.is_infinite() ? -1 : s2.value();
    ledger["r"] = static_cast<std::int64_t>(p.triangles.size());
    ledger["s"] = static_cast<std::int64_t>(p.quadrilaterals.size() + 1);
    ledger["degree_sum_u1_u2_2u3"] = static_cast<std::int64_t>(
        degree(g, f.u1) + degree(g, f.u2) + 2 * degree(g, f.u3));
    std::int64_t e_hq = 0;
    std::int64_t e_ht = 0;
    std::int64_t r1 = 0;
    std::int64_t r2 = 0;
    std::int64_t u3_ht = 0;
    std::int64_t u3_hq = 0;
    for (const auto& q : p.quadrilaterals) {
      e_hq += static_cast<std::int64_t>(cross_edge_count(g, outer, q.vertex_set()));
      u3_hq += static_cast<std::int64_t>(degree_toward(g, f.u3, q.vertex_set()));
    }
    for (const auto& t : p.triangles) {
      const auto e = static_cast<std::int64_t>(cross_edge_count(g, outer, t.vertex_set()));
      e_ht += e;
      (e <= 5 ? r1 : r2) += 1;
      u3_ht += static_cast<std::int64_t>(degree_toward(g, f.u3, t.vertex_set()));
    }
    ledger["e_U_HQ"] = e_hq;
    ledger["e_U_HT"] = e_ht;
    ledger["r1"] = r1;
    ledger["r2"] = r2;
    ledger["d_u3_HT"] = u3_ht;
    ledger["d_u3_HQ"] = u3_hq;
    throw SolverError("absorb", "no-absorption-target",
                      "no cycle can absorb the paw remainder; a counting bound does not hold",
                      std::move(ledger));
  });
}

Packing solve(const Graph& g, std::size_t r, std::size_t s, const SearchBudget& budget,
              SolveTrace* trace) {
  Packing p = initial_packing(g, r, s, budget);
  p = refine_remainder(g, std::move(p), trace);
  p = absorb_remainder(g, std::move(p), trace);
  if (auto why = verify_packing(g, p, r, s)) throw SolverError("solve", "invalid-output", *why);
  return p;
}

}  // namespace cyclepack
