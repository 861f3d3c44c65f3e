#include "cyclepack/exchanges.hpp"

#include <algorithm>

#include "cyclepack/errors.hpp"

namespace cyclepack {

namespace {

void require(bool condition, const char* lemma, const std::string& detail,
             std::int64_t measured = 0, std::int64_t threshold = 0) {
  if (!condition) throw HypothesisFailure(lemma, detail, measured, threshold);
}

void require_cycle(const Graph& g, const Cycle& c, std::size_t length, const char* lemma) {
  require(c.length() == length, lemma,
          "expected a cycle of length " + std::to_string(length) + ", got " +
              std::to_string(c.length()));
  if (auto why = cycle_violation(g, c)) require(false, lemma, *why);
}

void require_edge(const Graph& g, Edge e, const char* lemma) {
  require(g.has_vertex(e.u) && g.has_vertex(e.v) && e.u != e.v && g.adjacent(e.u, e.v), lemma,
          "pair " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge");
}

void require_f4(const Graph& g, const F4Config& f, const char* lemma) {
  if (auto why = f4_violation(g, f)) require(false, lemma, *why);
}

void require_disjoint(const VertexSet& a, const VertexSet& b, const char* lemma) {
  require(a.disjoint_from(b), lemma, "configuration pieces overlap");
}

// Calls visit(chosen, rest) for every k-subset of `pool` in lexicographic
// order, stopping at the first engaged result.
template <typename Visit>
auto search_splits(const VertexSet& pool, std::size_t k, Visit visit)
    -> decltype(visit(VertexSet{}, VertexSet{})) {
  const auto& all = pool.members();
  const std::size_t n = all.size();
  if (k > n) return std::nullopt;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Vertex> chosen;
    std::vector<Vertex> rest;
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (next < k && idx[next] == i) {
        chosen.push_back(all[i]);
        ++next;
      } else {
        rest.push_back(all[i]);
      }
    }
    if (auto hit = visit(VertexSet(std::move(chosen)), VertexSet(std::move(rest)))) return hit;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return std::nullopt;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

[[noreturn]] void no_witness(const char* lemma) {
  throw WitnessNotFound(std::string(lemma) + ": hypotheses hold but no witness exists");
}

Cycle quadrilateral_in_paths(const Graph& g, std::span<const Vertex> p, std::span<const Vertex> q,
                             std::size_t q_len, std::size_t threshold, const char* lemma) {
  require(p.size() == 3, lemma, "first path must have 3 vertices");
  require(q.size() == q_len, lemma, "second path must have " + std::to_string(q_len) + " vertices");
  require(is_path_in(g, p), lemma, "first sequence is not a path of the graph");
  require(is_path_in(g, q), lemma, "second sequence is not a path of the graph");
  const VertexSet ps(std::vector<Vertex>(p.begin(), p.end()));
  const VertexSet qs(std::vector<Vertex>(q.begin(), q.end()));
  require_disjoint(ps, qs, lemma);
  const auto cross = static_cast<std::int64_t>(cross_edge_count(g, ps, qs));
  require(cross >= static_cast<std::int64_t>(threshold), lemma,
          "e(P,Q) = " + std::to_string(cross) + " < " + std::to_string(threshold), cross,
          static_cast<std::int64_t>(threshold));
  if (auto c = find_cycle(g, ps.united(qs), 4)) return *c;
  no_witness(lemma);
}

CyclePlusEdge cycle_plus_edge(const Graph& g, const Cycle& c, Vertex u, Vertex v,
                              std::size_t length, const char* lemma) {
  require_cycle(g, c, length, lemma);
  require(g.has_vertex(u) && g.has_vertex(v), lemma, "outside vertex out of range");
  require(u != v, lemma, "u and v coincide");
  const VertexSet cs = c.vertex_set();
  require(!cs.contains(u) && !cs.contains(v), lemma, "u or v lies on the cycle");
  require(!g.adjacent(u, v), lemma, "u and v are adjacent");
  const auto sum = static_cast<std::int64_t>(degree_toward(g, u, cs) + degree_toward(g, v, cs));
  require(sum >= 5, lemma, "d(u,C) + d(v,C) = " + std::to_string(sum) + " < 5", sum, 5);

  const VertexSet pool = cs.united(VertexSet{u, v});
  auto hit = search_splits(pool, 2, [&](const VertexSet& pair,
                                        const VertexSet& rest) -> std::optional<CyclePlusEdge> {
    const Vertex a = pair[0];
    const Vertex b = pair[1];
    const bool a_outer = a == u || a == v;
    const bool b_outer = b == u || b == v;
    if (a_outer == b_outer || !g.adjacent(a, b)) return std::nullopt;
    auto cycle = find_cycle(g, rest, static_cast<int>(length));
    if (!cycle) return std::nullopt;
    return CyclePlusEdge{*cycle, Edge(a, b), a_outer ? a : b};
  });
  if (!hit) no_witness(lemma);
  return *hit;
}

void require_two_edge_config(const Graph& g, const Cycle& c, Edge m1, Edge m2,
                             std::size_t length, const char* lemma) {
  require_cycle(g, c, length, lemma);
  require_edge(g, m1, lemma);
  require_edge(g, m2, lemma);
  const VertexSet cs = c.vertex_set();
  const VertexSet e1{m1.u, m1.v};
  const VertexSet e2{m2.u, m2.v};
  require_disjoint(e1, e2, lemma);
  require_disjoint(cs, e1.united(e2), lemma);
  const auto cross = static_cast<std::int64_t>(cross_edge_count(g, cs, e1.united(e2)));
  require(cross >= 9, lemma, "e(C, M1 ∪ M2) = " + std::to_string(cross) + " < 9", cross, 9);
}

}  // namespace

std::optional<F4Config> label_paw(const Graph& g, const VertexSet& d) {
  if (d.size() != 4 || induced_edge_count(g, d) != 4) return std::nullopt;
  std::vector<Vertex> twos;
  std::optional<Vertex> three;
  std::optional<Vertex> one;
  for (Vertex v : d) {
    std::size_t deg = 0;
    for (Vertex w : d)
      if (w != v && g.adjacent(v, w)) ++deg;
    if (deg == 3) three = v;
    else if (deg == 2) twos.push_back(v);
    else if (deg == 1) one = v;
    else return std::nullopt;
  }
  // Degree sequence (3,2,2,1) on four edges is exactly the paw.
  if (!three || !one || twos.size() != 2) return std::nullopt;
  return F4Config{*three, twos[0], twos[1], *one};
}

std::optional<std::string> f4_violation(const Graph& g, const F4Config& f) {
  for (Vertex v : {f.u0, f.u1, f.u2, f.u3})
    if (!g.has_vertex(v)) return "paw vertex " + std::to_string(v) + " out of range";
  std::vector<Vertex> ids{f.u0, f.u1, f.u2, f.u3};
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return "paw roles repeat a vertex";
  const std::pair<Vertex, Vertex> present[] = {{f.u0, f.u1}, {f.u0, f.u2}, {f.u0, f.u3}, {f.u1, f.u2}};
  for (auto [a, b] : present)
    if (!g.adjacent(a, b))
      return "paw edge " + std::to_string(a) + "-" + std::to_string(b) + " missing";
  if (g.adjacent(f.u1, f.u3) || g.adjacent(f.u2, f.u3)) return "u3 is adjacent to u1 or u2";
  return std::nullopt;
}

std::string_view outcome_name(const ExchangeOutcome& outcome) {
  struct Namer {
    std::string_view operator()(const Cycle&) const { return "cycle"; }
    std::string_view operator()(const CyclePlusEdge&) const { return "cycle+edge"; }
    std::string_view operator()(const CyclePlusPath4& o) const {
      return o.improved ? "cycle+path4(improved)" : "cycle+path4";
    }
    std::string_view operator()(const CyclePlusDense4&) const { return "cycle+dense4"; }
    std::string_view operator()(const TwoQuadrilaterals&) const { return "two-quadrilaterals"; }
    std::string_view operator()(const TrianglePlusQuadrilateral&) const {
      return "triangle+quadrilateral";
    }
  };
  return std::visit(Namer{}, outcome);
}

namespace {

std::optional<std::string> cover_violation(const VertexSet& configuration,
                                           const std::vector<Vertex>& used) {
  std::vector<Vertex> sorted = used;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return std::string("witness pieces are not disjoint");
  }
  if (sorted != configuration.members()) {
    return std::string("witness does not cover the configuration exactly");
  }
  return std::nullopt;
}

void append(std::vector<Vertex>& out, const Cycle& c) {
  out.insert(out.end(), c.vertices().begin(), c.vertices().end());
}

}  // namespace

std::optional<std::string> outcome_violation(const Graph& g, const VertexSet& configuration,
                                             const ExchangeOutcome& outcome) {
  struct Checker {
    const Graph& g;
    const VertexSet& config;

    std::optional<std::string> operator()(const Cycle& c) const {
      if (auto why = cycle_violation(g, c)) return why;
      for (Vertex v : c.vertices())
        if (!config.contains(v)) return "cycle leaves the configuration";
      return std::nullopt;
    }
    std::optional<std::string> operator()(const CyclePlusEdge& o) const {
      if (auto why = cycle_violation(g, o.cycle)) return why;
      if (!g.has_vertex(o.edge.u) || !g.has_vertex(o.edge.v) || !g.adjacent(o.edge.u, o.edge.v))
        return "missing edge in witness";
      if (o.attached != o.edge.u && o.attached != o.edge.v) return "attached vertex not on edge";
      std::vector<Vertex> used;
      append(used, o.cycle);
      used.push_back(o.edge.u);
      used.push_back(o.edge.v);
      return cover_violation(config, used);
    }
    std::optional<std::string> operator()(const CyclePlusPath4& o) const {
      if (auto why = cycle_violation(g, o.cycle)) return why;
      if (!is_path_in(g, o.path)) return "path witness is not a path";
      std::vector<Vertex> used;
      append(used, o.cycle);
      used.insert(used.end(), o.path.begin(), o.path.end());
      return cover_violation(config, used);
    }
    std::optional<std::string> operator()(const CyclePlusDense4& o) const {
      if (auto why = cycle_violation(g, o.cycle)) return why;
      if (o.dense.size() != 4) return "dense set must have four vertices";
      for (Vertex v : o.dense)
        if (!g.has_vertex(v)) return "dense vertex out of range";
      if (induced_edge_count(g, o.dense) < 4) return "dense set induces fewer than four edges";
      std::vector<Vertex> used;
      append(used, o.cycle);
      used.insert(used.end(), o.dense.begin(), o.dense.end());
      return cover_violation(config, used);
    }
    std::optional<std::string> operator()(const TwoQuadrilaterals& o) const {
      if (o.first.length() != 4 || o.second.length() != 4) return "expected two quadrilaterals";
      if (auto why = cycle_violation(g, o.first)) return why;
      if (auto why = cycle_violation(g, o.second)) return why;
      std::vector<Vertex> used;
      append(used, o.first);
      append(used, o.second);
      return cover_violation(config, used);
    }
    std::optional<std::string> operator()(const TrianglePlusQuadrilateral& o) const {
      if (o.triangle.length() != 3 || o.quadrilateral.length() != 4)
        return "expected a triangle and a quadrilateral";
      if (auto why = cycle_violation(g, o.triangle)) return why;
      if (auto why = cycle_violation(g, o.quadrilateral)) return why;
      std::vector<Vertex> used;
      append(used, o.triangle);
      append(used, o.quadrilateral);
      return cover_violation(config, used);
    }
  };
  return std::visit(Checker{g, configuration}, outcome);
}

Cycle exchange_p3_p2(const Graph& g, std::span<const Vertex> p, std::span<const Vertex> q) {
  return quadrilateral_in_paths(g, p, q, 2, 3, "exchange_p3_p2");
}

Cycle exchange_p3_p3(const Graph& g, std::span<const Vertex> p, std::span<const Vertex> q) {
  return quadrilateral_in_paths(g, p, q, 3, 4, "exchange_p3_p3");
}

CyclePlusEdge exchange_c4_pair(const Graph& g, const Cycle& c, Vertex u, Vertex v) {
  return cycle_plus_edge(g, c, u, v, 4, "exchange_c4_pair");
}

CyclePlusEdge exchange_c3_pair(const Graph& g, const Cycle& c, Vertex u, Vertex v) {
  return cycle_plus_edge(g, c, u, v, 3, "exchange_c3_pair");
}

CyclePlusPath4 exchange_c4_two_edges(const Graph& g, const Cycle& c, Edge m1, Edge m2) {
  constexpr const char* lemma = "exchange_c4_two_edges";
  require_two_edge_config(g, c, m1, m2, 4, lemma);
  const VertexSet pool = c.vertex_set().united(VertexSet{m1.u, m1.v, m2.u, m2.v});
  auto hit = search_splits(pool, 4, [&](const VertexSet& s,
                                        const VertexSet& rest) -> std::optional<CyclePlusPath4> {
    auto cycle = find_cycle(g, s, 4);
    if (!cycle) return std::nullopt;
    auto path = find_path4(g, rest);
    if (!path) return std::nullopt;
    return CyclePlusPath4{*cycle, *path, false};
  });
  if (!hit) no_witness(lemma);
  return *hit;
}

CyclePlusDense4 exchange_c3_two_edges(const Graph& g, const Cycle& c, Edge m1, Edge m2) {
  constexpr const char* lemma = "exchange_c3_two_edges";
  require_two_edge_config(g, c, m1, m2, 3, lemma);
  const VertexSet pool = c.vertex_set().united(VertexSet{m1.u, m1.v, m2.u, m2.v});
  auto hit = search_splits(pool, 3, [&](const VertexSet& s,
                                        const VertexSet& rest) -> std::optional<CyclePlusDense4> {
    if (induced_edge_count(g, rest) < 4) return std::nullopt;
    auto cycle = find_cycle(g, s, 3);
    if (!cycle) return std::nullopt;
    return CyclePlusDense4{*cycle, rest};
  });
  if (!hit) no_witness(lemma);
  return *hit;
}

std::variant<CyclePlusDense4, CyclePlusPath4> exchange_c4_p4_max(const Graph& g, const Cycle& c,
                                                                 const Path4& p) {
  constexpr const char* lemma = "exchange_c4_p4_max";
  require_cycle(g, c, 4, lemma);
  require(is_path_in(g, p), lemma, "P is not a path of the graph");
  const VertexSet cs = c.vertex_set();
  const VertexSet ps{p[0], p[1], p[2], p[3]};
  require_disjoint(cs, ps, lemma);
  const auto cross = static_cast<std::int64_t>(cross_edge_count(g, cs, ps));
  require(cross >= 9, lemma, "e(C,P) = " + std::to_string(cross) + " < 9", cross, 9);

  const std::size_t base = induced_edge_count(g, cs);
  const VertexSet pool = cs.united(ps);
  auto better = search_splits(pool, 4, [&](const VertexSet& s,
                                           const VertexSet& rest) -> std::optional<CyclePlusPath4> {
    if (induced_edge_count(g, s) <= base) return std::nullopt;
    auto cycle = find_cycle(g, s, 4);
    if (!cycle) return std::nullopt;
    auto path = find_path4(g, rest);
    if (!path) return std::nullopt;
    return CyclePlusPath4{*cycle, *path, true};
  });
  if (better) return *better;

  auto dense = search_splits(pool, 4, [&](const VertexSet& s,
                                          const VertexSet& rest) -> std::optional<CyclePlusDense4> {
    if (induced_edge_count(g, rest) < 4) return std::nullopt;
    auto cycle = find_cycle(g, s, 4);
    if (!cycle) return std::nullopt;
    return CyclePlusDense4{*cycle, rest};
  });
  if (!dense) no_witness(lemma);
  return *dense;
}

RemainderShape detect_remainder(const Graph& g, const VertexSet& d) {
  if (d.size() != 4) throw GraphError("detect_remainder: remainder must have four vertices");
  if (auto c = find_cycle(g, d, 4)) return *c;
  if (induced_edge_count(g, d) >= 4) {
    // Four or more edges without a quadrilateral leaves only the paw.
    if (auto f = label_paw(g, d)) return *f;
    throw std::logic_error("detect_remainder: dense remainder is neither C4 nor paw");
  }
  return NoStructure{};
}

TwoQuadrilaterals absorb_f4_quadrilateral(const Graph& g, const Cycle& q, const F4Config& f) {
  constexpr const char* lemma = "absorb_f4_quadrilateral";
  require_cycle(g, q, 4, lemma);
  require_f4(g, f, lemma);
  const VertexSet qs = q.vertex_set();
  require_disjoint(qs, f.vertices(), lemma);
  const auto cross = static_cast<std::int64_t>(cross_edge_count(g, f.outer(), qs));
  require(cross >= 9, lemma, "e(U,Q) = " + std::to_string(cross) + " < 9", cross, 9);

  const VertexSet pool = qs.united(f.vertices());
  auto hit = search_splits(pool, 4, [&](const VertexSet& s,
                                        const VertexSet& rest) -> std::optional<TwoQuadrilaterals> {
    auto first = find_cycle(g, s, 4);
    if (!first) return std::nullopt;
    auto second = find_cycle(g, rest, 4);
    if (!second) return std::nullopt;
    return TwoQuadrilaterals{*first, *second};
  });
  if (!hit) no_witness(lemma);
  return *hit;
}

TrianglePlusQuadrilateral absorb_f4_triangle(const Graph& g, const Cycle& t, const F4Config& f) {
  constexpr const char* lemma = "absorb_f4_triangle";
  require_cycle(g, t, 3, lemma);
  require_f4(g, f, lemma);
  const VertexSet ts = t.vertex_set();
  require_disjoint(ts, f.vertices(), lemma);
  const auto to_u3 = static_cast<std::int64_t>(degree_toward(g, f.u3, ts));
  const auto cross = static_cast<std::int64_t>(cross_edge_count(g, f.outer(), ts));
  require(to_u3 >= 2 || (cross >= 6 && to_u3 > 0), lemma,
          "d(u3,T) = " + std::to_string(to_u3) + ", e(U,T) = " + std::to_string(cross), cross, 6);

  const VertexSet pool = ts.united(f.vertices());
  auto hit = search_splits(
      pool, 3, [&](const VertexSet& s, const VertexSet& rest) -> std::optional<TrianglePlusQuadrilateral> {
        auto tri = find_cycle(g, s, 3);
        if (!tri) return std::nullopt;
        auto quad = find_cycle(g, rest, 4);
        if (!quad) return std::nullopt;
        return TrianglePlusQuadrilateral{*tri, *quad};
      });
  if (!hit) no_witness(lemma);
  return *hit;
}

TrianglePlusQuadrilateral absorb_f4_triangle_7(const Graph& g, const Cycle& t,
                                               const F4Config& f) {
  constexpr const char* lemma = "absorb_f4_triangle_7";
  require_cycle(g, t, 3, lemma);
  require_f4(g, f, lemma);
  const VertexSet ts = t.vertex_set();
  require_disjoint(ts, f.vertices(), lemma);
  const auto cross = static_cast<std::int64_t>(cross_edge_count(g, f.outer(), ts));
  require(cross >= 7, lemma, "e(U,T) = " + std::to_string(cross) + " < 7", cross, 7);
  return absorb_f4_triangle(g, t, f);
}

}  // namespace cyclepack
