#include "cyclepack/gadgets.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "cyclepack/errors.hpp"

namespace cyclepack {

namespace {

struct Layout {
  std::string_view name;
  int order;
  std::vector<Edge> internal;
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  int threshold;
};

const Layout& layout(Lemma lemma) {
  static const std::array<Layout, 10> table = {{
      {"p3p2", 5, {{0, 1}, {1, 2}, {3, 4}}, {0, 1, 2}, {3, 4}, 3},
      {"p3p3", 6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}, {0, 1, 2}, {3, 4, 5}, 4},
      {"c4pair", 6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {0, 1, 2, 3}, {4, 5}, 5},
      {"c3pair", 5, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2}, {3, 4}, 5},
      {"c4edges", 8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {6, 7}}, {0, 1, 2, 3}, {4, 5, 6, 7}, 9},
      {"c3edges", 7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {5, 6}}, {0, 1, 2}, {3, 4, 5, 6}, 9},
      {"c4p4max", 8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}}, {0, 1, 2, 3}, {4, 5, 6, 7}, 9},
      {"f4quad", 8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}}, {0, 1, 2, 3}, {5, 6, 7}, 9},
      {"f4tri", 7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 5}, {3, 6}, {4, 5}}, {0, 1, 2}, {4, 5, 6}, 6},
      {"f4tri7", 7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 5}, {3, 6}, {4, 5}}, {0, 1, 2}, {4, 5, 6}, 7},
  }};
  return table[static_cast<std::size_t>(lemma)];
}

constexpr std::array<Lemma, 10> kLemmas = {Lemma::P3P2,    Lemma::P3P3,    Lemma::C4Pair,
                                           Lemma::C3Pair,  Lemma::C4Edges, Lemma::C3Edges,
                                           Lemma::C4P4Max, Lemma::F4Quad,  Lemma::F4Tri,
                                           Lemma::F4Tri7};

// d(u3, T) in the paw gadgets: u3 is the last second-structure vertex, so its
// pairs are bits 2, 5, 8 (one per triangle vertex).
int u3_degree(std::uint32_t pattern) {
  return static_cast<int>((pattern >> 2 & 1) + (pattern >> 5 & 1) + (pattern >> 8 & 1));
}

F4Config paw_roles(Lemma lemma) {
  return lemma == Lemma::F4Quad ? F4Config{4, 5, 6, 7} : F4Config{3, 4, 5, 6};
}

}  // namespace

std::span<const Lemma> all_lemmas() { return kLemmas; }

std::string_view lemma_name(Lemma lemma) { return layout(lemma).name; }

std::optional<Lemma> parse_lemma(std::string_view name) {
  for (Lemma l : kLemmas)
    if (lemma_name(l) == name) return l;
  return std::nullopt;
}

int default_threshold(Lemma lemma) { return layout(lemma).threshold; }

std::size_t gadget_order(Lemma lemma) { return static_cast<std::size_t>(layout(lemma).order); }

std::size_t cross_pair_count(Lemma lemma) {
  const Layout& l = layout(lemma);
  return l.first.size() * l.second.size();
}

Gadget build_gadget(Lemma lemma, std::uint32_t pattern) {
  const Layout& l = layout(lemma);
  std::vector<Edge> edges = l.internal;
  std::size_t bit = 0;
  std::size_t cross = 0;
  for (Vertex a : l.first)
    for (Vertex b : l.second) {
      if (pattern >> bit & 1) {
        edges.emplace_back(a, b);
        ++cross;
      }
      ++bit;
    }
  return Gadget{lemma, Graph(l.order, edges), pattern, cross};
}

bool gadget_admissible(Lemma lemma, std::uint32_t pattern, int threshold) {
  const int cross = std::popcount(pattern);
  if (lemma == Lemma::F4Tri) {
    const int to_u3 = u3_degree(pattern);
    return to_u3 >= 2 || (cross >= threshold && to_u3 > 0);
  }
  return cross >= threshold;
}

GadgetStream::GadgetStream(Lemma lemma, std::optional<int> threshold)
    : lemma_(lemma),
      threshold_(threshold.value_or(default_threshold(lemma))),
      end_(std::uint64_t{1} << cross_pair_count(lemma)) {}

std::optional<Gadget> GadgetStream::next() {
  while (pattern_ < end_) {
    const auto pattern = static_cast<std::uint32_t>(pattern_++);
    if (gadget_admissible(lemma_, pattern, threshold_)) return build_gadget(lemma_, pattern);
  }
  return std::nullopt;
}

GadgetStream enumerate_lemma_gadgets(Lemma lemma, std::optional<int> threshold) {
  return GadgetStream(lemma, threshold);
}

ExchangeOutcome run_gadget(const Gadget& gadget) {
  const Graph& g = gadget.graph;
  switch (gadget.lemma) {
    case Lemma::P3P2: {
      const Vertex p[] = {0, 1, 2};
      const Vertex q[] = {3, 4};
      return exchange_p3_p2(g, p, q);
    }
    case Lemma::P3P3: {
      const Vertex p[] = {0, 1, 2};
      const Vertex q[] = {3, 4, 5};
      return exchange_p3_p3(g, p, q);
    }
    case Lemma::C4Pair: return exchange_c4_pair(g, Cycle{0, 1, 2, 3}, 4, 5);
    case Lemma::C3Pair: return exchange_c3_pair(g, Cycle{0, 1, 2}, 3, 4);
    case Lemma::C4Edges: return exchange_c4_two_edges(g, Cycle{0, 1, 2, 3}, Edge(4, 5), Edge(6, 7));
    case Lemma::C3Edges: return exchange_c3_two_edges(g, Cycle{0, 1, 2}, Edge(3, 4), Edge(5, 6));
    case Lemma::C4P4Max: {
      auto out = exchange_c4_p4_max(g, Cycle{0, 1, 2, 3}, Path4{4, 5, 6, 7});
      return std::visit([](auto&& o) -> ExchangeOutcome { return o; }, out);
    }
    case Lemma::F4Quad: return absorb_f4_quadrilateral(g, Cycle{0, 1, 2, 3}, paw_roles(gadget.lemma));
    case Lemma::F4Tri: return absorb_f4_triangle(g, Cycle{0, 1, 2}, paw_roles(gadget.lemma));
    case Lemma::F4Tri7: return absorb_f4_triangle_7(g, Cycle{0, 1, 2}, paw_roles(gadget.lemma));
  }
  throw std::logic_error("unknown lemma");
}

GadgetVerdict check_gadget(const Gadget& gadget) {
  GadgetVerdict verdict;
  std::optional<ExchangeOutcome> outcome;
  try {
    outcome = run_gadget(gadget);
  } catch (const HypothesisFailure& e) {
    verdict.detail = e.what();
    return verdict;
  } catch (const WitnessNotFound& e) {
    verdict.detail = e.what();
    return verdict;
  }

  const Graph& g = gadget.graph;
  if (auto why = outcome_violation(g, g.vertex_set(), *outcome)) {
    verdict.detail = *why;
    return verdict;
  }

  auto fail = [&](std::string why) {
    verdict.detail = std::move(why);
    return verdict;
  };
  switch (gadget.lemma) {
    case Lemma::P3P2:
    case Lemma::P3P3: {
      const auto* c = std::get_if<Cycle>(&*outcome);
      if (!c || c->length() != 4) return fail("expected a quadrilateral");
      break;
    }
    case Lemma::C4Pair:
    case Lemma::C3Pair: {
      const auto* o = std::get_if<CyclePlusEdge>(&*outcome);
      const std::size_t len = gadget.lemma == Lemma::C4Pair ? 4 : 3;
      if (!o || o->cycle.length() != len) return fail("expected cycle plus edge");
      const Vertex u = static_cast<Vertex>(len);
      const Vertex v = u + 1;
      const Vertex other = o->attached == o->edge.u ? o->edge.v : o->edge.u;
      if ((o->attached != u && o->attached != v) || other == u || other == v)
        return fail("edge must touch exactly one of u and v");
      break;
    }
    case Lemma::C4Edges: {
      const auto* o = std::get_if<CyclePlusPath4>(&*outcome);
      if (!o || o->cycle.length() != 4) return fail("expected quadrilateral plus P4");
      break;
    }
    case Lemma::C3Edges: {
      const auto* o = std::get_if<CyclePlusDense4>(&*outcome);
      if (!o || o->cycle.length() != 3) return fail("expected triangle plus dense set");
      break;
    }
    case Lemma::C4P4Max: {
      if (const auto* o = std::get_if<CyclePlusPath4>(&*outcome)) {
        if (!o->improved) return fail("path outcome not flagged as improvement");
        const std::size_t before = induced_edge_count(g, VertexSet{0, 1, 2, 3});
        if (induced_edge_count(g, o->cycle.vertex_set()) <= before)
          return fail("improvement does not increase the induced edge count");
        verdict.improved = true;
      } else {
        const auto* d = std::get_if<CyclePlusDense4>(&*outcome);
        if (!d || d->cycle.length() != 4) return fail("expected quadrilateral plus dense set");
      }
      break;
    }
    case Lemma::F4Quad:
      if (!std::holds_alternative<TwoQuadrilaterals>(*outcome)) return fail("expected 2 C4");
      break;
    case Lemma::F4Tri:
    case Lemma::F4Tri7:
      if (!std::holds_alternative<TrianglePlusQuadrilateral>(*outcome))
        return fail("expected C3 plus C4");
      break;
  }
  verdict.witnessed = true;
  return verdict;
}

}  // namespace cyclepack
