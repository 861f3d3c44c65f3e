#pragma once

// Local exchange operations on small configurations (at most eight vertices).
//
// Every operation checks its hypotheses first and throws HypothesisFailure when
// they do not hold. Witnesses are found by exhaustive search over the
// configuration's vertex splits in ascending id order, so identical inputs
// always give identical witnesses.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclepack/cycle.hpp"
#include "cyclepack/graph.hpp"

namespace cyclepack {

/// Role labeling of a paw (triangle u0 u1 u2 plus pendant u3 on u0).
struct F4Config {
  Vertex u0 = 0;
  Vertex u1 = 0;
  Vertex u2 = 0;
  Vertex u3 = 0;

  /// U = {u1, u2, u3}.
  VertexSet outer() const { return VertexSet{u1, u2, u3}; }
  VertexSet vertices() const { return VertexSet{u0, u1, u2, u3}; }

  friend bool operator==(const F4Config&, const F4Config&) = default;
};

/// Unique paw labeling of d, or nullopt when G[d] is not a paw. u1 < u2.
std::optional<F4Config> label_paw(const Graph& g, const VertexSet& d);

/// nullopt when the labeling matches the paw exactly in g.
std::optional<std::string> f4_violation(const Graph& g, const F4Config& f);

struct CyclePlusEdge {
  Cycle cycle;
  Edge edge;
  Vertex attached;  ///< the one of {u, v} that the edge touches
};

struct CyclePlusPath4 {
  Cycle cycle;
  Path4 path;
  bool improved = false;  ///< cycle induces more edges than the input cycle
};

struct CyclePlusDense4 {
  Cycle cycle;
  VertexSet dense;  ///< four vertices inducing at least four edges
};

struct TwoQuadrilaterals {
  Cycle first;
  Cycle second;
};

struct TrianglePlusQuadrilateral {
  Cycle triangle;
  Cycle quadrilateral;
};

using ExchangeOutcome = std::variant<Cycle, CyclePlusEdge, CyclePlusPath4, CyclePlusDense4,
                                     TwoQuadrilaterals, TrianglePlusQuadrilateral>;

std::string_view outcome_name(const ExchangeOutcome& outcome);

/// Structural check of a witness against its host graph and configuration:
/// edges present, pieces disjoint and sized correctly, all vertices drawn from
/// `configuration`. nullopt means valid.
std::optional<std::string> outcome_violation(const Graph& g, const VertexSet& configuration,
                                             const ExchangeOutcome& outcome);

// P3 plus P2 with at least 3 cross edges contains a quadrilateral.
Cycle exchange_p3_p2(const Graph& g, std::span<const Vertex> p, std::span<const Vertex> q);

// P3 plus P3 with at least 4 cross edges contains a quadrilateral.
Cycle exchange_p3_p3(const Graph& g, std::span<const Vertex> p, std::span<const Vertex> q);

/// Quadrilateral c and non-adjacent u, v outside it with d(u,c) + d(v,c) >= 5:
/// rearranges into a quadrilateral plus a disjoint edge touching exactly one of
/// u and v. The edge is exactly the two configuration vertices the new cycle
/// leaves uncovered.
CyclePlusEdge exchange_c4_pair(const Graph& g, const Cycle& c, Vertex u, Vertex v);

/// Triangle version of exchange_c4_pair.
CyclePlusEdge exchange_c3_pair(const Graph& g, const Cycle& c, Vertex u, Vertex v);

/// Quadrilateral plus two disjoint edges with e(c, m1 ∪ m2) >= 9: quadrilateral
/// plus a disjoint P4 covering the eight vertices.
CyclePlusPath4 exchange_c4_two_edges(const Graph& g, const Cycle& c, Edge m1, Edge m2);

/// Triangle plus two disjoint edges with e(c, m1 ∪ m2) >= 9: triangle plus a
/// disjoint four-vertex set inducing at least four edges.
CyclePlusDense4 exchange_c3_two_edges(const Graph& g, const Cycle& c, Edge m1, Edge m2);

/// Quadrilateral c plus path p with e(c, p) >= 9.
///
/// The maximality hypothesis is evaluated locally: if the eight vertices hold a
/// quadrilateral inducing more edges than c together with a disjoint P4, that
/// pair is returned as an improved CyclePlusPath4. Otherwise the result is a
/// quadrilateral plus a dense four-vertex set.
std::variant<CyclePlusDense4, CyclePlusPath4> exchange_c4_p4_max(const Graph& g, const Cycle& c,
                                                                 const Path4& p);

/// What a four-vertex remainder holds.
struct NoStructure {
  friend bool operator==(const NoStructure&, const NoStructure&) = default;
};
using RemainderShape = std::variant<Cycle, F4Config, NoStructure>;

/// A quadrilateral inside d if any; else the paw labeling when G[d] has at
/// least four edges; else NoStructure.
RemainderShape detect_remainder(const Graph& g, const VertexSet& d);

/// Quadrilateral q and paw f with e(U, q) >= 9: two quadrilaterals covering all
/// eight vertices.
TwoQuadrilaterals absorb_f4_quadrilateral(const Graph& g, const Cycle& q, const F4Config& f);

/// Triangle t and paw f with d(u3, t) >= 2, or e(U, t) >= 6 and d(u3, t) > 0:
/// a triangle and a quadrilateral covering all seven vertices.
TrianglePlusQuadrilateral absorb_f4_triangle(const Graph& g, const Cycle& t, const F4Config& f);

/// Triangle t and paw f with e(U, t) >= 7. Such a count forces d(u3, t) > 0,
/// so this reduces to absorb_f4_triangle.
TrianglePlusQuadrilateral absorb_f4_triangle_7(const Graph& g, const Cycle& t,
                                               const F4Config& f);

}  // namespace cyclepack
