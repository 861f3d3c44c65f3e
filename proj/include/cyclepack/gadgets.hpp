#pragma once

// Lemma gadgets: the fixed small configuration of each exchange lemma with
// every admissible set of cross edges between its two structures.
//
// Vertex layouts (only the listed internal edges are present):
//   p3p2     P = 0-1-2, Q = 3-4
//   p3p3     P = 0-1-2, Q = 3-4-5
//   c4pair   C = 0-1-2-3, u = 4, v = 5
//   c3pair   C = 0-1-2, u = 3, v = 4
//   c4edges  C = 0-1-2-3, M1 = 4-5, M2 = 6-7
//   c3edges  C = 0-1-2, M1 = 3-4, M2 = 5-6
//   c4p4max  C = 0-1-2-3, P = 4-5-6-7
//   f4quad   Q = 0-1-2-3, paw u0 = 4, u1 = 5, u2 = 6, u3 = 7
//   f4tri    T = 0-1-2, paw u0 = 3, u1 = 4, u2 = 5, u3 = 6
//   f4tri7   as f4tri
// Cross pairs run over (first structure) x (second structure), both ascending,
// first-structure vertex major; bit i of a pattern is the i-th such pair. For
// the paw lemmas the second structure is U = {u1, u2, u3}.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclepack/exchanges.hpp"
#include "cyclepack/graph.hpp"

namespace cyclepack {

enum class Lemma { P3P2, P3P3, C4Pair, C3Pair, C4Edges, C3Edges, C4P4Max, F4Quad, F4Tri, F4Tri7 };

std::span<const Lemma> all_lemmas();
std::string_view lemma_name(Lemma lemma);
std::optional<Lemma> parse_lemma(std::string_view name);

/// Hypothesis threshold on the cross-edge count (for f4tri, the e(U,T) branch).
int default_threshold(Lemma lemma);
std::size_t gadget_order(Lemma lemma);
std::size_t cross_pair_count(Lemma lemma);

struct Gadget {
  Lemma lemma;
  Graph graph;
  std::uint32_t pattern = 0;
  std::size_t cross_edges = 0;
};

/// Host graph for one cross-edge pattern (no hypothesis filtering).
Gadget build_gadget(Lemma lemma, std::uint32_t pattern);

/// True when the pattern satisfies the lemma's hypothesis at `threshold`.
bool gadget_admissible(Lemma lemma, std::uint32_t pattern, int threshold);

/// All admissible patterns of a lemma in ascending pattern order.
class GadgetStream {
 public:
  explicit GadgetStream(Lemma lemma, std::optional<int> threshold = std::nullopt);

  std::optional<Gadget> next();

 private:
  Lemma lemma_;
  int threshold_;
  std::uint64_t pattern_ = 0;
  std::uint64_t end_;
};

GadgetStream enumerate_lemma_gadgets(Lemma lemma, std::optional<int> threshold = std::nullopt);

/// Runs the lemma's exchange operation on the gadget's configuration.
ExchangeOutcome run_gadget(const Gadget& gadget);

struct GadgetVerdict {
  bool witnessed = false;
  bool improved = false;  ///< c4p4max returned a denser quadrilateral
  std::string detail;     ///< failure reason when not witnessed
};

/// Runs the gadget and checks the outcome: structural validity, the
/// lemma-specific shape, and for c4p4max that an improvement really induces
/// more edges than the input quadrilateral.
GadgetVerdict check_gadget(const Gadget& gadget);

}  // namespace cyclepack
