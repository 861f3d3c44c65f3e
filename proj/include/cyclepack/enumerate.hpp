#pragma once

#include <cstdint>
#include <optional>

#include "cyclepack/graph.hpp"

namespace cyclepack {

/// Every labeled simple graph on n vertices, in cursor order. Bit i of the
/// cursor is the i-th pair in lexicographic order (0,1), (0,2), ..., (n-2,n-1).
class EnumerationStream {
 public:
  static constexpr int kMaxOrder = 8;

  /// Throws GraphError when n exceeds kMaxOrder.
  explicit EnumerationStream(int n);
  /// Restricts the stream to cursors [begin, end) for sharding.
  EnumerationStream(int n, std::uint64_t begin, std::uint64_t end);

  std::optional<Graph> next();

  int order() const { return n_; }
  std::uint64_t cursor() const { return cursor_; }
  /// 2^(n(n-1)/2).
  std::uint64_t total() const { return total_; }

  static Graph decode(int n, std::uint64_t code);

 private:
  int n_;
  std::uint64_t total_;
  std::uint64_t cursor_;
  std::uint64_t end_;
};

EnumerationStream enumerate_labeled_graphs(int n);

}  // namespace cyclepack
