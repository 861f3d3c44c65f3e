#include "cyclepack/enumerate.hpp"

#include <algorithm>
#include <vector>

#include "cyclepack/errors.hpp"

namespace cyclepack {

namespace {

std::uint64_t labeled_count(int n) {
  if (n < 0 || n > EnumerationStream::kMaxOrder) {
    throw GraphError("exhaustive enumeration supports at most " +
                     std::to_string(EnumerationStream::kMaxOrder) + " vertices");
  }
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

}  // namespace

EnumerationStream::EnumerationStream(int n) : EnumerationStream(n, 0, labeled_count(n)) {}

EnumerationStream::EnumerationStream(int n, std::uint64_t begin, std::uint64_t end)
    : n_(n), total_(labeled_count(n)), cursor_(begin), end_(std::min(end, total_)) {}

std::optional<Graph> EnumerationStream::next() {
  if (cursor_ >= end_) return std::nullopt;
  return decode(n_, cursor_++);
}

Graph EnumerationStream::decode(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b, ++bit)
      if (code >> bit & 1) edges.emplace_back(a, b);
  return Graph(n, edges);
}

EnumerationStream enumerate_labeled_graphs(int n) { return EnumerationStream(n); }

}  // namespace cyclepack
