#include "cyclepack/edge_list.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "cyclepack/errors.hpp"

namespace cyclepack {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long number(std::string_view token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    last_line = line_no;
    if (toks.size() != 2) {
      throw ParseError(line_no, header ? "edge line must hold exactly two ids"
                                       : "malformed header: expected 'n m'");
    }
    if (!header) {
      const long long n = number(toks[0], line_no);
      const long long m = number(toks[1], line_no);
      if (n > 1'000'000) throw ParseError(line_no, "malformed header: vertex count too large");
      header.emplace(n, m);
      continue;
    }
    const long long n = header->first;
    const long long u = number(toks[0], line_no);
    const long long v = number(toks[1], line_no);
    if (u >= n || v >= n) {
      throw ParseError(line_no, "vertex id out of range for n = " + std::to_string(n));
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    if (static_cast<long long>(edges.size()) == header->second) {
      throw ParseError(line_no, "edge count mismatch: header declares " +
                                    std::to_string(header->second) + " edges");
    }
    edges.push_back(e);
  }
  if (!header) throw ParseError(line_no, "malformed header: missing 'n m' line");
  if (static_cast<long long>(edges.size()) != header->second) {
    throw ParseError(last_line, "edge count mismatch: header declares " +
                                    std::to_string(header->second) + " edges, found " +
                                    std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(header->first), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

}  // namespace cyclepack
