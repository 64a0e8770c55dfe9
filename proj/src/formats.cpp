#include "zagreb/formats.hpp"

#include <istream>
#include <sstream>

namespace zagreb {

namespace {

constexpr int kG6Offset = 63;

void append_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else {
    // 18-bit size, big-endian in three 6-bit groups after '~'.
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Offset));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Offset));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Offset));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  append_size(out, n);
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kG6Offset));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0)
    out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Offset));
  return out;
}

Graph from_graph6(std::string_view token) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= token.size())
      throw std::invalid_argument("graph6 token truncated");
    unsigned char c = static_cast<unsigned char>(token[pos++]);
    if (c < kG6Offset || c > 126)
      throw std::invalid_argument("graph6 byte out of range at offset " +
                                  std::to_string(pos - 1));
    return c - kG6Offset;
  };

  int n = next();
  if (n == 63) {
    int a = next(), b = next(), c = next();
    if (a == 63)
      throw std::invalid_argument("graph6 sizes above 258047 not supported");
    n = (a << 12) | (b << 6) | c;
  }
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph6 vertex count out of bounds: " +
                                std::to_string(n));

  EdgeList edges;
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if (acc & (1 << (nbits - 1))) edges.emplace_back(u, v);
      --nbits;
    }
  if (pos != token.size())
    throw std::invalid_argument("trailing bytes after graph6 token");
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

Graph parse_edge_list(std::istream& in, int base_line) {
  std::string line;
  int lineno = base_line;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(lineno, msg);
  };

  if (!std::getline(in, line)) throw fail("missing \"n m\" header");
  ++lineno;
  std::istringstream header(line);
  long long n = 0, m = 0;
  if (!(header >> n >> m)) throw fail("header must be \"n m\"");
  std::string rest;
  if (header >> rest) throw fail("unexpected token after \"n m\": " + rest);
  if (n < 1 || n > kMaxVertices)
    throw fail("vertex count out of bounds: " + std::to_string(n));
  if (m < 0 || m > n * (n - 1) / 2)
    throw fail("edge count out of bounds: " + std::to_string(m));

  EdgeList edges;
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                       " edge lines, got " + std::to_string(i));
    ++lineno;
    std::istringstream es(line);
    long long u = 0, v = 0;
    if (!(es >> u >> v)) throw fail("edge line must be \"u v\"");
    if (es >> rest) throw fail("unexpected token after edge: " + rest);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw fail("edge endpoint out of range");
    if (u == v) throw fail("self-loop not allowed");
    if (u > v) throw fail("edges must satisfy u < v");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw fail("unexpected content after the declared edges");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, 0);
}

std::vector<Graph> read_graphs(std::istream& in, FileFormat format) {
  std::vector<Graph> out;
  if (format == FileFormat::edge_list) {
    out.push_back(parse_edge_list(in, 0));
    return out;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return out;
}

}  // namespace zagreb
