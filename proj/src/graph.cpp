#include "zagreb/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace zagreb {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void check_pair(int n, int u, int v) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("vertex out of range: (" + std::to_string(u) +
                                "," + std::to_string(v) + ") with n=" +
                                std::to_string(n));
  if (u == v)
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

}  // namespace

Graph Graph::edgeless(int n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of bounds: " +
                                std::to_string(n));
  return Graph(n);
}

Graph Graph::from_edges(int n, const EdgeList& edges) {
  Graph g = edgeless(n);
  for (auto [u, v] : edges) {
    check_pair(n, u, v);
    g.rows_[static_cast<size_t>(u)] |= bit(v);
    g.rows_[static_cast<size_t>(v)] |= bit(u);
  }
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (auto row : rows_) total += std::popcount(row);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_pair(n_, u, v);
  return (rows_[static_cast<size_t>(u)] & bit(v)) != 0;
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  return std::popcount(rows_[static_cast<size_t>(v)]);
}

int Graph::min_degree() const {
  int d = n_;
  for (auto row : rows_) d = std::min(d, std::popcount(row));
  return d;
}

EdgeList Graph::edges() const {
  EdgeList out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = rows_[static_cast<size_t>(u)] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph Graph::with_edits(const EdgeList& add, const EdgeList& remove) const {
  Graph g = *this;
  for (auto [u, v] : remove) {
    check_pair(n_, u, v);
    if (!(g.rows_[static_cast<size_t>(u)] & bit(v)))
      throw std::invalid_argument("cannot remove non-edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    g.rows_[static_cast<size_t>(u)] &= ~bit(v);
    g.rows_[static_cast<size_t>(v)] &= ~bit(u);
  }
  for (auto [u, v] : add) {
    check_pair(n_, u, v);
    if (g.rows_[static_cast<size_t>(u)] & bit(v))
      throw std::invalid_argument("cannot add existing edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    g.rows_[static_cast<size_t>(u)] |= bit(v);
    g.rows_[static_cast<size_t>(v)] |= bit(u);
  }
  return g;
}

Graph Graph::induced(std::uint64_t vertex_mask) const {
  if (vertex_mask == 0)
    throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
  if (n_ < kMaxVertices && (vertex_mask >> n_) != 0)
    throw std::invalid_argument("vertex set contains out-of-range vertices");

  std::vector<int> verts;
  std::uint64_t m = vertex_mask;
  while (m) {
    verts.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  Graph g = edgeless(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (rows_[static_cast<size_t>(verts[i])] & bit(verts[j])) {
        g.rows_[i] |= bit(static_cast<int>(j));
        g.rows_[j] |= bit(static_cast<int>(i));
      }
  return g;
}

Graph Graph::induced(const std::vector<int>& s) const {
  std::uint64_t mask = 0;
  for (int v : s) {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    mask |= bit(v);
  }
  return induced(mask);
}

int Graph::component_count() const {
  std::uint64_t seen = 0;
  const std::uint64_t all =
      (n_ == kMaxVertices) ? ~std::uint64_t{0} : (bit(n_) - 1);
  int components = 0;
  while (seen != all) {
    int start = std::countr_zero(~seen);
    std::uint64_t frontier = bit(start);
    std::uint64_t reached = frontier;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= rows_[static_cast<size_t>(v)];
      }
      frontier = next & ~reached;
      reached |= frontier;
    }
    seen |= reached;
    ++components;
  }
  return components;
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence ds;
  const int n = g.vertex_count();
  ds.degrees.reserve(static_cast<size_t>(n));
  ds.counts.assign(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    ds.degrees.push_back(d);
    ++ds.counts[static_cast<size_t>(d)];
  }
  return ds;
}

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d = degree_sequence(g).degrees;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace zagreb
