#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace zagreb {

// Adjacency rows are single 64-bit words, so graphs are capped at 64 vertices.
inline constexpr int kMaxVertices = 64;

using EdgeList = std::vector<std::pair<int, int>>;

/// Immutable simple undirected graph. Edits produce new values, so instances
/// can be shared freely between threads.
class Graph {
 public:
  /// Builds a graph on n vertices with the given undirected edges.
  /// Duplicate pairs collapse to one edge. Throws std::invalid_argument on
  /// n out of [1,64], an out-of-range endpoint, or a self-loop.
  static Graph from_edges(int n, const EdgeList& edges);

  static Graph edgeless(int n);

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const;
  /// Neighbor set of v as a bitmask.
  std::uint64_t neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }
  int degree(int v) const;
  int min_degree() const;

  /// Edges as (u,v) pairs with u < v, ordered lexicographically.
  EdgeList edges() const;

  /// New graph with `remove` deleted and `add` inserted. Every removed pair
  /// must be a current edge and every added pair a current non-edge.
  Graph with_edits(const EdgeList& add, const EdgeList& remove) const;

  /// Subgraph induced by the vertex set `s` (nonempty), relabeled 0..|s|-1
  /// in ascending original-vertex order.
  Graph induced(const std::vector<int>& s) const;
  Graph induced(std::uint64_t vertex_mask) const;

  int component_count() const;
  bool connected() const { return component_count() == 1; }

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {}

  int n_;
  std::vector<std::uint64_t> rows_;
};

struct DegreeSequence {
  std::vector<int> degrees;  // degrees[v] = d(v), in vertex order
  std::vector<int> counts;   // counts[i] = number of vertices of degree i
};

DegreeSequence degree_sequence(const Graph& g);

/// degrees sorted ascending; convenient for isomorphism-invariant checks.
std::vector<int> sorted_degrees(const Graph& g);

}  // namespace zagreb
