#include "zagreb/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace zagreb {

namespace {

// Max flow by BFS augmentation on a dense residual matrix. Node counts stay
// at most 2*kMaxVertices and flow values at most n, so this is plenty.
class DenseFlow {
 public:
  explicit DenseFlow(int nodes) : nodes_(nodes), cap_(static_cast<size_t>(nodes) * nodes, 0) {}

  int& cap(int u, int v) { return cap_[static_cast<size_t>(u) * nodes_ + v]; }

  int max_flow(int s, int t) {
    int flow = 0;
    std::vector<int> parent(static_cast<size_t>(nodes_));
    while (true) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[static_cast<size_t>(s)] = s;
      std::vector<int> queue{s};
      for (size_t qi = 0; qi < queue.size() && parent[static_cast<size_t>(t)] < 0; ++qi) {
        int u = queue[qi];
        for (int v = 0; v < nodes_; ++v)
          if (parent[static_cast<size_t>(v)] < 0 && cap(u, v) > 0) {
            parent[static_cast<size_t>(v)] = u;
            queue.push_back(v);
          }
      }
      if (parent[static_cast<size_t>(t)] < 0) return flow;
      int bottleneck = nodes_;
      for (int v = t; v != s; v = parent[static_cast<size_t>(v)])
        bottleneck = std::min(bottleneck, cap(parent[static_cast<size_t>(v)], v));
      for (int v = t; v != s; v = parent[static_cast<size_t>(v)]) {
        cap(parent[static_cast<size_t>(v)], v) -= bottleneck;
        cap(v, parent[static_cast<size_t>(v)]) += bottleneck;
      }
      flow += bottleneck;
    }
  }

 private:
  int nodes_;
  std::vector<int> cap_;
};

int edge_flow(const Graph& g, int s, int t) {
  const int n = g.vertex_count();
  DenseFlow f(n);
  for (auto [u, v] : g.edges()) {
    f.cap(u, v) = 1;
    f.cap(v, u) = 1;
  }
  return f.max_flow(s, t);
}

// Internally-disjoint s-t paths via the vertex-split network: v becomes
// v_in = 2v and v_out = 2v+1 with a unit arc between them.
int vertex_flow(const Graph& g, int s, int t) {
  const int n = g.vertex_count();
  const int big = n;
  DenseFlow f(2 * n);
  for (int v = 0; v < n; ++v) f.cap(2 * v, 2 * v + 1) = (v == s || v == t) ? big : 1;
  for (auto [u, v] : g.edges()) {
    f.cap(2 * u + 1, 2 * v) = big;
    f.cap(2 * v + 1, 2 * u) = big;
  }
  return f.max_flow(2 * s + 1, 2 * t);
}

bool is_complete(const Graph& g) {
  const int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (!g.connected()) return 0;
  if (is_complete(g)) return n - 1;
  // Some minimum cut separates a non-adjacent pair, so scanning those pairs
  // suffices.
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, vertex_flow(g, s, t));
  return best;
}

int edge_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return 0;
  if (!g.connected()) return 0;
  int best = n - 1;
  for (int t = 1; t < n; ++t) best = std::min(best, edge_flow(g, 0, t));
  return best;
}

ConnectivityProfile connectivity_profile(const Graph& g) {
  return {vertex_connectivity(g), edge_connectivity(g), g.min_degree()};
}

bool in_class(const Graph& g, int k, GraphClass cls) {
  const int n = g.vertex_count();
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("class parameter k must satisfy 1 <= k <= n-1");
  if (!g.connected())
    throw std::invalid_argument("class membership requires a connected graph");
  int c = cls == GraphClass::vertex_class ? vertex_connectivity(g)
                                          : edge_connectivity(g);
  return c <= k;
}

}  // namespace zagreb
