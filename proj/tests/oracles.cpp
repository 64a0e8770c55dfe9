#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace oracle {

using zagreb::EdgeList;
using zagreb::Graph;

bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (zagreb::sorted_degrees(a) != zagreb::sorted_degrees(b)) return false;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u) {
      for (int v = u + 1; v < n && match; ++v) {
        if (a.has_edge(u, v) !=
            b.has_edge(perm[static_cast<size_t>(u)],
                       perm[static_cast<size_t>(v)])) {
          match = false;
        }
      }
    }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

long automorphism_count(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u) {
      for (int v = u + 1; v < n && match; ++v) {
        if (g.has_edge(u, v) !=
            g.has_edge(perm[static_cast<size_t>(u)],
                       perm[static_cast<size_t>(v)])) {
          match = false;
        }
      }
    }
    if (match) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<Graph> labeled_graphs(int n, bool connected_only) {
  EdgeList slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    EdgeList edges;
    for (size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) edges.push_back(slots[i]);
    }
    Graph g = Graph::from_edges(n, edges);
    if (!connected_only || g.connected()) out.push_back(g);
  }
  return out;
}

int kappa_subsets(const Graph& g) {
  if (!g.connected()) return 0;
  int n = g.vertex_count();
  std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
  int best = n - 1;  // nothing cuts a complete graph
  for (std::uint32_t cut = 1; cut < full; ++cut) {
    std::uint32_t keep = full & ~cut;
    if (std::popcount(keep) < 2) continue;
    if (g.induced(static_cast<std::uint64_t>(keep)).component_count() >= 2) {
      best = std::min(best, std::popcount(cut));
    }
  }
  return best;
}

int kappa_prime_bipartitions(const Graph& g) {
  if (!g.connected()) return 0;
  int n = g.vertex_count();
  if (n == 1) return 0;
  EdgeList edges = g.edges();
  int best = g.edge_count();
  // Vertex n-1 stays on the fixed side; `side` picks the other part.
  for (std::uint32_t side = 1; side < (1u << (n - 1)); ++side) {
    int crossing = 0;
    for (auto [u, v] : edges) {
      if ((side >> u & 1) != (side >> v & 1)) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

}  // namespace oracle
