#include "zagreb/constructors.hpp"

#include <stdexcept>
#include <string>

namespace zagreb {

Graph basic(BasicKind kind, int n) {
  if (n < 1) throw std::invalid_argument("basic graphs require n >= 1");
  EdgeList edges;
  switch (kind) {
    case BasicKind::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case BasicKind::path:
      for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case BasicKind::star:
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
  }
  return Graph::from_edges(n, edges);
}

Graph complete(int n) { return basic(BasicKind::complete, n); }
Graph path(int n) { return basic(BasicKind::path, n); }
Graph star(int n) { return basic(BasicKind::star, n); }

Graph knk(int n, int k) {
  if (n < 2) throw std::invalid_argument("knk requires n >= 2");
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("knk requires 1 <= k <= n-1, got k=" +
                                std::to_string(k));
  EdgeList edges;
  for (int u = 0; u + 1 < n - 1; ++u)
    for (int v = u + 1; v < n - 1; ++v) edges.emplace_back(u, v);
  for (int v = 0; v < k; ++v) edges.emplace_back(v, n - 1);
  return Graph::from_edges(n, edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  if (n1 + n2 > kMaxVertices)
    throw std::invalid_argument("join result exceeds " +
                                std::to_string(kMaxVertices) + " vertices");
  EdgeList edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) edges.emplace_back(u, v + n1);
  return Graph::from_edges(n1 + n2, edges);
}

Graph sandwich(int j, const Graph& h, int m) {
  if (j < 1 || m < 1)
    throw std::invalid_argument("sandwich requires clique sizes j, m >= 1");
  const int k = h.vertex_count();
  const int n = j + k + m;
  if (n > kMaxVertices)
    throw std::invalid_argument("sandwich result exceeds " +
                                std::to_string(kMaxVertices) + " vertices");
  EdgeList edges;
  for (int u = 0; u < j; ++u)
    for (int v = u + 1; v < j; ++v) edges.emplace_back(u, v);
  for (auto [u, v] : h.edges()) edges.emplace_back(u + j, v + j);
  for (int u = j + k; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  // Cross edges touch the middle block only; the two cliques stay apart.
  for (int w = 0; w < k; ++w) {
    for (int u = 0; u < j; ++u) edges.emplace_back(u, w + j);
    for (int v = j + k; v < n; ++v) edges.emplace_back(w + j, v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace zagreb
