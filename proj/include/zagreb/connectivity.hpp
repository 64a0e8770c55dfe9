#pragma once

#include "zagreb/graph.hpp"

namespace zagreb {

struct ConnectivityProfile {
  int kappa;        // vertex connectivity
  int kappa_prime;  // edge connectivity
  int min_degree;
};

/// Vertex connectivity. n-1 for complete graphs, 0 for disconnected ones,
/// otherwise the minimum size of a disconnecting vertex set.
int vertex_connectivity(const Graph& g);

/// Edge connectivity: minimum size of a disconnecting edge set; 0 for
/// disconnected graphs.
int edge_connectivity(const Graph& g);

ConnectivityProfile connectivity_profile(const Graph& g);

enum class GraphClass { vertex_class, edge_class };

/// Membership in the class of connected n-vertex graphs with vertex (resp.
/// edge) connectivity at most k. Requires 1 <= k <= n-1 and a connected
/// graph; violations throw std::invalid_argument.
bool in_class(const Graph& g, int k, GraphClass cls);

}  // namespace zagreb
