#pragma once

#include "zagreb/graph.hpp"

namespace zagreb {

enum class BasicKind { complete, path, star };

/// The named graph on vertices 0..n-1. Star center is vertex 0; path edges
/// are (i, i+1).
Graph basic(BasicKind kind, int n);

Graph complete(int n);
Graph path(int n);
Graph star(int n);

/// K_n^k: vertices 0..n-2 form a complete graph and vertex n-1 is joined to
/// the first k of them. Requires n >= 2 and 1 <= k <= n-1.
Graph knk(int n, int k);

/// Join: disjoint union of g1 (kept on 0..n1-1) and g2 (shifted to
/// n1..n1+n2-1) plus every cross edge.
Graph join(const Graph& g1, const Graph& g2);

/// Sandwich K_j | H | K_m: two cliques each fully joined to the middle graph
/// h, with no clique-to-clique edges, so V(h) is a vertex cut. Block order in
/// the output is the K_j block, then h, then the K_m block.
Graph sandwich(int j, const Graph& h, int m);

}  // namespace zagreb
