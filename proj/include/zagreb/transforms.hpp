#pragma once

#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Moves the edges v-v1,...,v-vs onto u: every moved vertex must be a
/// neighbor of v but not of u, and u must not be adjacent to v.
struct ShiftSpec {
  int u;
  int v;
  std::vector<int> moved;  // v1..vs, nonempty
};

/// G + uv for a current non-edge uv. Both multiplicative Zagreb indices
/// strictly increase on graphs without isolated vertices; the sweeps in the
/// verifier test that contract rather than assume it.
Graph add_edge_checked(const Graph& g, int u, int v);

/// G - {v v_i} + {u v_i} for the spec's moved set. Validation names the
/// violated clause. Only d(u) and d(v) change: d(u) grows by s and d(v)
/// shrinks by s.
Graph shift_neighbors(const Graph& g, const ShiftSpec& spec);

}  // namespace zagreb
