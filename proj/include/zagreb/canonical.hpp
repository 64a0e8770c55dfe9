#pragma once

#include <compare>
#include <string>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Byte string identifying a graph's isomorphism class: the graph6 encoding
/// of a canonical relabeling. Equal bytes iff the graphs are isomorphic.
struct CanonicalForm {
  std::string bytes;

  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);

/// The canonical representative itself (decoding canonical_form(g).bytes
/// yields the same graph).
Graph canonical_graph(const Graph& g);

/// Canonical vertex order: position i holds the original vertex that gets
/// label i in the canonical relabeling.
std::vector<int> canonical_order(const Graph& g);

}  // namespace zagreb
