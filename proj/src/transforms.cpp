#include "zagreb/transforms.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zagreb {

Graph add_edge_checked(const Graph& g, int u, int v) {
  return g.with_edits({{u, v}}, {});
}

Graph shift_neighbors(const Graph& g, const ShiftSpec& spec) {
  const int n = g.vertex_count();
  auto bad = [](const std::string& clause) {
    return std::invalid_argument("shift spec violation: " + clause);
  };
  if (spec.u < 0 || spec.u >= n || spec.v < 0 || spec.v >= n)
    throw bad("u and v must be vertices of the graph");
  if (spec.u == spec.v) throw bad("u != v");
  if (g.has_edge(spec.u, spec.v)) throw bad("u must not be adjacent to v");
  if (spec.moved.empty()) throw bad("moved set must be nonempty");

  std::uint64_t seen = 0;
  EdgeList add, remove;
  for (int w : spec.moved) {
    if (w < 0 || w >= n) throw bad("moved vertex out of range");
    if (w == spec.u || w == spec.v)
      throw bad("moved vertices must differ from u and v");
    std::uint64_t bit = std::uint64_t{1} << w;
    if (seen & bit) throw bad("moved vertices must be distinct");
    seen |= bit;
    if (!g.has_edge(spec.v, w))
      throw bad("moved vertex " + std::to_string(w) + " is not a neighbor of v");
    if (g.has_edge(spec.u, w))
      throw bad("moved vertex " + std::to_string(w) +
                " is already a neighbor of u");
    remove.emplace_back(spec.v, w);
    add.emplace_back(spec.u, w);
  }
  return g.with_edits(add, remove);
}

}  // namespace zagreb
