#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "proc.hpp"
#include "zagreb/constructors.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/graph.hpp"

using namespace zagreb;

TEST_CASE("from_edges builds exactly the given edges") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(p3.edge_count() == 2);
  CHECK(degree_sequence(p3).degrees == std::vector<int>{1, 2, 1});
  CHECK(p3.has_edge(1, 0));
  CHECK_FALSE(p3.has_edge(0, 2));

  Graph k1 = Graph::from_edges(1, {});
  CHECK(k1.vertex_count() == 1);
  CHECK(degree_sequence(k1).degrees == std::vector<int>{0});

  Graph dup = Graph::from_edges(4, {{0, 1}, {0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("from_edges rejects bad input with distinct errors") {
  std::string m1 = thrown_message([] { Graph::from_edges(3, {{0, 3}}); });
  CHECK(m1.find("out of range") != std::string::npos);
  std::string m2 = thrown_message([] { Graph::from_edges(3, {{1, 1}}); });
  CHECK(m2.find("self-loop") != std::string::npos);
  std::string m3 = thrown_message([] { Graph::from_edges(0, {}); });
  CHECK(m3.find("vertex count") != std::string::npos);
  std::string m4 = thrown_message([] { Graph::from_edges(65, {}); });
  CHECK(m4.find("vertex count") != std::string::npos);
  CHECK_THROWS_AS(Graph::from_edges(-1, {}), std::invalid_argument);
  CHECK_NOTHROW(Graph::from_edges(64, {{0, 63}}));
}

TEST_CASE("with_edits adds and removes, rejecting impossible edits") {
  Graph p3 = path(3);
  Graph c3 = p3.with_edits({{0, 2}}, {});
  CHECK(c3.edge_count() == 3);
  CHECK(oracle::isomorphic(c3, complete(3)));

  Graph c5 = path(5).with_edits({{0, 4}}, {});
  Graph back = c5.with_edits({}, {{2, 3}});
  CHECK(oracle::isomorphic(back, path(5)));

  CHECK_THROWS_AS(p3.with_edits({{0, 1}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(p3.with_edits({}, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(p3.with_edits({{1, 1}}, {}), std::invalid_argument);

  // Edit then inverse edit restores identical adjacency.
  Graph k4 = complete(4);
  CHECK(k4.with_edits({}, {{0, 1}}).with_edits({{0, 1}}, {}) == k4);
}

TEST_CASE("induced subgraphs relabel in ascending vertex order") {
  CHECK(oracle::isomorphic(complete(5).induced({0, 1, 2}), complete(3)));

  // The K4-side of knk(5,2) away from the join stays complete.
  Graph g = knk(5, 2);
  CHECK(g.induced({0, 1, 2, 3}).edge_count() == 6);

  Graph ends = path(4).induced({0, 3});
  CHECK(ends.vertex_count() == 2);
  CHECK(ends.edge_count() == 0);

  CHECK_THROWS_AS(path(4).induced(std::vector<int>{}),
                  std::invalid_argument);
  CHECK(path(4).induced(std::uint64_t{0b1001}) == ends);
}

TEST_CASE("component counting") {
  CHECK(path(5).component_count() == 1);
  CHECK(path(5).connected());
  CHECK(Graph::edgeless(4).component_count() == 4);

  // Removing the two join vertices of knk(5,2) leaves two pieces.
  Graph g = knk(5, 2);  // join vertices 0,1; remaining 2,3,4
  CHECK(g.induced({2, 3, 4}).component_count() == 2);

  Graph two_paths = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK(two_paths.component_count() == 2);
  CHECK_FALSE(two_paths.connected());
}

TEST_CASE("degree sequences and handshake identity") {
  DegreeSequence star5 = degree_sequence(star(5));
  CHECK(sorted_degrees(star(5)) == std::vector<int>{1, 1, 1, 1, 4});
  CHECK(star5.counts[1] == 4);
  CHECK(star5.counts[4] == 1);
  CHECK(sorted_degrees(knk(5, 2)) == std::vector<int>{2, 3, 3, 4, 4});
  CHECK(sorted_degrees(complete(4)) == std::vector<int>{3, 3, 3, 3});

  for (Graph g : connected_graphs(5).collect()) {
    DegreeSequence ds = degree_sequence(g);
    int sum = 0;
    for (int d : ds.degrees) sum += d;
    CHECK(sum == 2 * g.edge_count());
    int from_counts = 0;
    for (size_t i = 0; i < ds.counts.size(); ++i) {
      from_counts += static_cast<int>(i) * ds.counts[i];
    }
    CHECK(from_counts == sum);
  }
}
