#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relwb/graph.hpp"
#include "relwb/report.hpp"

using namespace relwb;

TEST_CASE("generators: node and edge counts") {
  CHECK(graph_complete(3).edges.size() == 3);
  CHECK(graph_complete(5).edges.size() == 10);
  CHECK(graph_cycle(5).edges.size() == 5);
  CHECK(graph_interval(5, 3).edges.size() == 7);

  Graph dc = graph_disjoint_cliques(2, 3);
  CHECK(dc.nodeCount == 6);
  CHECK(dc.edges.size() == 6);
  CHECK_FALSE(dc.adjacent(0, 3));

  Graph u = graph_disjoint_union(graph_complete(3), graph_cycle(4));
  CHECK(u.nodeCount == 7);
  CHECK(u.edges.size() == 3 + 4);
  CHECK(u.adjacent(0, 1));
  CHECK(u.adjacent(3, 4));
  CHECK_FALSE(u.adjacent(2, 3));
}

TEST_CASE("no loops, out-of-range rejected") {
  Graph g(3);
  g.addEdge(1, 1);  // dropped
  g.finalize();
  CHECK(g.edges.empty());
  CHECK_THROWS_AS(g.addEdge(0, 3), UsageError);
}

TEST_CASE("chromatic number, exact") {
  CHECK(chromatic_number(graph_complete(2)) == 2);
  CHECK(chromatic_number(graph_complete(3)) == 3);
  CHECK(chromatic_number(graph_complete(5)) == 5);
  CHECK(chromatic_number(graph_cycle(5)) == 3);   // odd cycle
  CHECK(chromatic_number(graph_cycle(6)) == 2);   // even cycle
  CHECK(chromatic_number(graph_interval(10, 3)) == 3);
  CHECK(chromatic_number(Graph(4)) == 1);         // no edges
  CHECK(chromatic_number(Graph(0)) == 0);
  CHECK(chromatic_number(graph_disjoint_cliques(3, 3)) == 3);
}

TEST_CASE("chromatic number of disjoint union is the max") {
  Graph gs[] = {graph_complete(4), graph_cycle(5), graph_interval(8, 3),
                graph_disjoint_cliques(2, 2)};
  for (const Graph& a : gs)
    for (const Graph& b : gs) {
      int want = std::max(chromatic_number(a), chromatic_number(b));
      CHECK(chromatic_number(graph_disjoint_union(a, b)) == want);
    }
}

TEST_CASE("girth") {
  CHECK(girth(graph_cycle(5)) == 5);
  CHECK(girth(graph_cycle(6)) == 6);
  CHECK(girth(graph_complete(3)) == 3);
  CHECK(girth(graph_complete(5)) == 3);
  CHECK_FALSE(girth(graph_interval(5, 2)).has_value());  // a path
  CHECK_FALSE(girth(Graph(3)).has_value());
  // two cycles sharing nothing: girth is the shorter one
  CHECK(girth(graph_disjoint_union(graph_cycle(7), graph_cycle(4))) == 4);
  // K4 minus an edge still has a triangle
  Graph g(4);
  g.addEdge(0, 1);
  g.addEdge(1, 2);
  g.addEdge(2, 0);
  g.addEdge(2, 3);
  g.addEdge(3, 0);
  g.finalize();
  CHECK(girth(g) == 3);
}

TEST_CASE("even girth needs the full scan from each root") {
  // two 4-cycles glued along a path; shortest cycle is 4
  Graph g(6);
  g.addEdge(0, 1);
  g.addEdge(1, 2);
  g.addEdge(2, 3);
  g.addEdge(3, 0);
  g.addEdge(2, 4);
  g.addEdge(4, 5);
  g.addEdge(5, 3);
  g.finalize();
  CHECK(girth(g) == 4);
}

TEST_CASE("erdos sampler is seed-deterministic") {
  Graph a = graph_erdos_sample(12, 0.4, 7);
  Graph b = graph_erdos_sample(12, 0.4, 7);
  Graph c = graph_erdos_sample(12, 0.4, 8);
  CHECK(a.edges == b.edges);
  CHECK(a.nodeCount == 12);
  // different seed should differ for this size (sanity, not a law)
  CHECK(a.edges != c.edges);
  Graph e0 = graph_erdos_sample(10, 0.0, 3);
  Graph e1 = graph_erdos_sample(10, 1.0, 3);
  CHECK(e0.edges.empty());
  CHECK(e1.edges.size() == 45);
}

TEST_CASE("text round trip") {
  Graph g = graph_cycle(4);
  Graph h = graph_from_text(graph_to_text(g));
  CHECK(h.nodeCount == g.nodeCount);
  CHECK(h.edges == g.edges);
  CHECK_THROWS_AS(graph_from_text("2\n0 5\n"), UsageError);
  CHECK_THROWS_AS(graph_from_text("nope"), UsageError);
  Graph empty = graph_from_text("3\n");
  CHECK(empty.nodeCount == 3);
  CHECK(empty.edges.empty());
}

TEST_CASE("chromatic bounds sandwich") {
  // spot-check: exact value within [clique lower bound, greedy upper bound]
  // implied by construction; assert against independent simple bounds
  Graph gs[] = {graph_interval(9, 4), graph_erdos_sample(14, 0.3, 5),
                graph_cycle(9)};
  for (const Graph& g : gs) {
    int chi = chromatic_number(g);
    int maxDeg = 0;
    for (int v = 0; v < g.nodeCount; ++v)
      maxDeg = std::max(maxDeg, (int)g.adj[v].count());
    CHECK(chi >= 1);
    CHECK(chi <= maxDeg + 1);
  }
}
