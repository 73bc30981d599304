#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relwb/bits.hpp"

namespace relwb {

// Finite simple graph; edges stored irreflexive with min<max keys.
struct Graph {
  int nodeCount = 0;
  std::vector<std::pair<int, int>> edges;  // canonical (min,max), sorted, unique
  std::vector<AtomSet> adj;                // adjacency rows, loops never set

  Graph() = default;
  explicit Graph(int n) : nodeCount(n), adj(n, AtomSet(n)) {}
  void addEdge(int a, int b);
  bool adjacent(int a, int b) const {
    return a != b && a < nodeCount && b < nodeCount && adj[a].test(b);
  }
  void finalize();  // sort + dedupe edge list
};

Graph graph_complete(int k);
Graph graph_cycle(int k);
Graph graph_disjoint_cliques(int count, int size);
Graph graph_interval(int size, int N);  // edges {i,j} iff 0 < |i-j| < N
Graph graph_erdos_sample(int size, double p, uint64_t seed);
Graph graph_disjoint_union(const Graph& a, const Graph& b);

int chromatic_number(const Graph& g);               // exact, branch and bound
std::optional<int> girth(const Graph& g);           // nullopt = acyclic

// "k" then "i j" lines
Graph graph_from_text(const std::string& text);
std::string graph_to_text(const Graph& g);

} // namespace relwb
