#include "relwb/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

#include "relwb/report.hpp"

namespace relwb {

void Graph::addEdge(int a, int b) {
  if (a == b) return;  // loops dropped by convention
  if (a > b) std::swap(a, b);
  if (b >= nodeCount) throw UsageError("edge endpoint out of range");
  if (adj[a].test(b)) return;
  adj[a].set(b);
  adj[b].set(a);
  edges.emplace_back(a, b);
}

void Graph::finalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Graph graph_complete(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.addEdge(i, j);
  g.finalize();
  return g;
}

Graph graph_cycle(int k) {
  Graph g(k);
  if (k >= 2)
    for (int i = 0; i < k; ++i) g.addEdge(i, (i + 1) % k);
  g.finalize();
  return g;
}

Graph graph_disjoint_cliques(int count, int size) {
  Graph g(count * size);
  for (int c = 0; c < count; ++c)
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) g.addEdge(c * size + i, c * size + j);
  g.finalize();
  return g;
}

Graph graph_interval(int size, int N) {
  Graph g(size);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (j - i < N) g.addEdge(i, j);
  g.finalize();
  return g;
}

Graph graph_erdos_sample(int size, double p, uint64_t seed) {
  if (p < 0 || p > 1) throw UsageError("edge probability outside [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Graph g(size);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (u(rng) < p) g.addEdge(i, j);
  g.finalize();
  return g;
}

Graph graph_disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.nodeCount + b.nodeCount);
  for (auto [x, y] : a.edges) g.addEdge(x, y);
  for (auto [x, y] : b.edges) g.addEdge(a.nodeCount + x, a.nodeCount + y);
  g.finalize();
  return g;
}

namespace {

// greedy colouring in degree order: upper bound
int greedy_bound(const Graph& g) {
  std::vector<int> order(g.nodeCount);
  for (int i = 0; i < g.nodeCount; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.adj[a].count() > g.adj[b].count();
  });
  std::vector<int> col(g.nodeCount, -1);
  int used = 0;
  for (int v : order) {
    std::vector<bool> taken(used + 1, false);
    g.adj[v].for_each([&](int u) {
      if (col[u] >= 0) taken[col[u]] = true;
    });
    int c = 0;
    while (c < used && taken[c]) ++c;
    col[v] = c;
    used = std::max(used, c + 1);
  }
  return g.nodeCount ? used : 0;
}

// a maximal clique found greedily: lower bound
int clique_bound(const Graph& g) {
  int best = g.nodeCount ? 1 : 0;
  for (int s = 0; s < g.nodeCount; ++s) {
    std::vector<int> cl{s};
    AtomSet common = g.adj[s];
    while (common.any()) {
      int v = common.first();
      cl.push_back(v);
      common &= g.adj[v];
    }
    best = std::max(best, int(cl.size()));
  }
  return best;
}

struct ChromSearch {
  const Graph& g;
  std::vector<int> col;
  int best;
  std::vector<int> order;

  explicit ChromSearch(const Graph& gr) : g(gr), col(gr.nodeCount, -1) {}

  bool feasible(int k) {  // can g be coloured with exactly <= k colours?
    std::fill(col.begin(), col.end(), -1);
    return place(0, k, 0);
  }
  bool place(size_t idx, int k, int used) {
    if (idx == order.size()) return true;
    int v = order[idx];
    std::vector<bool> taken(k, false);
    g.adj[v].for_each([&](int u) {
      if (col[u] >= 0) taken[col[u]] = true;
    });
    // symmetry break: allow at most one brand-new colour
    int lim = std::min(k, used + 1);
    for (int c = 0; c < lim; ++c) {
      if (taken[c]) continue;
      col[v] = c;
      if (place(idx + 1, k, std::max(used, c + 1))) return true;
      col[v] = -1;
    }
    return false;
  }
};

} // namespace

int chromatic_number(const Graph& g) {
  if (g.nodeCount == 0) return 0;
  if (g.nodeCount > 64) throw BudgetError("chromatic_number limited to 64 nodes");
  if (g.edges.empty()) return 1;
  int lo = clique_bound(g), hi = greedy_bound(g);
  ChromSearch s(g);
  s.order.resize(g.nodeCount);
  for (int i = 0; i < g.nodeCount; ++i) s.order[i] = i;
  std::sort(s.order.begin(), s.order.end(), [&](int a, int b) {
    return g.adj[a].count() > g.adj[b].count();
  });
  for (int k = lo; k < hi; ++k)
    if (s.feasible(k)) return k;
  return hi;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; shortest cycle through the root is found when a
  // non-tree edge closes two BFS branches
  int best = -1;
  for (int s = 0; s < g.nodeCount; ++s) {
    std::vector<int> dist(g.nodeCount, -1), par(g.nodeCount, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      g.adj[v].for_each([&](int u) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          par[u] = v;
          q.push(u);
        } else if (u != par[v]) {
          // non-tree edge: closed walk through s, contains a cycle
          int len = dist[v] + dist[u] + 1;
          if (best < 0 || len < best) best = len;
        }
      });
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  int k;
  if (!(in >> k) || k < 0) throw UsageError("graph text: bad node count");
  Graph g(k);
  int a, b;
  while (in >> a >> b) {
    if (a < 0 || b < 0 || a >= k || b >= k)
      throw UsageError("graph text: edge endpoint out of range");
    g.addEdge(a, b);
  }
  g.finalize();
  return g;
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.nodeCount << "\n";
  for (auto [a, b] : g.edges) out << a << " " << b << "\n";
  return out.str();
}

} // namespace relwb
