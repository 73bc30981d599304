#include <algorithm>
#include <optional>

#include "relwb/network.hpp"

namespace relwb {

std::string Colour::str() const {
  switch (kind) {
    case Kind::GreenPlain: return "g" + std::to_string(i);
    case Kind::GreenZero: return "g0_" + std::to_string(i);
    case Kind::White: return "w" + std::to_string(i);
    case Kind::Red:
      return "r(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::Shade: return "rho";
  }
  return "?";
}

const Colour* ColouredGraph::colourOf(int a, int b) const {
  if (a == b) return nullptr;
  auto it = edge.find({std::min(a, b), std::max(a, b)});
  return it == edge.end() ? nullptr : &it->second;
}

void ColouredGraph::setEdge(int a, int b, Colour c) {
  if (a == b) throw UsageError("coloured graph: no loops");
  edge[{std::min(a, b), std::max(a, b)}] = c;
}

namespace {

std::string setStr(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

// red index carried at a specific endpoint of a red edge
int redIndexAt(const ColouredGraph& G, int node, int other) {
  const Colour* c = G.colourOf(node, other);
  return node < other ? c->i : c->j;
}

// order-preserving partial function {(i,k),(j,l)} from greens to reds
bool orderPreserving(const PebbleStructure& greens, const PebbleStructure& reds,
                     int i, int k, int j, int l) {
  if (i == j && k != l) return false;
  if (greens.lt(i, j) && !reds.lt(k, l)) return false;
  if (greens.lt(j, i) && !reds.lt(l, k)) return false;
  return true;
}

// a cone with the given base set and apex: one zero-green edge to the apex,
// plain greens g_1..g_{m-2} on the rest, base internally green-free.
// Returns the induced base order and the tint.
std::optional<std::pair<std::vector<int>, int>> coneOn(
    const ColouredGraph& G, const std::vector<int>& base, int apex) {
  const int m = G.m;
  if (int(base.size()) != m - 1) return std::nullopt;
  std::vector<int> order(m - 1, -1);
  int tint = -1;
  for (int a : base) {
    const Colour* c = G.colourOf(a, apex);
    if (!c || !c->isGreen()) return std::nullopt;
    if (c->kind == Colour::Kind::GreenZero) {
      if (order[0] >= 0) return std::nullopt;
      order[0] = a;
      tint = c->i;
    } else {
      if (c->i < 1 || c->i > m - 2 || order[c->i] >= 0) return std::nullopt;
      order[c->i] = a;
    }
  }
  for (int p = 0; p < m - 1; ++p)
    if (order[p] < 0) return std::nullopt;
  for (std::size_t p = 0; p < base.size(); ++p)
    for (std::size_t q = p + 1; q < base.size(); ++q) {
      const Colour* c = G.colourOf(base[p], base[q]);
      if (c && c->isGreen()) return std::nullopt;
    }
  return std::make_pair(order, tint);
}

template <class F>
void forSubsets(int nodes, int size, F&& f) {
  if (size > nodes || size < 0) return;
  std::vector<int> s(size);
  for (int i = 0; i < size; ++i) s[i] = i;
  for (;;) {
    f(s);
    int p = size - 1;
    while (p >= 0 && s[p] == nodes - size + p) --p;
    if (p < 0) break;
    ++s[p];
    for (int q = p + 1; q < size; ++q) s[q] = s[q - 1] + 1;
  }
}

void checkTriangle(CheckReport& rep, const ColouredGraph& G,
                   const PebbleStructure& greens, const PebbleStructure& reds,
                   int a, int b, int c) {
  const Colour* e[3] = {G.colourOf(a, b), G.colourOf(a, c), G.colourOf(b, c)};
  if (!e[0] || !e[1] || !e[2]) return;
  for (int t = 0; t < 3; ++t)
    if (e[t]->kind == Colour::Kind::Shade) return;
  auto tri = [&] {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ") " + e[0]->str() + " " + e[1]->str() + " " +
           e[2]->str();
  };

  int nGreen = 0, nZero = 0, nPlain = 0, nRed = 0;
  for (int t = 0; t < 3; ++t) {
    nGreen += e[t]->isGreen();
    nZero += e[t]->kind == Colour::Kind::GreenZero;
    nPlain += e[t]->kind == Colour::Kind::GreenPlain;
    nRed += e[t]->kind == Colour::Kind::Red;
  }
  if (nGreen == 3) {
    rep.fail("cg-green-triangle", tri());
    return;
  }
  // opposite[t] = the node not on edge t
  const int opposite[3] = {c, b, a};
  for (int t = 0; t < 3; ++t) {
    if (e[t]->kind != Colour::Kind::White) continue;
    const Colour* f1 = e[(t + 1) % 3];
    const Colour* f2 = e[(t + 2) % 3];
    if (e[t]->i == 0) {
      if (f1->kind == Colour::Kind::GreenZero &&
          f2->kind == Colour::Kind::GreenZero)
        rep.fail("cg-green-white", tri());
    } else {
      if (f1->kind == Colour::Kind::GreenPlain &&
          f2->kind == Colour::Kind::GreenPlain && f1->i == e[t]->i &&
          f2->i == e[t]->i)
        rep.fail("cg-green-white", tri());
    }
  }
  if (nZero == 2 && nRed == 1) {
    for (int t = 0; t < 3; ++t) {
      if (e[t]->kind != Colour::Kind::Red) continue;
      // the red edge joins x,z; y carries both zero-greens
      int y = opposite[t];
      int x = t == 0 ? a : (t == 1 ? a : b);
      int z = t == 0 ? b : c;
      const Colour* gx = G.colourOf(y, x);
      const Colour* gz = G.colourOf(y, z);
      if (!orderPreserving(greens, reds, gx->i, redIndexAt(G, x, z), gz->i,
                           redIndexAt(G, z, x)))
        rep.fail("cg-green-red", tri());
    }
  }
  if (nRed == 3) {
    // per-node indices from the sorted triangle a<b<c
    int pa1 = e[0]->i, qb1 = e[0]->j;  // (a,b)
    int pa2 = e[1]->i, qc2 = e[1]->j;  // (a,c)
    int pb3 = e[2]->i, qc3 = e[2]->j;  // (b,c)
    if (!(qb1 == pb3 && pa1 == pa2 && qc3 == qc2))
      rep.fail("cg-red-match", tri());
  }
}

}  // namespace

CheckReport validate_coloured_graph(const ColouredGraph& G,
                                    const PebbleStructure& greens,
                                    const PebbleStructure& reds,
                                    bool allowShade) {
  if (G.m < 3) throw UsageError("coloured graph: need m >= 3");
  if (G.nodes < 0) throw UsageError("coloured graph: negative node count");
  CheckReport rep;
  rep.name = "coloured-graph";
  rep.stats["nodes"] = std::uint64_t(G.nodes);
  rep.stats["edges"] = G.edge.size();
  rep.stats["yellows"] = G.yellow.size();
  const int m = G.m;

  for (const auto& [key, c] : G.edge) {
    auto [x, y] = key;
    bool badKey = x < 0 || y >= G.nodes || x >= y;
    if (badKey) {
      rep.fail("cg-palette", "edge key (" + std::to_string(x) + "," +
                                 std::to_string(y) + ")");
      continue;
    }
    bool ok = true;
    switch (c.kind) {
      case Colour::Kind::GreenPlain: ok = c.i >= 1 && c.i <= m - 2; break;
      case Colour::Kind::GreenZero: ok = c.i >= 0 && c.i < greens.size; break;
      case Colour::Kind::White: ok = c.i >= 0 && c.i <= m - 2; break;
      case Colour::Kind::Red:
        ok = c.i >= 0 && c.i < reds.size && c.j >= 0 && c.j < reds.size;
        break;
      case Colour::Kind::Shade:
        if (!allowShade)
          rep.fail("cg-shade", "(" + std::to_string(x) + "," +
                                   std::to_string(y) + ")");
        break;
    }
    if (!ok)
      rep.fail("cg-palette", "(" + std::to_string(x) + "," +
                                 std::to_string(y) + ") " + c.str());
  }
  for (int x = 0; x < G.nodes; ++x)
    for (int y = x + 1; y < G.nodes; ++y)
      if (!G.colourOf(x, y))
        rep.fail("cg-complete",
                 "(" + std::to_string(x) + "," + std::to_string(y) + ")");

  std::uint64_t triangles = 0;
  for (int x = 0; x < G.nodes; ++x)
    for (int y = x + 1; y < G.nodes; ++y)
      for (int z = y + 1; z < G.nodes; ++z) {
        ++triangles;
        checkTriangle(rep, G, greens, reds, x, y, z);
      }
  rep.stats["triangles"] = triangles;

  for (const auto& [key, S] : G.yellow) {
    bool badKey = int(key.size()) != m - 1;
    for (std::size_t i = 0; i < key.size(); ++i) {
      badKey |= key[i] < 0 || key[i] >= G.nodes;
      badKey |= i + 1 < key.size() && key[i] >= key[i + 1];
    }
    for (std::size_t i = 0; i < S.size(); ++i) {
      badKey |= S[i] < 0 || S[i] >= greens.size;
      badKey |= i + 1 < S.size() && S[i] >= S[i + 1];
    }
    if (badKey) {
      rep.fail("cg-yellow-key", setStr(key) + " -> " + setStr(S));
      continue;
    }
    for (std::size_t p = 0; p < key.size(); ++p)
      for (std::size_t q = p + 1; q < key.size(); ++q) {
        const Colour* c = G.colourOf(key[p], key[q]);
        if (c && c->isGreen())
          rep.fail("cg-yellow-green", setStr(key) + " has green edge (" +
                                          std::to_string(key[p]) + "," +
                                          std::to_string(key[q]) + ")");
      }
    for (int x = 0; x < G.nodes; ++x) {
      if (std::binary_search(key.begin(), key.end(), x)) continue;
      auto cone = coneOn(G, key, x);
      if (cone && !std::binary_search(S.begin(), S.end(), cone->second))
        rep.fail("cg-cone", "tint " + std::to_string(cone->second) +
                                " cone with apex " + std::to_string(x) +
                                " on " + setStr(key) + " -> " + setStr(S));
    }
  }

  // totality: green-free (m-1)-sets must carry a shade
  forSubsets(G.nodes, m - 1, [&](const std::vector<int>& s) {
    bool eligible = true;
    for (std::size_t p = 0; p < s.size() && eligible; ++p)
      for (std::size_t q = p + 1; q < s.size() && eligible; ++q) {
        const Colour* c = G.colourOf(s[p], s[q]);
        eligible = c && !c->isGreen();
      }
    if (eligible && !G.yellow.count(s))
      rep.fail("cg-yellow-missing", setStr(s));
  });
  return rep;
}

ExtendResult extend_coloured_graph(
    const ColouredGraph& M, const std::vector<int>& F, int delta,
    const std::map<int, Colour>& apexEdges, const PebbleStructure& greens,
    const PebbleStructure& reds, const ExtendParams& P,
    const std::map<std::vector<int>, std::vector<int>>& apexYellows) {
  const int m = M.m;
  if (m < 3) throw UsageError("extend: need m >= 3");
  if (delta != M.nodes)
    throw UsageError("extend: the new node must be the next index");
  if (!F.empty() && int(F.size()) != m - 1)
    throw UsageError("extend: face must have m-1 nodes or be empty");
  std::vector<int> face = F;
  std::sort(face.begin(), face.end());
  if (std::adjacent_find(face.begin(), face.end()) != face.end() ||
      (!face.empty() && (face.front() < 0 || face.back() >= M.nodes)))
    throw UsageError("extend: face nodes must be distinct graph nodes");
  if (apexEdges.size() != face.size())
    throw UsageError("extend: one supplied edge per face node");
  for (const auto& [f, c] : apexEdges)
    if (!std::binary_search(face.begin(), face.end(), f))
      throw UsageError("extend: supplied edge outside the face");
  for (const auto& [key, S] : apexYellows)
    for (int v : key)
      if (v != delta && !std::binary_search(face.begin(), face.end(), v))
        throw UsageError("extend: supplied yellow outside the face");

  ExtendResult res;
  ColouredGraph G = M;
  G.nodes = M.nodes + 1;
  for (const auto& [f, c] : apexEdges) G.setEdge(f, delta, c);

  ExtendResult fail;
  fail.report.name = "extend";

  // delta's cone on the face, if Forall played one
  std::optional<std::pair<std::vector<int>, int>> deltaCone;
  if (!face.empty()) deltaCone = coneOn(G, face, delta);

  for (int beta = 0; beta < M.nodes; ++beta) {
    if (std::binary_search(face.begin(), face.end(), beta)) continue;
    // white availability: w_i blocked by a same-i green pair through the face
    Colour chosen = Colour::shade();
    bool haveColour = false;
    for (int i = 1; i <= m - 2 && !haveColour; ++i) {
      bool blocked = false;
      for (int f : face) {
        const Colour* cb = G.colourOf(beta, f);
        const Colour* cd = G.colourOf(f, delta);
        blocked |= cb && cd && cb->kind == Colour::Kind::GreenPlain &&
                   cd->kind == Colour::Kind::GreenPlain && cb->i == i &&
                   cd->i == i;
      }
      if (!blocked) {
        chosen = Colour::white(i);
        haveColour = true;
      }
    }
    if (!haveColour) {
      bool blocked = false;
      for (int f : face) {
        const Colour* cb = G.colourOf(beta, f);
        const Colour* cd = G.colourOf(f, delta);
        blocked |= cb && cd && cb->kind == Colour::Kind::GreenZero &&
                   cd->kind == Colour::Kind::GreenZero;
      }
      if (!blocked) {
        chosen = Colour::white(0);
        haveColour = true;
      }
    }
    if (!haveColour) {
      // every white is blocked; red is legal only between apexes of
      // same-order cones, with indices from the private game
      std::optional<std::pair<std::vector<int>, int>> betaCone;
      if (!face.empty()) betaCone = coneOn(G, face, beta);
      if (deltaCone && betaCone && betaCone->first == deltaCone->first) {
        auto itb = P.tintResponse.find(deltaCone->second);
        if (itb == P.tintResponse.end()) {
          fail.report.fail("extend-no-completion",
                           "no red response for tint " +
                               std::to_string(deltaCone->second));
          return fail;
        }
        int mu = -1;
        for (int y = 0; y < M.nodes && mu < 0; ++y) {
          if (y == beta || std::binary_search(face.begin(), face.end(), y))
            continue;
          auto yC = coneOn(G, face, y);
          const Colour* c = M.colourOf(beta, y);
          if (yC && yC->first == betaCone->first && c &&
              c->kind == Colour::Kind::Red)
            mu = redIndexAt(M, beta, y);
        }
        if (mu < 0) {
          auto itm = P.nodeIndex.find(beta);
          if (itm != P.nodeIndex.end()) mu = itm->second;
        }
        if (mu < 0) {
          fail.report.fail("extend-no-completion",
                           "no clique index for apex " + std::to_string(beta));
          return fail;
        }
        chosen = Colour::red(mu, itb->second);
        haveColour = true;
      } else if (P.allowShade) {
        chosen = Colour::shade();
        haveColour = true;
      } else {
        fail.report.fail("extend-no-completion",
                         "every white is blocked at node " +
                             std::to_string(beta) +
                             " and no matching cone pair");
        return fail;
      }
    }
    G.setEdge(beta, delta, chosen);
  }

  // new green-free (m-1)-sets: Forall's shades inside the face, the
  // cone-set rule elsewhere
  forSubsets(G.nodes, m - 1, [&](const std::vector<int>& s) {
    if (!std::binary_search(s.begin(), s.end(), delta)) return;
    bool eligible = true;
    for (std::size_t p = 0; p < s.size() && eligible; ++p)
      for (std::size_t q = p + 1; q < s.size() && eligible; ++q) {
        const Colour* c = G.colourOf(s[p], s[q]);
        eligible = c && !c->isGreen();
      }
    if (!eligible) return;
    auto it = apexYellows.find(s);
    if (it != apexYellows.end()) {
      G.yellow[s] = it->second;
      return;
    }
    std::vector<int> S;
    for (int x = 0; x < G.nodes; ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      auto cone = coneOn(G, s, x);
      if (cone) S.push_back(cone->second);
    }
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    G.yellow[s] = S;
  });

  CheckReport check = validate_coloured_graph(G, greens, reds, P.allowShade);
  if (!check.passed) {
    fail.report.merge(check);
    fail.report.fail("extend-no-completion", "completion is not a legal graph");
    fail.graph = G;
    return fail;
  }
  res.ok = true;
  res.graph = std::move(G);
  res.report.name = "extend";
  return res;
}

}  // namespace relwb
