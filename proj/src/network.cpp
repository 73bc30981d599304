#include "relwb/network.hpp"

#include <omp.h>

#include <algorithm>

namespace relwb {

namespace {

std::uint64_t powChecked(int base, int exp, const char* who) {
  std::uint64_t r = 1;
  for (int e = 0; e < exp; ++e) {
    if (r > (1ull << 26) / std::uint64_t(base))
      throw UsageError(std::string(who) + ": tuple space too large");
    r *= std::uint64_t(base);
  }
  return r;
}

std::string tupleStr(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

struct OpsGuard {
  std::uint64_t used = 0, budget;
  explicit OpsGuard(std::uint64_t b) : budget(b) {}
  void charge(std::uint64_t n, const char* where) {
    used += n;
    if (used > budget)
      throw BudgetError(std::string(where) +
                        " exceeds the ops budget (used " + std::to_string(used) +
                        " > " + std::to_string(budget) + ")");
  }
};

}  // namespace

Network::Network(int n, int k) : dim(n), nodes(k) {
  if (n <= 0 || k <= 0)
    throw UsageError("network: dim and nodes must be positive");
  label.assign(powChecked(k, n, "network"), 0);
}

std::uint64_t Network::rank(const std::vector<int>& t) const {
  std::uint64_t r = 0;
  for (int v : t) r = r * std::uint64_t(nodes) + std::uint64_t(v);
  return r;
}

std::vector<int> Network::unrank(std::uint64_t r) const {
  std::vector<int> t(dim);
  for (int i = dim - 1; i >= 0; --i) {
    t[i] = int(r % std::uint64_t(nodes));
    r /= std::uint64_t(nodes);
  }
  return t;
}

bool Network::operator<(const Network& o) const {
  if (dim != o.dim) return dim < o.dim;
  if (nodes != o.nodes) return nodes < o.nodes;
  return label < o.label;
}

CheckReport validate_network(const Network& N, const CaAtomStructure& S,
                             int jobs) {
  if (N.dim != S.dim) throw UsageError("validate_network: dimension mismatch");
  for (int a : N.label)
    if (a < 0 || a >= S.k)
      throw UsageError("validate_network: label outside the atom range");
  CheckReport rep;
  rep.name = "network";
  const std::int64_t T = std::int64_t(N.tupleCount());
  rep.stats["tuples"] = std::uint64_t(T);

#pragma omp parallel for schedule(static) if (jobs != 1)
  for (std::int64_t r = 0; r < T; ++r) {
    std::vector<int> t = N.unrank(std::uint64_t(r));
    const int a = N.label[r];
    for (int i = 0; i < N.dim; ++i)
      for (int j = i + 1; j < N.dim; ++j) {
        if (t[i] == t[j] && !S.diagAt(i, j).test(a)) {
#pragma omp critical
          rep.fail("net-1-diag",
                   tupleStr(t) + " repeats coordinates " + std::to_string(i) +
                       "," + std::to_string(j),
                   S.names[a]);
        }
        if (S.hasSubst()) {
          std::vector<int> u = t;
          std::swap(u[i], u[j]);
          const int want = S.subst[S.pairIndex(i, j)][a];
          if (N.at(u) != want) {
#pragma omp critical
            rep.fail("net-3-subst",
                     tupleStr(t) + " o [" + std::to_string(i) + "," +
                         std::to_string(j) + "]",
                     S.names[N.at(u)], S.names[want]);
          }
        }
      }
    for (int i = 0; i < N.dim; ++i) {
      std::vector<int> u = t;
      for (int d = t[i] + 1; d < N.nodes; ++d) {
        u[i] = d;
        const int b = N.at(u);
        if (!S.cylRel(i, a, b)) {
#pragma omp critical
          rep.fail("net-2-cyl",
                   tupleStr(t) + " vs " + tupleStr(u) + " at position " +
                       std::to_string(i),
                   S.names[a], S.names[b]);
        }
      }
    }
  }
  return rep;
}

std::vector<Network> enumerate_networks(const CaAtomStructure& S, int nodes,
                                        std::uint64_t stateBudget) {
  if (S.dim <= 0 || S.k <= 0)
    throw UsageError("enumerate_networks: empty structure");
  if (nodes < S.dim)
    throw UsageError("enumerate_networks: need at least dim nodes");
  Network base(S.dim, nodes);
  const std::uint64_t T = base.tupleCount();
  if (T > std::min<std::uint64_t>(stateBudget, 1ull << 16))
    throw BudgetError("enumerate_networks: tuple space " + std::to_string(T) +
                      " exceeds the state budget");
  const int n = S.dim, k = S.k;

  // per-tuple data: coordinates, initial candidate set (diagonals and subst
  // fixpoints), earlier subst partners, and the cylAcc group per position
  std::vector<std::vector<int>> tup(T);
  std::vector<AtomSet> initial(T, AtomSet::full(k));
  std::vector<std::vector<std::pair<std::uint64_t, int>>> earlier(T);
  std::vector<std::vector<std::uint64_t>> group(n,
                                               std::vector<std::uint64_t>(T));
  std::vector<AtomSet> fix;  // subst fixpoint atoms per position pair
  std::vector<std::vector<int>> inv;
  if (S.hasSubst()) {
    fix.assign(std::size_t(n) * n, AtomSet(k));
    inv.assign(std::size_t(n) * n, std::vector<int>(k));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const auto& p = S.subst[S.pairIndex(i, j)];
        for (int a = 0; a < k; ++a) {
          if (p[a] == a) fix[std::size_t(i) * n + j].set(a);
          inv[S.pairIndex(i, j)][p[a]] = a;
        }
      }
  }
  for (std::uint64_t r = 0; r < T; ++r) {
    tup[r] = base.unrank(r);
    const auto& t = tup[r];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (t[i] == t[j]) initial[r] &= S.diagAt(i, j);
        if (S.hasSubst()) {
          std::vector<int> u = t;
          std::swap(u[i], u[j]);
          const std::uint64_t pr = base.rank(u);
          if (pr == r)
            initial[r] &= fix[std::size_t(i) * n + j];
          else if (pr < r)
            earlier[r].push_back({pr, S.pairIndex(i, j)});
        }
      }
    for (int i = 0; i < n; ++i) {
      std::vector<int> u = t;
      u[i] = 0;
      group[i][r] = base.rank(u);
    }
  }

  // DFS in lex tuple order; group sets accumulate cylAcc constraints
  std::vector<AtomSet> allowed(std::size_t(n) * T, AtomSet::full(k));
  std::vector<std::vector<std::pair<std::uint64_t, AtomSet>>> undo(T);
  std::vector<int> cur(T, -1);
  std::vector<AtomSet> cand(T, AtomSet(k));
  std::vector<Network> out;
  std::uint64_t states = 0;

  auto compute = [&](std::uint64_t r) {
    AtomSet c = initial[r];
    for (int i = 0; i < n; ++i) c &= allowed[std::size_t(i) * T + group[i][r]];
    for (const auto& [pr, pair] : earlier[r]) {
      // both clause directions: label = s(partner) and s(label) = partner
      c &= AtomSet::single(k, S.subst[pair][cur[pr]]);
      c &= AtomSet::single(k, inv[pair][cur[pr]]);
    }
    return c;
  };
  auto assign = [&](std::uint64_t r, int a) {
    undo[r].clear();
    for (int i = 0; i < n; ++i) {
      AtomSet& g = allowed[std::size_t(i) * T + group[i][r]];
      undo[r].push_back({std::size_t(i) * T + group[i][r], g});
      g &= S.cyl[i][a];
    }
  };
  auto unassign = [&](std::uint64_t r) {
    for (auto it = undo[r].rbegin(); it != undo[r].rend(); ++it)
      allowed[it->first] = it->second;
  };

  std::int64_t lv = 0;
  cand[0] = compute(0);
  while (lv >= 0) {
    int next = -1;
    for (int a = cur[lv] + 1; a < k; ++a)
      if (cand[lv].test(a)) {
        next = a;
        break;
      }
    if (next < 0) {
      cur[lv] = -1;
      --lv;
      if (lv >= 0) unassign(std::uint64_t(lv));
      continue;
    }
    if (++states > stateBudget)
      throw BudgetError("enumerate_networks: state budget exceeded after " +
                        std::to_string(states - 1) + " states");
    cur[lv] = next;
    if (std::uint64_t(lv) + 1 == T) {
      Network N = base;
      for (std::uint64_t r = 0; r < T; ++r) N.label[r] = cur[r];
      out.push_back(std::move(N));
      continue;  // same level, next candidate; nothing was applied
    }
    assign(std::uint64_t(lv), next);
    ++lv;
    cand[lv] = compute(std::uint64_t(lv));
  }
  return out;
}

CaAtomStructure ra_to_ca2(const RaAtomStructure& S) {
  if (S.k <= 0) throw UsageError("ra_to_ca2: empty atom structure");
  CaAtomStructure C(2, S.k, Flavor::Pea);
  C.names = S.names;
  for (int a = 0; a < S.k; ++a) {
    C.diagAt(0, 0).set(a);
    C.diagAt(1, 1).set(a);
    if (S.identity.test(a)) {
      C.diagAt(0, 1).set(a);
      C.diagAt(1, 0).set(a);
    }
  }
  for (int a = 0; a < S.k; ++a) {
    AtomSet left(S.k), right(S.k);  // 1;a and a;1
    for (int c = 0; c < S.k; ++c) {
      left |= S.comp_atoms(c, a);
      right |= S.comp_atoms(a, c);
    }
    left.for_each([&](int b) { C.setCyl(0, a, b); });
    right.for_each([&](int b) { C.setCyl(1, a, b); });
  }
  C.subst.assign(4, {});
  C.subst[C.pairIndex(0, 1)] = S.conv;
  CheckReport v = C.validate();
  if (!v.passed)
    throw UsageError("ra_to_ca2: structure fails the two-dimensional axioms");
  return C;
}

bool Hypernetwork::operator<(const Hypernetwork& o) const {
  if (net < o.net || o.net < net) return net < o.net;
  if (width != o.width) return width < o.width;
  if (lambda != o.lambda) return lambda < o.lambda;
  return hyper < o.hyper;
}

namespace {

// visit all node sequences of length 0..width except skipLen
template <class F>
void forSequences(int nodes, int width, int skipLen, F&& f) {
  for (int len = 0; len <= width; ++len) {
    if (len == skipLen) continue;
    std::vector<int> s(len, 0);
    for (;;) {
      f(s);
      int p = len - 1;
      while (p >= 0 && s[p] == nodes - 1) s[p--] = 0;
      if (p < 0) break;
      ++s[p];
    }
  }
}

std::uint64_t sequenceCount(int nodes, int width, int skipLen) {
  std::uint64_t c = 0, p = 1;
  for (int len = 0; len <= width; ++len) {
    if (len != skipLen) c += p;
    p *= std::uint64_t(nodes);
  }
  return c;
}

}  // namespace

Hypernetwork hypernetwork_from(const Network& N, int width, int lambda) {
  if (width < 0) width = N.dim + 1;
  if (lambda < 1) throw UsageError("hypernetwork: lambda must be positive");
  if (sequenceCount(N.nodes, width, N.dim) > (1ull << 20))
    throw UsageError("hypernetwork: width too large");
  Hypernetwork H;
  H.net = N;
  H.width = width;
  H.lambda = lambda;
  forSequences(N.nodes, width, N.dim,
               [&](const std::vector<int>& s) { H.hyper[s] = 0; });
  return H;
}

CheckReport validate_hypernetwork(const Hypernetwork& H,
                                  const CaAtomStructure& S) {
  CheckReport rep = validate_network(H.net, S, 1);
  rep.name = "hypernetwork";
  const int k = H.net.nodes, dim = H.net.dim;
  if (H.lambda < 1) throw UsageError("hypernetwork: lambda must be positive");
  if (H.width < 0) throw UsageError("hypernetwork: negative width");

  std::uint64_t missing = 0;
  forSequences(k, H.width, dim, [&](const std::vector<int>& s) {
    auto it = H.hyper.find(s);
    if (it == H.hyper.end()) {
      if (missing++ < 4) rep.fail("hyper-total", tupleStr(s));
    } else if (it->second < 0 || it->second >= H.lambda) {
      rep.fail("hyper-range", tupleStr(s), std::to_string(it->second));
    }
  });
  for (const auto& [s, v] : H.hyper) {
    bool bad = int(s.size()) > H.width || int(s.size()) == dim;
    for (int x : s) bad |= x < 0 || x >= k;
    if (bad) rep.fail("hyper-range", tupleStr(s), std::to_string(v));
  }

  // coordinates linked below diag(0,1) force equal labels
  if (dim >= 2) {
    std::vector<char> eq(std::size_t(k) * k, 0);
    std::vector<int> t(dim);
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) {
        t[0] = x;
        t[1] = y;
        std::fill(t.begin() + 2, t.end(), 0);
        bool found = false;
        for (;;) {
          if (S.diagAt(0, 1).test(H.net.at(t))) {
            found = true;
            break;
          }
          int p = dim - 1;
          while (p >= 2 && t[p] == k - 1) t[p--] = 0;
          if (p < 2) break;
          ++t[p];
        }
        eq[std::size_t(x) * k + y] = char(found);
      }
    auto linked = [&](const std::vector<int>& a, const std::vector<int>& b) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!eq[std::size_t(a[i]) * k + b[i]]) return false;
      return true;
    };
    forSequences(k, H.width, -1, [&](const std::vector<int>& a) {
      forSequences(k, H.width, -1, [&](const std::vector<int>& b) {
        if (a.size() != b.size() || !(a < b) || !linked(a, b)) return;
        if (int(a.size()) == dim) {
          if (H.net.at(a) != H.net.at(b))
            rep.fail("hyper-eq", tupleStr(a) + " ~ " + tupleStr(b),
                     S.names[H.net.at(a)], S.names[H.net.at(b)]);
        } else {
          auto ia = H.hyper.find(a), ib = H.hyper.find(b);
          if (ia != H.hyper.end() && ib != H.hyper.end() &&
              ia->second != ib->second)
            rep.fail("hyper-eq", tupleStr(a) + " ~ " + tupleStr(b),
                     std::to_string(ia->second), std::to_string(ib->second));
        }
      });
    });
  }
  return rep;
}

namespace {

int hyperAt(const Hypernetwork& H, const std::vector<int>& s) {
  auto it = H.hyper.find(s);
  return it == H.hyper.end() ? -1 : it->second;
}

// agreement on every sequence avoiding the given nodes
bool agreeOff(const Hypernetwork& M, const Hypernetwork& N,
              const std::vector<int>& avoid, OpsGuard& ops) {
  bool ok = true;
  forSequences(M.net.nodes, M.width, -1, [&](const std::vector<int>& s) {
    if (!ok) return;
    for (int x : s)
      for (int v : avoid)
        if (x == v) return;
    ops.charge(1, "check_hyperbasis: agreement scan");
    if (int(s.size()) == M.net.dim) {
      if (M.net.at(s) != N.net.at(s)) ok = false;
    } else {
      if (hyperAt(M, s) != hyperAt(N, s)) ok = false;
    }
  });
  return ok;
}

}  // namespace

CheckReport check_hyperbasis(const CaAtomStructure& S,
                             const std::vector<Hypernetwork>& H, int m, int n,
                             int lambda, bool requireSymmetry,
                             std::uint64_t opsBudget) {
  if (m < S.dim || n < m || lambda < 1)
    throw UsageError("check_hyperbasis: need dim <= m <= n and lambda >= 1");
  for (const auto& N : H)
    if (N.net.dim != S.dim || N.net.nodes != m || N.width != n ||
        N.lambda != lambda)
      throw UsageError("check_hyperbasis: members must share nodes, width "
                       "and lambda");
  CheckReport rep;
  rep.name = "hyperbasis";
  rep.stats["members"] = H.size();
  OpsGuard ops(opsBudget);

  for (std::size_t i = 0; i < H.size(); ++i) {
    CheckReport r = validate_hypernetwork(H[i], S);
    if (!r.passed)
      for (auto& c : r.counterexamples)
        rep.fail(c.axiomId, "member " + std::to_string(i) + ": " + c.witness,
                 c.lhs, c.rhs);
  }

  std::vector<int> id(S.dim);
  for (int i = 0; i < S.dim; ++i) id[i] = i;
  for (int a = 0; a < S.k; ++a) {
    bool covered = false;
    for (const auto& N : H) covered |= N.net.at(id) == a;
    if (!covered) rep.fail("hyperbasis-coverage", S.names[a]);
  }

  for (std::size_t h = 0; h < H.size(); ++h) {
    const Network& N = H[h].net;
    const std::uint64_t T = N.tupleCount();
    ops.charge(T * std::uint64_t(S.dim) * std::uint64_t(S.k),
               "check_hyperbasis: cylindrifier scan");
    for (std::uint64_t r = 0; r < T; ++r) {
      std::vector<int> t = N.unrank(r);
      for (int i = 0; i < S.dim; ++i)
        for (int a = 0; a < S.k; ++a) {
          if (!S.cylRel(i, N.label[r], a)) continue;
          bool witness = false;
          std::vector<int> u = t;
          for (int d = 0; d < m && !witness; ++d) {
            u[i] = d;
            witness = N.at(u) == a;
          }
          if (!witness)
            rep.fail("hyperbasis-cylindrifier",
                     "member " + std::to_string(h) + " " + tupleStr(t) +
                         " position " + std::to_string(i),
                     S.names[N.label[r]], S.names[a]);
        }
    }
  }

  for (std::size_t p = 0; p < H.size(); ++p)
    for (std::size_t q = 0; q < H.size(); ++q)
      for (int x = 0; x < m; ++x)
        for (int y = x; y < m; ++y) {
          if (!agreeOff(H[p], H[q], {x, y}, ops)) continue;
          bool found = false;
          for (const auto& L : H) {
            if (agreeOff(H[p], L, {x}, ops) && agreeOff(L, H[q], {y}, ops)) {
              found = true;
              break;
            }
          }
          if (!found)
            rep.fail("hyperbasis-amalgamation",
                     "members " + std::to_string(p) + "," + std::to_string(q) +
                         " at x=" + std::to_string(x) +
                         " y=" + std::to_string(y));
        }

  if (requireSymmetry) {
    std::vector<int> sigma(m, 0);
    for (;;) {
      for (std::size_t h = 0; h < H.size(); ++h) {
        ops.charge(H[h].net.tupleCount(), "check_hyperbasis: symmetry scan");
        Hypernetwork img = H[h];
        const std::uint64_t T = img.net.tupleCount();
        std::vector<int> mapped(S.dim);
        for (std::uint64_t r = 0; r < T; ++r) {
          std::vector<int> t = img.net.unrank(r);
          for (int i = 0; i < S.dim; ++i) mapped[i] = sigma[t[i]];
          img.net.label[r] = H[h].net.at(mapped);
        }
        for (auto& [s, v] : img.hyper) {
          std::vector<int> ms(s.size());
          for (std::size_t i = 0; i < s.size(); ++i) ms[i] = sigma[s[i]];
          v = hyperAt(H[h], ms);
        }
        bool member = false;
        for (const auto& N : H) member |= N == img;
        if (!member)
          rep.fail("hyperbasis-symmetry",
                   "member " + std::to_string(h) + " o " + tupleStr(sigma));
      }
      int p = m - 1;
      while (p >= 0 && sigma[p] == m - 1) sigma[p--] = 0;
      if (p < 0) break;
      ++sigma[p];
    }
  }
  rep.stats["ops"] = ops.used;
  return rep;
}

}  // namespace relwb
