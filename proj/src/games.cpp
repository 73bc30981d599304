#include "relwb/games.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace relwb {

std::string winner_name(Winner w) {
  return w == Winner::Exists ? "Exists" : "Forall";
}

Winner winner_from_name(const std::string& s) {
  if (s == "Exists") return Winner::Exists;
  if (s == "Forall") return Winner::Forall;
  throw UsageError("unknown winner: " + s);
}

namespace {

struct Effort {
  std::uint64_t used = 0;
  std::uint64_t budget = 0;
  void charge(std::uint64_t c = 1) {
    used += c;
    if (used > budget) throw BudgetError("solve: state budget exceeded");
  }
};

const std::vector<std::vector<int>>& perms(int k) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  auto& v = cache[k];
  if (v.empty()) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do v.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  return v;
}

Network canonize(const Network& N, Effort& eff) {
  if (N.nodes <= 1) return N;
  const std::uint64_t T = N.tupleCount();
  Network best = N;
  for (const auto& p : perms(N.nodes)) {
    eff.charge();
    Network M(N.dim, N.nodes);
    for (std::uint64_t r = 0; r < T; ++r) {
      std::vector<int> t = N.unrank(r);
      for (int& x : t) x = p[x];
      M.label[M.rank(t)] = N.label[r];
    }
    if (M.label < best.label) best = M;
  }
  return best;
}

std::string netKey(const Network& N) {
  std::string k = "n" + std::to_string(N.nodes) + ":";
  for (std::size_t i = 0; i < N.label.size(); ++i) {
    if (i) k += ",";
    k += std::to_string(N.label[i]);
  }
  return k;
}

Network restrictNet(const Network& N, int v) {
  Network R(N.dim, N.nodes - 1);
  const std::uint64_t T = R.tupleCount();
  for (std::uint64_t r = 0; r < T; ++r) {
    std::vector<int> t = R.unrank(r);
    for (int& x : t)
      if (x >= v) ++x;
    R.label[r] = N.at(t);
  }
  return R;
}

// ---------------------------------------------------------------- engine

template <class M>
struct Engine {
  M& m;
  Effort& eff;
  std::map<std::string, bool> memo = {};
  std::map<std::string, std::string> forallPick = {}, existsPick = {};

  bool existsWins(const typename M::State& s, int rl) {
    if (rl <= 0) return true;
    const std::string key = m.stateKey(s, rl);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    eff.charge();
    bool all = true;
    for (const auto& mv : m.forallMoves(s)) {
      bool answered = false;
      for (const auto& [rstr, rs] : m.existsReplies(s, mv))
        if (existsWins(rs, rl - 1)) {
          answered = true;
          existsPick.emplace(key + "|" + mv.str, rstr);
          break;
        }
      if (!answered) {
        all = false;
        forallPick.emplace(key, mv.str);
        break;
      }
    }
    memo[key] = all;
    return all;
  }
};

template <class M>
GameOutcome runGame(M& m, int rounds, std::uint64_t budget) {
  Effort eff{0, budget};
  m.eff = &eff;
  Engine<M> e{m, eff};
  const bool ew = e.existsWins(m.initial(), rounds);
  GameOutcome out;
  out.winner = ew ? Winner::Exists : Winner::Forall;
  out.strategy = ew ? std::move(e.existsPick) : std::move(e.forallPick);

  typename M::State s = m.initial();
  int rl = rounds;
  if (rl == 0) out.trace.push_back("Exists survives all rounds");
  while (rl > 0) {
    auto moves = m.forallMoves(s);
    if (moves.empty()) {
      out.trace.push_back("Forall has no move; Exists survives");
      break;
    }
    const std::string key = m.stateKey(s, rl);
    std::size_t mi = 0;
    if (!ew)
      if (auto it = out.strategy.find(key); it != out.strategy.end())
        for (std::size_t i = 0; i < moves.size(); ++i)
          if (moves[i].str == it->second) {
            mi = i;
            break;
          }
    out.trace.push_back("Forall: " + moves[mi].str);
    auto replies = m.existsReplies(s, moves[mi]);
    if (replies.empty()) {
      out.trace.push_back("Exists cannot reply");
      break;
    }
    std::size_t ri = 0;
    if (ew)
      if (auto it = out.strategy.find(key + "|" + moves[mi].str);
          it != out.strategy.end())
        for (std::size_t i = 0; i < replies.size(); ++i)
          if (replies[i].first == it->second) {
            ri = i;
            break;
          }
    out.trace.push_back("Exists: " + replies[ri].first);
    s = replies[ri].second;
    if (--rl == 0) out.trace.push_back("Exists survives all rounds");
  }
  out.statesExplored = eff.used;
  return out;
}

template <class M>
bool verifyGame(M& m, const GameOutcome& out, int rounds) {
  Effort eff{0, ~0ull};
  m.eff = &eff;
  std::map<std::string, bool> seen;
  std::function<bool(const typename M::State&, int)> walk =
      [&](const typename M::State& s, int rl) -> bool {
    if (rl <= 0) return out.winner == Winner::Exists;
    const std::string key = m.stateKey(s, rl);
    if (auto it = seen.find(key); it != seen.end()) return it->second;
    auto moves = m.forallMoves(s);
    bool ok;
    if (out.winner == Winner::Forall) {
      ok = false;
      auto pick = out.strategy.find(key);
      if (pick != out.strategy.end())
        for (const auto& mv : moves)
          if (mv.str == pick->second) {
            ok = true;
            for (const auto& [rstr, rs] : m.existsReplies(s, mv))
              ok = ok && walk(rs, rl - 1);
            break;
          }
    } else {
      ok = true;
      for (const auto& mv : moves) {
        bool found = false;
        auto pick = out.strategy.find(key + "|" + mv.str);
        if (pick != out.strategy.end())
          for (const auto& [rstr, rs] : m.existsReplies(s, mv))
            if (rstr == pick->second) {
              found = walk(rs, rl - 1);
              break;
            }
        ok = ok && found;
        if (!ok) break;
      }
    }
    seen[key] = ok;
    return ok;
  };
  return walk(m.initial(), rounds);
}

// ---------------------------------------------------------------- EF

struct EfMove {
  std::string str;
  int remove;  // pair index picked up, or -1
  bool sideB;
  int elem;
};

struct EfModel {
  using State = std::vector<std::pair<int, int>>;
  const PebbleStructure& A;
  const PebbleStructure& B;
  int pebbles;
  EfMode mode;
  Effort* eff = nullptr;

  State initial() const { return {}; }

  std::string stateKey(const State& s, int rl) const {
    std::string k = "r" + std::to_string(rl) + "|";
    for (const auto& [a, b] : s)
      k += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return k;
  }

  bool occupied(const State& s, bool sideB, int x, int skip) const {
    for (int i = 0; i < int(s.size()); ++i)
      if (i != skip && (sideB ? s[i].second : s[i].first) == x) return true;
    return false;
  }

  std::vector<EfMove> forallMoves(const State& s) const {
    std::vector<EfMove> out;
    const int sides = mode == EfMode::Forth ? 1 : 2;
    for (int sb = 0; sb < sides; ++sb) {
      const PebbleStructure& P = sb ? B : A;
      if (int(s.size()) < pebbles)
        for (int x = 0; x < P.size; ++x)
          if (!occupied(s, sb, x, -1))
            out.push_back({std::string(sb ? "B" : "A") + "+" + std::to_string(x),
                           -1, bool(sb), x});
    }
    for (int i = 0; i < int(s.size()); ++i)
      for (int sb = 0; sb < sides; ++sb) {
        const PebbleStructure& P = sb ? B : A;
        for (int x = 0; x < P.size; ++x)
          if (!occupied(s, sb, x, i))
            out.push_back({"lift(" + std::to_string(s[i].first) + "," +
                               std::to_string(s[i].second) + ") " +
                               (sb ? "B" : "A") + "+" + std::to_string(x),
                           i, bool(sb), x});
      }
    return out;
  }

  bool pairOk(const State& rest, std::pair<int, int> np) const {
    auto fwd = [&](std::pair<int, int> u, std::pair<int, int> v) {
      for (const auto& [name, pairs] : A.relations)
        if (A.related(name, u.first, v.first) &&
            !B.related(name, u.second, v.second))
          return false;
      return true;
    };
    auto bwd = [&](std::pair<int, int> u, std::pair<int, int> v) {
      for (const auto& [name, pairs] : B.relations)
        if (B.related(name, u.second, v.second) &&
            !A.related(name, u.first, v.first))
          return false;
      return true;
    };
    const bool iso = mode == EfMode::BackAndForth;
    if (!fwd(np, np) || (iso && !bwd(np, np))) return false;
    for (const auto& q : rest) {
      if (!fwd(np, q) || !fwd(q, np)) return false;
      if (iso && (!bwd(np, q) || !bwd(q, np))) return false;
    }
    return true;
  }

  std::vector<std::pair<std::string, State>> existsReplies(
      const State& s, const EfMove& mv) const {
    eff->charge();
    State rest;
    for (int i = 0; i < int(s.size()); ++i)
      if (i != mv.remove) rest.push_back(s[i]);
    std::vector<std::pair<std::string, State>> out;
    const PebbleStructure& other = mv.sideB ? A : B;
    for (int y = 0; y < other.size; ++y) {
      // a partial isomorphism must stay injective; homomorphisms need not
      if (mode == EfMode::BackAndForth && occupied(rest, !mv.sideB, y, -1))
        continue;
      const std::pair<int, int> np =
          mv.sideB ? std::make_pair(y, mv.elem) : std::make_pair(mv.elem, y);
      if (!pairOk(rest, np)) continue;
      State ns = rest;
      ns.insert(std::lower_bound(ns.begin(), ns.end(), np), np);
      out.push_back({"reply " + std::to_string(y), ns});
    }
    return out;
  }
};

// ---------------------------------------------------------------- CA

struct CaMove {
  std::string str;
  int kind;  // 0 atom, 1 demand, 2 delete, 3 delete then demand
  int atom;
  int del;
  std::uint64_t rank;
  int i, a;
};

struct CaModel {
  using State = Network;  // nodes == 0 encodes "before round 0"
  const CaAtomStructure& S;
  int cap;
  bool reuse;
  Effort* eff = nullptr;

  State initial() const { return Network(); }

  std::string stateKey(const State& s, int rl) const {
    if (s.nodes == 0) return "r" + std::to_string(rl) + "|start";
    return "r" + std::to_string(rl) + "|" + netKey(s);
  }

  void demandsOn(const Network& N, const std::string& prefix, int kind,
                 int del, std::vector<CaMove>& out) const {
    const std::uint64_t T = N.tupleCount();
    for (std::uint64_t r = 0; r < T; ++r)
      for (int i = 0; i < S.dim; ++i)
        for (int a = 0; a < S.k; ++a)
          if (S.cylRel(i, N.label[r], a))
            out.push_back({prefix + "demand x" + std::to_string(r) + " i" +
                               std::to_string(i) + " " + S.names[a],
                           kind, -1, del, r, i, a});
  }

  std::vector<CaMove> forallMoves(const State& s) const {
    std::vector<CaMove> out;
    if (s.nodes == 0) {
      for (int a = 0; a < S.k; ++a)
        out.push_back({"atom " + S.names[a], 0, a, -1, 0, -1, -1});
      return out;
    }
    if (s.nodes < cap) {
      demandsOn(s, "", 1, -1, out);
      return out;
    }
    if (!reuse) {
      if (s.nodes >= 2)
        for (int v = 0; v < s.nodes; ++v)
          out.push_back({"delete " + std::to_string(v), 2, -1, v, 0, -1, -1});
      return out;
    }
    demandsOn(s, "", 1, -1, out);
    if (s.nodes >= 2)
      for (int v = 0; v < s.nodes; ++v)
        demandsOn(restrictNet(s, v), "delete " + std::to_string(v) + "; ", 3,
                  v, out);
    return out;
  }

  // all total labelings extending `fixed` (-1 = free), emitted in lex order
  template <class F>
  void labelAll(Network& N, std::vector<int> lab, F&& emit) const {
    const std::uint64_t T = N.tupleCount();
    std::vector<std::vector<int>> tup(T);
    for (std::uint64_t r = 0; r < T; ++r) tup[r] = N.unrank(r);
    auto ok = [&](std::uint64_t r, int a) {
      const std::vector<int>& t = tup[r];
      for (int i = 0; i < S.dim; ++i)
        for (int j = i + 1; j < S.dim; ++j) {
          if (t[i] == t[j] && !S.diagAt(i, j).test(a)) return false;
          if (S.hasSubst()) {
            std::vector<int> u = t;
            std::swap(u[i], u[j]);
            const int p = lab[N.rank(u)];
            if (p >= 0 && p != S.subst[S.pairIndex(i, j)][a]) return false;
          }
        }
      std::vector<int> u = t;
      for (int i = 0; i < S.dim; ++i) {
        for (int d = 0; d < N.nodes; ++d) {
          u[i] = d;
          const int p = lab[N.rank(u)];
          if (p >= 0 && d != t[i] && !S.cylRel(i, a, p)) return false;
        }
        u[i] = t[i];
      }
      return true;
    };
    for (std::uint64_t r = 0; r < T; ++r)
      if (lab[r] >= 0) {
        const int a = lab[r];
        lab[r] = -1;
        const bool fine = ok(r, a);
        lab[r] = a;
        if (!fine) return;
      }
    std::vector<std::uint64_t> order;
    for (std::uint64_t r = 0; r < T; ++r)
      if (lab[r] < 0) order.push_back(r);
    std::function<void(std::size_t)> go = [&](std::size_t idx) {
      eff->charge();
      if (idx == order.size()) {
        N.label = lab;
        emit(N);
        return;
      }
      const std::uint64_t r = order[idx];
      for (int a = 0; a < S.k; ++a) {
        if (!ok(r, a)) continue;
        lab[r] = a;
        go(idx + 1);
        lab[r] = -1;
      }
    };
    go(0);
  }

  // her reply to an atom has node set = the played tuple, so the candidates
  // run over every identification pattern of the coordinates
  std::vector<Network> round0(int atom) const {
    std::vector<Network> res;
    std::vector<int> pat(S.dim, 0);
    std::function<void(int, int)> gen = [&](int i, int c) {
      if (i == S.dim) {
        if (c > cap) return;
        Network N(S.dim, c);
        std::vector<int> fixed(N.tupleCount(), -1);
        fixed[N.rank(pat)] = atom;
        labelAll(N, fixed, [&](const Network& M) { res.push_back(M); });
        return;
      }
      for (int v = 0; v <= c; ++v) {
        pat[i] = v;
        gen(i + 1, std::max(c, v + 1));
      }
    };
    gen(0, 0);
    return res;
  }

  std::vector<std::pair<std::string, State>> existsReplies(
      const State& s, const CaMove& mv) const {
    std::vector<std::pair<std::string, State>> out;
    std::set<std::string> dedupe;
    auto add = [&](const std::string& str, const Network& N) {
      Network C = canonize(N, *eff);
      const std::string key = netKey(C);
      if (dedupe.insert(key).second)
        out.push_back({str.empty() ? key : str, std::move(C)});
    };
    if (mv.kind == 0) {
      for (const Network& N : round0(mv.atom)) add("", N);
      return out;
    }
    if (mv.kind == 2) {
      add("ok", restrictNet(s, mv.del));
      return out;
    }
    const Network base = mv.kind == 3 ? restrictNet(s, mv.del) : s;
    std::vector<int> x = base.unrank(mv.rank);
    std::vector<int> u = x;
    for (int z = 0; z < base.nodes; ++z) {
      u[mv.i] = z;
      if (base.at(u) == mv.a) add("witness " + std::to_string(z), base);
    }
    if (base.nodes < cap) {
      Network ext(S.dim, base.nodes + 1);
      const std::uint64_t T = ext.tupleCount();
      std::vector<int> fixed(T, -1);
      for (std::uint64_t r = 0; r < T; ++r) {
        std::vector<int> t = ext.unrank(r);
        bool old = true;
        for (int cidx : t) old = old && cidx < base.nodes;
        if (old) fixed[r] = base.at(t);
      }
      u = x;
      u[mv.i] = base.nodes;
      fixed[ext.rank(u)] = mv.a;
      labelAll(ext, fixed, [&](const Network& N) { add("", N); });
    }
    return out;
  }
};

// ---------------------------------------------------------------- RA

struct RaMove {
  std::string str;
  int kind;  // 0 atom, 1 triangle
  int atom;
  int x, y, a, b;
};

struct RaModel {
  using State = Network;  // dim 2; nodes == 0 encodes "before round 0"
  const RaAtomStructure& S;
  int cap;
  Effort* eff = nullptr;

  State initial() const { return Network(); }

  std::string stateKey(const State& s, int rl) const {
    if (s.nodes == 0) return "r" + std::to_string(rl) + "|start";
    return "r" + std::to_string(rl) + "|" + netKey(s);
  }

  std::vector<RaMove> forallMoves(const State& s) const {
    std::vector<RaMove> out;
    if (s.nodes == 0) {
      for (int a = 0; a < S.k; ++a)
        out.push_back({"atom " + S.names[a], 0, a, -1, -1, -1, -1});
      return out;
    }
    for (int x = 0; x < s.nodes; ++x)
      for (int y = 0; y < s.nodes; ++y)
        for (int a = 0; a < S.k; ++a)
          for (int b = 0; b < S.k; ++b)
            if (S.cons(s.at({x, y}), a, b))
              out.push_back({"triangle (" + std::to_string(x) + "," +
                                 std::to_string(y) + ") " + S.names[a] + ";" +
                                 S.names[b],
                             1, -1, x, y, a, b});
    return out;
  }

  // triangles through the pair (u,v) whose other two edges are assigned;
  // one orientation suffices: consistency is closed under the cycle laws
  bool triOk(const Network& N, const std::vector<char>& has, int u,
             int v) const {
    for (int w = 0; w < N.nodes; ++w) {
      if (!has[std::min(u, w) * N.nodes + std::max(u, w)] ||
          !has[std::min(w, v) * N.nodes + std::max(w, v)])
        continue;
      if (!S.cons(N.at({u, v}), N.at({u, w}), N.at({w, v}))) return false;
    }
    return true;
  }

  // a one-node reply for identity atoms, and two-node replies with the atom
  // on the edge — legal even for identity atoms placed off the diagonal
  std::vector<Network> round0(int atom) const {
    std::vector<Network> res;
    if (S.identity.test(atom) && S.cons(atom, atom, atom)) {
      Network N(2, 1);
      N.set({0, 0}, atom);
      res.push_back(N);
    }
    if (cap < 2) return res;
    S.identity.for_each([&](int e) {
      S.identity.for_each([&](int f) {
        Network N(2, 2);
        N.set({0, 0}, e);
        N.set({1, 1}, f);
        N.set({0, 1}, atom);
        N.set({1, 0}, S.conv[atom]);
        std::vector<char> has(4, 1);
        if (triOk(N, has, 0, 0) && triOk(N, has, 0, 1) && triOk(N, has, 1, 1))
          res.push_back(N);
      });
    });
    return res;
  }

  std::vector<std::pair<std::string, State>> existsReplies(
      const State& s, const RaMove& mv) const {
    std::vector<std::pair<std::string, State>> out;
    std::set<std::string> dedupe;
    auto add = [&](const std::string& str, const Network& N) {
      Network C = canonize(N, *eff);
      const std::string key = netKey(C);
      if (dedupe.insert(key).second)
        out.push_back({str.empty() ? key : str, std::move(C)});
    };
    if (mv.kind == 0) {
      for (const Network& N : round0(mv.atom)) add("", N);
      return out;
    }
    for (int z = 0; z < s.nodes; ++z)
      if (s.at({mv.x, z}) == mv.a && s.at({z, mv.y}) == mv.b)
        add("witness " + std::to_string(z), s);
    if (s.nodes >= cap) return out;
    const int w = s.nodes;
    if (mv.x == mv.y && S.conv[mv.a] != mv.b) return out;
    Network ext(2, w + 1);
    for (int p = 0; p < w; ++p)
      for (int q = 0; q < w; ++q) ext.set({p, q}, s.at({p, q}));
    std::vector<char> has(std::size_t(w + 1) * (w + 1), 0);
    for (int p = 0; p < w; ++p)
      for (int q = p; q < w; ++q) has[p * (w + 1) + q] = 1;
    auto assign = [&](int u, int c) {
      ext.set({u, w}, c);
      ext.set({w, u}, S.conv[c]);
      has[u * (w + 1) + w] = 1;
    };
    auto unassign = [&](int u) { has[u * (w + 1) + w] = 0; };
    assign(mv.x, mv.a);
    if (mv.x != mv.y) {
      ext.set({w, mv.y}, mv.b);
      ext.set({mv.y, w}, S.conv[mv.b]);
      has[mv.y * (w + 1) + w] = 1;
    }
    if (!triOk(ext, has, mv.x, w) ||
        (mv.x != mv.y && !triOk(ext, has, mv.y, w)))
      return out;
    std::vector<int> free;
    for (int u = 0; u < w; ++u)
      if (u != mv.x && u != mv.y) free.push_back(u);
    std::function<void(std::size_t)> go = [&](std::size_t idx) {
      eff->charge();
      if (idx == free.size()) {
        // the loop edge carries an identity atom
        bool emitted = false;
        S.identity.for_each([&](int e) {
          ext.set({w, w}, e);
          has[w * (w + 1) + w] = 1;
          if (S.cons(e, e, e) && triOk(ext, has, w, w)) {
            bool fine = true;
            for (int u = 0; u <= w && fine; ++u)
              fine = !has[u * (w + 1) + w] || triOk(ext, has, u, w);
            if (fine) {
              add("", ext);
              emitted = true;
            }
          }
          has[w * (w + 1) + w] = 0;
        });
        (void)emitted;
        return;
      }
      const int u = free[idx];
      for (int c = 0; c < S.k; ++c) {
        assign(u, c);
        if (triOk(ext, has, u, w)) go(idx + 1);
        unassign(u);
      }
    };
    go(0);
    return out;
  }
};

}  // namespace

GameOutcome solve_ef(const PebbleStructure& A, const PebbleStructure& B,
                     int pebbles, int rounds, EfMode mode,
                     std::uint64_t stateBudget) {
  if (pebbles < 1 || rounds < 0)
    throw UsageError("solve_ef: need pebbles >= 1 and rounds >= 0");
  EfModel m{A, B, pebbles, mode};
  return runGame(m, rounds, stateBudget);
}

GameOutcome solve_ca_game(const CaAtomStructure& S, int nodeCap, int rounds,
                          bool reuse, std::uint64_t stateBudget) {
  if (nodeCap < S.dim || rounds < 0)
    throw UsageError("solve_ca_game: need nodeCap >= dim and rounds >= 0");
  if (nodeCap > 8)
    throw UsageError("solve_ca_game: node cap limited to 8 (canonicalization)");
  CheckReport v = S.validate();
  if (!v.passed) throw UsageError("solve_ca_game: invalid atom structure");
  CaModel m{S, nodeCap, reuse};
  return runGame(m, rounds, stateBudget);
}

GameOutcome solve_ra_game(const RaAtomStructure& S, int nodeCap, int rounds,
                          std::uint64_t stateBudget) {
  if (nodeCap < 1 || rounds < 0)
    throw UsageError("solve_ra_game: need nodeCap >= 1 and rounds >= 0");
  if (nodeCap > 8)
    throw UsageError("solve_ra_game: node cap limited to 8 (canonicalization)");
  // the game is meaningful for any structure with sound converse, identity
  // and cycle laws; associativity of the complex algebra is not needed
  CheckReport v = check_ra_atomstructure(S);
  for (const auto& c : v.counterexamples)
    if (c.axiomId != "associativity")
      throw UsageError("solve_ra_game: invalid atom structure (" + c.axiomId +
                       ")");
  RaModel m{S, nodeCap};
  return runGame(m, rounds, stateBudget);
}

bool verify_ef_strategy(const GameOutcome& out, const PebbleStructure& A,
                        const PebbleStructure& B, int pebbles, int rounds,
                        EfMode mode) {
  EfModel m{A, B, pebbles, mode};
  return verifyGame(m, out, rounds);
}

bool verify_ca_strategy(const GameOutcome& out, const CaAtomStructure& S,
                        int nodeCap, int rounds, bool reuse) {
  CaModel m{S, nodeCap, reuse};
  return verifyGame(m, out, rounds);
}

bool verify_ra_strategy(const GameOutcome& out, const RaAtomStructure& S,
                        int nodeCap, int rounds) {
  RaModel m{S, nodeCap};
  return verifyGame(m, out, rounds);
}

}  // namespace relwb
