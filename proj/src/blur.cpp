#include "relwb/blur.hpp"

#include <algorithm>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relwb {

namespace {

std::string setName(const RaAtomStructure& S, const AtomSet& X) {
  std::string s = "{";
  bool first = true;
  X.for_each([&](int a) {
    if (!first) s += ",";
    s += S.names[a];
    first = false;
  });
  return s + "}";
}

struct OpsGuard {
  std::uint64_t used = 0, budget;
  explicit OpsGuard(std::uint64_t b) : budget(b) {}
  void charge(std::uint64_t n, const char* where) {
    used += n;
    if (used > budget)
      throw BudgetError(std::string("blur: ") + where +
                        " exceeds the ops budget (" + std::to_string(used) +
                        " > " + std::to_string(budget) + "); shrink J or raise the budget");
  }
};

} // namespace

BlurInstance blur_all_subsets(const RaAtomStructure& S, int l, int m,
                              std::uint64_t maxSets) {
  if (S.k <= 0) throw UsageError("blur: empty atom structure");
  if (l < 1) throw UsageError("blur: subset size must be >= 1");
  if (m < 2) throw UsageError("blur: arity must be >= 2");
  BlurInstance B;
  B.S = S;
  B.I = ~S.identity & AtomSet::full(S.k);
  B.m = m;
  std::vector<int> atoms = B.I.elems();
  int n = int(atoms.size());
  if (l > n) throw UsageError("blur: subset size exceeds the diversity atom count");
  // C(n,l) with overflow care
  std::uint64_t count = 1;
  for (int i = 1; i <= l; ++i) {
    count = count * std::uint64_t(n - l + i) / std::uint64_t(i);
    if (count > maxSets)
      throw BudgetError("blur: " + std::to_string(n) + " choose " +
                        std::to_string(l) + " subsets exceed the cap " +
                        std::to_string(maxSets));
  }
  std::vector<int> idx(l);
  for (int i = 0; i < l; ++i) idx[i] = i;
  B.J.reserve(count);
  while (true) {
    AtomSet W(S.k);
    for (int i : idx) W.set(atoms[i]);
    B.J.push_back(W);
    int p = l - 1;
    while (p >= 0 && idx[p] == n - l + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < l; ++q) idx[q] = idx[q - 1] + 1;
  }
  return B;
}

CheckReport blur_check(const BlurInstance& B, std::uint64_t opsBudget, int jobs) {
  const RaAtomStructure& S = B.S;
  const int k = S.k;
  if (k <= 0) throw UsageError("blur: empty atom structure");
  if (B.m < 2) throw UsageError("blur: arity must be >= 2");
  AtomSet I = ~S.identity & AtomSet::full(k);
  if (B.I != I) throw UsageError("blur: I must be exactly the diversity atoms of S");
  for (const AtomSet& W : B.J)
    if (!W.subset_of(I)) throw UsageError("blur: member of J not a subset of I");

  CheckReport rep;
  rep.name = "blur";
  const int nJ = int(B.J.size());
  const int arity = B.m - 1;  // choices indexed 2..m
  rep.stats["atoms"] = std::uint64_t(k);
  rep.stats["I"] = std::uint64_t(I.count());
  rep.stats["J"] = std::uint64_t(nJ);
  rep.stats["m"] = std::uint64_t(B.m);
  OpsGuard ops(opsBudget);

  CheckReport c1, c2, c3, c4, c5;

  // (1) every member nonempty
  for (int t = 0; t < nJ; ++t)
    if (B.J[t].none()) c1.fail("blur-1-nonempty", "J[" + std::to_string(t) + "] is empty");

  // (2) union J = I
  {
    AtomSet u(k);
    for (const AtomSet& W : B.J) u |= W;
    if (u != I)
      c2.fail("blur-2-cover", "union of J differs from I", setName(S, u), setName(S, I));
  }

  // Is anything forbidden among diversity triples at all?  A structure with
  // no forbidden diversity triangle satisfies (3),(4),(5) outright, and the
  // shortcut keeps huge all-subset families affordable.
  bool anyForbidden = false;
  ops.charge(std::uint64_t(I.count()) * I.count() * (std::uint64_t(k) / 64 + 1),
             "the triple pre-scan");
  std::vector<AtomSet> badC(std::size_t(k) * k);  // badC[a*k+b] = I minus {c: a<=b;c}
  I.for_each([&](int a) {
    I.for_each([&](int b) {
      AtomSet bad = I & ~S.thirds(a, b);
      anyForbidden = anyForbidden || bad.any();
      badC[std::size_t(a) * k + b] = std::move(bad);
    });
  });

  // (3) I <= P;W
  if (anyForbidden) {
    std::uint64_t szJ = 0;
    for (const AtomSet& W : B.J) szJ += W.count();
    ops.charge(std::uint64_t(I.count()) * szJ * (std::uint64_t(k) / 64 + 1),
               "the composition-cover scan (3)");
    I.for_each([&](int P) {
      for (int t = 0; t < nJ && c3.counterexamples.size() < 8; ++t) {
        AtomSet comp(k);
        B.J[t].for_each([&](int w) { comp |= S.comp_atoms(P, w); });
        if (!I.subset_of(comp))
          c3.fail("blur-3-composition",
                  "I is not below " + S.names[P] + ";J[" + std::to_string(t) + "]",
                  setName(S, I & comp), setName(S, I));
      }
    });
  }

  // (4) safety: distinct bad-completion sets over pairs (V,W) in J^2, then
  // every (m-1)-tuple of them must leave some T in J untouched.
  if (anyForbidden && nJ > 0) {
    std::uint64_t maxSz = 0;
    for (const AtomSet& W : B.J) maxSz = std::max<std::uint64_t>(maxSz, W.count());
    ops.charge(std::uint64_t(nJ) * nJ * maxSz * maxSz, "the safety pair scan (4)");
    // bad(V,W) = union of badC over V x W; dedupe with a representative pair
    std::map<AtomSet, std::pair<int, int>> dist;
    const int nt = jobs > 0 ? jobs : 1;
#pragma omp parallel num_threads(nt) if (jobs != 1)
    {
      std::map<AtomSet, std::pair<int, int>> mine;
#pragma omp for schedule(static)
      for (int v = 0; v < nJ; ++v)
        for (int w = 0; w < nJ; ++w) {
          AtomSet bad(k);
          B.J[v].for_each([&](int a) {
            B.J[w].for_each([&](int b) { bad |= badC[std::size_t(a) * k + b]; });
          });
          auto it = mine.find(bad);
          if (it == mine.end()) mine.emplace(std::move(bad), std::make_pair(v, w));
          else if (std::make_pair(v, w) < it->second) it->second = {v, w};
        }
#pragma omp critical
      for (auto& [bad, vw] : mine) {
        auto it = dist.find(bad);
        if (it == dist.end()) dist.emplace(bad, vw);
        else if (vw < it->second) it->second = vw;
      }
    }
    rep.stats["distinct_bad_sets"] = dist.size();
    std::vector<std::pair<AtomSet, std::pair<int, int>>> bads(dist.begin(), dist.end());
    const int nd = int(bads.size());
    std::uint64_t combos = 1;
    for (int i = 0; i < arity; ++i) {
      combos *= std::uint64_t(nd);
      if (combos > opsBudget) break;
    }
    ops.charge(combos, "the safety combination scan (4)");
    std::vector<int> pick(arity, 0);
    while (true) {
      AtomSet u(k);
      for (int i = 0; i < arity; ++i) u |= bads[pick[i]].first;
      bool found = false;
      for (int t = 0; t < nJ && !found; ++t) found = !B.J[t].intersects(u);
      if (!found && c4.counterexamples.size() < 8) {
        std::string wit;
        for (int i = 0; i < arity; ++i) {
          auto [v, w] = bads[pick[i]].second;
          wit += "V" + std::to_string(i + 2) + "=J[" + std::to_string(v) +
                 "] W" + std::to_string(i + 2) + "=J[" + std::to_string(w) + "] ";
        }
        c4.fail("blur-4-safe", wit + "forbid " + setName(S, u) + "; no T in J avoids it");
      } else if (!found) {
        c4.passed = false;
        ++c4.stats["failures"];
      }
      int p = arity - 1;
      while (p >= 0 && pick[p] == nd - 1) pick[p--] = 0;
      if (p < 0) break;
      ++pick[p];
    }
  }

  // (5) W meets P_2;Q_2 & ... & P_m;Q_m
  if (anyForbidden && nJ > 0) {
    std::map<AtomSet, std::pair<int, int>> comps;
    I.for_each([&](int P) {
      I.for_each([&](int Q) {
        AtomSet c = I & S.comp_atoms(P, Q);
        auto it = comps.find(c);
        if (it == comps.end()) comps.emplace(std::move(c), std::make_pair(P, Q));
      });
    });
    std::vector<std::pair<AtomSet, std::pair<int, int>>> cs(comps.begin(), comps.end());
    const int nc = int(cs.size());
    rep.stats["distinct_compositions"] = std::uint64_t(nc);
    std::uint64_t combos = 1;
    for (int i = 0; i < arity; ++i) {
      combos *= std::uint64_t(nc);
      if (combos > opsBudget) break;
    }
    ops.charge(combos * (std::uint64_t(nJ) + std::uint64_t(k) / 64 + 1),
               "the intersection scan (5)");
    std::vector<int> pick(arity, 0);
    while (true) {
      AtomSet x = AtomSet::full(k);
      for (int i = 0; i < arity; ++i) x &= cs[pick[i]].first;
      for (int t = 0; t < nJ; ++t)
        if (!B.J[t].intersects(x)) {
          if (c5.counterexamples.size() < 8) {
            std::string wit = "W=J[" + std::to_string(t) + "]";
            for (int i = 0; i < arity; ++i) {
              auto [P, Q] = cs[pick[i]].second;
              wit += " P" + std::to_string(i + 2) + "=" + S.names[P] + " Q" +
                     std::to_string(i + 2) + "=" + S.names[Q];
            }
            c5.fail("blur-5-intersect", wit, setName(S, B.J[t]), setName(S, x));
          } else {
            c5.passed = false;
            ++c5.stats["failures"];
          }
        }
      int p = arity - 1;
      while (p >= 0 && pick[p] == nc - 1) pick[p--] = 0;
      if (p < 0) break;
      ++pick[p];
    }
  }

  rep.stats["ops"] = ops.used;
  for (CheckReport* c : {&c1, &c2, &c3, &c4, &c5}) rep.merge(*c);
  return rep;
}

} // namespace relwb
