#include "relwb/axioms.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relwb {

std::string variant_name(AxVariant v) {
  switch (v) {
    case AxVariant::CA: return "CA";
    case AxVariant::PTA: return "PTA";
    case AxVariant::TA: return "TA";
    case AxVariant::PEA: return "PEA";
  }
  return "?";
}

AxVariant variant_from_name(const std::string& s) {
  std::string t;
  for (char c : s) {
    if (c == '_') break;  // accept CA_n, PTA_3, ...
    t += char(std::tolower((unsigned char)c));
  }
  if (t == "ca") return AxVariant::CA;
  if (t == "pta") return AxVariant::PTA;
  if (t == "ta") return AxVariant::TA;
  if (t == "pea") return AxVariant::PEA;
  throw UsageError("unknown axiom variant: " + s);
}

namespace {

std::vector<AtomSet> small_samples(int k) {
  std::vector<AtomSet> out;
  out.push_back(AtomSet(k));
  out.push_back(AtomSet::full(k));
  for (int a = 0; a < k; ++a) out.push_back(AtomSet::single(k, a));
  return out;
}

std::vector<AtomSet> powerset_samples(int k) {
  std::vector<AtomSet> out;
  out.reserve(std::size_t(1) << k);
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << k); ++m) {
    AtomSet s(k);
    for (int a = 0; a < k; ++a)
      if (m >> a & 1) s.set(a);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<AtomSet> one_var_samples(int k, bool fullPowerset) {
  if (fullPowerset) {
    if (k > 16) throw UsageError("full powerset mode limited to 16 atoms");
    return powerset_samples(k);
  }
  auto out = small_samples(k);
  long long pairs = (long long)k * (k - 1) / 2;
  if (pairs <= 20000) {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        AtomSet s = AtomSet::single(k, a);
        s.set(b);
        out.push_back(std::move(s));
      }
  } else {
    for (int a = 0; a < k; ++a)
      for (int d = 1; d <= 3 && d < k; ++d) {
        AtomSet s = AtomSet::single(k, a);
        s.set((a + d) % k);
        out.push_back(std::move(s));
      }
  }
  return out;
}

std::vector<AtomSet> two_var_samples(int k, bool fullPowerset) {
  if (fullPowerset && k <= 10) return powerset_samples(k);
  // the grid is quadratic in this list, so stride once atoms get plentiful
  int step = k > 300 ? (k + 299) / 300 : 1;
  std::vector<AtomSet> out;
  out.push_back(AtomSet(k));
  out.push_back(AtomSet::full(k));
  for (int a = 0; a < k; a += step) out.push_back(AtomSet::single(k, a));
  for (int a = 0; a + 1 < k; a += step) {
    AtomSet s = AtomSet::single(k, a);
    s.set(a + 1);
    out.push_back(std::move(s));
  }
  return out;
}

// only the associativity/distributivity shapes use three slots; cubic grid
std::vector<AtomSet> three_var_samples(int k) {
  int step = k > 24 ? (k + 23) / 24 : 1;
  std::vector<AtomSet> out;
  out.push_back(AtomSet(k));
  out.push_back(AtomSet::full(k));
  for (int a = 0; a < k; a += step) out.push_back(AtomSet::single(k, a));
  return out;
}

struct AxCtx {
  const CaAtomStructure& S;
  int jobs;
  std::vector<AtomSet> sm, s1, s2;
  std::vector<Counterexample> ces;
  std::mutex mu;
  std::uint64_t cases = 0;

  AxCtx(const CaAtomStructure& s, int j) : S(s), jobs(j) {}

  int threads() const {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
  }
  void record(const std::string& id, const std::string& wit, const AtomSet& l,
              const AtomSet& r) {
    std::lock_guard<std::mutex> g(mu);
    if (ces.size() < 4096) ces.push_back({id, wit, l.str(), r.str()});
  }
};

using Sides = std::pair<AtomSet, AtomSet>;

// lhs == rhs (le=false) or lhs <= rhs (le=true), scanned over one sample list.
template <class F>
void scan1(AxCtx& c, const std::string& id, const std::string& ix, bool le,
           F&& sides) {
  const auto& xs = c.s1;
  const int n = (int)xs.size();
  auto body = [&](int s) {
    Sides lr = sides(xs[s]);
    bool ok = le ? lr.first.subset_of(lr.second) : lr.first == lr.second;
    if (!ok) c.record(id, ix + " x=" + xs[s].str(), lr.first, lr.second);
  };
#ifdef _OPENMP
  if (c.jobs != 1) {
#pragma omp parallel for schedule(static) num_threads(c.threads())
    for (int s = 0; s < n; ++s) body(s);
    c.cases += n;
    return;
  }
#endif
  for (int s = 0; s < n; ++s) body(s);
  c.cases += n;
}

template <class F>
void scan2(AxCtx& c, const std::string& id, const std::string& ix, bool le,
           F&& sides) {
  const auto& xs = c.s2;
  const int n = (int)xs.size();
  const long long total = (long long)n * n;
  auto body = [&](long long st) {
    const AtomSet& x = xs[st / n];
    const AtomSet& y = xs[st % n];
    Sides lr = sides(x, y);
    bool ok = le ? lr.first.subset_of(lr.second) : lr.first == lr.second;
    if (!ok)
      c.record(id, ix + " x=" + x.str() + " y=" + y.str(), lr.first, lr.second);
  };
#ifdef _OPENMP
  if (c.jobs != 1) {
#pragma omp parallel for schedule(static) num_threads(c.threads())
    for (long long st = 0; st < total; ++st) body(st);
    c.cases += total;
    return;
  }
#endif
  for (long long st = 0; st < total; ++st) body(st);
  c.cases += total;
}

template <class F>
void scan3(AxCtx& c, const std::string& id, F&& sides) {
  const auto& xs = c.sm;
  const int n = (int)xs.size();
  const long long total = (long long)n * n * n;
  auto body = [&](long long t) {
    const AtomSet& x = xs[t / (n * n)];
    const AtomSet& y = xs[(t / n) % n];
    const AtomSet& z = xs[t % n];
    Sides lr = sides(x, y, z);
    if (!(lr.first == lr.second))
      c.record(id, "x=" + x.str() + " y=" + y.str() + " z=" + z.str(),
               lr.first, lr.second);
  };
#ifdef _OPENMP
  if (c.jobs != 1) {
#pragma omp parallel for schedule(static) num_threads(c.threads())
    for (long long t = 0; t < total; ++t) body(t);
    c.cases += total;
    return;
  }
#endif
  for (long long t = 0; t < total; ++t) body(t);
  c.cases += total;
}

void check0(AxCtx& c, const std::string& id, const std::string& ix,
            const AtomSet& l, const AtomSet& r, bool le = false) {
  ++c.cases;
  bool ok = le ? l.subset_of(r) : l == r;
  if (!ok) c.record(id, ix, l, r);
}

std::string ij(int i, int j) {
  return "i=" + std::to_string(i) + " j=" + std::to_string(j);
}

// Boolean-algebra block: commutativity, associativity, distributivity,
// complement laws. Cm is a field of sets, so these are sanity checks.
void ba_block(AxCtx& c, const std::string& id) {
  const int k = c.S.k;
  const AtomSet zero(k), one = AtomSet::full(k);
  scan2(c, id, "join-comm", false,
        [](const AtomSet& x, const AtomSet& y) { return Sides{x | y, y | x}; });
  scan3(c, id, [](const AtomSet& x, const AtomSet& y, const AtomSet& z) {
    return Sides{(x | y) | z, x | (y | z)};
  });
  scan3(c, id, [](const AtomSet& x, const AtomSet& y, const AtomSet& z) {
    return Sides{x & (y | z), (x & y) | (x & z)};
  });
  scan1(c, id, "compl", false, [&](const AtomSet& x) {
    return Sides{x | ~x, one};
  });
  scan1(c, id, "compl-meet", false, [&](const AtomSet& x) {
    return Sides{x & ~x, zero};
  });
}

void closure_block(AxCtx& c, const std::string& idNorm, const std::string& idExt,
                   const std::string& idIdem) {
  const auto& S = c.S;
  const AtomSet zero(S.k);
  for (int i = 0; i < S.dim; ++i) {
    std::string w = "i=" + std::to_string(i);
    check0(c, idNorm, w + " x=0", S.cylSet(i, zero), zero);
    scan2(c, idNorm, w, false, [&](const AtomSet& x, const AtomSet& y) {
      return Sides{S.cylSet(i, x | y), S.cylSet(i, x) | S.cylSet(i, y)};
    });
    scan1(c, idExt, w, true, [&](const AtomSet& x) {
      return Sides{x, S.cylSet(i, x)};
    });
    scan1(c, idIdem, w + " idem", false, [&](const AtomSet& x) {
      AtomSet cx = S.cylSet(i, x);
      return Sides{S.cylSet(i, cx), cx};
    });
    scan1(c, idIdem, w + " compl-closed", false, [&](const AtomSet& x) {
      AtomSet nc = ~S.cylSet(i, x);
      return Sides{S.cylSet(i, nc), nc};
    });
  }
}

void diag_block(AxCtx& c) {
  const auto& S = c.S;
  const AtomSet one = AtomSet::full(S.k);
  for (int i = 0; i < S.dim; ++i)
    check0(c, "C5", "i=" + std::to_string(i), S.diagAt(i, i), one);
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j)
      for (int kk = 0; kk < S.dim; ++kk) {
        if (kk == i || kk == j) continue;
        check0(c, "C6", ij(i, j) + " k=" + std::to_string(kk), S.diagAt(i, j),
               S.cylSet(kk, S.diagAt(i, kk) & S.diagAt(kk, j)));
      }
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j) {
      if (i == j) continue;
      scan1(c, "C7", ij(i, j), true, [&, i, j](const AtomSet& x) {
        return Sides{S.diagAt(i, j) & S.cylSet(i, S.diagAt(i, j) & x), x};
      });
    }
}

void ca_c4(AxCtx& c) {
  const auto& S = c.S;
  for (int i = 0; i < S.dim; ++i)
    for (int j = i + 1; j < S.dim; ++j)
      scan1(c, "C4", ij(i, j), false, [&, i, j](const AtomSet& x) {
        return Sides{S.cylSet(i, S.cylSet(j, x)), S.cylSet(j, S.cylSet(i, x))};
      });
}

void ca_c3_composite(AxCtx& c) {
  const auto& S = c.S;
  for (int i = 0; i < S.dim; ++i)
    scan2(c, "C3", "i=" + std::to_string(i) + " comp", false,
          [&, i](const AtomSet& x, const AtomSet& y) {
            AtomSet cy = S.cylSet(i, y);
            return Sides{S.cylSet(i, x & cy), S.cylSet(i, x) & cy};
          });
}

void pta_c4star(AxCtx& c) {
  const auto& S = c.S;
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j)
      for (int kk = 0; kk < S.dim; ++kk) {
        if (kk == i || kk == j) continue;
        scan1(c, "C4*", ij(i, j) + " k=" + std::to_string(kk), true,
              [&, i, j, kk](const AtomSet& x) {
                return Sides{S.cylSet(j, S.cylSet(i, x)) & S.diagAt(j, kk),
                             S.cylSet(i, S.cylSet(j, x))};
              });
      }
}

void pta_mgr(AxCtx& c) {
  const auto& S = c.S;
  const int n = S.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        if (m == i || m == j) continue;
        for (int kk = 0; kk < n; ++kk) {
          if (kk == i || kk == j || kk == m) continue;
          std::string w = ij(i, j) + " m=" + std::to_string(m) +
                          " k=" + std::to_string(kk);
          scan1(c, "MGR", w, false, [&, i, j, m, kk](const AtomSet& x) {
            AtomSet ck = S.cylSet(kk, x);
            AtomSet l = S.replSet(kk, i,
                        S.replSet(i, j, S.replSet(j, m, S.replSet(m, kk, ck))));
            AtomSet r = S.replSet(kk, m,
                        S.replSet(m, i, S.replSet(i, j, S.replSet(j, kk, ck))));
            return Sides{l, r};
          });
        }
      }
}

// the s^i_j / c interaction axioms shared by TA (Fe3, Fe4) and PEA (Q3, Q4)
void repl_cyl_block(AxCtx& c, const std::string& id3, const std::string& id4) {
  const auto& S = c.S;
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j) {
      if (i == j) continue;
      scan1(c, id3, ij(i, j), false, [&, i, j](const AtomSet& x) {
        AtomSet cx = S.cylSet(i, x);
        return Sides{S.replSet(i, j, cx), cx};
      });
      scan1(c, id4, ij(i, j), false, [&, i, j](const AtomSet& x) {
        AtomSet sx = S.replSet(i, j, x);
        return Sides{S.cylSet(i, sx), sx};
      });
    }
}

void endo_block(AxCtx& c, const std::string& id) {
  const auto& S = c.S;
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j) {
      if (i == j) continue;
      scan2(c, id, ij(i, j) + " s^i_j join", false,
            [&, i, j](const AtomSet& x, const AtomSet& y) {
              return Sides{S.replSet(i, j, x | y),
                           S.replSet(i, j, x) | S.replSet(i, j, y)};
            });
      scan1(c, id, ij(i, j) + " s^i_j compl", false,
            [&, i, j](const AtomSet& x) {
              return Sides{S.replSet(i, j, ~x), ~S.replSet(i, j, x)};
            });
      scan2(c, id, ij(i, j) + " s_ij join", false,
            [&, i, j](const AtomSet& x, const AtomSet& y) {
              return Sides{S.substSet(i, j, x | y),
                           S.substSet(i, j, x) | S.substSet(i, j, y)};
            });
      scan1(c, id, ij(i, j) + " s_ij compl", false,
            [&, i, j](const AtomSet& x) {
              return Sides{S.substSet(i, j, ~x), ~S.substSet(i, j, x)};
            });
    }
}

void transposition_block(AxCtx& c, const std::string& id7, const std::string& id8,
                         const std::string& id9, const std::string& id10,
                         const std::string& id11) {
  const auto& S = c.S;
  const AtomSet one = AtomSet::full(S.k);
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j) {
      if (i == j) continue;
      scan1(c, id7, ij(i, j), false, [&, i, j](const AtomSet& x) {
        return Sides{S.substSet(i, j, S.substSet(i, j, x)), x};
      });
      scan1(c, id9, ij(i, j), false, [&, i, j](const AtomSet& x) {
        return Sides{S.substSet(i, j, S.replSet(i, j, x)), S.replSet(j, i, x)};
      });
      check0(c, id10, ij(i, j), S.replSet(i, j, S.diagAt(i, j)), one);
      scan1(c, id11, ij(i, j), true, [&, i, j](const AtomSet& x) {
        return Sides{x & S.diagAt(i, j), S.replSet(i, j, x)};
      });
    }
  for (int i = 0; i < S.dim; ++i)
    for (int j = 0; j < S.dim; ++j)
      for (int kk = 0; kk < S.dim; ++kk) {
        if (i == j || i == kk || j == kk) continue;
        scan1(c, id8, ij(i, j) + " k=" + std::to_string(kk), false,
              [&, i, j, kk](const AtomSet& x) {
                return Sides{S.substSet(i, j, S.substSet(i, kk, x)),
                             S.substSet(j, kk, S.substSet(i, j, x))};
              });
      }
}

}  // namespace

CheckReport check_ca_axioms(const CaAtomStructure& S, AxVariant variant,
                            int jobs, bool fullPowerset) {
  if (S.flavor == Flavor::Df)
    throw UsageError("axiom variant needs diagonal elements; flavor is Df");
  if ((variant == AxVariant::TA || variant == AxVariant::PEA) && !S.hasSubst())
    throw UsageError("variant " + variant_name(variant) +
                     " needs transposition accessibility (substAcc)");

  CheckReport rep;
  rep.name = "check_ca_axioms[" + variant_name(variant) + "]";
  AxCtx c{S, jobs};
  c.sm = three_var_samples(S.k);
  c.s1 = one_var_samples(S.k, fullPowerset);
  c.s2 = two_var_samples(S.k, fullPowerset);

  switch (variant) {
    case AxVariant::CA:
      ba_block(c, "C0");
      closure_block(c, "C1", "C2", "C3");
      ca_c3_composite(c);
      ca_c4(c);
      diag_block(c);
      break;
    case AxVariant::PTA:
      ba_block(c, "C0");
      closure_block(c, "C1", "C2", "C3");
      pta_c4star(c);
      diag_block(c);
      pta_mgr(c);
      break;
    case AxVariant::TA: {
      ba_block(c, "Fe0");
      const AtomSet one = AtomSet::full(S.k);
      for (int i = 0; i < S.dim; ++i)
        check0(c, "Fe0", "i=" + std::to_string(i) + " d_ii", S.diagAt(i, i), one);
      for (int i = 0; i < S.dim; ++i) {
        std::string w = "i=" + std::to_string(i);
        scan1(c, "Fe1", w, true,
              [&, i](const AtomSet& x) { return Sides{x, S.cylSet(i, x)}; });
        scan2(c, "Fe2", w, false, [&, i](const AtomSet& x, const AtomSet& y) {
          return Sides{S.cylSet(i, x | y), S.cylSet(i, x) | S.cylSet(i, y)};
        });
      }
      repl_cyl_block(c, "Fe3", "Fe4");
      for (int i = 0; i < S.dim; ++i)
        for (int j = 0; j < S.dim; ++j)
          for (int kk = 0; kk < S.dim; ++kk)
            for (int m = 0; m < S.dim; ++m) {
              if (i == kk || i == m || j == kk || j == m) continue;
              std::string w = ij(i, j) + " k=" + std::to_string(kk) +
                              " m=" + std::to_string(m);
              scan1(c, "Fe5*", w, false, [&, i, j, kk, m](const AtomSet& x) {
                return Sides{S.replSet(i, j, S.replSet(kk, m, x)),
                             S.replSet(kk, m, S.replSet(i, j, x))};
              });
            }
      endo_block(c, "Fe6");
      transposition_block(c, "Fe7", "Fe8", "Fe9", "Fe10", "Fe11");
      break;
    }
    case AxVariant::PEA: {
      ba_block(c, "C0");
      closure_block(c, "C1", "C2", "C3");
      ca_c3_composite(c);
      ca_c4(c);
      diag_block(c);
      repl_cyl_block(c, "Q3", "Q4");
      for (int i = 0; i < S.dim; ++i)
        for (int j = 0; j < S.dim; ++j) {
          if (i == j) continue;
          for (int kk = 0; kk < S.dim; ++kk) {
            if (kk == i || kk == j) continue;
            scan1(c, "Q5", ij(i, j) + " k=" + std::to_string(kk), false,
                  [&, i, j, kk](const AtomSet& x) {
                    return Sides{S.replSet(i, j, S.cylSet(kk, x)),
                                 S.cylSet(kk, S.replSet(i, j, x))};
                  });
          }
        }
      endo_block(c, "Q6");
      transposition_block(c, "Q7", "Q9", "Q8", "Q10", "Q11");
      break;
    }
  }

  std::sort(c.ces.begin(), c.ces.end(),
            [](const Counterexample& a, const Counterexample& b) {
              if (a.axiomId != b.axiomId) return a.axiomId < b.axiomId;
              return a.witness < b.witness;
            });
  rep.stats["failures"] = c.ces.size();
  if (c.ces.size() > 64) c.ces.resize(64);
  rep.counterexamples = std::move(c.ces);
  rep.passed = rep.counterexamples.empty();
  rep.stats["cases"] = c.cases;
  rep.stats["atoms"] = S.k;
  rep.stats["dim"] = S.dim;
  rep.stats["samples1"] = c.s1.size();
  rep.stats["samples2"] = c.s2.size();
  return rep;
}

} // namespace relwb
