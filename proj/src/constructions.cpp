#include "relwb/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relwb {

namespace {

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b, const char* what) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw UsageError(std::string(what) + ": 64-bit overflow");
  return a * b;
}

std::uint64_t pow_checked(std::uint64_t base, int exp, const char* what) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r = mul_checked(r, base, what);
  return r;
}

void check_atom_budget(std::uint64_t atoms, std::uint64_t budget) {
  if (atoms > budget)
    throw BudgetError("construction would materialize " + std::to_string(atoms) +
                      " atoms (budget " + std::to_string(budget) + ")");
}

int default_threads(int jobs) {
#ifdef _OPENMP
  return jobs == 0 ? omp_get_max_threads() : jobs;
#else
  (void)jobs;
  return 1;
#endif
}

} // namespace

std::uint64_t compute_kappa(std::uint64_t x, std::uint64_t y) {
  std::uint64_t k = 0;
  for (std::uint64_t i = 0; i < y; ++i) {
    std::uint64_t xk = mul_checked(x, k, "compute_kappa");
    if (xk == std::numeric_limits<std::uint64_t>::max())
      throw UsageError("compute_kappa: 64-bit overflow");
    k = 1 + xk;
  }
  return k;
}

std::uint64_t compute_psi(std::uint64_t n, std::uint64_t r) {
  if (n < 2) throw UsageError("compute_psi: need n >= 2");
  std::uint64_t a = mul_checked(n - 1, r, "compute_psi");
  std::uint64_t k = compute_kappa(a, a);
  if (k == std::numeric_limits<std::uint64_t>::max())
    throw UsageError("compute_psi: 64-bit overflow");
  return k + 1;
}

RaAtomStructure monk_ra(const Graph& g, int colours, std::uint64_t atomBudget) {
  if (g.nodeCount < 1) throw UsageError("monk_ra: empty graph");
  if (colours < 2) throw UsageError("monk_ra: need at least 2 colours");
  std::uint64_t atoms =
      1 + mul_checked(std::uint64_t(g.nodeCount), std::uint64_t(colours), "monk_ra");
  check_atom_budget(atoms, atomBudget);

  RaAtomStructure S(static_cast<int>(atoms));
  S.identity.set(0);
  S.names[0] = "1'";
  for (int v = 0; v < g.nodeCount; ++v)
    for (int c = 0; c < colours; ++c)
      S.names[1 + v * colours + c] =
          "(" + std::to_string(v) + "," + std::to_string(c) + ")";

  auto node = [&](int a) { return (a - 1) / colours; };
  auto col = [&](int a) { return (a - 1) % colours; };
  int k = S.k;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        int ids = (a == 0) + (b == 0) + (c == 0);
        bool ok;
        if (ids == 3) ok = true;
        else if (ids == 2) ok = false;
        else if (ids == 1)
          ok = a == 0 ? b == c : (b == 0 ? a == c : a == b);
        else if (col(a) != col(b) || col(b) != col(c))
          ok = true;
        else
          ok = g.adjacent(node(a), node(b)) || g.adjacent(node(a), node(c)) ||
               g.adjacent(node(b), node(c));
        if (ok) S.consistent.set(a, b, c);
      }
  return S;
}

RaAtomStructure rainbow_ra(int greens, int reds, std::uint64_t atomBudget) {
  if (greens < 1 || reds < 1)
    throw UsageError("rainbow_ra: need at least one green and one red");
  std::uint64_t atoms = 1 + std::uint64_t(greens) + std::uint64_t(reds);
  check_atom_budget(atoms, atomBudget);

  RaAtomStructure S(static_cast<int>(atoms));
  S.identity.set(0);
  S.names[0] = "Id";
  for (int i = 0; i < greens; ++i) S.names[1 + i] = "g0_" + std::to_string(i);
  for (int j = 1; j <= reds; ++j)
    S.names[greens + j] = "r_" + std::to_string(j);

  auto isGreen = [&](int a) { return a >= 1 && a <= greens; };
  int k = S.k;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        int ids = (a == 0) + (b == 0) + (c == 0);
        bool ok;
        if (ids == 3) ok = true;
        else if (ids == 2) ok = false;
        else if (ids == 1)
          ok = a == 0 ? b == c : (b == 0 ? a == c : a == b);
        else if (isGreen(a) && isGreen(b) && isGreen(c))
          ok = false;  // monochromatic green, any indices
        else
          ok = !(a == b && b == c);  // monochromatic red needs equal indices
        if (ok) S.consistent.set(a, b, c);
      }
  return S;
}

RaAtomStructure bin(int n, int r, std::optional<std::uint64_t> shades,
                    std::uint64_t atomBudget) {
  if (n < 3 || r < 1) throw UsageError("bin: need n >= 3, r >= 1");
  std::uint64_t s = shades ? *shades : compute_psi(std::uint64_t(n), std::uint64_t(r));
  if (s < 1) throw UsageError("bin: need at least one shade");
  std::uint64_t atoms =
      1 + mul_checked(mul_checked(std::uint64_t(n - 1), std::uint64_t(r), "bin"), s,
                      "bin");
  check_atom_budget(atoms, atomBudget);

  RaAtomStructure S(static_cast<int>(atoms));
  S.identity.set(0);
  S.names[0] = "Id";
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < r; ++j)
      for (std::uint64_t kk = 0; kk < s; ++kk)
        S.names[1 + (std::uint64_t(i) * r + j) * s + kk] =
            "a" + std::to_string(kk) + "(" + std::to_string(i) + "," +
            std::to_string(j) + ")";

  auto colourOf = [&](int a) { return int((std::uint64_t(a) - 1) / s) / r; };
  auto indexOf = [&](int a) { return int((std::uint64_t(a) - 1) / s) % r; };
  int k = S.k;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        int ids = (a == 0) + (b == 0) + (c == 0);
        bool ok;
        if (ids == 3) ok = true;
        else if (ids == 2) ok = false;
        else if (ids == 1)
          ok = a == 0 ? b == c : (b == 0 ? a == c : a == b);
        else if (colourOf(a) != colourOf(b) || colourOf(b) != colourOf(c))
          ok = true;
        else {
          int ja = indexOf(a), jb = indexOf(b), jc = indexOf(c);
          int mx = std::max({ja, jb, jc});
          int hits = (ja == mx) + (jb == mx) + (jc == mx);
          ok = hits < 2;  // top index twice = forbidden
        }
        if (ok) S.consistent.set(a, b, c);
      }
  return S;
}

namespace {

// column-major fill order so each triangle closes exactly once
struct MatEnum {
  const RaAtomStructure& S;
  int m;
  std::uint64_t budget;
  std::atomic<std::uint64_t>& produced;
  std::atomic<bool>& over;

  bool degenerateOk(const std::vector<int>& f, int x, int y, int e) const {
    int dx = f[x * m + x], dy = f[y * m + y];
    return S.cons(e, dx, e) && S.cons(e, e, dy) && S.cons(e, e, dx) &&
           S.cons(e, dy, e) && S.cons(dx, e, e) && S.cons(dy, e, e);
  }

  bool trianglesOk(const std::vector<int>& f, int x, int y, int e) const {
    for (int w = 0; w < x; ++w) {
      int A = f[w * m + x], B = f[w * m + y];
      if (!(S.cons(A, e, B) && S.cons(e, A, B) && S.cons(B, e, A) &&
            S.cons(e, B, A) && S.cons(B, A, e) && S.cons(A, B, e)))
        return false;
    }
    return true;
  }

  // positions: off-diagonal (x,y), x < y, column-major from a start index
  void run(std::vector<int>& f, int y, int x, std::vector<std::vector<int>>& out) {
    if (over.load(std::memory_order_relaxed)) return;
    if (y >= m) {
      if (++produced > budget) over.store(true);
      else out.push_back(f);
      return;
    }
    int ny = x + 1 == y ? y + 1 : y;
    int nx = x + 1 == y ? 0 : x + 1;
    for (int e = 0; e < S.k; ++e) {
      if (!degenerateOk(f, x, y, e) || !trianglesOk(f, x, y, e)) continue;
      f[x * m + y] = f[y * m + x] = e;
      run(f, ny, nx, out);
      f[x * m + y] = f[y * m + x] = -1;
    }
  }
};

} // namespace

CaAtomStructure basic_matrices(const RaAtomStructure& S, int m, int jobs,
                               std::uint64_t matrixBudget) {
  if (m < 2) throw UsageError("basic_matrices: need m >= 2");
  if (S.k == 0) throw UsageError("basic_matrices: empty atom structure");

  std::vector<int> idAtoms = S.identity.elems();
  std::vector<std::vector<int>> diagChoices;  // full m*m frames, off-diag -1
  {
    std::vector<int> frame(std::size_t(m) * m, -1);
    std::vector<int> pick(m, 0);
    bool done = idAtoms.empty();
    while (!done) {
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        int d = idAtoms[pick[i]];
        ok = S.cons(d, d, d);
        frame[i * m + i] = d;
      }
      if (ok) diagChoices.push_back(frame);
      int c = m - 1;
      while (c >= 0 && ++pick[c] == int(idAtoms.size())) pick[c--] = 0;
      done = c < 0;
    }
  }

  std::atomic<std::uint64_t> produced{0};
  std::atomic<bool> over{false};
  // split on the (0,1) entry; concatenation order keeps the result stable
  std::size_t tasks = diagChoices.size() * std::size_t(S.k);
  std::vector<std::vector<std::vector<int>>> chunk(tasks);
  int nthreads = default_threads(jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (jobs != 1)
#endif
  for (std::size_t t = 0; t < tasks; ++t) {
    MatEnum en{S, m, matrixBudget, produced, over};
    std::vector<int> f = diagChoices[t / S.k];
    int e = int(t % S.k);
    if (!en.degenerateOk(f, 0, 1, e)) continue;
    f[0 * m + 1] = f[1 * m + 0] = e;
    int ny = m == 2 ? m : 2, nx = 0;
    en.run(f, ny, nx, chunk[t]);
  }
  (void)nthreads;
  if (over.load())
    throw BudgetError("basic_matrices: more than " + std::to_string(matrixBudget) +
                      " matrices");

  std::vector<std::vector<int>> mats;
  for (auto& c : chunk)
    for (auto& f : c) mats.push_back(std::move(f));

  CaAtomStructure C(m, int(mats.size()), Flavor::Pea);
  std::map<std::vector<int>, int> index;
  for (int t = 0; t < C.k; ++t) index[mats[t]] = t;
  for (int t = 0; t < C.k; ++t) {
    std::string nm = "M[";
    for (int x = 0; x < m; ++x)
      for (int y = x; y < m; ++y)
        nm += std::to_string(mats[t][x * m + y]) + (x == m - 1 && y == m - 1 ? "]" : ",");
    C.names[t] = nm;
  }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int t = 0; t < C.k; ++t)
        if (S.identity.test(mats[t][i * m + j])) C.diagAt(i, j).set(t);

  for (int i = 0; i < m; ++i) {
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int t = 0; t < C.k; ++t) {
      std::vector<int> sig;
      for (int x = 0; x < m; ++x)
        for (int y = x; y < m; ++y)
          if (x != i && y != i) sig.push_back(mats[t][x * m + y]);
      groups[sig].push_back(t);
    }
    for (auto& [sig, g] : groups)
      for (int a : g)
        for (int b : g) C.setCyl(i, a, b);
  }

  C.subst.assign(std::size_t(m) * m, {});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<int>& perm = C.subst[C.pairIndex(i, j)];
      perm.resize(C.k);
      for (int t = 0; t < C.k; ++t) {
        std::vector<int> g(std::size_t(m) * m);
        auto tau = [&](int x) { return x == i ? j : (x == j ? i : x); };
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) g[x * m + y] = mats[t][tau(x) * m + tau(y)];
        auto it = index.find(g);
        if (it == index.end())
          throw std::logic_error("basic_matrices: transposition escapes the basis");
        perm[t] = it->second;
      }
    }

  CheckReport v = C.validate();
  if (!v.passed) throw std::logic_error("basic_matrices: invalid structure built");
  return C;
}

namespace {

struct EtaAtom {
  std::vector<int> K;    // -1 = undefined, else vertex*n + copy
  std::vector<int> cls;  // minimum element of each ~ class
};

// canonical form of ~ restricted to n \ {i}
std::vector<int> restricted_sig(const std::vector<int>& cls, int i) {
  int n = int(cls.size());
  std::vector<int> sig(n, -2);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    for (int l = 0; l < n; ++l)
      if (l != i && cls[l] == cls[j]) { sig[j] = l; break; }
  }
  return sig;
}

} // namespace

CaAtomStructure eta_pea(const Graph& gamma, int n, std::uint64_t atomBudget) {
  if (n < 3) throw UsageError("eta_pea: need dimension >= 3");
  std::uint64_t gn = std::uint64_t(gamma.nodeCount) * n;

  std::vector<EtaAtom> atoms;
  auto push = [&](EtaAtom a) {
    atoms.push_back(std::move(a));
    check_atom_budget(atoms.size(), atomBudget);
  };

  // partitions of n as restricted growth strings
  std::vector<int> rgs(n, 0);
  for (;;) {
    int classes = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<int> cls(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j)
        if (rgs[j] == rgs[i]) { cls[i] = j; break; }

    if (classes == n) {
      if (gn > 0) {
        std::uint64_t space = pow_checked(gn, n, "eta_pea");
        if (space > (1ull << 26))
          throw BudgetError("eta_pea: map space " + std::to_string(space) +
                            " too large");
        std::vector<int> K(n, 0);
        for (std::uint64_t it = 0; it < space; ++it) {
          std::uint64_t v = it;
          for (int i = 0; i < n; ++i) { K[i] = int(v % gn); v /= gn; }
          bool dep = false;
          for (int s = 0; s < n && !dep; ++s)
            for (int t = s + 1; t < n && !dep; ++t)
              dep = gamma.adjacent(K[s] / n, K[t] / n);
          if (dep) push({K, cls});
        }
      }
    } else if (classes == n - 1) {
      int i2 = -1, j2 = -1;  // the one doubleton class
      for (int i = 0; i < n && j2 < 0; ++i)
        for (int j = i + 1; j < n && j2 < 0; ++j)
          if (cls[j] == cls[i]) { i2 = i; j2 = j; }
      std::vector<int> K(n, -1);
      for (std::uint64_t v = 0; v < gn; ++v) {
        K[i2] = K[j2] = int(v);
        push({K, cls});
      }
    } else {
      push({std::vector<int>(n, -1), cls});
    }

    int c = n - 1;
    while (c > 0) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + c) + 1;
      if (rgs[c] < cap) { ++rgs[c]; break; }
      rgs[c--] = 0;
    }
    if (c == 0) break;
  }

  CaAtomStructure C(n, int(atoms.size()), Flavor::Pea);
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
  for (int t = 0; t < C.k; ++t) index[{atoms[t].K, atoms[t].cls}] = t;
  for (int t = 0; t < C.k; ++t) {
    std::string nm = "(";
    for (int i = 0; i < n; ++i) {
      int v = atoms[t].K[i];
      nm += v < 0 ? "-" : std::to_string(v / n) + "." + std::to_string(v % n);
      nm += i + 1 < n ? "," : "|";
    }
    for (int i = 0; i < n; ++i)
      nm += std::to_string(atoms[t].cls[i]) + (i + 1 < n ? "," : ")");
    C.names[t] = nm;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < C.k; ++t)
        if (atoms[t].cls[i] == atoms[t].cls[j]) C.diagAt(i, j).set(t);

  for (int i = 0; i < n; ++i) {
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
    for (int t = 0; t < C.k; ++t)
      groups[{atoms[t].K[i], restricted_sig(atoms[t].cls, i)}].push_back(t);
    for (auto& [key, g] : groups)
      for (int a : g)
        for (int b : g) C.setCyl(i, a, b);
  }

  C.subst.assign(std::size_t(n) * n, {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int>& perm = C.subst[C.pairIndex(i, j)];
      perm.resize(C.k);
      auto tau = [&](int x) { return x == i ? j : (x == j ? i : x); };
      for (int t = 0; t < C.k; ++t) {
        std::vector<int> K2(n), cls2(n);
        for (int x = 0; x < n; ++x) K2[x] = atoms[t].K[tau(x)];
        for (int x = 0; x < n; ++x)
          for (int y = 0; y <= x; ++y)
            if (atoms[t].cls[tau(y)] == atoms[t].cls[tau(x)]) { cls2[x] = y; break; }
        auto it = index.find({K2, cls2});
        if (it == index.end())
          throw std::logic_error("eta_pea: transposition escapes the atom set");
        perm[t] = it->second;
      }
    }

  CheckReport v = C.validate();
  if (!v.passed) throw std::logic_error("eta_pea: invalid structure built");
  return C;
}

bool PebbleStructure::related(const std::string& name, int a, int b) const {
  auto it = relations.find(name);
  if (it == relations.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(),
                            std::make_pair(a, b));
}

PebbleKind PebbleKind::linear(int len) { return {Tag::Linear, 0, len}; }
PebbleKind PebbleKind::completeGraph(int p) { return {Tag::CompleteGraph, p, 0}; }
PebbleKind PebbleKind::mPI(int p, int len) { return {Tag::MPI, p, len}; }
PebbleKind PebbleKind::reversedLinear(int len) {
  return {Tag::ReversedLinear, 0, len};
}

PebbleStructure pebble_structure(const PebbleKind& kind) {
  if (kind.p < 0 || kind.len < 0) throw UsageError("pebble_structure: bad sizes");
  PebbleStructure M;
  std::vector<std::pair<int, int>>& lt = M.relations["<"];
  switch (kind.tag) {
    case PebbleKind::Tag::Linear:
      M.size = kind.len;
      M.description = "linear(" + std::to_string(kind.len) + ")";
      for (int i = 0; i < kind.len; ++i)
        for (int j = i + 1; j < kind.len; ++j) lt.emplace_back(i, j);
      break;
    case PebbleKind::Tag::ReversedLinear:
      M.size = kind.len;
      M.description = "reversedLinear(" + std::to_string(kind.len) + ")";
      for (int i = 0; i < kind.len; ++i)
        for (int j = 0; j < i; ++j) lt.emplace_back(i, j);
      break;
    case PebbleKind::Tag::CompleteGraph:
      M.size = kind.p;
      M.description = "completeGraph(" + std::to_string(kind.p) + ")";
      for (int i = 0; i < kind.p; ++i)
        for (int j = 0; j < kind.p; ++j)
          if (i != j) lt.emplace_back(i, j);
      break;
    case PebbleKind::Tag::MPI: {
      M.size = kind.len + kind.p;
      M.description =
          "mPI(" + std::to_string(kind.p) + "," + std::to_string(kind.len) + ")";
      for (int i = 0; i < kind.len; ++i)
        for (int j = i + 1; j < kind.len; ++j) lt.emplace_back(i, j);
      for (int u = kind.len; u < M.size; ++u)
        for (int v = kind.len; v < M.size; ++v)
          if (u != v) lt.emplace_back(u, v);
      for (int i = 0; i < kind.len; ++i)
        for (int u = kind.len; u < M.size; ++u) {
          lt.emplace_back(i, u);
          lt.emplace_back(u, i);
        }
      break;
    }
  }
  std::sort(lt.begin(), lt.end());
  lt.erase(std::unique(lt.begin(), lt.end()), lt.end());
  return M;
}

} // namespace relwb
