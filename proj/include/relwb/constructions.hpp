#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relwb/ca.hpp"
#include "relwb/graph.hpp"
#include "relwb/ra.hpp"

namespace relwb {

inline constexpr std::uint64_t kDefaultAtomBudget = 1ull << 16;
inline constexpr std::uint64_t kDefaultMatrixBudget = 1ull << 20;

// kappa(x,0)=0, kappa(x,y+1) = 1 + x*kappa(x,y); UsageError on u64 overflow
std::uint64_t compute_kappa(std::uint64_t x, std::uint64_t y);
// psi(n,r) = kappa((n-1)r, (n-1)r) + 1
std::uint64_t compute_psi(std::uint64_t n, std::uint64_t r);

// Atoms {1'} u G x colours, all self-converse.  A triple is consistent iff
// one atom is 1' and the other two are equal, or no 1' and the colours are
// not all equal, or the colours are all equal and the node set spans an edge.
RaAtomStructure monk_ra(const Graph& g, int colours,
                        std::uint64_t atomBudget = kDefaultAtomBudget);

// Atoms Id, g0_i (i < greens), r_j (1 <= j <= reds), all self-converse.
// Forbidden: Id with two distinct others, (r_j,r_j,r_j), every all-green
// triple.
RaAtomStructure rainbow_ra(int greens, int reds,
                           std::uint64_t atomBudget = kDefaultAtomBudget);

// Atoms {Id} u {a^k(i,j) : i < n-1, j < r, k < shades}; shades defaults to
// psi(n,r).  Forbidden: Id with two distinct others, and same-i triples
// whose largest j occurs at least twice.
RaAtomStructure bin(int n, int r,
                    std::optional<std::uint64_t> shades = std::nullopt,
                    std::uint64_t atomBudget = kDefaultAtomBudget);

// All symmetric m x m atom labellings f over S with f(x,x) an identity atom
// and f(x,z) <= f(x,y);f(y,z) for every x,y,z.  cylAcc(i) relates matrices
// agreeing off i, diag(i,j) holds those with identity at (i,j), substAcc is
// f -> f o [i,j].  Enumeration splits on the (0,1) entry when jobs != 1.
CaAtomStructure basic_matrices(const RaAtomStructure& S, int m, int jobs = 0,
                               std::uint64_t matrixBudget = kDefaultMatrixBudget);

// Atom structure of pairs (K,~): ~ an equivalence on n and K a partial map
// n -> gamma x n.  With c = |n/~|: c = n needs K total with non-independent
// range ((x,i),(y,j) adjacent iff {x,y} is an edge), c = n-1 needs K defined
// exactly on the unique doubleton class with equal values, c <= n-2 needs K
// empty.  diag(i,j) = {i ~ j}; cylAcc(i) fixes K(i) and ~ off i; substAcc
// swaps i,j in K and conjugates ~ by the transposition.
CaAtomStructure eta_pea(const Graph& gamma, int n,
                        std::uint64_t atomBudget = kDefaultAtomBudget);

// Small relational structures used as pebble-game boards.
struct PebbleStructure {
  int size = 0;
  std::string description;
  // binary relations by name; pairs sorted + unique
  std::map<std::string, std::vector<std::pair<int, int>>> relations;

  bool related(const std::string& name, int a, int b) const;
  bool lt(int a, int b) const { return related("<", a, b); }
};

struct PebbleKind {
  enum class Tag { Linear, CompleteGraph, MPI, ReversedLinear };
  Tag tag = Tag::Linear;
  int p = 0;    // clique part
  int len = 0;  // order part

  static PebbleKind linear(int len);
  static PebbleKind completeGraph(int p);
  static PebbleKind mPI(int p, int len);  // K_p joined both ways to a chain
  static PebbleKind reversedLinear(int len);
};

PebbleStructure pebble_structure(const PebbleKind& kind);

} // namespace relwb
