#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "relwb/network.hpp"
#include "relwb/ra.hpp"

namespace relwb {

inline constexpr std::uint64_t kDefaultBasisBudget = 1ull << 26;

// Surviving networks of a basis fixpoint, all on nodes {0..n-1}.
struct BasisCandidate {
  int n = 0;
  std::vector<Network> nets;
};

// All total symmetric atom matrices on `nodes` points: identity atoms on the
// diagonal, converse-paired off it, every triangle (repeats included)
// consistent.  For nodes = m these are exactly the basic matrices of S.
// Needs the cycle-law fragment of S to be sound; associativity is not used.
std::vector<Network> enumerate_ra_networks(
    const RaAtomStructure& S, int nodes,
    std::uint64_t budget = kDefaultBasisBudget);

// Greatest fixpoint over all valid n-node networks: repeatedly delete any
// network with a cylindrifier demand (x̄, i, a), N(x̄) below c_i a, that has
// neither an internal witness N(x̄[i→z]) = a nor a surviving supplier M
// agreeing with N off some z outside rng(x̄ \ i) with M(x̄[i→z]) = a.
// Returns the fixpoint when it still covers every atom at (0,..,dim-1).
std::optional<BasisCandidate> basis_fixpoint(
    const CaAtomStructure& S, int n,
    std::uint64_t budget = kDefaultBasisBudget);

// The relational analogue: delete N when for some x != y and a, b with
// N(x,y) below a;b there is a node z outside {x,y} such that no surviving M
// agrees with N off z and has M(x,z) = a, M(z,y) = b.  The quantification
// over every such z makes the two-node case vacuous.
std::optional<BasisCandidate> relational_basis_fixpoint(
    const RaAtomStructure& S, int n,
    std::uint64_t budget = kDefaultBasisBudget);

// Coverage, cross-matrix triangle witness and amalgamation for the full
// family of m-dimensional basic matrices of S.
CheckReport cylindric_basis_check(const RaAtomStructure& S, int m,
                                  std::uint64_t budget = kDefaultBasisBudget);

}  // namespace relwb
