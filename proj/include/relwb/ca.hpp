#pragma once
#include <string>
#include <vector>

#include "relwb/bits.hpp"
#include "relwb/report.hpp"

namespace relwb {

enum class Flavor { Df, Ca, Pta, Ta, Pea };

std::string flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& s);

// Finite n-dimensional cylindric/polyadic-type atom structure.
struct CaAtomStructure {
  int dim = 0;
  int k = 0;
  Flavor flavor = Flavor::Ca;
  std::vector<std::string> names;
  std::vector<AtomSet> diag;              // [i*dim+j]
  std::vector<std::vector<AtomSet>> cyl;  // [i][atom] = cylAcc(i) neighbours
  // substAcc for transpositions [i,j], i<j, as permutations of atoms;
  // empty vector = absent
  std::vector<std::vector<int>> subst;    // [pairIndex(i,j)]

  CaAtomStructure() = default;
  CaAtomStructure(int n, int atoms, Flavor f)
      : dim(n), k(atoms), flavor(f), names(atoms),
        diag(size_t(n) * n, AtomSet(atoms)),
        cyl(n, std::vector<AtomSet>(atoms, AtomSet(atoms))) {}

  bool hasSubst() const { return !subst.empty(); }
  int pairIndex(int i, int j) const {  // i != j, unordered
    if (i > j) std::swap(i, j);
    return i * dim + j;
  }
  const AtomSet& diagAt(int i, int j) const { return diag[size_t(i) * dim + j]; }
  AtomSet& diagAt(int i, int j) { return diag[size_t(i) * dim + j]; }
  bool cylRel(int i, int a, int b) const { return cyl[i][a].test(b); }
  void setCyl(int i, int a, int b) {
    cyl[i][a].set(b);
    cyl[i][b].set(a);
  }

  AtomSet cylSet(int i, const AtomSet& X) const {
    AtomSet r(k);
    X.for_each([&](int a) { r |= cyl[i][a]; });
    return r;
  }
  AtomSet substSet(int i, int j, const AtomSet& X) const {  // s_[ij], i!=j
    AtomSet r(k);
    const auto& p = subst[pairIndex(i, j)];
    X.for_each([&](int a) { r.set(p[a]); });
    return r;
  }
  // s^i_j X = c_i(d_ij . X) for i != j, X for i == j
  AtomSet replSet(int i, int j, const AtomSet& X) const {
    if (i == j) return X;
    return cylSet(i, diagAt(i, j) & X);
  }
  // t^i_j X = d_ij . c_i X
  AtomSet tSet(int i, int j, const AtomSet& X) const {
    return diagAt(i, j) & cylSet(i, X);
  }

  // structural sanity: sizes, cylAcc reflexive+symmetric, subst bijective
  CheckReport validate() const;
};

} // namespace relwb
