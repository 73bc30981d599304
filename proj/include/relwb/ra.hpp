#pragma once
#include <string>
#include <vector>

#include "relwb/bits.hpp"
#include "relwb/report.hpp"

namespace relwb {

// Finite relation-algebra atom structure. consistent(a,b,c) reads "a <= b;c".
struct RaAtomStructure {
  int k = 0;
  std::vector<std::string> names;
  AtomSet identity;        // identity atoms
  std::vector<int> conv;   // involutive converse
  Bitset3 consistent;

  RaAtomStructure() = default;
  explicit RaAtomStructure(int atoms)
      : k(atoms), names(atoms), identity(atoms), conv(atoms), consistent(atoms) {
    for (int i = 0; i < atoms; ++i) conv[i] = i;
  }

  bool cons(int a, int b, int c) const { return consistent.test(a, b, c); }

  // X;Y = {a : exists b in X, c in Y with (a,b,c) consistent}
  AtomSet compose(const AtomSet& X, const AtomSet& Y) const;
  AtomSet converseSet(const AtomSet& X) const;
  // atoms c with (a,b,c) consistent, i.e. the third components completing a <= b;_
  AtomSet thirds(int a, int b) const;
  // atoms a with a <= b;c
  AtomSet comp_atoms(int b, int c) const;

  int atomIndex(const std::string& name) const;  // -1 if absent
};

// converse involution, Peircean cycle closure, identity law, associativity
// (full quadruple scan), normality
CheckReport check_ra_atomstructure(const RaAtomStructure& S, int jobs = 0);

// helper used by constructions: mark (a,b,c) and all six cycle transforms
void set_cycle(Bitset3& t, const std::vector<int>& conv, int a, int b, int c);

} // namespace relwb
