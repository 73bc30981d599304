#pragma once
#include <cstdint>
#include <vector>

#include "relwb/ra.hpp"

namespace relwb {

// Candidate complex blur for a relation-algebra atom structure: J is a family
// of subsets of the diversity (non-identity) atoms I, m the blur arity.
struct BlurInstance {
  RaAtomStructure S;
  AtomSet I;               // always the diversity atoms of S
  std::vector<AtomSet> J;
  int m = 3;
};

// J = all size-l subsets of the diversity atoms; refuses to materialize more
// than maxSets subsets.
BlurInstance blur_all_subsets(const RaAtomStructure& S, int l, int m,
                              std::uint64_t maxSets = 1ull << 20);

inline constexpr std::uint64_t kDefaultBlurOps = 200'000'000ull;

// The five complex-blur conditions, evaluated in order: (1) no empty member,
// (2) union J = I, (3) I <= P;W for every P in I, W in J, (4) safety: every
// choice of V_2..V_m, W_2..W_m in J admits a T in J drawing no forbidden
// triangle one-from-each (a <= b;c for a in V_i, b in W_i, c in T), and
// (5) W meets P_2;Q_2 & ... & P_m;Q_m for all P_i, Q_i in I and every W in J.
// All failing conditions are reported; the leading counterexamples belong to
// the earliest one.  Scans that would exceed opsBudget throw BudgetError.
CheckReport blur_check(const BlurInstance& B,
                       std::uint64_t opsBudget = kDefaultBlurOps, int jobs = 0);

} // namespace relwb
