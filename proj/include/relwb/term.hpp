#pragma once
#include <map>
#include <memory>
#include <string>

#include "relwb/ca.hpp"
#include "relwb/ra.hpp"

namespace relwb {

// Expression tree over the operators of both signatures; evaluation rejects
// operators the target structure does not support.
struct AlgebraTerm {
  enum Kind {
    Var, AtomLit, Zero, One, DiagConst, IdentityConst,
    Not, Conv, Cyl, ReplSubst /* s^i_j */, TrSubst /* s_ij */, TDeriv /* t^i_j */,
    Join, Meet, Comp
  };
  Kind kind;
  std::string var;
  int atom = -1;
  int i = -1, j = -1;
  std::shared_ptr<AlgebraTerm> a, b;

  static std::shared_ptr<AlgebraTerm> mk(Kind k) {
    auto t = std::make_shared<AlgebraTerm>();
    t->kind = k;
    return t;
  }
};
using TermPtr = std::shared_ptr<AlgebraTerm>;

TermPtr t_var(const std::string& name);
TermPtr t_atom(int idx);
TermPtr t_zero();
TermPtr t_one();
TermPtr t_diag(int i, int j);
TermPtr t_identity();
TermPtr t_not(TermPtr a);
TermPtr t_conv(TermPtr a);
TermPtr t_cyl(int i, TermPtr a);
TermPtr t_repl(int i, int j, TermPtr a);   // s^i_j
TermPtr t_tr(int i, int j, TermPtr a);     // s_ij
TermPtr t_deriv(int i, int j, TermPtr a);  // t^i_j
TermPtr t_join(TermPtr a, TermPtr b);
TermPtr t_meet(TermPtr a, TermPtr b);
TermPtr t_comp(TermPtr a, TermPtr b);

using Env = std::map<std::string, AtomSet>;

AtomSet cm_eval_ra(const RaAtomStructure& S, const AlgebraTerm& t, const Env& env);
AtomSet cm_eval_ca(const CaAtomStructure& S, const AlgebraTerm& t, const Env& env);

} // namespace relwb
