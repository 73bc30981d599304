#include "relwb/term.hpp"

namespace relwb {

TermPtr t_var(const std::string& name) {
  auto t = AlgebraTerm::mk(AlgebraTerm::Var);
  t->var = name;
  return t;
}
TermPtr t_atom(int idx) {
  auto t = AlgebraTerm::mk(AlgebraTerm::AtomLit);
  t->atom = idx;
  return t;
}
TermPtr t_zero() { return AlgebraTerm::mk(AlgebraTerm::Zero); }
TermPtr t_one() { return AlgebraTerm::mk(AlgebraTerm::One); }
TermPtr t_diag(int i, int j) {
  auto t = AlgebraTerm::mk(AlgebraTerm::DiagConst);
  t->i = i;
  t->j = j;
  return t;
}
TermPtr t_identity() { return AlgebraTerm::mk(AlgebraTerm::IdentityConst); }
TermPtr t_not(TermPtr a) {
  auto t = AlgebraTerm::mk(AlgebraTerm::Not);
  t->a = std::move(a);
  return t;
}
TermPtr t_conv(TermPtr a) {
  auto t = AlgebraTerm::mk(AlgebraTerm::Conv);
  t->a = std::move(a);
  return t;
}
TermPtr t_cyl(int i, TermPtr a) {
  auto t = AlgebraTerm::mk(AlgebraTerm::Cyl);
  t->i = i;
  t->a = std::move(a);
  return t;
}
TermPtr t_repl(int i, int j, TermPtr a) {
  auto t = AlgebraTerm::mk(AlgebraTerm::ReplSubst);
  t->i = i;
  t->j = j;
  t->a = std::move(a);
  return t;
}
TermPtr t_tr(int i, int j, TermPtr a) {
  auto t = AlgebraTerm::mk(AlgebraTerm::TrSubst);
  t->i = i;
  t->j = j;
  t->a = std::move(a);
  return t;
}
TermPtr t_deriv(int i, int j, TermPtr a) {
  auto t = AlgebraTerm::mk(AlgebraTerm::TDeriv);
  t->i = i;
  t->j = j;
  t->a = std::move(a);
  return t;
}
TermPtr t_join(TermPtr a, TermPtr b) {
  auto t = AlgebraTerm::mk(AlgebraTerm::Join);
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}
TermPtr t_meet(TermPtr a, TermPtr b) {
  auto t = AlgebraTerm::mk(AlgebraTerm::Meet);
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}
TermPtr t_comp(TermPtr a, TermPtr b) {
  auto t = AlgebraTerm::mk(AlgebraTerm::Comp);
  t->a = std::move(a);
  t->b = std::move(b);
  return t;
}

AtomSet cm_eval_ra(const RaAtomStructure& S, const AlgebraTerm& t, const Env& env) {
  switch (t.kind) {
    case AlgebraTerm::Var: {
      auto it = env.find(t.var);
      if (it == env.end()) throw UsageError("unbound variable: " + t.var);
      return it->second;
    }
    case AlgebraTerm::AtomLit: {
      if (t.atom < 0 || t.atom >= S.k) throw UsageError("atom index out of range");
      return AtomSet::single(S.k, t.atom);
    }
    case AlgebraTerm::Zero: return AtomSet(S.k);
    case AlgebraTerm::One: return AtomSet::full(S.k);
    case AlgebraTerm::IdentityConst: return S.identity;
    case AlgebraTerm::Not: return ~cm_eval_ra(S, *t.a, env);
    case AlgebraTerm::Conv: return S.converseSet(cm_eval_ra(S, *t.a, env));
    case AlgebraTerm::Join:
      return cm_eval_ra(S, *t.a, env) | cm_eval_ra(S, *t.b, env);
    case AlgebraTerm::Meet:
      return cm_eval_ra(S, *t.a, env) & cm_eval_ra(S, *t.b, env);
    case AlgebraTerm::Comp:
      return S.compose(cm_eval_ra(S, *t.a, env), cm_eval_ra(S, *t.b, env));
    default:
      throw UsageError("CA-only operator in an RA term");
  }
}

AtomSet cm_eval_ca(const CaAtomStructure& S, const AlgebraTerm& t, const Env& env) {
  auto needIdx = [&](int i) {
    if (i < 0 || i >= S.dim) throw UsageError("index out of dimension range");
  };
  switch (t.kind) {
    case AlgebraTerm::Var: {
      auto it = env.find(t.var);
      if (it == env.end()) throw UsageError("unbound variable: " + t.var);
      return it->second;
    }
    case AlgebraTerm::AtomLit: {
      if (t.atom < 0 || t.atom >= S.k) throw UsageError("atom index out of range");
      return AtomSet::single(S.k, t.atom);
    }
    case AlgebraTerm::Zero: return AtomSet(S.k);
    case AlgebraTerm::One: return AtomSet::full(S.k);
    case AlgebraTerm::DiagConst:
      if (S.flavor == Flavor::Df) throw UsageError("diagonals unavailable for Df flavor");
      needIdx(t.i);
      needIdx(t.j);
      return S.diagAt(t.i, t.j);
    case AlgebraTerm::Not: return ~cm_eval_ca(S, *t.a, env);
    case AlgebraTerm::Cyl:
      needIdx(t.i);
      return S.cylSet(t.i, cm_eval_ca(S, *t.a, env));
    case AlgebraTerm::ReplSubst:
      if (S.flavor == Flavor::Df) throw UsageError("substitutions unavailable for Df flavor");
      needIdx(t.i);
      needIdx(t.j);
      return S.replSet(t.i, t.j, cm_eval_ca(S, *t.a, env));
    case AlgebraTerm::TrSubst:
      if (!S.hasSubst()) throw UsageError("transpositions unavailable for this structure");
      needIdx(t.i);
      needIdx(t.j);
      if (t.i == t.j) return cm_eval_ca(S, *t.a, env);
      return S.substSet(t.i, t.j, cm_eval_ca(S, *t.a, env));
    case AlgebraTerm::TDeriv:
      needIdx(t.i);
      needIdx(t.j);
      return S.tSet(t.i, t.j, cm_eval_ca(S, *t.a, env));
    case AlgebraTerm::Join:
      return cm_eval_ca(S, *t.a, env) | cm_eval_ca(S, *t.b, env);
    case AlgebraTerm::Meet:
      return cm_eval_ca(S, *t.a, env) & cm_eval_ca(S, *t.b, env);
    default:
      throw UsageError("RA-only operator in a CA term");
  }
}

} // namespace relwb
