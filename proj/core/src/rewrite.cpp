#include "ringsynth/rewrite.hpp"

#include <stdexcept>

namespace ringsynth {

Fml desugar(Fml f) {
  switch (f->op()) {
    case Op::Atom:
    case Op::True:
    case Op::False: return f;
    case Op::Not: return f_not(desugar(f->child()));
    case Op::And: return f_and(desugar(f->lhs()), desugar(f->rhs()));
    case Op::Or: return f_or(desugar(f->lhs()), desugar(f->rhs()));
    case Op::Implies: return f_or(f_not(desugar(f->lhs())), desugar(f->rhs()));
    case Op::Iff: {
      Fml a = desugar(f->lhs()), b = desugar(f->rhs());
      return f_or(f_and(a, b), f_and(f_not(a), f_not(b)));
    }
    case Op::Next: return f_next(desugar(f->child()));
    case Op::Until: return f_until(desugar(f->lhs()), desugar(f->rhs()));
    case Op::WeakUntil: return f_wuntil(desugar(f->lhs()), desugar(f->rhs()));
    case Op::BoundedWeakUntil: {
      Fml p = desugar(f->lhs()), q = desugar(f->rhs());
      Fml acc = f_wuntil(p, q);
      for (int i = 0; i < f->bound(); ++i) acc = f_wuntil(p, f_and(q, f_next(acc)));
      return acc;
    }
    case Op::Globally: return f_globally(desugar(f->child()));
    case Op::Eventually: return f_until(f_true(), desugar(f->child()));
  }
  return f;
}

namespace {

Fml push(Fml f, bool neg) {
  switch (f->op()) {
    case Op::Atom: return neg ? f_not(f) : f;
    case Op::True: return neg ? f_false() : f;
    case Op::False: return neg ? f_true() : f;
    case Op::Not: return push(f->child(), !neg);
    case Op::And: {
      Fml a = push(f->lhs(), neg), b = push(f->rhs(), neg);
      return neg ? f_or(a, b) : f_and(a, b);
    }
    case Op::Or: {
      Fml a = push(f->lhs(), neg), b = push(f->rhs(), neg);
      return neg ? f_and(a, b) : f_or(a, b);
    }
    case Op::Next: return f_next(push(f->child(), neg));
    case Op::Until: {
      if (!neg) return f_until(push(f->lhs(), false), push(f->rhs(), false));
      // !(p U q) = !q W (!p & !q)
      Fml np = push(f->lhs(), true), nq = push(f->rhs(), true);
      return f_wuntil(nq, f_and(np, nq));
    }
    case Op::WeakUntil: {
      if (!neg) return f_wuntil(push(f->lhs(), false), push(f->rhs(), false));
      // !(p W q) = !q U (!p & !q)
      Fml np = push(f->lhs(), true), nq = push(f->rhs(), true);
      return f_until(nq, f_and(np, nq));
    }
    case Op::Globally:
      if (!neg) return f_globally(push(f->child(), false));
      return f_until(f_true(), push(f->child(), true));  // !G p = F !p
    default: throw std::logic_error("to_nnf/negate_nnf require a desugared formula: " + f->str());
  }
}

}  // namespace

Fml to_nnf(Fml f) { return push(f, false); }
Fml negate_nnf(Fml f) { return push(f, true); }

bool is_desugared(Fml f) {
  switch (f->op()) {
    case Op::Implies:
    case Op::Iff:
    case Op::Eventually:
    case Op::BoundedWeakUntil: return false;
    default: break;
  }
  if (f->lhs() && !is_desugared(f->lhs())) return false;
  if (f->rhs() && !is_desugared(f->rhs())) return false;
  return true;
}

bool is_nnf(Fml f) {
  if (!is_desugared(f)) return false;
  if (f->op() == Op::Not) return f->child()->is_atom();
  if (f->lhs() && !is_nnf(f->lhs())) return false;
  if (f->rhs() && !is_nnf(f->rhs())) return false;
  return true;
}

bool is_boolean(Fml f) {
  switch (f->op()) {
    case Op::Next:
    case Op::Until:
    case Op::WeakUntil:
    case Op::BoundedWeakUntil:
    case Op::Globally:
    case Op::Eventually: return false;
    default: break;
  }
  if (f->lhs() && !is_boolean(f->lhs())) return false;
  if (f->rhs() && !is_boolean(f->rhs())) return false;
  return true;
}

}  // namespace ringsynth
