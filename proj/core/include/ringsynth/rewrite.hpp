#pragma once

#include "ringsynth/formula.hpp"

namespace ringsynth {

// Removes bounded weak-until, eventually, implies and iff. The result uses
// only atoms, not, and, or, next, until, weak-until and globally.
//
//   F p      ->  true U p
//   a -> b   ->  !a | b
//   a <-> b  ->  (a & b) | (!a & !b)
//   p W[0] q ->  p W q
//   p W[k] q ->  p W (q & X(p W[k-1] q))   for k >= 1
Fml desugar(Fml f);

// Negation normal form of a desugared formula (negations only above atoms).
Fml to_nnf(Fml f);

// NNF of the complement: to_nnf(!f). Requires f desugared; the result is
// itself desugared, so desugar(negate_nnf(desugar(f))) is a fixpoint.
Fml negate_nnf(Fml f);

// True iff f uses only the desugared operator set.
bool is_desugared(Fml f);

// True iff f is desugared and negations appear only directly above atoms.
bool is_nnf(Fml f);

// True iff f contains no temporal operator.
bool is_boolean(Fml f);

}  // namespace ringsynth
