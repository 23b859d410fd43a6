#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ringsynth {

// Node kinds of the indexed-LTL syntax tree. Desugared formulas use only
// Atom..Or plus Next/Until/WeakUntil/Globally.
enum class Op : uint8_t {
  Atom,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Next,
  Until,
  WeakUntil,
  BoundedWeakUntil,  // p W[k] q
  Globally,
  Eventually,
};

// Index tag of an atom: a process-indexed signal (name_i / name_j), a
// concrete vertex (name_3, used after instantiation), or an unindexed
// (global or monolithic) signal.
struct Index {
  enum class Kind : uint8_t { Global, VarI, VarJ, Concrete };
  Kind kind = Kind::Global;
  int value = 0;  // only meaningful for Concrete

  static Index global() { return {}; }
  static Index var_i() { return {Kind::VarI, 0}; }
  static Index var_j() { return {Kind::VarJ, 0}; }
  static Index concrete(int v) { return {Kind::Concrete, v}; }

  bool operator==(const Index& o) const { return kind == o.kind && (kind != Kind::Concrete || value == o.value); }
  bool operator!=(const Index& o) const { return !(*this == o); }
  bool operator<(const Index& o) const {
    if (kind != o.kind) return kind < o.kind;
    return kind == Kind::Concrete && value < o.value;
  }
  // "" / "_i" / "_j" / "_<n>"
  std::string suffix() const;
};

// A named, indexed atomic proposition. Also used as the alphabet element of
// automata and letter layouts.
struct AtomSig {
  std::string name;
  Index index;

  bool operator==(const AtomSig& o) const { return index == o.index && name == o.name; }
  bool operator<(const AtomSig& o) const {
    if (name != o.name) return name < o.name;
    return index < o.index;
  }
  std::string str() const { return name + index.suffix(); }
};

class Formula;
// Formulas are interned: pointer equality is structural equality.
using Fml = const Formula*;

class Formula {
 public:
  Op op() const { return op_; }
  uint32_t id() const { return id_; }  // dense, creation-ordered

  Fml child() const { return kid_[0]; }  // unary ops
  Fml lhs() const { return kid_[0]; }
  Fml rhs() const { return kid_[1]; }
  int bound() const { return bound_; }  // W[k]

  const std::string& atom_name() const { return atom_.name; }
  const Index& atom_index() const { return atom_.index; }
  const AtomSig& atom() const { return atom_; }

  bool is_atom() const { return op_ == Op::Atom; }
  bool is_literal() const;  // atom or Not(atom) or True/False

  std::string str() const;  // precedence-aware, reparseable

 private:
  friend class FormulaArena;
  Formula() = default;

  Op op_ = Op::True;
  int bound_ = 0;
  uint32_t id_ = 0;
  Fml kid_[2] = {nullptr, nullptr};
  AtomSig atom_;
};

// Constructors (interned; thread-safe).
Fml f_atom(std::string_view name, Index idx = Index::global());
Fml f_atom(const AtomSig& sig);
Fml f_true();
Fml f_false();
Fml f_not(Fml a);
Fml f_and(Fml a, Fml b);
Fml f_or(Fml a, Fml b);
Fml f_implies(Fml a, Fml b);
Fml f_iff(Fml a, Fml b);
Fml f_next(Fml a);
Fml f_until(Fml a, Fml b);
Fml f_wuntil(Fml a, Fml b);
Fml f_wuntil_k(Fml a, Fml b, int k);
Fml f_globally(Fml a);
Fml f_eventually(Fml a);

// Right fold; empty list gives true (resp. false).
Fml f_conj(const std::vector<Fml>& fs);
Fml f_disj(const std::vector<Fml>& fs);

std::string to_string(Fml f);

// Distinct subformula count (size of the closure without negations).
int closure_size(Fml f);

// All atoms occurring in f, sorted and deduplicated.
std::vector<AtomSig> collect_atoms(Fml f);

// Set of index tags used by atoms of f.
struct IndexTags {
  bool uses_i = false, uses_j = false, uses_global = false, uses_concrete = false;
};
IndexTags index_tags(Fml f);

// Replaces every atom index tag according to the map-like callback.
Fml map_atom_index(Fml f, const std::vector<std::pair<Index, Index>>& subst);

// Replaces atoms by name (index preserved elsewhere): used by output
// localization (global atom name -> indexed).
Fml rename_atoms(Fml f, const std::vector<std::pair<AtomSig, AtomSig>>& subst);

}  // namespace ringsynth
