#include "ringsynth/formula.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace ringsynth {

std::string Index::suffix() const {
  switch (kind) {
    case Kind::Global: return "";
    case Kind::VarI: return "_i";
    case Kind::VarJ: return "_j";
    case Kind::Concrete: return "_" + std::to_string(value);
  }
  return "";
}

namespace {

struct Key {
  Op op;
  int bound;
  uint32_t kid0, kid1;  // formula ids, 0 = none (id 0 is reserved for True)
  std::string name;
  Index index;

  bool operator==(const Key& o) const {
    return op == o.op && bound == o.bound && kid0 == o.kid0 && kid1 == o.kid1 && name == o.name &&
           index == o.index;
  }
};

struct KeyHash {
  size_t operator()(const Key& k) const {
    size_t h = std::hash<int>()(static_cast<int>(k.op));
    auto mix = [&h](size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(k.bound);
    mix(k.kid0);
    mix(k.kid1 * 31);
    mix(std::hash<std::string>()(k.name));
    mix(static_cast<size_t>(k.index.kind));
    mix(static_cast<size_t>(k.index.value));
    return h;
  }
};

class FormulaArenaImpl {
 public:
  Fml intern(Op op, Fml a, Fml b, int bound, const AtomSig& sig) {
    Key key{op, bound, a ? a->id() + 1 : 0, b ? b->id() + 1 : 0, sig.name, sig.index};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    auto node = std::unique_ptr<Formula>(new Formula());
    node->op_ = op;
    node->bound_ = bound;
    node->kid_[0] = a;
    node->kid_[1] = b;
    node->atom_ = sig;
    node->id_ = static_cast<uint32_t>(nodes_.size());
    Fml ptr = node.get();
    nodes_.push_back(std::move(node));
    table_.emplace(std::move(key), ptr);
    return ptr;
  }

  static FormulaArenaImpl& instance() {
    static FormulaArenaImpl arena;
    return arena;
  }

 private:
  std::mutex mu_;
  std::unordered_map<Key, Fml, KeyHash> table_;
  std::vector<std::unique_ptr<Formula>> nodes_;
};

Fml intern(Op op, Fml a = nullptr, Fml b = nullptr, int bound = 0, const AtomSig& sig = {}) {
  return FormulaArenaImpl::instance().intern(op, a, b, bound, sig);
}

}  // namespace

class FormulaArena {};  // tag only; the real arena is process-wide

bool Formula::is_literal() const {
  if (op_ == Op::Atom || op_ == Op::True || op_ == Op::False) return true;
  return op_ == Op::Not && kid_[0]->op() == Op::Atom;
}

Fml f_atom(std::string_view name, Index idx) { return intern(Op::Atom, nullptr, nullptr, 0, {std::string(name), idx}); }
Fml f_atom(const AtomSig& sig) { return intern(Op::Atom, nullptr, nullptr, 0, sig); }
Fml f_true() { return intern(Op::True); }
Fml f_false() { return intern(Op::False); }
Fml f_not(Fml a) { return intern(Op::Not, a); }
Fml f_and(Fml a, Fml b) { return intern(Op::And, a, b); }
Fml f_or(Fml a, Fml b) { return intern(Op::Or, a, b); }
Fml f_implies(Fml a, Fml b) { return intern(Op::Implies, a, b); }
Fml f_iff(Fml a, Fml b) { return intern(Op::Iff, a, b); }
Fml f_next(Fml a) { return intern(Op::Next, a); }
Fml f_until(Fml a, Fml b) { return intern(Op::Until, a, b); }
Fml f_wuntil(Fml a, Fml b) { return intern(Op::WeakUntil, a, b); }
Fml f_wuntil_k(Fml a, Fml b, int k) { return intern(Op::BoundedWeakUntil, a, b, k); }
Fml f_globally(Fml a) { return intern(Op::Globally, a); }
Fml f_eventually(Fml a) { return intern(Op::Eventually, a); }

Fml f_conj(const std::vector<Fml>& fs) {
  if (fs.empty()) return f_true();
  Fml acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = f_and(fs[i], acc);
  return acc;
}

Fml f_disj(const std::vector<Fml>& fs) {
  if (fs.empty()) return f_false();
  Fml acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = f_or(fs[i], acc);
  return acc;
}

namespace {

// Precedence, loosest first. Binary temporal operators bind tighter than
// the boolean connectives, unary operators tightest.
int prec(Op op) {
  switch (op) {
    case Op::Iff: return 1;
    case Op::Implies: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Until:
    case Op::WeakUntil:
    case Op::BoundedWeakUntil: return 5;
    case Op::Not:
    case Op::Next:
    case Op::Globally:
    case Op::Eventually: return 6;
    default: return 7;
  }
}

bool right_assoc(Op op) {
  return op == Op::Implies || op == Op::Iff || op == Op::Until || op == Op::WeakUntil ||
         op == Op::BoundedWeakUntil;
}

const char* binary_token(Op op) {
  switch (op) {
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Implies: return "->";
    case Op::Iff: return "<->";
    case Op::Until: return "U";
    case Op::WeakUntil: return "W";
    default: return "?";
  }
}

void print(std::ostream& os, Fml f, int parent_prec, bool left_side) {
  int p = prec(f->op());
  bool parens = p < parent_prec || (p == parent_prec && p <= 5 && left_side == right_assoc(f->op()));
  if (parens) os << "(";
  switch (f->op()) {
    case Op::Atom: os << f->atom().str(); break;
    case Op::True: os << "true"; break;
    case Op::False: os << "false"; break;
    case Op::Not:
      os << "!";
      print(os, f->child(), p, false);
      break;
    case Op::Next:
      os << "X ";
      print(os, f->child(), p, false);
      break;
    case Op::Globally:
      os << "G ";
      print(os, f->child(), p, false);
      break;
    case Op::Eventually:
      os << "F ";
      print(os, f->child(), p, false);
      break;
    case Op::BoundedWeakUntil:
      print(os, f->lhs(), p, true);
      os << " W[" << f->bound() << "] ";
      print(os, f->rhs(), p, false);
      break;
    default:
      print(os, f->lhs(), p, true);
      os << " " << binary_token(f->op()) << " ";
      print(os, f->rhs(), p, false);
      break;
  }
  if (parens) os << ")";
}

template <typename Fn>
void walk(Fml f, const Fn& fn) {
  fn(f);
  if (f->lhs()) walk(f->lhs(), fn);
  if (f->rhs()) walk(f->rhs(), fn);
}

}  // namespace

std::string Formula::str() const {
  std::ostringstream os;
  print(os, this, 0, false);
  return os.str();
}

std::string to_string(Fml f) { return f->str(); }

int closure_size(Fml f) {
  std::set<Fml> seen;
  walk(f, [&](Fml g) { seen.insert(g); });
  return static_cast<int>(seen.size());
}

std::vector<AtomSig> collect_atoms(Fml f) {
  std::set<AtomSig> set;
  walk(f, [&](Fml g) {
    if (g->is_atom()) set.insert(g->atom());
  });
  return {set.begin(), set.end()};
}

IndexTags index_tags(Fml f) {
  IndexTags tags;
  walk(f, [&](Fml g) {
    if (!g->is_atom()) return;
    switch (g->atom_index().kind) {
      case Index::Kind::VarI: tags.uses_i = true; break;
      case Index::Kind::VarJ: tags.uses_j = true; break;
      case Index::Kind::Global: tags.uses_global = true; break;
      case Index::Kind::Concrete: tags.uses_concrete = true; break;
    }
  });
  return tags;
}

Fml map_atom_index(Fml f, const std::vector<std::pair<Index, Index>>& subst) {
  if (f->is_atom()) {
    for (const auto& [from, to] : subst)
      if (f->atom_index() == from) return f_atom(f->atom_name(), to);
    return f;
  }
  Fml a = f->lhs() ? map_atom_index(f->lhs(), subst) : nullptr;
  Fml b = f->rhs() ? map_atom_index(f->rhs(), subst) : nullptr;
  switch (f->op()) {
    case Op::True:
    case Op::False: return f;
    case Op::Not: return f_not(a);
    case Op::And: return f_and(a, b);
    case Op::Or: return f_or(a, b);
    case Op::Implies: return f_implies(a, b);
    case Op::Iff: return f_iff(a, b);
    case Op::Next: return f_next(a);
    case Op::Until: return f_until(a, b);
    case Op::WeakUntil: return f_wuntil(a, b);
    case Op::BoundedWeakUntil: return f_wuntil_k(a, b, f->bound());
    case Op::Globally: return f_globally(a);
    case Op::Eventually: return f_eventually(a);
    default: return f;
  }
}

Fml rename_atoms(Fml f, const std::vector<std::pair<AtomSig, AtomSig>>& subst) {
  if (f->is_atom()) {
    for (const auto& [from, to] : subst)
      if (f->atom() == from) return f_atom(to);
    return f;
  }
  Fml a = f->lhs() ? rename_atoms(f->lhs(), subst) : nullptr;
  Fml b = f->rhs() ? rename_atoms(f->rhs(), subst) : nullptr;
  switch (f->op()) {
    case Op::True:
    case Op::False: return f;
    case Op::Not: return f_not(a);
    case Op::And: return f_and(a, b);
    case Op::Or: return f_or(a, b);
    case Op::Implies: return f_implies(a, b);
    case Op::Iff: return f_iff(a, b);
    case Op::Next: return f_next(a);
    case Op::Until: return f_until(a, b);
    case Op::WeakUntil: return f_wuntil(a, b);
    case Op::BoundedWeakUntil: return f_wuntil_k(a, b, f->bound());
    case Op::Globally: return f_globally(a);
    case Op::Eventually: return f_eventually(a);
    default: return f;
  }
}

}  // namespace ringsynth
