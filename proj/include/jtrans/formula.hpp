#pragma once

// First-order formulas over &, |, ->, exists, forall and _|_, with ~f as
// sugar for f -> _|_. Terms are variables, constants and function
// applications. Values are immutable after construction and safe to share
// across threads.
//
// The text grammar (ASCII):
//   atoms         P, P(t1,...,tn)        predicates uppercase-initial
//   terms         x, c, F(t1,...,tn)     variables/constants lowercase
//   bottom        _|_  or  false
//   negation      ~f
//   connectives   f & g, f | g, f -> g   (~ > & > | > ->, -> right-assoc)
//   quantifiers   forall x. f, exists x. f   (scope extends maximally)
//   modal marker  [j]f                   reserved for the model evaluator
//   comments      # to end of line
//
// Stored formulas produced by parse/normalize follow the Barendregt
// convention: bound names are pairwise distinct and distinct from free ones.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jtrans {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

// ---------------------------------------------------------------------------
// Terms

enum class TermKind { Var, Const, Func };

class Term {
 public:
  static Term var(std::string name) {
    return Term(TermKind::Var, std::move(name), {});
  }
  static Term constant(std::string name) {
    return Term(TermKind::Const, std::move(name), {});
  }
  static Term func(std::string name, std::vector<Term> args) {
    return Term(TermKind::Func, std::move(name), std::move(args));
  }

  TermKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_ && a.args_ == b.args_;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  Term(TermKind k, std::string n, std::vector<Term> a)
      : kind_(k), name_(std::move(n)), args_(std::move(a)) {}

  TermKind kind_;
  std::string name_;
  std::vector<Term> args_;
};

inline void collect_term_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var: out.insert(t.name()); break;
    case TermKind::Const: break;
    case TermKind::Func:
      for (const Term& a : t.args()) collect_term_vars(a, out);
      break;
  }
}

inline std::set<std::string> term_vars(const Term& t) {
  std::set<std::string> out;
  collect_term_vars(t, out);
  return out;
}

// Replaces free occurrences of variable x inside a term.
inline Term term_substitute(const Term& t, const std::string& x, const Term& r) {
  switch (t.kind()) {
    case TermKind::Var: return t.name() == x ? r : t;
    case TermKind::Const: return t;
    case TermKind::Func: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(term_substitute(a, x, r));
      return Term::func(t.name(), std::move(args));
    }
  }
  throw std::logic_error("unreachable term kind");
}

// Renames a variable wherever it occurs (used when refreshing binders; the
// old name is known not to clash with anything we want to keep).
inline Term term_rename(const Term& t, const std::string& from, const std::string& to) {
  return term_substitute(t, from, Term::var(to));
}

// ---------------------------------------------------------------------------
// Formulas

enum class FormulaKind { Atom, Bottom, And, Or, Implies, Exists, Forall, Modal };

class Formula {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    FormulaKind kind;
    std::string name;        // Atom: predicate; Exists/Forall: bound variable
    std::vector<Term> args;  // Atom only
    NodePtr a, b;            // binary: both; quantifier/Modal: a = body
  };

 public:
  static Formula atom(std::string pred, std::vector<Term> args = {}) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Atom;
    n->name = std::move(pred);
    n->args = std::move(args);
    return Formula(std::move(n));
  }
  static Formula bottom() {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Bottom;
    return Formula(std::move(n));
  }
  static Formula conj(Formula l, Formula r) { return binary(FormulaKind::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return binary(FormulaKind::Or, std::move(l), std::move(r)); }
  static Formula implies(Formula l, Formula r) { return binary(FormulaKind::Implies, std::move(l), std::move(r)); }
  static Formula neg(Formula f) { return implies(std::move(f), bottom()); }
  static Formula exists(std::string v, Formula body) { return quant(FormulaKind::Exists, std::move(v), std::move(body)); }
  static Formula forall(std::string v, Formula body) { return quant(FormulaKind::Forall, std::move(v), std::move(body)); }
  static Formula modal(Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Modal;
    n->a = f.node_;
    return Formula(std::move(n));
  }
  static Formula iff(Formula l, Formula r) {
    Formula fwd = implies(l, r);
    Formula bwd = implies(std::move(r), std::move(l));
    return conj(std::move(fwd), std::move(bwd));
  }

  FormulaKind kind() const { return node_->kind; }

  const std::string& pred() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }

  Formula left() const { return Formula(node_->a); }
  Formula right() const { return Formula(node_->b); }

  const std::string& var() const { return node_->name; }
  Formula body() const { return Formula(node_->a); }

  Formula child() const { return Formula(node_->a); }  // Modal

  bool is_negation() const {
    return kind() == FormulaKind::Implies && node_->b->kind == FormulaKind::Bottom;
  }

  bool same_node(const Formula& o) const { return node_ == o.node_; }
  const void* id() const { return node_.get(); }

  friend bool operator==(const Formula& x, const Formula& y) {
    if (x.node_ == y.node_) return true;
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
      case FormulaKind::Atom:
        return x.pred() == y.pred() && x.args() == y.args();
      case FormulaKind::Bottom:
        return true;
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
        return x.left() == y.left() && x.right() == y.right();
      case FormulaKind::Exists:
      case FormulaKind::Forall:
        return x.var() == y.var() && x.body() == y.body();
      case FormulaKind::Modal:
        return x.child() == y.child();
    }
    return false;
  }
  friend bool operator!=(const Formula& x, const Formula& y) { return !(x == y); }

 private:
  explicit Formula(NodePtr n) : node_(std::move(n)) {}

  static Formula binary(FormulaKind k, Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = l.node_;
    n->b = r.node_;
    return Formula(std::move(n));
  }
  static Formula quant(FormulaKind k, std::string v, Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->name = std::move(v);
    n->a = body.node_;
    return Formula(std::move(n));
  }

  NodePtr node_;
};

struct Sequent {
  std::vector<Formula> hyps;
  Formula conclusion;
};

// ---------------------------------------------------------------------------
// Traversals

inline void collect_free_vars(const Formula& f, std::set<std::string>& bound,
                              std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      for (const Term& t : f.args()) {
        std::set<std::string> vs;
        collect_term_vars(t, vs);
        for (const auto& v : vs)
          if (!bound.count(v)) out.insert(v);
      }
      break;
    case FormulaKind::Bottom:
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect_free_vars(f.left(), bound, out);
      collect_free_vars(f.right(), bound, out);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      bool added = bound.insert(f.var()).second;
      collect_free_vars(f.body(), bound, out);
      if (added) bound.erase(f.var());
      break;
    }
    case FormulaKind::Modal:
      collect_free_vars(f.child(), bound, out);
      break;
  }
}

inline std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free_vars(f, bound, out);
  return out;
}

inline bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

inline void collect_bound_vars(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect_bound_vars(f.left(), out);
      collect_bound_vars(f.right(), out);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out.push_back(f.var());
      collect_bound_vars(f.body(), out);
      break;
    case FormulaKind::Modal:
      collect_bound_vars(f.child(), out);
      break;
  }
}

// Predicate signature: name -> arity. Throws on inconsistent arity.
inline void collect_predicates(const Formula& f, std::map<std::string, int>& sig) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      int arity = static_cast<int>(f.args().size());
      auto [it, inserted] = sig.emplace(f.pred(), arity);
      if (!inserted && it->second != arity)
        throw std::runtime_error("arity mismatch for predicate " + f.pred());
      break;
    }
    case FormulaKind::Bottom:
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect_predicates(f.left(), sig);
      collect_predicates(f.right(), sig);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      collect_predicates(f.body(), sig);
      break;
    case FormulaKind::Modal:
      collect_predicates(f.child(), sig);
      break;
  }
}

inline std::map<std::string, int> predicates(const Formula& f) {
  std::map<std::string, int> sig;
  collect_predicates(f, sig);
  return sig;
}

inline void collect_constants(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var: break;
    case TermKind::Const: out.insert(t.name()); break;
    case TermKind::Func:
      for (const Term& a : t.args()) collect_constants(a, out);
      break;
  }
}

inline std::set<std::string> constants(const Formula& f) {
  std::set<std::string> out;
  struct Walk {
    std::set<std::string>& out;
    void operator()(const Formula& g) {
      switch (g.kind()) {
        case FormulaKind::Atom:
          for (const Term& t : g.args()) collect_constants(t, out);
          break;
        case FormulaKind::Bottom: break;
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
          (*this)(g.left());
          (*this)(g.right());
          break;
        case FormulaKind::Exists:
        case FormulaKind::Forall:
          (*this)(g.body());
          break;
        case FormulaKind::Modal:
          (*this)(g.child());
          break;
      }
    }
  } walk{out};
  walk(f);
  return out;
}

inline bool contains_modal(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Modal: return true;
    case FormulaKind::Atom:
    case FormulaKind::Bottom: return false;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return contains_modal(f.left()) || contains_modal(f.right());
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return contains_modal(f.body());
  }
  return false;
}

inline bool contains_atom(const Formula& f, const std::string& pred) {
  switch (f.kind()) {
    case FormulaKind::Atom: return f.pred() == pred;
    case FormulaKind::Bottom: return false;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return contains_atom(f.left(), pred) || contains_atom(f.right(), pred);
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return contains_atom(f.body(), pred);
    case FormulaKind::Modal:
      return contains_atom(f.child(), pred);
  }
  return false;
}

// Propositional fragment: quantifier-free, marker-free, nullary atoms only.
inline bool is_propositional(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom: return f.args().empty();
    case FormulaKind::Bottom: return true;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return is_propositional(f.left()) && is_propositional(f.right());
    case FormulaKind::Exists:
    case FormulaKind::Forall:
    case FormulaKind::Modal:
      return false;
  }
  return false;
}

// Coherent formulas: atoms, bottom, conjunction, disjunction, existentials.
inline bool is_coherent(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
      return is_coherent(f.left()) && is_coherent(f.right());
    case FormulaKind::Exists:
      return is_coherent(f.body());
    case FormulaKind::Implies:
    case FormulaKind::Forall:
    case FormulaKind::Modal:
      return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Fresh names and substitution

inline bool name_used(const std::string& n, const std::set<std::string>& used) {
  return used.count(n) != 0;
}

inline std::string fresh_variant(const std::string& base, const std::set<std::string>& used) {
  if (!name_used(base, used)) return base;
  std::string primed = base;
  for (int i = 0; i < 3; ++i) {
    primed += '\'';
    if (!name_used(primed, used)) return primed;
  }
  for (int i = 1;; ++i) {
    std::string numbered = base + "_" + std::to_string(i);
    if (!name_used(numbered, used)) return numbered;
  }
}

// Capture-avoiding substitution of term t for free occurrences of x.
inline Formula substitute(const Formula& f, const std::string& x, const Term& t) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const Term& a : f.args()) args.push_back(term_substitute(a, x, t));
      return Formula::atom(f.pred(), std::move(args));
    }
    case FormulaKind::Bottom:
      return f;
    case FormulaKind::And:
      return Formula::conj(substitute(f.left(), x, t), substitute(f.right(), x, t));
    case FormulaKind::Or:
      return Formula::disj(substitute(f.left(), x, t), substitute(f.right(), x, t));
    case FormulaKind::Implies:
      return Formula::implies(substitute(f.left(), x, t), substitute(f.right(), x, t));
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      if (f.var() == x) return f;  // binder shadows
      std::set<std::string> body_free = free_vars(f.body());
      if (!body_free.count(x)) return f;  // nothing to replace below
      std::set<std::string> tvs = term_vars(t);
      std::string v = f.var();
      Formula body = f.body();
      if (tvs.count(v)) {
        // renaming needed to avoid capturing t's variables
        std::set<std::string> avoid = tvs;
        avoid.insert(body_free.begin(), body_free.end());
        avoid.insert(x);
        std::string v2 = fresh_variant(v, avoid);
        body = substitute(body, v, Term::var(v2));
        v = v2;
      }
      Formula new_body = substitute(body, x, t);
      return f.kind() == FormulaKind::Exists ? Formula::exists(v, std::move(new_body))
                                             : Formula::forall(v, std::move(new_body));
    }
    case FormulaKind::Modal:
      return Formula::modal(substitute(f.child(), x, t));
  }
  throw std::logic_error("unreachable formula kind");
}

// ---------------------------------------------------------------------------
// Alpha-equality

namespace detail {

inline bool alpha_eq_terms(const Term& s, const Term& t,
                           const std::map<std::string, int>& lm,
                           const std::map<std::string, int>& rm) {
  if (s.kind() != t.kind()) {
    // a bound variable never matches a constant or function
    return false;
  }
  switch (s.kind()) {
    case TermKind::Var: {
      auto li = lm.find(s.name());
      auto ri = rm.find(t.name());
      if (li != lm.end() || ri != rm.end())
        return li != lm.end() && ri != rm.end() && li->second == ri->second;
      return s.name() == t.name();  // both free
    }
    case TermKind::Const:
      return s.name() == t.name();
    case TermKind::Func: {
      if (s.name() != t.name() || s.args().size() != t.args().size()) return false;
      for (std::size_t i = 0; i < s.args().size(); ++i)
        if (!alpha_eq_terms(s.args()[i], t.args()[i], lm, rm)) return false;
      return true;
    }
  }
  return false;
}

inline bool alpha_eq_rec(const Formula& f, const Formula& g,
                         std::map<std::string, int>& lm,
                         std::map<std::string, int>& rm, int depth) {
  if (f.kind() != g.kind()) return false;
  switch (f.kind()) {
    case FormulaKind::Atom: {
      if (f.pred() != g.pred() || f.args().size() != g.args().size()) return false;
      for (std::size_t i = 0; i < f.args().size(); ++i)
        if (!alpha_eq_terms(f.args()[i], g.args()[i], lm, rm)) return false;
      return true;
    }
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return alpha_eq_rec(f.left(), g.left(), lm, rm, depth) &&
             alpha_eq_rec(f.right(), g.right(), lm, rm, depth);
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      auto saved_l = lm.find(f.var()) != lm.end() ? std::optional<int>(lm[f.var()]) : std::nullopt;
      auto saved_r = rm.find(g.var()) != rm.end() ? std::optional<int>(rm[g.var()]) : std::nullopt;
      lm[f.var()] = depth;
      rm[g.var()] = depth;
      bool ok = alpha_eq_rec(f.body(), g.body(), lm, rm, depth + 1);
      if (saved_l) lm[f.var()] = *saved_l; else lm.erase(f.var());
      if (saved_r) rm[g.var()] = *saved_r; else rm.erase(g.var());
      return ok;
    }
    case FormulaKind::Modal:
      return alpha_eq_rec(f.child(), g.child(), lm, rm, depth);
  }
  return false;
}

}  // namespace detail

inline bool alpha_eq(const Formula& f, const Formula& g) {
  std::map<std::string, int> lm, rm;
  return detail::alpha_eq_rec(f, g, lm, rm, 0);
}

// ---------------------------------------------------------------------------
// Structural total order (names compared literally, not up to alpha); used
// for interning and canonical sorting.

inline int term_cmp(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (int c = a.name().compare(b.name())) return c < 0 ? -1 : 1;
  if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (int c = term_cmp(a.args()[i], b.args()[i])) return c;
  return 0;
}

inline int formula_cmp(const Formula& a, const Formula& b) {
  if (a.id() == b.id()) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case FormulaKind::Atom: {
      if (int c = a.pred().compare(b.pred())) return c < 0 ? -1 : 1;
      if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = term_cmp(a.args()[i], b.args()[i])) return c;
      return 0;
    }
    case FormulaKind::Bottom:
      return 0;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      if (int c = formula_cmp(a.left(), b.left())) return c;
      return formula_cmp(a.right(), b.right());
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      if (int c = a.var().compare(b.var())) return c < 0 ? -1 : 1;
      return formula_cmp(a.body(), b.body());
    case FormulaKind::Modal:
      return formula_cmp(a.child(), b.child());
  }
  return 0;
}

struct FormulaOrder {
  bool operator()(const Formula& a, const Formula& b) const { return formula_cmp(a, b) < 0; }
};

// ---------------------------------------------------------------------------
// Barendregt normalization: bound names pairwise distinct and distinct from
// all free names. Existing names are kept when they do not clash.

namespace detail {

inline Formula normalize_rec(const Formula& f, std::map<std::string, std::string>& env,
                             std::set<std::string>& used) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const Term& t : f.args()) {
        Term cur = t;
        for (const auto& [from, to] : env)
          if (from != to) cur = term_rename(cur, from, to);
        args.push_back(cur);
      }
      return Formula::atom(f.pred(), std::move(args));
    }
    case FormulaKind::Bottom:
      return f;
    case FormulaKind::And:
      return Formula::conj(normalize_rec(f.left(), env, used),
                           normalize_rec(f.right(), env, used));
    case FormulaKind::Or:
      return Formula::disj(normalize_rec(f.left(), env, used),
                           normalize_rec(f.right(), env, used));
    case FormulaKind::Implies:
      return Formula::implies(normalize_rec(f.left(), env, used),
                              normalize_rec(f.right(), env, used));
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      std::string chosen = fresh_variant(f.var(), used);
      used.insert(chosen);
      auto saved = env.find(f.var()) != env.end()
                       ? std::optional<std::string>(env[f.var()])
                       : std::nullopt;
      env[f.var()] = chosen;
      Formula body = normalize_rec(f.body(), env, used);
      if (saved) env[f.var()] = *saved; else env.erase(f.var());
      return f.kind() == FormulaKind::Exists ? Formula::exists(chosen, std::move(body))
                                             : Formula::forall(chosen, std::move(body));
    }
    case FormulaKind::Modal:
      return Formula::modal(normalize_rec(f.child(), env, used));
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace detail

inline Formula normalize(const Formula& f) {
  std::map<std::string, std::string> env;
  std::set<std::string> used = free_vars(f);
  return detail::normalize_rec(f, env, used);
}

inline bool is_barendregt(const Formula& f) {
  std::vector<std::string> bound;
  collect_bound_vars(f, bound);
  std::set<std::string> seen;
  for (const auto& b : bound)
    if (!seen.insert(b).second) return false;
  for (const auto& fv : free_vars(f))
    if (seen.count(fv)) return false;
  return true;
}

// Substitutes a formula for every occurrence of a nullary atom. Used for
// nucleus templates and the bottom-as-atom reduction.
inline Formula replace_atom(const Formula& f, const std::string& pred, const Formula& g) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      if (f.pred() == pred && f.args().empty()) return g;
      return f;
    case FormulaKind::Bottom:
      return f;
    case FormulaKind::And:
      return Formula::conj(replace_atom(f.left(), pred, g), replace_atom(f.right(), pred, g));
    case FormulaKind::Or:
      return Formula::disj(replace_atom(f.left(), pred, g), replace_atom(f.right(), pred, g));
    case FormulaKind::Implies:
      return Formula::implies(replace_atom(f.left(), pred, g), replace_atom(f.right(), pred, g));
    case FormulaKind::Exists:
      return Formula::exists(f.var(), replace_atom(f.body(), pred, g));
    case FormulaKind::Forall:
      return Formula::forall(f.var(), replace_atom(f.body(), pred, g));
    case FormulaKind::Modal:
      return Formula::modal(replace_atom(f.child(), pred, g));
  }
  throw std::logic_error("unreachable formula kind");
}

inline Formula replace_bottom(const Formula& f, const Formula& g) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      return f;
    case FormulaKind::Bottom:
      return g;
    case FormulaKind::And:
      return Formula::conj(replace_bottom(f.left(), g), replace_bottom(f.right(), g));
    case FormulaKind::Or:
      return Formula::disj(replace_bottom(f.left(), g), replace_bottom(f.right(), g));
    case FormulaKind::Implies:
      return Formula::implies(replace_bottom(f.left(), g), replace_bottom(f.right(), g));
    case FormulaKind::Exists:
      return Formula::exists(f.var(), replace_bottom(f.body(), g));
    case FormulaKind::Forall:
      return Formula::forall(f.var(), replace_bottom(f.body(), g));
    case FormulaKind::Modal:
      return Formula::modal(replace_bottom(f.child(), g));
  }
  throw std::logic_error("unreachable formula kind");
}

// Turns free variables whose names appear in `consts` into constants.
inline Formula bind_constants(const Formula& f, const std::set<std::string>& consts) {
  Formula out = f;
  for (const auto& c : consts) {
    if (free_vars(out).count(c)) out = substitute(out, c, Term::constant(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printing
//
// Precedence: atoms/_|_ (5) > ~, [j] (4) > & (3) > | (2) > ->, quantifiers (1).
// & and | associate left, -> associates right, quantifier scope is maximal.
// Implies(f, _|_) is re-sugared to ~f.

namespace detail {

inline void print_term(const Term& t, std::string& out) {
  out += t.name();
  if (t.kind() == TermKind::Func) {
    out += '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ", ";
      print_term(t.args()[i], out);
    }
    out += ')';
  }
}

inline int formula_prec(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
      return 5;
    case FormulaKind::Modal:
      return 4;
    case FormulaKind::Implies:
      return f.is_negation() ? 4 : 1;
    case FormulaKind::And:
      return 3;
    case FormulaKind::Or:
      return 2;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return 1;
  }
  return 5;
}

inline void print_rec(const Formula& f, int required, std::string& out) {
  int prec = formula_prec(f);
  bool parens = prec < required;
  if (parens) out += '(';
  switch (f.kind()) {
    case FormulaKind::Atom:
      out += f.pred();
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          print_term(f.args()[i], out);
        }
        out += ')';
      }
      break;
    case FormulaKind::Bottom:
      out += "_|_";
      break;
    case FormulaKind::And:
      print_rec(f.left(), 3, out);
      out += " & ";
      print_rec(f.right(), 4, out);
      break;
    case FormulaKind::Or:
      print_rec(f.left(), 2, out);
      out += " | ";
      print_rec(f.right(), 3, out);
      break;
    case FormulaKind::Implies:
      if (f.is_negation()) {
        out += '~';
        print_rec(f.left(), 4, out);
      } else {
        print_rec(f.left(), 2, out);
        out += " -> ";
        print_rec(f.right(), 1, out);
      }
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out += f.kind() == FormulaKind::Exists ? "exists " : "forall ";
      out += f.var();
      out += ". ";
      print_rec(f.body(), 0, out);
      break;
    case FormulaKind::Modal:
      out += "[j]";
      print_rec(f.child(), 4, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_rec(f, 0, out);
  return out;
}

inline std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.hyps.size(); ++i) {
    if (i) out += "; ";
    out += to_string(s.hyps[i]);
  }
  if (!s.hyps.empty()) out += ' ';
  out += "|- ";
  out += to_string(s.conclusion);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

class Parser {
 public:
  Parser() = default;

  // Identifiers in this set parse as constants instead of variables.
  void declare_constants(const std::set<std::string>& cs) {
    constants_.insert(cs.begin(), cs.end());
  }

  Formula parse(std::string_view text) {
    Lexer lx(text);
    tokens_ = lx.run();
    pos_ = 0;
    Formula f = parse_formula();
    expect_end();
    return normalize(f);
  }

  // "h1; h2 |- c" or a bare formula (empty hypothesis list).
  Sequent parse_sequent(std::string_view text) {
    std::size_t split = find_turnstile(text);
    std::vector<Formula> hyps;
    std::string_view concl = text;
    if (split != std::string_view::npos) {
      std::string_view left = text.substr(0, split);
      concl = text.substr(split + 2);
      std::size_t start = 0;
      while (start <= left.size()) {
        std::size_t semi = left.find(';', start);
        std::string_view part =
            semi == std::string_view::npos ? left.substr(start) : left.substr(start, semi - start);
        if (!is_blank(part)) hyps.push_back(parse(part));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
      }
    }
    return Sequent{std::move(hyps), parse(concl)};
  }

  // One formula per non-blank line; '#' starts a comment.
  std::vector<Formula> parse_corpus(std::string_view text) {
    std::vector<Formula> out;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      std::string_view line =
          nl == std::string_view::npos ? text.substr(start) : text.substr(start, nl - start);
      std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      if (!is_blank(line)) out.push_back(parse(line));
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
    return out;
  }

 private:
  enum class Tok { Ident, UpIdent, LParen, RParen, Comma, Dot, And, Or, Implies, Not, Bottom, Forall, Exists, Modal, End };

  struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
  };

  class Lexer {
   public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
      std::vector<Token> out;
      while (true) {
        skip_space();
        if (i_ >= text_.size()) break;
        std::size_t start = i_;
        char c = text_[i_];
        if (c == '#') break;  // comment to end of input line
        if (c == '(') { ++i_; out.push_back({Tok::LParen, "(", start}); continue; }
        if (c == ')') { ++i_; out.push_back({Tok::RParen, ")", start}); continue; }
        if (c == ',') { ++i_; out.push_back({Tok::Comma, ",", start}); continue; }
        if (c == '.') { ++i_; out.push_back({Tok::Dot, ".", start}); continue; }
        if (c == '&') { ++i_; out.push_back({Tok::And, "&", start}); continue; }
        if (c == '~') { ++i_; out.push_back({Tok::Not, "~", start}); continue; }
        if (c == '|') {
          if (text_.substr(i_, 3) == "|->") throw ParseError("unexpected '|->'", start);
          ++i_;
          out.push_back({Tok::Or, "|", start});
          continue;
        }
        if (c == '-') {
          if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
            i_ += 2;
            out.push_back({Tok::Implies, "->", start});
            continue;
          }
          throw ParseError("stray '-'", start);
        }
        if (c == '_') {
          if (text_.substr(i_, 3) == "_|_") {
            i_ += 3;
            out.push_back({Tok::Bottom, "_|_", start});
            continue;
          }
          throw ParseError("identifiers may not start with '_'", start);
        }
        if (c == '[') {
          if (text_.substr(i_, 3) == "[j]") {
            i_ += 3;
            out.push_back({Tok::Modal, "[j]", start});
            continue;
          }
          throw ParseError("expected '[j]'", start);
        }
        if (is_lower(c)) {
          std::string id = lex_ident();
          if (id == "forall") out.push_back({Tok::Forall, id, start});
          else if (id == "exists") out.push_back({Tok::Exists, id, start});
          else if (id == "false") out.push_back({Tok::Bottom, id, start});
          else out.push_back({Tok::Ident, id, start});
          continue;
        }
        if (is_upper(c)) {
          out.push_back({Tok::UpIdent, lex_ident(), start});
          continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
      out.push_back({Tok::End, "", text_.size()});
      return out;
    }

   private:
    static bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
    static bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
    static bool is_ident_tail(char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
             c == '_' || c == '\'';
    }

    void skip_space() {
      while (i_ < text_.size() &&
             (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\r' || text_[i_] == '\n'))
        ++i_;
    }

    std::string lex_ident() {
      std::size_t start = i_;
      ++i_;
      while (i_ < text_.size() && is_ident_tail(text_[i_])) ++i_;
      return std::string(text_.substr(start, i_ - start));
    }

    std::string_view text_;
    std::size_t i_ = 0;
  };

  static bool is_blank(std::string_view s) {
    for (char c : s)
      if (c != ' ' && c != '\t' && c != '\r' && c != '\n') return false;
    return true;
  }

  // Finds the top-level "|-" separator (never part of a valid formula).
  static std::size_t find_turnstile(std::string_view text) {
    for (std::size_t i = 0; i + 1 < text.size(); ++i)
      if (text[i] == '|' && text[i + 1] == '-') return i;
    return std::string_view::npos;
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Tok::End) throw ParseError("unexpected trailing input", peek().pos);
  }

  Formula parse_formula() { return parse_implication(); }

  Formula parse_implication() {
    Formula lhs = parse_disjunction();
    if (peek().kind == Tok::Implies) {
      ++pos_;
      return Formula::implies(std::move(lhs), parse_implication());
    }
    return lhs;
  }

  Formula parse_disjunction() {
    Formula f = parse_conjunction();
    while (peek().kind == Tok::Or) {
      ++pos_;
      f = Formula::disj(std::move(f), parse_conjunction());
    }
    return f;
  }

  Formula parse_conjunction() {
    Formula f = parse_unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        ++pos_;
        return Formula::neg(parse_unary());
      case Tok::Modal:
        ++pos_;
        return Formula::modal(parse_unary());
      case Tok::Forall:
      case Tok::Exists: {
        Tok q = take().kind;
        if (peek().kind != Tok::Ident)
          throw ParseError("expected a variable after quantifier", peek().pos);
        std::string v = take().text;
        expect(Tok::Dot, "'.' after quantified variable");
        Formula body = parse_implication();  // maximal scope
        return q == Tok::Forall ? Formula::forall(std::move(v), std::move(body))
                                : Formula::exists(std::move(v), std::move(body));
      }
      default:
        return parse_primary();
    }
  }

  Formula parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Bottom:
        ++pos_;
        return Formula::bottom();
      case Tok::LParen: {
        ++pos_;
        Formula f = parse_formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::UpIdent: {
        Token name = take();
        std::vector<Term> args;
        if (peek().kind == Tok::LParen) {
          ++pos_;
          args.push_back(parse_term());
          while (peek().kind == Tok::Comma) {
            ++pos_;
            args.push_back(parse_term());
          }
          expect(Tok::RParen, "')'");
        }
        check_arity(pred_arity_, name.text, static_cast<int>(args.size()), name.pos, "predicate");
        return Formula::atom(name.text, std::move(args));
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  Term parse_term() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      Token name = take();
      if (constants_.count(name.text)) return Term::constant(name.text);
      return Term::var(name.text);
    }
    if (t.kind == Tok::UpIdent) {
      Token name = take();
      expect(Tok::LParen, "'(' after function symbol");
      std::vector<Term> args;
      args.push_back(parse_term());
      while (peek().kind == Tok::Comma) {
        ++pos_;
        args.push_back(parse_term());
      }
      expect(Tok::RParen, "')'");
      check_arity(func_arity_, name.text, static_cast<int>(args.size()), name.pos, "function");
      return Term::func(name.text, std::move(args));
    }
    throw ParseError("expected a term", t.pos);
  }

  void check_arity(std::map<std::string, int>& table, const std::string& name, int arity,
                   std::size_t pos, const char* what) {
    auto [it, inserted] = table.emplace(name, arity);
    if (!inserted && it->second != arity)
      throw ParseError("arity mismatch for " + std::string(what) + " " + name + ": seen with " +
                           std::to_string(it->second) + " argument(s), now " + std::to_string(arity),
                       pos);
  }

  std::set<std::string> constants_;
  std::map<std::string, int> pred_arity_;
  std::map<std::string, int> func_arity_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline Formula parse(std::string_view text) { return Parser().parse(text); }

inline Sequent parse_sequent(std::string_view text) { return Parser().parse_sequent(text); }

}  // namespace jtrans
