#pragma once

// Forcing over finite Kripke structures. Plain forcing reads the reserved
// modal marker [j] as the dense-below operator
//
//   p |= [j]f   iff   every refinement q <= p has a refinement r <= q
//                     with r |= f,
//
// which is how a nucleus can live inside a model instead of in the formula
// language. Strong forcing comes in three flavours that differ only in the
// implication clause:
//
//   Strong            q |=s f  must make the consequent hold densely below q
//   StrongSimplified  q |=s f  must give some refinement forcing the consequent
//   CohenStrong       q |=s f  must make q force the consequent directly
//
// check_forcing_identities ties the flavours to the syntactic translations and
// to each other; check_internal_nucleus verifies the nucleus laws for the
// dense-below operator, including the two quantifier absorption laws that the
// propositional prover cannot reach.
//
// Evaluation is exact: formulas are sentences over the model's signature
// (every predicate interpreted, constant domain, no function symbols), and
// quantifiers enumerate the whole domain. A free variable whose name is a
// domain element denotes that element, so ground instances can be written
// without declaring constants.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "jtrans/formula.hpp"
#include "jtrans/model.hpp"
#include "jtrans/nucleus.hpp"
#include "jtrans/translate.hpp"

namespace jtrans {

enum class ForcingKind { Plain, Strong, StrongSimplified, CohenStrong };

inline const char* to_string(ForcingKind k) {
  switch (k) {
    case ForcingKind::Plain: return "plain";
    case ForcingKind::Strong: return "strong";
    case ForcingKind::StrongSimplified: return "strong-simplified";
    case ForcingKind::CohenStrong: return "cohen-strong";
  }
  return "?";
}

inline std::optional<ForcingKind> parse_forcing_kind(std::string_view s) {
  if (s == "plain") return ForcingKind::Plain;
  if (s == "strong") return ForcingKind::Strong;
  if (s == "strong-simplified") return ForcingKind::StrongSimplified;
  if (s == "cohen-strong") return ForcingKind::CohenStrong;
  return std::nullopt;
}

// Memoizing evaluator bound to one model. Results are cached per
// (world, formula node, flavour, environment); evaluated formulas are pinned
// so node addresses stay unique for the cache's lifetime.
class Evaluator {
 public:
  explicit Evaluator(const KripkeModel& m) : m_(&m) {}

  const KripkeModel& model() const { return *m_; }

  bool forces(int world, const Formula& f) {
    pin(f);
    return eval(world, f, {}, ForcingKind::Plain);
  }

  // The dense-below operator applied to plain forcing.
  bool forces_dense(int world, const Formula& f) {
    pin(f);
    return dense_below(world, f, {}, ForcingKind::Plain);
  }

  bool strong(int world, const Formula& f, ForcingKind kind = ForcingKind::Strong) {
    if (kind == ForcingKind::Plain) return forces(world, f);
    pin(f);
    return eval(world, f, {}, kind);
  }

  bool strong_dense(int world, const Formula& f, ForcingKind kind = ForcingKind::Strong) {
    pin(f);
    return dense_below(world, f, {}, kind);
  }

  // Plain forcing at every world.
  bool valid(const Formula& f) {
    for (int p = 0; p < m_->num_worlds(); ++p)
      if (!forces(p, f)) return false;
    return true;
  }

 private:
  using Env = std::vector<std::pair<std::string, int>>;  // variable -> domain index
  using Key = std::tuple<int, const void*, int, Env>;

  void pin(const Formula& f) { pinned_.push_back(f); }

  int resolve(const Term& t, const Env& env) const {
    switch (t.kind()) {
      case TermKind::Func:
        throw std::runtime_error("function symbols have no interpretation in models: " + t.name());
      case TermKind::Const:
        return m_->domain_index(t.name());
      case TermKind::Var: {
        for (auto it = env.rbegin(); it != env.rend(); ++it)
          if (it->first == t.name()) return it->second;
        for (int i = 0; i < m_->domain_size(); ++i)
          if (m_->domain[static_cast<std::size_t>(i)] == t.name()) return i;
        throw std::runtime_error("unbound variable in evaluated formula: " + t.name());
      }
    }
    throw std::logic_error("unreachable term kind");
  }

  bool atom_holds(int world, const Formula& f, const Env& env) const {
    auto it = m_->preds.find(f.pred());
    if (it == m_->preds.end())
      throw std::runtime_error("predicate not interpreted by the model: " + f.pred());
    if (it->second != static_cast<int>(f.args().size()))
      throw std::runtime_error("arity mismatch for predicate " + f.pred() + ": model declares " +
                               std::to_string(it->second));
    GroundAtom a{f.pred(), {}};
    for (const Term& t : f.args()) a.args.push_back(resolve(t, env));
    return m_->holds(world, a);
  }

  // Some refinement of q satisfies f.
  bool exists_below(int q, const Formula& f, const Env& env, ForcingKind kind) {
    for (int r = 0; r < m_->num_worlds(); ++r)
      if (m_->below(r, q) && eval(r, f, env, kind)) return true;
    return false;
  }

  // Every refinement of p has a further refinement satisfying f.
  bool dense_below(int p, const Formula& f, const Env& env, ForcingKind kind) {
    for (int q = 0; q < m_->num_worlds(); ++q)
      if (m_->below(q, p) && !exists_below(q, f, env, kind)) return false;
    return true;
  }

  bool eval(int p, const Formula& f, const Env& env, ForcingKind kind) {
    Key key{p, f.id(), static_cast<int>(kind), env};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool out = clause(p, f, env, kind);
    memo_.emplace(std::move(key), out);
    return out;
  }

  bool clause(int p, const Formula& f, const Env& env, ForcingKind kind) {
    switch (f.kind()) {
      case FormulaKind::Atom:
        return atom_holds(p, f, env);
      case FormulaKind::Bottom:
        return false;
      case FormulaKind::And:
        return eval(p, f.left(), env, kind) && eval(p, f.right(), env, kind);
      case FormulaKind::Or:
        return eval(p, f.left(), env, kind) || eval(p, f.right(), env, kind);
      case FormulaKind::Implies: {
        Formula lhs = f.left(), rhs = f.right();
        for (int q = 0; q < m_->num_worlds(); ++q) {
          if (!m_->below(q, p) || !eval(q, lhs, env, kind)) continue;
          bool ok = true;
          switch (kind) {
            case ForcingKind::Plain:
            case ForcingKind::CohenStrong:
              ok = eval(q, rhs, env, kind);
              break;
            case ForcingKind::Strong:
              ok = dense_below(q, rhs, env, kind);
              break;
            case ForcingKind::StrongSimplified:
              ok = exists_below(q, rhs, env, kind);
              break;
          }
          if (!ok) return false;
        }
        return true;
      }
      case FormulaKind::Exists: {
        Env env2 = env;
        env2.emplace_back(f.var(), 0);
        for (int d = 0; d < m_->domain_size(); ++d) {
          env2.back().second = d;
          if (eval(p, f.body(), env2, kind)) return true;
        }
        return false;
      }
      case FormulaKind::Forall: {
        Env env2 = env;
        env2.emplace_back(f.var(), 0);
        for (int d = 0; d < m_->domain_size(); ++d) {
          env2.back().second = d;
          if (kind == ForcingKind::Plain) {
            for (int q = 0; q < m_->num_worlds(); ++q)
              if (m_->below(q, p) && !eval(q, f.body(), env2, kind)) return false;
          } else {
            if (!dense_below(p, f.body(), env2, kind)) return false;
          }
        }
        return true;
      }
      case FormulaKind::Modal:
        if (kind != ForcingKind::Plain)
          throw std::runtime_error(
              "strong forcing is defined on the base language only (no modal marker)");
        return dense_below(p, f.child(), env, ForcingKind::Plain);
    }
    throw std::logic_error("unreachable formula kind");
  }

  const KripkeModel* m_;
  std::vector<Formula> pinned_;
  std::map<Key, bool> memo_;
};

// One-shot conveniences addressing worlds by name.
inline bool eval_forces(const KripkeModel& m, const std::string& world, const Formula& f) {
  Evaluator ev(m);
  return ev.forces(m.world_index(world), f);
}

inline bool eval_internal_j(const KripkeModel& m, const std::string& world, const Formula& f) {
  Evaluator ev(m);
  return ev.forces_dense(m.world_index(world), f);
}

inline bool eval_strong(const KripkeModel& m, const std::string& world, const Formula& f,
                        ForcingKind kind = ForcingKind::Strong) {
  Evaluator ev(m);
  return ev.strong(m.world_index(world), f, kind);
}

// ---------------------------------------------------------------------------
// Identity batteries

struct ForcingCheck {
  std::string name;
  long long instances = 0;
  long long failures = 0;
  std::vector<std::string> violations;  // first few offending (world, formula) pairs

  ForcingCheck() = default;
  ForcingCheck(std::string n) : name(std::move(n)) {}

  bool passed() const { return failures == 0 && instances > 0; }
};

struct ForcingReport {
  std::vector<ForcingCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return !checks.empty();
  }

  const ForcingCheck& at(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw std::runtime_error("no such check: " + std::string(name));
  }
};

inline std::string to_string(const ForcingReport& rep) {
  std::string out;
  for (const auto& c : rep.checks) {
    out += c.name;
    out += c.passed() ? ": pass (" : ": FAIL (";
    out += std::to_string(c.instances) + " instances";
    if (c.failures > 0) out += ", " + std::to_string(c.failures) + " failures";
    out += ")\n";
    for (const auto& v : c.violations) out += "  " + v + "\n";
  }
  return out;
}

namespace detail {

inline void record(ForcingCheck& c, bool ok, const KripkeModel& m, int world, const Formula& f) {
  ++c.instances;
  if (ok) return;
  ++c.failures;
  if (c.violations.size() < 5)
    c.violations.push_back("world " + m.worlds[static_cast<std::size_t>(world)] + ": " +
                           to_string(f));
}

inline void require_battery_sentence(const Formula& f) {
  if (contains_modal(f))
    throw std::runtime_error("battery formulas must not contain the modal marker: " +
                             to_string(f));
  if (!is_sentence(f))
    throw std::runtime_error("battery formulas must be sentences: " + to_string(f));
}

// Checks with zero instances were never requested (e.g. no open formulas
// supplied); drop them rather than letting them read as failures.
inline void drop_unexercised(ForcingReport& rep) {
  std::vector<ForcingCheck> kept;
  for (auto& c : rep.checks)
    if (c.instances > 0) kept.push_back(std::move(c));
  rep.checks = std::move(kept);
}

}  // namespace detail

// For every battery sentence f and every world p of m, checks that
//   1. strong-matches-inner-expansion:    p |=s f  iff  p |= Jf, where J is
//      the inner Kuroda-style translation under the internal nucleus;
//   2. implication-clause-simplified:     the long and the simplified
//      implication clauses define the same strong-forcing relation;
//   3. gg-matches-dense-strong:           p forces the Godel-Gentzen-style
//      translation of f iff f is strongly forced densely below p;
//   4. dense-below-is-double-negation:    p |= [j]f  iff  p |= ~~f (this
//      evaluator's metatheory is classical);
//   5. classical-variant-agrees-densely:  the undecorated implication clause
//      changes strong forcing pointwise but not its dense-below closure;
//   6. classical-variant-matches-undecorated-expansion: that flavour is in
//      turn the expansion of the undecorated inner translation.
inline ForcingReport check_forcing_identities(const KripkeModel& m,
                                              const std::vector<Formula>& battery) {
  Evaluator ev(m);
  Nucleus j = nucleus_internal();
  ForcingReport rep;
  rep.checks = {{"strong-matches-inner-expansion"},
                {"implication-clause-simplified"},
                {"gg-matches-dense-strong"},
                {"dense-below-is-double-negation"},
                {"classical-variant-agrees-densely"},
                {"classical-variant-matches-undecorated-expansion"}};
  for (const Formula& f : battery) {
    detail::require_battery_sentence(f);
    Formula inner = kuroda_inner(f, j);
    Formula gg = translate_gg(f, j);
    Formula classic_inner = classic_kuroda_inner(f, j);
    Formula nn = Formula::neg(Formula::neg(f));
    for (int p = 0; p < m.num_worlds(); ++p) {
      bool s_long = ev.strong(p, f, ForcingKind::Strong);
      detail::record(rep.checks[0], s_long == ev.forces(p, inner), m, p, f);
      detail::record(rep.checks[1], s_long == ev.strong(p, f, ForcingKind::StrongSimplified), m,
                     p, f);
      detail::record(rep.checks[2],
                     ev.forces(p, gg) == ev.strong_dense(p, f, ForcingKind::Strong), m, p, f);
      detail::record(rep.checks[3], ev.forces_dense(p, f) == ev.forces(p, nn), m, p, f);
      detail::record(rep.checks[4],
                     ev.strong_dense(p, f, ForcingKind::CohenStrong) ==
                         ev.strong_dense(p, f, ForcingKind::Strong),
                     m, p, f);
      detail::record(rep.checks[5],
                     ev.strong(p, f, ForcingKind::CohenStrong) == ev.forces(p, classic_inner), m,
                     p, f);
    }
  }
  detail::drop_unexercised(rep);
  return rep;
}

// Reads the dense-below operator as a nucleus and checks the nucleus laws at
// every world: the defining axioms and the derived absorption laws on pairs
// of consecutive battery sentences, plus the two quantifier absorption laws
// and substitution stability on formulas with (at most) one free variable.
inline ForcingReport check_internal_nucleus(const KripkeModel& m,
                                            const std::vector<Formula>& sentences,
                                            const std::vector<Formula>& open_formulas = {},
                                            const std::string& open_var = "x") {
  Evaluator ev(m);
  ForcingReport rep;
  rep.checks = {{"inflationary"},
                {"meet-preserving"},
                {"strength"},
                {"substitution-stable"},
                {"monotone"},
                {"idempotent"},
                {"implication-absorption"},
                {"disjunction-absorption"},
                {"exists-absorption"},
                {"forall-absorption"}};
  auto J = [](Formula f) { return Formula::modal(std::move(f)); };
  auto check_law = [&](ForcingCheck& c, Formula law) {
    law = normalize(law);  // restore distinct binders after gluing pieces together
    for (int p = 0; p < m.num_worlds(); ++p) detail::record(c, ev.forces(p, law), m, p, law);
  };
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const Formula& f = sentences[i];
    const Formula& g = sentences[(i + 1) % sentences.size()];
    detail::require_battery_sentence(f);
    check_law(rep.checks[0], Formula::implies(f, J(f)));
    check_law(rep.checks[1], Formula::iff(J(Formula::conj(f, g)), Formula::conj(J(f), J(g))));
    check_law(rep.checks[2],
              Formula::implies(Formula::implies(f, J(g)), Formula::implies(J(f), J(g))));
    check_law(rep.checks[4],
              Formula::implies(Formula::implies(f, g), Formula::implies(J(f), J(g))));
    check_law(rep.checks[5], Formula::iff(J(J(f)), J(f)));
    check_law(rep.checks[6],
              Formula::iff(J(Formula::implies(f, J(g))), Formula::implies(J(f), J(g))));
    check_law(rep.checks[7],
              Formula::iff(J(Formula::disj(J(f), J(g))), J(Formula::disj(f, g))));
  }
  for (const Formula& f : open_formulas) {
    if (contains_modal(f))
      throw std::runtime_error("battery formulas must not contain the modal marker: " +
                               to_string(f));
    for (const auto& v : free_vars(f))
      if (v != open_var)
        throw std::runtime_error("open battery formula may only use variable " + open_var +
                                 ", found " + v + " in " + to_string(f));
    check_law(rep.checks[8],
              Formula::iff(J(Formula::exists(open_var, J(f))), J(Formula::exists(open_var, f))));
    check_law(rep.checks[9],
              Formula::iff(J(Formula::forall(open_var, J(f))), Formula::forall(open_var, J(f))));
    for (int d = 0; d < m.domain_size(); ++d) {
      Term c = Term::constant(m.domain[static_cast<std::size_t>(d)]);
      Formula lhs = substitute(J(f), open_var, c);
      Formula rhs = J(substitute(f, open_var, c));
      for (int p = 0; p < m.num_worlds(); ++p)
        detail::record(rep.checks[3], ev.forces(p, lhs) == ev.forces(p, rhs), m, p, lhs);
    }
  }
  detail::drop_unexercised(rep);
  return rep;
}

}  // namespace jtrans
