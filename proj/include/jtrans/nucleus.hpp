#pragma once

// Nuclei as syntactic formula templates. A nucleus j is a formula with a
// reserved nullary hole atom; applying j to a formula fills every hole.
// Built-in families:
//
//   dneg        (• -> _|_) -> _|_
//   dneg[A]     (• -> A) -> A
//   or[A]       • | A
//   from[A]     A -> •
//   peirce[A]   (• -> A) -> •
//   internal    [j]• , interpreted only by the model evaluator
//
// A candidate j earns the name over a logic when four schemes are derivable:
// it is inflationary (phi -> j phi), preserves conjunction, satisfies
// strength ((phi -> j psi) -> (j phi -> j psi)), and commutes with
// substitution of terms for variables (a syntactic identity here, since
// templates are closed and holes never sit under a binder).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jtrans/formula.hpp"
#include "jtrans/prover.hpp"

namespace jtrans {

inline constexpr const char* kHoleAtom = "HOLE";

class Nucleus {
 public:
  Nucleus(std::string name, Formula tmpl)
      : name_(std::move(name)), tmpl_(std::move(tmpl)), internal_(false) {}

  static Nucleus make_internal() { return Nucleus(); }

  const std::string& name() const { return name_; }
  bool is_internal() const { return internal_; }
  const Formula& tmpl() const { return tmpl_; }

  Formula apply(const Formula& f) const {
    if (internal_) return Formula::modal(f);
    Formula filled = replace_atom(tmpl_, kHoleAtom, f);
    // filling several holes can duplicate binders; re-separate them
    return is_barendregt(filled) ? filled : normalize(filled);
  }

 private:
  Nucleus() : name_("internal"), tmpl_(Formula::bottom()), internal_(true) {}

  std::string name_;
  Formula tmpl_;
  bool internal_;
};

inline std::string to_string(const Nucleus& n) { return n.name(); }

namespace detail {

inline void validate_template(const Formula& f, bool under_binder, int& holes) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      if (f.pred() == kHoleAtom) {
        if (!f.args().empty()) throw std::runtime_error("nucleus hole must be nullary");
        if (under_binder)
          throw std::runtime_error("nucleus hole may not occur under a quantifier");
        ++holes;
      }
      break;
    case FormulaKind::Bottom:
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      validate_template(f.left(), under_binder, holes);
      validate_template(f.right(), under_binder, holes);
      break;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      validate_template(f.body(), true, holes);
      break;
    case FormulaKind::Modal:
      throw std::runtime_error("nucleus templates may not contain the modal marker");
  }
}

inline Formula hole() { return Formula::atom(kHoleAtom); }

}  // namespace detail

inline Nucleus nucleus_from_template(std::string name, const Formula& tmpl) {
  int holes = 0;
  detail::validate_template(tmpl, false, holes);
  if (holes == 0) throw std::runtime_error("nucleus template has no hole");
  return Nucleus(std::move(name), tmpl);
}

inline Nucleus nucleus_dneg() {
  return Nucleus("dneg", Formula::neg(Formula::neg(detail::hole())));
}
inline Nucleus nucleus_dneg(const Formula& a) {
  return Nucleus("dneg[" + to_string(a) + "]",
                 Formula::implies(Formula::implies(detail::hole(), a), a));
}
inline Nucleus nucleus_or(const Formula& a) {
  return Nucleus("or[" + to_string(a) + "]", Formula::disj(detail::hole(), a));
}
inline Nucleus nucleus_from(const Formula& a) {
  return Nucleus("from[" + to_string(a) + "]", Formula::implies(a, detail::hole()));
}
inline Nucleus nucleus_peirce(const Formula& a) {
  return Nucleus("peirce[" + to_string(a) + "]",
                 Formula::implies(Formula::implies(detail::hole(), a), detail::hole()));
}
inline Nucleus nucleus_internal() { return Nucleus::make_internal(); }

// "dneg", "dneg[A]", "or[A]", "from[A]", "peirce[A]", "internal", or a raw
// template formula mentioning HOLE.
inline Nucleus parse_nucleus(std::string_view spec) {
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trimmed(spec);
  if (s == "internal") return nucleus_internal();
  if (s == "dneg") return nucleus_dneg();
  std::size_t lb = s.find('[');
  if (lb != std::string_view::npos && s.back() == ']') {
    std::string_view head = trimmed(s.substr(0, lb));
    std::string_view inner = s.substr(lb + 1, s.size() - lb - 2);
    if (head == "dneg" || head == "or" || head == "from" || head == "peirce") {
      Formula a = parse(inner);
      if (head == "dneg") return nucleus_dneg(a);
      if (head == "or") return nucleus_or(a);
      if (head == "from") return nucleus_from(a);
      return nucleus_peirce(a);
    }
  }
  Formula tmpl = parse(s);
  return nucleus_from_template(std::string(s), tmpl);
}

// The five built-in families with the atom A as parameter; used by batteries.
inline std::vector<Nucleus> builtin_nuclei() {
  Formula a = Formula::atom("A");
  return {nucleus_dneg(), nucleus_dneg(a), nucleus_or(a), nucleus_from(a), nucleus_peirce(a)};
}

// ---------------------------------------------------------------------------
// Property checks

enum class CheckStatus { Proved, Refuted, SemanticDeferred, BudgetExceeded, OutOfFragment };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Proved: return "proved";
    case CheckStatus::Refuted: return "refuted";
    case CheckStatus::SemanticDeferred: return "semantic-deferred";
    case CheckStatus::BudgetExceeded: return "budget-exceeded";
    case CheckStatus::OutOfFragment: return "out-of-fragment";
  }
  return "?";
}

struct CheckItem {
  std::string name;
  std::string instance;  // the concrete formula that was decided
  CheckStatus status = CheckStatus::OutOfFragment;
  Verdict verdict;
};

struct NucleusReport {
  std::string nucleus;
  Logic logic = Logic::IQC;
  std::vector<CheckItem> items;

  bool all_proved() const {
    for (const auto& it : items)
      if (it.status != CheckStatus::Proved) return false;
    return !items.empty();
  }
};

namespace detail {

// Schematic atoms that avoid everything mentioned by the nucleus template.
inline std::pair<Formula, Formula> schematic_atoms(const Nucleus& n) {
  auto fresh = [&](std::string base) {
    if (!n.is_internal())
      while (contains_atom(n.tmpl(), base)) base += "'";
    return Formula::atom(base);
  };
  return {fresh("PHI"), fresh("PSI")};
}

inline CheckItem decide_item(const std::string& name, const Formula& instance, Logic logic,
                             std::uint64_t budget) {
  CheckItem item;
  item.name = name;
  item.instance = to_string(instance);
  item.verdict = decide(instance, logic, budget);
  switch (item.verdict.status) {
    case ProverStatus::Derivable: item.status = CheckStatus::Proved; break;
    case ProverStatus::NotDerivable: item.status = CheckStatus::Refuted; break;
    case ProverStatus::BudgetExceeded: item.status = CheckStatus::BudgetExceeded; break;
    case ProverStatus::OutOfFragment: item.status = CheckStatus::OutOfFragment; break;
  }
  return item;
}

inline CheckItem deferred_item(const std::string& name, const Formula& instance) {
  CheckItem item;
  item.name = name;
  item.instance = to_string(instance);
  item.status = CheckStatus::SemanticDeferred;
  item.verdict.note = "contains the model-internal marker; verify against finite models";
  return item;
}

inline CheckItem schema_item(const Nucleus& n, const std::string& name, const Formula& instance,
                             Logic logic, std::uint64_t budget) {
  return n.is_internal() || contains_modal(instance) ? deferred_item(name, instance)
                                                     : decide_item(name, instance, logic, budget);
}

}  // namespace detail

// Substitution stability is syntactic: filling the hole commutes with
// substituting terms for variables because templates are closed and holes
// never sit under a binder. Checked on representative instances.
inline bool substitution_commutes(const Nucleus& n) {
  Formula phi = Formula::atom("PHI", {Term::var("x"), Term::var("y")});
  for (const Term& t : {Term::constant("c"), Term::var("y"),
                        Term::func("F", {Term::var("y"), Term::constant("c")})}) {
    Formula lhs = substitute(n.apply(phi), "x", t);
    Formula rhs = n.apply(substitute(phi, "x", t));
    if (!alpha_eq(lhs, rhs)) return false;
  }
  return true;
}

inline NucleusReport check_axioms(const Nucleus& n, Logic logic,
                                  std::uint64_t budget = kDefaultBudget) {
  NucleusReport rep;
  rep.nucleus = n.name();
  rep.logic = logic;
  auto [phi, psi] = detail::schematic_atoms(n);

  rep.items.push_back(detail::schema_item(
      n, "inflationary", Formula::implies(phi, n.apply(phi)), logic, budget));
  rep.items.push_back(detail::schema_item(
      n, "meet-preservation",
      Formula::iff(n.apply(Formula::conj(phi, psi)),
                   Formula::conj(n.apply(phi), n.apply(psi))),
      logic, budget));
  rep.items.push_back(detail::schema_item(
      n, "strength",
      Formula::implies(Formula::implies(phi, n.apply(psi)),
                       Formula::implies(n.apply(phi), n.apply(psi))),
      logic, budget));

  CheckItem subst;
  subst.name = "substitution-stability";
  subst.instance = "syntactic identity on representative instances";
  subst.status = substitution_commutes(n) ? CheckStatus::Proved : CheckStatus::Refuted;
  rep.items.push_back(std::move(subst));
  return rep;
}

// The derived closure properties that hold for every nucleus: monotonicity,
// idempotence, absorption into the consequent of an implication, and
// absorption across a disjunction. (Their quantifier analogues are checked
// against finite models by the Kripke module.)
inline NucleusReport check_lemma_propositional(const Nucleus& n, Logic logic,
                                               std::uint64_t budget = kDefaultBudget) {
  NucleusReport rep;
  rep.nucleus = n.name();
  rep.logic = logic;
  auto [phi, psi] = detail::schematic_atoms(n);

  rep.items.push_back(detail::schema_item(
      n, "monotonicity",
      Formula::implies(Formula::implies(phi, psi),
                       Formula::implies(n.apply(phi), n.apply(psi))),
      logic, budget));
  rep.items.push_back(detail::schema_item(
      n, "idempotence", Formula::iff(n.apply(n.apply(phi)), n.apply(phi)), logic, budget));
  rep.items.push_back(detail::schema_item(
      n, "implication-absorption",
      Formula::iff(n.apply(Formula::implies(phi, n.apply(psi))),
                   Formula::implies(n.apply(phi), n.apply(psi))),
      logic, budget));
  rep.items.push_back(detail::schema_item(
      n, "disjunction-absorption",
      Formula::iff(n.apply(Formula::disj(n.apply(phi), n.apply(psi))),
                   n.apply(Formula::disj(phi, psi))),
      logic, budget));
  return rep;
}

// Does j(phi -> psi) <-> (j phi -> j psi) hold? True for dneg over IQC but
// not over MQC; translations may only take the undecorated implication
// shortcut when this comes back derivable.
inline Verdict commutes_with_implication(const Nucleus& n, Logic logic,
                                         std::uint64_t budget = kDefaultBudget) {
  auto [phi, psi] = detail::schematic_atoms(n);
  Formula instance = Formula::iff(n.apply(Formula::implies(phi, psi)),
                                  Formula::implies(n.apply(phi), n.apply(psi)));
  if (n.is_internal()) {
    Verdict v;
    v.note = "model-internal nucleus: decide semantically";
    return v;
  }
  return decide(instance, logic, budget);
}

}  // namespace jtrans
