#pragma once

// Nucleus-parametric translations of first-order formulas into themselves.
//
// gg (double-negation-shift style): atoms and bottom get j applied, the
// strict connectives pass through, and the two positive existentials take a
// j on the outside as well:
//
//   P(t..)  ~> j P(t..)        _|_ ~> j _|_
//   f & g   ~> f' & g'         f -> g ~> f' -> g'       forall x. f ~> forall x. f'
//   f | g   ~> j(f' | g')      exists x. f ~> j(exists x. f')
//
// kuroda: an inner pass J leaves atoms alone and decorates only the
// consequent of implications and the body of universals, then one j wraps
// the whole result:
//
//   J(P(t..)) = P(t..)         J(_|_) = _|_
//   J(f & g) = Jf & Jg         J(f | g) = Jf | Jg        J(exists x. f) = exists x. Jf
//   J(f -> g) = Jf -> j(Jg)    J(forall x. f) = forall x. j(Jf)
//   result: j(Jf)
//
// classic-kuroda: the historical variant whose inner pass leaves
// implications undecorated (J'(f -> g) = J'f -> J'g, other clauses as J).
// It only matches kuroda when j commutes with implication over the target
// logic, so callers gate it behind commutes_with_implication.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jtrans/formula.hpp"
#include "jtrans/nucleus.hpp"

namespace jtrans {

enum class Scheme { GG, Kuroda, KurodaInner, ClassicKuroda };

inline const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::GG: return "gg";
    case Scheme::Kuroda: return "kuroda";
    case Scheme::KurodaInner: return "kuroda-inner";
    case Scheme::ClassicKuroda: return "classic-kuroda";
  }
  return "?";
}

inline std::optional<Scheme> parse_scheme(std::string_view s) {
  if (s == "gg") return Scheme::GG;
  if (s == "kuroda") return Scheme::Kuroda;
  if (s == "kuroda-inner") return Scheme::KurodaInner;
  if (s == "classic-kuroda") return Scheme::ClassicKuroda;
  return std::nullopt;
}

namespace detail {

inline void reject_modal_input(const Formula& f) {
  if (contains_modal(f))
    throw std::runtime_error("cannot translate a formula that already carries the modal marker: " +
                             to_string(f));
}

inline Formula gg_rec(const Formula& f, const Nucleus& j) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
      return j.apply(f);
    case FormulaKind::And:
      return Formula::conj(gg_rec(f.left(), j), gg_rec(f.right(), j));
    case FormulaKind::Implies:
      return Formula::implies(gg_rec(f.left(), j), gg_rec(f.right(), j));
    case FormulaKind::Forall:
      return Formula::forall(f.var(), gg_rec(f.body(), j));
    case FormulaKind::Or:
      return j.apply(Formula::disj(gg_rec(f.left(), j), gg_rec(f.right(), j)));
    case FormulaKind::Exists:
      return j.apply(Formula::exists(f.var(), gg_rec(f.body(), j)));
    case FormulaKind::Modal:
      break;
  }
  throw std::logic_error("gg: unexpected formula kind");
}

inline Formula kuroda_rec(const Formula& f, const Nucleus& j, bool decorate_implication) {
  auto rec = [&](const Formula& g) { return kuroda_rec(g, j, decorate_implication); };
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
      return f;
    case FormulaKind::And:
      return Formula::conj(rec(f.left()), rec(f.right()));
    case FormulaKind::Or:
      return Formula::disj(rec(f.left()), rec(f.right()));
    case FormulaKind::Exists:
      return Formula::exists(f.var(), rec(f.body()));
    case FormulaKind::Implies:
      return Formula::implies(rec(f.left()),
                              decorate_implication ? j.apply(rec(f.right())) : rec(f.right()));
    case FormulaKind::Forall:
      return Formula::forall(f.var(), j.apply(rec(f.body())));
    case FormulaKind::Modal:
      break;
  }
  throw std::logic_error("kuroda: unexpected formula kind");
}

}  // namespace detail

inline Formula translate_gg(const Formula& f, const Nucleus& j) {
  detail::reject_modal_input(f);
  return normalize(detail::gg_rec(f, j));
}

// The inner pass alone.
inline Formula kuroda_inner(const Formula& f, const Nucleus& j) {
  detail::reject_modal_input(f);
  return normalize(detail::kuroda_rec(f, j, true));
}

inline Formula translate_kuroda(const Formula& f, const Nucleus& j) {
  detail::reject_modal_input(f);
  return normalize(j.apply(detail::kuroda_rec(f, j, true)));
}

inline Formula classic_kuroda_inner(const Formula& f, const Nucleus& j) {
  detail::reject_modal_input(f);
  return normalize(detail::kuroda_rec(f, j, false));
}

inline Formula translate_classic_kuroda(const Formula& f, const Nucleus& j) {
  detail::reject_modal_input(f);
  return normalize(j.apply(detail::kuroda_rec(f, j, false)));
}

inline Formula translate(const Formula& f, Scheme scheme, const Nucleus& j) {
  switch (scheme) {
    case Scheme::GG: return translate_gg(f, j);
    case Scheme::Kuroda: return translate_kuroda(f, j);
    case Scheme::KurodaInner: return kuroda_inner(f, j);
    case Scheme::ClassicKuroda: return translate_classic_kuroda(f, j);
  }
  throw std::logic_error("unknown scheme");
}

inline Sequent translate_sequent(const Sequent& s, Scheme scheme, const Nucleus& j) {
  Sequent out{{}, translate(s.conclusion, scheme, j)};
  out.hyps.reserve(s.hyps.size());
  for (const auto& h : s.hyps) out.hyps.push_back(translate(h, scheme, j));
  return out;
}

// The classic variant is only faithful when j commutes with implication over
// the target logic.
inline bool classic_kuroda_allowed(const Nucleus& j, Logic logic,
                                   std::uint64_t budget = kDefaultBudget) {
  return commutes_with_implication(j, logic, budget).derivable();
}

}  // namespace jtrans
