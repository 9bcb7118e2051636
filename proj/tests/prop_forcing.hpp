#pragma once

// Test-local propositional forcing checker, implemented independently of the
// library's evaluator so countermodels are audited by a second opinion.

#include <catch2/catch_amalgamated.hpp>

#include "jtrans/formula.hpp"
#include "jtrans/model.hpp"
#include "jtrans/prover.hpp"

namespace testutil {

inline bool forces(const jtrans::KripkeModel& m, int w, const jtrans::Formula& f) {
  using jtrans::FormulaKind;
  switch (f.kind()) {
    case FormulaKind::Atom:
      return m.holds(w, jtrans::GroundAtom{f.pred(), {}});
    case FormulaKind::Bottom:
      return false;
    case FormulaKind::And:
      return forces(m, w, f.left()) && forces(m, w, f.right());
    case FormulaKind::Or:
      return forces(m, w, f.left()) || forces(m, w, f.right());
    case FormulaKind::Implies:
      for (int q = 0; q < m.num_worlds(); ++q)
        if (m.below(q, w) && forces(m, q, f.left()) && !forces(m, q, f.right())) return false;
      return true;
    default:
      throw std::logic_error("forces: unsupported formula");
  }
}

// Checks that a NotDerivable verdict's countermodel genuinely refutes the
// sequent: the root forces every hypothesis and not the conclusion.
inline void audit_countermodel(const jtrans::Sequent& s, const jtrans::Verdict& v) {
  using namespace jtrans;
  REQUIRE(v.status == ProverStatus::NotDerivable);
  REQUIRE(v.model.has_value());
  const KripkeModel& m = *v.model;
  CAPTURE(to_string(s), to_string(m), v.model_root);
  REQUIRE(m.validate().empty());
  auto adjust = [&](const Formula& f) {
    return v.falsum_atom.empty() ? f : replace_bottom(f, Formula::atom(v.falsum_atom));
  };
  for (const auto& h : s.hyps) CHECK(forces(m, v.model_root, adjust(h)));
  CHECK(!forces(m, v.model_root, adjust(s.conclusion)));
}

}  // namespace testutil
