#pragma once

// The headline verification batteries, bundled so the command line and the
// release gate run exactly the same checks. Each claim draws its material
// deterministically from SuiteConfig::seed (every claim owns a distinct
// stream), so two runs with the same configuration produce byte-identical
// records. A budget exhaustion inside a battery counts as a failure of that
// instance, never as a silent skip.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jtrans/formula.hpp"
#include "jtrans/gen.hpp"
#include "jtrans/kripke.hpp"
#include "jtrans/model.hpp"
#include "jtrans/nucleus.hpp"
#include "jtrans/prover.hpp"
#include "jtrans/translate.hpp"

namespace jtrans {

struct SuiteConfig {
  std::uint64_t seed = 2026;

  // propositional batteries
  std::vector<std::string> atoms = {"P", "Q", "R", "S"};
  int formula_count = 200;      // random formulas per equivalence battery
  int formula_height = 6;       // leaves have height 1
  int sequent_count = 100;      // derivable sequents / theorems per battery
  int cross_check_count = 300;  // prover verdicts validated against models

  // finite-model batteries
  int model_count = 20;         // random structures per semantic battery
  int max_worlds = 6;
  int max_domain = 3;
  int sentences_per_model = 50;          // forcing-identity battery
  int nucleus_sentences_per_model = 8;   // closed laws of the internal nucleus
  int open_formulas_per_model = 6;       // quantifier laws need a free variable
  int battery_model_count = 10;          // forcing side of the cross-check

  // exhaustive coherent fragment (atoms, bottom, and, or)
  int coherent_atoms = 2;
  int coherent_height = 3;

  std::uint64_t budget = 100'000'000;
};

struct ClaimResult {
  std::string id;
  std::string headline;
  long long instances = 0;
  long long failures = 0;
  std::vector<std::string> details;  // first few failing instances
  double seconds = 0.0;

  bool passed() const { return failures == 0 && instances > 0; }
};

namespace detail {

template <class Body>
inline ClaimResult run_claim(std::string id, std::string headline, const Body& body) {
  ClaimResult r;
  r.id = std::move(id);
  r.headline = std::move(headline);
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline void claim_check(ClaimResult& r, bool ok, const std::string& what) {
  ++r.instances;
  if (ok) return;
  ++r.failures;
  if (r.details.size() < 5) r.details.push_back(what);
}

// A missing verdict (budget ran out) is a failure with a marker, not a pass.
inline void claim_verdict(ClaimResult& r, const std::optional<bool>& verdict,
                          const std::string& what) {
  claim_check(r, verdict.has_value() && *verdict, verdict ? what : what + " [budget]");
}

inline void absorb(ClaimResult& r, const ForcingCheck& c, const std::string& context) {
  r.instances += c.instances;
  r.failures += c.failures;
  for (const auto& v : c.violations)
    if (r.details.size() < 5) r.details.push_back(context + c.name + ": " + v);
}

inline std::string fresh_atom_name(std::string base, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

}  // namespace detail

// 1. Every builtin nucleus satisfies the defining laws — inflationary,
//    meet-preservation, strength, substitution stability — over MQC and IQC.
inline ClaimResult claim_nucleus_axioms(const SuiteConfig& cfg) {
  return detail::run_claim(
      "nucleus-axioms", "builtin nuclei satisfy the four defining laws over MQC and IQC",
      [&](ClaimResult& r) {
        for (const Nucleus& n : builtin_nuclei())
          for (Logic logic : {Logic::MQC, Logic::IQC}) {
            NucleusReport rep = check_axioms(n, logic, cfg.budget);
            for (const CheckItem& item : rep.items)
              detail::claim_check(r, item.status == CheckStatus::Proved,
                                  n.name() + " / " + to_string(logic) + ": " + item.name);
          }
      });
}

// 2. The derived closure laws: the four propositional items are derivable for
//    every builtin nucleus (already over MQC, hence over IQC), and the
//    quantifier absorption laws hold for the dense-below operator at every
//    world of random finite structures.
inline ClaimResult claim_nucleus_lemma(const SuiteConfig& cfg) {
  return detail::run_claim(
      "nucleus-lemma",
      "derived nucleus laws: propositional items by proof search, quantifier laws on models",
      [&](ClaimResult& r) {
        for (const Nucleus& n : builtin_nuclei())
          for (Logic logic : {Logic::MQC, Logic::IQC}) {
            NucleusReport rep = check_lemma_propositional(n, logic, cfg.budget);
            for (const CheckItem& item : rep.items)
              detail::claim_check(r, item.status == CheckStatus::Proved,
                                  n.name() + " / " + to_string(logic) + ": " + item.name);
          }

        Rng rng(cfg.seed + 2);
        ModelGenOptions mopt;
        mopt.max_worlds = cfg.max_worlds;
        mopt.max_domain = cfg.max_domain;
        SentenceGenOptions sopt;
        sopt.max_height = 4;
        SentenceGenOptions oopt = sopt;
        oopt.free_vars = {"x"};
        for (int t = 0; t < cfg.model_count; ++t) {
          KripkeModel m = random_model(rng, mopt);
          std::vector<Formula> sentences, open;
          for (int i = 0; i < cfg.nucleus_sentences_per_model; ++i)
            sentences.push_back(random_sentence(rng, sopt));
          for (int i = 0; i < cfg.open_formulas_per_model; ++i)
            open.push_back(random_sentence(rng, oopt));
          ForcingReport rep = check_internal_nucleus(m, sentences, open);
          std::string ctx = "structure " + std::to_string(t) + ", ";
          for (const ForcingCheck& c : rep.checks) detail::absorb(r, c, ctx);
        }
      });
}

// 3. The two translation styles agree: gg and kuroda images of the same
//    formula are interderivable for every builtin nucleus over MQC and IQC.
inline ClaimResult claim_translation_equivalence(const SuiteConfig& cfg) {
  return detail::run_claim(
      "translation-equivalence", "gg and kuroda images are interderivable over MQC and IQC",
      [&](ClaimResult& r) {
        Rng rng(cfg.seed + 3);
        FormulaGenOptions opt;
        opt.atoms = cfg.atoms;
        opt.max_height = cfg.formula_height;
        std::vector<Nucleus> nuclei = builtin_nuclei();
        for (int i = 0; i < cfg.formula_count; ++i) {
          Formula f = random_propositional(rng, opt);
          for (const Nucleus& n : nuclei) {
            Formula gg = translate_gg(f, n);
            Formula kur = translate_kuroda(f, n);
            Formula instance = Formula::iff(gg, kur);
            for (Logic logic : {Logic::MQC, Logic::IQC})
              detail::claim_verdict(r, try_decide_bool(Sequent{{}, instance}, logic, cfg.budget),
                                    n.name() + " / " + to_string(logic) + ": " + to_string(f));
          }
        }
      });
}

// 4. Translation preserves derivability: the image of an IQC-derivable
//    sequent under either style stays IQC-derivable for every builtin nucleus.
inline ClaimResult claim_translation_preservation(const SuiteConfig& cfg) {
  return detail::run_claim(
      "translation-preservation", "derivable sequents stay derivable under both translations",
      [&](ClaimResult& r) {
        Rng rng(cfg.seed + 4);
        FormulaGenOptions opt;
        opt.atoms = cfg.atoms;
        opt.max_height = cfg.formula_height;
        std::vector<Nucleus> nuclei = builtin_nuclei();
        for (int i = 0; i < cfg.sequent_count; ++i) {
          Sequent s = random_derivable_sequent(rng, Logic::IQC, opt, cfg.budget);
          for (const Nucleus& n : nuclei)
            for (Scheme scheme : {Scheme::GG, Scheme::Kuroda})
              detail::claim_verdict(
                  r, try_decide_bool(translate_sequent(s, scheme, n), Logic::IQC, cfg.budget),
                  n.name() + " / " + to_string(scheme) + ": " + to_string(s));
        }
      });
}

// 5. The classically minded nuclei embed stronger logics into weaker ones:
//    relativized double negation carries CQC-derivable sequents into IQC,
//    plain double negation carries them into MQC, and joining bottom carries
//    IQC-derivable sequents into MQC — under both translation styles.
inline ClaimResult claim_specific_nuclei(const SuiteConfig& cfg) {
  return detail::run_claim(
      "specific-nuclei", "dneg[A], dneg, and or[bot] embed CQC into IQC, CQC into MQC, IQC into MQC",
      [&](ClaimResult& r) {
        Rng rng(cfg.seed + 5);
        FormulaGenOptions opt;
        opt.atoms = cfg.atoms;
        opt.max_height = cfg.formula_height;
        Nucleus relativized = nucleus_dneg(Formula::atom(detail::fresh_atom_name("A", cfg.atoms)));
        Nucleus plain = nucleus_dneg();
        Nucleus join_bottom = nucleus_or(Formula::bottom());

        for (int i = 0; i < cfg.sequent_count; ++i) {
          Sequent s = random_derivable_sequent(rng, Logic::CQC, opt, cfg.budget);
          for (Scheme scheme : {Scheme::GG, Scheme::Kuroda}) {
            detail::claim_verdict(
                r, try_decide_bool(translate_sequent(s, scheme, relativized), Logic::IQC, cfg.budget),
                relativized.name() + " / " + to_string(scheme) + " into IQC: " + to_string(s));
            detail::claim_verdict(
                r, try_decide_bool(translate_sequent(s, scheme, plain), Logic::MQC, cfg.budget),
                plain.name() + " / " + to_string(scheme) + " into MQC: " + to_string(s));
          }
        }
        for (int i = 0; i < cfg.sequent_count; ++i) {
          Sequent s = random_derivable_sequent(rng, Logic::IQC, opt, cfg.budget);
          for (Scheme scheme : {Scheme::GG, Scheme::Kuroda})
            detail::claim_verdict(
                r, try_decide_bool(translate_sequent(s, scheme, join_bottom), Logic::MQC, cfg.budget),
                join_bottom.name() + " / " + to_string(scheme) + " into MQC: " + to_string(s));
        }
      });
}

// 6. On the coherent fragment (atoms, bottom, conjunction, disjunction) the
//    intuitionistic prover is classically complete: exhaustively over all
//    pairs of coherent formulas in the configured fragment, truth-table
//    entailment implies IQC-derivability. The shared engine below is the one
//    decide_bool uses for IQC; its memo caches facts of the calculus, so
//    keeping it across queries is sound and makes the sweep cheap.
inline ClaimResult claim_coherent_conservativity(const SuiteConfig& cfg) {
  return detail::run_claim(
      "coherent-conservativity",
      "classical entailment between coherent formulas is always IQC-derivable",
      [&](ClaimResult& r) {
        std::vector<std::string> atoms(
            cfg.atoms.begin(),
            cfg.atoms.begin() + std::min<std::size_t>(cfg.atoms.size(),
                                                      static_cast<std::size_t>(cfg.coherent_atoms)));
        std::vector<Formula> leaves;
        for (const auto& a : atoms) leaves.push_back(Formula::atom(a));
        leaves.push_back(Formula::bottom());

        // all syntactically distinct coherent formulas up to the height bound
        std::vector<Formula> fragment = leaves;
        for (int h = 2; h <= cfg.coherent_height; ++h) {
          std::vector<Formula> next = leaves;
          for (const Formula& l : fragment)
            for (const Formula& g : fragment) {
              next.push_back(Formula::conj(l, g));
              next.push_back(Formula::disj(l, g));
            }
          fragment = std::move(next);
        }

        std::vector<std::map<std::string, bool>> envs;
        int env_count = 1 << atoms.size();
        for (int e = 0; e < env_count; ++e) {
          std::map<std::string, bool> env;
          for (std::size_t k = 0; k < atoms.size(); ++k) env[atoms[k]] = ((e >> k) & 1) != 0;
          envs.push_back(std::move(env));
        }
        std::vector<std::uint32_t> mask(fragment.size(), 0);
        for (std::size_t i = 0; i < fragment.size(); ++i)
          for (int e = 0; e < env_count; ++e)
            if (classical_eval(fragment[i], envs[static_cast<std::size_t>(e)]))
              mask[i] |= 1u << e;

        detail::G4Fast engine(cfg.budget);
        for (std::size_t i = 0; i < fragment.size(); ++i)
          for (std::size_t k = 0; k < fragment.size(); ++k) {
            if ((mask[i] & ~mask[k]) != 0) continue;  // no classical entailment
            std::optional<bool> verdict;
            try {
              verdict = engine.prove({fragment[i]}, fragment[k]);
            } catch (const detail::BudgetHit&) {
            }
            detail::claim_verdict(r, verdict,
                                  to_string(fragment[i]) + " |- " + to_string(fragment[k]));
          }
      });
}

// 7. The inner pass alone, under the join-bottom nucleus, carries IQC
//    theorems into MQC.
inline ClaimResult claim_minimal_translation(const SuiteConfig& cfg) {
  return detail::run_claim(
      "minimal-translation", "the or[bot] inner translation of an IQC theorem is MQC-derivable",
      [&](ClaimResult& r) {
        Rng rng(cfg.seed + 7);
        FormulaGenOptions opt;
        opt.atoms = cfg.atoms;
        opt.max_height = cfg.formula_height;
        Nucleus join_bottom = nucleus_or(Formula::bottom());
        for (int i = 0; i < cfg.sequent_count; ++i) {
          Formula f = random_theorem(rng, Logic::IQC, opt, cfg.budget);
          Formula inner = kuroda_inner(f, join_bottom);
          detail::claim_verdict(r, try_decide_bool(Sequent{{}, inner}, Logic::MQC, cfg.budget),
                                to_string(f));
        }
      });
}

// 8. Double negation commutes with implication over IQC but not over MQC, and
//    the refutation is witnessed by a countermodel the evaluator re-validates.
inline ClaimResult claim_implication_commutation(const SuiteConfig& cfg) {
  return detail::run_claim(
      "implication-commutation", "dneg commutes with implication over IQC, refuted over MQC",
      [&](ClaimResult& r) {
        Nucleus dn = nucleus_dneg();
        detail::claim_check(r, commutes_with_implication(dn, Logic::IQC, cfg.budget).derivable(),
                            "dneg over IQC");

        Verdict v = commutes_with_implication(dn, Logic::MQC, cfg.budget);
        detail::claim_check(r, v.status == ProverStatus::NotDerivable, "dneg over MQC refuted");
        detail::claim_check(r, v.model.has_value() && v.model_root >= 0,
                            "MQC refutation carries a countermodel");
        if (v.model.has_value() && v.model_root >= 0) {
          detail::claim_check(r, v.model->validate().empty(), "countermodel is well-formed");
          auto [phi, psi] = detail::schematic_atoms(dn);
          Formula instance = Formula::iff(dn.apply(Formula::implies(phi, psi)),
                                          Formula::implies(dn.apply(phi), dn.apply(psi)));
          if (!v.falsum_atom.empty())
            instance = replace_bottom(instance, Formula::atom(v.falsum_atom));
          Evaluator ev(*v.model);
          detail::claim_check(r, !ev.forces(v.model_root, instance),
                              "countermodel refutes the commutation instance");
        }
      });
}

// 9. The forcing identities: strong forcing expands the inner translation,
//    the simplified implication clause changes nothing, the gg image tracks
//    dense strong forcing, the dense-below operator is double negation, and
//    the undecorated variant agrees at closure level.
inline ClaimResult claim_strong_forcing(const SuiteConfig& cfg) {
  return detail::run_claim(
      "strong-forcing", "forcing variants match their syntactic expansions on random structures",
      [&](ClaimResult& r) {
        Rng rng(cfg.seed + 9);
        ModelGenOptions mopt;
        mopt.max_worlds = cfg.max_worlds;
        mopt.max_domain = cfg.max_domain;
        SentenceGenOptions sopt;
        sopt.max_height = 5;
        for (int t = 0; t < cfg.model_count; ++t) {
          KripkeModel m = random_model(rng, mopt);
          std::vector<Formula> battery;
          for (int i = 0; i < cfg.sentences_per_model; ++i)
            battery.push_back(random_sentence(rng, sopt));
          ForcingReport rep = check_forcing_identities(m, battery);
          std::string ctx = "structure " + std::to_string(t) + ", ";
          for (const ForcingCheck& c : rep.checks) detail::absorb(r, c, ctx);
        }
      });
}

// 10. Prover and evaluator agree: every countermodel honestly refutes its
//     sequent, and every derivable sequent is forced at every world of every
//     battery structure.
inline ClaimResult claim_prover_cross_check(const SuiteConfig& cfg) {
  return detail::run_claim(
      "prover-cross-check", "IQC verdicts agree with finite-model forcing and refutation",
      [&](ClaimResult& r) {
        Rng rng(cfg.seed + 10);
        ModelGenOptions mopt;
        mopt.max_worlds = cfg.max_worlds;
        mopt.max_domain = 1;
        mopt.preds.clear();
        for (const auto& a : cfg.atoms) mopt.preds[a] = 0;
        std::vector<KripkeModel> battery;
        std::vector<Evaluator> evals;
        evals.reserve(static_cast<std::size_t>(cfg.battery_model_count));
        for (int t = 0; t < cfg.battery_model_count; ++t)
          battery.push_back(random_model(rng, mopt));
        for (const KripkeModel& m : battery) evals.emplace_back(m);

        FormulaGenOptions opt;
        opt.atoms = cfg.atoms;
        opt.max_height = cfg.formula_height;
        for (int i = 0; i < cfg.cross_check_count; ++i) {
          Sequent s = random_sequent(rng, opt);
          Verdict v = decide(s, Logic::IQC, cfg.budget);
          if (v.status == ProverStatus::Derivable) {
            for (std::size_t t = 0; t < battery.size(); ++t) {
              bool ok = true;
              for (int w = 0; w < battery[t].num_worlds(); ++w) {
                bool hyps = true;
                for (const Formula& h : s.hyps) hyps = hyps && evals[t].forces(w, h);
                if (hyps && !evals[t].forces(w, s.conclusion)) ok = false;
              }
              detail::claim_check(r, ok,
                                  "derivable but unforced in structure " + std::to_string(t) +
                                      ": " + to_string(s));
            }
          } else if (v.status == ProverStatus::NotDerivable) {
            bool ok = v.model.has_value() && v.model_root >= 0 && v.model->validate().empty();
            if (ok) {
              Evaluator ev(*v.model);
              for (const Formula& h : s.hyps) ok = ok && ev.forces(v.model_root, h);
              ok = ok && !ev.forces(v.model_root, s.conclusion);
            }
            detail::claim_check(r, ok, "countermodel fails to refute: " + to_string(s));
          } else {
            detail::claim_check(r, false, "no verdict: " + to_string(s));
          }
        }
      });
}

// ---------------------------------------------------------------------------
// Driver

inline const std::vector<std::pair<std::string, ClaimResult (*)(const SuiteConfig&)>>&
suite_claims() {
  static const std::vector<std::pair<std::string, ClaimResult (*)(const SuiteConfig&)>> table = {
      {"nucleus-axioms", claim_nucleus_axioms},
      {"nucleus-lemma", claim_nucleus_lemma},
      {"translation-equivalence", claim_translation_equivalence},
      {"translation-preservation", claim_translation_preservation},
      {"specific-nuclei", claim_specific_nuclei},
      {"coherent-conservativity", claim_coherent_conservativity},
      {"minimal-translation", claim_minimal_translation},
      {"implication-commutation", claim_implication_commutation},
      {"strong-forcing", claim_strong_forcing},
      {"prover-cross-check", claim_prover_cross_check},
  };
  return table;
}

inline std::vector<std::string> suite_claim_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : suite_claims()) ids.push_back(id);
  return ids;
}

// Runs the whole suite, or only the claims named in `only` (in table order).
// Unknown names throw, so a typo cannot silently skip a battery.
inline std::vector<ClaimResult> run_suite(const SuiteConfig& cfg = {},
                                          const std::vector<std::string>& only = {}) {
  for (const auto& name : only) {
    bool known = false;
    for (const auto& [id, fn] : suite_claims()) known = known || id == name;
    if (!known) throw std::runtime_error("unknown claim: " + name);
  }
  std::vector<ClaimResult> out;
  for (const auto& [id, fn] : suite_claims())
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end())
      out.push_back(fn(cfg));
  return out;
}

inline bool suite_passed(const std::vector<ClaimResult>& results) {
  if (results.empty()) return false;
  for (const auto& r : results)
    if (!r.passed()) return false;
  return true;
}

// Stable machine-readable form: no timings, no addresses, identical bytes for
// identical seeds.
inline std::string suite_records(const std::vector<ClaimResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += "claim " + r.id + " status=" + (r.passed() ? "pass" : "fail") +
           " instances=" + std::to_string(r.instances) +
           " failures=" + std::to_string(r.failures) + "\n";
    for (const auto& d : r.details) out += "  fail: " + d + "\n";
  }
  return out;
}

inline std::string to_string(const ClaimResult& r) {
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
  std::string out = (r.passed() ? "[pass] " : "[FAIL] ") + r.id + ": " + r.headline + " (" +
                    std::to_string(r.instances) + " checks, " + timing + ")";
  for (const auto& d : r.details) out += "\n  " + d;
  return out;
}

inline std::string to_string(const std::vector<ClaimResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += to_string(r);
    out += "\n";
  }
  return out;
}

}  // namespace jtrans
