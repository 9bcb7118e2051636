#include <catch2/catch_amalgamated.hpp>

#include "jtrans/gen.hpp"
#include "jtrans/kripke.hpp"
#include "jtrans/prover.hpp"
#include "prop_forcing.hpp"

using namespace jtrans;

namespace {

const char* kChain2 =
    "worlds: p q\n"
    "order: q <= p\n"
    "preds: P/0 Q/0\n"
    "world q: P\n";

}  // namespace

TEST_CASE("plain forcing on a two-world chain") {
  KripkeModel m = load_model(kChain2);
  CHECK(!eval_forces(m, "p", parse("P")));
  CHECK(eval_forces(m, "q", parse("P")));
  CHECK(eval_forces(m, "p", parse("~~P")));
  CHECK(!eval_forces(m, "p", parse("_|_")));
  CHECK(!eval_forces(m, "q", parse("_|_")));
  CHECK(!eval_forces(m, "p", parse("P | ~P")));
  CHECK(eval_forces(m, "q", parse("P | ~P")));
  CHECK(eval_forces(m, "p", parse("Q -> P")));  // Q holds nowhere
  CHECK(!eval_forces(m, "p", parse("~P")));
  CHECK(!eval_forces(m, "q", parse("~P")));
}

TEST_CASE("quantifier clauses with a two-element domain") {
  KripkeModel m = load_model(
      "worlds: p q\n"
      "order: q <= p\n"
      "domain: a b\n"
      "preds: P/1\n"
      "world p: P(a)\n"
      "world q: P(a) P(b)\n");
  CHECK(eval_forces(m, "p", parse("exists x. P(x)")));
  CHECK(!eval_forces(m, "p", parse("forall x. P(x)")));
  CHECK(eval_forces(m, "q", parse("forall x. P(x)")));
  CHECK(eval_forces(m, "p", parse("~~(forall x. P(x))")));
  // a free variable naming a domain element denotes it
  CHECK(eval_forces(m, "p", parse("P(a)")));
  CHECK(!eval_forces(m, "p", parse("P(b)")));
  CHECK(eval_forces(m, "q", parse("P(b)")));
  // the strong universal clause quantifies densely below, so it already
  // holds at the top even though plain forcing fails there
  CHECK(eval_strong(m, "p", parse("forall x. P(x)")));
}

TEST_CASE("dense-below operator on small posets") {
  KripkeModel chain = load_model(kChain2);
  CHECK(eval_internal_j(chain, "p", parse("P")));
  CHECK(eval_internal_j(chain, "q", parse("P")));
  CHECK(!eval_internal_j(chain, "p", parse("Q")));
  CHECK(!eval_internal_j(chain, "p", parse("_|_")));
  // the modal marker in a formula means exactly the dense-below operator
  CHECK(eval_forces(chain, "p", parse("[j]P")));
  CHECK(!eval_forces(chain, "p", parse("[j]Q")));

  // a fork: P on one branch only is not dense below the top
  KripkeModel fork = load_model(
      "worlds: t a b\n"
      "order: a <= t\n"
      "order: b <= t\n"
      "preds: P/0\n"
      "world a: P\n");
  CHECK(!eval_internal_j(fork, "t", parse("P")));
  CHECK(eval_internal_j(fork, "a", parse("P")));
  CHECK(!eval_internal_j(fork, "b", parse("P")));
  // forcing a formula makes it dense
  Evaluator ev(fork);
  Formula p = parse("P");
  for (int w = 0; w < fork.num_worlds(); ++w)
    if (ev.forces(w, p)) CHECK(ev.forces_dense(w, p));
}

TEST_CASE("strong forcing hand checks") {
  KripkeModel m = load_model(kChain2);
  // atoms read the valuation directly
  CHECK(eval_strong(m, "q", parse("P")));
  CHECK(!eval_strong(m, "p", parse("P")));
  CHECK(!eval_strong(m, "p", parse("_|_")));
  // negations: no world forces bottom densely, so ~P fails everywhere here
  // and ~~P holds everywhere
  CHECK(!eval_strong(m, "p", parse("~P")));
  CHECK(!eval_strong(m, "q", parse("~P")));
  CHECK(eval_strong(m, "p", parse("~~P")));
  CHECK(eval_strong(m, "q", parse("~~P")));
  // disjunction stays pointwise
  CHECK(eval_strong(m, "q", parse("P | Q")));
  CHECK(!eval_strong(m, "p", parse("P | Q")));
}

TEST_CASE("undecorated implication clause differs pointwise but not densely") {
  KripkeModel m = load_model(kChain2);
  Formula f = parse("(Q -> Q) -> P");
  Evaluator ev(m);
  int p = m.world_index("p"), q = m.world_index("q");
  CHECK(ev.strong(p, f, ForcingKind::Strong));
  CHECK(!ev.strong(p, f, ForcingKind::CohenStrong));  // would need P at the top itself
  CHECK(ev.strong(q, f, ForcingKind::CohenStrong));
  for (int w : {p, q})
    CHECK(ev.strong_dense(w, f, ForcingKind::CohenStrong) ==
          ev.strong_dense(w, f, ForcingKind::Strong));
}

TEST_CASE("forcing identities on hand-built models") {
  std::vector<Formula> battery = {parse("P"),
                                  parse("~P"),
                                  parse("~~P"),
                                  parse("P -> Q"),
                                  parse("P | Q"),
                                  parse("P & ~Q"),
                                  parse("~(P & Q) -> ~P | ~Q")};

  // a single world collapses every operator to truth-table evaluation
  KripkeModel one = load_model("worlds: w\npreds: P/0 Q/0\nworld w: P\n");
  ForcingReport r1 = check_forcing_identities(one, battery);
  CAPTURE(to_string(r1));
  CHECK(r1.all_passed());
  CHECK(r1.checks.size() == 6);

  // three-world chain with P at the bottom
  KripkeModel chain3 = load_model(
      "worlds: p q r\n"
      "order: q <= p\n"
      "order: r <= q\n"
      "preds: P/0 Q/0\n"
      "world r: P\n");
  ForcingReport r2 = check_forcing_identities(chain3, battery);
  CAPTURE(to_string(r2));
  CHECK(r2.all_passed());
  for (const auto& c : r2.checks)
    CHECK(c.instances == 3 * static_cast<long long>(battery.size()));
}

TEST_CASE("forcing identities on random models") {
  Rng rng(919);
  ModelGenOptions mopt;
  SentenceGenOptions sopt;
  sopt.max_height = 5;
  long long instances = 0;
  for (int t = 0; t < 12; ++t) {
    KripkeModel m = random_model(rng, mopt);
    std::vector<Formula> battery;
    for (int i = 0; i < 30; ++i) battery.push_back(random_sentence(rng, sopt));
    ForcingReport rep = check_forcing_identities(m, battery);
    CAPTURE(to_string(m));
    for (const auto& c : rep.checks) {
      CAPTURE(c.name, c.violations);
      CHECK(c.failures == 0);
    }
    instances += rep.at("strong-matches-inner-expansion").instances;
  }
  CHECK(instances >= 500);
}

TEST_CASE("dense-below operator satisfies the nucleus laws semantically") {
  Rng rng(2718);
  ModelGenOptions mopt;
  SentenceGenOptions sopt;
  sopt.max_height = 4;
  SentenceGenOptions oopt = sopt;
  oopt.free_vars = {"x"};
  int open_with_x = 0;
  for (int t = 0; t < 10; ++t) {
    KripkeModel m = random_model(rng, mopt);
    std::vector<Formula> sentences, open;
    for (int i = 0; i < 8; ++i) sentences.push_back(random_sentence(rng, sopt));
    for (int i = 0; i < 6; ++i) {
      Formula f = random_sentence(rng, oopt);
      if (free_vars(f).count("x")) ++open_with_x;
      open.push_back(std::move(f));
    }
    ForcingReport rep = check_internal_nucleus(m, sentences, open);
    CAPTURE(to_string(m));
    REQUIRE(rep.checks.size() == 10);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name, c.violations);
      CHECK(c.failures == 0);
    }
  }
  CHECK(open_with_x > 15);  // the open battery genuinely uses its free variable
}

TEST_CASE("evaluator agrees with the independent propositional forcing") {
  Rng rng(31);
  FormulaGenOptions fopt;
  fopt.atoms = {"P", "Q", "R"};
  fopt.max_height = 5;
  ModelGenOptions mopt;
  mopt.preds = {{"P", 0}, {"Q", 0}, {"R", 0}};
  for (int t = 0; t < 10; ++t) {
    KripkeModel m = random_model(rng, mopt);
    Evaluator ev(m);
    for (int i = 0; i < 40; ++i) {
      Formula f = random_propositional(rng, fopt);
      for (int p = 0; p < m.num_worlds(); ++p) {
        CAPTURE(to_string(m), m.worlds[static_cast<std::size_t>(p)], to_string(f));
        CHECK(ev.forces(p, f) == testutil::forces(m, p, f));
      }
    }
  }
}

TEST_CASE("plain forcing is monotone on random models") {
  Rng rng(2026);
  ModelGenOptions mopt;
  SentenceGenOptions sopt;
  sopt.max_height = 4;
  SentenceGenOptions mod_opt = sopt;
  mod_opt.with_modal = true;
  int instances = 0;
  for (int t = 0; t < 15; ++t) {
    KripkeModel m = random_model(rng, mopt);
    Evaluator ev(m);
    for (int i = 0; i < 25; ++i) {
      Formula f = i % 2 == 0 ? random_sentence(rng, sopt) : random_sentence(rng, mod_opt);
      for (int p = 0; p < m.num_worlds(); ++p) {
        if (!ev.forces(p, f)) continue;
        for (int q = 0; q < m.num_worlds(); ++q)
          if (q != p && m.below(q, p)) {
            CAPTURE(to_string(m), m.worlds[static_cast<std::size_t>(p)],
                    m.worlds[static_cast<std::size_t>(q)], to_string(f));
            REQUIRE(ev.forces(q, f));
            ++instances;
          }
      }
    }
  }
  CHECK(instances > 200);
}

TEST_CASE("prover countermodels satisfy the evaluator") {
  Rng rng(47);
  FormulaGenOptions opt;
  opt.atoms = {"P", "Q", "R"};
  opt.max_height = 5;
  int refuted = 0;
  for (int i = 0; i < 150; ++i) {
    Sequent s = random_sequent(rng, opt);
    for (Logic logic : {Logic::IQC, Logic::MQC}) {
      Verdict v = decide(s, logic);
      if (v.status != ProverStatus::NotDerivable) continue;
      ++refuted;
      auto adjust = [&](const Formula& f) {
        return v.falsum_atom.empty() ? f : replace_bottom(f, Formula::atom(v.falsum_atom));
      };
      Evaluator ev(*v.model);
      CAPTURE(to_string(s), to_string(logic), to_string(*v.model));
      for (const auto& h : s.hyps) CHECK(ev.forces(v.model_root, adjust(h)));
      CHECK(!ev.forces(v.model_root, adjust(s.conclusion)));
    }
  }
  CHECK(refuted > 100);
}

TEST_CASE("derivable sequents are forced everywhere") {
  Rng rng(53);
  FormulaGenOptions opt;
  opt.atoms = {"P", "Q", "R"};
  opt.max_height = 4;
  ModelGenOptions mopt;
  mopt.preds = {{"P", 0}, {"Q", 0}, {"R", 0}};
  std::vector<KripkeModel> models;
  for (int t = 0; t < 8; ++t) models.push_back(random_model(rng, mopt));
  std::vector<Evaluator> evs;
  evs.reserve(models.size());
  for (const auto& m : models) evs.emplace_back(m);
  int derivable = 0;
  for (int i = 0; i < 400 && derivable < 40; ++i) {
    Sequent s = random_sequent(rng, opt);
    if (!decide_bool(s, Logic::IQC)) continue;
    ++derivable;
    for (std::size_t k = 0; k < models.size(); ++k) {
      const KripkeModel& m = models[k];
      for (int p = 0; p < m.num_worlds(); ++p) {
        bool hyps_ok = true;
        for (const auto& h : s.hyps) hyps_ok = hyps_ok && evs[k].forces(p, h);
        if (!hyps_ok) continue;
        CAPTURE(to_string(s), to_string(m), m.worlds[static_cast<std::size_t>(p)]);
        CHECK(evs[k].forces(p, s.conclusion));
      }
    }
  }
  CHECK(derivable >= 40);
}

TEST_CASE("the commutation failure model is re-validated by the evaluator") {
  Nucleus j = nucleus_dneg();
  Verdict v = commutes_with_implication(j, Logic::MQC);
  REQUIRE(v.status == ProverStatus::NotDerivable);
  REQUIRE(v.model.has_value());
  auto [phi, psi] = detail::schematic_atoms(j);
  Formula inst = Formula::iff(j.apply(Formula::implies(phi, psi)),
                              Formula::implies(j.apply(phi), j.apply(psi)));
  Formula work = replace_bottom(inst, Formula::atom(v.falsum_atom));
  Evaluator ev(*v.model);
  CAPTURE(to_string(*v.model), to_string(work));
  CHECK(!ev.forces(v.model_root, work));
}

TEST_CASE("evaluator reuse is consistent with fresh evaluation") {
  Rng rng(8);
  ModelGenOptions mopt;
  KripkeModel m = random_model(rng, mopt);
  SentenceGenOptions sopt;
  sopt.max_height = 4;
  sopt.with_modal = true;
  Evaluator ev(m);
  for (int i = 0; i < 30; ++i) {
    Formula f = random_sentence(rng, sopt);
    for (int p = 0; p < m.num_worlds(); ++p) {
      bool first = ev.forces(p, f);
      CHECK(ev.forces(p, f) == first);  // memoized path
      CHECK(eval_forces(m, m.worlds[static_cast<std::size_t>(p)], f) == first);
    }
  }
}

TEST_CASE("evaluator rejects out-of-signature input") {
  KripkeModel m = load_model(kChain2);
  CHECK_THROWS_AS(eval_forces(m, "p", parse("S")), std::runtime_error);     // unknown predicate
  CHECK_THROWS_AS(eval_forces(m, "p", parse("P(a)")), std::runtime_error);  // arity mismatch
  CHECK_THROWS_AS(eval_forces(m, "nope", parse("P")), std::runtime_error);  // unknown world
  CHECK_THROWS_AS(eval_strong(m, "p", parse("[j]P")), std::runtime_error);  // marker has no clause
  CHECK_THROWS_AS(check_forcing_identities(m, {parse("[j]P")}), std::runtime_error);

  KripkeModel md = load_model("worlds: w\ndomain: a\npreds: P/1\nworld w: P(a)\n");
  CHECK(eval_forces(md, "w", parse("P(a)")));
  CHECK_THROWS_AS(eval_forces(md, "w", parse("P(y)")), std::runtime_error);  // unbound variable
  CHECK_THROWS_AS(check_internal_nucleus(md, {parse("P(y)")}), std::runtime_error);
  CHECK_THROWS_AS(check_internal_nucleus(md, {}, {parse("P(y)")}, "x"), std::runtime_error);
}
