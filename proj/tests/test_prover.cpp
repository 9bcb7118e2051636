#include <catch2/catch_amalgamated.hpp>

#include "jtrans/prover.hpp"
#include "prop_forcing.hpp"

using namespace jtrans;
using testutil::audit_countermodel;
using testutil::forces;

TEST_CASE("intuitionistic staples are derivable") {
  const char* derivable[] = {
      "P -> P",
      "P -> Q -> P",
      "(P -> Q -> R) -> (P -> Q) -> P -> R",
      "~~(P | ~P)",
      "~~(((P -> Q) -> P) -> P)",
      "_|_ -> P",
      "~~~P -> ~P",
      "(P & Q -> R) -> P -> Q -> R",
      "(P -> Q -> R) -> Q & P -> R",
      "(P | Q -> R) -> (P -> R) & (Q -> R)",
  };
  for (const char* s : derivable) {
    CAPTURE(s);
    Verdict v = decide(parse(s), Logic::IQC);
    CHECK(v.status == ProverStatus::Derivable);
    REQUIRE(!v.proof.empty());
    CHECK(v.proof.front().find("|-") != std::string::npos);
  }
  CHECK(decide_bool(parse_sequent("P | Q; ~P |- Q"), Logic::IQC));
  CHECK(decide_bool(parse_sequent("P -> Q; Q -> R; P |- R"), Logic::IQC));
}

TEST_CASE("classical-only principles are rejected with countermodels") {
  struct Case {
    const char* text;
    int worlds;
  } cases[] = {
      {"P | ~P", 3},
      {"~~P -> P", 2},
      {"((P -> Q) -> P) -> P", 2},
      {"(P -> Q) | (Q -> P)", 3},
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    Sequent s = parse_sequent(c.text);
    Verdict v = decide(s, Logic::IQC);
    audit_countermodel(s, v);
    CHECK(v.model->num_worlds() == c.worlds);
    CHECK(decide_bool(parse(c.text), Logic::CQC));  // classically fine
  }
  // weak excluded middle, the hard De Morgan direction, and a vacuous-forcing
  // trap whose hypotheses both hold vacuously in a two-world refutation
  for (const char* t :
       {"~P | ~~P", "~(P & Q) -> ~P | ~Q", "((P -> Q) -> Q) -> (Q -> P) -> P"}) {
    CAPTURE(t);
    Sequent s = parse_sequent(t);
    audit_countermodel(s, decide(s, Logic::IQC));
    CHECK(decide_bool(parse(t), Logic::CQC));
  }
}

TEST_CASE("minimal logic lacks absurdity rules") {
  CHECK(!decide_bool(parse("_|_ -> P"), Logic::MQC));
  CHECK(decide_bool(parse("_|_ -> P"), Logic::IQC));
  CHECK(!decide_bool(parse_sequent("~P; P |- Q"), Logic::MQC));
  CHECK(decide_bool(parse_sequent("~P; P |- Q"), Logic::IQC));
  CHECK(!decide_bool(parse_sequent("_|_ |- P"), Logic::MQC));
  CHECK(decide_bool(parse_sequent("_|_ |- _|_"), Logic::MQC));

  // negative fragment facts that survive the absence of absurdity
  CHECK(decide_bool(parse("~~(P | ~P)"), Logic::MQC));
  CHECK(decide_bool(parse("(P -> Q) -> ~Q -> ~P"), Logic::MQC));
  CHECK(decide_bool(parse("P -> ~~P"), Logic::MQC));
  CHECK(decide_bool(parse("~~~P -> ~P"), Logic::MQC));

  // bottom is an atom: countermodels may force it
  Sequent s = parse_sequent("_|_ |- P");
  Verdict v = decide(s, Logic::MQC);
  CHECK(v.falsum_atom == "FALSUM");
  audit_countermodel(s, v);

  // the stand-in name steps aside when the input already uses it
  Verdict w = decide(Sequent{{parse("FALSUM")}, parse("_|_")}, Logic::MQC);
  CHECK(w.falsum_atom == "FALSUM'");
  CHECK(w.status == ProverStatus::NotDerivable);
}

TEST_CASE("classical truth tables") {
  CHECK(decide_bool(parse("P | ~P"), Logic::CQC));
  CHECK(decide_bool(parse("((P -> Q) -> P) -> P"), Logic::CQC));
  CHECK(decide_bool(parse("~~P -> P"), Logic::CQC));
  Verdict v = decide(parse_sequent("P -> Q |- Q -> P"), Logic::CQC);
  REQUIRE(v.status == ProverStatus::NotDerivable);
  REQUIRE(v.assignment.has_value());
  const auto& env = *v.assignment;
  CHECK(classical_eval(parse("P -> Q"), env));
  CHECK(!classical_eval(parse("Q -> P"), env));
}

TEST_CASE("fragment and budget guards") {
  CHECK(decide(parse("forall x. P(x)"), Logic::IQC).status == ProverStatus::OutOfFragment);
  CHECK(decide(parse("P(x)"), Logic::IQC).status == ProverStatus::OutOfFragment);
  CHECK(decide(parse("[j]P"), Logic::IQC).status == ProverStatus::OutOfFragment);
  CHECK(decide(parse("P & Q"), Logic::IQC).status == ProverStatus::NotDerivable);

  Verdict v = decide(parse("~~(P | ~P)"), Logic::IQC, 5);
  CHECK(v.status == ProverStatus::BudgetExceeded);
  CHECK_THROWS_AS(decide_bool(parse("~~(P | ~P)"), Logic::IQC, 5), std::runtime_error);
}

TEST_CASE("verdicts are deterministic") {
  Sequent s = parse_sequent("~(P & Q) |- ~P | ~Q");
  Verdict a = decide(s, Logic::IQC);
  Verdict b = decide(s, Logic::IQC);
  REQUIRE(a.status == ProverStatus::NotDerivable);
  CHECK(to_string(*a.model) == to_string(*b.model));
  CHECK(a.model_root == b.model_root);
  Verdict c = decide(parse("~~(P | ~P)"), Logic::IQC);
  Verdict d = decide(parse("~~(P | ~P)"), Logic::IQC);
  CHECK(c.proof == d.proof);
}

TEST_CASE("fast and detailed engines agree") {
  // decide() keeps proof traces and countermodels; decide_bool() runs an
  // interned, memoized engine. Same rules, different plumbing — so pin the
  // verdicts against each other across a broad random sample.
  Rng rng(5081);
  FormulaGenOptions opt;
  opt.atoms = {"P", "Q", "R", "S"};
  opt.max_height = 6;
  for (int i = 0; i < 400; ++i) {
    Sequent s = random_sequent(rng, opt);
    for (Logic logic : {Logic::MQC, Logic::IQC}) {
      bool detailed = decide(s, logic).status == ProverStatus::Derivable;
      bool fast = decide_bool(s, logic);
      CAPTURE(to_string(s), to_string(logic));
      CHECK(detailed == fast);
    }
  }
}

TEST_CASE("every refuted random sequent gets a sound countermodel") {
  Rng rng(2026);
  FormulaGenOptions opt;
  opt.atoms = {"P", "Q", "R"};
  opt.max_height = 5;
  int refuted_iqc = 0, refuted_mqc = 0;
  for (int i = 0; i < 300; ++i) {
    Sequent s = random_sequent(rng, opt);
    for (Logic logic : {Logic::IQC, Logic::MQC}) {
      Verdict v = decide(s, logic);
      if (v.status == ProverStatus::NotDerivable) {
        audit_countermodel(s, v);
        (logic == Logic::IQC ? refuted_iqc : refuted_mqc)++;
      }
    }
  }
  CHECK(refuted_iqc > 100);  // the battery must actually exercise the path
  CHECK(refuted_mqc > 100);
}

TEST_CASE("derivability respects the MQC <= IQC <= CQC hierarchy") {
  Rng rng(7);
  FormulaGenOptions opt;
  opt.atoms = {"P", "Q", "R"};
  opt.max_height = 5;
  for (int i = 0; i < 200; ++i) {
    Sequent s = random_sequent(rng, opt);
    bool mqc = decide_bool(s, Logic::MQC);
    bool iqc = decide_bool(s, Logic::IQC);
    bool cqc = decide_bool(s, Logic::CQC);
    CAPTURE(to_string(s), mqc, iqc, cqc);
    CHECK((!mqc || iqc));
    CHECK((!iqc || cqc));
  }
}

TEST_CASE("Glivenko: classical derivability equals intuitionistic double negation") {
  Rng rng(11);
  FormulaGenOptions opt;
  opt.atoms = {"P", "Q", "R"};
  opt.max_height = 5;
  for (int i = 0; i < 200; ++i) {
    Formula f = random_propositional(rng, opt);
    bool cqc = decide_bool(f, Logic::CQC);
    bool iqc_nn = decide_bool(Formula::neg(Formula::neg(f)), Logic::IQC);
    CAPTURE(to_string(f), cqc, iqc_nn);
    CHECK(cqc == iqc_nn);
  }
}

TEST_CASE("equivalence checking") {
  CHECK(check_equiv(parse("P & Q"), parse("Q & P"), Logic::IQC).derivable());
  CHECK(check_equiv(parse("~~~P"), parse("~P"), Logic::MQC).derivable());
  CHECK(!check_equiv(parse("~~P"), parse("P"), Logic::IQC).derivable());
  CHECK(check_equiv(parse("~~P"), parse("P"), Logic::CQC).derivable());
}

TEST_CASE("random derivable material generators") {
  Rng rng(2026);
  FormulaGenOptions opt;
  opt.atoms = {"P", "Q", "R"};
  opt.max_height = 4;
  for (int i = 0; i < 20; ++i) {
    Sequent s = random_derivable_sequent(rng, Logic::IQC, opt);
    CHECK(decide_bool(s, Logic::IQC));
  }
  for (int i = 0; i < 10; ++i) {
    Formula f = random_theorem(rng, Logic::IQC, opt);
    CHECK(decide_bool(f, Logic::IQC));
    CHECK(decide_bool(f, Logic::CQC));
  }
  for (int i = 0; i < 10; ++i) {
    Formula f = random_theorem(rng, Logic::MQC, opt);
    CHECK(decide_bool(f, Logic::MQC));
    CHECK(decide_bool(f, Logic::IQC));
  }
}
