#include <catch2/catch_amalgamated.hpp>

#include "jtrans/nucleus.hpp"
#include "prop_forcing.hpp"

using namespace jtrans;

TEST_CASE("applying a nucleus fills every hole") {
  CHECK(nucleus_or(parse("Q")).apply(parse("P | R")) == parse("(P | R) | Q"));
  CHECK(to_string(nucleus_dneg().apply(parse("P"))) == "~~P");
  CHECK(nucleus_from(parse("A")).apply(parse("P")) == parse("A -> P"));
  CHECK(nucleus_peirce(parse("A")).apply(parse("P & Q")) ==
        parse("(P & Q -> A) -> P & Q"));
  CHECK(nucleus_dneg(parse("A")).apply(parse("_|_")) == parse("(_|_ -> A) -> A"));
  CHECK(nucleus_internal().apply(parse("P")) == parse("[j]P"));

  // duplicated binders are re-separated
  Formula f = nucleus_peirce(parse("A")).apply(parse("exists x. P(x)"));
  CHECK(is_barendregt(f));
  CHECK(alpha_eq(f, parse("((exists x. P(x)) -> A) -> exists y. P(y)")));
}

TEST_CASE("nucleus spec parsing") {
  CHECK(parse_nucleus("dneg").name() == "dneg");
  CHECK(parse_nucleus("dneg").tmpl() == parse("~~HOLE"));
  CHECK(parse_nucleus("dneg[A]").tmpl() == parse("(HOLE -> A) -> A"));
  CHECK(parse_nucleus("or[Q & R]").tmpl() == parse("HOLE | Q & R"));
  CHECK(parse_nucleus("from[P]").tmpl() == parse("P -> HOLE"));
  CHECK(parse_nucleus("peirce[A]").tmpl() == parse("(HOLE -> A) -> HOLE"));
  CHECK(parse_nucleus("internal").is_internal());
  CHECK(parse_nucleus("(HOLE -> R) -> R").tmpl() == parse("(HOLE -> R) -> R"));

  CHECK_THROWS_WITH(parse_nucleus("P -> Q"), Catch::Matchers::ContainsSubstring("no hole"));
  CHECK_THROWS_WITH(parse_nucleus("forall x. HOLE & P(x)"),
                    Catch::Matchers::ContainsSubstring("under a quantifier"));
  CHECK_THROWS_WITH(parse_nucleus("HOLE(x) -> P"),
                    Catch::Matchers::ContainsSubstring("nullary"));
  CHECK_THROWS_WITH(parse_nucleus("[j]HOLE"),
                    Catch::Matchers::ContainsSubstring("modal marker"));
}

TEST_CASE("the built-in families satisfy the nucleus schemes over MQC and IQC") {
  for (const Nucleus& n : builtin_nuclei()) {
    for (Logic logic : {Logic::MQC, Logic::IQC}) {
      NucleusReport rep = check_axioms(n, logic);
      CAPTURE(n.name(), to_string(logic));
      REQUIRE(rep.items.size() == 4);
      for (const auto& item : rep.items) {
        CAPTURE(item.name, item.instance);
        CHECK(item.status == CheckStatus::Proved);
      }
      CHECK(rep.all_proved());
    }
  }
}

TEST_CASE("non-nuclei are refuted with audited countermodels") {
  Nucleus neg = nucleus_from_template("neg-template", parse("~HOLE"));
  NucleusReport rep = check_axioms(neg, Logic::IQC);
  REQUIRE(rep.items[0].name == "inflationary");
  CHECK(rep.items[0].status == CheckStatus::Refuted);
  testutil::audit_countermodel(Sequent{{}, parse(rep.items[0].instance)}, rep.items[0].verdict);
  CHECK(!rep.all_proved());

  Nucleus meet = nucleus_from_template("and-template", parse("HOLE & A"));
  NucleusReport rep2 = check_axioms(meet, Logic::IQC);
  CHECK(rep2.items[0].status == CheckStatus::Refuted);  // phi -> phi & A fails
}

TEST_CASE("derived closure properties hold for the built-ins") {
  for (const Nucleus& n : builtin_nuclei()) {
    for (Logic logic : {Logic::MQC, Logic::IQC}) {
      NucleusReport rep = check_lemma_propositional(n, logic);
      CAPTURE(n.name(), to_string(logic));
      REQUIRE(rep.items.size() == 4);
      for (const auto& item : rep.items) {
        CAPTURE(item.name, item.instance);
        CHECK(item.status == CheckStatus::Proved);
      }
    }
  }
}

TEST_CASE("schematic atoms avoid the nucleus parameter") {
  Nucleus clash = nucleus_or(parse("PHI"));
  NucleusReport rep = check_axioms(clash, Logic::IQC);
  CHECK(rep.all_proved());
  for (const auto& item : rep.items)
    if (item.name == "inflationary")
      CHECK(item.instance.find("PHI'") != std::string::npos);
}

TEST_CASE("implication commutation separates IQC from MQC for dneg") {
  Verdict iqc = commutes_with_implication(nucleus_dneg(), Logic::IQC);
  CHECK(iqc.status == ProverStatus::Derivable);

  Verdict mqc = commutes_with_implication(nucleus_dneg(), Logic::MQC);
  REQUIRE(mqc.status == ProverStatus::NotDerivable);
  auto [phi, psi] = std::pair{parse("PHI"), parse("PSI")};
  Formula instance = Formula::iff(nucleus_dneg().apply(Formula::implies(phi, psi)),
                                  Formula::implies(nucleus_dneg().apply(phi),
                                                   nucleus_dneg().apply(psi)));
  testutil::audit_countermodel(Sequent{{}, instance}, mqc);
}

TEST_CASE("substitution stability") {
  for (const Nucleus& n : builtin_nuclei()) CHECK(substitution_commutes(n));
  CHECK(substitution_commutes(nucleus_internal()));
}

TEST_CASE("internal nucleus defers its scheme checks to the evaluator") {
  NucleusReport rep = check_axioms(nucleus_internal(), Logic::IQC);
  REQUIRE(rep.items.size() == 4);
  CHECK(rep.items[0].status == CheckStatus::SemanticDeferred);
  CHECK(rep.items[1].status == CheckStatus::SemanticDeferred);
  CHECK(rep.items[2].status == CheckStatus::SemanticDeferred);
  CHECK(rep.items[3].status == CheckStatus::Proved);  // substitution is syntactic
  CHECK(!rep.all_proved());
}
