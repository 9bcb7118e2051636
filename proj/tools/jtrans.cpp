// jtrans: nucleus-parametric translations, decision procedures for minimal,
// intuitionistic, and classical propositional logic, forcing over finite
// Kripke structures, and the full verification suite — one subcommand-style
// binary so every result in the library is reproducible from a shell.
//
// Exit codes: 0 success / all checks pass; 1 logical failure (not derivable,
// refuted check, eval came back false); 2 usage or parse error; 3 a
// precondition gate refused the request (classic-kuroda without certified
// commutation, a model beyond the evaluator caps, input outside the decidable
// fragment).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jtrans/formula.hpp"
#include "jtrans/kripke.hpp"
#include "jtrans/model.hpp"
#include "jtrans/nucleus.hpp"
#include "jtrans/prover.hpp"
#include "jtrans/suite.hpp"
#include "jtrans/translate.hpp"

namespace {

using namespace jtrans;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kGate = 3;

// Evaluator caps: exhaustive semantics stays instant at desk scale.
constexpr int kMaxWorlds = 8;
constexpr std::size_t kMaxDomain = 4;

int usage_error(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return kUsage;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string part = comma == std::string::npos ? csv.substr(start)
                                                  : csv.substr(start, comma - start);
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    while (!part.empty() && part.back() == ' ') part.pop_back();
    if (!part.empty()) out.push_back(part);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// translate

struct TranslateArgs {
  std::string scheme;
  std::string nucleus;
  std::string logic = "iqc";
  std::string formula;
  std::uint64_t budget = kDefaultBudget;
};

int run_translate(const TranslateArgs& a) {
  auto scheme = parse_scheme(a.scheme);
  if (!scheme) return usage_error("unknown scheme: " + a.scheme);
  auto logic = parse_logic(a.logic);
  if (!logic) return usage_error("unknown logic: " + a.logic);
  Nucleus j = parse_nucleus(a.nucleus);
  Formula f = parse(a.formula);

  if (*scheme == Scheme::ClassicKuroda) {
    Verdict v = commutes_with_implication(j, *logic, a.budget);
    if (!v.derivable()) {
      std::fprintf(stderr,
                   "classic-kuroda refused: %s does not certifiably commute with implication "
                   "over %s%s%s; use --scheme kuroda instead\n",
                   j.name().c_str(), to_string(*logic), v.note.empty() ? "" : " — ",
                   v.note.c_str());
      return kGate;
    }
  }
  std::printf("%s\n", to_string(translate(f, *scheme, j)).c_str());
  return kPass;
}

// ---------------------------------------------------------------------------
// prove

struct ProveArgs {
  std::string logic = "iqc";
  std::string sequent;
  std::uint64_t budget = kDefaultBudget;
  bool witness = false;
  bool countermodel = false;
};

int run_prove(const ProveArgs& a) {
  auto logic = parse_logic(a.logic);
  if (!logic) return usage_error("unknown logic: " + a.logic);
  Sequent s = parse_sequent(a.sequent);
  Verdict v = decide(s, *logic, a.budget);
  switch (v.status) {
    case ProverStatus::Derivable:
      std::printf("derivable\n");
      if (a.witness)
        for (const auto& line : v.proof) std::printf("  %s\n", line.c_str());
      return kPass;
    case ProverStatus::NotDerivable:
      std::printf("not derivable\n");
      if (a.countermodel) {
        if (v.model.has_value()) {
          std::printf("# countermodel refuting the sequent at world %s\n",
                      v.model->worlds[static_cast<std::size_t>(v.model_root)].c_str());
          if (!v.falsum_atom.empty())
            std::printf("# bottom is read as the ordinary atom %s here\n",
                        v.falsum_atom.c_str());
          std::fputs(to_string(*v.model).c_str(), stdout);
        } else if (v.assignment.has_value()) {
          std::string line = "# falsifying assignment:";
          for (const auto& [atom, val] : *v.assignment)
            line += " " + atom + "=" + (val ? "true" : "false");
          std::printf("%s\n", line.c_str());
        }
      }
      return kFail;
    case ProverStatus::BudgetExceeded:
      std::fprintf(stderr, "no verdict: node budget (%llu) exhausted\n",
                   static_cast<unsigned long long>(a.budget));
      return kFail;
    case ProverStatus::OutOfFragment:
      std::fprintf(stderr, "refused: %s\n",
                   v.note.empty() ? "input outside the decidable fragment" : v.note.c_str());
      return kGate;
  }
  return kUsage;
}

// ---------------------------------------------------------------------------
// kripke

struct KripkeArgs {
  std::string model_path;
  std::string check;
  std::string battery_path;
  std::string eval;
};

std::vector<Formula> load_battery(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open battery file: " + path);
  std::vector<Formula> battery;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line) blank = blank && (c == ' ' || c == '\t' || c == '\r');
    if (!blank) battery.push_back(parse(line));
  }
  if (battery.empty()) throw std::runtime_error("battery file has no formulas: " + path);
  return battery;
}

int run_kripke(const KripkeArgs& a) {
  if (a.check.empty() == a.eval.empty())
    return usage_error("kripke needs exactly one of --check or --eval");
  KripkeModel m = load_model_file(a.model_path);
  if (m.num_worlds() > kMaxWorlds || m.domain.size() > kMaxDomain) {
    std::fprintf(stderr,
                 "refused: model has %d worlds and %zu domain elements; the exhaustive "
                 "evaluator is capped at %d worlds and domain %zu\n",
                 m.num_worlds(), m.domain.size(), kMaxWorlds, kMaxDomain);
    return kGate;
  }

  if (!a.check.empty()) {
    if (a.battery_path.empty()) return usage_error("--check needs --battery <formula file>");
    std::vector<Formula> battery = load_battery(a.battery_path);
    ForcingReport rep;
    if (a.check == "strong-forcing") {
      rep = check_forcing_identities(m, battery);
    } else if (a.check == "internal-nucleus") {
      rep = check_internal_nucleus(m, battery);
    } else {
      return usage_error("unknown check: " + a.check +
                         " (expected strong-forcing or internal-nucleus)");
    }
    std::fputs(to_string(rep).c_str(), stdout);
    return rep.all_passed() ? kPass : kFail;
  }

  // "<world> |- <formula>" for plain forcing, "<world> |-s <formula>" for
  // strong forcing.
  std::size_t turnstile = a.eval.find("|-");
  if (turnstile == std::string::npos)
    return usage_error("--eval wants \"<world> |- <formula>\" or \"<world> |-s <formula>\"");
  std::string world = a.eval.substr(0, turnstile);
  while (!world.empty() && (world.back() == ' ' || world.back() == '\t')) world.pop_back();
  while (!world.empty() && (world.front() == ' ' || world.front() == '\t'))
    world.erase(world.begin());
  std::size_t rest = turnstile + 2;
  bool strong = rest < a.eval.size() && a.eval[rest] == 's';
  if (strong) ++rest;
  Formula f = parse(a.eval.substr(rest));
  bool result = strong ? eval_strong(m, world, f) : eval_forces(m, world, f);
  std::printf("%s\n", result ? "true" : "false");
  return result ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// nucleus-check

struct NucleusCheckArgs {
  std::string nucleus;
  std::string logic;  // empty: both mqc and iqc
  std::uint64_t budget = kDefaultBudget;
};

bool print_report(const NucleusReport& rep) {
  bool ok = true;
  for (const auto& item : rep.items) {
    std::printf("  %-24s %s\n", item.name.c_str(), to_string(item.status));
    if (item.status == CheckStatus::Refuted || item.status == CheckStatus::BudgetExceeded) {
      ok = false;
      std::printf("    instance: %s\n", item.instance.c_str());
    }
    if (item.status == CheckStatus::SemanticDeferred)
      std::printf("    %s\n", item.verdict.note.c_str());
  }
  return ok;
}

int run_nucleus_check(const NucleusCheckArgs& a) {
  Nucleus j = parse_nucleus(a.nucleus);
  std::vector<Logic> logics;
  if (a.logic.empty()) {
    logics = {Logic::MQC, Logic::IQC};
  } else {
    auto logic = parse_logic(a.logic);
    if (!logic) return usage_error("unknown logic: " + a.logic);
    logics = {*logic};
  }
  bool all_ok = true;
  for (Logic logic : logics) {
    std::printf("nucleus %s over %s\n", j.name().c_str(), to_string(logic));
    bool ok = print_report(check_axioms(j, logic, a.budget));
    ok = print_report(check_lemma_propositional(j, logic, a.budget)) && ok;
    Verdict c = commutes_with_implication(j, logic, a.budget);
    std::printf("  %-24s %s (informational)\n", "implication-commutation",
                c.derivable()            ? "yes"
                : c.status == ProverStatus::NotDerivable ? "no"
                                                         : "undetermined");
    all_ok = all_ok && ok;
  }
  return all_ok ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// suite

struct SuiteArgs {
  SuiteConfig cfg;
  std::string claims;
  std::string format = "human";
  bool list = false;
};

int run_suite_cmd(const SuiteArgs& a) {
  if (a.list) {
    for (const auto& id : suite_claim_ids()) std::printf("%s\n", id.c_str());
    return kPass;
  }
  if (a.format != "human" && a.format != "records")
    return usage_error("unknown format: " + a.format + " (expected human or records)");

  SuiteConfig cfg = a.cfg;
  if (const char* env = std::getenv("NUCLEUS_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      return usage_error(std::string("NUCLEUS_SEED is not a number: ") + env);
    cfg.seed = v;
  }
  if (cfg.formula_count < 0 || cfg.sequent_count < 0 || cfg.cross_check_count < 0 ||
      cfg.model_count < 0 || cfg.max_worlds < 1 || cfg.max_domain < 1 ||
      cfg.sentences_per_model < 0 || cfg.formula_height < 1 || cfg.coherent_height < 1)
    return usage_error("suite sizes must be positive");

  std::vector<ClaimResult> results = run_suite(cfg, split_csv(a.claims));
  if (a.format == "records") {
    std::printf("# jtrans suite records v1 seed=%llu\n",
                static_cast<unsigned long long>(cfg.seed));
    std::fputs(suite_records(results).c_str(), stdout);
  } else {
    std::fputs(to_string(results).c_str(), stdout);
    double total = 0.0;
    long long checks = 0;
    for (const auto& r : results) {
      total += r.seconds;
      checks += r.instances;
    }
    std::printf("suite: %s (%zu claims, %lld checks, seed %llu, %.2fs)\n",
                suite_passed(results) ? "PASS" : "FAIL", results.size(), checks,
                static_cast<unsigned long long>(cfg.seed), total);
  }
  return suite_passed(results) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nucleus-parametric translations, propositional decision procedures, and "
      "forcing over finite Kripke structures"};
  app.require_subcommand(1);

  TranslateArgs targs;
  CLI::App* t = app.add_subcommand("translate", "translate a formula under a nucleus");
  t->add_option("--scheme", targs.scheme, "gg | kuroda | kuroda-inner | classic-kuroda")
      ->required();
  t->add_option("--nucleus", targs.nucleus,
                "dneg | dneg[F] | or[F] | from[F] | peirce[F] | internal | a template over HOLE")
      ->required();
  t->add_option("--logic", targs.logic, "gate logic for classic-kuroda (default iqc)");
  t->add_option("--budget", targs.budget, "prover node budget for the gate");
  t->add_option("formula", targs.formula, "the formula to translate")->required();

  ProveArgs pargs;
  CLI::App* p = app.add_subcommand("prove", "decide a sequent");
  p->add_option("--logic", pargs.logic, "mqc | iqc | cqc (default iqc)");
  p->add_option("--budget", pargs.budget, "prover node budget");
  p->add_flag("--witness", pargs.witness, "print the derivation when derivable");
  p->add_flag("--countermodel", pargs.countermodel,
              "print a refuting structure when not derivable");
  p->add_option("sequent", pargs.sequent, "\"h1; h2 |- c\" or a bare formula")->required();

  KripkeArgs kargs;
  CLI::App* k = app.add_subcommand("kripke", "evaluate forcing over a finite structure");
  k->add_option("--model", kargs.model_path, "model file")->required();
  k->add_option("--check", kargs.check, "strong-forcing | internal-nucleus");
  k->add_option("--battery", kargs.battery_path, "file of formulas, one per line");
  k->add_option("--eval", kargs.eval, "\"<world> |- <formula>\" or \"<world> |-s <formula>\"");

  NucleusCheckArgs nargs;
  CLI::App* n = app.add_subcommand("nucleus-check", "verify the nucleus laws for a template");
  n->add_option("--nucleus", nargs.nucleus, "nucleus spec (as in translate)")->required();
  n->add_option("--logic", nargs.logic, "mqc | iqc | cqc (default: both mqc and iqc)");
  n->add_option("--budget", nargs.budget, "prover node budget");

  SuiteArgs sargs;
  CLI::App* s = app.add_subcommand("suite", "run the verification batteries");
  s->add_option("--claims", sargs.claims, "comma-separated claim ids (default: all)");
  s->add_option("--format", sargs.format, "human | records (default human)");
  s->add_option("--seed", sargs.cfg.seed, "random seed (NUCLEUS_SEED env overrides)");
  s->add_option("--formulas", sargs.cfg.formula_count, "formulas per equivalence battery");
  s->add_option("--height", sargs.cfg.formula_height, "maximum formula height");
  s->add_option("--sequents", sargs.cfg.sequent_count, "derivable sequents per battery");
  s->add_option("--cross-checks", sargs.cfg.cross_check_count, "prover/model agreement runs");
  s->add_option("--models", sargs.cfg.model_count, "random structures per semantic battery");
  s->add_option("--worlds", sargs.cfg.max_worlds, "maximum worlds per structure");
  s->add_option("--domain", sargs.cfg.max_domain, "maximum domain size");
  s->add_option("--sentences", sargs.cfg.sentences_per_model, "sentences per structure");
  s->add_option("--budget", sargs.cfg.budget, "prover node budget");
  s->add_flag("--list", sargs.list, "list claim ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand(t)) return run_translate(targs);
    if (app.got_subcommand(p)) return run_prove(pargs);
    if (app.got_subcommand(k)) return run_kripke(kargs);
    if (app.got_subcommand(n)) return run_nucleus_check(nargs);
    if (app.got_subcommand(s)) return run_suite_cmd(sargs);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  return kUsage;
}
