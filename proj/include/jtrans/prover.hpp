#pragma once

// Decision procedures for the propositional fragment.
//
//   IQC  intuitionistic: contraction-free sequent search (Dyckhoff's G4ip).
//        Left implications are decomposed by the shape of their antecedent;
//        every rule strictly shrinks a multiset measure, so search terminates
//        without loop checking. A failed search yields a finite Kripke
//        countermodel (Pinto/Dyckhoff-style gluing of failed premises).
//   MQC  minimal: bottom is replaced by a fresh atom and the IQC engine runs
//        on the result; absurdity rules then never fire, which is exactly
//        minimal logic.
//   CQC  classical: truth tables.
//
// The search keeps contexts as duplicate-free vectors and applies rules in a
// fixed order (closure, non-branching invertible left rules leftmost-first,
// right implication, branching invertibles, then choice points), so verdicts,
// traces and countermodels are deterministic.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jtrans/formula.hpp"
#include "jtrans/gen.hpp"
#include "jtrans/model.hpp"

namespace jtrans {

enum class Logic { MQC, IQC, CQC };

inline const char* to_string(Logic l) {
  switch (l) {
    case Logic::MQC: return "mqc";
    case Logic::IQC: return "iqc";
    case Logic::CQC: return "cqc";
  }
  return "?";
}

inline std::optional<Logic> parse_logic(std::string_view s) {
  if (s == "mqc") return Logic::MQC;
  if (s == "iqc") return Logic::IQC;
  if (s == "cqc") return Logic::CQC;
  return std::nullopt;
}

enum class ProverStatus { Derivable, NotDerivable, BudgetExceeded, OutOfFragment };

struct Verdict {
  ProverStatus status = ProverStatus::OutOfFragment;
  std::vector<std::string> proof;                         // rule tree when derivable
  std::optional<KripkeModel> model;                       // Kripke refutation (IQC/MQC)
  int model_root = -1;
  std::optional<std::map<std::string, bool>> assignment;  // classical refutation
  std::string falsum_atom;  // MQC: the fresh atom standing in for bottom
  std::string note;
  std::uint64_t nodes = 0;

  bool derivable() const { return status == ProverStatus::Derivable; }
};

constexpr std::uint64_t kDefaultBudget = 1'000'000;

namespace detail {

struct BudgetHit {};

inline bool vec_contains(const std::vector<Formula>& v, const Formula& f) {
  for (const auto& g : v)
    if (g == f) return true;
  return false;
}

class G4Search {
 public:
  explicit G4Search(std::uint64_t budget) : budget_(budget) {}

  struct Result {
    bool ok = false;
    std::vector<std::string> proof;
    KripkeModel model;
    int root = -1;
  };

  Result run(std::vector<Formula> gamma, const Formula& goal) {
    std::vector<Formula> g;
    for (auto& f : gamma)
      if (!vec_contains(g, f)) g.push_back(std::move(f));
    return expand(std::move(g), goal);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static std::string seq_str(const std::vector<Formula>& gamma, const Formula& goal) {
    return to_string(Sequent{gamma, goal});
  }

  static Result success(const std::string& rule, const std::vector<Formula>& gamma,
                        const Formula& goal, std::vector<Result> children = {}) {
    Result r;
    r.ok = true;
    r.proof.push_back(rule + "  " + seq_str(gamma, goal));
    for (const auto& c : children)
      for (const auto& line : c.proof) r.proof.push_back("  " + line);
    return r;
  }

  // Appends src's worlds to dst (renaming them) and returns the index offset.
  static int merge_into(KripkeModel& dst, const KripkeModel& src) {
    int off = dst.num_worlds();
    for (int i = 0; i < src.num_worlds(); ++i)
      dst.add_world("w" + std::to_string(off + i));
    for (int i = 0; i < src.num_worlds(); ++i) {
      dst.val[off + i] = src.val[i];
      for (int j = 0; j < src.num_worlds(); ++j)
        if (src.leq[i][j]) dst.leq[off + i][off + j] = true;
    }
    for (const auto& [p, a] : src.preds) dst.preds.emplace(p, a);
    return off;
  }

  // Countermodel for a saturated sequent: a fresh root forcing exactly the
  // atoms of gamma, with the refutations of failed premises glued below it.
  static Result glue(const std::vector<Formula>& gamma, const std::vector<Result>& kids) {
    Result r;
    int root = r.model.add_world("w0");
    for (const auto& f : gamma)
      if (f.kind() == FormulaKind::Atom) r.model.add_fact(root, GroundAtom{f.pred(), {}});
    for (const auto& k : kids) {
      int off = merge_into(r.model, k.model);
      for (int i = 0; i < k.model.num_worlds(); ++i) r.model.set_below(off + i, root);
    }
    r.root = root;
    return r;
  }

  Result expand(std::vector<Formula> gamma, Formula goal) {
    if (++nodes_ > budget_) throw BudgetHit{};

    // closure
    if (goal.kind() == FormulaKind::Atom && vec_contains(gamma, goal))
      return success("axiom", gamma, goal);
    for (const auto& f : gamma)
      if (f.kind() == FormulaKind::Bottom) return success("L-bot", gamma, goal);

    // non-branching invertible left rules, leftmost occurrence first
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const Formula f = gamma[i];
      if (f.kind() == FormulaKind::And) {
        auto g2 = gamma;
        g2.erase(g2.begin() + static_cast<std::ptrdiff_t>(i));
        insert_new(g2, i, f.right());
        insert_new(g2, i, f.left());
        return wrap("L-and", gamma, goal, expand(std::move(g2), goal));
      }
      if (f.kind() == FormulaKind::Implies) {
        Formula a = f.left(), b = f.right();
        switch (a.kind()) {
          case FormulaKind::Atom:
            if (vec_contains(gamma, a)) {
              auto g2 = gamma;
              g2.erase(g2.begin() + static_cast<std::ptrdiff_t>(i));
              insert_new(g2, i, b);
              return wrap("L-imp-atom", gamma, goal, expand(std::move(g2), goal));
            }
            break;  // waits until its antecedent atom shows up
          case FormulaKind::Bottom: {
            auto g2 = gamma;
            g2.erase(g2.begin() + static_cast<std::ptrdiff_t>(i));
            return wrap("L-imp-bot", gamma, goal, expand(std::move(g2), goal));
          }
          case FormulaKind::And: {
            auto g2 = gamma;
            g2.erase(g2.begin() + static_cast<std::ptrdiff_t>(i));
            insert_new(g2, i, Formula::implies(a.left(), Formula::implies(a.right(), b)));
            return wrap("L-imp-and", gamma, goal, expand(std::move(g2), goal));
          }
          case FormulaKind::Or: {
            auto g2 = gamma;
            g2.erase(g2.begin() + static_cast<std::ptrdiff_t>(i));
            insert_new(g2, i, Formula::implies(a.right(), b));
            insert_new(g2, i, Formula::implies(a.left(), b));
            return wrap("L-imp-or", gamma, goal, expand(std::move(g2), goal));
          }
          default:
            break;  // nested implication: a choice point below
        }
      }
    }

    // right implication is applied eagerly; countermodel gluing relies on
    // refutations of "|- A -> B" rooting at a world that forces A
    if (goal.kind() == FormulaKind::Implies) {
      auto g2 = gamma;
      insert_new(g2, g2.size(), goal.left());
      return wrap("R-imp", gamma, goal, expand(std::move(g2), goal.right()));
    }

    // branching invertibles
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const Formula f = gamma[i];
      if (f.kind() != FormulaKind::Or) continue;
      auto gl = gamma;
      gl.erase(gl.begin() + static_cast<std::ptrdiff_t>(i));
      insert_new(gl, i, f.left());
      Result left = expand(std::move(gl), goal);
      if (!left.ok) return left;
      auto gr = gamma;
      gr.erase(gr.begin() + static_cast<std::ptrdiff_t>(i));
      insert_new(gr, i, f.right());
      Result right = expand(std::move(gr), goal);
      if (!right.ok) return right;
      std::vector<Result> kids;
      kids.push_back(std::move(left));
      kids.push_back(std::move(right));
      return success("L-or", gamma, goal, std::move(kids));
    }
    if (goal.kind() == FormulaKind::And) {
      Result left = expand(gamma, goal.left());
      if (!left.ok) return left;
      Result right = expand(gamma, goal.right());
      if (!right.ok) return right;
      std::vector<Result> kids;
      kids.push_back(std::move(left));
      kids.push_back(std::move(right));
      return success("R-and", gamma, goal, std::move(kids));
    }

    // choice points; failed branches feed the countermodel
    std::vector<Result> failures;
    if (goal.kind() == FormulaKind::Or) {
      Result left = expand(gamma, goal.left());
      if (left.ok) return success("R-or-1", gamma, goal, {std::move(left)});
      failures.push_back(std::move(left));
      Result right = expand(gamma, goal.right());
      if (right.ok) return success("R-or-2", gamma, goal, {std::move(right)});
      failures.push_back(std::move(right));
    }
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const Formula f = gamma[i];
      if (f.kind() != FormulaKind::Implies || f.left().kind() != FormulaKind::Implies) continue;
      Formula a = f.left().left(), b = f.left().right(), c = f.right();
      auto g1 = gamma;
      g1.erase(g1.begin() + static_cast<std::ptrdiff_t>(i));
      insert_new(g1, i, Formula::implies(b, c));
      Result p1 = expand(std::move(g1), f.left());
      if (!p1.ok) {
        failures.push_back(std::move(p1));
        continue;
      }
      auto g2 = gamma;
      g2.erase(g2.begin() + static_cast<std::ptrdiff_t>(i));
      insert_new(g2, i, c);
      Result p2 = expand(std::move(g2), goal);
      if (p2.ok) {
        std::vector<Result> kids;
        kids.push_back(std::move(p1));
        kids.push_back(std::move(p2));
        return success("L-imp-imp", gamma, goal, std::move(kids));
      }
      // p2's root forces c, hence (a->b)->c, hence all of gamma while
      // refuting the goal: it already refutes this sequent
      return p2;
    }

    // saturated
    return glue(gamma, failures);
  }

  static void insert_new(std::vector<Formula>& v, std::size_t at, Formula f) {
    if (vec_contains(v, f)) return;
    if (at > v.size()) at = v.size();
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(at), std::move(f));
  }

  static Result wrap(const std::string& rule, const std::vector<Formula>& gamma,
                     const Formula& goal, Result child) {
    if (!child.ok) return child;  // premise countermodels refute the conclusion too
    return success(rule, gamma, goal, {std::move(child)});
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

// Bool-only variant of the same calculus: formulas are interned to ids,
// contexts are kept sorted, and verdicts are memoized per (context, goal).
// Used by batteries that only need derivability; orders of magnitude faster
// than the trace-building search on large inputs.
class G4Fast {
 public:
  explicit G4Fast(std::uint64_t budget) : budget_(budget) {}

  bool prove(const std::vector<Formula>& hyps, const Formula& goal) {
    std::vector<int> gamma;
    for (const auto& h : hyps) insert_id(gamma, intern(h));
    return expand(std::move(gamma), intern(goal));
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Info {
    FormulaKind kind;
    int a = -1, b = -1;
  };

  int make(FormulaKind k, int a, int b) {
    auto key = std::make_tuple(static_cast<int>(k), a, b);
    auto it = comp_ids_.find(key);
    if (it != comp_ids_.end()) return it->second;
    int id = static_cast<int>(infos_.size());
    infos_.push_back(Info{k, a, b});
    comp_ids_.emplace(key, id);
    return id;
  }

  int intern(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Atom: {
        auto it = atom_ids_.find(f.pred());
        if (it != atom_ids_.end()) return it->second;
        int id = static_cast<int>(infos_.size());
        infos_.push_back(Info{FormulaKind::Atom, -1, -1});
        atom_ids_.emplace(f.pred(), id);
        return id;
      }
      case FormulaKind::Bottom:
        if (bottom_id_ < 0) {
          bottom_id_ = static_cast<int>(infos_.size());
          infos_.push_back(Info{FormulaKind::Bottom, -1, -1});
        }
        return bottom_id_;
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies: {
        int a = intern(f.left());
        int b = intern(f.right());
        return make(f.kind(), a, b);
      }
      default:
        throw std::logic_error("G4Fast: non-propositional formula");
    }
  }

  static void insert_id(std::vector<int>& v, int id) {
    auto it = std::lower_bound(v.begin(), v.end(), id);
    if (it == v.end() || *it != id) v.insert(it, id);
  }
  static bool contains_id(const std::vector<int>& v, int id) {
    return std::binary_search(v.begin(), v.end(), id);
  }
  static std::vector<int> without_index(const std::vector<int>& v, std::size_t i) {
    std::vector<int> out = v;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  }

  bool expand(std::vector<int> gamma, int goal) {
    auto key = std::make_pair(std::move(gamma), goal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > budget_) throw BudgetHit{};
    bool result = step(key.first, goal);
    memo_.emplace(std::move(key), result);
    return result;
  }

  bool step(const std::vector<int>& gamma, int goal) {
    const Info g = infos_[static_cast<std::size_t>(goal)];

    if (g.kind == FormulaKind::Atom && contains_id(gamma, goal)) return true;
    for (int f : gamma)
      if (infos_[static_cast<std::size_t>(f)].kind == FormulaKind::Bottom) return true;

    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const Info fi = infos_[static_cast<std::size_t>(gamma[i])];
      if (fi.kind == FormulaKind::And) {
        auto g2 = without_index(gamma, i);
        insert_id(g2, fi.a);
        insert_id(g2, fi.b);
        return expand(std::move(g2), goal);
      }
      if (fi.kind != FormulaKind::Implies) continue;
      const Info ai = infos_[static_cast<std::size_t>(fi.a)];
      switch (ai.kind) {
        case FormulaKind::Atom:
          if (contains_id(gamma, fi.a)) {
            auto g2 = without_index(gamma, i);
            insert_id(g2, fi.b);
            return expand(std::move(g2), goal);
          }
          break;
        case FormulaKind::Bottom:
          return expand(without_index(gamma, i), goal);
        case FormulaKind::And: {
          auto g2 = without_index(gamma, i);
          insert_id(g2, make(FormulaKind::Implies, ai.a, make(FormulaKind::Implies, ai.b, fi.b)));
          return expand(std::move(g2), goal);
        }
        case FormulaKind::Or: {
          auto g2 = without_index(gamma, i);
          insert_id(g2, make(FormulaKind::Implies, ai.a, fi.b));
          insert_id(g2, make(FormulaKind::Implies, ai.b, fi.b));
          return expand(std::move(g2), goal);
        }
        default:
          break;
      }
    }

    if (g.kind == FormulaKind::Implies) {
      auto g2 = gamma;
      insert_id(g2, g.a);
      return expand(std::move(g2), g.b);
    }

    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const Info fi = infos_[static_cast<std::size_t>(gamma[i])];
      if (fi.kind != FormulaKind::Or) continue;
      auto gl = without_index(gamma, i);
      insert_id(gl, fi.a);
      if (!expand(std::move(gl), goal)) return false;
      auto gr = without_index(gamma, i);
      insert_id(gr, fi.b);
      return expand(std::move(gr), goal);
    }
    if (g.kind == FormulaKind::And)
      return expand(gamma, g.a) && expand(gamma, g.b);

    if (g.kind == FormulaKind::Or) {
      if (expand(gamma, g.a)) return true;
      if (expand(gamma, g.b)) return true;
    }
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      const Info fi = infos_[static_cast<std::size_t>(gamma[i])];
      if (fi.kind != FormulaKind::Implies) continue;
      const Info ai = infos_[static_cast<std::size_t>(fi.a)];
      if (ai.kind != FormulaKind::Implies) continue;
      auto g1 = without_index(gamma, i);
      insert_id(g1, make(FormulaKind::Implies, ai.b, fi.b));
      if (!expand(std::move(g1), fi.a)) continue;
      auto g2 = without_index(gamma, i);
      insert_id(g2, fi.b);
      // a failing second premise refutes the whole sequent (its countermodel
      // forces the consequent, hence the nested implication, hence gamma)
      return expand(std::move(g2), goal);
    }
    return false;
  }

  std::map<std::string, int> atom_ids_;
  std::map<std::tuple<int, int, int>, int> comp_ids_;
  std::vector<Info> infos_;
  int bottom_id_ = -1;
  std::map<std::pair<std::vector<int>, int>, bool> memo_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

inline void collect_prop_atoms(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      if (std::find(out.begin(), out.end(), f.pred()) == out.end()) out.push_back(f.pred());
      break;
    case FormulaKind::Bottom:
      break;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect_prop_atoms(f.left(), out);
      collect_prop_atoms(f.right(), out);
      break;
    default:
      break;
  }
}

inline bool truth_eval(const Formula& f, const std::map<std::string, bool>& env) {
  switch (f.kind()) {
    case FormulaKind::Atom: return env.at(f.pred());
    case FormulaKind::Bottom: return false;
    case FormulaKind::And: return truth_eval(f.left(), env) && truth_eval(f.right(), env);
    case FormulaKind::Or: return truth_eval(f.left(), env) || truth_eval(f.right(), env);
    case FormulaKind::Implies: return !truth_eval(f.left(), env) || truth_eval(f.right(), env);
    default: throw std::logic_error("truth_eval: non-propositional formula");
  }
}

// Minimal logic reduction: bottom becomes a fresh ordinary atom, so the
// absurdity rules never fire. Returns the chosen atom name.
inline std::string mqc_reduce(Sequent& s) {
  std::string falsum = "FALSUM";
  auto clashes = [&](const std::string& name) {
    for (const auto& h : s.hyps)
      if (contains_atom(h, name)) return true;
    return contains_atom(s.conclusion, name);
  };
  while (clashes(falsum)) falsum += "'";
  for (auto& h : s.hyps) h = replace_bottom(h, Formula::atom(falsum));
  s.conclusion = replace_bottom(s.conclusion, Formula::atom(falsum));
  return falsum;
}

}  // namespace detail

// Evaluates a propositional formula under a classical truth assignment.
inline bool classical_eval(const Formula& f, const std::map<std::string, bool>& env) {
  return detail::truth_eval(f, env);
}

inline Verdict decide(const Sequent& s, Logic logic, std::uint64_t budget = kDefaultBudget) {
  Verdict v;
  for (const auto& h : s.hyps)
    if (!is_propositional(h)) {
      v.note = "hypothesis outside the propositional fragment: " + to_string(h);
      return v;
    }
  if (!is_propositional(s.conclusion)) {
    v.note = "conclusion outside the propositional fragment: " + to_string(s.conclusion);
    return v;
  }

  if (logic == Logic::CQC) {
    std::vector<std::string> atoms;
    for (const auto& h : s.hyps) detail::collect_prop_atoms(h, atoms);
    detail::collect_prop_atoms(s.conclusion, atoms);
    if (atoms.size() > 30 || (atoms.size() < 64 && (1ull << atoms.size()) > budget)) {
      v.status = ProverStatus::BudgetExceeded;
      v.note = "truth table too large";
      return v;
    }
    std::uint64_t total = 1ull << atoms.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      std::map<std::string, bool> env;
      for (std::size_t i = 0; i < atoms.size(); ++i) env[atoms[i]] = (bits >> i) & 1;
      bool hyps_ok = true;
      for (const auto& h : s.hyps) hyps_ok = hyps_ok && detail::truth_eval(h, env);
      if (hyps_ok && !detail::truth_eval(s.conclusion, env)) {
        v.status = ProverStatus::NotDerivable;
        v.assignment = std::move(env);
        v.nodes = bits + 1;
        return v;
      }
    }
    v.status = ProverStatus::Derivable;
    v.proof.push_back("tautology  " + to_string(s) + "  (" + std::to_string(total) +
                      " assignments checked)");
    v.nodes = total;
    return v;
  }

  Sequent work = s;
  if (logic == Logic::MQC) v.falsum_atom = detail::mqc_reduce(work);

  detail::G4Search search(budget);
  try {
    auto r = search.run(work.hyps, work.conclusion);
    v.nodes = search.nodes();
    if (r.ok) {
      v.status = ProverStatus::Derivable;
      v.proof = std::move(r.proof);
    } else {
      v.status = ProverStatus::NotDerivable;
      v.model = std::move(r.model);
      v.model_root = r.root;
      // carry the sequent's whole signature, so evaluators that insist on
      // declared predicates can run the countermodel directly
      std::vector<std::string> atoms;
      for (const auto& h : work.hyps) detail::collect_prop_atoms(h, atoms);
      detail::collect_prop_atoms(work.conclusion, atoms);
      for (const auto& a : atoms) v.model->preds.emplace(a, 0);
    }
  } catch (const detail::BudgetHit&) {
    v.status = ProverStatus::BudgetExceeded;
    v.nodes = budget;
    v.note = "search budget exhausted";
  }
  return v;
}

inline Verdict decide(const Formula& f, Logic logic, std::uint64_t budget = kDefaultBudget) {
  return decide(Sequent{{}, f}, logic, budget);
}

// Derivability only, via the memoized engine; empty on budget exhaustion.
inline std::optional<bool> try_decide_bool(const Sequent& s, Logic logic,
                                           std::uint64_t budget = kDefaultBudget) {
  for (const auto& h : s.hyps)
    if (!is_propositional(h))
      throw std::runtime_error("out of fragment: " + to_string(h));
  if (!is_propositional(s.conclusion))
    throw std::runtime_error("out of fragment: " + to_string(s.conclusion));

  if (logic == Logic::CQC) {
    Verdict v = decide(s, logic, budget);
    if (v.status == ProverStatus::BudgetExceeded) return std::nullopt;
    return v.derivable();
  }
  Sequent work = s;
  if (logic == Logic::MQC) detail::mqc_reduce(work);
  detail::G4Fast fast(budget);
  try {
    return fast.prove(work.hyps, work.conclusion);
  } catch (const detail::BudgetHit&) {
    return std::nullopt;
  }
}

// Convenience wrapper that insists on a definite answer.
inline bool decide_bool(const Sequent& s, Logic logic, std::uint64_t budget = kDefaultBudget) {
  auto r = try_decide_bool(s, logic, budget);
  if (!r) throw std::runtime_error("prover budget exhausted on: " + to_string(s));
  return *r;
}

inline bool decide_bool(const Formula& f, Logic logic, std::uint64_t budget = kDefaultBudget) {
  return decide_bool(Sequent{{}, f}, logic, budget);
}

// Decides derivability of a <-> b.
inline Verdict check_equiv(const Formula& a, const Formula& b, Logic logic,
                           std::uint64_t budget = kDefaultBudget) {
  return decide(Formula::iff(a, b), logic, budget);
}

inline bool equiv_bool(const Formula& a, const Formula& b, Logic logic,
                       std::uint64_t budget = kDefaultBudget) {
  return decide_bool(Formula::iff(a, b), logic, budget);
}

// ---------------------------------------------------------------------------
// Random derivable material (rejection sampling with a safety fallback)

inline Sequent random_derivable_sequent(Rng& rng, Logic logic,
                                        const FormulaGenOptions& opt = {},
                                        std::uint64_t budget = kDefaultBudget,
                                        int max_attempts = 20000) {
  for (int i = 0; i < max_attempts; ++i) {
    Sequent s = random_sequent(rng, opt);
    auto r = try_decide_bool(s, logic, budget);
    if (r && *r) return s;
  }
  Formula f = random_propositional(rng, opt);
  return Sequent{{f}, f};
}

inline Formula random_theorem(Rng& rng, Logic logic, const FormulaGenOptions& opt = {},
                              std::uint64_t budget = kDefaultBudget, int max_attempts = 20000) {
  for (int i = 0; i < max_attempts; ++i) {
    Formula f = random_propositional(rng, opt);
    auto r = try_decide_bool(Sequent{{}, f}, logic, budget);
    if (r && *r) return f;
  }
  Formula f = random_propositional(rng, opt);
  return Formula::implies(f, f);
}

}  // namespace jtrans
