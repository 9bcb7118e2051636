#pragma once

// Deterministic random generation of formulas, sentences and Kripke models.
// All draws go through Rng, which layers portable uniform sampling on top of
// mt19937_64 so a seed reproduces the same objects on every platform.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "jtrans/formula.hpp"
#include "jtrans/model.hpp"

namespace jtrans {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n), n >= 1, via rejection (distribution-class results are
  // implementation-defined and would break cross-platform determinism).
  int below(int n) {
    auto un = static_cast<std::uint64_t>(n);
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x = eng_();
    while (x >= limit) x = eng_();
    return static_cast<int>(x % un);
  }

  bool coin(double p = 0.5) {
    return static_cast<double>(eng_()) < p * 18446744073709551616.0;  // 2^64
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(below(static_cast<int>(v.size())))];
  }

  // Weighted choice: returns an index into `weights`.
  int weighted(const std::vector<int>& weights) {
    int total = 0;
    for (int w : weights) total += w;
    int x = below(total);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (x < weights[i]) return static_cast<int>(i);
      x -= weights[i];
    }
    return static_cast<int>(weights.size()) - 1;
  }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------------------
// Propositional formulas

struct FormulaGenOptions {
  std::vector<std::string> atoms = {"P", "Q", "R", "S"};
  int max_height = 6;      // leaves have height 1
  int atom_weight = 8;     // leaf split between atoms...
  int bottom_weight = 1;   // ...and bottom
  int and_weight = 2;
  int or_weight = 2;
  int implies_weight = 3;
  int neg_weight = 1;
};

inline Formula random_propositional(Rng& rng, const FormulaGenOptions& opt) {
  auto leaf = [&]() -> Formula {
    if (opt.atoms.empty() || rng.weighted({opt.atom_weight, opt.bottom_weight}) == 1)
      return Formula::bottom();
    return Formula::atom(rng.pick(opt.atoms));
  };
  struct Builder {
    Rng& rng;
    const FormulaGenOptions& opt;
    decltype(leaf)& mk_leaf;
    Formula go(int height) {
      if (height <= 1) return mk_leaf();
      int k = rng.weighted({opt.atom_weight + opt.bottom_weight, opt.and_weight, opt.or_weight,
                            opt.implies_weight, opt.neg_weight});
      switch (k) {
        case 0: return mk_leaf();
        case 1: return Formula::conj(go(height - 1), go(height - 1));
        case 2: return Formula::disj(go(height - 1), go(height - 1));
        case 3: return Formula::implies(go(height - 1), go(height - 1));
        default: return Formula::neg(go(height - 1));
      }
    }
  } b{rng, opt, leaf};
  return b.go(opt.max_height);
}

inline Sequent random_sequent(Rng& rng, const FormulaGenOptions& opt, int max_hyps = 3) {
  std::vector<Formula> hyps;
  int n = rng.below(max_hyps + 1);
  FormulaGenOptions hyp_opt = opt;
  hyp_opt.max_height = std::max(2, opt.max_height - 2);
  for (int i = 0; i < n; ++i) hyps.push_back(random_propositional(rng, hyp_opt));
  return Sequent{std::move(hyps), random_propositional(rng, opt)};
}

// ---------------------------------------------------------------------------
// First-order sentences

struct SentenceGenOptions {
  std::map<std::string, int> preds = {{"P", 1}, {"Q", 0}, {"R", 2}};
  int max_height = 5;
  int leaf_weight = 8;
  int bottom_weight = 1;
  int and_weight = 2;
  int or_weight = 2;
  int implies_weight = 3;
  int forall_weight = 2;
  int exists_weight = 2;
  bool with_modal = false;
  int modal_weight = 1;
  std::vector<std::string> free_vars = {};  // stay free (and usable) in the result
};

namespace detail {

inline Formula random_sentence_rec(Rng& rng, const SentenceGenOptions& opt, int height,
                                   std::vector<std::string>& scope, int& next_var) {
  auto leaf = [&]() -> Formula {
    std::vector<std::pair<std::string, int>> usable;
    for (const auto& [name, arity] : opt.preds)
      if (arity == 0 || !scope.empty()) usable.emplace_back(name, arity);
    if (usable.empty() || rng.weighted({opt.leaf_weight, opt.bottom_weight}) == 1)
      return Formula::bottom();
    const auto& [name, arity] = usable[static_cast<std::size_t>(
        rng.below(static_cast<int>(usable.size())))];
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) args.push_back(Term::var(rng.pick(scope)));
    return Formula::atom(name, std::move(args));
  };
  if (height <= 1) return leaf();
  std::vector<int> weights = {opt.leaf_weight + opt.bottom_weight, opt.and_weight,
                              opt.or_weight,   opt.implies_weight, opt.forall_weight,
                              opt.exists_weight,
                              opt.with_modal ? opt.modal_weight : 0};
  int k = rng.weighted(weights);
  auto sub = [&]() { return random_sentence_rec(rng, opt, height - 1, scope, next_var); };
  switch (k) {
    case 0: return leaf();
    case 1: return Formula::conj(sub(), sub());
    case 2: return Formula::disj(sub(), sub());
    case 3: return Formula::implies(sub(), sub());
    case 4:
    case 5: {
      std::string v = "x" + std::to_string(next_var++);
      scope.push_back(v);
      Formula body = sub();
      scope.pop_back();
      return k == 4 ? Formula::forall(v, std::move(body)) : Formula::exists(v, std::move(body));
    }
    default: return Formula::modal(sub());
  }
}

}  // namespace detail

inline Formula random_sentence(Rng& rng, const SentenceGenOptions& opt) {
  std::vector<std::string> scope = opt.free_vars;
  int next_var = 0;
  Formula f = detail::random_sentence_rec(rng, opt, opt.max_height, scope, next_var);
  return normalize(f);
}

// ---------------------------------------------------------------------------
// Kripke models

struct ModelGenOptions {
  int max_worlds = 6;
  int max_domain = 3;
  std::map<std::string, int> preds = {{"P", 1}, {"Q", 0}, {"R", 2}};
  double edge_prob = 0.4;
  double fact_prob = 0.35;
};

inline KripkeModel random_model(Rng& rng, const ModelGenOptions& opt) {
  KripkeModel m;
  int n = 1 + rng.below(opt.max_worlds);
  int d = 1 + rng.below(opt.max_domain);
  for (int i = 0; i < n; ++i) m.add_world("w" + std::to_string(i));
  for (int i = 0; i < d; ++i) m.domain.push_back(std::string(1, static_cast<char>('a' + i)));
  m.preds = opt.preds;
  // later-indexed worlds may refine earlier ones, which keeps the order acyclic
  for (int q = 1; q < n; ++q)
    for (int p = 0; p < q; ++p)
      if (rng.coin(opt.edge_prob)) m.set_below(q, p);
  m.close_order();
  for (int w = 0; w < n; ++w)
    for (const auto& [pred, arity] : opt.preds) {
      std::vector<int> args(static_cast<std::size_t>(arity), 0);
      // enumerate all argument tuples
      while (true) {
        if (rng.coin(opt.fact_prob)) m.add_fact(w, GroundAtom{pred, args});
        int i = arity - 1;
        while (i >= 0 && args[static_cast<std::size_t>(i)] == d - 1) {
          args[static_cast<std::size_t>(i)] = 0;
          --i;
        }
        if (i < 0) break;
        ++args[static_cast<std::size_t>(i)];
      }
    }
  m.close_valuation();
  return m;
}

}  // namespace jtrans
