#pragma once

// Finite Kripke structures: a finite preordered set of worlds, a constant
// finite domain, and a monotone valuation of ground atoms. The convention
// throughout is that q <= p reads "q refines p"; atoms true at p stay true
// at every refinement q <= p.
//
// Text format (one directive per line, '#' starts a comment):
//   worlds: p q r
//   order: q <= p          # q refines p; reflexive/transitive closure is
//   order: r <= q          # taken automatically
//   domain: a b
//   preds: P/1 Q/0         # optional; arities are otherwise inferred
//   world p: P(a)
//   world q: P(a) P(b) Q
//   world r: P(a) P(b) Q

#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace jtrans {

struct GroundAtom {
  std::string pred;
  std::vector<int> args;  // indices into KripkeModel::domain

  friend bool operator==(const GroundAtom& a, const GroundAtom& b) {
    return a.pred == b.pred && a.args == b.args;
  }
  friend bool operator<(const GroundAtom& a, const GroundAtom& b) {
    return std::tie(a.pred, a.args) < std::tie(b.pred, b.args);
  }
};

class KripkeModel {
 public:
  std::vector<std::string> worlds;
  std::vector<std::string> domain;
  std::vector<std::vector<bool>> leq;      // leq[q][p]: q refines p
  std::vector<std::set<GroundAtom>> val;   // atoms true at each world
  std::map<std::string, int> preds;        // declared/inferred arities

  int num_worlds() const { return static_cast<int>(worlds.size()); }
  int domain_size() const { return static_cast<int>(domain.size()); }

  bool below(int q, int p) const { return leq[q][p]; }

  int world_index(const std::string& name) const {
    for (std::size_t i = 0; i < worlds.size(); ++i)
      if (worlds[i] == name) return static_cast<int>(i);
    throw std::runtime_error("unknown world: " + name);
  }

  int domain_index(const std::string& name) const {
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (domain[i] == name) return static_cast<int>(i);
    throw std::runtime_error("unknown domain element: " + name);
  }

  int add_world(std::string name) {
    worlds.push_back(std::move(name));
    val.emplace_back();
    for (auto& row : leq) row.push_back(false);
    leq.emplace_back(worlds.size(), false);
    leq.back().back() = true;  // reflexive
    return num_worlds() - 1;
  }

  void set_below(int q, int p) { leq[q][p] = true; }

  bool holds(int w, const GroundAtom& a) const { return val[w].count(a) != 0; }

  void add_fact(int w, GroundAtom a) {
    auto [it, inserted] = preds.emplace(a.pred, static_cast<int>(a.args.size()));
    if (!inserted && it->second != static_cast<int>(a.args.size()))
      throw std::runtime_error("arity mismatch for predicate " + a.pred);
    val[w].insert(std::move(a));
  }

  // Reflexive-transitive closure of the declared refinement edges.
  void close_order() {
    int n = num_worlds();
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (leq[i][k])
          for (int j = 0; j < n; ++j)
            if (leq[k][j]) leq[i][j] = true;
  }

  // Pushes every fact downward so the valuation becomes monotone.
  void close_valuation() {
    int n = num_worlds();
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (q != p && leq[q][p]) val[q].insert(val[p].begin(), val[p].end());
  }

  // Structural problems, empty when the model is well-formed.
  std::vector<std::string> validate() const {
    std::vector<std::string> problems;
    int n = num_worlds();
    std::set<std::string> seen;
    for (const auto& w : worlds)
      if (!seen.insert(w).second) problems.push_back("duplicate world name: " + w);
    seen.clear();
    for (const auto& d : domain)
      if (!seen.insert(d).second) problems.push_back("duplicate domain element: " + d);
    if (static_cast<int>(leq.size()) != n || static_cast<int>(val.size()) != n) {
      problems.push_back("internal shape mismatch");
      return problems;
    }
    for (int i = 0; i < n; ++i)
      if (!leq[i][i]) problems.push_back("order not reflexive at " + worlds[i]);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (leq[i][k])
          for (int j = 0; j < n; ++j)
            if (leq[k][j] && !leq[i][j])
              problems.push_back("order not transitive: " + worlds[i] + " <= " + worlds[k] +
                                 " <= " + worlds[j]);
    std::map<std::string, int> arity = preds;
    for (int w = 0; w < n; ++w)
      for (const auto& a : val[w]) {
        auto [it, inserted] = arity.emplace(a.pred, static_cast<int>(a.args.size()));
        if (!inserted && it->second != static_cast<int>(a.args.size()))
          problems.push_back("arity mismatch for predicate " + a.pred);
        for (int arg : a.args)
          if (arg < 0 || arg >= domain_size())
            problems.push_back("atom argument out of domain at world " + worlds[w]);
      }
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (q != p && leq[q][p])
          for (const auto& a : val[p])
            if (!val[q].count(a))
              problems.push_back("valuation not monotone: " + describe(a) + " holds at " +
                                 worlds[p] + " but not at its refinement " + worlds[q]);
    return problems;
  }

  std::string describe(const GroundAtom& a) const {
    std::string out = a.pred;
    if (!a.args.empty()) {
      out += '(';
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ", ";
        out += domain[static_cast<std::size_t>(a.args[i])];
      }
      out += ')';
    }
    return out;
  }
};

inline std::string to_string(const KripkeModel& m) {
  std::string out = "worlds:";
  for (const auto& w : m.worlds) out += " " + w;
  out += '\n';
  for (int q = 0; q < m.num_worlds(); ++q)
    for (int p = 0; p < m.num_worlds(); ++p)
      if (q != p && m.leq[q][p]) out += "order: " + m.worlds[q] + " <= " + m.worlds[p] + "\n";
  if (!m.domain.empty()) {
    out += "domain:";
    for (const auto& d : m.domain) out += " " + d;
    out += '\n';
  }
  if (!m.preds.empty()) {
    out += "preds:";
    for (const auto& [name, arity] : m.preds) out += " " + name + "/" + std::to_string(arity);
    out += '\n';
  }
  for (int w = 0; w < m.num_worlds(); ++w) {
    out += "world " + m.worlds[w] + ":";
    for (const auto& a : m.val[w]) out += " " + m.describe(a);
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Ground atoms in world lines: "Q" or "P(a, b)".
inline GroundAtom parse_ground_atom(std::string_view text, const KripkeModel& m) {
  std::size_t paren = text.find('(');
  GroundAtom a;
  if (paren == std::string_view::npos) {
    a.pred = std::string(trim(text));
    return a;
  }
  a.pred = std::string(trim(text.substr(0, paren)));
  if (text.back() != ')') throw std::runtime_error("malformed atom: " + std::string(text));
  std::string_view inner = text.substr(paren + 1, text.size() - paren - 2);
  std::size_t start = 0;
  while (start <= inner.size()) {
    std::size_t comma = inner.find(',', start);
    std::string_view part =
        comma == std::string_view::npos ? inner.substr(start) : inner.substr(start, comma - start);
    a.args.push_back(m.domain_index(std::string(trim(part))));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return a;
}

}  // namespace detail

inline KripkeModel load_model(std::string_view text) {
  KripkeModel m;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> facts;  // world, atom text
  std::size_t line_start = 0;
  int line_no = 0;
  while (line_start <= text.size()) {
    ++line_no;
    std::size_t nl = text.find('\n', line_start);
    std::string_view line = nl == std::string_view::npos ? text.substr(line_start)
                                                         : text.substr(line_start, nl - line_start);
    line_start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    auto fail = [&](const std::string& msg) {
      throw std::runtime_error("model line " + std::to_string(line_no) + ": " + msg);
    };

    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) fail("expected 'directive: ...'");
    std::string_view head = detail::trim(line.substr(0, colon));
    std::string_view rest = detail::trim(line.substr(colon + 1));

    if (head == "worlds") {
      for (const auto& w : detail::split_words(rest)) m.add_world(w);
    } else if (head == "order") {
      std::size_t arrow = rest.find("<=");
      if (arrow == std::string_view::npos) fail("expected 'q <= p'");
      edges.emplace_back(std::string(detail::trim(rest.substr(0, arrow))),
                         std::string(detail::trim(rest.substr(arrow + 2))));
    } else if (head == "domain") {
      for (const auto& d : detail::split_words(rest)) m.domain.push_back(d);
    } else if (head == "preds") {
      for (const auto& p : detail::split_words(rest)) {
        std::size_t slash = p.find('/');
        if (slash == std::string::npos) fail("expected 'Name/arity'");
        m.preds[p.substr(0, slash)] = std::stoi(p.substr(slash + 1));
      }
    } else if (head.substr(0, 6) == "world " || head == "world") {
      std::string wname(detail::trim(head.size() > 5 ? head.substr(5) : std::string_view{}));
      if (wname.empty()) fail("expected 'world <name>: ...'");
      // atoms are space-separated, but arguments may contain ", "
      std::string atom;
      int depth = 0;
      std::string rest_s(rest);
      rest_s += ' ';
      for (char c : rest_s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == ' ' || c == '\t') && depth == 0) {
          if (!atom.empty()) facts.emplace_back(wname, atom);
          atom.clear();
        } else {
          atom += c;
        }
      }
      if (depth != 0) fail("unbalanced parentheses");
    } else {
      fail("unknown directive: " + std::string(head));
    }
  }
  for (const auto& [q, p] : edges) m.set_below(m.world_index(q), m.world_index(p));
  m.close_order();
  for (const auto& [w, atom] : facts)
    m.add_fact(m.world_index(w), detail::parse_ground_atom(atom, m));
  auto problems = m.validate();
  if (!problems.empty()) {
    std::string msg = "invalid model:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw std::runtime_error(msg);
  }
  return m;
}

inline KripkeModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

}  // namespace jtrans
