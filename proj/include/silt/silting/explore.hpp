#pragma once

#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "silt/silting/invariance.hpp"
#include "silt/silting/silting.hpp"

namespace silt {

// Compact description: "[4 -> 3^2 -> 2 -> 1]@-1", where the first listed term
// sits in degree -1 and vertices are 1-based.
template <class F>
std::string describe(const ProjComplex<F>& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  os << '[';
  for (int k = x.lo(); k <= x.hi(); ++k) {
    if (k > x.lo()) os << " -> ";
    const auto& t = x.term(k);
    if (t.empty()) os << '0';
    for (std::size_t i = 0; i < t.size();) {
      std::size_t j = i;
      while (j < t.size() && t[j] == t[i]) ++j;
      if (i > 0) os << '+';
      os << t[i] + 1;
      if (j - i > 1) os << '^' << (j - i);
      i = j;
    }
  }
  os << "]@" << x.lo();
  return os.str();
}

template <class F>
std::string describe(const SiltingObject<F>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.summands.size(); ++i) s += (i ? " + " : "") + describe(m.summands[i]);
  return s.empty() ? "0" : s;
}

template <class F>
struct GraphNode {
  SiltingObject<F> object;
  int depth = 0;
  // One flag per registered automorphism: every summand is invariant.
  std::vector<bool> invariant;
};

struct GraphEdge {
  std::size_t from = 0, to = 0;
  std::vector<std::size_t> keep;
  Direction direction = Direction::Left;
};

template <class F>
struct MutationGraph {
  std::vector<std::string> automorphisms;
  std::vector<GraphNode<F>> nodes;
  std::vector<GraphEdge> edges;
  bool complete = true;
};

struct ExploreOptions {
  // All proper and improper selections instead of only the irreducible ones.
  bool extended = false;
  std::size_t max_nodes = 500;
  std::uint64_t seed = 0;
};

template <class F>
bool same_object(const SiltingObject<F>& a, const SiltingObject<F>& b, std::uint64_t seed) {
  if (a.summands.size() != b.summands.size()) return false;
  std::vector<bool> used(b.summands.size(), false);
  for (const auto& s : a.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < b.summands.size() && !matched; ++j) {
      if (used[j] || term_profile(s) != term_profile(b.summands[j])) continue;
      if (iso_complex(s, b.summands[j], seed).isomorphic) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

// Breadth-first search over mutations up to the given depth. Nodes are
// identified up to isomorphism; the search stops early, with `complete`
// cleared, once max_nodes nodes exist.
template <class F>
MutationGraph<F> explore(const SiltingObject<F>& start, int depth, const std::vector<AlgebraAutomorphism<F>>& autos,
                         const ExploreOptions& opt = {}) {
  MutationGraph<F> g;
  for (const auto& s : autos) g.automorphisms.push_back(s.name());
  auto label = [&](const SiltingObject<F>& m) {
    std::vector<bool> flags;
    for (const auto& s : autos) flags.push_back(summands_invariant(m, s, opt.seed));
    return flags;
  };
  g.nodes.push_back({start, 0, label(start)});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    if (g.nodes[cur].depth >= depth) continue;
    const SiltingObject<F> m = g.nodes[cur].object;
    const std::size_t r = m.summands.size();
    std::vector<std::vector<std::size_t>> selections;
    if (opt.extended) {
      for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << r); ++mask) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < r; ++i)
          if (mask >> i & 1) keep.push_back(i);
        selections.push_back(std::move(keep));
      }
    } else {
      for (std::size_t drop = 0; drop < r; ++drop) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < r; ++i)
          if (i != drop) keep.push_back(i);
        selections.push_back(std::move(keep));
      }
    }
    for (const auto& keep : selections)
      for (Direction dir : {Direction::Left, Direction::Right}) {
        auto next = mutate(m, keep, dir, opt.seed);
        std::size_t target = g.nodes.size();
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
          if (same_object(next, g.nodes[i].object, opt.seed)) {
            target = i;
            break;
          }
        if (target == g.nodes.size()) {
          if (g.nodes.size() >= opt.max_nodes) {
            g.complete = false;
            return g;
          }
          auto flags = label(next);
          g.nodes.push_back({std::move(next), g.nodes[cur].depth + 1, std::move(flags)});
          queue.push_back(target);
        }
        g.edges.push_back({cur, target, keep, dir});
      }
  }
  return g;
}

template <class F>
nlohmann::json to_json(const MutationGraph<F>& g) {
  nlohmann::json j;
  j["automorphisms"] = g.automorphisms;
  j["complete"] = g.complete;
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    nlohmann::json sj = nlohmann::json::array();
    for (const auto& s : n.object.summands) sj.push_back({{"description", describe(s)}, {"lo", s.lo()}, {"hi", s.hi()}});
    nlohmann::json inv = nlohmann::json::object();
    for (std::size_t a = 0; a < g.automorphisms.size(); ++a) inv[g.automorphisms[a]] = static_cast<bool>(n.invariant[a]);
    nodes.push_back({{"id", i}, {"depth", n.depth}, {"summands", sj}, {"invariant", inv}});
  }
  j["nodes"] = nodes;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges) {
    std::vector<std::size_t> keep;
    for (auto k : e.keep) keep.push_back(k + 1);
    edges.push_back({{"from", e.from}, {"to", e.to}, {"keep", keep}, {"direction", direction_name(e.direction)}});
  }
  j["edges"] = edges;
  return j;
}

template <class F>
std::string to_dot(const MutationGraph<F>& g) {
  std::ostringstream os;
  os << "digraph silting {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& n = g.nodes[i];
    os << "  n" << i << " [label=\"" << describe(n.object);
    for (std::size_t a = 0; a < g.automorphisms.size(); ++a)
      os << "\\n" << g.automorphisms[a] << (n.invariant[a] ? " invariant" : " not invariant");
    os << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << (e.direction == Direction::Left ? "+" : "-") << " keep {";
    for (std::size_t i = 0; i < e.keep.size(); ++i) os << (i ? "," : "") << e.keep[i] + 1;
    os << "}\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace silt
