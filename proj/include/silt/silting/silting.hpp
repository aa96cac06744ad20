#pragma once

#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "silt/silting/approximation.hpp"

namespace silt {

struct InvalidSelection : Error {
  using Error::Error;
};

enum class SiltingStatus { Known, CertifiedGenerates, Unknown };

inline const char* status_name(SiltingStatus s) {
  switch (s) {
    case SiltingStatus::Known: return "known";
    case SiltingStatus::CertifiedGenerates: return "certified";
    case SiltingStatus::Unknown: return "unknown";
  }
  return "unknown";
}

// A basic object given by its indecomposable summands (minimized).
template <class F>
struct SiltingObject {
  AlgebraPtr<F> alg;
  std::vector<ProjComplex<F>> summands;
  bool presilting_verified = false;
  SiltingStatus status = SiltingStatus::Unknown;

  [[nodiscard]] ProjComplex<F> total() const { return direct_sum(alg, summands); }
};

// Hom(X, X[j]) = 0 for 0 < j <= hi - lo; larger shifts have no overlapping terms.
template <class F>
bool is_presilting(const ProjComplex<F>& x) {
  if (x.is_zero()) return true;
  HomComplex<F> hc(x, to_module_complex(x));
  for (int j = 1; j <= x.hi() - x.lo(); ++j)
    if (hc.hom(j).dim() != 0) return false;
  return true;
}

// Indecomposable summands of X with repeated isomorphism classes removed.
template <class F>
std::vector<ProjComplex<F>> basic_summands(const ProjComplex<F>& x, std::uint64_t seed = 0) {
  std::vector<ProjComplex<F>> out;
  for (auto& s : decompose_complex(x, seed).summands) {
    bool seen = false;
    for (const auto& t : out)
      if (iso_complex(s, t, seed).isomorphic) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(s));
  }
  return out;
}

template <class F>
SiltingObject<F> silting_object(const ProjComplex<F>& x, std::uint64_t seed = 0) {
  SiltingObject<F> m{x.algebra_ptr(), basic_summands(x, seed), false, SiltingStatus::Unknown};
  m.presilting_verified = is_presilting(m.total());
  return m;
}

// The regular object A = e_1A + ... + e_nA.
template <class F>
SiltingObject<F> regular_object(const AlgebraPtr<F>& alg) {
  SiltingObject<F> m{alg, {}, true, SiltingStatus::CertifiedGenerates};
  for (int v = 0; v < alg->vertex_count(); ++v) m.summands.push_back(stalk(alg, {v}, 0));
  return m;
}

// Replaces every summand outside `keep` by the minimized (co)cone of its
// minimal add(keep)-approximation. Kept summands come first in the result.
template <class F>
SiltingObject<F> mutate(const SiltingObject<F>& m, const std::vector<std::size_t>& keep, Direction dir,
                        std::uint64_t seed = 0) {
  std::vector<bool> kept(m.summands.size(), false);
  for (auto i : keep) {
    if (i >= m.summands.size()) throw InvalidSelection("selection index " + std::to_string(i + 1) + " is not a summand");
    if (kept[i]) throw InvalidSelection("selection repeats summand " + std::to_string(i + 1));
    kept[i] = true;
  }
  std::vector<ProjComplex<F>> d;
  for (auto i : keep) d.push_back(m.summands[i]);
  SiltingObject<F> out{m.alg, d, m.presilting_verified,
                       m.status == SiltingStatus::Unknown ? SiltingStatus::Unknown : SiltingStatus::Known};
  for (std::size_t i = 0; i < m.summands.size(); ++i) {
    if (kept[i]) continue;
    auto ap = minimal_approximation(m.summands[i], d, dir);
    if (!ap.minimal_certified)
      throw InvalidSelection("approximation of summand " + std::to_string(i + 1) + " is not certified minimal");
    for (auto& s : decompose_complex(ap.cone, seed).summands) {
      bool seen = false;
      for (const auto& t : out.summands)
        if (iso_complex(s, t, seed).isomorphic) {
          seen = true;
          break;
        }
      if (!seen) out.summands.push_back(std::move(s));
    }
  }
  return out;
}

// True when the integer vectors generate Z^n (Hermite reduction).
inline bool spans_lattice(std::vector<std::vector<long>> rows, std::size_t n) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < n; ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (best == rows.size() || std::labs(rows[r][c]) < std::labs(rows[best][c]))) best = r;
      if (best == rows.size()) return false;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        const long q = rows[r][c] / rows[top][c];
        if (q != 0)
          for (std::size_t k = c; k < n; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (std::labs(rows[top][c]) != 1) return false;
    ++top;
  }
  return true;
}

// One step of a descent: T was replaced by the cone of its minimal right
// add(M[shift])-approximation, whose target had `multiplicity` summands.
struct DescentStep {
  int shift = 0;
  std::size_t multiplicity = 0;
};

struct SiltingVerdict {
  bool certified = false;
  std::string failed_check;
  // For each vertex i, the steps that reduce e_iA to zero.
  std::vector<std::vector<DescentStep>> descents;
};

// Reduces T to zero by cones of right approximations by the shifted
// summands of M, always using the smallest shift with a nonzero map. Returns
// nullopt when the step budget runs out first.
template <class F>
std::optional<std::vector<DescentStep>> descend(const std::vector<ProjComplex<F>>& m, ProjComplex<F> t, int max_steps) {
  std::vector<DescentStep> steps;
  for (int step = 0; step < max_steps; ++step) {
    t = minimize(t);
    if (t.is_zero()) return steps;
    std::optional<int> best;
    for (const auto& s : m) {
      HomComplex<F> hc(s, to_module_complex(t));
      auto [lo, hi] = hc.window();
      for (int u = hi; u >= lo; --u) {
        if (best && -u >= *best) break;
        if (hc.hom(u).dim() > 0) {
          best = -u;
          break;
        }
      }
    }
    if (!best) return std::nullopt;
    std::vector<ProjComplex<F>> d;
    for (const auto& s : m) d.push_back(shift(s, *best));
    auto ap = minimal_approximation(t, d, Direction::Right);
    steps.push_back({*best, ap.index.size()});
    t = cone(ap.target, t, ap.map);
  }
  return std::nullopt;
}

// Generation certificate for a presilting object: the K_0 classes of the
// summands span Z^n, and every e_iA descends to zero along approximations.
template <class F>
SiltingVerdict is_silting(const ProjComplex<F>& x, int max_steps = 64, std::uint64_t seed = 0) {
  SiltingVerdict v;
  const auto& alg = x.algebra_ptr();
  if (!is_presilting(x)) {
    v.failed_check = "presilting";
    return v;
  }
  auto summands = basic_summands(x, seed);
  std::vector<std::vector<long>> classes;
  for (const auto& s : summands) classes.push_back(k0_class(s));
  if (!spans_lattice(classes, static_cast<std::size_t>(alg->vertex_count()))) {
    v.failed_check = "K0";
    return v;
  }
  for (int i = 0; i < alg->vertex_count(); ++i) {
    auto steps = descend(summands, stalk(alg, {i}, 0), max_steps);
    if (!steps) {
      v.failed_check = "descent at vertex " + std::to_string(i + 1);
      v.descents.clear();
      return v;
    }
    v.descents.push_back(std::move(*steps));
  }
  v.certified = true;
  return v;
}

}  // namespace silt
