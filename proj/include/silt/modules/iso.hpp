#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "silt/linalg/matrix.hpp"

namespace silt {

// Outcome of searching a linear family of block-diagonal maps for an
// invertible member. A negative answer is either proved (exact) or holds up to
// the stated failure probability.
template <class F>
struct InvertibleSearch {
  std::optional<std::vector<typename F::Elem>> coeffs;
  bool exact = true;
  double failure_bound = 0.0;
  std::string method;

  [[nodiscard]] bool found() const { return coeffs.has_value(); }
};

inline constexpr std::uint64_t kDefaultBudget = 200000;

namespace detail {

template <class F>
bool blocks_invertible(const F& f, const std::vector<std::vector<Matrix<F>>>& family, const std::vector<typename F::Elem>& c,
                       std::size_t nblocks, const std::vector<std::size_t>& only = {}) {
  auto check = [&](std::size_t b) {
    const auto& first = family[0][b];
    Matrix<F> m(f, first.rows(), first.cols());
    for (std::size_t j = 0; j < family.size(); ++j)
      if (!is_zero(c[j])) m += c[j] * family[j][b];
    return is_invertible(m);
  };
  if (!only.empty()) {
    for (auto b : only)
      if (!check(b)) return false;
    return true;
  }
  for (std::size_t b = 0; b < nblocks; ++b)
    if (!check(b)) return false;
  return true;
}

// Walks {0..top}^h in lexicographic order; returns false when exhausted.
inline bool next_grid_point(std::vector<std::int64_t>& pt, std::int64_t top) {
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (pt[i] < top) {
      ++pt[i];
      return true;
    }
    pt[i] = 0;
  }
  return false;
}

inline double grid_size(std::int64_t points_per_axis, std::size_t h) {
  return std::pow(static_cast<double>(points_per_axis), static_cast<double>(h));
}

}  // namespace detail

// family[j][b] is block b of the j-th spanning map. Searches for coefficients
// c with every block of sum_j c_j family[j] invertible.
template <class F>
InvertibleSearch<F> find_invertible(const F& f, const std::vector<std::vector<Matrix<F>>>& family, std::size_t nblocks,
                                    std::mt19937_64& rng, std::uint64_t budget = kDefaultBudget) {
  using K = typename F::Elem;
  InvertibleSearch<F> out;
  std::vector<std::size_t> sizes;
  if (!family.empty()) {
    for (std::size_t b = 0; b < nblocks; ++b) {
      const auto& m = family[0][b];
      if (m.rows() != m.cols()) {
        out.method = "shape";
        return out;
      }
      sizes.push_back(m.rows());
    }
  }
  if (family.empty()) {
    out.method = "empty family";
    return out;
  }
  std::size_t total = 0;
  for (auto s : sizes) total += s;
  const std::size_t h = family.size();

  auto try_coeffs = [&](const std::vector<K>& c) {
    if (detail::blocks_invertible(f, family, c, nblocks)) {
      out.coeffs = c;
      return true;
    }
    return false;
  };

  // Single members, then the plain sum.
  for (std::size_t j = 0; j < h; ++j) {
    std::vector<K> c(h, f.zero());
    c[j] = f.one();
    if (try_coeffs(c)) {
      out.method = "sweep";
      return out;
    }
  }
  if (h > 1 && try_coeffs(std::vector<K>(h, f.one()))) {
    out.method = "sweep";
    return out;
  }

  const std::int64_t bound = std::max<std::int64_t>(static_cast<std::int64_t>(total), 16);
  const double sample = f.sample_size(bound);
  auto random_trials = [&](int trials) {
    for (int t = 0; t < trials; ++t) {
      std::vector<K> c(h);
      for (auto& x : c) x = f.random(rng, bound);
      if (try_coeffs(c)) return true;
    }
    return false;
  };
  if (random_trials(8)) {
    out.method = "random";
    return out;
  }

  // Exact per-block test. The determinant of block b restricted to an
  // independent subfamily has degree size_b; it vanishes identically iff it
  // vanishes on a grid with size_b + 1 points per axis.
  const std::uint64_t p = f.characteristic();
  std::uint64_t spent = 0;
  bool grids_complete = true;
  for (std::size_t b = 0; b < nblocks; ++b) {
    const std::size_t s = sizes[b];
    if (s == 0) continue;
    std::vector<Vec<F>> flat;
    for (std::size_t j = 0; j < h; ++j) flat.push_back(family[j][b].flatten());
    auto idx = independent_subset(f, s * s, flat);
    if (idx.empty()) {
      out.method = "grid";
      return out;
    }
    std::int64_t top = static_cast<std::int64_t>(s);
    if (p != 0 && static_cast<std::uint64_t>(top) >= p) top = static_cast<std::int64_t>(p) - 1;
    if (detail::grid_size(top + 1, idx.size()) > static_cast<double>(budget - std::min(budget, spent))) {
      grids_complete = false;
      continue;
    }
    std::vector<std::int64_t> pt(idx.size(), 0);
    bool hit = false;
    do {
      ++spent;
      std::vector<K> c(h, f.zero());
      for (std::size_t i = 0; i < idx.size(); ++i) c[idx[i]] = f.from_int(pt[i]);
      if (detail::blocks_invertible(f, family, c, nblocks, {b})) {
        hit = true;
        break;
      }
    } while (detail::next_grid_point(pt, top));
    if (!hit) {
      // Over F_p with p <= size the grid is all of F_p^h: exhaustive as well.
      out.method = "grid";
      return out;
    }
  }

  // Every block admits an invertible member, so the product of determinants is
  // a nonzero polynomial of degree `total`.
  const bool sz_applies = p == 0 || p > total;
  if (grids_complete && sz_applies) {
    for (int round = 0; round < 64; ++round)
      if (random_trials(16)) {
        out.method = "grid+random";
        return out;
      }
  }
  if (p != 0 && detail::grid_size(static_cast<std::int64_t>(p), h) <= static_cast<double>(budget)) {
    std::vector<std::int64_t> pt(h, 0);
    do {
      std::vector<K> c(h);
      for (std::size_t i = 0; i < h; ++i) c[i] = f.from_int(pt[i]);
      if (try_coeffs(c)) {
        out.method = "exhaustive";
        return out;
      }
    } while (detail::next_grid_point(pt, static_cast<std::int64_t>(p) - 1));
    out.method = "exhaustive";
    return out;
  }

  const int trials = 64;
  if (random_trials(trials)) {
    out.method = "random";
    return out;
  }
  out.exact = false;
  out.method = "random";
  out.failure_bound = std::min(1.0, std::pow(static_cast<double>(total) / sample, trials + 8));
  return out;
}

}  // namespace silt
