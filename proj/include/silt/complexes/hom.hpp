#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "silt/complexes/complex.hpp"

namespace silt {

// Degree-t maps X -> Y[t] modulo null-homotopic ones, as cycle
// representatives in the cochain coordinates of the Hom complex.
template <class F>
struct HomSpace {
  int shift = 0;
  std::vector<Vec<F>> basis;
  std::vector<Vec<F>> boundaries;
  std::size_t cochain_dim = 0;
  std::size_t cycle_dim = 0;

  [[nodiscard]] std::size_t dim() const { return basis.size(); }
};

// Hom complex from a complex of projectives X into a complex of modules Y.
// Cochains of degree t are families g^k_r in (Y^{k+t})_{a_r}, one for each
// summand e_{a_r} A of X^k, with differential
// (D g)^k = d_Y g^k - (-1)^t g^{k+1} d_X.
template <class F>
class HomComplex {
 public:
  HomComplex(ProjComplex<F> x, ModuleComplex<F> y) : x_(std::move(x)), y_(std::move(y)) {
    require_same_algebra(x_.algebra_ptr(), y_.alg);
  }

  [[nodiscard]] const ProjComplex<F>& source() const { return x_; }
  [[nodiscard]] const ModuleComplex<F>& target() const { return y_; }

  // Shifts t with possibly nonzero cochains.
  [[nodiscard]] std::pair<int, int> window() const {
    if (x_.is_zero() || y_.terms.empty()) return {0, -1};
    return {y_.lo - x_.hi(), y_.hi() - x_.lo()};
  }

  [[nodiscard]] std::size_t block_dim(int t, int k, std::size_t r) const {
    return static_cast<std::size_t>(y_.term_dim(k + t, x_.term(k)[r]));
  }

  // Offsets of the blocks (k, r), in order of k then r; last entry is the total.
  [[nodiscard]] std::vector<std::vector<std::size_t>> layout(int t, std::size_t* total = nullptr) const {
    std::vector<std::vector<std::size_t>> off;
    std::size_t acc = 0;
    for (int k = x_.lo(); k <= x_.hi(); ++k) {
      std::vector<std::size_t> row;
      for (std::size_t r = 0; r < x_.term(k).size(); ++r) {
        row.push_back(acc);
        acc += block_dim(t, k, r);
      }
      off.push_back(std::move(row));
    }
    if (total) *total = acc;
    return off;
  }

  [[nodiscard]] std::size_t cochain_dim(int t) const {
    std::size_t n = 0;
    static_cast<void>(layout(t, &n));
    return n;
  }

  [[nodiscard]] Matrix<F> differential(int t) const {
    const F& f = x_.algebra().field();
    std::size_t ncols = 0, nrows = 0;
    auto src = layout(t, &ncols);
    auto dst = layout(t + 1, &nrows);
    Matrix<F> m(f, nrows, ncols);
    const typename F::Elem sign = (t % 2 == 0) ? -f.one() : f.one();
    for (int k = x_.lo(); k <= x_.hi(); ++k) {
      const auto ki = static_cast<std::size_t>(k - x_.lo());
      const auto& xt = x_.term(k);
      for (std::size_t r = 0; r < xt.size(); ++r) {
        const int a = xt[r];
        if (block_dim(t + 1, k, r) == 0) continue;
        const std::size_t row0 = dst[ki][r];
        if (block_dim(t, k, r) > 0) m.set_block(row0, src[ki][r], y_.diff_at(k + t, a));
        if (k < x_.hi() && y_.in_range(k + t + 1)) {
          const auto dx = x_.diff(k);
          const Module<F>& yt = y_.terms[static_cast<std::size_t>(k + t + 1 - y_.lo)];
          const auto& next = x_.term(k + 1);
          for (std::size_t s = 0; s < next.size(); ++s) {
            const auto& p = dx(s, r);
            if (p.is_zero() || block_dim(t, k + 1, s) == 0) continue;
            Matrix<F> act = sign * yt.action_of(p, next[s], a);
            const std::size_t col0 = src[ki + 1][s];
            for (std::size_t i = 0; i < act.rows(); ++i)
              for (std::size_t j = 0; j < act.cols(); ++j)
                if (!is_zero(act(i, j))) m(row0 + i, col0 + j) += act(i, j);
          }
        }
      }
    }
    return m;
  }

  [[nodiscard]] HomSpace<F> hom(int t) const {
    const F& f = x_.algebra().field();
    HomSpace<F> h;
    h.shift = t;
    const std::size_t n = cochain_dim(t);
    h.cochain_dim = n;
    if (n == 0) return h;
    Matrix<F> d = differential(t);
    std::vector<Vec<F>> cycles;
    if (d.rows() == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        Vec<F> e(n, f.zero());
        e[i] = f.one();
        cycles.push_back(std::move(e));
      }
    } else {
      cycles = kernel_basis(d);
    }
    h.cycle_dim = cycles.size();
    SpanBuilder<F> span(f, n);
    Matrix<F> prev = differential(t - 1);
    for (std::size_t c = 0; c < prev.cols(); ++c) {
      auto col = prev.column(c);
      if (span.add(col)) h.boundaries.push_back(std::move(col));
    }
    for (auto& z : cycles)
      if (span.add(z)) h.basis.push_back(std::move(z));
    return h;
  }

 private:
  ProjComplex<F> x_;
  ModuleComplex<F> y_;
};

template <class F>
HomSpace<F> homotopy_hom(const ProjComplex<F>& x, const ModuleComplex<F>& y, int t) {
  return HomComplex<F>(x, y).hom(t);
}

template <class F>
HomSpace<F> homotopy_hom(const ProjComplex<F>& x, const ProjComplex<F>& y, int t) {
  return HomComplex<F>(x, to_module_complex(y)).hom(t);
}

// dim Hom(X, Y[t]) for every t in the window.
template <class F>
std::vector<std::pair<int, std::size_t>> hom_dimensions(const ProjComplex<F>& x, const ProjComplex<F>& y) {
  HomComplex<F> hc(x, to_module_complex(y));
  std::vector<std::pair<int, std::size_t>> out;
  auto [lo, hi] = hc.window();
  for (int t = lo; t <= hi; ++t) out.emplace_back(t, hc.hom(t).dim());
  return out;
}

// Cochain coordinates to components X^k -> Y^{k+t} for a projective Y.
template <class F>
ChainMap<F> chain_map_from(const ProjComplex<F>& x, const ProjComplex<F>& y, int t, const Vec<F>& v) {
  const Algebra<F>& a = x.algebra();
  ChainMap<F> out{t, x.lo(), {}};
  std::size_t pos = 0;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    const auto& xt = x.term(k);
    const auto& yt = y.term(k + t);
    AlgMatrix<F> c(yt.size(), xt.size());
    for (std::size_t r = 0; r < xt.size(); ++r) {
      auto off = projective_offsets(a, yt, xt[r]);
      for (std::size_t s = 0; s < yt.size(); ++s) c(s, r) = element_from_coords(a, yt[s], xt[r], v, pos + off[s]);
      pos += off.back();
    }
    out.comps.push_back(std::move(c));
  }
  return out;
}

template <class F>
Vec<F> cochain_of(const ProjComplex<F>& x, const ProjComplex<F>& y, const ChainMap<F>& g) {
  const Algebra<F>& a = x.algebra();
  Vec<F> v;
  for (int k = x.lo(); k <= x.hi(); ++k) {
    const auto& xt = x.term(k);
    const auto& yt = y.term(k + g.shift);
    auto c = g.comp(k, x, y);
    for (std::size_t r = 0; r < xt.size(); ++r)
      for (std::size_t s = 0; s < yt.size(); ++s)
        for (int b : a.between(yt[s], xt[r])) v.push_back(c(s, r).coeff(b, a.field()));
  }
  return v;
}

template <class F>
std::vector<ChainMap<F>> hom_basis_maps(const ProjComplex<F>& x, const ProjComplex<F>& y, const HomSpace<F>& h) {
  std::vector<ChainMap<F>> out;
  for (const auto& v : h.basis) out.push_back(chain_map_from(x, y, h.shift, v));
  return out;
}

// Coordinates of a cycle in the basis of the homotopy classes.
template <class F>
class HomCoordinates {
 public:
  HomCoordinates(const F& field, const HomSpace<F>& h) : dim_(h.dim()) {
    std::vector<Vec<F>> cols = h.basis;
    cols.insert(cols.end(), h.boundaries.begin(), h.boundaries.end());
    if (!cols.empty()) solver_ = LinearSolver<F>(Matrix<F>::from_columns(field, h.cochain_dim, cols));
  }

  [[nodiscard]] std::optional<Vec<F>> of(const Vec<F>& cycle) const {
    if (!solver_) return is_zero_vec<F>(cycle) ? std::optional<Vec<F>>(Vec<F>{}) : std::nullopt;
    auto c = solver_->solve(cycle);
    if (!c) return std::nullopt;
    return Vec<F>(c->begin(), c->begin() + static_cast<long>(dim_));
  }

 private:
  std::size_t dim_;
  std::optional<LinearSolver<F>> solver_;
};

}  // namespace silt
