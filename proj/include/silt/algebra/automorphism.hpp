#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "silt/algebra/algebra.hpp"

namespace silt {

struct RelationNotPreserved : Error {
  using Error::Error;
};

// Algebra automorphism stored as its matrix on the basis (column b holds the
// coordinates of sigma(b)) together with the induced vertex permutation.
template <class F>
class AlgebraAutomorphism {
 public:
  AlgebraAutomorphism() = default;
  AlgebraAutomorphism(AlgebraPtr<F> alg, std::vector<int> vertex_perm, Matrix<F> matrix, std::string name)
      : alg_(std::move(alg)), perm_(std::move(vertex_perm)), mat_(std::move(matrix)), name_(std::move(name)) {
    const auto d = static_cast<std::size_t>(alg_->dim());
    if (mat_.rows() != d || mat_.cols() != d) throw DimensionMismatch("automorphism matrix has the wrong size");
    if (!is_invertible(mat_)) throw RelationNotPreserved("automorphism matrix is singular");
    for (int b = 0; b < alg_->dim(); ++b)
      for (int c = 0; c < alg_->dim(); ++c)
        if (apply(alg_->mul(alg_->unit(b), alg_->unit(c))) != alg_->mul(image(b), image(c)))
          throw RelationNotPreserved("map is not multiplicative on basis pair (" + alg_->basis(b).name + ", " +
                                     alg_->basis(c).name + ")");
  }

  static AlgebraAutomorphism identity(AlgebraPtr<F> alg) {
    std::vector<int> perm(static_cast<std::size_t>(alg->vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    auto m = Matrix<F>::identity(alg->field(), static_cast<std::size_t>(alg->dim()));
    return AlgebraAutomorphism(alg, std::move(perm), std::move(m), "id");
  }

  [[nodiscard]] const AlgebraPtr<F>& algebra() const { return alg_; }
  [[nodiscard]] const Matrix<F>& matrix() const { return mat_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int vertex_image(int v) const { return perm_.at(static_cast<std::size_t>(v)); }
  [[nodiscard]] const std::vector<int>& vertex_permutation() const { return perm_; }
  [[nodiscard]] bool fixes_vertices() const {
    for (std::size_t v = 0; v < perm_.size(); ++v)
      if (perm_[v] != static_cast<int>(v)) return false;
    return true;
  }
  [[nodiscard]] bool is_identity() const {
    return mat_ == Matrix<F>::identity(alg_->field(), static_cast<std::size_t>(alg_->dim()));
  }

  [[nodiscard]] AlgElem<F> image(int b) const {
    Sparse<F> t;
    for (std::size_t r = 0; r < mat_.rows(); ++r)
      if (!is_zero(mat_(r, static_cast<std::size_t>(b)))) t.emplace_back(static_cast<int>(r), mat_(r, static_cast<std::size_t>(b)));
    return AlgElem<F>(std::move(t));
  }
  [[nodiscard]] AlgElem<F> apply(const AlgElem<F>& a) const {
    AlgElem<F> out;
    for (const auto& [b, c] : a.terms) out += c * image(b);
    return out;
  }

  [[nodiscard]] AlgebraAutomorphism inverse() const {
    std::vector<int> inv(perm_.size());
    for (std::size_t v = 0; v < perm_.size(); ++v) inv[static_cast<std::size_t>(perm_[v])] = static_cast<int>(v);
    return AlgebraAutomorphism(alg_, std::move(inv), silt::inverse(mat_), name_ + "^-1");
  }
  // (this o other)(a) = this(other(a))
  [[nodiscard]] AlgebraAutomorphism compose(const AlgebraAutomorphism& other) const {
    std::vector<int> perm(perm_.size());
    for (std::size_t v = 0; v < perm_.size(); ++v) perm[v] = perm_[static_cast<std::size_t>(other.perm_[v])];
    return AlgebraAutomorphism(alg_, std::move(perm), mat_ * other.mat_, name_ + "*" + other.name_);
  }

 private:
  AlgebraPtr<F> alg_;
  std::vector<int> perm_;
  Matrix<F> mat_;
  std::string name_;
};

// Automorphism of a path-algebra presentation induced by an arrow bijection
// that preserves endpoints.
template <class F>
AlgebraAutomorphism<F> automorphism_from_arrows(const AlgebraPtr<F>& alg, const std::vector<int>& arrow_map,
                                                std::string name) {
  const Quiver& q = alg->quiver();
  if (!alg->is_path_algebra()) throw NonAdmissible("arrow-induced automorphisms need a path-algebra presentation");
  if (static_cast<int>(arrow_map.size()) != q.arrow_count()) throw IndexError("arrow map has the wrong length");
  std::vector<bool> hit(arrow_map.size(), false);
  for (std::size_t a = 0; a < arrow_map.size(); ++a) {
    const int t = arrow_map[a];
    if (t < 0 || t >= q.arrow_count() || hit[static_cast<std::size_t>(t)]) throw IndexError("arrow map is not a bijection");
    hit[static_cast<std::size_t>(t)] = true;
    if (q.arrow(t).source != q.arrow(static_cast<int>(a)).source || q.arrow(t).target != q.arrow(static_cast<int>(a)).target)
      throw IndexError("arrow map does not preserve endpoints of '" + q.arrow(static_cast<int>(a)).label + "'");
  }
  auto image_of_path = [&](const Path& p) {
    Path img{p.start, {}};
    for (int a : p.arrows) img.arrows.push_back(arrow_map[static_cast<std::size_t>(a)]);
    return alg->path_element(img);
  };
  for (const auto& r : alg->relations()) {
    AlgElem<F> sum;
    for (const auto& [c, p] : r.terms) sum += c * image_of_path(p);
    if (!sum.is_zero()) throw RelationNotPreserved("a relation starting at vertex " + std::to_string(r.terms[0].second.start + 1) +
                                                   " is not mapped to zero");
  }
  const auto d = static_cast<std::size_t>(alg->dim());
  Matrix<F> m(alg->field(), d, d);
  for (int b = 0; b < alg->dim(); ++b) {
    const auto& info = alg->basis(b);
    auto img = image_of_path(Path{info.source, info.word});
    for (const auto& [k, c] : img.terms) m(static_cast<std::size_t>(k), static_cast<std::size_t>(b)) = c;
  }
  std::vector<int> perm(static_cast<std::size_t>(alg->vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  return AlgebraAutomorphism<F>(alg, std::move(perm), std::move(m), std::move(name));
}

// Arrow bijection exchanging the arrows labelled x and y between the same
// pair of vertices.
inline std::vector<int> swap_xy_arrows(const Quiver& q) {
  std::vector<int> map(static_cast<std::size_t>(q.arrow_count()));
  std::iota(map.begin(), map.end(), 0);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto& ar = q.arrow(a);
    if (ar.label != "x") continue;
    for (int b = 0; b < q.arrow_count(); ++b) {
      const auto& br = q.arrow(b);
      if (br.label == "y" && br.source == ar.source && br.target == ar.target) {
        map[static_cast<std::size_t>(a)] = b;
        map[static_cast<std::size_t>(b)] = a;
      }
    }
  }
  return map;
}

}  // namespace silt
