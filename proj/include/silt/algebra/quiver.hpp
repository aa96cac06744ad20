#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "silt/linalg/field.hpp"

namespace silt {

struct NonAdmissible : Error {
  using Error::Error;
};
struct NotFiniteDimensional : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};

// Vertices are 0-based here; everything user-facing prints them 1-based.
struct Arrow {
  std::string label;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int vertices) : n_(vertices) {
    if (vertices <= 0) throw NonAdmissible("a quiver needs at least one vertex");
  }

  int add_arrow(std::string label, int source, int target) {
    if (source < 0 || source >= n_ || target < 0 || target >= n_)
      throw IndexError("arrow '" + label + "' has an endpoint outside 1.." + std::to_string(n_));
    arrows_.push_back({std::move(label), source, target});
    return static_cast<int>(arrows_.size()) - 1;
  }

  [[nodiscard]] int vertex_count() const { return n_; }
  [[nodiscard]] int arrow_count() const { return static_cast<int>(arrows_.size()); }
  [[nodiscard]] const Arrow& arrow(int id) const { return arrows_.at(static_cast<std::size_t>(id)); }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }

  [[nodiscard]] std::vector<int> arrows_from(int v) const {
    std::vector<int> out;
    for (int a = 0; a < arrow_count(); ++a)
      if (arrows_[static_cast<std::size_t>(a)].source == v) out.push_back(a);
    return out;
  }
  [[nodiscard]] int max_out_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, static_cast<int>(arrows_from(v).size()));
    return best;
  }
  // Arrow with this label leaving v, if unique.
  [[nodiscard]] std::optional<int> find(const std::string& label, int from) const {
    std::optional<int> hit;
    for (int a = 0; a < arrow_count(); ++a) {
      const auto& ar = arrows_[static_cast<std::size_t>(a)];
      if (ar.label == label && ar.source == from) {
        if (hit) return std::nullopt;
        hit = a;
      }
    }
    return hit;
  }

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

// A path composed left to right; `start` pins down trivial paths.
struct Path {
  int start = 0;
  std::vector<int> arrows;

  [[nodiscard]] int end(const Quiver& q) const {
    int v = start;
    for (int a : arrows) {
      if (q.arrow(a).source != v) throw NonAdmissible("path is not composable");
      v = q.arrow(a).target;
    }
    return v;
  }
  [[nodiscard]] std::size_t length() const { return arrows.size(); }
  [[nodiscard]] std::string word(const Quiver& q) const {
    if (arrows.empty()) return "e" + std::to_string(start + 1);
    std::string s;
    for (int a : arrows) s += q.arrow(a).label;
    return s;
  }
  friend bool operator==(const Path&, const Path&) = default;
};

template <class F>
struct Relation {
  std::vector<std::pair<typename F::Elem, Path>> terms;
};

}  // namespace silt
