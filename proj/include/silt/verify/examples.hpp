#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "silt/complexes/complex.hpp"

namespace silt {

// Element of A_n spelled as a word in x and y read from `start` (0-based);
// "0" is the zero element. Uses the arrow ids of doubled_linear_quiver.
template <class F>
AlgElem<F> word_element(const Algebra<F>& a, int start, std::string_view w) {
  if (w == "0") return {};
  Path p{start, {}};
  int v = start;
  for (char c : w) {
    if (c != 'x' && c != 'y') throw NonAdmissible("word letters must be x or y");
    p.arrows.push_back(2 * v + (c == 'y' ? 1 : 0));
    ++v;
  }
  return a.path_element(p);
}

using WordMatrix = std::vector<std::vector<std::string>>;

// Hand-entered complex over A_4 with 1-based summand vertices.
struct DisplayedComplex {
  std::string label;
  int vertex = 0;
  // 1 for Phi_E(e_i A), 2 for Phi_{aE} Phi_E(e_i A).
  int twists = 1;
  int lo = 0;
  std::vector<std::vector<int>> terms;
  std::vector<WordMatrix> diffs;
};

inline const std::vector<DisplayedComplex>& displayed_complexes() {
  static const WordMatrix tail_yy{{"y"}};
  static const WordMatrix row_0y{{"0", "y"}};
  static const WordMatrix diag_xy{{"x", "0"}, {"0", "y"}};
  static const WordMatrix sel_x_y{{"x", "0", "0"}, {"0", "0", "y"}};
  static const std::vector<DisplayedComplex> all{
      {"Phi_E(e_4A)", 4, 1, 0, {{3}, {2}, {1}}, {tail_yy, tail_yy}},
      {"Phi_E(e_3A)", 3, 1, -1, {{4}, {3, 3}, {2}, {1}}, {{{"x"}, {"y"}}, row_0y, tail_yy}},
      {"Phi_E(e_2A)", 2, 1, -1, {{4}, {2, 3}, {2}, {1}}, {{{"yx"}, {"y"}}, row_0y, tail_yy}},
      {"Phi_E(e_1A)", 1, 1, -1, {{4}, {1, 3}, {2}, {1}}, {{{"xyx"}, {"y"}}, row_0y, tail_yy}},
      {"Phi_aE Phi_E(e_4A)", 4, 2, -1, {{4}, {3, 3}, {2, 2}, {1, 1}}, {{{"x"}, {"y"}}, diag_xy, diag_xy}},
      {"Phi_aE Phi_E(e_3A)", 3, 2, -1, {{4, 4}, {3, 3, 3}, {2, 2}, {1, 1}},
       {{{"x", "0"}, {"y", "x"}, {"0", "y"}}, sel_x_y, diag_xy}},
      {"Phi_aE Phi_E(e_2A)", 2, 2, -1, {{4, 4}, {3, 2, 3}, {2, 2}, {1, 1}},
       {{{"x", "0"}, {"xy", "yx"}, {"0", "y"}}, sel_x_y, diag_xy}},
      {"Phi_aE Phi_E(e_1A)", 1, 2, -1, {{4, 4}, {3, 1, 3}, {2, 2}, {1, 1}},
       {{{"x", "0"}, {"yxy", "xyx"}, {"0", "y"}}, sel_x_y, diag_xy}},
  };
  return all;
}

// Entry (s, r) is read from the s-th summand vertex of the target term.
template <class F>
ProjComplex<F> build_displayed(const AlgebraPtr<F>& a, const DisplayedComplex& c) {
  std::vector<std::vector<int>> terms;
  for (const auto& t : c.terms) {
    std::vector<int> z;
    for (int v : t) z.push_back(v - 1);
    terms.push_back(std::move(z));
  }
  std::vector<AlgMatrix<F>> diffs;
  for (std::size_t k = 0; k < c.diffs.size(); ++k) {
    const auto& w = c.diffs[k];
    const auto& rows = terms[k + 1];
    AlgMatrix<F> m(rows.size(), terms[k].size());
    for (std::size_t s = 0; s < rows.size(); ++s)
      for (std::size_t r = 0; r < terms[k].size(); ++r) m(s, r) = word_element(*a, rows[s], w.at(s).at(r));
    diffs.push_back(std::move(m));
  }
  return ProjComplex<F>(a, c.lo, std::move(terms), std::move(diffs));
}

}  // namespace silt
