#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "silt/complexes/complex.hpp"

namespace silt {

struct SerializationError : Error {
  using Error::Error;
};

// Runs of equal consecutive vertices as [vertex (1-based), multiplicity].
inline nlohmann::json term_runs(const std::vector<int>& t) {
  nlohmann::json runs = nlohmann::json::array();
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j] == t[i]) ++j;
    runs.push_back({t[i] + 1, j - i});
    i = j;
  }
  return runs;
}

template <class F>
nlohmann::json element_to_json(const Algebra<F>& a, const AlgElem<F>& e) {
  nlohmann::json v = nlohmann::json::array();
  for (int b = 0; b < a.dim(); ++b) v.push_back(a.field().format(e.coeff(b, a.field())));
  return v;
}

template <class F>
nlohmann::json to_json(const ProjComplex<F>& x) {
  const Algebra<F>& a = x.algebra();
  nlohmann::json j;
  j["algebra"] = a.label();
  j["field"] = a.field().name();
  nlohmann::json basis = nlohmann::json::array();
  for (int b = 0; b < a.dim(); ++b) basis.push_back(a.qualified_name(b));
  j["basis"] = basis;
  j["lo"] = x.lo();
  j["hi"] = x.hi();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : x.terms()) terms.push_back(term_runs(t));
  j["terms"] = terms;
  nlohmann::json diffs = nlohmann::json::array();
  for (const auto& d : x.diffs()) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t s = 0; s < d.rows(); ++s) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t r = 0; r < d.cols(); ++r) row.push_back(element_to_json(a, d(s, r)));
      rows.push_back(row);
    }
    diffs.push_back(rows);
  }
  j["differentials"] = diffs;
  return j;
}

template <class F>
ProjComplex<F> complex_from_json(const AlgebraPtr<F>& alg, const nlohmann::json& j) {
  const Algebra<F>& a = *alg;
  try {
    if (j.at("field").get<std::string>() != a.field().name()) throw SerializationError("complex is over a different field");
    const auto& basis = j.at("basis");
    if (basis.size() != static_cast<std::size_t>(a.dim())) throw SerializationError("basis size does not match the algebra");
    for (int b = 0; b < a.dim(); ++b)
      if (basis[static_cast<std::size_t>(b)].get<std::string>() != a.qualified_name(b))
        throw SerializationError("basis element " + std::to_string(b) + " does not match the algebra");
    const int lo = j.at("lo").get<int>();
    std::vector<std::vector<int>> terms;
    for (const auto& runs : j.at("terms")) {
      std::vector<int> t;
      for (const auto& run : runs) {
        const int v = run.at(0).get<int>() - 1;
        const auto m = run.at(1).get<std::size_t>();
        t.insert(t.end(), m, v);
      }
      terms.push_back(std::move(t));
    }
    std::vector<AlgMatrix<F>> diffs;
    const auto& dj = j.at("differentials");
    for (std::size_t i = 0; i < dj.size(); ++i) {
      if (i + 1 >= terms.size()) throw SerializationError("too many differentials");
      AlgMatrix<F> d(terms[i + 1].size(), terms[i].size());
      const auto& rows = dj[i];
      if (rows.size() != d.rows()) throw SerializationError("differential row count mismatch");
      for (std::size_t s = 0; s < d.rows(); ++s) {
        if (rows[s].size() != d.cols()) throw SerializationError("differential column count mismatch");
        for (std::size_t r = 0; r < d.cols(); ++r) {
          const auto& coeffs = rows[s][r];
          if (coeffs.size() != static_cast<std::size_t>(a.dim())) throw SerializationError("coefficient vector has the wrong length");
          Sparse<F> terms_sparse;
          for (int b = 0; b < a.dim(); ++b) {
            auto c = a.field().parse(coeffs[static_cast<std::size_t>(b)].get<std::string>());
            if (!is_zero(c)) terms_sparse.emplace_back(b, c);
          }
          d(s, r) = AlgElem<F>(std::move(terms_sparse));
        }
      }
      diffs.push_back(std::move(d));
    }
    return ProjComplex<F>(alg, lo, std::move(terms), std::move(diffs));
  } catch (const nlohmann::json::exception& e) {
    throw SerializationError(std::string("malformed complex JSON: ") + e.what());
  }
}

}  // namespace silt
