#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "silt/complexes/random.hpp"
#include "silt/silting/explore.hpp"
#include "silt/silting/serre.hpp"
#include "silt/silting/spherical.hpp"
#include "silt/verify/examples.hpp"
#include "silt/verify/standard.hpp"

namespace silt {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
};

// Tally of isomorphism verdicts: exact ones, randomized ones with the worst
// failure bound, and whether a negative answer came from an exhausted budget.
struct VerdictLog {
  std::size_t exact = 0;
  std::size_t randomized = 0;
  double worst_bound = 0.0;
  bool exhausted = false;

  void add(bool is_exact, double bound, bool positive) {
    if (is_exact) {
      ++exact;
      return;
    }
    ++randomized;
    worst_bound = std::max(worst_bound, bound);
    if (!positive) exhausted = true;
  }
  template <class R>
  void add(const R& r) {
    add(r.exact, r.failure_bound, r.isomorphic);
  }
  [[nodiscard]] std::string summary() const {
    std::ostringstream os;
    os << exact << " exact";
    if (randomized) os << ", " << randomized << " randomized (failure bound " << worst_bound << ")";
    return os.str();
  }
};

struct SectionResult {
  std::string section;
  int n = 0;
  bool applicable = true;
  bool pass = true;
  std::string expected;
  std::string computed;
  std::vector<std::string> failures;
  VerdictLog verdicts;
  double seconds = 0.0;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  void skip(const std::string& why) {
    applicable = false;
    computed = why;
  }
};

inline const std::vector<std::string>& section_names() {
  static const std::vector<std::string> names{"algebra",  "sphericality", "hom-window",  "homology",          "example",
                                              "invariance", "mutation",   "tau-inverse", "trivial-extension", "fingerprint"};
  return names;
}

namespace detail {

// Nonzero entries of a (shift, dimension) table as "{j:dim, ...}".
inline std::string table_str(const std::map<int, std::size_t>& t) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [j, d] : t) {
    os << (first ? "" : ", ") << j << ':' << d;
    first = false;
  }
  os << '}';
  return os.str();
}

inline std::map<int, std::size_t> nonzero(const std::vector<std::pair<int, std::size_t>>& rows) {
  std::map<int, std::size_t> out;
  for (auto [j, d] : rows)
    if (d) out[j] = d;
  return out;
}

// Alternating words in x, y from vertex s to vertex t of A_n, by brute force
// over all words of length t - s.
inline int alternating_paths(int s, int t) {
  const int len = t - s;
  if (len == 0) return 1;
  int count = 0;
  for (int w = 0; w < (1 << len); ++w) {
    bool ok = true;
    for (int i = 0; i + 1 < len; ++i)
      if (((w >> i) & 1) == ((w >> (i + 1)) & 1)) ok = false;
    count += ok;
  }
  return count;
}

template <class F>
ProjComplex<F> resolved(const Module<F>& m) {
  return resolution_complex(m);
}

}  // namespace detail

template <class F>
void section_algebra(SectionResult& r, const F& f, int n) {
  auto a = make_doubled_algebra(f, n);
  int paths = 0;
  for (int s = 0; s < n; ++s)
    for (int t = s; t < n; ++t) paths += detail::alternating_paths(s, t);
  auto gl = global_dimension(a, n + 1);
  auto te = trivial_extension(a);
  std::ostringstream exp, got;
  exp << "dim A = " << n * n << " (path count " << paths << "), gldim = " << n - 1 << ", dim T(A) = " << 2 * n * n;
  got << "dim A = " << a->dim() << ", gldim = " << (gl ? std::to_string(*gl) : "none") << ", dim T(A) = " << te->dim();
  r.check(a->dim() == n * n && paths == n * n, "dimension of A");
  r.check(gl && *gl == n - 1, "global dimension");
  r.check(te->dim() == 2 * n * n, "dimension of T(A)");
  if (n % 2 == 0) {
    auto pres = make_trivial_extension_presentation(f, n);
    got << ", cyclic presentation dim = " << pres->dim();
    r.check(pres->dim() == 2 * n * n, "dimension of the cyclic presentation");
  }
  r.expected = exp.str();
  r.computed = got.str();
}

template <class F>
void section_sphericality(SectionResult& r, const F& f, int n, const VerifyOptions& o) {
  auto st = standard_objects(f, n);
  const int d = n - 1;
  const bool even = n % 2 == 0;
  auto pe = detail::resolved(st.e);
  auto pae = detail::resolved(st.alpha_e);
  auto ee = detail::nonzero(hom_dimensions(pe, pe));
  auto eae = detail::nonzero(hom_dimensions(pe, pae));
  std::map<int, std::size_t> want_ee{{0, 1}}, want_eae;
  if (even)
    want_ee[d] = 1;
  else
    want_eae[d] = 1;
  r.check(ee == want_ee, "Ext(E, E)");
  r.check(eae == want_eae, "Ext(E, aE)");

  auto nu = nakayama(pe);
  std::vector<int> degrees;
  std::string iso = "not compared";
  for (int k = nu.lo; k <= nu.hi(); ++k) {
    auto h = homology(nu, k);
    if (h.is_zero()) continue;
    degrees.push_back(k);
    if (k != 1 - n) continue;
    auto res = is_isomorphic(h, even ? st.e : st.alpha_e, o.seed, o.budget);
    r.verdicts.add(res);
    iso = res.isomorphic ? (even ? "isomorphic to E" : "isomorphic to aE") : "not isomorphic";
    r.check(res.isomorphic, "Serre homology module");
  }
  r.check(degrees == std::vector<int>{1 - n}, "Serre homology degrees");
  const bool spherical = check_spherical(st.e, d, 64, o.seed).valid();
  r.check(spherical == even, "sphericity certificate");

  std::ostringstream exp, got;
  exp << (even ? "spherical" : "exceptional, not spherical") << "; Ext(E,E) " << detail::table_str(want_ee)
      << "; Ext(E,aE) " << detail::table_str(want_eae) << "; S(P_E) homology in degree " << 1 - n << " iso to "
      << (even ? "E" : "aE");
  const bool exceptional = ee == std::map<int, std::size_t>{{0, 1}};
  got << (spherical ? "spherical" : exceptional ? "exceptional, not spherical" : "not spherical") << "; Ext(E,E) " << detail::table_str(ee) << "; Ext(E,aE) "
      << detail::table_str(eae) << "; S(P_E) homology in degrees {";
  for (std::size_t i = 0; i < degrees.size(); ++i) got << (i ? ", " : "") << degrees[i];
  got << "} " << iso;
  r.expected = exp.str();
  r.computed = got.str();
}

namespace detail {

// The twist formulas need E to be d-spherical with d >= 2.
inline bool twist_formulas_apply(SectionResult& r, int n) {
  if (n % 2 != 0) {
    r.skip("E is not spherical for odd n; twist formulas not asserted");
    return false;
  }
  if (n - 1 < 2) {
    r.skip("d = 1 is outside the range d >= 2; twist formulas not asserted");
    return false;
  }
  return true;
}

}  // namespace detail

template <class F>
void section_hom_window(SectionResult& r, const F& f, int n, int max_m = 3) {
  if (!detail::twist_formulas_apply(r, n)) return;
  auto st = standard_objects(f, n);
  const int d = n - 1;
  auto cert = check_spherical(st.e, d);
  r.check(cert.valid(), "sphericity certificate");
  if (!cert.valid()) return;
  std::size_t tables = 0;
  for (int i = 0; i < n; ++i) {
    auto x = stalk(st.a, {i}, 0);
    for (int m = 0; m <= max_m; ++m) {
      if (m > 0) x = spherical_twist(cert, x);
      std::map<int, std::size_t> got;
      // Hom(P_E[j], X) = Hom(P_E, X[-j]).
      for (auto [t, dim] : hom_dimensions(cert.resolution, x))
        if (dim) got[-t] = dim;
      const int j = m * (1 - d) - d;
      r.check(got == std::map<int, std::size_t>{{j, 1}},
              "vertex " + std::to_string(i + 1) + ", m = " + std::to_string(m) + ": " + detail::table_str(got));
      ++tables;
    }
  }
  r.expected = "dim Hom(P_E[j], Phi^m(e_iA)) = 1 exactly at j = m(1-d)-d, d = " + std::to_string(d) +
               ", m = 0.." + std::to_string(max_m);
  r.computed = std::to_string(tables - r.failures.size()) + " of " + std::to_string(tables) + " tables match";
}

template <class F>
void section_homology(SectionResult& r, const F& f, int n, const VerifyOptions& o, int max_m = 3) {
  if (!detail::twist_formulas_apply(r, n)) return;
  auto st = standard_objects(f, n);
  const int d = n - 1;
  auto cert = check_spherical(st.e, d);
  r.check(cert.valid(), "sphericity certificate");
  if (!cert.valid()) return;
  std::size_t checked = 0;
  for (int i = 0; i < n; ++i) {
    auto x = stalk(st.a, {i}, 0);
    auto pi = projective(st.a, i);
    for (int m = 0; m <= max_m; ++m) {
      if (m > 0) x = spherical_twist(cert, x);
      const int lo = std::min(x.lo(), 0), hi = std::max(x.hi(), m * (d - 1));
      for (int k = lo; k <= hi; ++k) {
        auto h = homology(x, k);
        const bool at_e = k > 0 && k % (d - 1) == 0 && k / (d - 1) <= m;
        const std::string where =
            "vertex " + std::to_string(i + 1) + ", m = " + std::to_string(m) + ", degree " + std::to_string(k);
        if (k == 0 || at_e) {
          auto res = is_isomorphic(h, k == 0 ? pi : st.e, o.seed, o.budget);
          r.verdicts.add(res);
          r.check(res.isomorphic, where + ": homology " + h.dim_vector_str());
        } else {
          r.check(h.is_zero(), where + ": unexpected homology " + h.dim_vector_str());
        }
        ++checked;
      }
    }
  }
  r.expected = "H^0 = e_iA, H^{l(d-1)} = E for 1 <= l <= m, zero elsewhere; m = 0.." + std::to_string(max_m);
  r.computed = std::to_string(checked) + " homology modules compared, " + std::to_string(r.failures.size()) + " mismatches";
}

template <class F>
void section_example(SectionResult& r, const F& f, int n, const VerifyOptions& o) {
  if (n != 4) {
    r.skip("the displayed complexes are given for n = 4 only");
    return;
  }
  auto st = standard_objects(f, n);
  auto ce = check_spherical(st.e, 3);
  auto cae = check_spherical(st.alpha_e, 3);
  r.check(ce.valid() && cae.valid(), "sphericity certificates");
  if (!r.pass) return;
  auto sum = direct_sum(st.e, st.alpha_e);
  std::size_t matched = 0;
  for (const auto& disp : displayed_complexes()) {
    const auto want = build_displayed(st.a, disp);
    auto got = spherical_twist(ce, stalk(st.a, {disp.vertex - 1}, 0));
    if (disp.twists == 2) got = spherical_twist(cae, got);
    const bool profile = term_profile(want) == term_profile(got);
    r.check(profile, disp.label + ": terms " + describe(got) + " vs " + describe(want));
    auto iso = iso_complex(got, want, o.seed, o.budget);
    r.verdicts.add(iso);
    r.check(iso.isomorphic, disp.label + ": not isomorphic to the displayed complex");
    for (int k = got.lo(); k <= got.hi(); ++k) {
      auto h = homology(got, k);
      if (k == 0 || k == 2) {
        auto res = is_isomorphic(h, k == 0 ? projective(st.a, disp.vertex - 1) : (disp.twists == 2 ? sum : st.e),
                                 o.seed, o.budget);
        r.verdicts.add(res);
        r.check(res.isomorphic, disp.label + ": homology in degree " + std::to_string(k));
      } else {
        r.check(h.is_zero(), disp.label + ": homology in degree " + std::to_string(k));
      }
    }
    matched += profile && iso.isomorphic;
  }
  r.expected = "8 displayed complexes; H^0 = e_iA, H^2 = E (one twist) or E + aE (two twists)";
  r.computed = std::to_string(matched) + " of 8 complexes match";
}

template <class F>
void section_invariance(SectionResult& r, const F& f, int n, const VerifyOptions& o) {
  if (!detail::twist_formulas_apply(r, n)) return;
  auto st = standard_objects(f, n);
  auto ce = check_spherical(st.e, n - 1);
  auto cae = check_spherical(st.alpha_e, n - 1);
  r.check(ce.valid() && cae.valid(), "sphericity certificates");
  if (!r.pass) return;
  auto a = regular_stalk(st.a);
  auto phi1 = spherical_twist(ce, a);
  auto phi2 = spherical_twist(ce, phi1);
  auto tau = spherical_twist(cae, phi1);
  std::ostringstream got;
  auto test = [&](const ProjComplex<F>& x, bool want, const std::string& name) {
    auto res = alpha_invariant(x, st.eps, o.seed, o.budget);
    r.verdicts.add(res);
    r.check(res.isomorphic == want, name);
    got << name << ' ' << (res.isomorphic ? "invariant" : "not invariant") << "; ";
  };
  test(a, true, "A");
  test(phi1, false, "Phi(A)");
  test(phi2, false, "Phi^2(A)");
  test(tau, true, "Phi_aE Phi(A)");

  ExploreOptions eo;
  eo.seed = o.seed;
  auto g_a = explore(regular_object(st.a), 2, {st.eps}, eo);
  auto g_phi = explore(silting_object(phi1, o.seed), 1, {st.eps}, eo);
  r.check(g_a.complete && g_phi.complete, "exploration hit the node cap");
  std::size_t invariant = 0, clashes = 0;
  for (const auto& node : g_a.nodes) invariant += node.invariant[0] ? 1 : 0;
  for (const auto& u : g_a.nodes)
    for (const auto& v : g_phi.nodes) clashes += same_object(u.object, v.object, o.seed) ? 1 : 0;
  r.check(invariant == g_a.nodes.size(), "non-invariant node in the graph of A");
  r.check(clashes == 0, "graphs of A and Phi(A) share a node");
  got << g_a.nodes.size() << " nodes at depth <= 2 from A, " << invariant << " invariant; " << g_phi.nodes.size()
      << " nodes at depth <= 1 from Phi(A); " << clashes << " shared";
  r.expected = "A and Phi_aE Phi(A) invariant, Phi(A) and Phi^2(A) not; all nodes near A invariant and disjoint from those near Phi(A)";
  r.computed = got.str();
}

template <class F>
void section_mutation(SectionResult& r, const F& f, int n, const VerifyOptions& o, int sequences = 20) {
  auto st = standard_objects(f, n);
  std::mt19937_64 rng(o.seed ^ 0x5bd1e995u);
  std::size_t steps = 0, empty = 0, proper = 0;
  for (int s = 0; s < sequences; ++s) {
    auto cur = regular_object(st.a);
    const int len = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int step = 0; step < len; ++step) {
      const std::size_t count = cur.summands.size();
      auto mask = std::uniform_int_distribution<std::size_t>(0, (std::size_t{1} << count) - 1)(rng);
      Direction dir = std::uniform_int_distribution<int>(0, 1)(rng) ? Direction::Left : Direction::Right;
      // The first two sequences open with the empty selection, once per direction.
      if (s < 2 && step == 0) {
        mask = 0;
        dir = s == 0 ? Direction::Left : Direction::Right;
      }
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < count; ++i)
        if (mask >> i & 1) keep.push_back(i);
      empty += keep.empty();
      proper += !keep.empty() && keep.size() < count;
      auto next = mutate(cur, keep, dir, o.seed);
      const std::string where = "sequence " + std::to_string(s + 1) + " step " + std::to_string(step + 1);
      r.check(next.summands.size() == static_cast<std::size_t>(n), where + ": wrong number of summands");
      r.check(next.status == SiltingStatus::Known, where + ": silting status " + std::string(status_name(next.status)));
      r.check(is_presilting(next.total()), where + ": not presilting");
      r.check(summands_invariant(next, st.eps, o.seed), where + ": not invariant");
      std::vector<std::size_t> back_keep(keep.size());
      std::iota(back_keep.begin(), back_keep.end(), std::size_t{0});
      auto back = mutate(next, back_keep, dir == Direction::Left ? Direction::Right : Direction::Left, o.seed);
      r.check(same_object(back, cur, o.seed), where + ": round trip failed");
      cur = std::move(next);
      ++steps;
    }
  }
  r.expected = std::to_string(sequences) + " sequences: every step silting, invariant, and undone by the opposite mutation";
  r.computed = std::to_string(steps) + " steps (" + std::to_string(empty) + " empty, " + std::to_string(proper) +
               " proper selections), " + std::to_string(r.failures.size()) + " failures";
}

template <class F>
void section_tau_inverse(SectionResult& r, const F& f, int n, const VerifyOptions& o) {
  if (n != 4) {
    r.skip("the identification is asserted for n = 4 only");
    return;
  }
  auto st = standard_objects(f, n);
  auto ce = check_spherical(st.e, n - 1);
  auto cae = check_spherical(st.alpha_e, n - 1);
  r.check(ce.valid() && cae.valid(), "sphericity certificates");
  if (!r.pass) return;
  auto a = regular_stalk(st.a);
  auto y = spherical_twist(cae, spherical_twist(ce, a));
  std::vector<ProjComplex<F>> probes{ce.resolution};
  for (int i = 0; i < n; ++i) probes.push_back(stalk(st.a, {i}, 0));
  auto cmp = serre_compare(y, a, 1, probes, o.seed, o.budget);
  r.verdicts.add(cmp.exact, cmp.failure_bound, cmp.verdict == SerreVerdict::Confirmed);
  r.check(cmp.verdict == SerreVerdict::Confirmed, "verdict " + std::string(verdict_name(cmp.verdict)) + ": " + cmp.detail);
  r.check(cmp.witness.has_value(), "no witness");
  r.expected = "S(Phi_aE Phi(A)) = A[1], confirmed by a quasi-isomorphism";
  r.computed = std::string(verdict_name(cmp.verdict)) + " at stage " + cmp.stage + (cmp.witness ? " with witness" : "") +
               (cmp.method.empty() ? "" : " (" + cmp.method + ")");
}

template <class F>
void section_trivial_extension(SectionResult& r, const F& f, int n, const VerifyOptions& o) {
  if (n != 4) {
    r.skip("the induced complex is asserted for n = 4 only");
    return;
  }
  auto st = standard_objects(f, n);
  auto ce = check_spherical(st.e, n - 1);
  r.check(ce.valid(), "sphericity certificate");
  if (!r.pass) return;
  auto te = trivial_extension(st.a);
  auto eps_t = extend_to_trivial_extension(st.eps, te);
  auto f1 = induce_trivial_extension(spherical_twist(ce, regular_stalk(st.a)), te);
  const bool pres = is_presilting(f1);
  const auto end = homotopy_hom(f1, f1, 0).dim();
  auto inv = alpha_invariant(f1, eps_t, o.seed, o.budget);
  r.verdicts.add(inv);
  r.check(pres, "F_1 is not presilting");
  r.check(end == 32, "dim End(F_1)");
  r.check(!inv.isomorphic, "F_1 is invariant");
  r.expected = "presilting, dim End = 32, not invariant";
  r.computed = std::string(pres ? "presilting" : "not presilting") + ", dim End = " + std::to_string(end) + ", " +
               (inv.isomorphic ? "invariant" : "not invariant");
}

template <class F>
void section_fingerprint(SectionResult& r, const F& f, int n, const VerifyOptions& o, int count = 10) {
  if (n % 2 != 0) {
    r.skip("E is not spherical for odd n");
    return;
  }
  auto st = standard_objects(f, n);
  auto ce = check_spherical(st.e, n - 1);
  r.check(ce.valid(), "sphericity certificate");
  if (!r.pass) return;
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<ProjComplex<F>> xs, phis, backs;
  for (int i = 0; i < count; ++i) {
    xs.push_back(random_complex(st.a, rng));
    phis.push_back(spherical_twist(ce, xs.back()));
    backs.push_back(inverse_spherical_twist(ce, phis.back()));
  }
  std::size_t nonzero_tables = 0;
  for (int i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>((i + 1) % count), k = static_cast<std::size_t>(i);
    auto t0 = detail::nonzero(hom_dimensions(xs[k], xs[j]));
    auto t1 = detail::nonzero(hom_dimensions(phis[k], phis[j]));
    auto t2 = detail::nonzero(hom_dimensions(backs[k], backs[j]));
    nonzero_tables += !t0.empty();
    const std::string where = "pair " + std::to_string(i + 1) + ": ";
    r.check(t0 == t1, where + detail::table_str(t0) + " vs " + detail::table_str(t1) + " after the twist");
    r.check(t0 == t2, where + detail::table_str(t0) + " vs " + detail::table_str(t2) + " after the round trip");
    auto iso = iso_complex(backs[k], xs[k], o.seed, o.budget);
    r.verdicts.add(iso);
    r.check(iso.isomorphic, "complex " + std::to_string(i + 1) + ": round trip is not isomorphic");
  }
  r.expected = std::to_string(count) + " random complexes: Hom tables kept by Phi and by Phi^-1 Phi, Phi^-1 Phi X = X";
  r.computed = std::to_string(count) + " pairs compared (" + std::to_string(nonzero_tables) + " with nonzero tables), " +
               std::to_string(r.failures.size()) + " failures";
}

// Runs one named section for A_n. Unknown names throw std::invalid_argument.
template <class F>
SectionResult run_section(const std::string& name, const F& f, int n, const VerifyOptions& o = {}) {
  SectionResult r;
  r.section = name;
  r.n = n;
  const auto start = std::chrono::steady_clock::now();
  if (name == "algebra")
    section_algebra(r, f, n);
  else if (name == "sphericality")
    section_sphericality(r, f, n, o);
  else if (name == "hom-window")
    section_hom_window(r, f, n);
  else if (name == "homology")
    section_homology(r, f, n, o);
  else if (name == "example")
    section_example(r, f, n, o);
  else if (name == "invariance")
    section_invariance(r, f, n, o);
  else if (name == "mutation")
    section_mutation(r, f, n, o);
  else if (name == "tau-inverse")
    section_tau_inverse(r, f, n, o);
  else if (name == "trivial-extension")
    section_trivial_extension(r, f, n, o);
  else if (name == "fingerprint")
    section_fingerprint(r, f, n, o);
  else
    throw std::invalid_argument("unknown section '" + name + "'");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

struct Criterion {
  int id = 0;
  std::string name;
  std::string section;
  std::vector<int> sizes;
};

inline const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all{
      {1, "algebra-dimensions", "algebra", {2, 3, 4, 5}},
      {2, "spherical-even", "sphericality", {4, 6}},
      {3, "exceptional-odd", "sphericality", {3, 5}},
      {4, "twist-hom-window", "hom-window", {4}},
      {5, "twist-homology", "homology", {4}},
      {6, "example-complexes", "example", {4}},
      {7, "invariance-separation", "invariance", {4}},
      {8, "mutation-invariance", "mutation", {4}},
      {9, "tau-inverse", "tau-inverse", {4}},
      {10, "trivial-extension", "trivial-extension", {4}},
      {11, "twist-fingerprint", "fingerprint", {4}},
  };
  return all;
}

struct CriterionResult {
  Criterion criterion;
  std::vector<SectionResult> runs;
  double seconds = 0.0;

  // Every run must apply and pass; a skipped run does not count as success.
  [[nodiscard]] bool pass() const {
    return !runs.empty() && std::all_of(runs.begin(), runs.end(), [](const SectionResult& r) { return r.applicable && r.pass; });
  }
};

template <class F>
CriterionResult run_criterion(const Criterion& c, const F& f, const VerifyOptions& o = {}) {
  CriterionResult out{c, {}, 0.0};
  for (int n : c.sizes) {
    out.runs.push_back(run_section(c.section, f, n, o));
    out.seconds += out.runs.back().seconds;
  }
  return out;
}

}  // namespace silt
