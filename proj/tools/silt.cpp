#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "silt/complexes/serialize.hpp"
#include "silt/io/algebra_file.hpp"
#include "silt/silting/explore.hpp"
#include "silt/verify/criteria.hpp"

namespace {

using nlohmann::json;
using namespace silt;

constexpr const char* kSchema = "silt-report/1";

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudgetExhausted = 3 };

struct InputError : Error {
  using Error::Error;
};

struct Options {
  std::string command;
  std::vector<std::string> argv;
  std::string file;
  std::string field;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t budget = kDefaultBudget;
  bool budget_given = false;
  bool as_json = false;
  std::string out;

  std::string module, object = "A", target = "A", left, right, keep, direction = "left", dot, sections;
  int d = 0, power = 1, depth = 1, n = 4;
  std::size_t max_nodes = 500;
  bool extended = false;
};

// Accumulates the payload, the human-readable lines and the provenance of
// every isomorphism verdict for one command.
struct Report {
  json result = json::object();
  json verdicts = json::array();
  std::vector<std::string> lines;
  int exit = kOk;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;

  void say(const std::string& s) { lines.push_back(s); }
  void fail(int code) { exit = std::max(exit, code); }
  void verdict(const std::string& what, bool positive, bool exact, double bound, const std::string& method) {
    json v{{"what", what}, {"result", positive}, {"exact", exact}, {"method", method}};
    if (!exact) v["failure_bound"] = bound, v["seed"] = seed, v["budget"] = budget;
    verdicts.push_back(v);
    if (!exact && !positive) fail(kBudgetExhausted);
  }
  template <class R>
  void verdict(const std::string& what, const R& r) {
    verdict(what, r.isomorphic, r.exact, r.failure_bound, r.method);
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string dims_str(const std::vector<int>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::string hom_table_str(const std::vector<std::pair<int, std::size_t>>& rows) {
  std::string s;
  for (auto [t, d] : rows)
    if (d) s += (s.empty() ? "" : ", ") + std::to_string(t) + ":" + std::to_string(d);
  return "{" + s + "}";
}

json hom_table_json(const std::vector<std::pair<int, std::size_t>>& rows) {
  json j = json::object();
  for (auto [t, d] : rows) j[std::to_string(t)] = d;
  return j;
}

template <class F>
F make_field(const std::string& spec);

template <>
RationalField make_field<RationalField>(const std::string&) {
  return {};
}

template <>
PrimeField make_field<PrimeField>(const std::string& spec) {
  return PrimeField(static_cast<std::uint32_t>(std::stoul(spec.substr(3))));
}

template <class F>
class Session {
 public:
  Session(const Options& o, const AlgebraFile* file, const F& f) : opt_(o), f_(f) {
    if (file) {
      loaded_ = load_algebra(*file, f);
      if (!o.seed_given && file->options.count("seed")) seed_ = static_cast<std::uint64_t>(file->options.at("seed"));
      if (!o.budget_given && file->options.count("budget"))
        budget_ = static_cast<std::uint64_t>(file->options.at("budget"));
    }
    report_.seed = seed_;
    report_.budget = budget_;
  }

  Report run() {
    const auto& c = opt_.command;
    if (c == "info") info();
    else if (c == "resolve") resolve();
    else if (c == "hom") hom();
    else if (c == "twist") twist();
    else if (c == "mutate") mutate_cmd();
    else if (c == "explore") explore_cmd();
    else if (c == "check") check();
    else if (c == "induce") induce();
    else if (c == "paper-verify") paper_verify();
    return std::move(report_);
  }

 private:
  const AlgebraPtr<F>& alg() const { return loaded_.alg; }

  const Module<F>& named_module(const std::string& name) const {
    if (const auto* m = loaded_.module(name)) return *m;
    throw InputError("no module named '" + name + "' in the algebra file");
  }

  // A | e<i> | <module> | @file.json, optionally followed by [shift].
  ProjComplex<F> object(std::string spec) const {
    int s = 0;
    if (auto open = spec.find('['); open != std::string::npos) {
      if (spec.back() != ']') throw InputError("bad shift in object '" + spec + "'");
      try {
        s = std::stoi(spec.substr(open + 1, spec.size() - open - 2));
      } catch (const std::exception&) {
        throw InputError("bad shift in object '" + spec + "'");
      }
      spec = spec.substr(0, open);
    }
    ProjComplex<F> x;
    if (spec == "A") {
      x = regular_stalk(alg());
    } else if (spec.size() > 1 && spec[0] == 'e' && std::all_of(spec.begin() + 1, spec.end(), ::isdigit)) {
      const int v = std::stoi(spec.substr(1));
      if (v < 1 || v > alg()->vertex_count()) throw InputError("vertex out of range in '" + spec + "'");
      x = stalk(alg(), {v - 1}, 0);
    } else if (!spec.empty() && spec[0] == '@') {
      try {
        x = complex_from_json(alg(), json::parse(read_file(spec.substr(1))));
      } catch (const json::exception& e) {
        throw InputError(spec.substr(1) + ": " + e.what());
      }
    } else {
      x = resolution_complex(named_module(spec));
    }
    return shift(x, s);
  }

  SiltingObject<F> silting(const std::string& spec) const {
    if (spec == "A") return regular_object(alg());
    return silting_object(object(spec), seed_);
  }

  json summands_json(const SiltingObject<F>& m) const {
    json arr = json::array();
    for (const auto& s : m.summands) arr.push_back({{"description", describe(s)}, {"complex", to_json(s)}});
    return arr;
  }

  void list_summands(const SiltingObject<F>& m) {
    for (std::size_t i = 0; i < m.summands.size(); ++i)
      report_.say("  " + std::to_string(i + 1) + ". " + describe(m.summands[i]));
  }

  void info() {
    const auto& a = *alg();
    const int n = a.vertex_count();
    auto& r = report_.result;
    r["name"] = a.label();
    r["field"] = f_.name();
    r["vertices"] = n;
    r["arrows"] = a.quiver().arrow_count();
    r["dimension"] = a.dim();
    json basis = json::array();
    for (int b = 0; b < a.dim(); ++b) {
      const auto& bi = a.basis(b);
      basis.push_back({{"name", a.qualified_name(b)}, {"source", bi.source + 1}, {"target", bi.target + 1}, {"length", bi.length}});
    }
    r["basis"] = basis;
    json pairs = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j) row.push_back(a.between(i, j).size());
      pairs.push_back(row);
    }
    r["e_i A e_j"] = pairs;
    const int cap = 2 * n + 2;
    auto gl = global_dimension(alg(), cap);
    r["global_dimension"] = gl ? json(*gl) : json(nullptr);
    r["global_dimension_cap"] = cap;
    json autos = json::array(), mods = json::object();
    for (const auto& s : loaded_.automorphisms) autos.push_back(s.name());
    for (const auto& [name, m] : loaded_.modules) mods[name] = m.dims();
    r["automorphisms"] = autos;
    r["modules"] = mods;

    report_.say(a.label() + " over " + f_.name() + ": " + std::to_string(n) + " vertices, " +
                std::to_string(a.quiver().arrow_count()) + " arrows");
    report_.say("dimension " + std::to_string(a.dim()));
    report_.say("global dimension " + (gl ? std::to_string(*gl) : "> " + std::to_string(cap)));
    report_.say("dim e_i A e_j (row i, column j):");
    for (int i = 0; i < n; ++i) {
      std::string line = "  ";
      for (int j = 0; j < n; ++j) line += (j ? " " : "") + std::to_string(a.between(i, j).size());
      report_.say(line);
    }
    std::string names;
    for (int b = 0; b < a.dim(); ++b) names += (b ? " " : "") + a.qualified_name(b);
    report_.say("basis: " + names);
    for (const auto& s : loaded_.automorphisms) report_.say("automorphism " + s.name());
    for (const auto& [name, m] : loaded_.modules) report_.say("module " + name + " dims " + dims_str(m.dims()));
  }

  void resolve() {
    const auto& m = named_module(opt_.module);
    auto p = resolution_complex(m);
    report_.result["module"] = opt_.module;
    report_.result["projective_dimension"] = p.is_zero() ? 0 : -p.lo();
    report_.result["resolution"] = to_json(p);
    report_.result["description"] = describe(p);
    report_.say("module " + opt_.module + " dims " + dims_str(m.dims()));
    report_.say("minimal projective resolution " + describe(p));
    report_.say("projective dimension " + std::to_string(p.is_zero() ? 0 : -p.lo()));
  }

  void hom() {
    auto x = object(opt_.left), y = object(opt_.right);
    auto rows = hom_dimensions(x, y);
    report_.result["source"] = opt_.left;
    report_.result["target"] = opt_.right;
    report_.result["dimensions"] = hom_table_json(rows);
    report_.say("dim Hom(" + opt_.left + ", " + opt_.right + "[t]):");
    for (auto [t, d] : rows) report_.say("  t = " + std::to_string(t) + ": " + std::to_string(d));
  }

  void certificate_report(const SphericalCertificate<F>& c, const std::string& name) {
    json cj;
    cj["module"] = name;
    cj["d"] = c.d;
    cj["ext"] = hom_table_json(c.ext);
    cj["ext_ok"] = c.ext_ok;
    report_.say("certificate for " + name + " with d = " + std::to_string(c.d) + ": " + (c.valid() ? "valid" : "invalid"));
    report_.say("  Ext table " + hom_table_str(c.ext) + (c.ext_ok ? "" : " (not spherical)"));
    json sh = json::array();
    for (const auto& [k, h] : c.serre_homology) {
      json e{{"degree", k}, {"dims", h.dims()}};
      json iso = json::array();
      for (const auto& [mn, mm] : loaded_.modules) {
        if (mm.dims() != h.dims()) continue;
        auto res = is_isomorphic(h, mm, seed_, budget_);
        report_.verdict("Serre homology in degree " + std::to_string(k) + " vs " + mn, res);
        if (res.isomorphic) iso.push_back(mn);
      }
      e["isomorphic_to"] = iso;
      sh.push_back(e);
      std::string names;
      for (const auto& s : iso) names += (names.empty() ? "" : ", ") + s.get<std::string>();
      report_.say("  Serre homology in degree " + std::to_string(k) + ": dims " + dims_str(h.dims()) +
                  (names.empty() ? "" : ", isomorphic to " + names));
    }
    cj["serre_homology"] = sh;
    cj["serre_ok"] = c.serre_ok;
    cj["valid"] = c.valid();
    report_.result["certificate"] = cj;
    if (!c.serre_ok) report_.say("  Serre condition fails: S(P) is not " + name + "[" + std::to_string(-c.d) + "]");
  }

  void invariance_report(const ProjComplex<F>& x, const std::string& label) {
    json inv = json::object();
    for (const auto& s : loaded_.automorphisms) {
      auto res = alpha_invariant(x, s, seed_, budget_);
      report_.verdict(label + " invariant under " + s.name(), res);
      inv[s.name()] = res.isomorphic;
      report_.say("  " + s.name() + ": " + (res.isomorphic ? "invariant" : "not invariant") + " (" + res.method + ")");
    }
    report_.result["invariant"] = inv;
  }

  void twist() {
    const auto& m = named_module(opt_.module);
    auto cert = check_spherical(m, opt_.d, 64, seed_);
    certificate_report(cert, opt_.module);
    if (!cert.valid()) {
      report_.fail(kVerifyFailed);
      return;
    }
    auto x = twist_power(cert, object(opt_.target), opt_.power);
    report_.result["power"] = opt_.power;
    report_.result["target"] = opt_.target;
    report_.result["complex"] = to_json(x);
    report_.result["description"] = describe(x);
    report_.say("Phi^" + std::to_string(opt_.power) + "(" + opt_.target + ") = " + describe(x));
    auto dec = decompose_complex(x, seed_);
    json parts = json::array();
    report_.say("summands:");
    for (const auto& s : dec.summands) {
      json hj = json::object();
      std::string hs;
      for (int k = s.lo(); k <= s.hi(); ++k) {
        auto h = homology(s, k);
        if (h.is_zero()) continue;
        hj[std::to_string(k)] = h.dims();
        hs += " H^" + std::to_string(k) + "=" + dims_str(h.dims());
      }
      parts.push_back({{"description", describe(s)}, {"homology", hj}});
      report_.say("  " + describe(s) + hs);
    }
    report_.result["summands"] = parts;
    json hom = json::object();
    report_.say("homology:");
    for (int k = x.lo(); k <= x.hi(); ++k) {
      auto h = homology(x, k);
      if (h.is_zero()) continue;
      json e{{"dims", h.dims()}};
      json iso = json::array();
      for (const auto& [mn, mm] : loaded_.modules) {
        if (mm.dims() != h.dims()) continue;
        auto res = is_isomorphic(h, mm, seed_, budget_);
        report_.verdict("H^" + std::to_string(k) + " vs " + mn, res);
        if (res.isomorphic) iso.push_back(mn);
      }
      e["isomorphic_to"] = iso;
      hom[std::to_string(k)] = e;
      std::string names;
      for (const auto& s : iso) names += (names.empty() ? "" : ", ") + s.get<std::string>();
      report_.say("  H^" + std::to_string(k) + ": " + dims_str(h.dims()) + (names.empty() ? "" : " = " + names));
    }
    report_.result["homology"] = hom;
    report_.say("invariance:");
    invariance_report(x, "twist");
  }

  std::vector<std::size_t> selection(std::size_t count) const {
    std::vector<std::size_t> keep;
    if (opt_.keep.empty() || opt_.keep == "none") return keep;
    std::stringstream ss(opt_.keep);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        const long v = std::stol(item);
        if (v < 1 || static_cast<std::size_t>(v) > count) throw InputError("summand index " + item + " out of range");
        keep.push_back(static_cast<std::size_t>(v - 1));
      } catch (const std::invalid_argument&) {
        throw InputError("bad summand index '" + item + "'");
      }
    }
    return keep;
  }

  Direction direction() const {
    if (opt_.direction == "left" || opt_.direction == "+") return Direction::Left;
    if (opt_.direction == "right" || opt_.direction == "-") return Direction::Right;
    throw InputError("direction must be left or right");
  }

  void mutate_cmd() {
    auto m = silting(opt_.object);
    auto keep = selection(m.summands.size());
    report_.say("source " + opt_.object + ":");
    list_summands(m);
    auto next = mutate(m, keep, direction(), seed_);
    json kj = json::array();
    for (auto k : keep) kj.push_back(k + 1);
    report_.result["source"] = summands_json(m);
    report_.result["keep"] = kj;
    report_.result["direction"] = direction_name(direction());
    report_.result["summands"] = summands_json(next);
    report_.result["status"] = status_name(next.status);
    report_.say(std::string(direction_name(direction())) + " mutation keeping {" + opt_.keep + "}:");
    list_summands(next);
    report_.say("status " + std::string(status_name(next.status)));
  }

  void explore_cmd() {
    ExploreOptions eo;
    eo.extended = opt_.extended;
    eo.max_nodes = opt_.max_nodes;
    eo.seed = seed_;
    auto g = explore(silting(opt_.object), opt_.depth, loaded_.automorphisms, eo);
    report_.result["graph"] = to_json(g);
    report_.result["depth"] = opt_.depth;
    report_.result["extended"] = opt_.extended;
    if (!opt_.dot.empty()) {
      std::ofstream out(opt_.dot);
      if (!out) throw InputError("cannot write '" + opt_.dot + "'");
      out << to_dot(g);
    }
    report_.say(std::to_string(g.nodes.size()) + " nodes, " + std::to_string(g.edges.size()) + " edges" +
                (g.complete ? "" : " (stopped at the node cap)"));
    for (std::size_t a = 0; a < g.automorphisms.size(); ++a) {
      std::size_t inv = 0;
      for (const auto& node : g.nodes) inv += node.invariant[a] ? 1 : 0;
      report_.say(g.automorphisms[a] + ": " + std::to_string(inv) + " of " + std::to_string(g.nodes.size()) +
                  " nodes invariant");
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      report_.say("  n" + std::to_string(i) + " (depth " + std::to_string(g.nodes[i].depth) + "): " +
                  describe(g.nodes[i].object));
    if (!g.complete) report_.fail(kBudgetExhausted);
  }

  void check() {
    auto x = object(opt_.object);
    const bool pres = is_presilting(x);
    auto v = is_silting(x, 64, seed_);
    report_.result["presilting"] = pres;
    report_.result["silting_certified"] = v.certified;
    report_.result["failed_check"] = v.failed_check;
    report_.result["description"] = describe(x);
    report_.say(describe(x));
    report_.say(std::string("presilting: ") + (pres ? "yes" : "no"));
    report_.say(std::string("silting: ") + (v.certified ? "certified" : "not certified (" + v.failed_check + ")"));
    report_.say("invariance:");
    invariance_report(x, "object");
    if (!v.certified) report_.fail(kVerifyFailed);
  }

  void induce() {
    auto x = object(opt_.object);
    auto te = trivial_extension(alg());
    auto y = induce_trivial_extension(x, te);
    const bool pres = is_presilting(y);
    const auto end = homotopy_hom(y, y, 0).dim();
    report_.result["complex"] = to_json(y);
    report_.result["description"] = describe(y);
    report_.result["presilting"] = pres;
    report_.result["end_dimension"] = end;
    report_.say(opt_.object + " induced to " + te->label() + ": " + describe(y));
    report_.say(std::string("presilting: ") + (pres ? "yes" : "no"));
    report_.say("dim End = " + std::to_string(end));
    json inv = json::object();
    for (const auto& s : loaded_.automorphisms) {
      auto st = extend_to_trivial_extension(s, te);
      auto res = alpha_invariant(y, st, seed_, budget_);
      report_.verdict("induced object invariant under " + s.name(), res);
      inv[s.name()] = res.isomorphic;
      report_.say("  " + s.name() + ": " + (res.isomorphic ? "invariant" : "not invariant"));
    }
    report_.result["invariant"] = inv;
  }

  void paper_verify() {
    if (opt_.n < 2 || opt_.n > 6) throw InputError("n must lie in 2..6");
    std::vector<std::string> sections;
    if (opt_.sections.empty() || opt_.sections == "all") {
      sections = section_names();
    } else {
      std::stringstream ss(opt_.sections);
      std::string s;
      while (std::getline(ss, s, ',')) {
        if (std::find(section_names().begin(), section_names().end(), s) == section_names().end())
          throw InputError("unknown section '" + s + "'");
        sections.push_back(s);
      }
    }
    VerifyOptions vo{seed_, budget_};
    json arr = json::array();
    report_.say("A_" + std::to_string(opt_.n) + " over " + f_.name());
    for (const auto& name : sections) {
      auto r = run_section(name, f_, opt_.n, vo);
      const char* status = !r.applicable ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      arr.push_back({{"section", name},
                     {"status", status},
                     {"expected", r.expected},
                     {"computed", r.computed},
                     {"failures", r.failures},
                     {"verdicts", {{"exact", r.verdicts.exact},
                                   {"randomized", r.verdicts.randomized},
                                   {"failure_bound", r.verdicts.worst_bound}}}});
      std::ostringstream line;
      line << status << ' ' << std::left << std::setw(18) << name << ' ' << r.computed;
      report_.say(line.str());
      if (r.applicable && !r.pass) {
        report_.say("     expected: " + r.expected);
        for (const auto& f : r.failures) report_.say("     failed: " + f);
        report_.fail(r.verdicts.exhausted ? kBudgetExhausted : kVerifyFailed);
      }
      if (r.verdicts.randomized) report_.say("     verdicts: " + r.verdicts.summary());
    }
    report_.result["n"] = opt_.n;
    report_.result["sections"] = arr;
  }

  const Options& opt_;
  F f_;
  LoadedAlgebra<F> loaded_;
  std::uint64_t seed_ = opt_.seed;
  std::uint64_t budget_ = opt_.budget;
  Report report_;
};

int emit(const Options& o, const Report& r, const std::string& config) {
  std::string text;
  if (o.as_json) {
    json doc;
    doc["schema"] = kSchema;
    doc["command"] = o.argv;
    doc["config_hash"] = hex(fnv1a(config));
    doc["seed"] = r.seed;
    doc["budget"] = r.budget;
    doc["exit_code"] = r.exit;
    doc["result"] = r.result;
    doc["verdicts"] = r.verdicts;
    text = doc.dump(2) + "\n";
  } else {
    for (const auto& l : r.lines) text += l + "\n";
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out);
    if (!out) {
      std::cerr << "error: cannot write '" << o.out << "'\n";
      return kInputError;
    }
    out << text;
  }
  return r.exit;
}

template <class F>
int run_with(const Options& o, const AlgebraFile* file, const std::string& config) {
  const F f = make_field<F>(o.field);
  const auto start = std::chrono::steady_clock::now();
  Session<F> s(o, file, f);
  Report r = s.run();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.as_json) r.lines.push_back("(" + std::to_string(secs) + " s, seed " + std::to_string(r.seed) + ")");
  return emit(o, r, config);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int i = 1; i < argc; ++i) o.argv.emplace_back(argv[i]);
  if (const char* env = std::getenv("SILT_BUDGET")) {
    try {
      o.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: SILT_BUDGET must be a nonnegative integer\n";
      return kInputError;
    }
  }

  CLI::App app{"Silting mutation, spherical twists and invariance checks over quiver algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field", o.field, "Q or Fp:<prime>; overrides the file");
  auto* seed_opt = app.add_option("--seed", o.seed, "seed for randomized steps");
  auto* budget_opt = app.add_option("--budget", o.budget, "effort budget for isomorphism searches (default: SILT_BUDGET)");
  app.add_flag("--json", o.as_json, "emit the JSON report");
  app.add_option("--out", o.out, "write the report to this file");

  auto file_arg = [&](CLI::App* c) { c->add_option("file", o.file, "algebra definition")->required(); };
  auto* info = app.add_subcommand("info", "dimensions, basis, e_iAe_j table, global dimension");
  file_arg(info);
  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution of a named module");
  file_arg(resolve);
  resolve->add_option("module", o.module)->required();
  auto* hom = app.add_subcommand("hom", "dim Hom(X, Y[t]) in the homotopy category");
  file_arg(hom);
  hom->add_option("x", o.left, "object: A, e<i>, <module>, @complex.json, with optional [shift]")->required();
  hom->add_option("y", o.right)->required();
  auto* twist = app.add_subcommand("twist", "spherical twist by a named module");
  file_arg(twist);
  twist->add_option("--module", o.module)->required();
  twist->add_option("-d", o.d, "sphericity degree")->required();
  twist->add_option("--power", o.power, "twist power, negative for the inverse");
  twist->add_option("--target", o.target, "object to twist");
  auto* mutate = app.add_subcommand("mutate", "silting mutation");
  file_arg(mutate);
  mutate->add_option("--object", o.object);
  mutate->add_option("--keep", o.keep, "1-based summands to keep, comma separated, or none");
  mutate->add_option("--direction", o.direction, "left or right");
  auto* explore = app.add_subcommand("explore", "mutation graph up to a depth");
  file_arg(explore);
  explore->add_option("--object", o.object);
  explore->add_option("--depth", o.depth);
  explore->add_flag("--extended", o.extended, "all selections, not only irreducible ones");
  explore->add_option("--max-nodes", o.max_nodes);
  explore->add_option("--dot", o.dot, "write the graph as DOT");
  auto* check = app.add_subcommand("check", "presilting and silting certificate, invariance");
  file_arg(check);
  check->add_option("--object", o.object);
  auto* induce = app.add_subcommand("induce", "induction to the trivial extension");
  file_arg(induce);
  induce->add_option("--object", o.object);
  auto* verify = app.add_subcommand("paper-verify", "built-in verification suite for A_n");
  verify->add_option("--n", o.n, "2..6");
  verify->add_option("--sections", o.sections, "comma separated, default all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  o.command = app.get_subcommands().front()->get_name();
  o.seed_given = seed_opt->count() > 0;
  o.budget_given = budget_opt->count() > 0 || std::getenv("SILT_BUDGET") != nullptr;

  try {
    std::string config = o.command;
    for (const auto& a : o.argv) config += '\0' + a;
    AlgebraFile file;
    const bool has_file = o.command != "paper-verify";
    if (has_file) {
      const std::string text = read_file(o.file);
      config += '\0' + text;
      try {
        file = parse_algebra_file(text);
      } catch (const ParseError& e) {
        std::cerr << o.file << ":" << e.what() << "\n";
        return kInputError;
      }
    }
    std::string field = o.field.empty() ? (has_file ? file.field : "Q") : o.field;
    if (field != "Q") {
      if (field.rfind("Fp:", 0) != 0) throw InputError("field must be Q or Fp:<prime>");
      try {
        make_field<PrimeField>(field);
      } catch (const std::exception&) {
        throw InputError("'" + field + "' is not a prime field");
      }
    }
    o.field = field;
    config += '\0' + field;
    if (field == "Q") return run_with<RationalField>(o, has_file ? &file : nullptr, config);
    return run_with<PrimeField>(o, has_file ? &file : nullptr, config);
  } catch (const ParseError& e) {
    std::cerr << o.file << ":" << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResolutionTooLong& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const SerializationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidSelection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
