#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "silt/algebra/automorphism.hpp"
#include "silt/modules/module.hpp"

namespace silt {

// Plain-text algebra definition, one statement per line, '#' starts a comment:
//
//   name A_4
//   field Q                      (or Fp:7)
//   vertices 4
//   arrow x 1 2                  (label, source, target; 1-based)
//   relation 1: xx               (start vertex, signed sum of words)
//   relation 1: xyxy - yxyx
//   automorphism eps: x->y y->x  (arrow label permutation, endpoints kept)
//   module E: 1 / y              (e_1A modulo the listed words from vertex 1)
//   option length_cap 16         (also seed, budget)
//
// Words are arrow labels read from the start vertex, matched greedily by the
// longest label leaving the current vertex; '.' may separate labels.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(int l, int c, const std::string& msg)
      : Error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}
};

struct FileArrow {
  std::string label;
  int source = 0;
  int target = 0;
};

struct FileWord {
  std::string coeff = "1";
  std::string word;
  int line = 0;
  int column = 0;
};

struct FileRelation {
  int start = 0;
  std::vector<FileWord> terms;
};

struct FileAutomorphism {
  std::string name;
  std::vector<std::pair<std::string, std::string>> mapping;
  int line = 0;
};

struct FileModule {
  std::string name;
  int vertex = 0;
  std::vector<FileWord> relations;
  int line = 0;
};

struct AlgebraFile {
  std::string name;
  std::string field = "Q";
  int vertices = 0;
  std::vector<FileArrow> arrows;
  std::vector<FileRelation> relations;
  std::vector<FileAutomorphism> automorphisms;
  std::vector<FileModule> modules;
  std::map<std::string, long> options;
};

namespace detail {

struct Token {
  std::string text;
  int column = 0;
};

// Whitespace separates tokens; ':' ',' '+' '*' and '-' stand alone, except in
// "->" and in fractions like 1/2. A '/' between non-digits stands alone.
inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::string cur;
  int start = 0;
  auto flush = [&] {
    if (!cur.empty()) out.push_back({cur, start});
    cur.clear();
  };
  auto digit = [&](std::size_t i) { return i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])); };
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      if (cur.empty()) start = col;
      cur += "->";
      ++i;
      continue;
    }
    const bool fraction = c == '/' && i > 0 && digit(i - 1) && digit(i + 1);
    if (!fraction && (c == ':' || c == ',' || c == '+' || c == '*' || c == '-' || c == '/')) {
      flush();
      out.push_back({std::string(1, c), col});
      continue;
    }
    if (cur.empty()) start = col;
    cur += c;
  }
  flush();
  return out;
}

inline bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline bool is_coefficient(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return is_integer(s);
  return is_integer(s.substr(0, slash)) && is_integer(s.substr(slash + 1));
}

inline bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

class LineParser {
 public:
  LineParser(int line, std::vector<Token> toks) : line_(line), toks_(std::move(toks)) {}

  [[nodiscard]] bool done() const { return pos_ >= toks_.size(); }
  [[nodiscard]] const Token& peek() const {
    if (done()) fail("unexpected end of line");
    return toks_[pos_];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, done() ? end_column() : toks_[pos_].column, msg);
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const { throw ParseError(line_, t.column, msg); }
  Token next(const std::string& what) {
    if (done()) fail("expected " + what);
    return toks_[pos_++];
  }
  void expect(const std::string& text) {
    if (done() || toks_[pos_].text != text) fail("expected '" + text + "'");
    ++pos_;
  }
  bool accept(const std::string& text) {
    if (!done() && toks_[pos_].text == text) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer(const std::string& what) {
    auto t = next(what);
    if (!is_integer(t.text)) fail_at(t, "expected " + what + ", found '" + t.text + "'");
    try {
      return std::stol(t.text);
    } catch (const std::out_of_range&) {
      fail_at(t, what + " out of range");
    }
  }
  std::string identifier(const std::string& what) {
    auto t = next(what);
    if (!is_identifier(t.text)) fail_at(t, "expected " + what + ", found '" + t.text + "'");
    return t.text;
  }
  void finish() {
    if (!done()) fail("unexpected token '" + toks_[pos_].text + "'");
  }
  // [coeff ['*']] word
  FileWord term(bool negate) {
    FileWord w;
    w.line = line_;
    auto t = next("a path word");
    std::string coeff = "1";
    if (is_coefficient(t.text)) {
      coeff = t.text;
      accept("*");
      t = next("a path word after the coefficient");
    }
    if (t.text.empty()) fail_at(t, "empty path word");
    for (char c : t.text)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\''))
        fail_at(t, "bad character '" + std::string(1, c) + "' in path word '" + t.text + "'");
    if (negate) coeff = coeff[0] == '-' ? coeff.substr(1) : "-" + coeff;
    w.coeff = coeff;
    w.word = t.text;
    w.column = t.column;
    return w;
  }

 private:
  [[nodiscard]] int end_column() const {
    if (toks_.empty()) return 1;
    return toks_.back().column + static_cast<int>(toks_.back().text.size());
  }

  int line_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline AlgebraFile parse_algebra_file(std::string_view text) {
  AlgebraFile file;
  bool seen_vertices = false, seen_field = false, seen_name = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto toks = detail::split_tokens(raw);
    if (toks.empty()) continue;
    detail::LineParser p(lineno, toks);
    const auto key = p.next("a keyword");
    auto vertex = [&](const std::string& what) {
      auto t = p.peek();
      const long v = p.integer(what);
      if (!seen_vertices) p.fail_at(t, "'vertices' must come before " + what + "s");
      if (v < 1 || v > file.vertices) p.fail_at(t, what + " " + std::to_string(v) + " outside 1.." + std::to_string(file.vertices));
      return static_cast<int>(v);
    };
    if (key.text == "name") {
      if (seen_name) p.fail_at(key, "duplicate 'name'");
      seen_name = true;
      file.name = p.next("a name").text;
    } else if (key.text == "field") {
      if (seen_field) p.fail_at(key, "duplicate 'field'");
      seen_field = true;
      auto t = p.next("a field (Q or Fp:<prime>)");
      if (t.text == "Q") {
        file.field = "Q";
      } else if (t.text == "Fp") {
        p.expect(":");
        const std::string digits = p.next("a prime").text;
        if (!detail::is_integer(digits) || digits[0] == '-' || !is_prime(std::stoull(digits)))
          p.fail_at(t, "'" + digits + "' is not a prime");
        file.field = "Fp:" + digits;
      } else {
        p.fail_at(t, "unknown field '" + t.text + "'");
      }
    } else if (key.text == "vertices") {
      if (seen_vertices) p.fail_at(key, "duplicate 'vertices'");
      auto t = p.peek();
      const long n = p.integer("a vertex count");
      if (n < 1 || n > 1000) p.fail_at(t, "vertex count must lie in 1..1000");
      file.vertices = static_cast<int>(n);
      seen_vertices = true;
    } else if (key.text == "arrow") {
      FileArrow a;
      a.label = p.identifier("an arrow label");
      a.source = vertex("vertex");
      a.target = vertex("vertex");
      file.arrows.push_back(std::move(a));
    } else if (key.text == "relation") {
      FileRelation r;
      r.start = vertex("vertex");
      p.expect(":");
      bool negate = p.accept("-");
      r.terms.push_back(p.term(negate));
      while (!p.done()) {
        auto op = p.next("'+' or '-'");
        if (op.text != "+" && op.text != "-") p.fail_at(op, "expected '+' or '-', found '" + op.text + "'");
        r.terms.push_back(p.term(op.text == "-"));
      }
      file.relations.push_back(std::move(r));
    } else if (key.text == "automorphism") {
      FileAutomorphism a;
      a.line = lineno;
      a.name = p.identifier("an automorphism name");
      p.expect(":");
      while (!p.done()) {
        auto t = p.next("a mapping 'label->label'");
        const auto arrow = t.text.find("->");
        if (arrow == std::string::npos) p.fail_at(t, "expected 'label->label', found '" + t.text + "'");
        std::string from = t.text.substr(0, arrow), to = t.text.substr(arrow + 2);
        if (!detail::is_identifier(from) || !detail::is_identifier(to))
          p.fail_at(t, "expected 'label->label', found '" + t.text + "'");
        a.mapping.emplace_back(std::move(from), std::move(to));
      }
      if (a.mapping.empty()) p.fail("expected at least one mapping");
      file.automorphisms.push_back(std::move(a));
    } else if (key.text == "module") {
      FileModule m;
      m.line = lineno;
      m.name = p.identifier("a module name");
      p.expect(":");
      m.vertex = vertex("vertex");
      if (p.accept("/")) {
        m.relations.push_back(p.term(false));
        while (p.accept(",")) m.relations.push_back(p.term(false));
      }
      p.finish();
      file.modules.push_back(std::move(m));
    } else if (key.text == "option") {
      auto t = p.next("an option name");
      if (t.text != "length_cap" && t.text != "seed" && t.text != "budget")
        p.fail_at(t, "unknown option '" + t.text + "' (known: length_cap, seed, budget)");
      auto vt = p.peek();
      const long v = p.integer("an option value");
      if (v < 0) p.fail_at(vt, "option values must be nonnegative");
      file.options[t.text] = v;
    } else {
      p.fail_at(key, "unknown key '" + key.text + "'");
    }
    p.finish();
  }
  if (!seen_vertices) throw ParseError(lineno + 1, 1, "missing 'vertices'");
  return file;
}

// Canonical text form; parsing it gives back the same file.
inline std::string algebra_file_text(const AlgebraFile& f) {
  std::ostringstream os;
  auto words = [&](const std::vector<FileWord>& ws, bool signed_sum) {
    for (std::size_t i = 0; i < ws.size(); ++i) {
      std::string c = ws[i].coeff;
      if (signed_sum) {
        const bool neg = c[0] == '-';
        if (neg) c = c.substr(1);
        os << (i == 0 ? (neg ? "-" : "") : (neg ? " - " : " + "));
      } else if (i > 0) {
        os << ", ";
      }
      if (c != "1") os << c << ' ';
      os << ws[i].word;
    }
  };
  if (!f.name.empty()) os << "name " << f.name << '\n';
  os << "field " << f.field << '\n';
  os << "vertices " << f.vertices << '\n';
  for (const auto& a : f.arrows) os << "arrow " << a.label << ' ' << a.source << ' ' << a.target << '\n';
  for (const auto& r : f.relations) {
    os << "relation " << r.start << ": ";
    words(r.terms, true);
    os << '\n';
  }
  for (const auto& a : f.automorphisms) {
    os << "automorphism " << a.name << ':';
    for (const auto& [from, to] : a.mapping) os << ' ' << from << "->" << to;
    os << '\n';
  }
  for (const auto& m : f.modules) {
    os << "module " << m.name << ": " << m.vertex;
    if (!m.relations.empty()) {
      os << " / ";
      words(m.relations, false);
    }
    os << '\n';
  }
  for (const auto& [k, v] : f.options) os << "option " << k << ' ' << v << '\n';
  return os.str();
}

inline bool operator==(const FileWord& a, const FileWord& b) { return a.coeff == b.coeff && a.word == b.word; }
inline bool operator==(const FileArrow& a, const FileArrow& b) {
  return a.label == b.label && a.source == b.source && a.target == b.target;
}
inline bool operator==(const FileRelation& a, const FileRelation& b) { return a.start == b.start && a.terms == b.terms; }
inline bool operator==(const FileAutomorphism& a, const FileAutomorphism& b) {
  return a.name == b.name && a.mapping == b.mapping;
}
inline bool operator==(const FileModule& a, const FileModule& b) {
  return a.name == b.name && a.vertex == b.vertex && a.relations == b.relations;
}
inline bool operator==(const AlgebraFile& a, const AlgebraFile& b) {
  return a.name == b.name && a.field == b.field && a.vertices == b.vertices && a.arrows == b.arrows &&
         a.relations == b.relations && a.automorphisms == b.automorphisms && a.modules == b.modules &&
         a.options == b.options;
}

template <class F>
struct LoadedAlgebra {
  AlgebraFile file;
  AlgebraPtr<F> alg;
  std::vector<AlgebraAutomorphism<F>> automorphisms;
  std::vector<std::pair<std::string, Module<F>>> modules;

  [[nodiscard]] const Module<F>* module(const std::string& name) const {
    for (const auto& [n, m] : modules)
      if (n == name) return &m;
    return nullptr;
  }
};

// Reads a word from `start`, longest label first; '.' separates labels.
inline Path parse_word(const Quiver& q, int start, const FileWord& w) {
  Path p{start, {}};
  int v = start;
  std::size_t i = 0;
  const std::string& s = w.word;
  while (i < s.size()) {
    if (s[i] == '.') {
      ++i;
      continue;
    }
    int best = -1;
    std::size_t best_len = 0;
    bool tie = false;
    for (int a : q.arrows_from(v)) {
      const auto& lab = q.arrow(a).label;
      if (s.compare(i, lab.size(), lab) != 0) continue;
      if (lab.size() > best_len) {
        best = a;
        best_len = lab.size();
        tie = false;
      } else if (lab.size() == best_len) {
        tie = true;
      }
    }
    if (best < 0)
      throw ParseError(w.line, w.column + static_cast<int>(i),
                       "no arrow leaving vertex " + std::to_string(v + 1) + " matches '" + s.substr(i) + "' in word '" + s + "'");
    if (tie)
      throw ParseError(w.line, w.column + static_cast<int>(i),
                       "label '" + q.arrow(best).label + "' is ambiguous at vertex " + std::to_string(v + 1));
    p.arrows.push_back(best);
    v = q.arrow(best).target;
    i += best_len;
  }
  return p;
}

template <class F>
LoadedAlgebra<F> load_algebra(const AlgebraFile& file, const F& f) {
  LoadedAlgebra<F> out;
  out.file = file;
  Quiver q(file.vertices);
  for (const auto& a : file.arrows) q.add_arrow(a.label, a.source - 1, a.target - 1);
  auto coeff = [&](const FileWord& w) {
    try {
      return f.parse(w.coeff);
    } catch (const std::exception& e) {
      throw ParseError(w.line, w.column, "bad coefficient '" + w.coeff + "': " + e.what());
    }
  };
  std::vector<Relation<F>> rels;
  for (const auto& r : file.relations) {
    Relation<F> rel;
    for (const auto& t : r.terms) rel.terms.emplace_back(coeff(t), parse_word(q, r.start - 1, t));
    rels.push_back(std::move(rel));
  }
  int cap = -1;
  if (auto it = file.options.find("length_cap"); it != file.options.end()) cap = static_cast<int>(it->second);
  out.alg = build_algebra(f, q, rels, cap, file.name.empty() ? "kQ/I" : file.name);
  for (const auto& a : file.automorphisms) {
    std::map<std::string, std::string> perm;
    for (const auto& [from, to] : a.mapping) {
      if (perm.count(from)) throw ParseError(a.line, 1, "label '" + from + "' mapped twice in '" + a.name + "'");
      perm[from] = to;
    }
    std::vector<int> map(static_cast<std::size_t>(q.arrow_count()));
    for (int i = 0; i < q.arrow_count(); ++i) {
      const auto& ar = q.arrow(i);
      auto it = perm.find(ar.label);
      const std::string target = it == perm.end() ? ar.label : it->second;
      int hit = -1;
      for (int j = 0; j < q.arrow_count(); ++j)
        if (q.arrow(j).label == target && q.arrow(j).source == ar.source && q.arrow(j).target == ar.target) hit = j;
      if (hit < 0)
        throw ParseError(a.line, 1, "no arrow '" + target + "' from " + std::to_string(ar.source + 1) + " to " +
                                        std::to_string(ar.target + 1) + " for '" + a.name + "'");
      map[static_cast<std::size_t>(i)] = hit;
    }
    try {
      out.automorphisms.push_back(automorphism_from_arrows(out.alg, map, a.name));
    } catch (const Error& e) {
      throw ParseError(a.line, 1, "automorphism '" + a.name + "': " + e.what());
    }
  }
  for (const auto& m : file.modules) {
    Module<F> p = projective(out.alg, m.vertex - 1);
    std::vector<ModuleElement<F>> gens;
    for (const auto& w : m.relations) {
      auto path = parse_word(q, m.vertex - 1, w);
      const int end = path.end(q);
      auto elem = coeff(w) * out.alg->path_element(path);
      Vec<F> v(static_cast<std::size_t>(p.dim(end)), f.zero());
      for (const auto& [b, c] : elem.terms) v[static_cast<std::size_t>(out.alg->position(b))] = c;
      gens.push_back({end, std::move(v)});
    }
    for (const auto& [n, other] : out.modules)
      if (n == m.name) throw ParseError(m.line, 1, "duplicate module '" + m.name + "'");
    out.modules.emplace_back(m.name, quotient_module(p, gens));
  }
  return out;
}

}  // namespace silt
