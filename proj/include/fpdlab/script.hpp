// The line-oriented declaration/query language and its executor. Statements
// bind named fields, rings, ideals, modules, homomorphisms and
// constructions; queries run against the kernel and collect deterministic
// JSON reports into one bundle.
//
// Grammar (one statement per line, `#` comments):
//   field <name> = QQ | Fp(<prime>)
//   ring <name> = <field>[v1,...,vn] / (<poly>, ...)      relations optional
//   ideal <name> = (<poly>, ...) in <ring>
//   module <name> = coker <ring> matrix <r> <c> [<poly>, ...]
//   hom <name> : <ring> -> <ring> (<var> -> <poly>, ...)
//   polyext <name> = <ring> adjoin <var>
//   trivext <name> = <ring> (+) <module>
//   amalg <name> = <A> join <B> via <hom> along <ideal> modgens [<poly>, ...]
//   transport <name> = <ideal> via <construction>
//   query gb <ideal>
//   query dim <ring>
//   query grade <koszul|ext|cech|local|regseq> <ideal> on <module|ring>
//   query fpd <ring> using <ideal>, ...
//   query verify thm-dim <ring> using <ideal>, ...
//   query verify prop-geq <ring> <ideal>
//   query verify thm-poly <polyext> <MM> contract <m> monic (<poly>)
//   query verify thm-scr <polyext> <MM> contract <m>
//   query verify lemma-depthht <ring> <p> <q>
//   query verify thm-trivext <trivext> <m>
//   query verify thm-amg <amalg> <m>
//   query verify prop-items <ideal> [subset <ideal>] on <module|ring>
#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpdlab/report_json.hpp"

namespace fpdlab {

namespace script {

struct FieldDecl {
  std::string name;
  bool rational = true;
  std::uint64_t p = 0;
};
struct RingDecl {
  std::string name;
  bool literal_field = false;
  FieldDecl literal;       // when the field is spelled inline
  std::string field_ref;   // when the field is a bound name
  std::vector<std::string> vars;
  std::vector<std::string> rels;
};
struct IdealDecl {
  std::string name;
  std::vector<std::string> gens;
  std::string ring;
};
struct ModuleDecl {
  std::string name;
  std::string ring;
  std::size_t rows = 0, cols = 0;
  std::vector<std::string> entries;
};
struct HomDecl {
  std::string name, src, dst;
  std::vector<std::pair<std::string, std::string>> images;
};
struct PolyextDecl {
  std::string name, ring, var;
};
struct TrivextDecl {
  std::string name, ring, module;
};
struct AmalgDecl {
  std::string name, a, b, hom, ideal;
  std::vector<std::string> modgens;
};
struct TransportDecl {
  std::string name, ideal, cons;
};
struct QueryStmt {
  std::string form;        // gb | dim | grade | fpd | verify
  std::string grade_kind;  // for grade
  std::string verify_id;   // for verify
  std::vector<std::string> names;  // positional identifiers
  std::string target;              // grade/prop-items "on" target
  std::string subset;              // prop-items optional larger ideal
  std::string monic_poly;          // thm-poly
};

using Node = std::variant<FieldDecl, RingDecl, IdealDecl, ModuleDecl, HomDecl,
                          PolyextDecl, TrivextDecl, AmalgDecl, TransportDecl,
                          QueryStmt>;

struct Statement {
  std::size_t line = 0;
  std::string text;
  Node node;
};

struct Script {
  std::vector<Statement> statements;
};

namespace detail {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  std::size_t line;

  Cursor(const std::string& text, std::size_t line_no) : s(text), line(line_no) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, line, pos + 1);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) != 0) return false;
    std::size_t end = pos + w.size();
    if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) ||
                           s[end] == '_'))
      return false;
    pos = end;
    return true;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) ||
                           s[pos] == '_'))
      ++pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected an identifier");
    return s.substr(start, pos - start);
  }
  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) fail("expected a number");
    return std::stoull(s.substr(start, pos - start));
  }
  // raw polynomial text up to one of the delimiters (polynomials contain no
  // parentheses or brackets)
  std::string poly_text(const std::string& delims) {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && delims.find(s[pos]) == std::string::npos) ++pos;
    std::string out = s.substr(start, pos - start);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back())))
      out.pop_back();
    if (out.empty()) fail("expected a polynomial");
    return out;
  }
};

inline std::vector<std::string> poly_list(Cursor& c, char open, char close) {
  std::vector<std::string> out;
  c.expect(open);
  if (c.peek() == close) {
    ++c.pos;
    return out;
  }
  while (true) {
    out.push_back(c.poly_text(std::string(1, close) + ","));
    if (c.accept(',')) continue;
    c.expect(close);
    break;
  }
  return out;
}

inline Statement parse_statement(const std::string& text, std::size_t line_no) {
  Cursor c(text, line_no);
  Statement st;
  st.line = line_no;
  st.text = text;

  if (c.accept_word("field")) {
    FieldDecl d;
    d.name = c.ident();
    c.expect('=');
    if (c.accept_word("QQ")) {
      d.rational = true;
    } else if (c.accept_word("Fp")) {
      c.expect('(');
      d.rational = false;
      d.p = c.number();
      c.expect(')');
    } else {
      c.fail("expected QQ or Fp(<prime>)");
    }
    if (!c.done()) c.fail("trailing input after field declaration");
    st.node = d;
    return st;
  }
  if (c.accept_word("ring")) {
    RingDecl d;
    d.name = c.ident();
    c.expect('=');
    if (c.accept_word("QQ")) {
      d.literal_field = true;
      d.literal.rational = true;
    } else if (c.accept_word("Fp")) {
      c.expect('(');
      d.literal_field = true;
      d.literal.rational = false;
      d.literal.p = c.number();
      c.expect(')');
    } else {
      d.field_ref = c.ident();
    }
    c.expect('[');
    if (c.peek() != ']') {
      while (true) {
        d.vars.push_back(c.ident());
        if (c.accept(',')) continue;
        break;
      }
    }
    c.expect(']');
    if (c.accept('/')) d.rels = poly_list(c, '(', ')');
    if (!c.done()) c.fail("trailing input after ring declaration");
    st.node = d;
    return st;
  }
  if (c.accept_word("ideal")) {
    IdealDecl d;
    d.name = c.ident();
    c.expect('=');
    d.gens = poly_list(c, '(', ')');
    if (!c.accept_word("in")) c.fail("expected 'in <ring>'");
    d.ring = c.ident();
    if (!c.done()) c.fail("trailing input after ideal declaration");
    st.node = d;
    return st;
  }
  if (c.accept_word("module")) {
    ModuleDecl d;
    d.name = c.ident();
    c.expect('=');
    if (!c.accept_word("coker")) c.fail("expected 'coker <ring> matrix ...'");
    d.ring = c.ident();
    if (!c.accept_word("matrix")) c.fail("expected 'matrix <rows> <cols>'");
    d.rows = c.number();
    d.cols = c.number();
    d.entries = poly_list(c, '[', ']');
    if (d.entries.size() != d.rows * d.cols)
      c.fail("matrix needs rows*cols entries");
    if (!c.done()) c.fail("trailing input after module declaration");
    st.node = d;
    return st;
  }
  if (c.accept_word("hom")) {
    HomDecl d;
    d.name = c.ident();
    c.expect(':');
    d.src = c.ident();
    c.expect('-');
    c.expect('>');
    d.dst = c.ident();
    c.expect('(');
    if (c.peek() != ')') {
      while (true) {
        std::string v = c.ident();
        c.expect('-');
        c.expect('>');
        d.images.emplace_back(v, c.poly_text(",)"));
        if (c.accept(',')) continue;
        break;
      }
    }
    c.expect(')');
    if (!c.done()) c.fail("trailing input after hom declaration");
    st.node = d;
    return st;
  }
  if (c.accept_word("polyext")) {
    PolyextDecl d;
    d.name = c.ident();
    c.expect('=');
    d.ring = c.ident();
    if (!c.accept_word("adjoin")) c.fail("expected 'adjoin <var>'");
    d.var = c.ident();
    if (!c.done()) c.fail("trailing input after polyext declaration");
    st.node = d;
    return st;
  }
  if (c.accept_word("trivext")) {
    TrivextDecl d;
    d.name = c.ident();
    c.expect('=');
    d.ring = c.ident();
    c.expect('(');
    c.expect('+');
    c.expect(')');
    d.module = c.ident();
    if (!c.done()) c.fail("trailing input after trivext declaration");
    st.node = d;
    return st;
  }
  if (c.accept_word("amalg")) {
    AmalgDecl d;
    d.name = c.ident();
    c.expect('=');
    d.a = c.ident();
    if (!c.accept_word("join")) c.fail("expected 'join <B>'");
    d.b = c.ident();
    if (!c.accept_word("via")) c.fail("expected 'via <hom>'");
    d.hom = c.ident();
    if (!c.accept_word("along")) c.fail("expected 'along <ideal>'");
    d.ideal = c.ident();
    if (!c.accept_word("modgens")) c.fail("expected 'modgens [...]'");
    d.modgens = poly_list(c, '[', ']');
    if (!c.done()) c.fail("trailing input after amalg declaration");
    st.node = d;
    return st;
  }
  if (c.accept_word("transport")) {
    TransportDecl d;
    d.name = c.ident();
    c.expect('=');
    d.ideal = c.ident();
    if (!c.accept_word("via")) c.fail("expected 'via <construction>'");
    d.cons = c.ident();
    if (!c.done()) c.fail("trailing input after transport declaration");
    st.node = d;
    return st;
  }
  if (c.accept_word("query")) {
    QueryStmt q;
    if (c.accept_word("gb")) {
      q.form = "gb";
      q.names.push_back(c.ident());
    } else if (c.accept_word("dim")) {
      q.form = "dim";
      q.names.push_back(c.ident());
    } else if (c.accept_word("grade")) {
      q.form = "grade";
      q.grade_kind = c.ident();
      if (q.grade_kind != "koszul" && q.grade_kind != "ext" &&
          q.grade_kind != "cech" && q.grade_kind != "local" &&
          q.grade_kind != "regseq")
        c.fail("unknown grade kind '" + q.grade_kind + "'");
      q.names.push_back(c.ident());
      if (!c.accept_word("on")) c.fail("expected 'on <module|ring>'");
      q.target = c.ident();
    } else if (c.accept_word("fpd")) {
      q.form = "fpd";
      q.names.push_back(c.ident());
      if (!c.accept_word("using")) c.fail("expected 'using <ideal>, ...'");
      while (true) {
        q.names.push_back(c.ident());
        if (!c.accept(',')) break;
      }
    } else if (c.accept_word("verify")) {
      q.form = "verify";
      q.verify_id = c.ident();
      while (c.accept('-')) q.verify_id += "-" + c.ident();
      if (q.verify_id == "thm-dim") {
        q.names.push_back(c.ident());
        if (!c.accept_word("using")) c.fail("expected 'using <ideal>, ...'");
        while (true) {
          q.names.push_back(c.ident());
          if (!c.accept(',')) break;
        }
      } else if (q.verify_id == "prop-geq") {
        q.names.push_back(c.ident());
        q.names.push_back(c.ident());
      } else if (q.verify_id == "thm-poly") {
        q.names.push_back(c.ident());
        q.names.push_back(c.ident());
        if (!c.accept_word("contract")) c.fail("expected 'contract <m>'");
        q.names.push_back(c.ident());
        if (!c.accept_word("monic")) c.fail("expected 'monic (<poly>)'");
        c.expect('(');
        q.monic_poly = c.poly_text(")");
        c.expect(')');
      } else if (q.verify_id == "thm-scr") {
        q.names.push_back(c.ident());
        q.names.push_back(c.ident());
        if (!c.accept_word("contract")) c.fail("expected 'contract <m>'");
        q.names.push_back(c.ident());
      } else if (q.verify_id == "lemma-depthht") {
        q.names.push_back(c.ident());
        q.names.push_back(c.ident());
        q.names.push_back(c.ident());
      } else if (q.verify_id == "thm-trivext" || q.verify_id == "thm-amg") {
        q.names.push_back(c.ident());
        q.names.push_back(c.ident());
      } else if (q.verify_id == "prop-items") {
        q.names.push_back(c.ident());
        if (c.accept_word("subset")) q.subset = c.ident();
        if (!c.accept_word("on")) c.fail("expected 'on <module|ring>'");
        q.target = c.ident();
      } else {
        c.fail("unknown theorem id '" + q.verify_id + "'");
      }
    } else {
      c.fail("unknown query form");
    }
    if (!c.done()) c.fail("trailing input after query");
    st.node = q;
    return st;
  }
  c.fail("unknown statement");
}

}  // namespace detail

/// Parses the whole script; enforces that names are bound before use and
/// never rebound.
inline Script parse_script(const std::string& text) {
  Script out;
  std::map<std::string, std::string> bound;  // name -> kind
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = end == std::string::npos
                           ? text.substr(start)
                           : text.substr(start, end - start);
    ++line_no;
    start = end == std::string::npos ? text.size() + 1 : end + 1;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;

    Statement st = detail::parse_statement(line, line_no);

    auto bind = [&](const std::string& name, const std::string& kind) {
      if (bound.count(name))
        throw parse_error("name '" + name + "' is already bound", line_no, 1);
      bound[name] = kind;
    };
    auto need = [&](const std::string& name, std::size_t at = 1) {
      if (!bound.count(name))
        throw parse_error("unbound name '" + name + "'", line_no, at);
    };

    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, script::FieldDecl>) {
            bind(node.name, "field");
          } else if constexpr (std::is_same_v<T, script::RingDecl>) {
            if (!node.literal_field) need(node.field_ref);
            bind(node.name, "ring");
          } else if constexpr (std::is_same_v<T, script::IdealDecl>) {
            need(node.ring);
            bind(node.name, "ideal");
          } else if constexpr (std::is_same_v<T, script::ModuleDecl>) {
            need(node.ring);
            bind(node.name, "module");
          } else if constexpr (std::is_same_v<T, script::HomDecl>) {
            need(node.src);
            need(node.dst);
            bind(node.name, "hom");
          } else if constexpr (std::is_same_v<T, script::PolyextDecl>) {
            need(node.ring);
            bind(node.name, "construction");
          } else if constexpr (std::is_same_v<T, script::TrivextDecl>) {
            need(node.ring);
            need(node.module);
            bind(node.name, "construction");
          } else if constexpr (std::is_same_v<T, script::AmalgDecl>) {
            need(node.a);
            need(node.b);
            need(node.hom);
            need(node.ideal);
            bind(node.name, "construction");
          } else if constexpr (std::is_same_v<T, script::TransportDecl>) {
            need(node.ideal);
            need(node.cons);
            bind(node.name, "ideal");
          } else if constexpr (std::is_same_v<T, script::QueryStmt>) {
            for (const auto& n : node.names) need(n);
            if (!node.target.empty()) need(node.target);
            if (!node.subset.empty()) need(node.subset);
          }
        },
        st.node);
    out.statements.push_back(std::move(st));
  }
  return out;
}

}  // namespace script

// ---------------------------------------------------------------------------
// Execution

namespace script {

template <class F>
struct TypedEnv {
  std::map<std::string, RingH<F>> rings;
  std::map<std::string, IdealSpec<F>> ideals;
  std::map<std::string, ModulePresentation<F>> modules;
  std::map<std::string, RingHom<F>> homs;
  std::map<std::string, ConstructionResult<F>> cons;
};

struct Env {
  std::map<std::string, FieldDesc> fields;
  std::map<std::string, int> lane_of;  // 0 = rationals, 1 = prime field
  TypedEnv<RationalField> qq;
  TypedEnv<PrimeField> fp;
};

namespace detail {

inline int lane_of(const Env& env, const std::string& name,
                   std::size_t line) {
  auto it = env.lane_of.find(name);
  if (it == env.lane_of.end())
    throw invalid_input_error("name '" + name +
                              "' is not available (line " +
                              std::to_string(line) + ")");
  return it->second;
}

template <class F>
const RingH<F>& ring_of(const TypedEnv<F>& te, const std::string& name) {
  auto rit = te.rings.find(name);
  if (rit != te.rings.end()) return rit->second;
  auto cit = te.cons.find(name);
  if (cit != te.cons.end()) return cit->second.result;
  throw invalid_input_error("'" + name + "' is not a ring");
}

template <class F>
const IdealSpec<F>& ideal_of(const TypedEnv<F>& te, const std::string& name) {
  auto it = te.ideals.find(name);
  if (it == te.ideals.end())
    throw invalid_input_error("'" + name + "' is not an ideal");
  return it->second;
}

template <class F>
ModulePresentation<F> target_module(const TypedEnv<F>& te,
                                    const std::string& name) {
  auto mit = te.modules.find(name);
  if (mit != te.modules.end()) return mit->second;
  return free_module(ring_of(te, name), 1);
}

template <class F>
std::vector<Polynomial<F>> parse_polys(const RingH<F>& R,
                                       const std::vector<std::string>& texts,
                                       std::size_t line) {
  std::vector<Polynomial<F>> out;
  for (const auto& t : texts) out.push_back(parse_in_ring(R, t, line));
  return out;
}

template <class F>
void declare_in_lane(TypedEnv<F>& te, const Statement& st, const F& field,
                     const RunConfig& cfg, const MonomialOrder& order) {
  const std::size_t line = st.line;
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, RingDecl>) {
          PolyContext<F> ctx{field, node.vars.size(), order};
          std::map<std::string, std::uint32_t> idx;
          for (std::uint32_t i = 0; i < node.vars.size(); ++i)
            idx[node.vars[i]] = i;
          std::vector<Polynomial<F>> rels;
          for (const auto& s : node.rels)
            rels.push_back(parse_polynomial(ctx, idx, s, line));
          GBOpts opts;
          opts.max_basis = cfg.basis_cap;
          te.rings[node.name] =
              make_ring(field, node.vars, order, rels, opts);
        } else if constexpr (std::is_same_v<T, IdealDecl>) {
          const auto& R = ring_of(te, node.ring);
          te.ideals[node.name] =
              make_ideal(R, parse_polys(R, node.gens, line));
        } else if constexpr (std::is_same_v<T, ModuleDecl>) {
          const auto& R = ring_of(te, node.ring);
          auto entries = parse_polys(R, node.entries, line);
          std::vector<std::vector<Polynomial<F>>> cols(
              node.cols, std::vector<Polynomial<F>>(node.rows,
                                                    Polynomial<F>::zero()));
          for (std::size_t r = 0; r < node.rows; ++r)
            for (std::size_t c = 0; c < node.cols; ++c)
              cols[c][r] = entries[r * node.cols + c];
          te.modules[node.name] = make_module(R, node.rows, cols);
        } else if constexpr (std::is_same_v<T, HomDecl>) {
          const auto& A = ring_of(te, node.src);
          const auto& B = ring_of(te, node.dst);
          std::vector<Polynomial<F>> images(A->vars.size(),
                                            Polynomial<F>::zero());
          std::vector<bool> seen(A->vars.size(), false);
          auto idx = A->var_index();
          for (const auto& [v, img] : node.images) {
            auto it = idx.find(v);
            if (it == idx.end())
              throw invalid_input_error("'" + v +
                                        "' is not a variable of the source");
            images[it->second] = parse_in_ring(B, img, line);
            seen[it->second] = true;
          }
          for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
              throw invalid_input_error("missing image for variable '" +
                                        A->vars[i] + "'");
          te.homs[node.name] = make_ring_hom(A, B, images);
        } else if constexpr (std::is_same_v<T, PolyextDecl>) {
          te.cons[node.name] =
              polynomial_extension(ring_of(te, node.ring), node.var);
        } else if constexpr (std::is_same_v<T, TrivextDecl>) {
          auto mit = te.modules.find(node.module);
          if (mit == te.modules.end())
            throw invalid_input_error("'" + node.module + "' is not a module");
          te.cons[node.name] =
              trivial_extension(ring_of(te, node.ring), mit->second);
        } else if constexpr (std::is_same_v<T, AmalgDecl>) {
          const auto& A = ring_of(te, node.a);
          const auto& B = ring_of(te, node.b);
          auto hit = te.homs.find(node.hom);
          if (hit == te.homs.end())
            throw invalid_input_error("'" + node.hom + "' is not a hom");
          te.cons[node.name] =
              amalgamation(A, B, hit->second, ideal_of(te, node.ideal),
                           parse_polys(B, node.modgens, line));
        } else if constexpr (std::is_same_v<T, TransportDecl>) {
          auto cit = te.cons.find(node.cons);
          if (cit == te.cons.end())
            throw invalid_input_error("'" + node.cons +
                                      "' is not a construction");
          te.ideals[node.name] =
              transport_ideal(cit->second, ideal_of(te, node.ideal));
        }
      },
      st.node);
}

template <class F>
json run_query_in_lane(TypedEnv<F>& te, const QueryStmt& q,
                       const RunConfig& cfg) {
  json result;
  if (q.form == "gb") {
    const auto& I = ideal_of(te, q.names[0]);
    auto G = groebner_basis(I);
    json basis = json::array();
    for (const auto& g : G.elements) basis.push_back(poly_str(I.ring, g));
    result["basis"] = basis;
    result["reduced"] = true;
  } else if (q.form == "dim") {
    result["dim"] = krull_dimension(ring_of(te, q.names[0]));
  } else if (q.form == "grade") {
    const auto& I = ideal_of(te, q.names[0]);
    ModulePresentation<F> M = target_module(te, q.target);
    std::uint32_t bound = std::max<std::uint32_t>(
        cfg.grade_bound, static_cast<std::uint32_t>(I.gens.size()));
    GradeReport<F> rep;
    if (q.grade_kind == "koszul")
      rep = koszul_grade(I, M, bound);
    else if (q.grade_kind == "ext")
      rep = ext_grade(I, M, cfg.grade_bound);
    else if (q.grade_kind == "cech")
      rep = cech_grade(I, M, bound, cfg.power_cap);
    else if (q.grade_kind == "local")
      rep = local_grade(I, M, cfg.grade_bound, cfg.power_cap);
    else
      rep = regular_sequence_grade(I, M, cfg.trials, cfg.seed);
    result = grade_report_json(rep);
    result["ideal"] = q.names[0];
    result["target"] = q.target;
  } else if (q.form == "fpd") {
    const auto& R = ring_of(te, q.names[0]);
    std::vector<IdealSpec<F>> ideals;
    for (std::size_t i = 1; i < q.names.size(); ++i)
      ideals.push_back(ideal_of(te, q.names[i]));
    result = fpd_estimate_json(fpd_estimate(R, ideals, cfg));
  } else if (q.form == "verify") {
    VerificationReport<F> rep;
    if (q.verify_id == "thm-dim") {
      const auto& R = ring_of(te, q.names[0]);
      std::vector<IdealSpec<F>> ideals;
      for (std::size_t i = 1; i < q.names.size(); ++i)
        ideals.push_back(ideal_of(te, q.names[i]));
      rep = check_dim_bound(R, ideals, cfg);
    } else if (q.verify_id == "prop-geq") {
      rep = verify_prop_geq(ring_of(te, q.names[0]),
                            ideal_of(te, q.names[1]), cfg);
    } else if (q.verify_id == "thm-poly" || q.verify_id == "thm-scr") {
      auto cit = te.cons.find(q.names[0]);
      if (cit == te.cons.end())
        throw invalid_input_error("'" + q.names[0] +
                                  "' is not a construction");
      const auto& MM = ideal_of(te, q.names[1]);
      const auto& m = ideal_of(te, q.names[2]);
      if (q.verify_id == "thm-poly") {
        Polynomial<F> f =
            parse_in_ring(cit->second.result, q.monic_poly);
        rep = verify_thm_poly(cit->second, MM, m, f, cfg);
      } else {
        rep = verify_thm_scr(cit->second, MM, m, cfg);
      }
    } else if (q.verify_id == "lemma-depthht") {
      rep = verify_lemma_depthht(ring_of(te, q.names[0]),
                                 ideal_of(te, q.names[1]),
                                 ideal_of(te, q.names[2]), cfg);
    } else if (q.verify_id == "thm-trivext" || q.verify_id == "thm-amg") {
      auto cit = te.cons.find(q.names[0]);
      if (cit == te.cons.end())
        throw invalid_input_error("'" + q.names[0] +
                                  "' is not a construction");
      const auto& m = ideal_of(te, q.names[1]);
      rep = q.verify_id == "thm-trivext"
                ? verify_thm_trivext(cit->second, m, cfg)
                : verify_thm_amg(cit->second, m, cfg);
    } else if (q.verify_id == "prop-items") {
      const auto& I = ideal_of(te, q.names[0]);
      std::optional<IdealSpec<F>> J;
      if (!q.subset.empty()) J = ideal_of(te, q.subset);
      rep = verify_prop_items(I, J, target_module(te, q.target), cfg);
    }
    result = verification_report_json(rep);
  }
  return result;
}

inline std::string error_type(const error& e) {
  if (dynamic_cast<const dimension_mismatch_error*>(&e))
    return "dimension-mismatch";
  if (dynamic_cast<const incompatible_coefficients_error*>(&e))
    return "incompatible-coefficients";
  if (dynamic_cast<const ring_mismatch_error*>(&e)) return "ring-mismatch";
  if (dynamic_cast<const precondition_error*>(&e))
    return "precondition-violation";
  if (dynamic_cast<const budget_exceeded_error*>(&e)) return "budget-exceeded";
  if (dynamic_cast<const parse_error*>(&e)) return "parse-error";
  if (dynamic_cast<const io_error*>(&e)) return "io-error";
  if (dynamic_cast<const invalid_input_error*>(&e)) return "invalid-input";
  return "error";
}

}  // namespace detail

struct RunResult {
  json bundle;
  int exit_code = 0;
};

inline int exit_code_for(std::size_t errors, std::size_t violations) {
  if (violations) return 2;
  if (errors) return 1;
  return 0;
}

/// Executes the statements in order, collecting one entry per query (and one
/// per failed statement). Exit code 2 when a verification is violated, 1 on
/// errors, 0 otherwise.
inline RunResult execute(const Script& sc, const RunConfig& cfg) {
  Env env;
  json entries = json::array();
  std::size_t errors = 0, violations = 0;

  for (const auto& st : sc.statements) {
    const bool is_query = std::holds_alternative<QueryStmt>(st.node);
    try {
      if (std::holds_alternative<FieldDecl>(st.node)) {
        const auto& d = std::get<FieldDecl>(st.node);
        if (!d.rational) PrimeField validate(d.p);  // primality check
        env.fields[d.name] =
            d.rational ? FieldDesc{FieldDesc::Kind::rationals, 0}
                       : FieldDesc{FieldDesc::Kind::prime, d.p};
        env.lane_of[d.name] = d.rational ? 0 : 1;
        continue;
      }
      if (is_query) {
        const auto& q = std::get<QueryStmt>(st.node);
        const std::string& anchor = q.names.at(0);
        const int lane = detail::lane_of(env, anchor, st.line);
        json result = lane == 0
                          ? detail::run_query_in_lane(env.qq, q, cfg)
                          : detail::run_query_in_lane(env.fp, q, cfg);
        if (result.contains("verdict") && result["verdict"] == "violated")
          ++violations;
        json entry;
        entry["line"] = st.line;
        entry["statement"] = st.text;
        entry["result"] = result;
        entries.push_back(std::move(entry));
        continue;
      }
      // typed declaration: find the lane through the referenced names
      int lane = -1;
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, RingDecl>) {
              if (node.literal_field)
                lane = node.literal.rational ? 0 : 1;
              else {
                auto it = env.fields.find(node.field_ref);
                if (it == env.fields.end())
                  throw invalid_input_error("unknown field '" +
                                            node.field_ref + "'");
                lane = it->second.kind == FieldDesc::Kind::rationals ? 0 : 1;
              }
            } else if constexpr (std::is_same_v<T, IdealDecl>) {
              lane = detail::lane_of(env, node.ring, st.line);
            } else if constexpr (std::is_same_v<T, ModuleDecl>) {
              lane = detail::lane_of(env, node.ring, st.line);
            } else if constexpr (std::is_same_v<T, HomDecl>) {
              lane = detail::lane_of(env, node.src, st.line);
            } else if constexpr (std::is_same_v<T, PolyextDecl>) {
              lane = detail::lane_of(env, node.ring, st.line);
            } else if constexpr (std::is_same_v<T, TrivextDecl>) {
              lane = detail::lane_of(env, node.ring, st.line);
            } else if constexpr (std::is_same_v<T, AmalgDecl>) {
              lane = detail::lane_of(env, node.a, st.line);
            } else if constexpr (std::is_same_v<T, TransportDecl>) {
              lane = detail::lane_of(env, node.ideal, st.line);
            }
          },
          st.node);
      std::string bound_name;
      std::visit(
          [&](const auto& node) {
            if constexpr (!std::is_same_v<std::decay_t<decltype(node)>,
                                          QueryStmt>)
              bound_name = node.name;
          },
          st.node);
      if (lane == 0) {
        MonomialOrder order{OrderKind::grevlex, {}, 0};
        detail::declare_in_lane(env.qq, st, RationalField{}, cfg, order);
      } else {
        // the prime field object is recovered from the referenced ring, or
        // from the declaration's field for new rings
        const auto& node = st.node;
        MonomialOrder order{OrderKind::grevlex, {}, 0};
        if (std::holds_alternative<RingDecl>(node)) {
          const auto& d = std::get<RingDecl>(node);
          std::uint64_t p = d.literal_field
                                ? d.literal.p
                                : env.fields.at(d.field_ref).characteristic;
          detail::declare_in_lane(env.fp, st, PrimeField(p), cfg, order);
        } else {
          detail::declare_in_lane(env.fp, st, PrimeField(2), cfg, order);
        }
      }
      env.lane_of[bound_name] = lane;
    } catch (const error& e) {
      ++errors;
      json entry;
      entry["line"] = st.line;
      entry["statement"] = st.text;
      entry["error"] =
          json{{"type", detail::error_type(e)}, {"message", e.what()}};
      entries.push_back(std::move(entry));
    }
  }

  RunResult out;
  out.bundle["config"] = config_json(cfg);
  out.bundle["entries"] = entries;
  out.bundle["status"] =
      json{{"errors", errors}, {"violations", violations}};
  out.exit_code = exit_code_for(errors, violations);
  return out;
}

// Canonical statement printers; their output parses back to an equivalent
// binding.

template <class F>
std::string field_literal(const F& field) {
  if constexpr (std::is_same_v<F, RationalField>)
    return "QQ";
  else
    return "Fp(" + std::to_string(field.characteristic()) + ")";
}

template <class F>
std::string print_ring_decl(const std::string& name, const RingH<F>& R) {
  std::string out = "ring " + name + " = " + field_literal(R->ctx.field) + "[";
  for (std::size_t i = 0; i < R->vars.size(); ++i) {
    if (i) out += ",";
    out += R->vars[i];
  }
  out += "] / (";
  for (std::size_t i = 0; i < R->relations.size(); ++i) {
    if (i) out += ", ";
    out += poly_str(R, R->relations[i]);
  }
  out += ")";
  return out;
}

template <class F>
std::string print_ideal_decl(const std::string& name, const IdealSpec<F>& I,
                             const std::string& ring_name) {
  std::string out = "ideal " + name + " = (";
  for (std::size_t i = 0; i < I.gens.size(); ++i) {
    if (i) out += ", ";
    out += poly_str(I.ring, I.gens[i]);
  }
  out += ") in " + ring_name;
  return out;
}

template <class F>
std::string print_module_decl(const std::string& name,
                              const ModulePresentation<F>& M,
                              const std::string& ring_name) {
  std::string out = "module " + name + " = coker " + ring_name + " matrix " +
                    std::to_string(M.rank) + " " +
                    std::to_string(M.rel_cols.size()) + " [";
  bool first = true;
  for (std::size_t r = 0; r < M.rank; ++r)
    for (std::size_t c = 0; c < M.rel_cols.size(); ++c) {
      if (!first) out += ", ";
      first = false;
      out += poly_str(M.ring, M.rel_cols[c][r]);
    }
  out += "]";
  return out;
}

/// Canonical serialization: sorted keys, indent 1, trailing newline.
inline std::string bundle_to_string(const json& bundle) {
  return bundle.dump(1) + "\n";
}

inline void emit_report(const json& bundle, const std::string& path) {
  const std::string text = bundle_to_string(bundle);
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output path '" + path + "'");
  out << text;
  if (!out) throw io_error("failed writing to '" + path + "'");
}

}  // namespace script
}  // namespace fpdlab
