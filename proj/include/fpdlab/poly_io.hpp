// Canonical text form of polynomials: terms joined by `+`/`-`, `^` for
// powers, `*` between factors (optional on input). Printing and parsing are
// inverse bijections on normalized polynomials.
#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "fpdlab/error.hpp"
#include "fpdlab/polynomial.hpp"

namespace fpdlab {

template <class F>
std::string mono_to_string(const Monomial& m,
                           const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (!m.e[i]) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out;
}

template <class F>
std::string poly_to_string(const PolyContext<F>& ctx,
                           const std::vector<std::string>& names,
                           const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool neg = ctx.field.sign(t.coeff) < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const auto mag = ctx.field.abs(t.coeff);
    const std::string ms = mono_to_string<F>(t.mono, names);
    if (ms.empty())
      out += ctx.field.to_string(mag);
    else if (ctx.field.is_one(mag))
      out += ms;
    else
      out += ctx.field.to_string(mag) + "*" + ms;
  }
  return out;
}

namespace detail {

struct PolyScanner {
  const std::string& s;
  std::size_t pos = 0;
  std::size_t line;

  explicit PolyScanner(const std::string& text, std::size_t line_no)
      : s(text), line(line_no) {}

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
  std::string read_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) fail("expected a number");
    return s.substr(start, pos - start);
  }
  std::string read_ident() {
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
};

}  // namespace detail

/// Parses the canonical polynomial syntax. Accepts implicit multiplication
/// between adjacent factors; unknown variable names are errors.
template <class F>
Polynomial<F> parse_polynomial(const PolyContext<F>& ctx,
                               const std::map<std::string, std::uint32_t>&
                                   var_index,
                               const std::string& text,
                               std::size_t line_no = 0) {
  detail::PolyScanner sc(text, line_no);
  std::vector<Term<F>> terms;

  bool expect_term = true;
  bool negate = false;
  if (sc.peek() == '-') {
    negate = true;
    ++sc.pos;
  } else if (sc.peek() == '+') {
    ++sc.pos;
  }

  while (true) {
    if (sc.done()) {
      if (expect_term) sc.fail("expected a term");
      break;
    }
    // one term: a product of factors
    typename F::Elem coeff = negate ? ctx.field.neg(ctx.field.one())
                                    : ctx.field.one();
    Monomial mono = Monomial::one(ctx.nvars);
    bool any_factor = false;
    while (true) {
      char c = sc.peek();
      if (c == '*') {
        ++sc.pos;
        c = sc.peek();
      } else if (any_factor && c != '\0' && c != '+' && c != '-' &&
                 !std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        sc.fail("unexpected character in polynomial");
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num = sc.read_number();
        if (sc.peek() == '/') {
          ++sc.pos;
          std::string den = sc.read_number();
          auto v = ctx.field.parse(num + "/" + den);
          if (!v) sc.fail("bad rational literal");
          coeff = ctx.field.mul(coeff, *v);
        } else {
          auto v = ctx.field.parse(num);
          if (!v) sc.fail("bad numeric literal");
          coeff = ctx.field.mul(coeff, *v);
        }
        any_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string name = sc.read_ident();
        auto it = var_index.find(name);
        if (it == var_index.end()) sc.fail("unknown variable '" + name + "'");
        std::uint32_t exp = 1;
        if (sc.peek() == '^') {
          ++sc.pos;
          exp = static_cast<std::uint32_t>(std::stoul(sc.read_number()));
        }
        mono.e[it->second] += exp;
        any_factor = true;
      } else {
        break;
      }
    }
    if (!any_factor) sc.fail("expected a term");
    terms.push_back(Term<F>{std::move(mono), std::move(coeff)});
    expect_term = false;

    if (sc.done()) break;
    char c = sc.peek();
    if (c == '+') {
      negate = false;
      ++sc.pos;
      expect_term = true;
    } else if (c == '-') {
      negate = true;
      ++sc.pos;
      expect_term = true;
    } else {
      sc.fail("expected '+' or '-' between terms");
    }
  }
  return Polynomial<F>::normalized(ctx, std::move(terms));
}

}  // namespace fpdlab
