// Sparse distributed polynomials: a term list kept strictly descending in the
// ambient monomial order, no zero coefficients, no duplicate monomials.
#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "fpdlab/field.hpp"
#include "fpdlab/monomial.hpp"

namespace fpdlab {

template <class F>
struct Term {
  Monomial mono;
  typename F::Elem coeff;
};

/// Everything polynomial arithmetic needs to know about the ambient ring:
/// the coefficient field, the variable count and the term order.
template <class F>
struct PolyContext {
  F field;
  std::size_t nvars = 0;
  MonomialOrder order;
};

template <class F>
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }

  /// Takes terms in no particular order, sorts, merges and drops zeros.
  static Polynomial normalized(const PolyContext<F>& ctx,
                               std::vector<Term<F>> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) {
                return compare_monomials(ctx.order, a.mono, b.mono) > 0;
              });
    std::vector<Term<F>> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = ctx.field.add(out.back().coeff, t.coeff);
      else
        out.push_back(std::move(t));
      if (!out.empty() && ctx.field.is_zero(out.back().coeff)) out.pop_back();
    }
    Polynomial p;
    p.terms_ = std::move(out);
    return p;
  }

  /// Adopts a list that is already sorted, merged and zero-free.
  static Polynomial from_sorted(std::vector<Term<F>> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  const std::vector<Term<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term<F>& leading() const { return terms_.front(); }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool operator==(const Polynomial& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].mono == other.terms_[i].mono)) return false;
      if (!(terms_[i].coeff == other.terms_[i].coeff)) return false;
    }
    return true;
  }

private:
  std::vector<Term<F>> terms_;
};

template <class F>
Polynomial<F> poly_constant(const PolyContext<F>& ctx,
                            typename F::Elem c) {
  if (ctx.field.is_zero(c)) return Polynomial<F>::zero();
  return Polynomial<F>::from_sorted({Term<F>{Monomial::one(ctx.nvars), c}});
}

template <class F>
Polynomial<F> poly_one(const PolyContext<F>& ctx) {
  return poly_constant(ctx, ctx.field.one());
}

template <class F>
Polynomial<F> poly_variable(const PolyContext<F>& ctx, std::size_t i) {
  Monomial m = Monomial::one(ctx.nvars);
  m.e[i] = 1;
  return Polynomial<F>::from_sorted({Term<F>{m, ctx.field.one()}});
}

template <class F>
Polynomial<F> poly_monomial(const PolyContext<F>& ctx, Monomial m,
                            typename F::Elem c) {
  if (ctx.field.is_zero(c)) return Polynomial<F>::zero();
  (void)ctx;
  return Polynomial<F>::from_sorted({Term<F>{std::move(m), std::move(c)}});
}

template <class F>
Polynomial<F> poly_add(const PolyContext<F>& ctx, const Polynomial<F>& p,
                       const Polynomial<F>& q) {
  std::vector<Term<F>> out;
  out.reserve(p.terms().size() + q.terms().size());
  std::size_t i = 0, j = 0;
  while (i < p.terms().size() && j < q.terms().size()) {
    int c = compare_monomials(ctx.order, p.terms()[i].mono, q.terms()[j].mono);
    if (c > 0) {
      out.push_back(p.terms()[i++]);
    } else if (c < 0) {
      out.push_back(q.terms()[j++]);
    } else {
      auto s = ctx.field.add(p.terms()[i].coeff, q.terms()[j].coeff);
      if (!ctx.field.is_zero(s)) out.push_back(Term<F>{p.terms()[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < p.terms().size(); ++i) out.push_back(p.terms()[i]);
  for (; j < q.terms().size(); ++j) out.push_back(q.terms()[j]);
  return Polynomial<F>::from_sorted(std::move(out));
}

template <class F>
Polynomial<F> poly_neg(const PolyContext<F>& ctx, const Polynomial<F>& p) {
  std::vector<Term<F>> out = p.terms();
  for (auto& t : out) t.coeff = ctx.field.neg(t.coeff);
  return Polynomial<F>::from_sorted(std::move(out));
}

template <class F>
Polynomial<F> poly_sub(const PolyContext<F>& ctx, const Polynomial<F>& p,
                       const Polynomial<F>& q) {
  return poly_add(ctx, p, poly_neg(ctx, q));
}

/// p * (c * m) for a single term.
template <class F>
Polynomial<F> poly_mul_term(const PolyContext<F>& ctx, const Polynomial<F>& p,
                            const Monomial& m,
                            const typename F::Elem& c) {
  if (ctx.field.is_zero(c)) return Polynomial<F>::zero();
  std::vector<Term<F>> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms())
    out.push_back(Term<F>{mono_mul(t.mono, m), ctx.field.mul(t.coeff, c)});
  return Polynomial<F>::from_sorted(std::move(out));
}

template <class F>
Polynomial<F> poly_scale(const PolyContext<F>& ctx, const Polynomial<F>& p,
                         const typename F::Elem& c) {
  return poly_mul_term(ctx, p, Monomial::one(ctx.nvars), c);
}

template <class F>
Polynomial<F> poly_mul(const PolyContext<F>& ctx, const Polynomial<F>& p,
                       const Polynomial<F>& q) {
  auto cmp = [&](const Monomial& a, const Monomial& b) {
    return compare_monomials(ctx.order, a, b) > 0;
  };
  std::map<Monomial, typename F::Elem, decltype(cmp)> acc(cmp);
  for (const auto& tp : p.terms()) {
    for (const auto& tq : q.terms()) {
      Monomial m = mono_mul(tp.mono, tq.mono);
      auto prod = ctx.field.mul(tp.coeff, tq.coeff);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(prod));
      else
        it->second = ctx.field.add(it->second, prod);
    }
  }
  std::vector<Term<F>> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!ctx.field.is_zero(c)) out.push_back(Term<F>{m, c});
  return Polynomial<F>::from_sorted(std::move(out));
}

template <class F>
Polynomial<F> poly_pow(const PolyContext<F>& ctx, const Polynomial<F>& p,
                       std::uint32_t k) {
  Polynomial<F> r = poly_one(ctx);
  Polynomial<F> base = p;
  while (k) {
    if (k & 1) r = poly_mul(ctx, r, base);
    k >>= 1;
    if (k) base = poly_mul(ctx, base, base);
  }
  return r;
}

/// Scales so the leading coefficient is 1. Zero stays zero.
template <class F>
Polynomial<F> poly_monic(const PolyContext<F>& ctx, const Polynomial<F>& p) {
  if (p.is_zero() || ctx.field.is_one(p.leading().coeff)) return p;
  return poly_scale(ctx, p,
                    ctx.field.div(ctx.field.one(), p.leading().coeff));
}

/// Reinterprets p in a ring with more variables; `index_map[i]` is the new
/// index of old variable i.
template <class F>
Polynomial<F> poly_reindex(const Polynomial<F>& p, std::size_t new_nvars,
                           const std::vector<std::uint32_t>& index_map,
                           const PolyContext<F>& new_ctx) {
  std::vector<Term<F>> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Monomial m = Monomial::one(new_nvars);
    for (std::size_t i = 0; i < t.mono.e.size(); ++i)
      m.e[index_map[i]] = t.mono.e[i];
    out.push_back(Term<F>{std::move(m), t.coeff});
  }
  return Polynomial<F>::normalized(new_ctx, std::move(out));
}

}  // namespace fpdlab
