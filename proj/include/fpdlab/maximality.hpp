// Probabilistic maximality certification. For a zero-dimensional quotient
// A = R/m the verdict verified-maximal is produced when a sampled element is
// primitive: its minimal polynomial is irreducible of degree dim_k(A), so A
// is a field. A certified-reducible minimal polynomial of any sample shows A
// has zero divisors, hence not-maximal. Anything else stays unconfirmed.
//
// Irreducibility over the rationals is a battery of sound partial tests
// (square-free check, quadratic discriminant, rational roots, reduction mod
// p); over a prime field the Rabin test decides outright.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "fpdlab/ring.hpp"
#include "fpdlab/rng.hpp"

namespace fpdlab {

enum class MaximalVerdict {
  verified_maximal,
  proper_zero_dimensional_unconfirmed,
  not_maximal,
};

inline const char* maximal_verdict_name(MaximalVerdict v) {
  switch (v) {
    case MaximalVerdict::verified_maximal: return "verified-maximal";
    case MaximalVerdict::proper_zero_dimensional_unconfirmed:
      return "proper-zero-dimensional-unconfirmed";
    case MaximalVerdict::not_maximal: return "not-maximal";
  }
  return "?";
}

enum class Tri { yes, no, unknown };

namespace detail {

// ---- dense univariate helpers over a generic field (ascending coeffs) ----

template <class F>
void uni_trim(const F& f, std::vector<typename F::Elem>& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <class F>
int uni_deg(const std::vector<typename F::Elem>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class F>
std::vector<typename F::Elem> uni_derivative(
    const F& f, const std::vector<typename F::Elem>& p) {
  std::vector<typename F::Elem> out;
  for (std::size_t i = 1; i < p.size(); ++i) {
    auto k = f.from_int(static_cast<long>(i));
    out.push_back(f.mul(p[i], k));
  }
  uni_trim(f, out);
  return out;
}

template <class F>
std::vector<typename F::Elem> uni_rem(const F& f,
                                      std::vector<typename F::Elem> a,
                                      const std::vector<typename F::Elem>& b) {
  uni_trim(f, a);
  while (uni_deg<F>(a) >= uni_deg<F>(b) && !a.empty()) {
    auto q = f.div(a.back(), b.back());
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(q, b[i]));
    uni_trim(f, a);
  }
  return a;
}

template <class F>
std::vector<typename F::Elem> uni_gcd(const F& f,
                                      std::vector<typename F::Elem> a,
                                      std::vector<typename F::Elem> b) {
  uni_trim(f, a);
  uni_trim(f, b);
  while (!b.empty()) {
    auto r = uni_rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <class F>
std::vector<typename F::Elem> uni_mulmod(const F& f,
                                         const std::vector<typename F::Elem>& a,
                                         const std::vector<typename F::Elem>& b,
                                         const std::vector<typename F::Elem>& m) {
  std::vector<typename F::Elem> prod(
      a.size() + b.size() ? a.size() + b.size() - 1 : 0, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  uni_trim(f, prod);
  return uni_rem(f, std::move(prod), m);
}

template <class F>
std::vector<typename F::Elem> uni_powmod(const F& f,
                                         std::vector<typename F::Elem> base,
                                         std::uint64_t e,
                                         const std::vector<typename F::Elem>& m) {
  std::vector<typename F::Elem> r{f.one()};
  base = uni_rem(f, std::move(base), m);
  while (e) {
    if (e & 1) r = uni_mulmod(f, r, base, m);
    base = uni_mulmod(f, base, base, m);
    e >>= 1;
  }
  return r;
}

// Rabin's test: x^(p^d) == x mod f and gcd(x^(p^(d/r)) - x, f) = 1 for every
// prime divisor r of d.
inline bool fp_irreducible(const PrimeField& f,
                           std::vector<std::uint64_t> poly) {
  uni_trim(f, poly);
  const int d = uni_deg<PrimeField>(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  // monic-ize
  auto inv = f.inv(poly.back());
  for (auto& c : poly) c = f.mul(c, inv);
  auto deriv = uni_derivative(f, poly);
  auto g = uni_gcd(f, poly, deriv);
  if (uni_deg<PrimeField>(g) > 0) return false;

  const std::uint64_t p = f.characteristic();
  std::vector<std::vector<std::uint64_t>> frob(d + 1);
  frob[0] = {0, 1};  // x
  for (int k = 1; k <= d; ++k)
    frob[k] = uni_powmod(f, frob[k - 1], p, poly);

  int n = d;
  for (int r = 2; r * r <= n; ++r) {
    if (n % r) continue;
    while (n % r == 0) n /= r;
    auto h = frob[d / r];
    std::vector<std::uint64_t> hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = f.sub(hx[1], 1);
    uni_trim(f, hx);
    if (uni_deg<PrimeField>(uni_gcd(f, poly, hx)) != 0) return false;
  }
  if (n > 1) {
    auto h = frob[d / n];
    std::vector<std::uint64_t> hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = f.sub(hx[1], 1);
    uni_trim(f, hx);
    if (uni_deg<PrimeField>(uni_gcd(f, poly, hx)) != 0) return false;
  }
  auto top = frob[d];
  std::vector<std::uint64_t> tx = top;
  if (tx.size() < 2) tx.resize(2, 0);
  tx[1] = f.sub(tx[1], 1);
  uni_trim(f, tx);
  return tx.empty();
}

// Factor |n| by trial division; returns the divisor list of |n| or nullopt
// when the factorization stays incomplete within the effort cap.
inline std::optional<std::vector<mpz_class>> divisors_of(mpz_class n) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class rest = n;
  for (unsigned long p = 2; p <= 1000000ul && rest > 1; p == 2 ? p = 3 : p += 2) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= static_cast<long>(p);
        ++e;
      }
      factors.push_back({mpz_class(static_cast<long>(p)), e});
    }
    if (mpz_class(p) * p > rest) break;
  }
  if (rest > 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30))
      factors.push_back({rest, 1});
    else
      return std::nullopt;
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    std::vector<mpz_class> next;
    mpz_class pk = 1;
    for (unsigned k = 0; k <= e; ++k) {
      for (const auto& d : divs) next.push_back(d * pk);
      pk *= p;
      if (next.size() > 20000) return std::nullopt;
    }
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Irreducibility of a monic rational polynomial (ascending coefficients).
inline Tri qq_irreducible(const std::vector<mpq_class>& mu) {
  RationalField QQ;
  const int d = uni_deg<RationalField>(mu);
  if (d < 1) return Tri::no;
  if (d == 1) return Tri::yes;

  auto deriv = uni_derivative(QQ, mu);
  auto g = uni_gcd(QQ, mu, deriv);
  if (uni_deg<RationalField>(g) > 0) return Tri::no;  // square factor

  // scale to a primitive integer polynomial with positive leading coefficient
  mpz_class lcm_den = 1;
  for (const auto& c : mu)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            c.get_den().get_mpz_t());
  std::vector<mpz_class> gi;
  for (const auto& c : mu) {
    mpq_class scaled = c * lcm_den;
    gi.push_back(scaled.get_num());
  }
  mpz_class content = 0;
  for (const auto& c : gi) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                                   c.get_mpz_t());
  if (content > 1)
    for (auto& c : gi) c /= content;
  if (gi.back() < 0)
    for (auto& c : gi) c = -c;

  if (d == 2) {
    mpz_class disc = gi[1] * gi[1] - 4 * gi[2] * gi[0];
    if (disc < 0) return Tri::yes;
    return mpz_perfect_square_p(disc.get_mpz_t()) ? Tri::no : Tri::yes;
  }

  // rational root search
  bool roots_complete = false;
  if (gi[0] == 0) return Tri::no;  // t divides
  auto num_divs = divisors_of(gi[0]);
  auto den_divs = divisors_of(gi.back());
  if (num_divs && den_divs) {
    roots_complete = true;
    for (const auto& p : *num_divs) {
      for (const auto& q : *den_divs) {
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (gg != 1) continue;
        for (int sign = 0; sign < 2; ++sign) {
          // evaluate sum gi[i] * p^i * q^(d-i)
          mpz_class acc = 0, pp = 1;
          mpz_class ps = sign ? mpz_class(-p) : p;
          for (int i = 0; i <= d; ++i) {
            mpz_class qq_pow;
            mpz_pow_ui(qq_pow.get_mpz_t(), q.get_mpz_t(),
                       static_cast<unsigned long>(d - i));
            acc += gi[i] * pp * qq_pow;
            pp *= ps;
          }
          if (acc == 0) return Tri::no;
        }
      }
    }
  }
  if (d == 3 && roots_complete) return Tri::yes;

  // reduction mod p certifies irreducibility when it preserves the degree
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 10007ull,
                          10009ull, 10037ull, 10039ull, 10061ull, 10067ull,
                          10069ull, 10079ull, 10091ull, 10093ull}) {
    if (mpz_divisible_ui_p(gi.back().get_mpz_t(),
                           static_cast<unsigned long>(p)))
      continue;
    PrimeField Fp(p);
    std::vector<std::uint64_t> red;
    for (const auto& c : gi) {
      mpz_class r = c % static_cast<long>(p);
      if (r < 0) r += static_cast<long>(p);
      red.push_back(r.get_ui());
    }
    if (fp_irreducible(Fp, red)) return Tri::yes;
  }
  return Tri::unknown;
}

inline Tri elem_poly_irreducible(const RationalField&,
                                 const std::vector<mpq_class>& mu) {
  return qq_irreducible(mu);
}

inline Tri elem_poly_irreducible(const PrimeField& f,
                                 const std::vector<std::uint64_t>& mu) {
  return fp_irreducible(f, mu) ? Tri::yes : Tri::no;
}

}  // namespace detail

/// Standard monomials of the initial ideal of G (assumed zero-dimensional),
/// sorted ascending in the ring order.
template <class F>
std::vector<Monomial> standard_monomials(const RingH<F>& R,
                                         const std::vector<Polynomial<F>>& gb,
                                         std::size_t cap = 4096) {
  std::vector<Monomial> leads;
  for (const auto& g : gb)
    if (!g.is_zero()) leads.push_back(g.leading().mono);
  auto is_standard = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (mono_divides(l, m)) return false;
    return true;
  };
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Monomial> queue{Monomial::one(R->vars.size())};
  std::vector<Monomial> out;
  seen.insert(queue[0].e);
  while (!queue.empty()) {
    Monomial m = queue.back();
    queue.pop_back();
    if (!is_standard(m)) continue;
    out.push_back(m);
    if (out.size() > cap)
      throw budget_exceeded_error("quotient dimension cap exceeded",
                                  "cap=" + std::to_string(cap));
    for (std::size_t i = 0; i < R->vars.size(); ++i) {
      Monomial next = m;
      ++next.e[i];
      if (seen.insert(next.e).second) queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare_monomials(R->ctx.order, a, b) < 0;
  });
  return out;
}

namespace detail {

// Coordinates of a reduced polynomial in the standard-monomial basis.
template <class F>
std::vector<typename F::Elem> coords_in_basis(
    const RingH<F>& R, const Polynomial<F>& p,
    const std::vector<Monomial>& basis) {
  std::vector<typename F::Elem> out(basis.size(), R->ctx.field.zero());
  for (const auto& t : p.terms()) {
    auto it = std::find_if(basis.begin(), basis.end(),
                           [&](const Monomial& m) { return m == t.mono; });
    if (it == basis.end())
      throw error("internal: reduced form has a non-standard monomial");
    out[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
  }
  return out;
}

// Minimal polynomial of `a` in the quotient algebra, monic ascending, via
// incremental elimination on the power vectors.
template <class F>
std::vector<typename F::Elem> minimal_polynomial(
    const RingH<F>& R, const GroebnerBasis<F>& G, const Polynomial<F>& a,
    const std::vector<Monomial>& basis) {
  const auto& f = R->ctx.field;
  const std::size_t D = basis.size();
  struct Row {
    std::vector<typename F::Elem> v;
    std::vector<typename F::Elem> aug;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  Polynomial<F> power = poly_one(R->ctx);
  for (std::size_t k = 0; k <= D; ++k) {
    std::vector<typename F::Elem> v = coords_in_basis(R, power, basis);
    std::vector<typename F::Elem> aug(k + 1, f.zero());
    aug[k] = f.one();
    for (const auto& row : rows) {
      if (f.is_zero(v[row.pivot])) continue;
      auto factor = f.div(v[row.pivot], row.v[row.pivot]);
      for (std::size_t i = 0; i < D; ++i)
        v[i] = f.sub(v[i], f.mul(factor, row.v[i]));
      for (std::size_t i = 0; i < row.aug.size(); ++i)
        aug[i] = f.sub(aug[i], f.mul(factor, row.aug[i]));
    }
    std::size_t pivot = D;
    for (std::size_t i = 0; i < D; ++i)
      if (!f.is_zero(v[i])) {
        pivot = i;
        break;
      }
    if (pivot == D) return aug;  // dependency: monic minimal polynomial
    rows.push_back(Row{std::move(v), std::move(aug), pivot});
    power = normal_form(poly_mul(R->ctx, power, a), G);
  }
  throw error("internal: no minimal polynomial found within the dimension");
}

template <class F>
Polynomial<F> random_quotient_element(const RingH<F>& R,
                                      const std::vector<Monomial>& basis,
                                      Rng& rng) {
  std::vector<Term<F>> terms;
  for (const auto& m : basis) {
    typename F::Elem c;
    if constexpr (std::is_same_v<F, RationalField>)
      c = mpq_class(rng.in_range(-2, 2));
    else
      c = rng.below(R->ctx.field.characteristic());
    if (!R->ctx.field.is_zero(c)) terms.push_back(Term<F>{m, c});
  }
  return Polynomial<F>::normalized(R->ctx, std::move(terms));
}

}  // namespace detail

/// Three-valued maximality check; see the header comment for the
/// certification logic.
template <class F>
MaximalVerdict verify_maximal(const IdealSpec<F>& m, std::uint32_t trials,
                              std::uint64_t seed) {
  const auto& R = m.ring;
  GroebnerBasis<F> G = groebner_basis(m);
  if (basis_contains_unit(G.elements)) return MaximalVerdict::not_maximal;
  const int dim = detail::dimension_from_leads<F>(R->vars.size(), G.elements);
  if (dim > 0) return MaximalVerdict::not_maximal;

  std::vector<Monomial> basis = standard_monomials(R, G.elements);
  const std::size_t D = basis.size();
  if (D == 1) return MaximalVerdict::verified_maximal;

  Rng rng(seed);
  for (std::uint32_t t = 0; t < trials; ++t) {
    Polynomial<F> a =
        normal_form(detail::random_quotient_element(R, basis, rng), G);
    if (a.is_zero()) continue;
    auto mu = detail::minimal_polynomial(R, G, a, basis);
    const int deg = detail::uni_deg<F>(mu);
    if (deg < 1) continue;
    Tri irr = detail::elem_poly_irreducible(R->ctx.field, mu);
    if (irr == Tri::no) return MaximalVerdict::not_maximal;
    if (irr == Tri::yes && static_cast<std::size_t>(deg) == D)
      return MaximalVerdict::verified_maximal;
  }
  return MaximalVerdict::proper_zero_dimensional_unconfirmed;
}

}  // namespace fpdlab
