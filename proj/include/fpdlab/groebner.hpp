// Buchberger engine over free modules R^k (the ring case is k = 1), with the
// sugar selection strategy, both classical pair criteria, resource caps, and
// kernel (syzygy) extraction by component elimination. One engine serves
// ideals, module membership and syzygies; quotient-ring questions are asked
// by adjoining the defining relations in every component.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fpdlab/error.hpp"
#include "fpdlab/polynomial.hpp"

namespace fpdlab {

struct GBOpts {
  std::size_t max_basis = 5000;
  std::size_t max_pairs = 200000;
};

template <class F>
struct VTerm {
  std::uint32_t comp;
  Monomial mono;
  typename F::Elem coeff;
};

/// Term order on free-module terms. pot is position-over-term with lower
/// component index dominant; elim_then_pot compares the monomial's dominant
/// elimination block first (the monomial order must then be OrderKind::elim),
/// which makes module elimination of those variables possible.
struct ModOrder {
  MonomialOrder mono;
  enum class Kind { pot, elim_then_pot } kind = Kind::pot;
};

inline int compare_vterms(const ModOrder& mo, std::uint32_t ca,
                          const Monomial& ma, std::uint32_t cb,
                          const Monomial& mb) {
  if (mo.kind == ModOrder::Kind::pot) {
    if (ca != cb) return ca < cb ? 1 : -1;
    return compare_monomials(mo.mono, ma, mb);
  }
  int c = detail::grevlex_window(mo.mono, ma, mb, 0, mo.mono.elim_block);
  if (c) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return detail::grevlex_window(mo.mono, ma, mb, mo.mono.elim_block,
                                ma.e.size());
}

template <class F>
class Vec {
public:
  Vec() = default;

  static Vec from_sorted(std::vector<VTerm<F>> terms) {
    Vec v;
    v.terms_ = std::move(terms);
    return v;
  }

  static Vec normalized(const PolyContext<F>& ctx, const ModOrder& mo,
                        std::vector<VTerm<F>> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const VTerm<F>& a, const VTerm<F>& b) {
                return compare_vterms(mo, a.comp, a.mono, b.comp, b.mono) > 0;
              });
    std::vector<VTerm<F>> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().comp == t.comp &&
          out.back().mono == t.mono)
        out.back().coeff = ctx.field.add(out.back().coeff, t.coeff);
      else
        out.push_back(std::move(t));
      if (!out.empty() && ctx.field.is_zero(out.back().coeff)) out.pop_back();
    }
    Vec v;
    v.terms_ = std::move(out);
    return v;
  }

  const std::vector<VTerm<F>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const VTerm<F>& leading() const { return terms_.front(); }
  void drop_leading() { terms_.erase(terms_.begin()); }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool operator==(const Vec& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].comp != other.terms_[i].comp) return false;
      if (!(terms_[i].mono == other.terms_[i].mono)) return false;
      if (!(terms_[i].coeff == other.terms_[i].coeff)) return false;
    }
    return true;
  }

private:
  std::vector<VTerm<F>> terms_;
};

template <class F>
Vec<F> vec_from_poly(const Polynomial<F>& p, std::uint32_t comp) {
  std::vector<VTerm<F>> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) out.push_back(VTerm<F>{comp, t.mono, t.coeff});
  return Vec<F>::from_sorted(std::move(out));
}

template <class F>
Polynomial<F> vec_coordinate(const PolyContext<F>& ctx, const Vec<F>& v,
                             std::uint32_t comp) {
  std::vector<Term<F>> out;
  for (const auto& t : v.terms())
    if (t.comp == comp) out.push_back(Term<F>{t.mono, t.coeff});
  return Polynomial<F>::normalized(ctx, std::move(out));
}

template <class F>
std::uint32_t vec_max_comp(const Vec<F>& v) {
  std::uint32_t m = 0;
  for (const auto& t : v.terms()) m = std::max(m, t.comp);
  return m;
}

template <class F>
Vec<F> vec_shift_comps(const Vec<F>& v, std::uint32_t offset) {
  std::vector<VTerm<F>> out = v.terms();
  for (auto& t : out) t.comp += offset;
  return Vec<F>::from_sorted(std::move(out));
}

template <class F>
Vec<F> vec_add(const PolyContext<F>& ctx, const ModOrder& mo, const Vec<F>& p,
               const Vec<F>& q) {
  std::vector<VTerm<F>> out;
  out.reserve(p.terms().size() + q.terms().size());
  std::size_t i = 0, j = 0;
  while (i < p.terms().size() && j < q.terms().size()) {
    const auto& a = p.terms()[i];
    const auto& b = q.terms()[j];
    int c = compare_vterms(mo, a.comp, a.mono, b.comp, b.mono);
    if (c > 0) {
      out.push_back(p.terms()[i++]);
    } else if (c < 0) {
      out.push_back(q.terms()[j++]);
    } else {
      auto s = ctx.field.add(a.coeff, b.coeff);
      if (!ctx.field.is_zero(s)) out.push_back(VTerm<F>{a.comp, a.mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < p.terms().size(); ++i) out.push_back(p.terms()[i]);
  for (; j < q.terms().size(); ++j) out.push_back(q.terms()[j]);
  return Vec<F>::from_sorted(std::move(out));
}

template <class F>
Vec<F> vec_neg(const PolyContext<F>& ctx, const Vec<F>& v) {
  std::vector<VTerm<F>> out = v.terms();
  for (auto& t : out) t.coeff = ctx.field.neg(t.coeff);
  return Vec<F>::from_sorted(std::move(out));
}

template <class F>
Vec<F> vec_sub(const PolyContext<F>& ctx, const ModOrder& mo, const Vec<F>& p,
               const Vec<F>& q) {
  return vec_add(ctx, mo, p, vec_neg(ctx, q));
}

template <class F>
Vec<F> vec_mul_term(const PolyContext<F>& ctx, const Vec<F>& v,
                    const Monomial& m, const typename F::Elem& c) {
  if (ctx.field.is_zero(c)) return Vec<F>();
  std::vector<VTerm<F>> out;
  out.reserve(v.terms().size());
  for (const auto& t : v.terms())
    out.push_back(
        VTerm<F>{t.comp, mono_mul(t.mono, m), ctx.field.mul(t.coeff, c)});
  return Vec<F>::from_sorted(std::move(out));
}

template <class F>
Vec<F> vec_mul_poly(const PolyContext<F>& ctx, const ModOrder& mo,
                    const Vec<F>& v, const Polynomial<F>& p) {
  Vec<F> acc;
  for (const auto& t : p.terms())
    acc = vec_add(ctx, mo, acc, vec_mul_term(ctx, v, t.mono, t.coeff));
  return acc;
}

template <class F>
Vec<F> vec_monic(const PolyContext<F>& ctx, const Vec<F>& v) {
  if (v.is_zero() || ctx.field.is_one(v.leading().coeff)) return v;
  return vec_mul_term(ctx, v, Monomial::one(v.leading().mono.nvars()),
                      ctx.field.div(ctx.field.one(), v.leading().coeff));
}

/// Full multivariate division: reduces every term of `work`, trying divisors
/// in basis-list order (the deterministic tie-break the reports rely on).
template <class F>
Vec<F> vec_normal_form(const PolyContext<F>& ctx, const ModOrder& mo,
                       Vec<F> work, const std::vector<Vec<F>>& basis) {
  std::vector<VTerm<F>> rem;
  while (!work.is_zero()) {
    const VTerm<F> lt = work.leading();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      const auto& gl = g.leading();
      if (gl.comp == lt.comp && mono_divides(gl.mono, lt.mono)) {
        const Monomial q = mono_quotient(lt.mono, gl.mono);
        const auto c = ctx.field.div(lt.coeff, gl.coeff);
        work = vec_sub(ctx, mo, work, vec_mul_term(ctx, g, q, c));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      work.drop_leading();
    }
  }
  return Vec<F>::from_sorted(std::move(rem));
}

namespace detail {

template <class F>
struct SugaredVec {
  Vec<F> v;
  std::uint64_t sugar = 0;
};

// Division that tracks the sugar degree of the result.
template <class F>
SugaredVec<F> vec_normal_form_sugar(const PolyContext<F>& ctx,
                                    const ModOrder& mo, SugaredVec<F> work,
                                    const std::vector<SugaredVec<F>>& basis) {
  std::vector<VTerm<F>> rem;
  while (!work.v.is_zero()) {
    const VTerm<F> lt = work.v.leading();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.v.is_zero()) continue;
      const auto& gl = g.v.leading();
      if (gl.comp == lt.comp && mono_divides(gl.mono, lt.mono)) {
        const Monomial q = mono_quotient(lt.mono, gl.mono);
        const auto c = ctx.field.div(lt.coeff, gl.coeff);
        work.v = vec_sub(ctx, mo, work.v, vec_mul_term(ctx, g.v, q, c));
        work.sugar = std::max(work.sugar, g.sugar + q.degree());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      work.v.drop_leading();
    }
  }
  work.v = Vec<F>::from_sorted(std::move(rem));
  return work;
}

struct PairKey {
  std::uint64_t sugar;
  Monomial lcm;
  std::uint32_t comp;
  std::uint32_t i, j;
};

}  // namespace detail

/// Buchberger's algorithm on module generators. Returns the unique reduced
/// basis: monic elements, pairwise indivisible leading terms, fully
/// tail-reduced, sorted ascending by leading term.
template <class F>
std::vector<Vec<F>> buchberger(const PolyContext<F>& ctx, const ModOrder& mo,
                               const std::vector<Vec<F>>& gens,
                               const GBOpts& opts = {}) {
  using SV = detail::SugaredVec<F>;
  std::vector<SV> basis;
  bool scalar = true;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (vec_max_comp(g) > 0) scalar = false;
    basis.push_back(SV{vec_monic(ctx, g), g.degree()});
  }
  if (basis.size() > opts.max_basis)
    throw budget_exceeded_error(
        "basis size cap exceeded",
        "basis=" + std::to_string(basis.size()) + " pairs=0");

  auto key_less = [&](const detail::PairKey& a, const detail::PairKey& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = compare_monomials(mo.mono, a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<detail::PairKey, decltype(key_less)> queue(key_less);
  std::set<std::pair<std::uint32_t, std::uint32_t>> treated;

  auto push_pairs_for = [&](std::uint32_t t) {
    for (std::uint32_t i = 0; i < t; ++i) {
      if (basis[i].v.leading().comp != basis[t].v.leading().comp) continue;
      Monomial lcm = mono_lcm(basis[i].v.leading().mono,
                              basis[t].v.leading().mono);
      std::uint64_t s = std::max(
          basis[i].sugar +
              mono_quotient(lcm, basis[i].v.leading().mono).degree(),
          basis[t].sugar +
              mono_quotient(lcm, basis[t].v.leading().mono).degree());
      queue.insert(detail::PairKey{s, std::move(lcm),
                                   basis[i].v.leading().comp, i, t});
    }
    if (queue.size() > opts.max_pairs)
      throw budget_exceeded_error(
          "pair queue cap exceeded",
          "pairs=" + std::to_string(queue.size()) +
              " basis=" + std::to_string(basis.size()));
  };

  for (std::uint32_t t = 1; t < basis.size(); ++t) push_pairs_for(t);

  while (!queue.empty()) {
    detail::PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    const auto& gi = basis[pk.i];
    const auto& gj = basis[pk.j];
    treated.insert({pk.i, pk.j});

    // product criterion (valid in the ring case only)
    if (scalar && mono_coprime(gi.v.leading().mono, gj.v.leading().mono))
      continue;
    // chain criterion
    bool chained = false;
    for (std::uint32_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (basis[k].v.leading().comp != pk.comp) continue;
      if (!mono_divides(basis[k].v.leading().mono, pk.lcm)) continue;
      auto key_ik = std::minmax(pk.i, k);
      auto key_jk = std::minmax(pk.j, k);
      if (treated.count({key_ik.first, key_ik.second}) &&
          treated.count({key_jk.first, key_jk.second}))
        chained = true;
    }
    if (chained) continue;

    const Monomial qi = mono_quotient(pk.lcm, gi.v.leading().mono);
    const Monomial qj = mono_quotient(pk.lcm, gj.v.leading().mono);
    SV spoly;
    spoly.v = vec_sub(ctx, mo,
                      vec_mul_term(ctx, gi.v, qi, ctx.field.one()),
                      vec_mul_term(ctx, gj.v, qj, ctx.field.one()));
    spoly.sugar = std::max(gi.sugar + qi.degree(), gj.sugar + qj.degree());
    SV nf = detail::vec_normal_form_sugar(ctx, mo, std::move(spoly), basis);
    if (nf.v.is_zero()) continue;
    nf.v = vec_monic(ctx, nf.v);
    basis.push_back(std::move(nf));
    if (basis.size() > opts.max_basis)
      throw budget_exceeded_error(
          "basis size cap exceeded",
          "basis=" + std::to_string(basis.size()) +
              " pairs=" + std::to_string(queue.size()));
    push_pairs_for(static_cast<std::uint32_t>(basis.size() - 1));
  }

  // minimize: keep only elements whose leading term no other kept element
  // divides
  std::vector<Vec<F>> work;
  work.reserve(basis.size());
  for (auto& sv : basis) work.push_back(std::move(sv.v));
  std::sort(work.begin(), work.end(), [&](const Vec<F>& a, const Vec<F>& b) {
    return compare_vterms(mo, a.leading().comp, a.leading().mono,
                          b.leading().comp, b.leading().mono) < 0;
  });
  std::vector<Vec<F>> minimal;
  for (auto& g : work) {
    bool divisible = false;
    for (const auto& kept : minimal) {
      if (kept.leading().comp == g.leading().comp &&
          mono_divides(kept.leading().mono, g.leading().mono)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) minimal.push_back(std::move(g));
  }

  // tail-reduce to the unique reduced basis
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Vec<F>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = vec_monic(ctx, vec_normal_form(ctx, mo, minimal[i], others));
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Vec<F>& a, const Vec<F>& b) {
              return compare_vterms(mo, a.leading().comp, a.leading().mono,
                                    b.leading().comp, b.leading().mono) < 0;
            });
  return minimal;
}

/// True when no term's monomial touches the order's elimination block.
template <class F>
bool vec_free_of_elim_block(const MonomialOrder& order, const Vec<F>& v) {
  for (const auto& t : v.terms())
    if (elim_block_degree(order, t.mono) != 0) return false;
  return true;
}

/// Generators of { a in R^s : sum_i a_i cols_i lies in the span of
/// discard_cols plus relations * (every target component) }, i.e. the kernel
/// of the column map into the quotient module. Computed by a
/// position-over-term basis of the graph module with the target components
/// dominant; the tag components of elements with vanishing head part
/// generate the kernel. Outputs are reduced modulo the relations.
template <class F>
std::vector<Vec<F>> kernel_of_columns(
    const PolyContext<F>& ctx, std::size_t target_rank,
    const std::vector<Vec<F>>& cols, const std::vector<Vec<F>>& discard_cols,
    const std::vector<Polynomial<F>>& relations, const GBOpts& opts = {}) {
  const std::uint32_t r = static_cast<std::uint32_t>(target_rank);
  const std::uint32_t s = static_cast<std::uint32_t>(cols.size());
  if (s == 0) return {};
  ModOrder mo{ctx.order, ModOrder::Kind::pot};

  std::vector<Vec<F>> input;
  input.reserve(cols.size() + discard_cols.size() +
                relations.size() * target_rank);
  for (std::uint32_t i = 0; i < s; ++i) {
    std::vector<VTerm<F>> terms = cols[i].terms();
    terms.push_back(VTerm<F>{r + i, Monomial::one(ctx.nvars),
                             ctx.field.one()});
    input.push_back(Vec<F>::normalized(ctx, mo, std::move(terms)));
  }
  for (const auto& d : discard_cols) input.push_back(d);
  for (std::uint32_t c = 0; c < r; ++c)
    for (const auto& rel : relations) input.push_back(vec_from_poly(rel, c));

  std::vector<Vec<F>> gb = buchberger(ctx, mo, input, opts);

  // module basis of the relations inside R^s, used to reduce the output
  std::vector<Vec<F>> rel_basis;
  for (std::uint32_t c = 0; c < s; ++c)
    for (const auto& rel : relations) rel_basis.push_back(vec_from_poly(rel, c));

  std::vector<Vec<F>> out;
  for (const auto& g : gb) {
    bool head_free = true;
    for (const auto& t : g.terms())
      if (t.comp < r) {
        head_free = false;
        break;
      }
    if (!head_free) continue;
    Vec<F> shifted = Vec<F>::from_sorted([&] {
      std::vector<VTerm<F>> ts = g.terms();
      for (auto& t : ts) t.comp -= r;
      return ts;
    }());
    shifted = vec_normal_form(ctx, mo, shifted, rel_basis);
    if (!shifted.is_zero()) out.push_back(vec_monic(ctx, shifted));
  }
  return out;
}

/// Scalar wrappers: ideals are the single-component case.
template <class F>
std::vector<Polynomial<F>> scalar_buchberger(
    const PolyContext<F>& ctx, const std::vector<Polynomial<F>>& gens,
    const GBOpts& opts = {}) {
  ModOrder mo{ctx.order, ModOrder::Kind::pot};
  std::vector<Vec<F>> vgens;
  vgens.reserve(gens.size());
  for (const auto& g : gens) vgens.push_back(vec_from_poly(g, 0));
  std::vector<Vec<F>> gb = buchberger(ctx, mo, vgens, opts);
  std::vector<Polynomial<F>> out;
  out.reserve(gb.size());
  for (const auto& v : gb) out.push_back(vec_coordinate(ctx, v, 0));
  return out;
}

template <class F>
Polynomial<F> scalar_normal_form(const PolyContext<F>& ctx,
                                 const Polynomial<F>& p,
                                 const std::vector<Polynomial<F>>& basis) {
  ModOrder mo{ctx.order, ModOrder::Kind::pot};
  std::vector<Vec<F>> vb;
  vb.reserve(basis.size());
  for (const auto& g : basis) vb.push_back(vec_from_poly(g, 0));
  return vec_coordinate(ctx, vec_normal_form(ctx, mo, vec_from_poly(p, 0), vb),
                        0);
}

}  // namespace fpdlab
