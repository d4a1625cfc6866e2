// Presentation builders for the three ring constructions, with ideal
// transport matching the maximal-ideal correspondences: polynomial extension
// (m -> m + xR[x]), trivial extension R(+)M (m -> m + (z_1..z_s)) and the
// amalgamation A |><| J along a nilpotent ideal of a module-finite B.
//
// The amalgamation is presented as the A-subalgebra A (+) J of A x B. Its
// algebra generators are an A-module generating set of J; the relations are
// the z_i z_j products re-expressed in the z's plus the A-module relations
// of J. Both re-expression and A-syzygies are computed in the combined ring
// k[w, u]/(K_B + K_A + (u - f(w))) by module elimination of the w-block.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpdlab/module.hpp"

namespace fpdlab {

template <class F>
struct RingHom {
  RingH<F> source;
  RingH<F> target;
  std::vector<Polynomial<F>> images;  // one target polynomial per source var
};

template <class F>
Polynomial<F> apply_hom(const RingHom<F>& h, const Polynomial<F>& p) {
  const auto& tctx = h.target->ctx;
  Polynomial<F> out;
  for (const auto& t : p.terms()) {
    Polynomial<F> term = poly_constant(tctx, t.coeff);
    for (std::size_t i = 0; i < t.mono.e.size(); ++i)
      if (t.mono.e[i])
        term = poly_mul(tctx, term, poly_pow(tctx, h.images[i], t.mono.e[i]));
    out = poly_add(tctx, out, term);
  }
  return h.target->reduce(out);
}

template <class F>
RingHom<F> make_ring_hom(const RingH<F>& source, const RingH<F>& target,
                         std::vector<Polynomial<F>> images) {
  if (!(source->ctx.field.desc() == target->ctx.field.desc()))
    throw incompatible_coefficients_error(
        "ring homomorphism across different coefficient fields");
  if (images.size() != source->vars.size())
    throw invalid_input_error("homomorphism needs one image per variable");
  for (auto& p : images) p = target->reduce(p);
  RingHom<F> h{source, target, std::move(images)};
  for (const auto& rel : source->relations)
    if (!apply_hom(h, rel).is_zero())
      throw invalid_input_error(
          "homomorphism does not kill a defining relation");
  return h;
}

enum class ConstructionKind { polyext, trivext, amalg };

template <class F>
struct ConstructionResult {
  ConstructionKind kind = ConstructionKind::polyext;
  RingH<F> base;
  RingH<F> result;
  RingHom<F> embedding;                   // base -> result
  std::vector<Polynomial<F>> extra_gens;  // adjoined generators, in result
  // trivext: the module M over the base; amalg: J as an A-module.
  std::optional<ModulePresentation<F>> attached;
};

namespace detail {

inline std::vector<std::string> fresh_names(
    const std::vector<std::string>& taken, const std::string& base,
    std::size_t count) {
  std::vector<std::string> out;
  auto used = [&](const std::string& n) {
    for (const auto& t : taken)
      if (t == n) return true;
    for (const auto& t : out)
      if (t == n) return true;
    return false;
  };
  for (std::size_t i = 1; i <= count; ++i) {
    std::string cand = base + std::to_string(i);
    for (std::size_t k = 2; used(cand); ++k)
      cand = base + std::to_string(i) + "_" + std::to_string(k);
    out.push_back(cand);
  }
  return out;
}

template <class F>
std::vector<std::uint32_t> identity_map(std::size_t n) {
  std::vector<std::uint32_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<std::uint32_t>(i);
  return m;
}

template <class F>
RingHom<F> identity_embedding(const RingH<F>& base, const RingH<F>& result) {
  std::vector<Polynomial<F>> images;
  auto idx = result->var_index();
  for (const auto& v : base->vars)
    images.push_back(poly_variable(result->ctx, idx.at(v)));
  return make_ring_hom(base, result, std::move(images));
}

}  // namespace detail

/// Adjoins one fresh variable, keeping the relations; the transport rule is
/// m -> m + xR[x].
template <class F>
ConstructionResult<F> polynomial_extension(const RingH<F>& R,
                                           const std::string& var_name) {
  for (const auto& v : R->vars)
    if (v == var_name)
      throw invalid_input_error("variable '" + var_name +
                                "' already names a ring variable");
  std::vector<std::string> vars = R->vars;
  vars.push_back(var_name);
  PolyContext<F> nctx{R->ctx.field, vars.size(), R->ctx.order};
  if (!nctx.order.priority.empty())
    nctx.order.priority.push_back(
        static_cast<std::uint32_t>(vars.size() - 1));
  auto imap = detail::identity_map<F>(R->vars.size());
  std::vector<Polynomial<F>> rels;
  for (const auto& rel : R->relations)
    rels.push_back(poly_reindex(rel, vars.size(), imap, nctx));
  RingH<F> S = make_ring(R->ctx.field, vars, nctx.order, rels, R->opts);

  ConstructionResult<F> out;
  out.kind = ConstructionKind::polyext;
  out.base = R;
  out.result = S;
  out.embedding = detail::identity_embedding(R, S);
  out.extra_gens = {poly_variable(S->ctx, S->vars.size() - 1)};
  return out;
}

/// The trivial extension R(+)M: one squared-zero generator per module
/// generator, one linear relation per presentation column; the transport
/// rule is m -> m + (z_1..z_s), matching m(+)M.
template <class F>
ConstructionResult<F> trivial_extension(const RingH<F>& R,
                                        const ModulePresentation<F>& M) {
  check_same_ring(R, M.ring);
  const std::size_t s = M.rank;
  std::vector<std::string> znames = detail::fresh_names(R->vars, "z", s);
  std::vector<std::string> vars = R->vars;
  for (const auto& z : znames) vars.push_back(z);

  PolyContext<F> nctx{R->ctx.field, vars.size(), R->ctx.order};
  if (!nctx.order.priority.empty())
    for (std::size_t i = R->vars.size(); i < vars.size(); ++i)
      nctx.order.priority.push_back(static_cast<std::uint32_t>(i));
  auto imap = detail::identity_map<F>(R->vars.size());

  std::vector<Polynomial<F>> rels;
  for (const auto& rel : R->relations)
    rels.push_back(poly_reindex(rel, vars.size(), imap, nctx));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      Monomial m = Monomial::one(vars.size());
      ++m.e[R->vars.size() + i];
      ++m.e[R->vars.size() + j];
      rels.push_back(poly_monomial(nctx, m, nctx.field.one()));
    }
  for (const auto& col : M.rel_cols) {
    Polynomial<F> rel;
    for (std::size_t i = 0; i < s; ++i) {
      Polynomial<F> ci = poly_reindex(col[i], vars.size(), imap, nctx);
      Monomial zi = Monomial::one(vars.size());
      ++zi.e[R->vars.size() + i];
      rel = poly_add(nctx, rel,
                     poly_mul(nctx, ci,
                              poly_monomial(nctx, zi, nctx.field.one())));
    }
    rels.push_back(std::move(rel));
  }
  RingH<F> T = make_ring(R->ctx.field, vars, nctx.order, rels, R->opts);

  ConstructionResult<F> out;
  out.kind = ConstructionKind::trivext;
  out.base = R;
  out.result = T;
  out.embedding = detail::identity_embedding(R, T);
  for (std::size_t i = 0; i < s; ++i)
    out.extra_gens.push_back(poly_variable(T->ctx, R->vars.size() + i));
  out.attached = M;
  return out;
}

/// Least t <= cap with J^t = 0, or nothing.
template <class F>
std::optional<std::uint32_t> nilpotency_check(const IdealSpec<F>& J,
                                              std::uint32_t cap) {
  if (cap < 1) throw invalid_input_error("nilpotency cap must be positive");
  for (std::uint32_t t = 1; t <= cap; ++t)
    if (ideal_power(J, t).gens.empty()) return t;
  return std::nullopt;
}

namespace detail {

// Scratch data for subring computations: the combined presentation
// C = k[w, u]/(K_B + K_A + (u - f(w))) with the w-block eliminated first.
template <class F>
struct CombinedRing {
  RingH<F> ring;       // elimination order, w vars first
  std::size_t wcount = 0;
  std::size_t ucount = 0;
};

template <class F>
CombinedRing<F> build_combined(const RingH<F>& A, const RingH<F>& B,
                               const RingHom<F>& f) {
  CombinedRing<F> C;
  C.wcount = B->vars.size();
  C.ucount = A->vars.size();
  std::vector<std::string> vars = B->vars;
  for (std::size_t i = 0; i < A->vars.size(); ++i)
    vars.push_back("@a" + std::to_string(i));

  MonomialOrder order;
  order.kind = OrderKind::elim;
  order.elim_block = C.wcount;
  order.priority.clear();
  for (std::size_t i = 0; i < vars.size(); ++i)
    order.priority.push_back(static_cast<std::uint32_t>(i));

  PolyContext<F> nctx{A->ctx.field, vars.size(), order};
  std::vector<std::uint32_t> bmap(B->vars.size());
  for (std::size_t i = 0; i < B->vars.size(); ++i)
    bmap[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> amap(A->vars.size());
  for (std::size_t i = 0; i < A->vars.size(); ++i)
    amap[i] = static_cast<std::uint32_t>(C.wcount + i);

  std::vector<Polynomial<F>> rels;
  for (const auto& rel : B->relations)
    rels.push_back(poly_reindex(rel, vars.size(), bmap, nctx));
  for (const auto& rel : A->relations)
    rels.push_back(poly_reindex(rel, vars.size(), amap, nctx));
  for (std::size_t i = 0; i < A->vars.size(); ++i) {
    Polynomial<F> u = poly_variable(nctx, C.wcount + i);
    Polynomial<F> fi = poly_reindex(f.images[i], vars.size(), bmap, nctx);
    rels.push_back(poly_sub(nctx, u, fi));
  }
  C.ring = make_ring(A->ctx.field, vars, order, rels, A->opts);
  return C;
}

template <class F>
Polynomial<F> into_combined_from_B(const CombinedRing<F>& C, const RingH<F>& B,
                                   const Polynomial<F>& p) {
  std::vector<std::uint32_t> bmap(B->vars.size());
  for (std::size_t i = 0; i < B->vars.size(); ++i)
    bmap[i] = static_cast<std::uint32_t>(i);
  return C.ring->reduce(
      poly_reindex(p, C.ring->vars.size(), bmap, C.ring->ctx));
}

template <class F>
Polynomial<F> combined_to_A(const CombinedRing<F>& C, const RingH<F>& A,
                            const Polynomial<F>& p) {
  std::vector<Term<F>> terms;
  for (const auto& t : p.terms()) {
    Monomial m = Monomial::one(A->vars.size());
    for (std::size_t i = 0; i < C.wcount; ++i)
      if (t.mono.e[i])
        throw error("internal: expected a w-free polynomial");
    for (std::size_t i = 0; i < C.ucount; ++i) m.e[i] = t.mono.e[C.wcount + i];
    terms.push_back(Term<F>{std::move(m), t.coeff});
  }
  return A->reduce(Polynomial<F>::normalized(A->ctx, std::move(terms)));
}

// Generators of { (a_i) in A^s : sum a_i g_i = 0 in C }, i.e. the A-module
// syzygies of elements of the combined ring. Kernel over C first, then
// module elimination of the w-block keeps the A-coefficient part.
template <class F>
std::vector<std::vector<Polynomial<F>>> a_syzygies(const CombinedRing<F>& C,
                                                   const RingH<F>& A,
                                                   const std::vector<Polynomial<F>>& gens) {
  const auto& ctx = C.ring->ctx;
  if (gens.empty()) return {};
  std::vector<Vec<F>> cols;
  for (const auto& g : gens) cols.push_back(vec_from_poly(g, 0));
  auto syz = kernel_of_columns(ctx, 1, cols, {}, C.ring->relation_basis(),
                               C.ring->opts);
  // adjoin coordinate-wise relation multiples, then eliminate the w-block
  for (std::uint32_t c = 0; c < gens.size(); ++c)
    for (const auto& rel : C.ring->relations)
      syz.push_back(vec_from_poly(rel, c));
  ModOrder elim{ctx.order, ModOrder::Kind::elim_then_pot};
  auto gb = buchberger(ctx, elim, syz, C.ring->opts);

  std::vector<std::vector<Polynomial<F>>> out;
  for (const auto& v : gb) {
    if (!vec_free_of_elim_block(ctx.order, v)) continue;
    std::vector<Polynomial<F>> row;
    bool all_zero = true;
    for (std::uint32_t c = 0; c < gens.size(); ++c) {
      Polynomial<F> coord = combined_to_A(C, A, vec_coordinate(ctx, v, c));
      if (!coord.is_zero()) all_zero = false;
      row.push_back(std::move(coord));
    }
    if (!all_zero) out.push_back(std::move(row));
  }
  return out;
}

// Writes v as an A-combination of gens inside C, when possible: the
// syzygies of (v, g_1..g_s) are eliminated down to A-coefficients and
// searched for an element with invertible first coordinate.
template <class F>
std::optional<std::vector<Polynomial<F>>> reexpress_over_A(
    const CombinedRing<F>& C, const RingH<F>& A, const Polynomial<F>& v,
    const std::vector<Polynomial<F>>& gens) {
  const auto& actx = A->ctx;
  if (v.is_zero())
    return std::vector<Polynomial<F>>(gens.size(), Polynomial<F>::zero());
  std::vector<Polynomial<F>> all{v};
  for (const auto& g : gens) all.push_back(g);
  auto rows = a_syzygies(C, A, all);

  // module basis over A, first coordinate dominant
  std::vector<Vec<F>> vecs;
  for (const auto& row : rows) {
    std::vector<VTerm<F>> terms;
    for (std::uint32_t c = 0; c < row.size(); ++c)
      for (const auto& t : row[c].terms())
        terms.push_back(VTerm<F>{c, t.mono, t.coeff});
    ModOrder pot{actx.order, ModOrder::Kind::pot};
    vecs.push_back(Vec<F>::normalized(actx, pot, std::move(terms)));
  }
  for (std::uint32_t c = 0; c < gens.size() + 1; ++c)
    for (const auto& rel : A->relations) vecs.push_back(vec_from_poly(rel, c));
  ModOrder pot{actx.order, ModOrder::Kind::pot};
  auto gb = buchberger(actx, pot, vecs, A->opts);
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    const auto& lt = g.leading();
    if (lt.comp == 0 && lt.mono.is_one()) {
      Polynomial<F> c0 = vec_coordinate(actx, g, 0);
      if (!(c0 == poly_constant(actx, lt.coeff)))
        continue;  // head coordinate must be the constant itself
      std::vector<Polynomial<F>> out;
      for (std::uint32_t c = 1; c <= gens.size(); ++c) {
        Polynomial<F> coord = vec_coordinate(actx, g, c);
        coord = poly_scale(actx, coord,
                           actx.field.neg(actx.field.div(actx.field.one(),
                                                         lt.coeff)));
        out.push_back(A->reduce(coord));
      }
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A |><|^f J, presented as the A-subalgebra A (+) J of A x B. Requires J
/// nilpotent (checked) and B module-finite over A via the supplied
/// generating set (checked: 1 and every w_j * b_l must re-express).
template <class F>
ConstructionResult<F> amalgamation(const RingH<F>& A, const RingH<F>& B,
                                   const RingHom<F>& f, const IdealSpec<F>& J,
                                   const std::vector<Polynomial<F>>& module_gens,
                                   std::uint32_t nil_cap = 16) {
  if (!(A->ctx.field.desc() == B->ctx.field.desc()))
    throw incompatible_coefficients_error(
        "amalgamation across different coefficient fields");
  check_same_ring(f.source, A);
  check_same_ring(f.target, B);
  check_same_ring(J.ring, B);
  if (!nilpotency_check(J, nil_cap))
    throw precondition_error(
        "amalgamation ideal is not nilpotent within the probe cap");

  detail::CombinedRing<F> C = detail::build_combined(A, B, f);
  std::vector<Polynomial<F>> mg;
  for (const auto& b : module_gens)
    mg.push_back(detail::into_combined_from_B(C, B, b));

  // module-finiteness of B over A via the supplied generators
  if (!detail::reexpress_over_A(C, A, C.ring->reduce(poly_one(C.ring->ctx)),
                                mg))
    throw precondition_error(
        "1 is not an A-combination of the supplied module generators");
  for (std::size_t j = 0; j < C.wcount; ++j) {
    Polynomial<F> wj = poly_variable(C.ring->ctx, j);
    for (const auto& b : mg) {
      Polynomial<F> prod = C.ring->reduce(poly_mul(C.ring->ctx, wj, b));
      if (!detail::reexpress_over_A(C, A, prod, mg))
        throw precondition_error(
            "B is not module-finite over A via the supplied generators");
    }
  }

  // A-module generators of J: products of module generators with the ideal
  // generators, pruned down to a non-redundant set
  std::vector<Polynomial<F>> zgens;
  for (const auto& b : mg)
    for (const auto& j : J.gens) {
      Polynomial<F> cand = C.ring->reduce(
          poly_mul(C.ring->ctx, b, detail::into_combined_from_B(C, B, j)));
      if (cand.is_zero()) continue;
      bool dup = false;
      for (const auto& z : zgens)
        if (z == cand) {
          dup = true;
          break;
        }
      if (dup) continue;
      if (detail::reexpress_over_A(C, A, cand, zgens)) continue;
      zgens.push_back(std::move(cand));
    }

  const std::size_t s = zgens.size();
  std::vector<std::string> znames = detail::fresh_names(A->vars, "z", s);
  std::vector<std::string> vars = A->vars;
  for (const auto& z : znames) vars.push_back(z);
  PolyContext<F> nctx{A->ctx.field, vars.size(), A->ctx.order};
  if (!nctx.order.priority.empty())
    for (std::size_t i = A->vars.size(); i < vars.size(); ++i)
      nctx.order.priority.push_back(static_cast<std::uint32_t>(i));
  auto amap = detail::identity_map<F>(A->vars.size());
  auto lift_A = [&](const Polynomial<F>& p) {
    return poly_reindex(p, vars.size(), amap, nctx);
  };
  auto zvar = [&](std::size_t i) {
    return poly_variable(nctx, A->vars.size() + i);
  };

  std::vector<Polynomial<F>> rels;
  for (const auto& rel : A->relations) rels.push_back(lift_A(rel));
  // products z_i z_j, re-expressed inside J
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      Polynomial<F> prod =
          C.ring->reduce(poly_mul(C.ring->ctx, zgens[i], zgens[j]));
      auto coeffs = detail::reexpress_over_A(C, A, prod, zgens);
      if (!coeffs)
        throw precondition_error(
            "a z-product does not re-express inside J; the generating set is "
            "not closed");
      Polynomial<F> rel = poly_mul(nctx, zvar(i), zvar(j));
      for (std::size_t k = 0; k < s; ++k)
        rel = poly_sub(nctx, rel,
                       poly_mul(nctx, lift_A((*coeffs)[k]), zvar(k)));
      rels.push_back(std::move(rel));
    }
  // A-module relations of J
  auto syz = detail::a_syzygies(C, A, zgens);
  for (const auto& row : syz) {
    Polynomial<F> rel;
    for (std::size_t k = 0; k < s; ++k)
      rel = poly_add(nctx, rel, poly_mul(nctx, lift_A(row[k]), zvar(k)));
    if (!rel.is_zero()) rels.push_back(std::move(rel));
  }

  RingH<F> T = make_ring(A->ctx.field, vars, nctx.order, rels, A->opts);

  ConstructionResult<F> out;
  out.kind = ConstructionKind::amalg;
  out.base = A;
  out.result = T;
  out.embedding = detail::identity_embedding(A, T);
  for (std::size_t i = 0; i < s; ++i)
    out.extra_gens.push_back(poly_variable(T->ctx, A->vars.size() + i));
  // J as a finitely presented A-module: the z's with their A-syzygies
  std::vector<std::vector<Polynomial<F>>> jcols;
  for (const auto& row : syz) jcols.push_back(row);
  out.attached = make_module(A, s, jcols);
  return out;
}

/// Applies the construction's transport rule: embed the generators, then
/// append the construction's adjoined generators.
template <class F>
IdealSpec<F> transport_ideal(const ConstructionResult<F>& C,
                             const IdealSpec<F>& m) {
  check_same_ring(m.ring, C.base);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : m.gens) gens.push_back(apply_hom(C.embedding, g));
  for (const auto& z : C.extra_gens) gens.push_back(z);
  return make_ideal(C.result, gens);
}

}  // namespace fpdlab
