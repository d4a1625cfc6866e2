// Finitely presented algebras R = k[x1..xn]/K and their ideals. Quotient-ring
// arithmetic happens in the ambient ring with the defining relations appended
// to every ideal; there is no separate quotient-element type.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fpdlab/groebner.hpp"
#include "fpdlab/poly_io.hpp"

namespace fpdlab {

template <class F>
class RingPresentation;

template <class F>
using RingH = std::shared_ptr<const RingPresentation<F>>;

template <class F>
class RingPresentation {
public:
  PolyContext<F> ctx;
  std::vector<std::string> vars;
  std::vector<Polynomial<F>> relations;  // defining ideal K, normalized input
  GBOpts opts;
  std::vector<Polynomial<F>> rel_gb;  // frozen reduced basis of K

  const std::vector<Polynomial<F>>& relation_basis() const { return rel_gb; }

  std::map<std::string, std::uint32_t> var_index() const {
    std::map<std::string, std::uint32_t> m;
    for (std::uint32_t i = 0; i < vars.size(); ++i) m[vars[i]] = i;
    return m;
  }

  Polynomial<F> reduce(const Polynomial<F>& p) const {
    return scalar_normal_form(ctx, p, rel_gb);
  }

  /// Structural identity: same field, variables, order and defining ideal
  /// (compared through the canonical reduced basis).
  bool same_as(const RingPresentation& other) const {
    return ctx.field.desc() == other.ctx.field.desc() &&
           vars == other.vars && ctx.order == other.ctx.order &&
           rel_gb == other.rel_gb;
  }
};

template <class F>
RingH<F> make_ring(F field, std::vector<std::string> names,
                   MonomialOrder order, std::vector<Polynomial<F>> relations,
                   GBOpts opts = {}) {
  auto r = std::make_shared<RingPresentation<F>>();
  r->ctx = PolyContext<F>{std::move(field), names.size(), std::move(order)};
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw invalid_input_error("duplicate variable name '" + names[i] +
                                  "'");
  r->vars = std::move(names);
  r->opts = opts;
  for (auto& rel : relations)
    if (!rel.is_zero()) r->relations.push_back(std::move(rel));
  r->rel_gb = scalar_buchberger(r->ctx, r->relations, r->opts);
  for (const auto& g : r->rel_gb)
    if (!g.is_zero() && g.leading().mono.is_one())
      throw invalid_input_error(
          "improper presentation: the defining ideal contains 1");
  return r;
}

template <class F>
void check_same_ring(const RingH<F>& a, const RingH<F>& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b))
    throw ring_mismatch_error("operands belong to different rings");
}

/// An ideal of a RingPresentation, named by ambient representatives. The
/// stored generators are normal forms modulo the ring relations with zero
/// forms dropped; an empty list is the zero ideal.
template <class F>
struct IdealSpec {
  RingH<F> ring;
  std::vector<Polynomial<F>> gens;
};

template <class F>
IdealSpec<F> make_ideal(const RingH<F>& ring,
                        const std::vector<Polynomial<F>>& gens) {
  IdealSpec<F> I;
  I.ring = ring;
  for (const auto& g : gens) {
    Polynomial<F> r = ring->reduce(g);
    if (!r.is_zero()) I.gens.push_back(std::move(r));
  }
  return I;
}

template <class F>
struct GroebnerBasis {
  RingH<F> ring;
  std::vector<Polynomial<F>> elements;
  bool reduced = true;
};

/// Reduced basis of I + K; quotient-ring ideals are computed by appending
/// the ring's relations.
template <class F>
GroebnerBasis<F> groebner_basis(const IdealSpec<F>& I) {
  std::vector<Polynomial<F>> gens = I.gens;
  for (const auto& r : I.ring->relations) gens.push_back(r);
  return GroebnerBasis<F>{I.ring,
                          scalar_buchberger(I.ring->ctx, gens, I.ring->opts),
                          true};
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& p, const GroebnerBasis<F>& G) {
  return scalar_normal_form(G.ring->ctx, p, G.elements);
}

template <class F>
bool basis_contains_unit(const std::vector<Polynomial<F>>& gb) {
  for (const auto& g : gb)
    if (!g.is_zero() && g.leading().mono.is_one()) return true;
  return false;
}

template <class F>
bool ideal_membership(const Polynomial<F>& p, const IdealSpec<F>& I) {
  return normal_form(p, groebner_basis(I)).is_zero();
}

template <class F>
bool ideal_is_proper(const IdealSpec<F>& I) {
  return !basis_contains_unit(groebner_basis(I).elements);
}

/// Generators of I^t: all t-fold products, de-duplicated by normal form.
/// t = 0 yields the unit ideal by convention.
template <class F>
IdealSpec<F> ideal_power(const IdealSpec<F>& I, std::uint32_t t) {
  const auto& ring = I.ring;
  if (t == 0)
    return make_ideal(ring, {poly_one(ring->ctx)});
  std::vector<Polynomial<F>> current = I.gens;
  for (std::uint32_t step = 1; step < t; ++step) {
    std::vector<Polynomial<F>> next;
    for (const auto& a : current)
      for (const auto& g : I.gens) {
        Polynomial<F> p = ring->reduce(poly_mul(ring->ctx, a, g));
        if (p.is_zero()) continue;
        bool dup = false;
        for (const auto& q : next)
          if (q == p) {
            dup = true;
            break;
          }
        if (!dup) next.push_back(std::move(p));
      }
    current = std::move(next);
  }
  IdealSpec<F> out;
  out.ring = ring;
  out.gens = std::move(current);
  return out;
}

namespace detail {

// Kredel-Weispfenning: the dimension of k[x]/J equals the largest size of a
// variable subset S such that no leading monomial of the reduced basis of J
// has support inside S.
template <class F>
int dimension_from_leads(std::size_t nvars,
                         const std::vector<Polynomial<F>>& gb) {
  if (basis_contains_unit(gb)) return -1;
  if (nvars > 30)
    throw budget_exceeded_error("dimension computation cap",
                                "nvars=" + std::to_string(nvars));
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (g.leading().mono.e[i]) mask |= (1u << i);
    supports.push_back(mask);
  }
  int best = 0;
  const std::uint32_t total = 1u << nvars;
  for (std::uint32_t set = 0; set < total; ++set) {
    const int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t m : supports)
      if ((m & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace detail

/// Krull dimension of R, computed combinatorially from the initial ideal of
/// the defining relations.
template <class F>
std::uint32_t krull_dimension(const RingH<F>& R) {
  int d = detail::dimension_from_leads<F>(R->vars.size(), R->relation_basis());
  if (d < 0)
    throw invalid_input_error("improper ring presentation");
  return static_cast<std::uint32_t>(d);
}

/// Krull dimension of R/I; -1 when I is the unit ideal.
template <class F>
int ideal_quotient_dimension(const IdealSpec<F>& I) {
  return detail::dimension_from_leads<F>(I.ring->vars.size(),
                                         groebner_basis(I).elements);
}

template <class F>
std::string poly_str(const RingH<F>& R, const Polynomial<F>& p) {
  return poly_to_string(R->ctx, R->vars, p);
}

template <class F>
Polynomial<F> parse_in_ring(const RingH<F>& R, const std::string& text,
                            std::size_t line_no = 0) {
  return parse_polynomial(R->ctx, R->var_index(), text, line_no);
}

}  // namespace fpdlab
