// The four grade invariants and the randomized regular-sequence oracle, each
// producing a report with a value, an independently checkable witness and,
// for the power-colimit kinds, a stabilization trace.
//
// Values beyond the probed range are reported as infinite-up-to-bound(n),
// never as a bare number: for the Koszul kind the cochain complex has length
// n, so vanishing through degree n is the honest claim.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpdlab/complex.hpp"
#include "fpdlab/rng.hpp"

namespace fpdlab {

enum class GradeKind { koszul, ext, cech, local, regseq };

inline const char* grade_kind_name(GradeKind k) {
  switch (k) {
    case GradeKind::koszul: return "koszul";
    case GradeKind::ext: return "ext";
    case GradeKind::cech: return "cech";
    case GradeKind::local: return "local";
    case GradeKind::regseq: return "regseq";
  }
  return "?";
}

struct GradeValue {
  bool finite = true;
  std::uint32_t value = 0;  // meaningful when finite
  std::uint32_t bound = 0;  // probe bound when infinite

  static GradeValue at(std::uint32_t v) { return GradeValue{true, v, 0}; }
  static GradeValue infinite(std::uint32_t bound) {
    return GradeValue{false, 0, bound};
  }
};

/// Two grade values agree when both are finite and equal, or both exceeded
/// their probe bounds.
inline bool grade_equal(const GradeValue& a, const GradeValue& b) {
  if (a.finite != b.finite) return false;
  return !a.finite || a.value == b.value;
}

inline bool grade_leq(const GradeValue& a, const GradeValue& b) {
  if (!b.finite) return true;
  if (!a.finite) return false;
  return a.value <= b.value;
}

inline GradeValue grade_plus(const GradeValue& a, std::uint32_t t) {
  return a.finite ? GradeValue::at(a.value + t) : a;
}

inline GradeValue grade_min(const GradeValue& a, const GradeValue& b) {
  if (!a.finite) return b;
  if (!b.finite) return a;
  return a.value <= b.value ? a : b;
}

template <class F>
struct CocycleWitness {
  std::uint32_t degree = 0;
  std::uint32_t power = 1;  // which generator power produced it (cech/local)
  std::size_t copies = 0;   // the witness lives in M^copies
  std::vector<Polynomial<F>> entries;  // flattened, copy-major
};

template <class F>
struct GradeReport {
  GradeKind kind = GradeKind::koszul;
  RingH<F> ring;  // where witnesses live, for printing
  GradeValue value;
  std::uint32_t probe_hi = 0;
  std::optional<CocycleWitness<F>> cocycle;
  std::optional<std::uint32_t> ext_index;
  std::vector<Polynomial<F>> sequence;  // regseq witness
  std::vector<std::pair<std::uint32_t, GradeValue>> stabilization;
  bool stabilized = true;
  std::uint64_t seed = 0;
  std::string method;
};

namespace detail {

template <class F>
void require_proper(const IdealSpec<F>& I) {
  if (!ideal_is_proper(I))
    throw invalid_input_error("grade of the unit ideal is undefined");
}

// Least p with nonvanishing Koszul cochain cohomology for the literal
// sequence x (zero entries allowed), or infinite through the complex length.
template <class F>
std::pair<GradeValue, std::optional<CocycleWitness<F>>> koszul_value(
    const std::vector<Polynomial<F>>& x, const ModulePresentation<F>& M) {
  const std::uint32_t n = static_cast<std::uint32_t>(x.size());
  if (n == 0) {
    VanishVerdict<F> v = homology_vanishes_at(
        M, 0, static_cast<const Mat<F>*>(nullptr), 1, 0,
        static_cast<const Mat<F>*>(nullptr));
    if (v.vanishes) return {GradeValue::infinite(0), std::nullopt};
    CocycleWitness<F> w{0, 1, 1, v.witness};
    return {GradeValue::at(0), std::move(w)};
  }
  CoefComplex<F> C = koszul_cochain(x, M);
  for (std::uint32_t p = 0; p <= n; ++p) {
    VanishVerdict<F> v = cohomology_vanishes(C, p);
    if (!v.vanishes) {
      CocycleWitness<F> w{p, 1, v.copies, v.witness};
      return {GradeValue::at(p), std::move(w)};
    }
  }
  return {GradeValue::infinite(n), std::nullopt};
}

template <class F>
std::pair<GradeValue, std::optional<CocycleWitness<F>>> ext_value(
    const IdealSpec<F>& I, const ModulePresentation<F>& M,
    std::uint32_t bound) {
  FreeResolutionPrefix<F> res;
  res.module = cyclic_module(I);
  for (std::uint32_t p = 0; p <= bound; ++p) {
    extend_free_resolution(res, p + 1);
    if (resolution_rank(res, p) == 0) break;  // finite projective dimension
    VanishVerdict<F> v = hom_cohomology_at(res, p, M);
    if (!v.vanishes) {
      CocycleWitness<F> w{p, 1, v.copies, v.witness};
      return {GradeValue::at(p), std::move(w)};
    }
  }
  return {GradeValue::infinite(bound), std::nullopt};
}

inline mpq_class random_coefficient(const RationalField&, Rng& rng) {
  return mpq_class(rng.in_range(-2, 2));
}

inline std::uint64_t random_coefficient(const PrimeField& f, Rng& rng) {
  return rng.below(f.characteristic());
}

}  // namespace detail

/// Koszul grade: the least p with H^p(x, M) nonzero, over the ideal's stored
/// generator list. The zero ideal has grade 0 on a nonzero module.
template <class F>
GradeReport<F> koszul_grade(const IdealSpec<F>& I,
                            const ModulePresentation<F>& M,
                            std::uint32_t bound) {
  check_same_ring(I.ring, M.ring);
  detail::require_proper(I);
  if (bound < I.gens.size())
    throw invalid_input_error(
        "grade bound is smaller than the generator count");
  GradeReport<F> rep;
  rep.ring = I.ring;
  rep.kind = GradeKind::koszul;
  rep.probe_hi = static_cast<std::uint32_t>(I.gens.size());
  rep.method = "koszul-cochain";
  auto [value, witness] = detail::koszul_value(I.gens, M);
  rep.value = value;
  rep.cocycle = std::move(witness);
  return rep;
}

/// Ext grade: the least p with Ext^p(R/I, M) nonzero, probed through bound.
template <class F>
GradeReport<F> ext_grade(const IdealSpec<F>& I, const ModulePresentation<F>& M,
                         std::uint32_t bound) {
  check_same_ring(I.ring, M.ring);
  detail::require_proper(I);
  GradeReport<F> rep;
  rep.ring = I.ring;
  rep.kind = GradeKind::ext;
  rep.probe_hi = bound;
  rep.method = "hom-resolution";
  auto [value, witness] = detail::ext_value(I, M, bound);
  rep.value = value;
  rep.cocycle = std::move(witness);
  if (rep.value.finite) rep.ext_index = rep.value.value;
  return rep;
}

/// Cech grade, realized as the stabilized Koszul grade of generator powers
/// (x_1^t, ..., x_n^t) for t = 1..power_cap. The localization complex itself
/// is never materialized; the trace makes the colimit realization auditable.
template <class F>
GradeReport<F> cech_grade(const IdealSpec<F>& I, const ModulePresentation<F>& M,
                          std::uint32_t bound, std::uint32_t power_cap) {
  check_same_ring(I.ring, M.ring);
  detail::require_proper(I);
  if (power_cap < 1) throw invalid_input_error("power cap must be positive");
  if (bound < I.gens.size())
    throw invalid_input_error(
        "grade bound is smaller than the generator count");
  GradeReport<F> rep;
  rep.ring = I.ring;
  rep.kind = GradeKind::cech;
  rep.probe_hi = static_cast<std::uint32_t>(I.gens.size());
  rep.method = "koszul-powers";
  for (std::uint32_t t = 1; t <= power_cap; ++t) {
    std::vector<Polynomial<F>> powered;
    powered.reserve(I.gens.size());
    for (const auto& g : I.gens)
      powered.push_back(I.ring->reduce(poly_pow(I.ring->ctx, g, t)));
    auto [value, witness] = detail::koszul_value(powered, M);
    rep.stabilization.emplace_back(t, value);
    rep.value = value;
    if (witness) {
      witness->power = t;
      rep.cocycle = std::move(witness);
    } else if (t == power_cap) {
      rep.cocycle.reset();
    }
  }
  rep.stabilized = true;
  for (const auto& [t, v] : rep.stabilization)
    if (!grade_equal(v, rep.value)) rep.stabilized = false;
  return rep;
}

/// Local cohomology grade, probed as ext_grade against ideal powers I^t for
/// t = 1..power_cap with the trace recorded.
template <class F>
GradeReport<F> local_grade(const IdealSpec<F>& I, const ModulePresentation<F>& M,
                           std::uint32_t bound, std::uint32_t power_cap) {
  check_same_ring(I.ring, M.ring);
  detail::require_proper(I);
  if (power_cap < 1) throw invalid_input_error("power cap must be positive");
  GradeReport<F> rep;
  rep.ring = I.ring;
  rep.kind = GradeKind::local;
  rep.probe_hi = bound;
  rep.method = "ext-powers";
  for (std::uint32_t t = 1; t <= power_cap; ++t) {
    IdealSpec<F> It = ideal_power(I, t);
    auto [value, witness] = detail::ext_value(It, M, bound);
    rep.stabilization.emplace_back(t, value);
    rep.value = value;
    if (witness) {
      witness->power = t;
      rep.cocycle = std::move(witness);
    } else if (t == power_cap) {
      rep.cocycle.reset();
    }
  }
  rep.stabilized = true;
  for (const auto& [t, v] : rep.stabilization)
    if (!grade_equal(v, rep.value)) rep.stabilized = false;
  if (rep.value.finite) rep.ext_index = rep.value.value;
  return rep;
}

/// Greedy randomized search for a maximal regular sequence inside I on M:
/// at each step up to `trials` random small combinations of the generators
/// are tried, the first regular one extends the sequence. Length 0 is a
/// valid outcome. Sound lower bound for the Koszul grade.
template <class F>
GradeReport<F> regular_sequence_grade(const IdealSpec<F>& I,
                                      const ModulePresentation<F>& M,
                                      std::uint32_t trials,
                                      std::uint64_t seed) {
  check_same_ring(I.ring, M.ring);
  detail::require_proper(I);
  GradeReport<F> rep;
  rep.ring = I.ring;
  rep.kind = GradeKind::regseq;
  rep.seed = seed;
  rep.method = "greedy-random-combinations";
  Rng rng(seed);
  const auto& ring = I.ring;
  ModulePresentation<F> N = M;
  const std::size_t hard_cap = ring->vars.size();  // depth cannot exceed dim
  while (rep.sequence.size() < hard_cap) {
    bool found = false;
    for (std::uint32_t t = 0; t < trials && !found; ++t) {
      Polynomial<F> a;
      for (const auto& g : I.gens) {
        auto c = detail::random_coefficient(ring->ctx.field, rng);
        a = poly_add(ring->ctx, a, poly_scale(ring->ctx, g, c));
      }
      a = ring->reduce(a);
      if (a.is_zero()) continue;
      if (is_regular_element(a, N)) {
        rep.sequence.push_back(a);
        N = quotient_by_sequence(N, {a});
        found = true;
      }
    }
    if (!found) break;
  }
  rep.value = GradeValue::at(static_cast<std::uint32_t>(rep.sequence.size()));
  rep.probe_hi = static_cast<std::uint32_t>(hard_cap);
  return rep;
}

/// Re-validates a report's witness independently of the search that found
/// it: cocycles are re-checked through the vanishing machinery, sequences
/// element by element.
template <class F>
bool validate_grade_witness(const GradeReport<F>& rep, const IdealSpec<F>& I,
                            const ModulePresentation<F>& M) {
  const auto& ring = I.ring;
  if (rep.kind == GradeKind::regseq) {
    ModulePresentation<F> N = M;
    for (const auto& a : rep.sequence) {
      if (!ideal_membership(a, I)) return false;
      if (!is_regular_element(a, N)) return false;
      N = quotient_by_sequence(N, {a});
    }
    return true;
  }
  if (!rep.value.finite || !rep.cocycle) return !rep.cocycle;
  const auto& w = *rep.cocycle;

  // Rebuild the two neighbouring maps of the complex the witness came from.
  Mat<F> Din, Dout;
  bool has_in = false, has_out = false;
  std::size_t s_in = 0, s_cur = w.copies, s_out = 0;
  if (rep.kind == GradeKind::koszul || rep.kind == GradeKind::cech) {
    std::vector<Polynomial<F>> x;
    for (const auto& g : I.gens)
      x.push_back(ring->reduce(poly_pow(ring->ctx, g, w.power)));
    if (x.empty()) {
      s_cur = 1;
    } else {
      CoefComplex<F> C = koszul_cochain(x, M);
      if (w.degree >= 1) {
        Din = C.maps[w.degree - 1];
        s_in = C.ranks[w.degree - 1];
        has_in = true;
      }
      if (w.degree < C.top_degree()) {
        Dout = C.maps[w.degree];
        s_out = C.ranks[w.degree + 1];
        has_out = true;
      }
      if (C.ranks[w.degree] != w.copies) return false;
    }
  } else {
    IdealSpec<F> It = w.power == 1 ? I : ideal_power(I, w.power);
    FreeResolutionPrefix<F> res =
        free_resolution(cyclic_module(It), w.degree + 1);
    if (resolution_rank(res, w.degree) != w.copies) return false;
    if (w.degree >= 1 && resolution_rank(res, w.degree) > 0) {
      Din = mat_transpose(res.diffs[w.degree - 1].mat);
      s_in = resolution_rank(res, w.degree - 1);
      has_in = true;
    }
    if (resolution_rank(res, w.degree + 1) > 0) {
      Dout = mat_transpose(res.diffs[w.degree].mat);
      s_out = resolution_rank(res, w.degree + 1);
      has_out = true;
    }
  }

  const auto& ctx = ring->ctx;
  ModOrder mo = detail::pot_order(ring);
  // flatten the witness
  Vec<F> wvec;
  for (std::uint32_t c = 0; c < w.entries.size(); ++c)
    if (!w.entries[c].is_zero())
      wvec = vec_add(ctx, mo, wvec, vec_from_poly(w.entries[c], c));
  if (wvec.is_zero()) return false;

  // in the kernel of the outgoing map
  if (has_out) {
    std::vector<Vec<F>> cols = detail::lifted_columns(M, Dout);
    Vec<F> image;
    for (std::uint32_t c = 0; c < w.entries.size(); ++c) {
      if (w.entries[c].is_zero()) continue;
      image = vec_add(ctx, mo, image,
                      vec_mul_poly(ctx, mo, cols[c], w.entries[c]));
    }
    std::vector<Vec<F>> target_rels = detail::block_relations(M, s_out);
    for (std::uint32_t c = 0; c < M.rank * s_out; ++c)
      for (const auto& rel : ring->relations)
        target_rels.push_back(vec_from_poly(rel, c));
    auto basis = buchberger(ctx, mo, target_rels, ring->opts);
    if (!vec_normal_form(ctx, mo, image, basis).is_zero()) return false;
  }

  // not in the image of the incoming map (modulo relations)
  std::vector<Vec<F>> span;
  if (has_in) span = detail::lifted_columns(M, Din);
  (void)s_in;
  for (auto& v : detail::block_relations(M, s_cur)) span.push_back(std::move(v));
  for (std::uint32_t c = 0; c < M.rank * s_cur; ++c)
    for (const auto& rel : ring->relations) span.push_back(vec_from_poly(rel, c));
  auto span_basis = buchberger(ctx, mo, span, ring->opts);
  return !vec_normal_form(ctx, mo, wvec, span_basis).is_zero();
}

}  // namespace fpdlab
