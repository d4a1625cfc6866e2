// Per-maximal-ideal fPD estimation and mechanical verification of the grade
// identities behind the construction formulas. Every verifier computes both
// sides as grade reports and compares values; hypothesis failures yield
// inconclusive verdicts, never silent passes.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fpdlab/config.hpp"
#include "fpdlab/construct.hpp"
#include "fpdlab/grade.hpp"
#include "fpdlab/maximality.hpp"

namespace fpdlab {

enum class Verdict { verified, violated, inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

template <class F>
struct VerificationReport {
  std::string theorem_id;
  std::string instance;
  std::vector<std::pair<std::string, GradeReport<F>>> lhs, rhs;
  std::vector<std::pair<std::string, std::int64_t>> values;  // dims, heights
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
};

template <class F>
struct MaximalIdealList {
  RingH<F> ring;
  std::vector<IdealSpec<F>> ideals;
  std::vector<MaximalVerdict> verdicts;
  std::vector<bool> assumed;  // accepted through --assume-maximal
};

/// Runs verify_maximal over the list; not-maximal is an error, unconfirmed
/// is accepted only under the assume flag.
template <class F>
MaximalIdealList<F> certify_maximal_list(const RingH<F>& ring,
                                         const std::vector<IdealSpec<F>>& ideals,
                                         const RunConfig& cfg) {
  MaximalIdealList<F> out;
  out.ring = ring;
  for (const auto& m : ideals) {
    check_same_ring(m.ring, ring);
    MaximalVerdict v = verify_maximal(m, cfg.trials, cfg.seed);
    if (v == MaximalVerdict::not_maximal)
      throw invalid_input_error("a supplied ideal is not maximal");
    if (v == MaximalVerdict::proper_zero_dimensional_unconfirmed &&
        !cfg.assume_maximal)
      throw invalid_input_error(
          "maximality unconfirmed; pass --assume-maximal to proceed");
    out.ideals.push_back(m);
    out.verdicts.push_back(v);
    out.assumed.push_back(v != MaximalVerdict::verified_maximal);
  }
  return out;
}

namespace detail {

template <class F>
GradeReport<F> koszul_of(const IdealSpec<F>& I, const ModulePresentation<F>& M,
                         const RunConfig& cfg) {
  std::uint32_t bound = std::max<std::uint32_t>(
      cfg.grade_bound, static_cast<std::uint32_t>(I.gens.size()));
  return koszul_grade(I, M, bound);
}

template <class F>
ModulePresentation<F> ring_as_module(const RingH<F>& R) {
  return free_module(R, 1);
}

inline std::string grade_value_str(const GradeValue& v) {
  if (v.finite) return std::to_string(v.value);
  return "infinite-up-to-bound(" + std::to_string(v.bound) + ")";
}

}  // namespace detail

template <class F>
struct FpdEstimate {
  GradeValue estimate;
  std::vector<std::pair<std::string, GradeReport<F>>> per_ideal;
  bool lower_bound_only = true;  // cleared by --exhaustive
  MaximalIdealList<F> certified;
};

/// max over the supplied maximal ideals of K.grade(m, R); a lower bound for
/// the small finitistic dimension unless the list is asserted exhaustive.
template <class F>
FpdEstimate<F> fpd_estimate(const RingH<F>& R,
                            const std::vector<IdealSpec<F>>& ideals,
                            const RunConfig& cfg) {
  if (ideals.empty())
    throw invalid_input_error("fpd estimate needs at least one maximal ideal");
  FpdEstimate<F> out;
  out.certified = certify_maximal_list(R, ideals, cfg);
  out.lower_bound_only = !cfg.exhaustive;
  ModulePresentation<F> RM = detail::ring_as_module(R);
  bool first = true;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    GradeReport<F> rep = detail::koszul_of(ideals[i], RM, cfg);
    if (first || grade_leq(out.estimate, rep.value)) {
      out.estimate = rep.value;
      first = false;
    }
    out.per_ideal.emplace_back("m" + std::to_string(i + 1), std::move(rep));
  }
  return out;
}

/// K.grade(m, R) <= dim(R) for every supplied maximal ideal.
template <class F>
VerificationReport<F> check_dim_bound(const RingH<F>& R,
                                      const std::vector<IdealSpec<F>>& ideals,
                                      const RunConfig& cfg) {
  VerificationReport<F> rep;
  rep.theorem_id = "thm-dim";
  rep.instance = "grade bound by Krull dimension";
  certify_maximal_list(R, ideals, cfg);
  const std::uint32_t dim = krull_dimension(R);
  rep.values.emplace_back("dim", dim);
  ModulePresentation<F> RM = detail::ring_as_module(R);
  rep.verdict = Verdict::verified;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    GradeReport<F> g = detail::koszul_of(ideals[i], RM, cfg);
    if (!grade_leq(g.value, GradeValue::at(dim))) rep.verdict = Verdict::violated;
    rep.lhs.emplace_back("grade m" + std::to_string(i + 1), std::move(g));
  }
  rep.reason = rep.verdict == Verdict::verified
                   ? "every grade is bounded by the dimension"
                   : "a grade exceeds the Krull dimension";
  return rep;
}

/// Per-ideal +1 law for one polynomial variable:
/// K.grade_{R[x]}(m + xR[x], R[x]) = K.grade_R(m, R) + 1.
template <class F>
VerificationReport<F> verify_prop_geq(const RingH<F>& R, const IdealSpec<F>& m,
                                      const RunConfig& cfg) {
  VerificationReport<F> rep;
  rep.theorem_id = "prop-geq";
  rep.instance = "polynomial extension adds one to the grade";
  certify_maximal_list(R, {m}, cfg);

  std::string var = detail::fresh_names(R->vars, "x", 1)[0];
  ConstructionResult<F> C = polynomial_extension(R, var);
  IdealSpec<F> M = transport_ideal(C, m);

  GradeReport<F> lhs = detail::koszul_of(M, detail::ring_as_module(C.result), cfg);
  GradeReport<F> rhs = detail::koszul_of(m, detail::ring_as_module(R), cfg);
  GradeValue expect = grade_plus(rhs.value, 1);
  rep.verdict = grade_equal(lhs.value, expect) ? Verdict::verified
                                               : Verdict::violated;
  rep.reason = "grade(m + x) = " + detail::grade_value_str(lhs.value) +
               ", grade(m) + 1 = " + detail::grade_value_str(expect);
  rep.lhs.emplace_back("grade(m + x, R[x])", std::move(lhs));
  rep.rhs.emplace_back("grade(m, R)", std::move(rhs));
  return rep;
}

namespace detail {

// Contraction of an ideal of the one-variable extension back to the base:
// eliminate the adjoined variable through a dominant-block order.
template <class F>
IdealSpec<F> contract_to_base(const ConstructionResult<F>& C,
                              const IdealSpec<F>& MM) {
  const RingH<F>& S = C.result;
  const RingH<F>& R = C.base;
  const std::size_t n = S->vars.size();

  MonomialOrder elim;
  elim.kind = OrderKind::elim;
  elim.elim_block = 1;
  elim.priority = {static_cast<std::uint32_t>(n - 1)};
  for (std::size_t i = 0; i + 1 < n; ++i)
    elim.priority.push_back(static_cast<std::uint32_t>(i));

  RingH<F> Se = make_ring(S->ctx.field, S->vars, elim, S->relations, S->opts);
  auto idmap = identity_map<F>(n);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : MM.gens)
    gens.push_back(poly_reindex(g, n, idmap, Se->ctx));
  auto gb = groebner_basis(make_ideal(Se, gens));

  std::vector<Polynomial<F>> base_gens;
  for (const auto& g : gb.elements) {
    bool xfree = true;
    for (const auto& t : g.terms())
      if (t.mono.e[n - 1]) {
        xfree = false;
        break;
      }
    if (!xfree) continue;
    std::vector<Term<F>> terms;
    for (const auto& t : g.terms()) {
      Monomial mm = Monomial::one(R->vars.size());
      for (std::size_t i = 0; i + 1 < n; ++i) mm.e[i] = t.mono.e[i];
      terms.push_back(Term<F>{std::move(mm), t.coeff});
    }
    base_gens.push_back(
        Polynomial<F>::normalized(R->ctx, std::move(terms)));
  }
  return make_ideal(R, base_gens);
}

// Degree in the adjoined (last) variable and whether the top coefficient is
// the constant 1.
template <class F>
bool monic_in_last_var(const RingH<F>& S, const Polynomial<F>& f) {
  const std::size_t xi = S->vars.size() - 1;
  std::uint32_t top = 0;
  for (const auto& t : f.terms()) top = std::max(top, t.mono.e[xi]);
  if (top == 0) return false;
  std::vector<Term<F>> lead;
  for (const auto& t : f.terms())
    if (t.mono.e[xi] == top) {
      Monomial m = t.mono;
      m.e[xi] = 0;
      lead.push_back(Term<F>{std::move(m), t.coeff});
    }
  Polynomial<F> lc = Polynomial<F>::normalized(S->ctx, std::move(lead));
  return lc == poly_one(S->ctx);
}

template <class F>
bool ideals_equal(const IdealSpec<F>& a, const IdealSpec<F>& b) {
  auto ga = groebner_basis(a).elements;
  auto gb = groebner_basis(b).elements;
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

template <class F>
bool ideal_contains(const IdealSpec<F>& big, const IdealSpec<F>& small) {
  auto gb = groebner_basis(big);
  for (const auto& g : small.gens)
    if (!normal_form(g, gb).is_zero()) return false;
  return true;
}

}  // namespace detail

/// Hilbert-ring route: a maximal ideal MM = m R[x] + (f) with f monic whose
/// contraction is m satisfies K.grade(MM, R[x]) <= K.grade(m, R) + 1.
template <class F>
VerificationReport<F> verify_thm_poly(const ConstructionResult<F>& C,
                                      const IdealSpec<F>& MM,
                                      const IdealSpec<F>& m,
                                      const Polynomial<F>& f,
                                      const RunConfig& cfg) {
  VerificationReport<F> rep;
  rep.theorem_id = "thm-poly";
  rep.instance = "maximal ideal of R[x] with monic generator";
  if (C.kind != ConstructionKind::polyext)
    throw invalid_input_error("thm-poly needs a polynomial extension");
  check_same_ring(MM.ring, C.result);
  check_same_ring(m.ring, C.base);

  if (!detail::monic_in_last_var(C.result, C.result->reduce(f))) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "the supplied generator is not monic in the adjoined variable";
    return rep;
  }
  // MM must equal m R[x] + (f)
  IdealSpec<F> rebuilt = transport_ideal(C, m);
  rebuilt.gens.pop_back();  // drop the adjoined variable itself
  rebuilt.gens.push_back(C.result->reduce(f));
  rebuilt = make_ideal(C.result, rebuilt.gens);
  if (!detail::ideals_equal(MM, rebuilt)) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "MM does not equal m R[x] + (f)";
    return rep;
  }
  certify_maximal_list(C.result, {MM}, cfg);
  certify_maximal_list(C.base, {m}, cfg);
  // contraction must recover m (the Hilbert-ring hypothesis is automatic for
  // finitely presented algebras over a field)
  IdealSpec<F> contracted = detail::contract_to_base(C, MM);
  if (!detail::ideals_equal(contracted, m)) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "MM does not contract to the supplied maximal ideal";
    return rep;
  }

  GradeReport<F> lhs =
      detail::koszul_of(MM, detail::ring_as_module(C.result), cfg);
  GradeReport<F> rhs = detail::koszul_of(m, detail::ring_as_module(C.base), cfg);
  GradeValue bound = grade_plus(rhs.value, 1);
  rep.verdict =
      grade_leq(lhs.value, bound) ? Verdict::verified : Verdict::violated;
  rep.reason = "grade(MM) = " + detail::grade_value_str(lhs.value) +
               " against grade(m) + 1 = " + detail::grade_value_str(bound);
  rep.lhs.emplace_back("grade(MM, R[x])", std::move(lhs));
  rep.rhs.emplace_back("grade(m, R)", std::move(rhs));
  return rep;
}

/// Noetherian route: the same inequality reached through the computed
/// contraction p = MM \cap R and a maximal ideal above it.
template <class F>
VerificationReport<F> verify_thm_scr(const ConstructionResult<F>& C,
                                     const IdealSpec<F>& MM,
                                     const IdealSpec<F>& m,
                                     const RunConfig& cfg) {
  VerificationReport<F> rep;
  rep.theorem_id = "thm-scr";
  rep.instance = "maximal ideal of R[x], contraction computed by elimination";
  if (C.kind != ConstructionKind::polyext)
    throw invalid_input_error("thm-scr needs a polynomial extension");
  check_same_ring(MM.ring, C.result);
  check_same_ring(m.ring, C.base);
  certify_maximal_list(C.result, {MM}, cfg);
  certify_maximal_list(C.base, {m}, cfg);

  IdealSpec<F> p = detail::contract_to_base(C, MM);
  if (!detail::ideal_contains(m, p)) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "the supplied maximal ideal does not contain the contraction";
    return rep;
  }

  GradeReport<F> lhs =
      detail::koszul_of(MM, detail::ring_as_module(C.result), cfg);
  GradeReport<F> gp = detail::koszul_of(p, detail::ring_as_module(C.base), cfg);
  GradeReport<F> gm = detail::koszul_of(m, detail::ring_as_module(C.base), cfg);
  GradeValue via_p = grade_plus(gp.value, 1);
  GradeValue via_m = grade_plus(gm.value, 1);
  const bool ok = grade_leq(lhs.value, via_p) && grade_leq(gp.value, gm.value) &&
                  grade_leq(lhs.value, via_m);
  rep.verdict = ok ? Verdict::verified : Verdict::violated;
  rep.reason = "grade(MM) = " + detail::grade_value_str(lhs.value) +
               ", grade(p) + 1 = " + detail::grade_value_str(via_p) +
               ", grade(m) + 1 = " + detail::grade_value_str(via_m);
  rep.lhs.emplace_back("grade(MM, R[x])", std::move(lhs));
  rep.rhs.emplace_back("grade(p, R)", std::move(gp));
  rep.rhs.emplace_back("grade(m, R)", std::move(gm));
  return rep;
}

/// Adjacent primes p inside q (heights differing by one) satisfy
/// K.grade(q) <= K.grade(p) + 1. Heights are dim(R) - dim(R/.) and need the
/// equidimensional flag; primality of the inputs is the caller's assertion.
template <class F>
VerificationReport<F> verify_lemma_depthht(const RingH<F>& R,
                                           const IdealSpec<F>& p,
                                           const IdealSpec<F>& q,
                                           const RunConfig& cfg) {
  VerificationReport<F> rep;
  rep.theorem_id = "lemma-depthht";
  rep.instance = "adjacent primes, heights via dimension differences";
  check_same_ring(p.ring, R);
  check_same_ring(q.ring, R);
  if (!cfg.equidimensional) {
    rep.verdict = Verdict::inconclusive;
    rep.reason =
        "height computation dim(R) - dim(R/.) needs --equidimensional";
    return rep;
  }
  if (!detail::ideal_contains(q, p) || detail::ideals_equal(p, q)) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "the ideals are not strictly nested";
    return rep;
  }
  const int dim = static_cast<int>(krull_dimension(R));
  const int htp = dim - detail::dimension_from_leads<F>(
                            R->vars.size(), groebner_basis(p).elements);
  const int htq = dim - detail::dimension_from_leads<F>(
                            R->vars.size(), groebner_basis(q).elements);
  rep.values.emplace_back("ht(p)", htp);
  rep.values.emplace_back("ht(q)", htq);
  if (htq != htp + 1) {
    rep.verdict = Verdict::inconclusive;
    rep.reason = "heights do not differ by one";
    return rep;
  }
  GradeReport<F> gq = detail::koszul_of(q, detail::ring_as_module(R), cfg);
  GradeReport<F> gp = detail::koszul_of(p, detail::ring_as_module(R), cfg);
  rep.verdict = grade_leq(gq.value, grade_plus(gp.value, 1))
                    ? Verdict::verified
                    : Verdict::violated;
  rep.reason = "grade(q) = " + detail::grade_value_str(gq.value) +
               ", grade(p) + 1 = " +
               detail::grade_value_str(grade_plus(gp.value, 1));
  rep.lhs.emplace_back("grade(q, R)", std::move(gq));
  rep.rhs.emplace_back("grade(p, R)", std::move(gp));
  return rep;
}

/// Trivial extension: grade at the transported ideal equals
/// min(grade(m, R), grade(m, M)).
template <class F>
VerificationReport<F> verify_thm_trivext(const ConstructionResult<F>& C,
                                         const IdealSpec<F>& m,
                                         const RunConfig& cfg) {
  VerificationReport<F> rep;
  rep.theorem_id = "thm-trivext";
  rep.instance = "trivial extension minimum formula";
  if (C.kind != ConstructionKind::trivext || !C.attached)
    throw invalid_input_error("thm-trivext needs a trivial extension");
  check_same_ring(m.ring, C.base);
  certify_maximal_list(C.base, {m}, cfg);

  IdealSpec<F> mt = transport_ideal(C, m);
  GradeReport<F> lhs =
      detail::koszul_of(mt, detail::ring_as_module(C.result), cfg);
  GradeReport<F> on_ring =
      detail::koszul_of(m, detail::ring_as_module(C.base), cfg);
  GradeReport<F> on_module = detail::koszul_of(m, *C.attached, cfg);
  GradeValue expect = grade_min(on_ring.value, on_module.value);
  rep.verdict = grade_equal(lhs.value, expect) ? Verdict::verified
                                               : Verdict::violated;
  rep.reason = "grade at transported ideal = " +
               detail::grade_value_str(lhs.value) +
               ", min of base grades = " + detail::grade_value_str(expect);
  rep.lhs.emplace_back("grade(m(+)M, R(+)M)", std::move(lhs));
  rep.rhs.emplace_back("grade(m, R)", std::move(on_ring));
  rep.rhs.emplace_back("grade(m, M)", std::move(on_module));
  return rep;
}

/// Amalgamation: grade at the transported ideal equals
/// min(grade(m, A), grade(m, J)) with J the attached A-module.
template <class F>
VerificationReport<F> verify_thm_amg(const ConstructionResult<F>& C,
                                     const IdealSpec<F>& m,
                                     const RunConfig& cfg) {
  VerificationReport<F> rep;
  rep.theorem_id = "thm-amg";
  rep.instance = "amalgamation minimum formula";
  if (C.kind != ConstructionKind::amalg || !C.attached)
    throw invalid_input_error("thm-amg needs an amalgamation");
  check_same_ring(m.ring, C.base);
  certify_maximal_list(C.base, {m}, cfg);

  IdealSpec<F> mt = transport_ideal(C, m);
  GradeReport<F> lhs =
      detail::koszul_of(mt, detail::ring_as_module(C.result), cfg);
  GradeReport<F> on_ring =
      detail::koszul_of(m, detail::ring_as_module(C.base), cfg);
  GradeReport<F> on_module = detail::koszul_of(m, *C.attached, cfg);
  GradeValue expect = grade_min(on_ring.value, on_module.value);
  rep.verdict = grade_equal(lhs.value, expect) ? Verdict::verified
                                               : Verdict::violated;
  rep.reason = "grade at transported ideal = " +
               detail::grade_value_str(lhs.value) +
               ", min of base grades = " + detail::grade_value_str(expect);
  rep.lhs.emplace_back("grade(m', A|><|J)", std::move(lhs));
  rep.rhs.emplace_back("grade(m, A)", std::move(on_ring));
  rep.rhs.emplace_back("grade(m, J)", std::move(on_module));
  return rep;
}

/// Batch check of the proposition items that are testable per instance:
/// (1) grade additivity along an oracle-certified regular sequence,
/// (3) monotonicity under inclusion when a larger ideal is supplied,
/// (7) Koszul grade stability under generator powers,
/// (8) local grade trace constant and equal to the Ext grade,
/// (9) Koszul grade equals Ext grade.
template <class F>
VerificationReport<F> verify_prop_items(const IdealSpec<F>& I,
                                        const std::optional<IdealSpec<F>>& J,
                                        const ModulePresentation<F>& M,
                                        const RunConfig& cfg) {
  VerificationReport<F> rep;
  rep.theorem_id = "prop-items";
  rep.instance = "grade proposition batch";
  std::ostringstream why;
  bool ok = true;

  GradeReport<F> kg = detail::koszul_of(I, M, cfg);
  GradeReport<F> eg = ext_grade(I, M, cfg.grade_bound);

  // (9)
  const bool item9 = grade_equal(kg.value, eg.value);
  ok = ok && item9;
  why << "(9) koszul=" << detail::grade_value_str(kg.value)
      << " ext=" << detail::grade_value_str(eg.value)
      << (item9 ? " ok" : " MISMATCH") << "; ";

  // (1)
  GradeReport<F> seq = regular_sequence_grade(I, M, cfg.trials, cfg.seed);
  ModulePresentation<F> Mq = quotient_by_sequence(M, seq.sequence);
  GradeReport<F> kq = detail::koszul_of(I, Mq, cfg);
  GradeValue shifted = grade_plus(
      kq.value, static_cast<std::uint32_t>(seq.sequence.size()));
  const bool item1 = grade_equal(kg.value, shifted);
  ok = ok && item1;
  why << "(1) t=" << seq.sequence.size()
      << " grade(M/yM)+t=" << detail::grade_value_str(shifted)
      << (item1 ? " ok" : " MISMATCH") << "; ";

  // (3)
  if (J) {
    check_same_ring(J->ring, I.ring);
    if (!detail::ideal_contains(*J, I)) {
      rep.verdict = Verdict::inconclusive;
      rep.reason = "the supplied larger ideal does not contain I";
      return rep;
    }
    GradeReport<F> kj = detail::koszul_of(*J, M, cfg);
    const bool item3 = grade_leq(kg.value, kj.value);
    ok = ok && item3;
    why << "(3) grade(J)=" << detail::grade_value_str(kj.value)
        << (item3 ? " ok" : " MISMATCH") << "; ";
    rep.rhs.emplace_back("grade(J, M)", std::move(kj));
  }

  // (7)
  GradeReport<F> cg = cech_grade(I, M, std::max<std::uint32_t>(
                                           cfg.grade_bound,
                                           static_cast<std::uint32_t>(
                                               I.gens.size())),
                                 cfg.power_cap);
  const bool item7 = cg.stabilized && grade_equal(cg.value, kg.value);
  ok = ok && item7;
  why << "(7) powers" << (item7 ? " stable" : " UNSTABLE") << "; ";

  // (8)
  GradeReport<F> lg = local_grade(I, M, cfg.grade_bound, cfg.power_cap);
  const bool item8 = lg.stabilized && grade_equal(lg.value, eg.value);
  ok = ok && item8;
  why << "(8) local trace" << (item8 ? " stable" : " UNSTABLE");

  rep.verdict = ok ? Verdict::verified : Verdict::violated;
  rep.reason = why.str();
  rep.lhs.emplace_back("koszul", std::move(kg));
  rep.rhs.emplace_back("ext", std::move(eg));
  rep.rhs.emplace_back("regseq", std::move(seq));
  rep.rhs.emplace_back("cech", std::move(cg));
  rep.rhs.emplace_back("local", std::move(lg));
  return rep;
}

}  // namespace fpdlab
