// The Koszul complex on a finite sequence, its cochain and chain versions
// with coefficients in a presented module, and homology-vanishing decisions
// with witness extraction.
#pragma once

#include <vector>

#include "fpdlab/module.hpp"

namespace fpdlab {

namespace detail {

inline std::vector<std::vector<std::uint32_t>> subsets_of_size(
    std::uint32_t n, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out;
  if (p > n) return out;
  std::vector<std::uint32_t> cur(p);
  for (std::uint32_t i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (p == 0) break;
    // advance to the next subset in lexicographic order
    std::int32_t i = static_cast<std::int32_t>(p) - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < p; ++j)
      cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::size_t subset_index(
    const std::vector<std::vector<std::uint32_t>>& table,
    const std::vector<std::uint32_t>& subset) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == subset) return i;
  throw error("internal: subset not found");
}

}  // namespace detail

/// A bounded complex of free modules, d_p : degree p -> degree p-1. The
/// composites d_{p-1} d_p are checked to vanish at construction.
template <class F>
struct FreeComplex {
  RingH<F> ring;
  std::vector<std::size_t> ranks;    // degrees 0..n
  std::vector<ModuleMap<F>> diffs;   // diffs[p-1] is d_p
};

namespace detail {

template <class F>
void check_composites_vanish(const RingH<F>& ring,
                             const std::vector<Mat<F>>& mats) {
  for (std::size_t i = 0; i + 1 < mats.size(); ++i) {
    Mat<F> prod = mat_mul(ring->ctx, mats[i], mats[i + 1]);
    for (const auto& e : prod.a)
      if (!ring->reduce(e).is_zero())
        throw error("internal: consecutive differentials do not compose to zero");
  }
}

}  // namespace detail

/// The Koszul complex K(x): rank binomial(n,p) in degree p, basis the
/// ascending p-subsets in lexicographic order, differential
/// d(e_{i1...ip}) = sum_j (-1)^{j+1} x_{ij} e_{...without ij...}.
template <class F>
FreeComplex<F> koszul_complex(const std::vector<Polynomial<F>>& x,
                              const RingH<F>& ring) {
  if (x.empty())
    throw invalid_input_error("Koszul complex needs a nonempty sequence");
  const std::uint32_t n = static_cast<std::uint32_t>(x.size());
  const auto& ctx = ring->ctx;

  FreeComplex<F> C;
  C.ring = ring;
  std::vector<std::vector<std::vector<std::uint32_t>>> tables(n + 1);
  for (std::uint32_t p = 0; p <= n; ++p) {
    tables[p] = detail::subsets_of_size(n, p);
    C.ranks.push_back(tables[p].size());
  }
  std::vector<Mat<F>> mats;
  for (std::uint32_t p = 1; p <= n; ++p) {
    Mat<F> d = Mat<F>::zero(C.ranks[p - 1], C.ranks[p]);
    for (std::size_t col = 0; col < tables[p].size(); ++col) {
      const auto& alpha = tables[p][col];
      for (std::uint32_t j = 0; j < p; ++j) {
        std::vector<std::uint32_t> face = alpha;
        face.erase(face.begin() + j);
        const std::size_t row = detail::subset_index(tables[p - 1], face);
        Polynomial<F> term = ring->reduce(x[alpha[j]]);
        if (j % 2 == 1) term = poly_neg(ctx, term);
        d.at(row, col) = poly_add(ctx, d.at(row, col), term);
      }
    }
    mats.push_back(std::move(d));
  }
  detail::check_composites_vanish(ring, mats);
  for (std::uint32_t p = 1; p <= n; ++p)
    C.diffs.push_back(make_module_map(free_module(ring, C.ranks[p]),
                                      free_module(ring, C.ranks[p - 1]),
                                      std::move(mats[p - 1])));
  return C;
}

enum class ComplexDir { ascending, descending };

/// A complex whose terms are copies of one presented coefficient module.
/// ascending: maps[p] sends degree p to p+1 (shape ranks[p+1] x ranks[p]);
/// descending: maps[p] sends degree p+1 to p (shape ranks[p] x ranks[p+1]).
template <class F>
struct CoefComplex {
  RingH<F> ring;
  ModulePresentation<F> coef;
  std::vector<std::size_t> ranks;
  std::vector<Mat<F>> maps;
  ComplexDir dir = ComplexDir::ascending;

  std::size_t top_degree() const { return ranks.size() - 1; }
};

/// Hom(K(x), M): the Koszul cochain complex, transposed differentials.
template <class F>
CoefComplex<F> koszul_cochain(const std::vector<Polynomial<F>>& x,
                              const ModulePresentation<F>& M) {
  FreeComplex<F> K = koszul_complex(x, M.ring);
  CoefComplex<F> C;
  C.ring = M.ring;
  C.coef = M;
  C.ranks = K.ranks;
  C.dir = ComplexDir::ascending;
  for (const auto& d : K.diffs) C.maps.push_back(mat_transpose(d.mat));
  return C;
}

/// K(x) tensor M: the Koszul chain complex.
template <class F>
CoefComplex<F> koszul_chain(const std::vector<Polynomial<F>>& x,
                            const ModulePresentation<F>& M) {
  FreeComplex<F> K = koszul_complex(x, M.ring);
  CoefComplex<F> C;
  C.ring = M.ring;
  C.coef = M;
  C.ranks = K.ranks;
  C.dir = ComplexDir::descending;
  for (const auto& d : K.diffs) C.maps.push_back(d.mat);
  return C;
}

/// Generators of the degree-p cocycles (kernel of the outgoing map) on the
/// free cover of M^{ranks[p]}.
template <class F>
std::vector<Vec<F>> cocycle_generators(const CoefComplex<F>& C,
                                       std::size_t p) {
  if (p >= C.ranks.size())
    throw invalid_input_error("cohomology degree out of range");
  const std::size_t n = C.top_degree();
  if (C.dir == ComplexDir::ascending) {
    const Mat<F>* Dout = (p < n) ? &C.maps[p] : nullptr;
    return kernel_generators_of(C.coef, C.ranks[p],
                                p < n ? C.ranks[p + 1] : 0, Dout);
  }
  const Mat<F>* Dout = (p >= 1) ? &C.maps[p - 1] : nullptr;
  return kernel_generators_of(C.coef, C.ranks[p],
                              p >= 1 ? C.ranks[p - 1] : 0, Dout);
}

/// Whether the (co)homology of C at degree p vanishes; on failure the
/// verdict carries an explicit witness.
template <class F>
VanishVerdict<F> cohomology_vanishes(const CoefComplex<F>& C, std::size_t p) {
  if (p >= C.ranks.size())
    throw invalid_input_error("cohomology degree out of range");
  const std::size_t n = C.top_degree();
  if (C.dir == ComplexDir::ascending) {
    const Mat<F>* Din = (p >= 1) ? &C.maps[p - 1] : nullptr;
    const Mat<F>* Dout = (p < n) ? &C.maps[p] : nullptr;
    return homology_vanishes_at(C.coef, p >= 1 ? C.ranks[p - 1] : 0, Din,
                                C.ranks[p], p < n ? C.ranks[p + 1] : 0, Dout);
  }
  // descending: H_p = ker(maps[p-1]) / im(maps[p])
  const Mat<F>* Din = (p < n) ? &C.maps[p] : nullptr;
  const Mat<F>* Dout = (p >= 1) ? &C.maps[p - 1] : nullptr;
  return homology_vanishes_at(C.coef, p < n ? C.ranks[p + 1] : 0, Din,
                              C.ranks[p], p >= 1 ? C.ranks[p - 1] : 0, Dout);
}

}  // namespace fpdlab
