// Monomials as exponent vectors, with the three term orders the engine
// needs: lex, grevlex, and an internal block order for elimination.
#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "fpdlab/error.hpp"

namespace fpdlab {

struct Monomial {
  std::vector<std::uint32_t> e;

  static Monomial one(std::size_t nvars) {
    return Monomial{std::vector<std::uint32_t>(nvars, 0)};
  }

  std::size_t nvars() const { return e.size(); }

  std::uint64_t degree() const {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  }

  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }

  bool operator==(const Monomial&) const = default;
};

inline void check_same_nvars(const Monomial& a, const Monomial& b) {
  if (a.e.size() != b.e.size())
    throw dimension_mismatch_error("exponent vectors of unequal length");
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < b.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

/// b / a; requires a | b.
inline Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  check_same_nvars(a, b);
  Monomial r = b;
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] -= a.e[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  Monomial r = a;
  for (std::size_t i = 0; i < b.e.size(); ++i)
    if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  check_same_nvars(a, b);
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

enum class OrderKind { lex, grevlex, elim };

/// A total multiplicative monomial order with 1 minimal. `priority` is a
/// permutation of the variable indices, highest priority first; empty means
/// the declaration order. kind == elim is internal machinery: the first
/// `elim_block` priority entries form a dominant grevlex block, which makes
/// the order an elimination order for those variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::vector<std::uint32_t> priority;
  std::size_t elim_block = 0;

  bool operator==(const MonomialOrder&) const = default;
};

namespace detail {

// Grevlex restricted to the index window [lo, hi) of the priority list.
inline int grevlex_window(const MonomialOrder& o, const Monomial& a,
                          const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    const std::uint32_t v = o.priority.empty() ? static_cast<std::uint32_t>(i)
                                               : o.priority[i];
    da += a.e[v];
    db += b.e[v];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    const std::uint32_t v = o.priority.empty() ? static_cast<std::uint32_t>(i)
                                               : o.priority[i];
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace detail

/// Three-way comparison: +1 when a > b in the order.
inline int compare_monomials(const MonomialOrder& o, const Monomial& a,
                             const Monomial& b) {
  check_same_nvars(a, b);
  const std::size_t n = a.e.size();
  switch (o.kind) {
    case OrderKind::lex:
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t v =
            o.priority.empty() ? static_cast<std::uint32_t>(i) : o.priority[i];
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
      }
      return 0;
    case OrderKind::grevlex:
      return detail::grevlex_window(o, a, b, 0, n);
    case OrderKind::elim: {
      int c = detail::grevlex_window(o, a, b, 0, o.elim_block);
      if (c) return c;
      return detail::grevlex_window(o, a, b, o.elim_block, n);
    }
  }
  return 0;
}

/// Degree of the dominant elimination block (0 when the order has none).
inline std::uint64_t elim_block_degree(const MonomialOrder& o,
                                       const Monomial& m) {
  if (o.kind != OrderKind::elim) return 0;
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < o.elim_block; ++i) {
    const std::uint32_t v =
        o.priority.empty() ? static_cast<std::uint32_t>(i) : o.priority[i];
    d += m.e[v];
  }
  return d;
}

}  // namespace fpdlab
