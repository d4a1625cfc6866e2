// Exact coefficient fields: arbitrary-precision rationals (GMP) and prime
// fields with a machine-word modulus. Both expose the same small interface so
// the rest of the library can be templated on the field.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "fpdlab/error.hpp"

namespace fpdlab {

struct FieldDesc {
  enum class Kind { rationals, prime } kind = Kind::rationals;
  std::uint64_t characteristic = 0;

  bool operator==(const FieldDesc&) const = default;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; the listed bases decide primality for all
// 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace detail

/// The field of rationals. Elements are GMP rationals, always kept in
/// canonical form (lowest terms, positive denominator).
class RationalField {
public:
  using Elem = mpq_class;

  FieldDesc desc() const { return {FieldDesc::Kind::rationals, 0}; }
  std::uint64_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  int sign(const Elem& a) const { return sgn(a); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw invalid_input_error("division by zero");
    return a / b;
  }
  Elem abs(const Elem& a) const { return a < 0 ? Elem(-a) : a; }

  std::string to_string(const Elem& a) const { return a.get_str(); }

  std::optional<Elem> parse(const std::string& s) const {
    Elem v;
    if (v.set_str(s, 10) != 0) return std::nullopt;
    v.canonicalize();
    return v;
  }

  bool operator==(const RationalField&) const { return true; }
};

/// Prime field F_p with p a machine-word prime. Elements are canonical
/// representatives in [0, p).
class PrimeField {
public:
  using Elem = std::uint64_t;

  PrimeField() : p_(2) {}  // value-semantic default, F_2

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ull << 62))
      throw invalid_input_error("prime field modulus exceeds machine-word cap");
    if (!detail::is_prime_u64(p))
      throw invalid_input_error("prime field characteristic " +
                                std::to_string(p) + " is not prime");
  }

  FieldDesc desc() const { return {FieldDesc::Kind::prime, p_}; }
  std::uint64_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1 % p_; }
  bool equal(Elem a, Elem b) const { return a == b; }
  int sign(Elem a) const { return a == 0 ? 0 : 1; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    if (s >= p_) s -= p_;
    return s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const { return detail::mulmod_u64(a, b, p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw invalid_input_error("division by zero");
    return detail::powmod_u64(a, p_ - 2, p_);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem abs(Elem a) const { return a; }

  std::string to_string(Elem a) const { return std::to_string(a); }

  std::optional<Elem> parse(const std::string& s) const {
    if (s.empty()) return std::nullopt;
    bool negate = s[0] == '-';
    std::size_t i = negate ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    Elem v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return std::nullopt;
      v = add(mul(v, 10 % p_), static_cast<Elem>(s[i] - '0') % p_);
    }
    return negate ? neg(v) : v;
  }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
  std::uint64_t p_;
};

}  // namespace fpdlab
