#include <catch2/catch_amalgamated.hpp>

#include "fpdlab/monomial.hpp"
#include "fpdlab/rng.hpp"

using namespace fpdlab;

namespace {

Monomial m(std::vector<std::uint32_t> e) { return Monomial{std::move(e)}; }

Monomial random_mono(Rng& rng, std::size_t n, std::uint32_t maxdeg) {
  Monomial out = Monomial::one(n);
  for (auto& x : out.e) x = static_cast<std::uint32_t>(rng.below(maxdeg + 1));
  return out;
}

}  // namespace

TEST_CASE("grevlex compares degree first, then reverse tie-break") {
  MonomialOrder grevlex{OrderKind::grevlex, {}, 0};
  // x^2 y vs x y^2: same degree, smaller last exponent wins
  CHECK(compare_monomials(grevlex, m({2, 1}), m({1, 2})) > 0);
  CHECK(compare_monomials(grevlex, m({1, 2}), m({2, 1})) < 0);
  CHECK(compare_monomials(grevlex, m({1, 1}), m({1, 1})) == 0);
  CHECK(compare_monomials(grevlex, m({0, 3}), m({1, 0})) > 0);
}

TEST_CASE("lex ignores total degree") {
  MonomialOrder lex{OrderKind::lex, {}, 0};
  // y^5 vs x with x > y
  CHECK(compare_monomials(lex, m({0, 5}), m({1, 0})) < 0);
  CHECK(compare_monomials(lex, m({1, 0}), m({0, 5})) > 0);
}

TEST_CASE("mismatched exponent lengths are rejected") {
  MonomialOrder grevlex{OrderKind::grevlex, {}, 0};
  CHECK_THROWS_AS(compare_monomials(grevlex, m({1}), m({1, 0})),
                  dimension_mismatch_error);
}

TEST_CASE("orders are antisymmetric, transitive and multiplicative") {
  Rng rng(11);
  for (OrderKind kind : {OrderKind::lex, OrderKind::grevlex}) {
    MonomialOrder o{kind, {}, 0};
    for (int iter = 0; iter < 300; ++iter) {
      auto a = random_mono(rng, 4, 5);
      auto b = random_mono(rng, 4, 5);
      auto c = random_mono(rng, 4, 5);
      CHECK(compare_monomials(o, a, b) == -compare_monomials(o, b, a));
      if (compare_monomials(o, a, b) > 0 && compare_monomials(o, b, c) > 0)
        CHECK(compare_monomials(o, a, c) > 0);
      if (compare_monomials(o, a, b) < 0)
        CHECK(compare_monomials(o, mono_mul(a, c), mono_mul(b, c)) < 0);
      // 1 is minimal
      if (!a.is_one())
        CHECK(compare_monomials(o, a, Monomial::one(4)) > 0);
    }
  }
}

TEST_CASE("variable priority permutes comparisons") {
  MonomialOrder o{OrderKind::lex, {1, 0}, 0};  // y > x
  CHECK(compare_monomials(o, m({5, 0}), m({0, 1})) < 0);
}

TEST_CASE("divisibility, quotient, lcm") {
  CHECK(mono_divides(m({1, 0}), m({2, 1})));
  CHECK_FALSE(mono_divides(m({3, 0}), m({2, 1})));
  CHECK(mono_quotient(m({2, 1}), m({1, 0})) == m({1, 1}));
  CHECK(mono_lcm(m({2, 0}), m({1, 3})) == m({2, 3}));
  CHECK(mono_coprime(m({2, 0}), m({0, 3})));
  CHECK_FALSE(mono_coprime(m({2, 1}), m({0, 3})));
}
