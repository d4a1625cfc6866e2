#include <catch2/catch_amalgamated.hpp>

#include "support/build.hpp"

using namespace fpdlab;
using namespace fpdlab::testsupport;

TEST_CASE("dimensions of small quotients") {
  CHECK(krull_dimension(ring({"x", "y", "z"})) == 3);
  CHECK(krull_dimension(ring({"x", "y"}, {"x*y"})) == 1);
  CHECK(krull_dimension(ring({"x", "y"}, {"x^2", "x*y"})) == 1);
  CHECK(krull_dimension(ring({})) == 0);
}

TEST_CASE("dimension is independent of the presentation of the relations") {
  // same ideal, generators vs an equivalent redundant generating set
  auto R1 = ring({"x", "y", "z"}, {"x*y - z^2", "x + y"});
  auto R2 = ring({"x", "y", "z"},
                 {"x*y - z^2", "x + y", "x^2*y - x*z^2", "x*y + y^2"});
  CHECK(krull_dimension(R1) == krull_dimension(R2));
  // and of replacing the relations by their reduced basis
  auto R3 = make_ring(testsupport::QQ{}, R1->vars, R1->ctx.order,
                      R1->relation_basis(), R1->opts);
  CHECK(krull_dimension(R1) == krull_dimension(R3));
}

TEST_CASE("coordinate subspace sweep: dim of k[x1..xn]/(x1..xd) is n-d") {
  std::vector<std::string> names = {"x1", "x2", "x3", "x4", "x5"};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::string> vars(names.begin(), names.begin() + n);
    for (std::size_t d = 1; d <= n; ++d) {
      std::vector<std::string> rels(vars.begin(), vars.begin() + d);
      CHECK(krull_dimension(ring(vars, rels)) == n - d);
    }
  }
}

TEST_CASE("quotient dimension of an ideal") {
  auto R = ring({"x", "y"});
  CHECK(ideal_quotient_dimension(ideal(R, {"x"})) == 1);
  CHECK(ideal_quotient_dimension(ideal(R, {"x", "y"})) == 0);
  CHECK(ideal_quotient_dimension(ideal(R, {"1"})) == -1);
  CHECK(ideal_quotient_dimension(ideal(R, {})) == 2);
}
