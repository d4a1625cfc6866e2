// The curated grade instances shared by the unit tests and the acceptance
// suite. Expected values were computed with the independent graded oracle
// (see graded_oracle.hpp) where its scope allows, and by hand from the
// definitions otherwise; the suite test re-derives the oracle values on
// every run before asserting them against the library.
#pragma once

#include <string>
#include <vector>

#include "build.hpp"
#include "graded_oracle.hpp"

namespace fpdlab::testsupport {

struct CuratedInstance {
  std::string name;
  RingH<QQ> R;
  IdealSpec<QQ> I;
  ModulePresentation<QQ> M;
  std::uint32_t expected_grade = 0;
  bool oracle_checkable = false;
  oracle::Instance oracle;
};

inline std::vector<CuratedInstance> curated_suite() {
  std::vector<CuratedInstance> out;
  auto add = [&](std::string name, RingH<QQ> R, std::vector<std::string> gens,
                 ModulePresentation<QQ> M, std::uint32_t expected,
                 bool checkable, oracle::Instance orc) {
    CuratedInstance c;
    c.name = std::move(name);
    c.R = R;
    c.I = ideal(R, gens);
    c.M = std::move(M);
    c.expected_grade = expected;
    c.oracle_checkable = checkable;
    c.oracle = std::move(orc);
    out.push_back(std::move(c));
  };

  {
    auto R = ring({"x", "y"});
    add("plane-xy", R, {"x", "y"}, free_module(R, 1), 2, true,
        {2, {}, {{{{1, 0}, 1}}, {{{0, 1}, 1}}}});
    add("plane-x", R, {"x"}, free_module(R, 1), 1, true,
        {2, {}, {{{{1, 0}, 1}}}});
    add("plane-x2-xy", R, {"x^2", "x*y"}, free_module(R, 1), 1, true,
        {2, {}, {{{{2, 0}, 1}}, {{{1, 1}, 1}}}});
    add("plane-on-quotient", R, {"x", "y"}, module_cols(R, 1, {{"x"}}), 1,
        true, {2, {{1, 0}}, {{{{1, 0}, 1}}, {{{0, 1}, 1}}}});
    add("plane-y-on-quotient", R, {"y"}, module_cols(R, 1, {{"x"}}), 1, true,
        {2, {{1, 0}}, {{{{0, 1}, 1}}}});
    // rank-2 module: R + R/(x); the minimum of the two summand grades
    std::vector<std::vector<Polynomial<QQ>>> cols;
    cols.push_back({Polynomial<QQ>::zero(), p(R, "x")});
    add("plane-rank2", R, {"x", "y"}, make_module(R, 2, cols), 1, false, {});
  }
  {
    auto R = ring({"x", "y"}, {"x^2", "x*y"});
    add("socle", R, {"x", "y"}, free_module(R, 1), 0, true,
        {2, {{2, 0}, {1, 1}}, {{{{1, 0}, 1}}, {{{0, 1}, 1}}}});
  }
  {
    auto R = ring({"x", "y"}, {"x*y"});
    add("cross", R, {"x", "y"}, free_module(R, 1), 1, true,
        {2, {{1, 1}}, {{{{1, 0}, 1}}, {{{0, 1}, 1}}}});
  }
  {
    auto R = ring({"x", "y", "z"});
    add("space-xyz", R, {"x", "y", "z"}, free_module(R, 1), 3, true,
        {3, {}, {{{{1, 0, 0}, 1}}, {{{0, 1, 0}, 1}}, {{{0, 0, 1}, 1}}}});
  }
  {
    auto R = ring({"x", "y", "z"}, {"x*y"});
    add("space-cross", R, {"x", "y", "z"}, free_module(R, 1), 2, true,
        {3, {{1, 1, 0}}, {{{{1, 0, 0}, 1}}, {{{0, 1, 0}, 1}},
                          {{{0, 0, 1}, 1}}}});
  }
  {
    auto R = ring({"x"});
    add("line", R, {"x"}, free_module(R, 1), 1, true,
        {1, {}, {{{{1}, 1}}}});
  }
  {
    auto R = ring({"x", "y"}, {"x^2"});
    add("dual-y", R, {"y"}, free_module(R, 1), 1, true,
        {2, {{2, 0}}, {{{{0, 1}, 1}}}});
    add("dual-x", R, {"x"}, free_module(R, 1), 0, true,
        {2, {{2, 0}}, {{{{1, 0}, 1}}}});
  }
  {
    auto R = ring({});
    add("point", R, {}, free_module(R, 1), 0, false, {});
  }
  return out;
}

}  // namespace fpdlab::testsupport
