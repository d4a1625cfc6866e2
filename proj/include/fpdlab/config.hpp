// Run-wide configuration, echoed verbatim into every report.
#pragma once

#include <cstdint>
#include <string>

namespace fpdlab {

struct RunConfig {
  std::uint32_t power_cap = 8;
  std::uint32_t grade_bound = 12;
  std::uint32_t trials = 200;
  std::uint64_t seed = 0;
  std::size_t basis_cap = 5000;
  bool assume_maximal = false;
  bool equidimensional = false;
  bool exhaustive = false;
  bool timings = false;
};

}  // namespace fpdlab
