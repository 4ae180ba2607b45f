#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tricert/arith.hpp"
#include "tricert/rational.hpp"

namespace tricert {

/// Exit codes: 0 success or witness found, 10 no witness (Hilbert member),
/// 2 bad input, 1 a check did not come out as expected.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitHilbert = 10;

/// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct RegionDumpOptions {
  ExactRational step = rat(1, 50);
  ExactRational threshold = rat(6, 5);
  std::optional<Int3> line;  // also sample t (1/p, 1/q, 1/r), t = j * step over one period
};

struct RegionDumpCounts {
  std::size_t grid_points = 0;
  std::size_t grid_rows = 0;  // points at distance >= threshold
  std::size_t line_samples = 0;
  std::size_t line_hits = 0;
};

/// CSV "x,y,z,dist" of grid points in [0,2)^3 with distance to Lambda at
/// least the threshold; with a line, a second block "t,x,y,z,dist,inside".
RegionDumpCounts region_dump(const RegionDumpOptions& opts, std::ostream& out);

}  // namespace tricert
