#include <ostream>

#include "tricert/cli.hpp"
#include "tricert/errors.hpp"
#include "tricert/lattice.hpp"

namespace tricert {

RegionDumpCounts region_dump(const RegionDumpOptions& opts, std::ostream& out) {
  if (opts.step <= 0 || opts.step > 2) throw InputError("--step must lie in (0, 2]");
  if (opts.threshold < 0) throw InputError("--threshold must be nonnegative");
  const std::int64_t a = to_int64(opts.step.get_num());
  const std::int64_t den = to_int64(opts.step.get_den());
  if (den > 100000) throw InputError("--step denominator too large");
  const BigInt thr_num = opts.threshold.get_num(), thr_den = opts.threshold.get_den();

  RegionDumpCounts counts;
  std::int64_t steps = 0;  // grid points per axis: i a / den < 2
  while ((steps * a) < 2 * den) ++steps;

  out << "x,y,z,dist\n";
  for (std::int64_t i = 0; i < steps; ++i)
    for (std::int64_t j = 0; j < steps; ++j)
      for (std::int64_t k = 0; k < steps; ++k) {
        ++counts.grid_points;
        const std::int64_t d = kernel::scaled_dist_lambda({i * a, j * a, k * a}, den);
        if (BigInt(static_cast<long>(d)) * thr_den < thr_num * BigInt(static_cast<long>(den))) continue;
        ++counts.grid_rows;
        out << to_string(rat(i * a, den)) << ',' << to_string(rat(j * a, den)) << ','
            << to_string(rat(k * a, den)) << ',' << to_string(rat(d, den)) << '\n';
      }

  if (opts.line) {
    const auto [p, q, r] = *opts.line;
    if (p < 1 || q < 1 || r < 1) throw InputError("--line entries must be positive");
    const std::int64_t n = lcm_of({2, p, q, r});
    out << "\nt,x,y,z,dist,inside\n";
    for (ExactRational t = 0; t < ExactRational{static_cast<long>(2 * n)}; t += opts.step) {
      const TorusPoint v = scaled_point(t, p, q, r);
      const TorusPoint m{reduce_mod(v.x, 2), reduce_mod(v.y, 2), reduce_mod(v.z, 2)};
      const ExactRational d = dist_to_lattice(m, LatticeKind::ParityLambda);
      const bool inside = d >= opts.threshold;
      ++counts.line_samples;
      counts.line_hits += inside;
      out << to_string(t) << ',' << to_string(m.x) << ',' << to_string(m.y) << ',' << to_string(m.z)
          << ',' << to_string(d) << ',' << (inside ? 1 : 0) << '\n';
    }
  }
  return counts;
}

}  // namespace tricert
