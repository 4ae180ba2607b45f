#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "tricert/arith.hpp"
#include "tricert/classifier.hpp"
#include "tricert/cli.hpp"
#include "tricert/jacobsthal.hpp"
#include "tricert/lattice.hpp"
#include "tricert/lemmas.hpp"
#include "tricert/line_search.hpp"
#include "tricert/moments.hpp"

namespace props {

namespace {

using namespace tricert;
using Rng = std::mt19937_64;

struct Check {
  Result r;
  Check(std::string module, std::string name) {
    r.module = std::move(module);
    r.name = std::move(name);
  }
  template <class Msg>
  void expect(bool cond, Msg msg) {
    ++r.cases;
    if (!cond) {
      if (r.failures++ == 0) r.first_failure = msg();
    }
  }
};

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Rational in [lo, hi] with denominator at most max_den.
ExactRational rand_q(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  const std::int64_t den = uniform(rng, 1, max_den);
  return rat(uniform(rng, lo * den, hi * den), den);
}

TorusPoint rand_point(Rng& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
  return {rand_q(rng, lo, hi, max_den), rand_q(rng, lo, hi, max_den), rand_q(rng, lo, hi, max_den)};
}

std::string pt(const TorusPoint& v) {
  return "(" + to_string(v.x) + ", " + to_string(v.y) + ", " + to_string(v.z) + ")";
}

std::string tri(std::int64_t p, std::int64_t q, std::int64_t r) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

Int3 rand_hyperbolic(Rng& rng, std::int64_t lo, std::int64_t hi) {
  for (;;) {
    const Int3 t{uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
    if (is_hyperbolic(t[0], t[1], t[2])) return t;
  }
}

ExactRational dist_lambda(const TorusPoint& v) { return dist_to_lattice(v, LatticeKind::ParityLambda); }

// ---------------------------------------------------------------- exact_lattice

Result lattice_bounds(std::uint64_t seed) {
  Check c("exact_lattice", "distance bounds and Z3 <= Lambda <= 2Z3");
  Rng rng(seed);
  for (int i = 0; i < 10000; ++i) {
    const TorusPoint v = rand_point(rng, -3, 3, 30);
    const auto z3 = dist_to_lattice(v, LatticeKind::StandardZ3);
    const auto lam = dist_lambda(v);
    const auto two = dist_to_lattice(v, LatticeKind::TwoZ3);
    c.expect(lam >= 0 && lam <= rat(3, 2) && z3 <= lam && lam <= two, [&] { return pt(v); });
  }
  return c.r;
}

Result lattice_lipschitz(std::uint64_t seed) {
  Check c("exact_lattice", "Lipschitz in the L1 norm");
  Rng rng(seed);
  for (int i = 0; i < 10000; ++i) {
    const TorusPoint u = rand_point(rng, -3, 3, 24), v = rand_point(rng, -3, 3, 24);
    for (auto kind : {LatticeKind::ParityLambda, LatticeKind::StandardZ3, LatticeKind::TwoZ3}) {
      const auto diff = abs_of(dist_to_lattice(u, kind) - dist_to_lattice(v, kind));
      c.expect(diff <= l1_dist(u, v), [&] { return pt(u) + " " + pt(v); });
    }
  }
  return c.r;
}

Result lattice_signed_perm(std::uint64_t seed) {
  Check c("exact_lattice", "signed-permutation invariance");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const TorusPoint v = rand_point(rng, -2, 2, 40);
    const auto d = dist_lambda(v);
    for (const auto& g : signed_permutations()) {
      c.expect(dist_lambda(g.apply(v)) == d, [&] { return pt(v); });
    }
  }
  return c.r;
}

Result lattice_translated(std::uint64_t seed) {
  Check c("exact_lattice", "translated lattice: even sign flips preserve, others do not");
  Rng rng(seed);
  const TorusPoint w{rat(1, 2), rat(1, 2), rat(1, 2)};
  for (int i = 0; i < 1000; ++i) {
    const TorusPoint v = rand_point(rng, -2, 2, 40);
    const auto d = dist_lambda(v - w);
    for (const auto& g : signed_permutations()) {
      if (g.sign_flips() % 2) continue;
      c.expect(dist_lambda(g.apply(v) - w) == d, [&] { return pt(v); });
    }
  }
  // Every element with an odd number of flips must break it somewhere.
  for (const auto& g : signed_permutations()) {
    if (g.sign_flips() % 2 == 0) continue;
    bool broken = false;
    for (int i = 0; i < 1000 && !broken; ++i) {
      const TorusPoint v = rand_point(rng, -2, 2, 40);
      broken = dist_lambda(g.apply(v) - w) != dist_lambda(v - w);
    }
    c.expect(broken, [] { return std::string("odd-flip element preserved every sample"); });
  }
  return c.r;
}

Result lattice_m_symmetry(std::uint64_t) {
  Check c("exact_lattice", "M(x,y) = M(y,x) = M(x mod 1, y mod 1) = M(1-x, y)");
  auto M = [](const ExactRational& x, const ExactRational& y) { return max_dist_over_z(x, y).value; };
  for (int i = -24; i <= 48; ++i)
    for (int j = -24; j <= 48; ++j) {
      const ExactRational x = rat(i, 24), y = rat(j, 24);
      const auto m = M(x, y);
      c.expect(m == M(y, x) && m == M(reduce_mod(x, 1), reduce_mod(y, 1)) && m == M(1 - x, y),
               [&] { return to_string(x) + ", " + to_string(y); });
    }
  return c.r;
}

Result lattice_max_over_z(std::uint64_t seed) {
  Check c("exact_lattice", "max_dist_over_z against a grid over z");
  Rng rng(seed);
  const int N = 120;
  for (int i = 0; i < 1000; ++i) {
    const ExactRational x = rand_q(rng, 0, 2, 60), y = rand_q(rng, 0, 2, 60);
    const auto m = max_dist_over_z(x, y);
    ExactRational brute = 0;
    for (int j = 0; j < 2 * N; ++j) brute = std::max(brute, dist_lambda({x, y, rat(j, N)}));
    const bool at_witness = dist_lambda({x, y, m.witness_z}) == m.value;
    c.expect(brute <= m.value && m.value - brute <= rat(1, N) && at_witness,
             [&] { return to_string(x) + ", " + to_string(y); });
  }
  return c.r;
}

Result lattice_sign_equivalence(std::uint64_t seed) {
  Check c("exact_lattice", "d(t) >= 0 iff distance >= 1");
  Rng rng(seed);
  while (c.r.cases < 1000) {
    const std::int64_t p = uniform(rng, 2, 40), q = uniform(rng, 2, 40), r = uniform(rng, 2, 40);
    const ExactRational t = rand_q(rng, 0, 2 * lcm_of({2, p, q, r}), 50);
    const double d = d_eval(p, q, r, t.get_d());
    if (std::abs(d) <= 1e-6) continue;
    const bool far = dist_lambda(scaled_point(t, p, q, r)) >= 1;
    c.expect((d >= 0) == far, [&] { return tri(p, q, r) + " t=" + to_string(t); });
  }
  return c.r;
}

Result lattice_approx_bound(std::uint64_t seed) {
  Check c("exact_lattice", "e <= 64 sin^6(pi/3 + pi eps) when |v - Z^3| <= 1 + 3 eps");
  Rng rng(seed);
  for (int i = 0; i < 100000; ++i) {
    const TorusPoint v = rand_point(rng, 0, 1, 1000);
    const auto delta = dist_to_lattice(v, LatticeKind::StandardZ3);
    // Smallest admissible eps; any larger eps only weakens the bound.
    const double eps = std::clamp((delta.get_d() - 1) / 3, 0.0, 1.0 / 6);
    const double bound = 64 * std::pow(std::sin(std::numbers::pi / 3 + std::numbers::pi * eps), 6);
    const double e = e_eval(v.x.get_d(), v.y.get_d(), v.z.get_d());
    c.expect(e <= bound + 1e-9, [&] { return pt(v); });
  }
  return c.r;
}

// ---------------------------------------------------------------- jacobsthal

Result jac_radical(std::uint64_t) {
  Check c("jacobsthal", "J(n) = J(rad n) for n <= 10^4");
  for (std::int64_t n = 1; n <= 10000; ++n) {
    c.expect(jacobsthal_exact(n) == jacobsthal_exact(radical(n)), [&] { return std::to_string(n); });
  }
  return c.r;
}

Result jac_dominance(std::uint64_t) {
  Check c("jacobsthal", "J(n) <= jacobsthal_upper(n) for n <= 10^5");
  for (std::int64_t n = 1; n <= 100000; ++n) {
    c.expect(jacobsthal_exact(n) <= jacobsthal_upper(n).value, [&] { return std::to_string(n); });
  }
  return c.r;
}

Result jac_monotone(std::uint64_t) {
  Check c("jacobsthal", "rad(a) | rad(b) implies J(a) <= J(b), a, b <= 3000");
  const std::int64_t N = 3000;
  std::vector<std::int64_t> rad(N + 1), J(N + 1);
  for (std::int64_t n = 1; n <= N; ++n) {
    rad[n] = radical(n);
    J[n] = jacobsthal_exact(n);
  }
  for (std::int64_t a = 1; a <= N; ++a)
    for (std::int64_t b = 1; b <= N; ++b)
      if (rad[b] % rad[a] == 0) {
        c.expect(J[a] <= J[b], [&] { return std::to_string(a) + " " + std::to_string(b); });
      }
  return c.r;
}

Result jac_cube_bound(std::uint64_t) {
  Check c("jacobsthal", "2^(3 omega) < P_omega / 24300 for 16 <= omega < 1016");
  BigInt two48 = 1;
  two48 <<= 48;
  const ExactRational ratio = rat(primorial(16), two48);
  c.expect(ratio > 24300 && floor_of(ratio) == 115779, [&] { return to_string(ratio); });
  // Each further prime multiplies P by at least 59 > 8, so the gap only widens.
  const auto primes = first_primes(1015);
  BigInt P = primorial(16), pow8 = two48;
  for (int w = 17; w <= 1015; ++w) {
    P *= primes[static_cast<std::size_t>(w - 1)];
    pow8 <<= 3;
    c.expect(24300 * pow8 < P, [&] { return "omega=" + std::to_string(w); });
  }
  return c.r;
}

Result jac_shift(std::uint64_t seed) {
  Check c("jacobsthal", "nearest_coprime_shift postconditions");
  Rng rng(seed);
  while (c.r.cases < 10000) {
    const std::int64_t N = uniform(rng, 1, 5000), d = uniform(rng, 1, 60), a = uniform(rng, -50, 50);
    if (std::gcd(a, std::gcd(d, N)) != 1) continue;
    const ExactRational m_real = rand_q(rng, -1000, 1000, 30);
    const std::int64_t m = nearest_coprime_shift(m_real, a, d, N);
    const std::int64_t Np = coprime_part(N, d);
    const bool ok = std::gcd(a + d * m, N) == 1 &&
                    abs_of(ExactRational{static_cast<long>(m)} - m_real) <= rat(jacobsthal_exact(Np), 2);
    c.expect(ok, [&] {
      return "N=" + std::to_string(N) + " a=" + std::to_string(a) + " d=" + std::to_string(d) +
             " m_real=" + to_string(m_real);
    });
  }
  return c.r;
}

// ---------------------------------------------------------------- moments

Result mom_total(std::uint64_t) {
  Check c("moments", "character sums equal (e - 24)^m on the grid (Z/6)^3, m = 1..12");
  // At x = (a,b,c)/6 both sides are integers: 4 sin^2(pi a/6) and 2 cos(2 pi l a/6) are.
  const std::int64_t four_sin2[6] = {0, 1, 3, 4, 3, 1};
  const std::int64_t two_cos[6] = {2, 1, -1, -2, -1, 1};
  for (int m = 1; m <= 12; ++m) {
    const auto t = cached_coef_table(m);
    BigInt origin;
    mpz_ui_pow_ui(origin.get_mpz_t(), 24, static_cast<unsigned long>(m));
    if (m % 2) origin = -origin;
    c.expect(t->total() == origin, [&] { return "m=" + std::to_string(m) + " total"; });
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int d = 0; d < 6; ++d) {
          BigInt lhs = 0;
          for (const auto& [lam, v] : t->entries()) {
            const std::int64_t f = two_cos[floor_mod(lam[0] * a, 6)] * two_cos[floor_mod(lam[1] * b, 6)] *
                                   two_cos[floor_mod(lam[2] * d, 6)];
            lhs += v * f;
          }
          BigInt rhs;
          const std::int64_t e = four_sin2[a] * four_sin2[b] * four_sin2[d];
          mpz_pow_ui(rhs.get_mpz_t(), BigInt(static_cast<long>(e - 24)).get_mpz_t(),
                     static_cast<unsigned long>(m));
          c.expect(lhs == 8 * rhs, [&] {
            return "m=" + std::to_string(m) + " x=" + tri(a, b, d) + "/6";
          });
        }
  }
  return c.r;
}

Result mom_support(std::uint64_t) {
  Check c("moments", "support within [-m, m]^3");
  for (int m = 1; m <= 12; ++m)
    for (const auto& [lam, v] : cached_coef_table(m)->entries()) {
      c.expect(std::abs(lam[0]) <= m && std::abs(lam[1]) <= m && std::abs(lam[2]) <= m && v != 0,
               [&] { return "m=" + std::to_string(m); });
    }
  return c.r;
}

Result mom_symmetry(std::uint64_t) {
  Check c("moments", "signed-permutation symmetry of every table");
  for (int m = 1; m <= 12; ++m) {
    const auto t = cached_coef_table(m);
    for (const auto& [lam, v] : t->entries()) {
      const TorusPoint p{rat(lam[0]), rat(lam[1]), rat(lam[2])};
      for (const auto& g : signed_permutations()) {
        const TorusPoint img = g.apply(p);
        const Int3 l2{to_int64(floor_of(img.x)), to_int64(floor_of(img.y)), to_int64(floor_of(img.z))};
        c.expect(t->at(l2) == v, [&] { return "m=" + std::to_string(m); });
      }
    }
  }
  return c.r;
}

Result mom_closed_form(std::uint64_t) {
  Check c("moments", "coefficients equal the binomial closed form");
  for (int m : {1, 2, 3, 5, 12}) {
    const auto t = cached_coef_table(m);
    for (int a = -m; a <= m; ++a)
      for (int b = -m; b <= m; ++b)
        for (int d = -m; d <= m; ++d) {
          const Int3 lam{a, b, d};
          c.expect(t->at(lam) == oracle::coefficient(lam, m), [&] { return "m=" + std::to_string(m); });
        }
  }
  return c.r;
}

Result mom_numeric(std::uint64_t) {
  Check c("moments", "constant term against a numeric average, m <= 3");
  const Int3 dirs[] = {{1, 100, 10000}, {3, 71, 5003}};
  for (const auto& w : dirs)
    for (int m = 1; m <= 3; ++m) {
      // Sampling above the largest frequency makes the average exact up to rounding.
      const int N = 3 * m * static_cast<int>(w[0] + w[1] + w[2]) + 7;
      long double acc = 0;
      for (int i = 0; i < N; ++i) {
        const double t = static_cast<double>(i) / N;
        const double e = e_eval(t * w[0], t * w[1], t * w[2]);
        acc += std::pow(static_cast<long double>(e) - 24, m);
      }
      const long double avg = acc / N;
      const long double exact = cached_coef_table(m)->at({0, 0, 0}).get_d();
      c.expect(std::abs(avg - exact) <= 1e-6 * std::abs(exact), [&] { return "m=" + std::to_string(m); });
    }
  // Pointwise: the cosine series reproduces (e(x) - 24)^m at random points.
  Rng rng(kSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1200; ++i) {
    const int m = 1 + i % 4;
    const double x = unit(rng), y = unit(rng), z = unit(rng);
    long double series = 0;
    for (const auto& [lam, v] : cached_coef_table(m)->entries())
      series += v.get_d() * std::cos(2 * std::numbers::pi * (lam[0] * x + lam[1] * y + lam[2] * z));
    const long double direct = std::pow(static_cast<long double>(e_eval(x, y, z)) - 24, m);
    c.expect(std::abs(series - direct) <= 1e-8 * std::pow(40.0L, m),
             [&] { return "m=" + std::to_string(m) + " i=" + std::to_string(i); });
  }
  return c.r;
}

// A direction on lambda's hyperplane that meets no other coefficient in the box.
std::optional<Int3> generic_direction(const Int3& form, int m) {
  const auto [a, b, cc] = form;
  for (std::int64_t X : {13, 17, 19, 23})
    for (std::int64_t Y : {29, 31, 37, 41}) {
      const Int3 w{cc * X, cc * Y, a * X + b * Y};  // orthogonal to (a, b, -c)
      const Int3 lam{a, b, -cc};
      bool generic = true;
      for (int i = -m; i <= m && generic; ++i)
        for (int j = -m; j <= m && generic; ++j)
          for (int k = -m; k <= m && generic; ++k) {
            const Int3 v{i, j, k};
            if (dot(v, w) == 0 && !is_zero(v) && !is_zero(cross(v, lam))) generic = false;
          }
      if (generic) return w;
    }
  return std::nullopt;
}

Result mom_lower_bound(std::uint64_t) {
  Check c("moments", "moment_lower_bound reproduces the line sums of the exceptional rows");
  const auto t = cached_coef_table(12);
  for (const auto& row : exceptional_hyperplanes(*t, default_moment_threshold())) {
    if (row.triple[0] == 0 && row.triple[1] == 0) continue;  // (0,0,1): no triple lies on it
    const auto w = generic_direction(row.triple, 12);
    c.expect(w.has_value(), [] { return std::string("no generic direction"); });
    if (!w) continue;
    const auto& v = *w;
    const ExactRational mb = moment_lower_bound(v[1] * v[2], v[0] * v[2], v[0] * v[1], 12);
    c.expect(mb == ExactRational(row.line_sum) && row.line_sum == oracle::line_sum(row.triple, 12),
             [&] { return tri(row.triple[0], row.triple[1], row.triple[2]); });
  }
  // Random triples at small m against a direct sum of closed-form coefficients.
  Rng rng(kSeed);
  for (int i = 0; i < 1000; ++i) {
    const int m = 1 + i % 3;
    const Int3 t{uniform(rng, 1, 12), uniform(rng, 1, 12), uniform(rng, 1, 12)};
    BigInt expect = 0;
    for (int a = -m; a <= m; ++a)
      for (int b = -m; b <= m; ++b)
        for (int d = -m; d <= m; ++d)
          if (rat(a, t[0]) + rat(b, t[1]) + rat(d, t[2]) == 0) expect += oracle::coefficient({a, b, d}, m);
    c.expect(moment_lower_bound(t[0], t[1], t[2], m) == ExactRational(expect),
             [&] { return tri(t[0], t[1], t[2]) + " m=" + std::to_string(m); });
  }
  return c.r;
}

// ---------------------------------------------------------------- hyperplane_search

Result hs_revalidate(std::uint64_t seed) {
  Check c("hyperplane_search", "returned witnesses revalidate exactly");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const Int3 t = rand_hyperbolic(rng, 2, 60);
    const auto s = search_t_witness(t[0], t[1], t[2], line_target(), 200, seed + i);
    if (!s.witness) {
      c.expect(s.best < line_target(), [&] { return tri(t[0], t[1], t[2]); });
      continue;
    }
    const auto d = dist_lambda(scaled_point(s.witness->t, t[0], t[1], t[2]));
    c.expect(d == s.witness->distance && d >= line_target(), [&] { return tri(t[0], t[1], t[2]); });
  }
  return c.r;
}

Result hs_scaling(std::uint64_t seed) {
  Check c("hyperplane_search", "scaling a triple scales the witness");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const Int3 t{uniform(rng, 1, 30), uniform(rng, 1, 30), uniform(rng, 1, 30)};
    const std::int64_t k = uniform(rng, 2, 4);
    const auto base = find_t_witness(t[0], t[1], t[2], line_target(), 300, seed);
    const auto scaled = find_t_witness(k * t[0], k * t[1], k * t[2], line_target(), 300, seed);
    bool ok = base.has_value() == scaled.has_value();
    if (ok && scaled) {
      const ExactRational back = scaled->t / k;
      ok = dist_lambda(scaled_point(back, t[0], t[1], t[2])) == scaled->distance;
    }
    c.expect(ok, [&] { return tri(t[0], t[1], t[2]) + " k=" + std::to_string(k); });
  }
  return c.r;
}

Result hs_table(std::uint64_t) {
  Check c("hyperplane_search", "table points: distance to (1/2,1/2,1/2) and on the hyperplane");
  const ExactRational last[16] = {rat(1, 2), rat(1, 2), rat(1, 4), rat(1, 4), rat(1, 5), rat(1, 5),
                                  rat(1, 6), rat(1, 6), rat(1, 6), rat(1, 7), rat(1, 7), rat(1, 8),
                                  rat(1, 8), rat(1, 8), rat(1, 10), rat(1, 10)};
  const TorusPoint w{rat(1, 2), rat(1, 2), rat(1, 2)};
  const auto& tab = hyperplane_table();
  c.expect(tab.size() == 16, [] { return std::string("row count"); });
  for (std::size_t i = 0; i < tab.size() && i < 16; ++i) {
    const auto& row = tab[i];
    bool on_plane = false;  // some signed version of the row vanishes mod 1
    for (const auto& g : signed_permutations()) {
      const TorusPoint s = g.apply({rat(row.triple[0]), rat(row.triple[1]), rat(row.triple[2])});
      const ExactRational v = row.P.x * s.x + row.P.y * s.y + row.P.z * s.z;
      if (reduce_mod(v, 1) == 0) on_plane = true;
    }
    c.expect(l1_dist(row.P, w) == last[i] && row.distance_to_w == last[i] && on_plane,
             [&] { return "row " + std::to_string(i + 1); });
  }
  return c.r;
}

Result hs_elementary(std::uint64_t seed) {
  Check c("hyperplane_search", "lines of height >= 70 pass within 1/20 of P");
  Rng rng(seed);
  const auto& tab = hyperplane_table();
  for (std::size_t h = 2; h < tab.size(); ++h) {
    const auto& row = tab[h];
    for (int i = 0; i < 200; ++i) {
      std::int64_t u, v;
      do {
        u = uniform(rng, -300, 300);
        v = uniform(rng, -300, 300);
      } while (std::gcd(u, v) != 1 || std::max(std::abs(u), std::abs(v)) < 70);
      const Int3 w = project_line(row.triple, {u, v});
      const auto d = oracle::min_z3_distance_on_line(w, row.P.x, row.P.y, row.P.z);
      c.expect(d <= rat(1, 20), [&] {
        return "row " + std::to_string(h + 1) + " line " + std::to_string(u) + "," + std::to_string(v);
      });
    }
  }
  return c.r;
}

// ---------------------------------------------------------------- lemma_engine

Result le_witness(std::uint64_t seed) {
  Check c("lemma_engine", "witness certificates revalidate against the oracle");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const Int3 t = rand_hyperbolic(rng, 2, 50);
    const auto cert = check_triple(t[0], t[1], t[2]);
    const auto* w = std::get_if<WitnessK>(&cert.verdict);
    if (!w) {
      c.expect(in_hilbert_series(t[0], t[1], t[2]), [&] { return tri(t[0], t[1], t[2]); });
      continue;
    }
    const auto& T = cert.triple;
    const auto d = oracle::dist_lambda(oracle::qrat(w->k, T.p), oracle::qrat(w->k, T.q), oracle::qrat(w->k, T.r));
    c.expect(std::gcd(w->k, T.n) == 1 && d == w->distance && d >= 1, [&] { return tri(t[0], t[1], t[2]); });
  }
  return c.r;
}

Result le_onedim(std::uint64_t) {
  Check c("lemma_engine", "constructive 1D path succeeds iff brute force does, n <= 1000");
  for (std::int64_t n = 2; n <= 1000; ++n)
    for (const auto& [lo, hi] : {std::pair{rat(1, 6), rat(1, 2)}, std::pair{rat(2, 5), rat(1, 2)}}) {
      const bool constructive = find_k_1d_constructive(n, lo, hi).has_value();
      const bool brute = oracle::onedim(n, lo, hi).has_value();
      c.expect(constructive == brute, [&] { return "n=" + std::to_string(n) + " lo=" + to_string(lo); });
    }
  return c.r;
}

Result le_twist(std::uint64_t seed) {
  Check c("lemma_engine", "twist_k keeps k/p_i mod 2 and meets its bound");
  Rng rng(seed);
  while (c.r.cases < 1000) {
    std::vector<std::int64_t> fixed{uniform(rng, 2, 40)};
    if (uniform(rng, 0, 1)) fixed.push_back(uniform(rng, 2, 40));
    const std::int64_t q = uniform(rng, 2, 60);
    std::int64_t L = 1;
    for (auto p : fixed) L = lcm64(L, p);
    std::int64_t k = uniform(rng, 1, 4 * L);
    if (std::gcd(k, 2 * L) != 1) continue;
    const ExactRational x = rand_q(rng, 0, 2, 40);
    const std::int64_t aux = uniform(rng, 0, 1) ? 1 : std::int64_t{7};
    const std::int64_t kp = twist_k(k, fixed, q, x, aux);
    bool ok = std::gcd(kp, 2 * q * L) == 1 && std::gcd(kp, aux) == 1;
    for (auto p : fixed) ok = ok && reduce_mod(rat(kp, p), 2) == reduce_mod(rat(k, p), 2);
    const ExactRational off = reduce_mod(rat(kp, q) - x + 1, 2) - 1;  // in [-1, 1)
    ok = ok && abs_of(off) <= twist_bound(fixed, q).bound;
    c.expect(ok, [&] { return "k=" + std::to_string(k) + " q=" + std::to_string(q) + " x=" + to_string(x); });
  }
  return c.r;
}

Result le_sweep_bounds(std::uint64_t) {
  Check c("lemma_engine", "sweep units and failures satisfy b, a <= 15p and ab <= 165p");
  for (const auto& u : sweep_units(2, 12, SweepProfile::Medium)) {
    c.expect(u.b <= 15 * u.p && u.a <= 15 * u.p && u.a * u.b <= 165 * u.p, [&] { return std::to_string(u.p); });
  }
  const auto res = sweep_small_min(2, 6, SweepProfile::Medium, 1);
  for (const auto& f : res.failures) {
    const Triple t = Triple::make(f.p, f.a * f.d, f.b * f.d);
    c.expect(f.b <= 15 * f.p && f.a <= 15 * f.p && f.a * f.b <= 165 * f.p && in_hilbert_series(t.p, t.q, t.r),
             [&] { return tri(f.p, f.a * f.d, f.b * f.d); });
  }
  return c.r;
}

Result le_omega(std::uint64_t seed) {
  Check c("lemma_engine", "Omega membership implies distance >= 7/6");
  Rng rng(seed);
  std::size_t inside = 0;
  for (int i = 0; i < 100000; ++i) {
    const std::int64_t den = uniform(rng, 6, 60);
    const ExactRational x = rat(uniform(rng, (den + 5) / 6, den / 2), den);
    if (x < rat(1, 6) || x > rat(1, 2)) continue;
    const ExactRational y = rand_q(rng, 0, 2, 60), z = rand_q(rng, 0, 2, 60);
    if (!omega_region_contains(x, y, z)) continue;
    ++inside;
    c.expect(dist_lambda({x, y, z}) >= rat(7, 6), [&] { return pt({x, y, z}); });
  }
  c.expect(inside >= 1000, [&] { return "only " + std::to_string(inside) + " samples in Omega"; });
  return c.r;
}

Result le_permutation(std::uint64_t seed) {
  Check c("lemma_engine", "check_triple is permutation invariant");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    Int3 t = rand_hyperbolic(rng, 2, 60);
    const auto a = check_triple(t[0], t[1], t[2]);
    std::shuffle(t.begin(), t.end(), rng);
    c.expect(check_triple(t[0], t[1], t[2]) == a, [&] { return tri(t[0], t[1], t[2]); });
  }
  return c.r;
}

// ---------------------------------------------------------------- classifier

Result cl_roundtrip(std::uint64_t seed) {
  Check c("classifier", "classify is idempotent, permutation invariant, round-trips");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    Int3 t = rand_hyperbolic(rng, 2, 80);
    const auto a = classify(t[0], t[1], t[2], seed);
    std::shuffle(t.begin(), t.end(), rng);
    const auto b = classify(t[0], t[1], t[2], seed);
    const std::string text = serialize(a);
    c.expect(a == b && deserialize(text) == a && serialize(deserialize(text)) == text,
             [&] { return tri(t[0], t[1], t[2]); });
  }
  return c.r;
}

Result cl_desk_theorem(std::uint64_t) {
  Check c("classifier", "no witness iff Hilbert Series, entries <= 42");
  for (std::int64_t p = 2; p <= 42; ++p)
    for (std::int64_t q = p; q <= 42; ++q)
      for (std::int64_t r = q; r <= 42; ++r) {
        if (!is_hyperbolic(p, q, r)) continue;
        const bool exhausted = !classify(p, q, r).has_witness();
        c.expect(exhausted == in_hilbert_series(p, q, r), [&] { return tri(p, q, r); });
      }
  return c.r;
}

Result cl_trace_degree(std::uint64_t seed) {
  Check c("classifier", "trace degree depends only on parities");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    Int3 t = rand_hyperbolic(rng, 2, 100);
    const int e = invariant_trace_degree(t[0], t[1], t[2]);
    t[uniform(rng, 0, 2)] += 2;
    c.expect(invariant_trace_degree(t[0], t[1], t[2]) == e, [&] { return tri(t[0], t[1], t[2]); });
  }
  return c.r;
}

Result cl_alpha(std::uint64_t seed) {
  Check c("classifier", "alpha = d_eval(p,q,r,1) and alpha < 0");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const Int3 t = rand_hyperbolic(rng, 2, 200);
    const auto h = hilbert_symbol_entries(t[0], t[1], t[2]);
    c.expect(std::abs(h.alpha - d_eval(t[0], t[1], t[2], 1.0)) <= 1e-12 && h.alpha < 0,
             [&] { return tri(t[0], t[1], t[2]); });
  }
  return c.r;
}

// ---------------------------------------------------------------- cli

std::pair<int, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

Result cli_classify(std::uint64_t seed) {
  Check c("cli", "classify output is deterministic and matches the schema");
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const Int3 t = rand_hyperbolic(rng, 2, 60);
    const std::vector<std::string> args = {"tricert", "classify", std::to_string(t[0]), std::to_string(t[1]),
                                           std::to_string(t[2]), "--json", "--seed", std::to_string(seed)};
    const auto a = run(args), b = run(args);
    bool ok = a == b && (a.first == 0 || a.first == 10);
    if (ok) {
      const auto j = nlohmann::json::parse(a.second);
      const bool witness = j.at("verdict") == "witness";
      ok = j.at("triple").is_array() && j.at("triple").size() == 3 && j.at("n").is_number_integer() &&
           j.at("engine").is_string() && j.at("seed").is_number_unsigned() &&
           (witness ? (j.at("k").is_number_integer() && j.at("distance").is_string() && j.size() == 7)
                    : (j.at("verdict") == "exhausted" && j.at("residues_scanned").is_number_integer() &&
                       j.size() == 6)) &&
           (a.first == 0) == witness;
    }
    c.expect(ok, [&] { return tri(t[0], t[1], t[2]); });
  }
  return c.r;
}

Result cli_region_csv(std::uint64_t) {
  Check c("cli", "region-dump CSV is deterministic with reduced fractions");
  const std::vector<std::string> args = {"tricert", "region-dump", "--step", "1/10", "--threshold", "6/5",
                                         "--line", "3", "12", "4"};
  const auto a = run(args), b = run(args);
  c.expect(a == b && a.first == 0, [] { return std::string("rerun differs"); });
  std::istringstream in(a.second);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'x' || line[0] == 't') continue;
    std::istringstream fields(line);
    std::string f;
    int col = 0;
    while (std::getline(fields, f, ',')) {
      if (++col == 6) break;  // inside flag
      bool ok = f.find('/') != std::string::npos;
      if (ok) ok = to_string(parse_rational(f)) == f;
      c.expect(ok, [&] { return line; });
    }
  }
  return c.r;
}

std::vector<Property> build() {
  return {
      {"exact_lattice", "bounds", 1000, lattice_bounds},
      {"exact_lattice", "lipschitz", 1000, lattice_lipschitz},
      {"exact_lattice", "signed permutations", 1000, lattice_signed_perm},
      {"exact_lattice", "translated lattice", 1000, lattice_translated},
      {"exact_lattice", "M symmetries", 1000, lattice_m_symmetry},
      {"exact_lattice", "max over z", 1000, lattice_max_over_z},
      {"exact_lattice", "sign equivalence", 1000, lattice_sign_equivalence},
      {"exact_lattice", "approx bound", 100000, lattice_approx_bound},
      {"jacobsthal", "radical invariance", 10000, jac_radical},
      {"jacobsthal", "dominance", 100000, jac_dominance},
      {"jacobsthal", "monotone", 1000, jac_monotone},
      {"jacobsthal", "cube bound", 1000, jac_cube_bound},
      {"jacobsthal", "coprime shift", 10000, jac_shift},
      {"moments", "total", 1000, mom_total},
      {"moments", "support", 1000, mom_support},
      {"moments", "symmetry", 1000, mom_symmetry},
      {"moments", "closed form", 1000, mom_closed_form},
      {"moments", "numeric", 1000, mom_numeric},
      {"moments", "lower bound", 1000, mom_lower_bound},
      {"hyperplane_search", "revalidate", 1000, hs_revalidate},
      {"hyperplane_search", "scaling", 1000, hs_scaling},
      {"hyperplane_search", "table", 16, hs_table},
      {"hyperplane_search", "elementary", 2800, hs_elementary},
      {"lemma_engine", "witness", 1000, le_witness},
      {"lemma_engine", "onedim", 1000, le_onedim},
      {"lemma_engine", "twist", 1000, le_twist},
      {"lemma_engine", "sweep bounds", 1000, le_sweep_bounds},
      {"lemma_engine", "omega", 1000, le_omega},
      {"lemma_engine", "permutation", 1000, le_permutation},
      {"classifier", "round trip", 1000, cl_roundtrip},
      {"classifier", "desk theorem", 1000, cl_desk_theorem},
      {"classifier", "trace degree", 1000, cl_trace_degree},
      {"classifier", "alpha", 1000, cl_alpha},
      {"cli", "classify", 1000, cli_classify},
      {"cli", "region csv", 1000, cli_region_csv},
  };
}

}  // namespace

const std::vector<Property>& all() {
  static const std::vector<Property> list = build();
  return list;
}

std::vector<Property> of_module(const std::string& module) {
  std::vector<Property> out;
  for (const auto& p : all())
    if (p.module == module) out.push_back(p);
  return out;
}

}  // namespace props
