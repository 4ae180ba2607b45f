#include "tricert/lemmas.hpp"

#include <algorithm>
#include <numeric>

#include "tricert/arith.hpp"
#include "tricert/errors.hpp"
#include "tricert/jacobsthal.hpp"
#include "tricert/lattice.hpp"
#include "tricert/parallel.hpp"

namespace tricert {

namespace {

ExactRational mod2_ratio(std::int64_t k, std::int64_t n) { return reduce_mod(rat(k, n), 2); }

bool in_closed(const ExactRational& v, const ExactRational& lo, const ExactRational& hi) {
  return lo <= v && v <= hi;
}

std::int64_t normalize_mod(std::int64_t k, std::int64_t modulus) {
  const std::int64_t r = floor_mod(k, modulus);
  return r == 0 ? modulus : r;
}

}  // namespace

// ---------------------------------------------------------------- one dimension

std::optional<Witness1D> find_k_1d_constructive(std::int64_t n, const ExactRational& lo,
                                                const ExactRational& hi) {
  if (n <= 1) throw InputError("find_k_1d requires n > 1");
  if (lo < 0 || hi > 2 || hi < lo) throw InputError("find_k_1d requires 0 <= lo <= hi <= 2");
  const ExactRational m_real = ExactRational{static_cast<long>(n)} * (lo + hi) / 4 - rat(1, 2);
  const std::int64_t m = nearest_coprime_shift(m_real, 1, 2, odd_part(n));
  const std::int64_t k = normalize_mod(1 + 2 * m, 2 * n);
  const ExactRational x = mod2_ratio(k, n);
  if (std::gcd(k, 2 * n) != 1 || !in_closed(x, lo, hi)) return std::nullopt;
  return Witness1D{n, k, x, true};
}

std::optional<Witness1D> find_k_1d_exhaustive(std::int64_t n, const ExactRational& lo,
                                              const ExactRational& hi) {
  if (n <= 1) throw InputError("find_k_1d requires n > 1");
  for (std::int64_t k = 1; k <= 2 * n; k += 2) {
    if (std::gcd(k, n) != 1) continue;
    const ExactRational x = mod2_ratio(k, n);
    if (in_closed(x, lo, hi)) return Witness1D{n, k, x, false};
  }
  return std::nullopt;
}

std::optional<Witness1D> find_k_1d(std::int64_t n, const ExactRational& lo,
                                   const ExactRational& hi) {
  if (auto w = find_k_1d_constructive(n, lo, hi)) return w;
  return find_k_1d_exhaustive(n, lo, hi);
}

// ---------------------------------------------------------------- twisting

TwistBound twist_bound(const std::vector<std::int64_t>& fixed, std::int64_t q) {
  std::int64_t L = 1;
  for (auto p : fixed) L = lcm64(L, p);
  const std::int64_t m = lcm64(L, q) / L;
  const std::int64_t m_odd = odd_part(m);
  return {m, m_odd, rat(jacobsthal_window(m_odd), m)};
}

std::int64_t twist_k(std::int64_t k, const std::vector<std::int64_t>& fixed, std::int64_t q,
                     const ExactRational& x, std::int64_t aux) {
  if (q < 1 || aux < 1) throw InputError("twist_k: q and aux must be positive");
  std::int64_t L = 1;
  for (auto p : fixed) {
    if (p < 1) throw InputError("twist_k: fixed entries must be positive");
    L = lcm64(L, p);
  }
  if (std::gcd(k, 2 * L) != 1) throw InputError("twist_k: k must be prime to 2 prod(fixed)");

  const std::int64_t big = lcm64(L, q);
  const std::int64_t m = big / L;
  const std::int64_t c = L / std::gcd(L, q);
  const std::int64_t j = mod_inverse(c, m);
  // k'/q = k/q + 2 i/m (mod 2); aim i at the real solution of k'/q = x.
  const ExactRational i_real =
      reduce_mod(x - rat(k, q), 2) * ExactRational{static_cast<long>(m)} / 2;
  const std::int64_t modulus = 2 * big;
  const std::int64_t step = static_cast<std::int64_t>((static_cast<__int128>(2 * L) * j) % modulus);
  const std::int64_t i = nearest_coprime_shift(i_real, floor_mod(k, modulus), step, odd_part(m));

  std::int64_t kp = static_cast<std::int64_t>(
      ((static_cast<__int128>(k) + static_cast<__int128>(step) * i) % modulus + modulus) % modulus);
  if (kp == 0) kp = modulus;
  // Adding multiples of 2 lcm(L, q) keeps the other properties.
  for (std::int64_t t = 0;; ++t) {
    const std::int64_t cand = kp + t * modulus;
    if (std::gcd(cand, aux) == 1) {
      kp = cand;
      break;
    }
    if (t > aux) throw InputError("twist_k: no shift is prime to aux");
  }
  return kp;
}

// ---------------------------------------------------------------- two dimensions

bool in_2d_region(const ExactRational& x, const ExactRational& y) {
  return in_closed(x, rat(1, 6), rat(1, 2)) && in_closed(y, rat(1, 6), rat(5, 6));
}

bool in_2d_strict_region(const ExactRational& x, const ExactRational& y) {
  const ExactRational lo = rat(2, 7), hi = rat(5, 7);
  return in_closed(reduce_mod(x, 1), lo, hi) && in_closed(reduce_mod(y, 1), lo, hi);
}

namespace {

using RegionCheck = bool (*)(const ExactRational&, const ExactRational&);

std::optional<Witness2D> two_dim_search(std::int64_t p, std::int64_t q, const ExactRational& lo,
                                        const ExactRational& hi, RegionCheck region,
                                        bool symmetric, bool mod1) {
  auto report = [&](std::int64_t k, bool constructive) -> std::optional<Witness2D> {
    ExactRational x = mod2_ratio(k, p), y = mod2_ratio(k, q);
    if (mod1) {
      x = reduce_mod(x, 1);
      y = reduce_mod(y, 1);
    }
    if (region(x, y)) return Witness2D{k, x, y, false, constructive};
    if (!symmetric && region(y, x)) return Witness2D{k, x, y, true, constructive};
    return std::nullopt;
  };

  std::array<std::pair<std::int64_t, std::int64_t>, 2> orders{{{p, q}, {q, p}}};
  if (p > q) std::swap(orders[0], orders[1]);
  for (const auto& [P, Q] : orders) {
    const auto w1 = find_k_1d(P, lo, hi);
    if (!w1) continue;
    const std::int64_t k = twist_k(w1->k, {P}, Q, rat(1, 2));
    if (auto w = report(k, true)) return w;
  }
  const std::int64_t period = 2 * lcm64(p, q);
  const std::int64_t pq2 = lcm64(2, period);
  for (std::int64_t k = 1; k <= period; k += 2) {
    if (std::gcd(k, pq2) != 1) continue;
    if (auto w = report(k, false)) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness2D> find_k_2d(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2) throw InputError("find_k_2d requires p, q >= 2");
  return two_dim_search(p, q, rat(1, 6), rat(1, 2), in_2d_region, false, false);
}

std::optional<Witness2D> find_k_2d_strict(std::int64_t p, std::int64_t q) {
  auto excluded = [](std::int64_t v) { return v < 15 || v == 18 || v == 21 || v == 33; };
  if (excluded(p) || excluded(q)) {
    throw InputError("find_k_2d_strict requires p, q >= 15 and not 18, 21, 33");
  }
  return two_dim_search(p, q, rat(2, 5), rat(1, 2), in_2d_strict_region, true, true);
}

// ---------------------------------------------------------------- m filters

MFilter mbound_filter(std::int64_t p, std::int64_t q, std::int64_t r) {
  if (p < 2 || q < 2 || r < 2) throw InputError("mbound_filter requires entries >= 2");
  const std::int64_t m = lcm_of({p, q, r}) / lcm64(p, q);
  static const std::int64_t list[] = {1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 15};
  static const std::int64_t list4[] = {1, 2, 3, 5, 6};
  return {m, std::find(std::begin(list), std::end(list), m) != std::end(list),
          std::find(std::begin(list4), std::end(list4), m) != std::end(list4)};
}

// ---------------------------------------------------------------- Omega

bool omega_region_contains(const ExactRational& x, const ExactRational& y,
                           const ExactRational& z) {
  if (x < rat(1, 6) || x > rat(1, 2)) throw InputError("omega_region_contains requires x in [1/6,1/2]");
  const ExactRational Y = reduce_mod(y, 2), Z = reduce_mod(z, 2);
  const ExactRational two = 2;
  const std::array<std::pair<ExactRational, ExactRational>, 4> preimages{
      {{Y, Z}, {Z, two - Y}, {two - Y, two - Z}, {two - Z, Y}}};
  for (const auto& [u, v] : preimages) {
    const ExactRational s = u + v, d = v - u;
    if (s <= rat(5, 6) + x && s >= rat(7, 6) - x && d <= rat(5, 6) - x && d >= x - rat(5, 6)) {
      return true;
    }
  }
  return false;
}

std::vector<OmegaCrossing> omega_crossings(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1) {
    throw InputError("omega_crossings requires coprime a, b >= 1");
  }
  struct Segment {
    int sy, sz;  // sy*y + sz*z = c
    int c;
    ExactRational y_lo, y_hi;
  };
  const Segment segs[4] = {
      {1, 1, 1, rat(1, 3), rat(2, 3)},
      {1, -1, 1, rat(4, 3), rat(5, 3)},
      {1, 1, 3, rat(4, 3), rat(5, 3)},
      {-1, 1, 1, rat(1, 3), rat(2, 3)},
  };
  std::vector<OmegaCrossing> out;
  const ExactRational ab{static_cast<long>(a * b)};
  for (int s = 0; s < 4; ++s) {
    const auto& seg = segs[s];
    // sy t/a + sz t/b = c + 2h  =>  t = (c + 2h) ab / (sy b + sz a)
    const std::int64_t D = seg.sy * b + seg.sz * a;
    if (D == 0) continue;
    const std::int64_t absD = D < 0 ? -D : D;
    // t in [0, 2ab) <=> (c + 2h)/D in [0, 2)
    for (std::int64_t h = -2 * absD - 3; h <= 2 * absD + 3; ++h) {
      const ExactRational frac = rat(seg.c + 2 * h, D);
      if (frac < 0 || frac >= 2) continue;
      const ExactRational t = frac * ab;
      const ExactRational y = reduce_mod(t / a, 2), z = reduce_mod(t / b, 2);
      if (!in_closed(y, seg.y_lo, seg.y_hi)) continue;
      out.push_back({t, s, y, z});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) {
    return u.t != v.t ? u.t < v.t : u.segment < v.segment;
  });
  return out;
}

ExactRational find_t_on_omega(std::int64_t a, std::int64_t b) {
  const auto xs = omega_crossings(a, b);
  if (xs.empty()) throw VerificationError("line misses Omega");
  const auto& c = xs.front();
  for (const auto& x : {rat(1, 6), rat(1, 3), rat(1, 2)}) {
    if (!omega_region_contains(x, c.y, c.z)) {
      throw VerificationError("Omega crossing fails the region test at x=" + to_string(x));
    }
  }
  return c.t;
}

// ---------------------------------------------------------------- triples

namespace {

struct ScanOutcome {
  std::int64_t k = 0;  // 0 when exhausted
  std::int64_t scaled = 0;
  std::int64_t scanned = 0;
};

// Scaled distance of num / n to Lambda for numerators already in [0, 2n).
inline std::int64_t reduced_dist_lambda(const std::array<std::int64_t, 3>& num, std::int64_t n) {
  std::int64_t total = 0, min_delta = n;
  int parity = 0;
  for (int i = 0; i < 3; ++i) {
    std::int64_t r = num[i];
    int par = 0;
    if (r >= n) {
      r -= n;
      par = 1;
    }
    std::int64_t delta;
    if (2 * r <= n) {
      total += r;
      delta = n - 2 * r;
    } else {
      total += n - r;
      delta = 2 * r - n;
      par ^= 1;
    }
    parity ^= par;
    min_delta = std::min(min_delta, delta);
  }
  return parity ? total + min_delta : total;
}

// Ascending k in [1, n]; distances are tested before coprimality since the
// distance is cheaper than a gcd.
ScanOutcome scan_k(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t n,
                   bool count_residues) {
  if (n > (std::int64_t{1} << 61)) throw InputError("lcm too large for the integer kernel");
  const std::int64_t two_n = 2 * n;
  const std::array<std::int64_t, 3> w{n / p, n / q, n / r};
  std::array<std::int64_t, 3> num{0, 0, 0};
  ScanOutcome out;
  for (std::int64_t k = 1; k <= n; ++k) {
    for (int i = 0; i < 3; ++i) {
      num[i] += w[i];
      if (num[i] >= two_n) num[i] -= two_n;
    }
    const std::int64_t d = reduced_dist_lambda(num, n);
    if (d >= n && std::gcd(k, n) == 1) {
      out.k = k;
      out.scaled = d;
      return out;
    }
  }
  if (count_residues) {
    for (std::int64_t k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) ++out.scanned;
  }
  return out;
}

}  // namespace

Certificate scan_triple(std::int64_t p, std::int64_t q, std::int64_t r) {
  const Triple t = Triple::make(p, q, r);
  const ScanOutcome s = scan_k(t.p, t.q, t.r, t.n, true);
  Certificate cert{t, ExhaustedNoK{t.n, s.scanned}};
  if (s.k != 0) {
    const ExactRational exact =
        dist_to_lattice(scaled_point(ExactRational{static_cast<long>(s.k)}, t.p, t.q, t.r),
                        LatticeKind::ParityLambda);
    if (exact != rat(s.scaled, t.n)) {
      throw VerificationError("kernel distance mismatch for " + triple_name(t));
    }
    cert.verdict = WitnessK{s.k, exact};
  } else if (s.scanned != euler_phi(t.n)) {
    throw VerificationError("residue count mismatch for " + triple_name(t));
  }
  return cert;
}

Certificate check_triple(std::int64_t p, std::int64_t q, std::int64_t r) {
  if (p < 2 || q < 2 || r < 2) throw InputError("check_triple requires entries >= 2");
  if (!is_hyperbolic(p, q, r)) throw InputError("check_triple requires 1/p + 1/q + 1/r < 1");
  return scan_triple(p, q, r);
}

OddWitness odd_triple_witness(std::int64_t p, std::int64_t q, std::int64_t r) {
  if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0) throw InputError("odd_triple_witness requires odd entries");
  if (std::min({p, q, r}) < 7) throw InputError("odd_triple_witness requires min(p,q,r) >= 7");
  const __int128 prod = static_cast<__int128>(p) * q * r;
  if (prod > static_cast<__int128>(INT64_MAX) - 1) throw InputError("odd_triple_witness: pqr too large");
  const std::int64_t pqr = static_cast<std::int64_t>(prod);
  std::int64_t k = (pqr + 1) / 2;
  if (k % 2 == 0) k = (pqr - 1) / 2;
  const std::int64_t n = lcm_of({2, p, q, r});
  if (std::gcd(k, n) != 1) throw VerificationError("odd_triple_witness: k not prime to n");
  const ExactRational bound = rat(3, 2) - rat(1, 2 * p) - rat(1, 2 * q) - rat(1, 2 * r);
  const ExactRational dist = dist_to_lattice(
      scaled_point(ExactRational{static_cast<long>(k)}, p, q, r), LatticeKind::ParityLambda);
  if (dist < bound) throw VerificationError("odd_triple_witness: distance below bound");
  return {k, bound, dist};
}

// ---------------------------------------------------------------- circular gate

const std::vector<CircularRow>& circular_table() {
  static const std::vector<CircularRow> rows = {
      {105, 6, BigInt{"30030"}},
      {165, 7, BigInt{"510510"}},
      {195, 8, BigInt{"9699690"}},
      {255, 9, BigInt{"223092870"}},
      {300, 10, BigInt{"6469693230"}},
      {345, 11, BigInt{"200560490130"}},
      {435, 12, BigInt{"7420738134810"}},
      {495, 13, BigInt{"304250263527210"}},
      {555, 14, BigInt{"13082761331670030"}},
      {675, 15, BigInt{"614889782588491410"}},
      {750, 16, BigInt{"32589158477190044730"}},
      {795, 17, BigInt{"1922760350154212639070"}},
      {885, 18, BigInt{"117288381359406970983270"}},
      {990, 19, BigInt{"7858321551080267055879090"}},
      {1140, 20, BigInt{"557940830126698960967415390"}},
  };
  return rows;
}

CircularGate circular_gate(std::int64_t p, std::int64_t q, std::int64_t r) {
  if (p < 1 || q < 1 || r < 1) throw InputError("circular_gate requires positive entries");
  CircularGate g{};
  g.m = std::min({p, q, r});
  g.n = lcm_of({2, p, q, r});
  g.omega_n = omega(g.n);
  g.jacobsthal_bound = jacobsthal_upper(g.n).value;
  g.holds = 15 * g.jacobsthal_bound <= 2 * g.m;
  for (const auto& row : circular_table()) {
    if (row.m <= g.m) g.row = row;
  }
  g.row_applies = g.row && g.omega_n < g.row->A;
  return g;
}

// ---------------------------------------------------------------- sweeps

std::string to_string(SweepProfile profile) {
  return profile == SweepProfile::Medium ? "medium" : "mediumplus";
}

std::vector<SweepUnit> sweep_units(std::int64_t p_lo, std::int64_t p_hi, SweepProfile profile) {
  if (p_lo < 2 || p_hi < p_lo) throw InputError("sweep requires 2 <= p_lo <= p_hi");
  std::vector<SweepUnit> units;
  for (std::int64_t p = p_lo; p <= p_hi; ++p) {
    const bool medium = profile == SweepProfile::Medium;
    const std::int64_t b_max = medium ? 15 * p : 6 * p;
    const std::int64_t coef = medium ? 276 : 240;
    for (std::int64_t b = 1; b <= b_max; ++b) {
      for (std::int64_t a = 1; a <= b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        const std::int64_t ab = a * b;
        if (medium ? ab > 165 * p : ab / std::gcd(ab, p) > 30) continue;
        const std::int64_t d_max = coef * p * (a + b) / ab;
        if (d_max >= 1) units.push_back({p, a, b, d_max});
      }
    }
  }
  return units;
}

SweepResult sweep_small_min(std::int64_t p_lo, std::int64_t p_hi, SweepProfile profile, int jobs) {
  const auto units = sweep_units(p_lo, p_hi, profile);
  struct UnitResult {
    std::vector<SweepFailure> failures;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
  };
  // MediumPlus assumes every entry exceeds the Medium range.
  const std::int64_t min_entry = profile == SweepProfile::Medium ? 2 : kMediumMax + 1;
  auto results = parallel_map(units.size(), jobs, [&](std::size_t i) {
    const auto& u = units[i];
    UnitResult res;
    for (std::int64_t d = 1; d <= u.d_max; ++d) {
      const std::int64_t q = u.a * d, r = u.b * d;
      if (q < min_entry || r < min_entry || !is_hyperbolic(u.p, q, r)) {
        ++res.skipped;
        continue;
      }
      ++res.checked;
      const std::int64_t n = lcm_of({2, u.p, q, r});
      if (scan_k(u.p, q, r, n, false).k == 0) res.failures.push_back({u.p, u.a, u.b, d});
    }
    return res;
  });
  SweepResult out;
  out.units = units.size();
  for (auto& r : results) {
    out.triples_checked += r.checked;
    out.triples_skipped += r.skipped;
    out.failures.insert(out.failures.end(), r.failures.begin(), r.failures.end());
  }
  std::sort(out.failures.begin(), out.failures.end(), [](const auto& x, const auto& y) {
    return std::tie(x.p, x.a, x.b, x.d) < std::tie(y.p, y.a, y.b, y.d);
  });
  return out;
}

}  // namespace tricert
