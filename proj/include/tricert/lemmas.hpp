#pragma once

// Integer witnesses k for triples (p, q, r) and the lemmas that build them:
// one- and two-dimensional coprime searches, twisting, the m filters, the
// Omega region and the sweeps over triples with a small entry.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricert/certificate.hpp"
#include "tricert/rational.hpp"

namespace tricert {

struct Witness1D {
  std::int64_t n;
  std::int64_t k;
  ExactRational x;  // k/n mod 2
  bool constructive;
};

/// k with gcd(k, 2n) = 1 and k/n mod 2 in [lo, hi]: Jacobsthal window around
/// the midpoint first, then k = 1 .. 2n ascending.
std::optional<Witness1D> find_k_1d(std::int64_t n, const ExactRational& lo,
                                   const ExactRational& hi);

/// Only the constructive window; no fallback.
std::optional<Witness1D> find_k_1d_constructive(std::int64_t n, const ExactRational& lo,
                                                const ExactRational& hi);

/// Smallest k in [1, 2n] with gcd(k, 2n) = 1 and k/n mod 2 in [lo, hi].
std::optional<Witness1D> find_k_1d_exhaustive(std::int64_t n, const ExactRational& lo,
                                              const ExactRational& hi);

struct TwistBound {
  std::int64_t m;        // lcm(fixed, q) / lcm(fixed)
  std::int64_t m_odd;    // largest odd factor of m
  ExactRational bound;   // J(m_odd) / m
};

TwistBound twist_bound(const std::vector<std::int64_t>& fixed, std::int64_t q);

/// k' prime to 2 q prod(fixed) and to aux (aux = 1 for none), with
/// k'/p_i = k/p_i mod 2 for each fixed p_i and |k'/q - x - 2Z| <= J(m')/m.
std::int64_t twist_k(std::int64_t k, const std::vector<std::int64_t>& fixed, std::int64_t q,
                     const ExactRational& x, std::int64_t aux = 1);

struct Witness2D {
  std::int64_t k;
  ExactRational x;  // k/p
  ExactRational y;  // k/q
  bool swapped;     // roles of p and q exchanged in the interval check
  bool constructive;
};

/// k prime to 2pq with, up to swapping, k/p mod 2 in [1/6,1/2] and k/q mod 2
/// in [1/6,5/6].
std::optional<Witness2D> find_k_2d(std::int64_t p, std::int64_t q);

/// p, q >= 15, not 18, 21, 33: k prime to 2pq with k/p, k/q mod 1 in [2/7,5/7].
/// x and y are reported mod 1.
std::optional<Witness2D> find_k_2d_strict(std::int64_t p, std::int64_t q);

bool in_2d_region(const ExactRational& x, const ExactRational& y);          // [1/6,1/2]x[1/6,5/6]
bool in_2d_strict_region(const ExactRational& x, const ExactRational& y);   // mod 1 in [2/7,5/7]^2

struct MFilter {
  std::int64_t m;
  bool passes_mbound;   // m in {1,2,3,4,5,6,7,9,10,11,15}
  bool passes_mbound4;  // m in {1,2,3,5,6}
};

MFilter mbound_filter(std::int64_t p, std::int64_t q, std::int64_t r);

/// (y, z) in Omega(x): four copies of the rectangle rotated about (1, 1).
bool omega_region_contains(const ExactRational& x, const ExactRational& y,
                           const ExactRational& z);

struct OmegaCrossing {
  ExactRational t;
  int segment;  // 0: y+z=1, 1: y-z=1, 2: y+z=3, 3: z-y=1
  ExactRational y;  // t/a mod 2
  ExactRational z;  // t/b mod 2
};

/// All t in [0, 2ab) where (t/a, t/b) mod 2 meets one of the four segments
/// of Omega, ascending.
std::vector<OmegaCrossing> omega_crossings(std::int64_t a, std::int64_t b);

/// Smallest t >= 0 with (t/a, t/b) mod 2 on Omega.
ExactRational find_t_on_omega(std::int64_t a, std::int64_t b);

/// Exhaustive scan of k in [1, n], n = lcm(2,p,q,r), gcd(k, n) = 1.
Certificate check_triple(std::int64_t p, std::int64_t q, std::int64_t r);

/// Certificate check without hyperbolicity requirement; entries >= 1.
Certificate scan_triple(std::int64_t p, std::int64_t q, std::int64_t r);

struct OddWitness {
  std::int64_t k;
  ExactRational lower_bound;
  ExactRational distance;
};

OddWitness odd_triple_witness(std::int64_t p, std::int64_t q, std::int64_t r);

struct CircularRow {
  std::int64_t m;
  int A;
  BigInt B;
};

const std::vector<CircularRow>& circular_table();

struct CircularGate {
  bool holds;
  std::int64_t m;             // min(p, q, r)
  std::int64_t n;
  int omega_n;
  std::int64_t jacobsthal_bound;
  std::optional<CircularRow> row;  // last row with row.m <= m
  bool row_applies;                // omega(n) < A(row)
};

CircularGate circular_gate(std::int64_t p, std::int64_t q, std::int64_t r);

enum class SweepProfile { Medium, MediumPlus };

/// Largest p of the Medium range. MediumPlus skips triples with an entry at
/// or below it, since Medium already covers them.
constexpr std::int64_t kMediumMax = 33;

struct SweepFailure {
  std::int64_t p, a, b, d;
  enum class Reason { NoWitnessFound } reason = Reason::NoWitnessFound;
  friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

struct SweepResult {
  std::vector<SweepFailure> failures;  // sorted by (p, a, b, d)
  std::uint64_t units = 0;
  std::uint64_t triples_checked = 0;
  std::uint64_t triples_skipped = 0;  // entry too small or not hyperbolic
};

struct SweepUnit {
  std::int64_t p, a, b;
  std::int64_t d_max;
};

std::vector<SweepUnit> sweep_units(std::int64_t p_lo, std::int64_t p_hi, SweepProfile profile);

SweepResult sweep_small_min(std::int64_t p_lo, std::int64_t p_hi, SweepProfile profile,
                            int jobs = 1);

std::string to_string(SweepProfile profile);

}  // namespace tricert
