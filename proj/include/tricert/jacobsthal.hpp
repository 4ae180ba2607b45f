#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "tricert/rational.hpp"

namespace tricert {

enum class BoundSource { Exact, KanoldPow2, TableU, SqrtBound };

std::string_view to_string(BoundSource s);

struct JacobsthalBoundSource {
  std::int64_t value;
  BoundSource source;
};

/// Largest gap between circularly consecutive totatives of n, J(1) = 1.
/// Works on rad(n); cost is linear in rad(n).
std::int64_t jacobsthal_exact(std::int64_t n);

/// U(r) for r = 1..24: upper bound for J(n) whenever n has r distinct primes.
const std::array<std::int64_t, 24>& jacobsthal_table_u();

/// 2^omega
BigInt kanold_bound(int omega);

/// Smallest of 2^omega(n), U(omega(n)) (omega <= 24) and floor(2 sqrt n) (n > 4).
JacobsthalBoundSource jacobsthal_upper(std::int64_t n);

/// Same, for an n too large for 64 bits given together with its omega.
struct BigBound {
  BigInt value;
  BoundSource source;
};
BigBound jacobsthal_upper(int omega, const BigInt& n);

/// Product of the first r primes.
BigInt primorial(int r);

/// Integer m with gcd(a + d m, N) = 1 and |m - m_real| <= J(N')/2, where N'
/// is the part of N coprime to d. Searches the window of J(N') consecutive
/// integers around m_real and returns the admissible m closest to m_real.
std::int64_t nearest_coprime_shift(const ExactRational& m_real, std::int64_t a, std::int64_t d,
                                   std::int64_t N);

/// J used for the window above: exact when rad(N) is small enough for a gap
/// scan, otherwise the best upper bound.
std::int64_t jacobsthal_window(std::int64_t N);

}  // namespace tricert
