#include "tricert/jacobsthal.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "tricert/arith.hpp"
#include "tricert/errors.hpp"

namespace tricert {

std::string_view to_string(BoundSource s) {
  switch (s) {
    case BoundSource::Exact: return "exact";
    case BoundSource::KanoldPow2: return "kanold_pow2";
    case BoundSource::TableU: return "table_u";
    case BoundSource::SqrtBound: return "sqrt_bound";
  }
  return "unknown";
}

namespace {

constexpr std::int64_t kExactLimit = 10'000'000;

// Longest run of set bits in a bitset of `len` bits.
std::int64_t longest_run(std::vector<std::uint64_t> bits) {
  std::int64_t run = 0;
  bool any = true;
  while (any) {
    any = false;
    for (auto w : bits) {
      if (w != 0) {
        any = true;
        break;
      }
    }
    if (!any) break;
    ++run;
    // bits &= bits >> 1
    for (std::size_t i = 0; i < bits.size(); ++i) {
      const std::uint64_t next = i + 1 < bits.size() ? bits[i + 1] : 0;
      bits[i] &= (bits[i] >> 1) | (next << 63);
    }
  }
  return run;
}

}  // namespace

std::int64_t jacobsthal_exact(std::int64_t n) {
  if (n <= 0) throw InputError("jacobsthal_exact requires n >= 1");
  if (n == 1) return 1;
  const auto primes = prime_factors(n);
  std::int64_t r = 1;
  for (auto p : primes) r *= p;

  // Non-totatives of r in [0, r). 0 is one, r-1 and 1 are not, so no run
  // wraps around and the circular gap is one more than the longest run.
  std::vector<std::uint64_t> mask(static_cast<std::size_t>((r + 63) / 64), 0);
  for (auto p : primes) {
    for (std::int64_t j = 0; j < r; j += p) mask[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
  return longest_run(std::move(mask)) + 1;
}

const std::array<std::int64_t, 24>& jacobsthal_table_u() {
  // U(r), r = 1..24
  static const std::array<std::int64_t, 24> table{2,   4,   6,   10,  14,  22,  26,  34,
                                                  40,  46,  58,  66,  74,  90,  100, 106,
                                                  118, 132, 152, 174, 190, 200, 216, 236};
  return table;
}

BigInt kanold_bound(int omega) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(omega));
  return out;
}

BigBound jacobsthal_upper(int omega, const BigInt& n) {
  if (n < 1) throw InputError("jacobsthal_upper requires n >= 1");
  BigBound best{kanold_bound(omega), BoundSource::KanoldPow2};
  if (omega >= 1 && omega <= 24) {
    BigInt u = static_cast<long>(jacobsthal_table_u()[static_cast<std::size_t>(omega - 1)]);
    if (u < best.value) best = {u, BoundSource::TableU};
  }
  if (n > 4) {
    BigInt s;
    BigInt four_n = 4 * n;
    mpz_sqrt(s.get_mpz_t(), four_n.get_mpz_t());
    if (s < best.value) best = {s, BoundSource::SqrtBound};
  }
  return best;
}

JacobsthalBoundSource jacobsthal_upper(std::int64_t n) {
  const auto b = jacobsthal_upper(omega(n), BigInt{static_cast<long>(n)});
  return {to_int64(b.value), b.source};
}

BigInt primorial(int r) {
  if (r < 1) throw InputError("primorial requires r >= 1");
  BigInt out = 1;
  for (auto p : first_primes(r)) out *= static_cast<long>(p);
  return out;
}

std::int64_t jacobsthal_window(std::int64_t N) {
  if (N < 1) throw InputError("jacobsthal_window requires N >= 1");
  const std::int64_t r = radical(N);
  if (r > kExactLimit) return jacobsthal_upper(r).value;

  static std::mutex mu;
  static std::unordered_map<std::int64_t, std::int64_t> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
  }
  const std::int64_t j = jacobsthal_exact(r);
  std::lock_guard lock(mu);
  cache.emplace(r, j);
  return j;
}

std::int64_t nearest_coprime_shift(const ExactRational& m_real, std::int64_t a, std::int64_t d,
                                   std::int64_t N) {
  if (N < 1) throw InputError("nearest_coprime_shift requires N >= 1");
  const std::int64_t shared = std::gcd(d, N);
  if (shared != 1 && std::gcd(a, shared) != 1) {
    throw InputError("nearest_coprime_shift: a + d m is never prime to N");
  }
  const std::int64_t n_prime = coprime_part(N, d);
  const std::int64_t J = jacobsthal_window(n_prime);

  // m_Z = nearest integer to m_real (halves round up), eps = m_real - m_Z
  const BigInt mz_big = floor_of(m_real + rat(1, 2));
  const std::int64_t mz = to_int64(mz_big);
  const ExactRational eps = m_real - ExactRational{mz_big};

  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (J % 2 == 1) {
    lo = mz - J / 2;
    hi = mz + J / 2;
  } else if (eps >= 0) {
    lo = mz - J / 2 + 1;
    hi = mz + J / 2;
  } else {
    lo = mz - J / 2;
    hi = mz + J / 2 - 1;
  }

  std::int64_t best = 0;
  ExactRational best_dist = -1;
  for (std::int64_t m = lo; m <= hi; ++m) {
    if (std::gcd(a + d * m, N) != 1) continue;
    ExactRational dist = abs_of(ExactRational{static_cast<long>(m)} - m_real);
    if (best_dist < 0 || dist < best_dist) {
      best = m;
      best_dist = dist;
    }
  }
  if (best_dist < 0) {
    throw VerificationError("nearest_coprime_shift: window of length " + std::to_string(J) +
                            " has no admissible element");
  }
  return best;
}

}  // namespace tricert
