#pragma once

// Small-integer number theory shared by every module. All functions take
// and return 64-bit values; overflow in lcm() is reported as InputError
// rather than wrapping.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace tricert {

using Int3 = std::array<std::int64_t, 3>;

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::int64_t lcm_of(std::initializer_list<std::int64_t> values);

/// Distinct prime factors of n >= 1, ascending (trial division).
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Product of the distinct primes dividing n.
std::int64_t radical(std::int64_t n);

/// Number of distinct prime factors.
int omega(std::int64_t n);

std::int64_t odd_part(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Largest divisor of n coprime to d.
std::int64_t coprime_part(std::int64_t n, std::int64_t d);

/// Inverse of a modulo m (m >= 1, gcd(a, m) = 1); returns a value in [0, m).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// ((a mod m) + m) mod m
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

/// Largest s with s*s <= n, for n >= 0.
std::int64_t isqrt(std::int64_t n);

/// First `count` primes.
std::vector<std::int64_t> first_primes(int count);

std::int64_t dot(const Int3& u, const Int3& v);
Int3 cross(const Int3& u, const Int3& v);
std::int64_t content(const Int3& v);
bool is_zero(const Int3& v);

/// v divided by the gcd of its entries (zero stays zero).
Int3 primitive(const Int3& v);

/// Absolute values sorted ascending, divided by their gcd.
Int3 sorted_abs_primitive(const Int3& v);

}  // namespace tricert
