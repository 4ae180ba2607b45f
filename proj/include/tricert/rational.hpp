#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tricert {

using BigInt = mpz_class;

/// Arbitrary-precision fraction. GMP keeps every mpq_class in canonical form
/// (gcd(|num|, den) = 1, den > 0) after each arithmetic operation, so the
/// type invariant holds as long as values are built through `rat()` or
/// arithmetic on canonical values.
using ExactRational = mpq_class;

ExactRational rat(std::int64_t num, std::int64_t den = 1);
ExactRational rat(const BigInt& num, const BigInt& den);

/// "num/den" in lowest terms; the denominator is always printed.
std::string to_string(const ExactRational& q);
std::string to_string(const BigInt& z);

/// Accepts "a/b" or "a" with optional leading sign. Throws InputError.
ExactRational parse_rational(std::string_view text);

BigInt floor_of(const ExactRational& q);

/// q reduced into [0, modulus).
ExactRational reduce_mod(const ExactRational& q, std::int64_t modulus);

ExactRational abs_of(const ExactRational& q);

/// Distance from q to the nearest integer, in [0, 1/2].
ExactRational dist_to_integers(const ExactRational& q);

std::int64_t to_int64(const BigInt& z);

}  // namespace tricert
