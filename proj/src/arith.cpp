#include "tricert/arith.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <utility>
#include <numeric>
#include <string>

#include "tricert/errors.hpp"

namespace tricert {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  const std::int64_t step = a / std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(step, b, &out)) {
    throw InputError("lcm overflows 64 bits: " + std::to_string(a) + ", " + std::to_string(b));
  }
  return out;
}

std::int64_t lcm_of(std::initializer_list<std::int64_t> values) {
  std::int64_t acc = 1;
  for (auto v : values) acc = lcm64(acc, v);
  return acc;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  if (n < 1) throw InputError("prime_factors requires n >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (auto p : prime_factors(n)) r *= p;
  return r;
}

int omega(std::int64_t n) { return static_cast<int>(prime_factors(n).size()); }

std::int64_t odd_part(std::int64_t n) {
  if (n == 0) return 0;
  while (n % 2 == 0) n /= 2;
  return n;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::int64_t coprime_part(std::int64_t n, std::int64_t d) {
  if (n == 0) return 0;
  n = n < 0 ? -n : n;
  for (std::int64_t g = std::gcd(n, d); g > 1; g = std::gcd(n, g)) n /= g;
  return n;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = floor_mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw InputError("no modular inverse");
  return floor_mod(old_s, m);
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw InputError("isqrt of a negative number");
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

std::vector<std::int64_t> first_primes(int count) {
  std::vector<std::int64_t> out;
  for (std::int64_t c = 2; static_cast<int>(out.size()) < count; ++c) {
    bool prime = true;
    for (auto p : out) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(c);
  }
  return out;
}

std::int64_t dot(const Int3& u, const Int3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Int3 cross(const Int3& u, const Int3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

std::int64_t content(const Int3& v) { return std::gcd(std::gcd(v[0], v[1]), v[2]); }

bool is_zero(const Int3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Int3 primitive(const Int3& v) {
  const std::int64_t g = content(v);
  if (g == 0) return v;
  return {v[0] / g, v[1] / g, v[2] / g};
}

Int3 sorted_abs_primitive(const Int3& v) {
  Int3 a{std::abs(v[0]), std::abs(v[1]), std::abs(v[2])};
  std::sort(a.begin(), a.end());
  return primitive(a);
}

}  // namespace tricert
