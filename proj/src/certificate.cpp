#include "tricert/certificate.hpp"

#include <algorithm>
#include <array>

#include "tricert/arith.hpp"
#include "tricert/errors.hpp"

namespace tricert {

Triple Triple::make(std::int64_t p, std::int64_t q, std::int64_t r) {
  if (p < 1 || q < 1 || r < 1) throw InputError("triple entries must be positive");
  std::array<std::int64_t, 3> s{p, q, r};
  std::sort(s.begin(), s.end());
  return Triple{s[0], s[1], s[2], lcm_of({2, s[0], s[1], s[2]})};
}

TorusPoint Triple::v() const { return {rat(1, p), rat(1, q), rat(1, r)}; }

bool Triple::hyperbolic() const { return is_hyperbolic(p, q, r); }

bool is_hyperbolic(std::int64_t p, std::int64_t q, std::int64_t r) {
  if (p < 1 || q < 1 || r < 1) return false;
  // 1/p + 1/q + 1/r < 1  <=>  qr + pr + pq < pqr
  const __int128 P = p, Q = q, R = r;
  return Q * R + P * R + P * Q < P * Q * R;
}

std::string triple_name(const Triple& t) {
  return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + ")";
}

}  // namespace tricert
