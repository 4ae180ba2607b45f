#include "tricert/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tricert/errors.hpp"

namespace tricert {

bool operator<(const TorusPoint& u, const TorusPoint& v) {
  for (int i = 0; i < 3; ++i) {
    if (u[i] < v[i]) return true;
    if (v[i] < u[i]) return false;
  }
  return false;
}

ExactRational l1_dist(const TorusPoint& u, const TorusPoint& v) {
  return abs_of(u.x - v.x) + abs_of(u.y - v.y) + abs_of(u.z - v.z);
}

namespace {

const std::vector<std::array<int, 3>>& even_candidates() {
  static const auto pts = [] {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          if ((a + b + c) % 2 == 0) out.push_back({a, b, c});
    return out;
  }();
  return pts;
}

}  // namespace

ExactRational dist_to_lattice(const TorusPoint& v, LatticeKind lattice) {
  const std::array<ExactRational, 3> r{reduce_mod(v.x, 2), reduce_mod(v.y, 2), reduce_mod(v.z, 2)};
  switch (lattice) {
    case LatticeKind::StandardZ3:
      return dist_to_integers(r[0]) + dist_to_integers(r[1]) + dist_to_integers(r[2]);
    case LatticeKind::TwoZ3: {
      ExactRational total = 0;
      for (const auto& c : r) {
        ExactRational to_zero = c;
        ExactRational to_two = 2 - c;
        total += to_zero < to_two ? to_zero : to_two;
      }
      return total;
    }
    case LatticeKind::ParityLambda: {
      ExactRational best = 6;
      for (const auto& cand : even_candidates()) {
        ExactRational d = abs_of(r[0] - cand[0]) + abs_of(r[1] - cand[1]) + abs_of(r[2] - cand[2]);
        if (d < best) best = d;
      }
      return best;
    }
  }
  throw InputError("unknown lattice kind");
}

TorusPoint scaled_point(const ExactRational& t, std::int64_t p, std::int64_t q, std::int64_t r) {
  if (p == 0 || q == 0 || r == 0) throw InputError("scaled_point: zero denominator");
  return {t * rat(1, p), t * rat(1, q), t * rat(1, r)};
}

MaxOverZ max_dist_over_z(const ExactRational& x, const ExactRational& y) {
  // Symmetries (x, y, z) -> (x + 1, y, z + 1) and (x, y, z) -> (1 - x, y, 1 - z)
  // preserve the distance, so fold each coordinate into [0, 1/2] while
  // tracking how z must be transported back.
  struct Folded {
    ExactRational value;
    BigInt shift;
    bool flipped;
  };
  auto fold = [](const ExactRational& c) {
    BigInt k = floor_of(c);
    ExactRational f = c - ExactRational{k};
    const bool flip = f > rat(1, 2);
    return Folded{flip ? ExactRational{1 - f} : f, k, flip};
  };
  const Folded fx = fold(x);
  const Folded fy = fold(y);

  const ExactRational& hi = fx.value < fy.value ? fy.value : fx.value;
  const ExactRational& lo = fx.value < fy.value ? fx.value : fy.value;
  ExactRational z = 1 - hi;
  if (fx.flipped) z = 1 - z;
  if (fy.flipped) z = 1 - z;
  z += ExactRational{fx.shift + fy.shift};
  return {1 + lo, reduce_mod(z, 2)};
}

TorusPoint SignedPermutation::apply(const TorusPoint& v) const {
  TorusPoint out;
  for (int i = 0; i < 3; ++i) out[i] = sign[i] * v[perm[i]];
  return out;
}

int SignedPermutation::determinant() const {
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (perm[i] > perm[j]) ++inversions;
  const int perm_sign = inversions % 2 == 0 ? 1 : -1;
  return perm_sign * sign[0] * sign[1] * sign[2];
}

int SignedPermutation::sign_flips() const {
  return (sign[0] < 0) + (sign[1] < 0) + (sign[2] < 0);
}

const std::array<SignedPermutation, 48>& signed_permutations() {
  static const auto group = [] {
    std::array<SignedPermutation, 48> out{};
    std::array<int, 3> perm{0, 1, 2};
    std::size_t idx = 0;
    do {
      for (int mask = 0; mask < 8; ++mask) {
        out[idx++] = SignedPermutation{
            perm, {(mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1}};
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return group;
}

std::vector<TorusPoint> symmetry_orbit(const TorusPoint& v) {
  std::vector<TorusPoint> out;
  out.reserve(48);
  for (const auto& g : signed_permutations()) out.push_back(g.apply(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double d_eval(std::int64_t p, std::int64_t q, std::int64_t r, double t) {
  if (p == 0 || q == 0 || r == 0) throw InputError("d_eval: zero parameter");
  const double pi = std::numbers::pi;
  const double a = std::cos(t * pi / static_cast<double>(p));
  const double b = std::cos(t * pi / static_cast<double>(q));
  const double c = std::cos(t * pi / static_cast<double>(r));
  return 4 - 4 * a * a - 4 * b * b - 4 * c * c - 8 * a * b * c;
}

double e_eval(double x, double y, double z) {
  const double pi = std::numbers::pi;
  const double s = 8 * std::sin(pi * x) * std::sin(pi * y) * std::sin(pi * z);
  return s * s;
}

double dist_bound_from_e(double e_val) {
  if (!(e_val >= 27.0 && e_val <= 64.0)) {
    throw InputError("dist_bound_from_e: value must lie in [27, 64]");
  }
  const double s = std::min(1.0, std::pow(e_val / 64.0, 1.0 / 6.0));
  const double eps = std::asin(s) / std::numbers::pi - 1.0 / 3.0;
  return 1 + 3 * std::clamp(eps, 0.0, 1.0 / 6.0);
}

namespace kernel {

namespace {

struct Rounded {
  std::int64_t dist;   // distance to the nearest integer, scaled
  std::int64_t delta;  // extra cost of the second-nearest integer
  int parity;          // parity of the nearest integer
};

inline Rounded round_coordinate(std::int64_t num, std::int64_t den) {
  std::int64_t r = num % (2 * den);
  if (r < 0) r += 2 * den;
  int floor_parity = 0;
  if (r >= den) {
    r -= den;
    floor_parity = 1;
  }
  if (2 * r <= den) return {r, den - 2 * r, floor_parity};
  return {den - r, 2 * r - den, floor_parity ^ 1};
}

}  // namespace

std::int64_t scaled_dist_lambda(std::array<std::int64_t, 3> num, std::int64_t den) {
  const Rounded a = round_coordinate(num[0], den);
  const Rounded b = round_coordinate(num[1], den);
  const Rounded c = round_coordinate(num[2], den);
  std::int64_t total = a.dist + b.dist + c.dist;
  if ((a.parity ^ b.parity ^ c.parity) != 0) total += std::min({a.delta, b.delta, c.delta});
  return total;
}

std::int64_t scaled_dist_z3(std::array<std::int64_t, 3> num, std::int64_t den) {
  return round_coordinate(num[0], den).dist + round_coordinate(num[1], den).dist +
         round_coordinate(num[2], den).dist;
}

}  // namespace kernel

}  // namespace tricert
