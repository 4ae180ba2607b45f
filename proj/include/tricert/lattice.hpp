#pragma once

// L1 geometry of R^3 relative to the parity lattice Lambda = {(a,b,c) in Z^3 :
// a+b+c even}, the standard lattice Z^3 and 2Z^3.
//
// Everything here that returns a distance is exact. The trigonometric
// functions d and e are floating point and exist for cross-checks only.

#include <array>
#include <cstdint>
#include <vector>

#include "tricert/arith.hpp"
#include "tricert/rational.hpp"

namespace tricert {

enum class LatticeKind { ParityLambda, StandardZ3, TwoZ3 };

struct TorusPoint {
  ExactRational x;
  ExactRational y;
  ExactRational z;

  const ExactRational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  ExactRational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend TorusPoint operator-(const TorusPoint& u, const TorusPoint& v) {
    return {u.x - v.x, u.y - v.y, u.z - v.z};
  }
  friend TorusPoint operator+(const TorusPoint& u, const TorusPoint& v) {
    return {u.x + v.x, u.y + v.y, u.z + v.z};
  }
};

bool operator<(const TorusPoint& u, const TorusPoint& v);

ExactRational l1_dist(const TorusPoint& u, const TorusPoint& v);

/// min over lattice points of the L1 distance. Coordinates are reduced mod 2
/// first; for ParityLambda the 14 even-sum points of {0,1,2}^3 are searched.
ExactRational dist_to_lattice(const TorusPoint& v, LatticeKind lattice);

/// (t/p, t/q, t/r)
TorusPoint scaled_point(const ExactRational& t, std::int64_t p, std::int64_t q, std::int64_t r);

struct MaxOverZ {
  ExactRational value;
  ExactRational witness_z;  // in [0, 2)
};

/// max over z of dist_to_lattice((x, y, z), ParityLambda), which equals
/// 1 + min(|x - Z|, |y - Z|), together with a maximizing z.
MaxOverZ max_dist_over_z(const ExactRational& x, const ExactRational& y);

/// An element of the order-48 group of signed coordinate permutations,
/// acting by v -> (sign[0] v[perm[0]], sign[1] v[perm[1]], sign[2] v[perm[2]]).
struct SignedPermutation {
  std::array<int, 3> perm;
  std::array<int, 3> sign;

  TorusPoint apply(const TorusPoint& v) const;
  int determinant() const;
  int sign_flips() const;
};

const std::array<SignedPermutation, 48>& signed_permutations();

/// Distinct images of v under the 48 signed permutations, sorted.
std::vector<TorusPoint> symmetry_orbit(const TorusPoint& v);

/// 4 - 4cos^2(a) - 4cos^2(b) - 4cos^2(c) - 8cos(a)cos(b)cos(c) with
/// (a, b, c) = (t pi/p, t pi/q, t pi/r).
double d_eval(std::int64_t p, std::int64_t q, std::int64_t r, double t);

/// (8 sin(pi x) sin(pi y) sin(pi z))^2
double e_eval(double x, double y, double z);

/// 1 + 3 eps where 64 sin^6(pi/3 + pi eps) = e_val, eps in [0, 1/6].
double dist_bound_from_e(double e_val);

namespace kernel {

/// Exact distance of (num[0], num[1], num[2]) / den to Lambda, multiplied by
/// den. Numerators may be any int64; den > 0 and 2*den must fit.
std::int64_t scaled_dist_lambda(std::array<std::int64_t, 3> num, std::int64_t den);

/// Same for Z^3.
std::int64_t scaled_dist_z3(std::array<std::int64_t, 3> num, std::int64_t den);

}  // namespace kernel

}  // namespace tricert
