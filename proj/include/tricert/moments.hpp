#pragma once

// Fourier coefficients C_{lambda,m} of (e(t) - 24)^m, where
// e = (8 sin(pi x) sin(pi y) sin(pi z))^2 is expanded in the characters
// exp(2 pi i lambda . (x,y,z)), lambda in {-1,0,1}^3 for m = 1.

#include <map>
#include <memory>
#include <vector>

#include "tricert/arith.hpp"
#include "tricert/rational.hpp"

namespace tricert {

/// Primitive integer vector, first nonzero entry positive.
using Direction = Int3;

Direction canonical_direction(const Int3& v);

/// Absolute values sorted ascending, divided by the gcd.
Int3 presentation_form(const Int3& v);

class CoefTable {
 public:
  CoefTable() = default;
  CoefTable(int m, std::map<Int3, BigInt> entries);

  int m() const { return m_; }
  const std::map<Int3, BigInt>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  /// C_{lambda,m}, zero off the support.
  BigInt at(const Int3& lambda) const;
  BigInt total() const;

 private:
  int m_ = 0;
  std::map<Int3, BigInt> entries_;
};

CoefTable base_table();

/// Table at power t.m() + 1.
CoefTable convolve(const CoefTable& t, const CoefTable& base);

/// 1 <= m <= 16
CoefTable coef_table(int m);

/// Memoized coef_table; the returned table is shared and immutable.
std::shared_ptr<const CoefTable> cached_coef_table(int m);

/// Per primitive direction phi: C_0 plus the sum of C_lambda over nonzero
/// lambda on the line through phi.
std::map<Direction, BigInt> line_sums(const CoefTable& t);

/// Distinct line-sum values, ascending.
std::vector<BigInt> distinct_line_sums(const std::map<Direction, BigInt>& sums);

BigInt default_moment_threshold();  // 24^12

struct ExceptionalHyperplane {
  Int3 triple;      // presentation form
  BigInt line_sum;
};

/// Hyperplanes whose line sum is at most `threshold`, in presentation form,
/// ordered by (line_sum, triple).
std::vector<ExceptionalHyperplane> exceptional_hyperplanes(const CoefTable& t,
                                                           const BigInt& threshold);

/// E[(e(t) - 24)^m] along t (1/p, 1/q, 1/r): the sum of C_{lambda,m} over
/// lambda with lambda . (1/p,1/q,1/r) = 0.
ExactRational moment_lower_bound(std::int64_t p, std::int64_t q, std::int64_t r, int m);

}  // namespace tricert
