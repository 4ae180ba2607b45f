#include "tricert/moments.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>

#include "tricert/errors.hpp"

namespace tricert {

Direction canonical_direction(const Int3& v) {
  if (is_zero(v)) throw InputError("canonical_direction of the zero vector");
  Int3 d = primitive(v);
  for (auto c : d) {
    if (c == 0) continue;
    if (c < 0) d = {-d[0], -d[1], -d[2]};
    break;
  }
  return d;
}

Int3 presentation_form(const Int3& v) { return sorted_abs_primitive(v); }

CoefTable::CoefTable(int m, std::map<Int3, BigInt> entries) : m_(m), entries_(std::move(entries)) {
  for (auto it = entries_.begin(); it != entries_.end();) {
    it = it->second == 0 ? entries_.erase(it) : std::next(it);
  }
}

BigInt CoefTable::at(const Int3& lambda) const {
  auto it = entries_.find(lambda);
  return it == entries_.end() ? BigInt{0} : it->second;
}

BigInt CoefTable::total() const {
  BigInt s = 0;
  for (const auto& [k, v] : entries_) s += v;
  return s;
}

CoefTable base_table() {
  static const long by_weight[4] = {-16, -4, 2, -1};
  std::map<Int3, BigInt> e;
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t b = -1; b <= 1; ++b)
      for (std::int64_t c = -1; c <= 1; ++c) {
        const int weight = (a != 0) + (b != 0) + (c != 0);
        e[{a, b, c}] = by_weight[weight];
      }
  return CoefTable(1, std::move(e));
}

CoefTable convolve(const CoefTable& t, const CoefTable& base) {
  if (base.m() != 1) throw InputError("convolve: second argument must be the m=1 table");
  const int m = t.m() + 1;
  const std::int64_t side = 2 * m + 1;
  std::vector<BigInt> dense(static_cast<std::size_t>(side * side * side));
  auto slot = [&](const Int3& v) -> BigInt& {
    return dense[static_cast<std::size_t>(((v[0] + m) * side + (v[1] + m)) * side + (v[2] + m))];
  };
  for (const auto& [lam, c] : t.entries()) {
    for (const auto& [step, b] : base.entries()) {
      mpz_addmul(slot({lam[0] + step[0], lam[1] + step[1], lam[2] + step[2]}).get_mpz_t(),
                 c.get_mpz_t(), b.get_mpz_t());
    }
  }
  std::map<Int3, BigInt> out;
  for (std::int64_t a = -m; a <= m; ++a)
    for (std::int64_t b = -m; b <= m; ++b)
      for (std::int64_t c = -m; c <= m; ++c) {
        BigInt& v = slot({a, b, c});
        if (v != 0) out.emplace(Int3{a, b, c}, std::move(v));
      }
  return CoefTable(m, std::move(out));
}

CoefTable coef_table(int m) {
  if (m < 1 || m > 16) throw InputError("coef_table requires 1 <= m <= 16");
  const CoefTable base = base_table();
  CoefTable t = base;
  for (int i = 1; i < m; ++i) t = convolve(t, base);
  return t;
}

std::shared_ptr<const CoefTable> cached_coef_table(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CoefTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_shared<const CoefTable>(coef_table(m));
  return slot;
}

std::map<Direction, BigInt> line_sums(const CoefTable& t) {
  const BigInt c0 = t.at({0, 0, 0});
  std::map<Direction, BigInt> sums;
  for (const auto& [lam, c] : t.entries()) {
    if (is_zero(lam)) continue;
    auto [it, fresh] = sums.try_emplace(canonical_direction(lam), c0);
    it->second += c;
  }
  return sums;
}

std::vector<BigInt> distinct_line_sums(const std::map<Direction, BigInt>& sums) {
  std::vector<BigInt> values;
  values.reserve(sums.size());
  for (const auto& [d, s] : sums) values.push_back(s);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

BigInt default_moment_threshold() {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 24, 12);
  return out;
}

std::vector<ExceptionalHyperplane> exceptional_hyperplanes(const CoefTable& t,
                                                           const BigInt& threshold) {
  std::map<Int3, BigInt> by_form;
  for (const auto& [dir, s] : line_sums(t)) {
    if (s > threshold) continue;
    const Int3 form = presentation_form(dir);
    auto [it, fresh] = by_form.emplace(form, s);
    if (!fresh && it->second != s) {
      throw VerificationError("line sums differ within one signed-permutation class");
    }
  }
  std::vector<ExceptionalHyperplane> out;
  for (auto& [form, s] : by_form) out.push_back({form, s});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.line_sum != b.line_sum ? a.line_sum < b.line_sum : a.triple < b.triple;
  });
  return out;
}

ExactRational moment_lower_bound(std::int64_t p, std::int64_t q, std::int64_t r, int m) {
  if (p == 0 || q == 0 || r == 0) throw InputError("moment_lower_bound: zero parameter");
  const auto table = cached_coef_table(m);
  // lambda . (1/p,1/q,1/r) = 0  <=>  lambda . (L/p, L/q, L/r) = 0
  const std::int64_t L = lcm_of({p, q, r});
  const Int3 w{L / p, L / q, L / r};
  BigInt sum = 0;
  for (const auto& [lam, c] : table->entries()) {
    if (dot(lam, w) == 0) sum += c;
  }
  return ExactRational{sum};
}

}  // namespace tricert
