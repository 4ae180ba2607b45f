#include "tricert/rational.hpp"

#include <charconv>
#include <limits>

#include "tricert/errors.hpp"

namespace tricert {

ExactRational rat(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  ExactRational q{BigInt{static_cast<long>(num)}, BigInt{static_cast<long>(den)}};
  q.canonicalize();
  return q;
}

ExactRational rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  ExactRational q{num, den};
  q.canonicalize();
  return q;
}

std::string to_string(const ExactRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw InputError("not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt{std::string(s)};
}

}  // namespace

ExactRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational{parse_integer(text)};
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  return rat(num, den);
}

BigInt floor_of(const ExactRational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

ExactRational reduce_mod(const ExactRational& q, std::int64_t modulus) {
  const ExactRational m{static_cast<long>(modulus)};
  ExactRational scaled = q / m;
  return q - ExactRational{floor_of(scaled)} * m;
}

ExactRational abs_of(const ExactRational& q) { return q < 0 ? ExactRational{-q} : q; }

ExactRational dist_to_integers(const ExactRational& q) {
  ExactRational frac = q - ExactRational{floor_of(q)};
  ExactRational other = 1 - frac;
  return frac < other ? frac : other;
}

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw InputError("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

}  // namespace tricert
