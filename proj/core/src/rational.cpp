#include "nsz/rational.hpp"

#include "nsz/errors.hpp"

#include <algorithm>
#include <map>

namespace nsz {

Rational make_rational(long num, long den) {
  if (den == 0) throw ParameterError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fraction(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+') {
    throw FormatError("not a rational: '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  Integer d{std::string(den)};
  if (d == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(n), d);
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& value, unsigned places) {
  Integer scale = power(Integer(10), places);
  Integer num = abs(value.get_num()) * scale * 2 + value.get_den();
  Integer den = value.get_den() * 2;
  Integer scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  if (value < 0 && scaled != 0) out.insert(0, "-");
  return out;
}

std::string repeating_decimal(const Rational& value) {
  Integer num = abs(value.get_num());
  const Integer& den = value.get_den();
  Integer whole;
  Integer rem;
  mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string out = (value < 0 ? "-" : "") + whole.get_str();
  if (rem == 0) return out;
  std::string frac;
  std::map<Integer, std::size_t> seen;
  while (rem != 0 && !seen.contains(rem)) {
    seen.emplace(rem, frac.size());
    rem *= 10;
    Integer digit;
    mpz_fdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t());
    frac += digit.get_str();
  }
  if (rem == 0) return out + "." + frac;
  std::size_t start = seen.at(rem);
  return out + "." + frac.substr(0, start) + "(" + frac.substr(start) + ")";
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer power(const Integer& base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational r(power(base.get_num(), exponent), power(base.get_den(), exponent));
  r.canonicalize();
  return r;
}

Integer isqrt(const Integer& value) {
  if (value < 0) throw ParameterError("isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), value.get_mpz_t());
  return r;
}

Int128 to_int128(const Integer& value) {
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > 126) throw ParameterError("integer exceeds 126 bits");
  Integer mag = abs(value);
  Integer hi = mag >> 64;
  Integer lo = mag - (hi << 64);
  auto u = (static_cast<UInt128>(mpz_get_ui(hi.get_mpz_t())) << 64) |
           static_cast<UInt128>(mpz_get_ui(lo.get_mpz_t()));
  auto r = static_cast<Int128>(u);
  return value < 0 ? -r : r;
}

Integer from_int128(Int128 value) {
  bool negative = value < 0;
  auto mag = negative ? static_cast<UInt128>(-value) : static_cast<UInt128>(value);
  Integer hi(static_cast<unsigned long>(mag >> 64));
  Integer lo(static_cast<unsigned long>(mag & 0xffffffffffffffffULL));
  Integer r = (hi << 64) + lo;
  return negative ? Integer(-r) : r;
}

}  // namespace nsz
