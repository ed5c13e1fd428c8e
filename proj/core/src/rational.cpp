#include "thinray/rational.hpp"

#include <cctype>
#include <sstream>

#include "thinray/errors.hpp"

namespace thinray {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) throw ParseError("not a rational literal: '" + std::string(text) + "'");
    return Rational(parse_integer(s));
  }
  const auto num = trim(s.substr(0, slash));
  const auto den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw ParseError("not a rational literal: '" + std::string(text) + "'");
  }
  const BigInt d = parse_integer(den);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational c = value;
  c.canonicalize();
  return c.get_str(10);
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_decimal(const Rational& value, int digits) {
  if (value == 0) return "0";
  mpf_class f(0, 64 + 4 * static_cast<unsigned>(digits));
  f = value;
  mp_exp_t exp = 0;
  std::string mant = f.get_str(exp, 10, static_cast<std::size_t>(digits));
  bool negative = false;
  if (!mant.empty() && mant[0] == '-') {
    negative = true;
    mant.erase(0, 1);
  }
  std::ostringstream os;
  if (negative) os << '-';
  if (exp <= 0) {
    os << "0." << std::string(static_cast<std::size_t>(-exp), '0') << mant;
  } else if (static_cast<std::size_t>(exp) >= mant.size()) {
    os << mant << std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
  } else {
    os << mant.substr(0, static_cast<std::size_t>(exp)) << '.' << mant.substr(static_cast<std::size_t>(exp));
  }
  return os.str();
}

BigInt floor_of(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt ceil_of(const Rational& value) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt round_of(const Rational& value) { return floor_of(value + Rational(1, 2)); }

Rational abs_of(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational sqrt_upper(const Rational& x) {
  if (x < 0) throw ValidationError("sqrt_upper of a negative value");
  if (x == 0) return Rational(0);
  // r = floor(sqrt(floor(x * 4^k))) with r >= 2^16 bounds the relative slack.
  for (unsigned long k = 0;; k += 8) {
    BigInt scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), 2 * k);
    const BigInt scaled = floor_of(x * Rational(scale));
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    if (root < 65536) continue;
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    Rational exact_try(root, den);
    exact_try.canonicalize();
    if (exact_try * exact_try == x) return exact_try;
    Rational up(root + 1, den);
    up.canonicalize();
    return up;
  }
}

BigInt lcm_of_denominators(const QVec& values) {
  BigInt l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

int sign_of(const Rational& value) { return sgn(value); }

int sign_of(const BigInt& value) { return sgn(value); }

Rational pow2(long exponent) {
  BigInt p = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  return Rational(BigInt(1), p);
}

}  // namespace thinray
