#include "tuttekit/rational.hpp"

#include <cctype>

#include "tuttekit/errors.hpp"

namespace tuttekit {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  text = trim(text);
  if (!is_decimal(text)) {
    throw DomainError("not a decimal integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && den_text.front() == '-') {
    throw DomainError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  return make_rational(num, parse_bigint(den_text));
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt pow(const BigInt& base, unsigned long k) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
  return out;
}

namespace {

Rational pow_unsigned(const Rational& base, unsigned long k) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  return out;  // already canonical: gcd(a^k, b^k) = 1
}

}  // namespace

Rational pow(const Rational& base, long k) {
  if (k >= 0) return pow_unsigned(base, static_cast<unsigned long>(k));
  if (base == 0) throw DomainError("zero raised to a negative power");
  Rational inv = 1 / base;
  return pow_unsigned(inv, static_cast<unsigned long>(-k));
}

}  // namespace tuttekit
