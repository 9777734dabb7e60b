#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tuttekit {

using BigInt = mpz_class;
/// Always canonical: lowest terms, positive denominator, zero is 0/1.
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "a", "-a" or "a/b" (decimal). Throws DomainError on anything else.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

bool is_integer(const Rational& value);

/// value^k for a non-negative machine exponent.
BigInt pow(const BigInt& base, unsigned long k);
/// value^k for any integer exponent; throws DomainError for 0^negative.
Rational pow(const Rational& base, long k);

}  // namespace tuttekit
