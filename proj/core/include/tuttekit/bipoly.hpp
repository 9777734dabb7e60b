#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tuttekit/limits.hpp"
#include "tuttekit/rational.hpp"
#include "tuttekit/unipoly.hpp"

namespace tuttekit {

/// Sparse bivariate polynomial in (x, y) with exact integer coefficients.
///
/// Terms are kept sorted by (deg_x, deg_y) ascending, with no duplicate
/// exponent pairs and no zero coefficients. Every operation returns a value
/// in this canonical form, so structural equality is polynomial equality.
class BiPoly {
 public:
  struct Term {
    std::uint32_t deg_x = 0;
    std::uint32_t deg_y = 0;
    BigInt coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  BiPoly() = default;
  explicit BiPoly(BigInt constant);

  /// Canonicalizes an arbitrary term list: sorts, merges duplicates, drops zeros.
  static BiPoly from_terms(std::vector<Term> terms);
  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(std::uint32_t deg_x, std::uint32_t deg_y, BigInt coeff = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest exponent of x (resp. y) over all terms; 0 for the zero polynomial.
  std::uint32_t deg_x() const noexcept;
  std::uint32_t deg_y() const noexcept;

  BigInt coeff(std::uint32_t deg_x, std::uint32_t deg_y) const;

  /// Multiplies by x^dx y^dy.
  BiPoly shifted(std::uint32_t dx, std::uint32_t dy) const;
  BiPoly scaled(const BigInt& factor) const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(BiPoly a);

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::vector<Term> terms_;
};

BiPoly square(const BiPoly& a);

/// a^k by repeated squaring. Throws BudgetExceeded when the predicted result
/// box (k*degX+1)*(k*degY+1) exceeds `limits.pow_cells`.
BiPoly pow(const BiPoly& a, std::uint64_t k, const Limits& limits = {});

/// Exact value a(x0, y0).
Rational evaluate(const BiPoly& a, const Rational& x0, const Rational& y0);

/// a(x0, y) as a polynomial in y.
UniPoly partial_eval_x(const BiPoly& a, const Rational& x0);

/// a(c0 + c1*lambda, 0) as a polynomial in lambda.
UniPoly substitute_x_affine(const BiPoly& a, const Rational& c0, const Rational& c1);

/// a(x, 0): keeps only the terms free of y.
BiPoly restrict_y_zero(const BiPoly& a);

/// Multiplies by (x - 1).
BiPoly times_x_minus_one(const BiPoly& a);

/// Human-readable form, highest terms first: "x^2 + x + y", "2*x*y^3 - 1".
std::string to_string(const BiPoly& a);

}  // namespace tuttekit
