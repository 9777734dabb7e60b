#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tuttekit/rational.hpp"

namespace tuttekit {

enum class Variable { y, lambda, p, q };

/// Display name in text output ("λ" for lambda).
std::string_view display_name(Variable v);
/// Machine tag used in JSON ("lambda" for lambda).
std::string_view tag_name(Variable v);
/// Inverse of tag_name. Throws DomainError for unknown tags.
Variable variable_from_tag(std::string_view tag);

/// Sparse univariate polynomial with exact rational coefficients.
///
/// The variable tag is fixed at construction and participates in equality;
/// arithmetic between polynomials in different variables is a DomainError.
class UniPoly {
 public:
  using Coeff = std::pair<std::uint32_t, Rational>;

  explicit UniPoly(Variable var = Variable::y) : var_(var) {}
  UniPoly(Variable var, Rational constant);

  /// Canonicalizes: sorts by degree, merges duplicates, drops zeros.
  static UniPoly from_coeffs(Variable var, std::vector<Coeff> coeffs);
  /// Dense constructor: dense[k] is the coefficient of var^k.
  static UniPoly from_dense(Variable var, const std::vector<BigInt>& dense);
  static UniPoly monomial(Variable var, std::uint32_t degree, Rational coeff = 1);

  Variable var() const noexcept { return var_; }
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// 0 for the zero polynomial.
  std::uint32_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back().first; }
  std::uint32_t min_degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.front().first; }
  Rational coeff(std::uint32_t degree) const;

  Rational operator()(const Rational& at) const;

  UniPoly with_var(Variable var) const;
  /// Multiplies by var^k.
  UniPoly shifted(std::uint32_t k) const;
  UniPoly scaled(const Rational& factor) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(UniPoly a);

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  Variable var_;
  std::vector<Coeff> coeffs_;
};

UniPoly pow(const UniPoly& a, std::uint64_t k);

/// q^nullity * a(1/q), relabelled in q. Throws DomainError when
/// degree(a) > nullity, since the result would not be a polynomial.
UniPoly reciprocal_transform(const UniPoly& a, std::uint32_t nullity);

/// a(1 - t) as a polynomial in `result_var`, via an addition-only Taylor shift.
UniPoly substitute_one_minus(const UniPoly& a, Variable result_var);

/// "λ^2 - 3*λ + 2"; highest degree first.
std::string to_string(const UniPoly& a);

}  // namespace tuttekit
