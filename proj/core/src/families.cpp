#include "tuttekit/families.hpp"

#include <cmath>
#include <string>

#include "saturating.hpp"
#include "tuttekit/errors.hpp"

namespace tuttekit {

std::uint64_t CountForm::estimated_bits() const {
  if (exponent == 0 || base == 0 || abs(base) == 1) return 1;
  if (!exponent.fits_ulong_p()) return UINT64_MAX;
  long exp2 = 0;
  const double mantissa = std::fabs(mpz_get_d_2exp(&exp2, base.get_mpz_t()));
  const double log2_base = static_cast<double>(exp2) + std::log2(mantissa);
  const double bits = std::ceil(exponent.get_d() * log2_base);
  if (!(bits < 1.8e19)) return UINT64_MAX;
  return static_cast<std::uint64_t>(bits) + 1;
}

BigInt CountForm::value(std::uint64_t max_bits) const {
  if (estimated_bits() > max_bits) {
    throw BudgetExceeded("count " + base.get_str() + "^" + exponent.get_str() +
                         " exceeds " + std::to_string(max_bits) + " bits");
  }
  if (exponent < 0) throw DomainError("negative exponent in a count form");
  return pow(base, exponent.get_ui());
}

std::string CountForm::render(std::uint64_t max_bits) const {
  if (estimated_bits() > max_bits) return base.get_str() + "^" + exponent.get_str();
  return value(max_bits).get_str();
}

UniPoly UniPowerForm::expand(std::uint64_t max_degree) const {
  if (!exponent.fits_ulong_p()) throw BudgetExceeded("exponent too large to expand");
  const std::uint64_t degree = detail::saturating_add(
      detail::saturating_mul(base.degree(), exponent.get_ui()), prefactor.degree());
  if (degree > max_degree) {
    throw BudgetExceeded("expansion would reach degree beyond " + std::to_string(max_degree));
  }
  return prefactor * pow(base, exponent.get_ui());
}

BiPoly triangle_tutte() {
  return BiPoly::monomial(2, 0) + BiPoly::monomial(1, 0) + BiPoly::monomial(0, 1);
}

PowerForm koch_tutte(unsigned m, unsigned n) {
  if (m == 0) throw DomainError("Koch parameter m must be positive");
  return {triangle_tutte(), pow(BigInt(3 * m + 1), n)};
}

PowerForm exp_tutte(unsigned n) {
  BigInt e = pow(BigInt(3), n + 1) - 1;
  mpz_divexact_ui(e.get_mpz_t(), e.get_mpz_t(), 2);
  return {triangle_tutte(), e};
}

CountForm powerform_eval(const PowerForm& pf, const Rational& x0, const Rational& y0) {
  const Rational base = evaluate(pf.base, x0, y0);
  if (!is_integer(base)) {
    throw DomainError("base evaluates to the non-integer " + to_string(base));
  }
  return {base.get_num(), pf.exponent};
}

BiPoly powerform_expand(const PowerForm& pf, const Limits& limits) {
  if (!pf.exponent.fits_ulong_p()) throw BudgetExceeded("exponent too large to expand");
  return pow(pf.base, pf.exponent.get_ui(), limits);
}

UniPowerForm triangle_tree_chromatic(const BigInt& triangles) {
  // (lambda - 1)(lambda - 2) = lambda^2 - 3 lambda + 2
  UniPoly base = UniPoly::from_coeffs(Variable::lambda, {{0, 2}, {1, -3}, {2, 1}});
  return {UniPoly::monomial(Variable::lambda, 1), std::move(base), triangles};
}

UniPowerForm triangle_tree_reliability(const BigInt& triangles) {
  UniPoly base = UniPoly::from_coeffs(Variable::p, {{2, 3}, {3, -2}});
  return {UniPoly(Variable::p, 1), std::move(base), triangles};
}

Rational potts_partition(const TutteEvaluator& tutte_at, std::uint32_t components,
                         std::uint32_t num_vertices, const Rational& q, const Rational& v) {
  if (v == 0) throw DomainError("Potts conversion needs v != 0");
  const Rational ratio = q / v;
  return pow(ratio, static_cast<long>(components)) * pow(v, static_cast<long>(num_vertices)) *
         tutte_at(ratio + 1, v + 1);
}

std::string to_string(const PowerForm& pf) {
  return "(" + to_string(pf.base) + ")^" + pf.exponent.get_str();
}

std::string to_string(const UniPowerForm& pf) {
  std::string out;
  if (pf.prefactor != UniPoly(pf.prefactor.var(), 1)) {
    const bool compound = pf.prefactor.coeffs().size() > 1;
    out = compound ? "(" + to_string(pf.prefactor) + ")*" : to_string(pf.prefactor) + "*";
  }
  return out + "(" + to_string(pf.base) + ")^" + pf.exponent.get_str();
}

}  // namespace tuttekit
