#pragma once

#include <functional>
#include <string>

#include "tuttekit/bipoly.hpp"
#include "tuttekit/limits.hpp"
#include "tuttekit/rational.hpp"
#include "tuttekit/unipoly.hpp"

namespace tuttekit {

/// base^exponent, kept unexpanded.
struct PowerForm {
  BiPoly base;
  BigInt exponent;

  friend bool operator==(const PowerForm&, const PowerForm&) = default;
};

/// An integer base^exponent whose digits are only produced on request.
struct CountForm {
  BigInt base;
  BigInt exponent;

  /// Estimated bit length of the value.
  std::uint64_t estimated_bits() const;
  /// Exact value. Throws BudgetExceeded when estimated_bits() > max_bits.
  BigInt value(std::uint64_t max_bits = Limits{}.render_max_bits) const;
  /// Decimal digits when small enough, otherwise "base^exponent".
  std::string render(std::uint64_t max_bits = Limits{}.render_max_bits) const;

  friend bool operator==(const CountForm&, const CountForm&) = default;
};

/// prefactor * base^exponent, for univariate specializations of power forms.
struct UniPowerForm {
  UniPoly prefactor;
  UniPoly base;
  BigInt exponent;

  /// Expands; throws BudgetExceeded when the degree would pass max_degree.
  UniPoly expand(std::uint64_t max_degree) const;
};

/// The triangle's Tutte polynomial x^2 + x + y.
BiPoly triangle_tutte();

/// Koch network: T(K_{m,n}) = (x^2 + x + y)^((3m+1)^n).
PowerForm koch_tutte(unsigned m, unsigned n);

/// Exponential network: T(S_n) = (x^2 + x + y)^((3^(n+1) - 1)/2).
PowerForm exp_tutte(unsigned n);

/// Integer base evaluated at (x0, y0) with the exponent carried along.
/// Throws DomainError when the evaluated base is not an integer.
CountForm powerform_eval(const PowerForm& pf, const Rational& x0, const Rational& y0);

/// Expanded polynomial; throws BudgetExceeded past limits.pow_cells.
BiPoly powerform_expand(const PowerForm& pf, const Limits& limits = {});

/// Chromatic polynomial of a graph whose blocks are `triangles` triangles
/// glued in a tree: lambda * ((lambda-1)(lambda-2))^triangles.
UniPowerForm triangle_tree_chromatic(const BigInt& triangles);

/// All-terminal reliability of the same graphs: (3p^2 - 2p^3)^triangles.
UniPowerForm triangle_tree_reliability(const BigInt& triangles);

/// Evaluation capability T(x0, y0).
using TutteEvaluator = std::function<Rational(const Rational&, const Rational&)>;

/// Potts partition function from the Tutte polynomial:
///   Z(q, v) = (q/v)^k * v^|V| * T(q/v + 1, v + 1)
/// with k components and |V| vertices. Throws DomainError when v = 0.
Rational potts_partition(const TutteEvaluator& tutte_at, std::uint32_t components,
                         std::uint32_t num_vertices, const Rational& q, const Rational& v);

std::string to_string(const PowerForm& pf);
std::string to_string(const UniPowerForm& pf);

}  // namespace tuttekit
