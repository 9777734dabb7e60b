#pragma once

#include "tuttekit/bipoly.hpp"
#include "tuttekit/limits.hpp"
#include "tuttekit/rational.hpp"
#include "tuttekit/unipoly.hpp"

namespace tuttekit {

/// Recursion state for the Farey graph G_n.
///
/// `t1` sums over spanning subgraphs in which the hubs X_n, Y_n share a
/// component; the complementary sum equals (x-1)*n_part, so
/// T(G_n) = t1 + (x-1)*n_part and no division by (x-1) is ever needed.
struct FareySplit {
  BiPoly t1;
  BiPoly n_part;
  unsigned generation = 0;

  /// The hubs-apart sum (x-1)*n_part.
  BiPoly t2() const { return times_x_minus_one(n_part); }
  BiPoly tutte() const { return t1 + t2(); }
};

/// The same state evaluated at a fixed rational point.
struct FareySplitValue {
  Rational t1;
  Rational n_part;
  unsigned generation = 0;
};

/// Runs the split recursion from (t1, n_part) = (1, 1):
///   t1'     = y*t1^2 + 2*t1*n_part + (x-1)*n_part^2
///   n_part' =          2*t1*n_part + (x-1)*n_part^2
/// Throws BudgetExceeded for n > limits.farey_poly_max_n.
FareySplit farey_split(unsigned n, const Limits& limits = {});

/// Exact Tutte polynomial of G_n.
BiPoly farey_tutte(unsigned n, const Limits& limits = {});

/// The split recursion over rationals; O(n) big-number operations.
FareySplitValue farey_split_value(unsigned n, const Rational& x0, const Rational& y0,
                                  const Limits& limits = {});

/// T(G_n; x0, y0). Values grow like 2^n bits: n in the 30s already needs
/// gigabytes, so the nominal cap of 64 is never the binding one.
Rational farey_eval(unsigned n, const Rational& x0, const Rational& y0,
                    const Limits& limits = {});

/// Spanning trees: (2^(n+1) - 1) * prod_{i=2..n} (2^i - 1)^(2^(n-i)).
BigInt farey_nst(unsigned n, const Limits& limits = {});

/// Connected spanning subgraphs: 2^(2^n - 1) * (n+1) * prod_{i=2..n} i^(2^(n-i)).
BigInt farey_ncssg(unsigned n, const Limits& limits = {});

/// T(G_n; 1, y) as a polynomial in y, built from the cancelled factors
/// c_i(y) = (2^i - y^i)/(2 - y) = sum_k 2^(i-1-k) y^k:
///   T(G_n; 1, y) = c_{n+1} * prod_{i=2..n} c_i^(2^(n-i)).
UniPoly farey_t1y(unsigned n, const Limits& limits = {});

/// Ratio a_n(1, y0) = T_n(1, y0) / T_{n-1}(1, y0)^2 for n >= 1.
/// Throws DomainError for n = 0, or when 2^n = y0^n with y0 != 2 (y0 = -2,
/// n even), where the ratio is undefined.
Rational farey_ratio(unsigned n, const Rational& y0);

/// Chromatic polynomial of G_n in lambda:
/// lambda*(1-lambda)*(2-lambda)^(2^n - 1) for n >= 1, and lambda*(lambda-1)
/// for the single edge G_0.
UniPoly farey_chromatic(unsigned n, const Limits& limits = {});

/// T(G_n; x, 0) = x*(x+1)^(2^n - 1).
BiPoly farey_t_x0(unsigned n, const Limits& limits = {});

/// All-terminal reliability of G_n in p, computed as
/// p^(2^n) * [q^(2^n-1) T_n(1, 1/q)] at q = 1 - p.
UniPoly farey_reliability(unsigned n, const Limits& limits = {});

/// The reliability product form evaluated directly at p (q = 1 - p):
///   q^(2^n-1) p^(2^n) (2^(n+1) - q^-(n+1)) / (2 - 1/q)^(2^(n-1))
///     * prod_{i=2..n} (2^i - q^-i)^(2^(n-i))
/// Singular at q = 0 and q = 1/2 (DomainError); n >= 1.
Rational farey_reliability_product_form(unsigned n, const Rational& p);

}  // namespace tuttekit
