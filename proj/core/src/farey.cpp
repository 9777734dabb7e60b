#include "tuttekit/farey.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tuttekit/errors.hpp"

namespace tuttekit {

namespace {

void check_cap(unsigned n, unsigned cap, const char* what) {
  if (n > cap) {
    throw BudgetExceeded(std::string(what) + ": generation " + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap));
  }
}

BigInt two_pow(unsigned long k) {
  BigInt out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), k);
  return out;
}

// (2^i - y^i) / (2 - y) = sum_{k<i} 2^(i-1-k) y^k
UniPoly cancelled_factor(unsigned i) {
  std::vector<BigInt> dense(i);
  for (unsigned k = 0; k < i; ++k) dense[k] = two_pow(i - 1 - k);
  return UniPoly::from_dense(Variable::y, dense);
}

// Coefficients of (a + b*t)^e for small integers a, b; dense in t.
std::vector<BigInt> binomial_power(long a, long b, unsigned long e) {
  std::vector<BigInt> out(e + 1);
  BigInt binom = 1;
  const BigInt big_a = a;
  const BigInt big_b = b;
  for (unsigned long k = 0; k <= e; ++k) {
    out[k] = binom * pow(big_a, e - k) * pow(big_b, k);
    binom *= static_cast<unsigned long>(e - k);
    mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), k + 1);
  }
  return out;
}

// Dense coefficient box for the split recursion, row-major in (deg_x, deg_y).
// Every state at generation g fits in a 2^g by 2^g box.
template <typename C>
struct DenseState {
  std::size_t side = 1;
  std::vector<C> t1{C(1)};
  std::vector<C> n_part{C(1)};
};

inline void addmul(std::int64_t& acc, std::int64_t a, std::int64_t b) { acc += a * b; }
inline void addmul(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline bool is_zero(std::int64_t c) { return c == 0; }
inline bool is_zero(const BigInt& c) { return c == 0; }

template <typename C>
struct Nonzero {
  std::size_t i;
  std::size_t j;
  const C* value;
};

template <typename C>
std::vector<Nonzero<C>> nonzeros(const std::vector<C>& box, std::size_t side) {
  std::vector<Nonzero<C>> out;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (!is_zero(box[idx])) out.push_back({idx / side, idx % side, &box[idx]});
  }
  return out;
}

// acc += a*b, with a and b in a box of half the side of acc.
template <typename C>
void convolve(std::vector<C>& acc, std::size_t side, const std::vector<Nonzero<C>>& a,
              const std::vector<Nonzero<C>>& b) {
  for (const auto& ta : a) {
    for (const auto& tb : b) addmul(acc[(ta.i + tb.i) * side + ta.j + tb.j], *ta.value, *tb.value);
  }
}

// acc = a^2, cross terms once and doubled.
template <typename C>
void square_into(std::vector<C>& acc, std::size_t side, const std::vector<Nonzero<C>>& a) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t l = k + 1; l < a.size(); ++l) {
      addmul(acc[(a[k].i + a[l].i) * side + a[k].j + a[l].j], *a[k].value, *a[l].value);
    }
  }
  for (auto& c : acc) c += c;
  for (const auto& t : a) addmul(acc[2 * (t.i * side + t.j)], *t.value, *t.value);
}

template <typename C>
void dense_step(DenseState<C>& s) {
  const std::size_t side = 2 * s.side;
  const auto t1 = nonzeros(s.t1, s.side);
  const auto np = nonzeros(s.n_part, s.side);
  std::vector<C> t1_sq(side * side), cross(side * side), n_sq(side * side);
  square_into(t1_sq, side, t1);
  convolve(cross, side, t1, np);
  square_into(n_sq, side, np);

  // shared = 2*cross + (x-1)*n_sq; t1' = y*t1_sq + shared
  std::vector<C> shared(side * side);
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      const std::size_t idx = i * side + j;
      C value = 2 * cross[idx] - n_sq[idx];
      if (i > 0) value += n_sq[idx - side];
      shared[idx] = std::move(value);
    }
  }
  for (std::size_t idx = side * side; idx-- > 0;) {
    t1_sq[idx] = idx % side > 0 ? C(t1_sq[idx - 1] + shared[idx]) : shared[idx];
  }
  s.side = side;
  s.t1 = std::move(t1_sq);
  s.n_part = std::move(shared);
}

template <typename C>
BiPoly to_bipoly(const std::vector<C>& box, std::size_t side) {
  std::vector<BiPoly::Term> terms;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (is_zero(box[idx])) continue;
    terms.push_back({static_cast<std::uint32_t>(idx / side),
                     static_cast<std::uint32_t>(idx % side), BigInt(box[idx])});
  }
  return BiPoly::from_terms(std::move(terms));
}

std::size_t max_bits(const std::vector<std::int64_t>& box) {
  std::int64_t largest = 0;
  for (std::int64_t c : box) largest = std::max(largest, c < 0 ? -c : c);
  return std::bit_width(static_cast<std::uint64_t>(largest));
}

// One step keeps every coefficient within 64 bits when the inputs satisfy
// 2*bits + log2(terms) + 3 < 63.
bool step_fits_word(const DenseState<std::int64_t>& s) {
  const std::size_t bits = std::max(max_bits(s.t1), max_bits(s.n_part));
  return 2 * bits + std::bit_width(s.side * s.side) + 3 < 63;
}

DenseState<BigInt> widen(const DenseState<std::int64_t>& s) {
  DenseState<BigInt> out;
  out.side = s.side;
  out.t1.assign(s.t1.begin(), s.t1.end());
  out.n_part.assign(s.n_part.begin(), s.n_part.end());
  return out;
}

// t1 + (x-1)*n_part, in a box one row taller than the state.
template <typename C>
std::vector<C> dense_tutte(const DenseState<C>& s) {
  const std::size_t cells = s.t1.size();
  std::vector<C> out(cells + s.side);
  for (std::size_t idx = 0; idx < cells; ++idx) out[idx] = s.t1[idx] - s.n_part[idx];
  for (std::size_t idx = 0; idx < cells; ++idx) out[idx + s.side] += s.n_part[idx];
  return out;
}

// Runs n steps in machine words while they provably fit, then in BigInt, and
// hands the final state to `finish`.
template <typename Finish>
auto run_split(unsigned n, const Limits& limits, Finish&& finish) {
  check_cap(n, limits.farey_poly_max_n, "Farey polynomial recursion");
  DenseState<std::int64_t> small;
  unsigned step = 1;
  for (; step <= n && step_fits_word(small); ++step) dense_step(small);
  if (step > n) return finish(small);
  DenseState<BigInt> big = widen(small);
  for (; step <= n; ++step) dense_step(big);
  return finish(big);
}

}  // namespace

FareySplit farey_split(unsigned n, const Limits& limits) {
  return run_split(n, limits, [n](const auto& s) {
    return FareySplit{to_bipoly(s.t1, s.side), to_bipoly(s.n_part, s.side), n};
  });
}

BiPoly farey_tutte(unsigned n, const Limits& limits) {
  return run_split(n, limits, [](const auto& s) { return to_bipoly(dense_tutte(s), s.side); });
}

FareySplitValue farey_split_value(unsigned n, const Rational& x0, const Rational& y0,
                                  const Limits& limits) {
  check_cap(n, limits.farey_eval_max_n, "Farey point recursion");
  const Rational x_minus_1 = x0 - 1;
  FareySplitValue s{1, 1, 0};
  for (unsigned step = 1; step <= n; ++step) {
    Rational shared = 2 * s.t1 * s.n_part + x_minus_1 * s.n_part * s.n_part;
    s.t1 = y0 * s.t1 * s.t1 + shared;
    s.n_part = std::move(shared);
    s.generation = step;
  }
  return s;
}

Rational farey_eval(unsigned n, const Rational& x0, const Rational& y0, const Limits& limits) {
  const FareySplitValue s = farey_split_value(n, x0, y0, limits);
  return s.t1 + (x0 - 1) * s.n_part;
}

BigInt farey_nst(unsigned n, const Limits& limits) {
  check_cap(n, limits.farey_eval_max_n, "spanning-tree closed form");
  BigInt total = two_pow(n + 1) - 1;
  for (unsigned i = 2; i <= n; ++i) {
    total *= pow(BigInt(two_pow(i) - 1), 1ul << (n - i));
  }
  return total;
}

BigInt farey_ncssg(unsigned n, const Limits& limits) {
  check_cap(n, limits.farey_eval_max_n, "connected-spanning-subgraph closed form");
  BigInt total = two_pow((1ul << n) - 1) * (n + 1);
  for (unsigned i = 2; i <= n; ++i) total *= pow(BigInt(i), 1ul << (n - i));
  return total;
}

UniPoly farey_t1y(unsigned n, const Limits& limits) {
  check_cap(n, limits.farey_closed_form_max_n, "T(1,y) closed form");
  // prod_{i=2..n} c_i^(2^(n-i)) = (prod_{i=2..n-1} c_i^(2^(n-1-i)))^2 * c_n
  UniPoly product(Variable::y, 1);
  for (unsigned i = 2; i <= n; ++i) product = (product * product) * cancelled_factor(i);
  return cancelled_factor(n + 1) * product;
}

Rational farey_ratio(unsigned n, const Rational& y0) {
  if (n == 0) throw DomainError("ratio sequence starts at n = 1");
  if (y0 == 2) return make_rational(2 * (n + 1), n);
  const Rational den = Rational(two_pow(n)) - pow(y0, static_cast<long>(n));
  if (den == 0) {
    throw DomainError("ratio a_" + std::to_string(n) + "(1, " + to_string(y0) +
                      ") is undefined");
  }
  return (Rational(two_pow(n + 1)) - pow(y0, static_cast<long>(n + 1))) / den;
}

UniPoly farey_chromatic(unsigned n, const Limits& limits) {
  check_cap(n, limits.farey_closed_form_max_n, "chromatic closed form");
  // (2 - lambda)^(2^n - 1), then times lambda - lambda^2, signed by (-1)^rank.
  const std::vector<BigInt> power = binomial_power(2, -1, (1ul << n) - 1);
  std::vector<BigInt> dense(power.size() + 2);
  for (std::size_t k = 0; k < power.size(); ++k) {
    dense[k + 1] += power[k];
    dense[k + 2] -= power[k];
  }
  // rank(G_n) = 2^n is odd only for n = 0.
  if (n == 0) {
    for (auto& c : dense) c = -c;
  }
  return UniPoly::from_dense(Variable::lambda, dense);
}

BiPoly farey_t_x0(unsigned n, const Limits& limits) {
  check_cap(n, limits.farey_closed_form_max_n, "T(x,0) closed form");
  const std::vector<BigInt> power = binomial_power(1, 1, (1ul << n) - 1);
  std::vector<BiPoly::Term> terms;
  terms.reserve(power.size());
  for (std::uint32_t k = 0; k < power.size(); ++k) terms.push_back({k + 1, 0, power[k]});
  return BiPoly::from_terms(std::move(terms));
}

UniPoly farey_reliability(unsigned n, const Limits& limits) {
  check_cap(n, limits.farey_closed_form_max_n, "reliability closed form");
  const std::uint32_t rank = 1u << n;
  const std::uint32_t nullity = rank - 1;
  const UniPoly in_q = reciprocal_transform(farey_t1y(n, limits), nullity);
  return substitute_one_minus(in_q, Variable::p).shifted(rank);
}

Rational farey_reliability_product_form(unsigned n, const Rational& p) {
  if (n == 0) throw DomainError("product form needs n >= 1");
  const Rational q = 1 - p;
  if (q == 0 || 2 * q == 1) {
    throw DomainError("product form is singular at p = " + to_string(p));
  }
  const Rational q_inv = 1 / q;
  Rational value = pow(q, static_cast<long>((1ul << n) - 1)) * pow(p, static_cast<long>(1ul << n));
  value *= Rational(two_pow(n + 1)) - pow(q_inv, static_cast<long>(n + 1));
  value /= pow(Rational(2 - q_inv), static_cast<long>(1ul << (n - 1)));
  for (unsigned i = 2; i <= n; ++i) {
    value *= pow(Rational(Rational(two_pow(i)) - pow(q_inv, static_cast<long>(i))),
                 static_cast<long>(1ul << (n - i)));
  }
  return value;
}

}  // namespace tuttekit
