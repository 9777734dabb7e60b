#include "tuttekit/bipoly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "saturating.hpp"
#include "tuttekit/errors.hpp"

namespace tuttekit {

namespace {

bool key_less(const BiPoly::Term& a, const BiPoly::Term& b) {
  return a.deg_x != b.deg_x ? a.deg_x < b.deg_x : a.deg_y < b.deg_y;
}

bool same_key(const BiPoly::Term& a, const BiPoly::Term& b) {
  return a.deg_x == b.deg_x && a.deg_y == b.deg_y;
}

// Merges two canonical term lists; `sign` is +1 or -1 for the second one.
std::vector<BiPoly::Term> merge(const std::vector<BiPoly::Term>& a,
                                const std::vector<BiPoly::Term>& b, int sign) {
  std::vector<BiPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && key_less(*ia, *ib))) {
      out.push_back(*ia++);
    } else if (ia == a.end() || key_less(*ib, *ia)) {
      out.push_back(*ib++);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      BigInt c = sign < 0 ? BigInt(ia->coeff - ib->coeff) : BigInt(ia->coeff + ib->coeff);
      if (c != 0) out.push_back({ia->deg_x, ia->deg_y, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

// Bounding box of a product, in cells; saturates instead of overflowing.
std::uint64_t box_cells(std::uint64_t nx, std::uint64_t ny) {
  return detail::saturating_mul(nx, ny);
}

// A dense product is worth it when the bounding box is not much larger than
// the number of term pairs it absorbs.
bool prefer_dense(std::uint64_t cells, std::size_t pairs) {
  return cells <= 4 * static_cast<std::uint64_t>(pairs) + 4096 && cells <= 50'000'000;
}

std::vector<BiPoly::Term> collect(std::vector<BigInt>& acc, std::uint32_t ny) {
  std::vector<BiPoly::Term> out;
  for (std::size_t idx = 0; idx < acc.size(); ++idx) {
    if (acc[idx] == 0) continue;
    out.push_back({static_cast<std::uint32_t>(idx / ny), static_cast<std::uint32_t>(idx % ny),
                   std::move(acc[idx])});
  }
  return out;
}

std::size_t max_coeff_bits(const std::vector<BiPoly::Term>& terms) {
  std::size_t bits = 0;
  for (const auto& t : terms) bits = std::max(bits, mpz_sizeinbase(t.coeff.get_mpz_t(), 2));
  return bits;
}

// True when every cell of a product stays inside a signed 64-bit word.
bool fits_word(std::size_t bits_a, std::size_t bits_b, std::size_t terms_per_cell) {
  return bits_a + bits_b + std::bit_width(terms_per_cell) < 63;
}

std::vector<BiPoly::Term> collect_words(const std::vector<std::int64_t>& acc, std::uint32_t ny) {
  std::vector<BiPoly::Term> out;
  for (std::size_t idx = 0; idx < acc.size(); ++idx) {
    if (acc[idx] == 0) continue;
    out.push_back({static_cast<std::uint32_t>(idx / ny), static_cast<std::uint32_t>(idx % ny),
                   BigInt(static_cast<long>(acc[idx]))});
  }
  return out;
}

}  // namespace

BiPoly::BiPoly(BigInt constant) {
  if (constant != 0) terms_.push_back({0, 0, std::move(constant)});
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), key_less);
  BiPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && same_key(out.terms_.back(), t)) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coeff == 0) out.terms_.pop_back();
  return out;
}

BiPoly BiPoly::x() { return monomial(1, 0); }
BiPoly BiPoly::y() { return monomial(0, 1); }

BiPoly BiPoly::monomial(std::uint32_t deg_x, std::uint32_t deg_y, BigInt coeff) {
  BiPoly out;
  if (coeff != 0) out.terms_.push_back({deg_x, deg_y, std::move(coeff)});
  return out;
}

std::uint32_t BiPoly::deg_x() const noexcept {
  return terms_.empty() ? 0 : terms_.back().deg_x;
}

std::uint32_t BiPoly::deg_y() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.deg_y);
  return d;
}

BigInt BiPoly::coeff(std::uint32_t deg_x, std::uint32_t deg_y) const {
  Term key{deg_x, deg_y, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
  if (it != terms_.end() && same_key(*it, key)) return it->coeff;
  return 0;
}

BiPoly BiPoly::shifted(std::uint32_t dx, std::uint32_t dy) const {
  BiPoly out = *this;
  for (auto& t : out.terms_) {
    t.deg_x += dx;
    t.deg_y += dy;
  }
  return out;
}

BiPoly BiPoly::scaled(const BigInt& factor) const {
  if (factor == 0) return {};
  BiPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= factor;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly operator-(BiPoly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (&a == &b) return square(a);

  const std::uint32_t nx = a.deg_x() + b.deg_x() + 1;
  const std::uint32_t ny = a.deg_y() + b.deg_y() + 1;
  const std::uint64_t cells = box_cells(nx, ny);

  BiPoly out;
  if (prefer_dense(cells, a.size() * b.size()) &&
      fits_word(max_coeff_bits(a.terms_), max_coeff_bits(b.terms_),
                std::min(a.size(), b.size()))) {
    std::vector<std::int64_t> acc(cells, 0);
    for (const auto& ta : a.terms_) {
      const std::int64_t ca = ta.coeff.get_si();
      const std::size_t base = static_cast<std::size_t>(ta.deg_x) * ny + ta.deg_y;
      for (const auto& tb : b.terms_) {
        acc[base + static_cast<std::size_t>(tb.deg_x) * ny + tb.deg_y] += ca * tb.coeff.get_si();
      }
    }
    out.terms_ = collect_words(acc, ny);
    return out;
  }
  if (prefer_dense(cells, a.size() * b.size())) {
    std::vector<BigInt> acc(cells);
    for (const auto& ta : a.terms_) {
      mpz_srcptr ca = ta.coeff.get_mpz_t();
      const std::size_t base = static_cast<std::size_t>(ta.deg_x) * ny + ta.deg_y;
      for (const auto& tb : b.terms_) {
        const std::size_t idx = base + static_cast<std::size_t>(tb.deg_x) * ny + tb.deg_y;
        mpz_addmul(acc[idx].get_mpz_t(), ca, tb.coeff.get_mpz_t());
      }
    }
    out.terms_ = collect(acc, ny);
    return out;
  }

  std::vector<BiPoly::Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      products.push_back({ta.deg_x + tb.deg_x, ta.deg_y + tb.deg_y, ta.coeff * tb.coeff});
    }
  }
  return BiPoly::from_terms(std::move(products));
}

BiPoly square(const BiPoly& a) {
  if (a.is_zero()) return {};
  const auto& terms = a.terms();
  const std::uint32_t nx = 2 * a.deg_x() + 1;
  const std::uint32_t ny = 2 * a.deg_y() + 1;
  const std::uint64_t cells = box_cells(nx, ny);
  if (!prefer_dense(cells, terms.size() * (terms.size() + 1) / 2)) {
    BiPoly copy = a;
    return a * copy;
  }

  const std::size_t bits = max_coeff_bits(terms);
  if (fits_word(bits, bits, terms.size())) {
    std::vector<std::int64_t> acc(cells, 0);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& ti = terms[i];
      const std::int64_t ci = ti.coeff.get_si();
      const std::size_t base = static_cast<std::size_t>(ti.deg_x) * ny + ti.deg_y;
      acc[base + base] += ci * ci;
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        const auto& tj = terms[j];
        const std::size_t idx = base + static_cast<std::size_t>(tj.deg_x) * ny + tj.deg_y;
        acc[idx] += 2 * ci * tj.coeff.get_si();
      }
    }
    return BiPoly::from_terms(collect_words(acc, ny));
  }

  // Cross terms once, doubled, then the diagonal.
  std::vector<BigInt> acc(cells);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& ti = terms[i];
    mpz_srcptr ci = ti.coeff.get_mpz_t();
    const std::size_t base = static_cast<std::size_t>(ti.deg_x) * ny + ti.deg_y;
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const auto& tj = terms[j];
      const std::size_t idx = base + static_cast<std::size_t>(tj.deg_x) * ny + tj.deg_y;
      mpz_addmul(acc[idx].get_mpz_t(), ci, tj.coeff.get_mpz_t());
    }
  }
  for (auto& cell : acc) {
    if (cell != 0) mpz_mul_2exp(cell.get_mpz_t(), cell.get_mpz_t(), 1);
  }
  for (const auto& t : terms) {
    const std::size_t idx = static_cast<std::size_t>(2 * t.deg_x) * ny + 2 * t.deg_y;
    mpz_addmul(acc[idx].get_mpz_t(), t.coeff.get_mpz_t(), t.coeff.get_mpz_t());
  }
  return BiPoly::from_terms(collect(acc, ny));
}

BiPoly pow(const BiPoly& a, std::uint64_t k, const Limits& limits) {
  if (k == 0) return BiPoly(1);
  if (a.is_zero()) return {};
  const auto grow = [k](std::uint32_t deg) {
    return detail::saturating_add(detail::saturating_mul(deg, k), 1);
  };
  const std::uint64_t cells = box_cells(grow(a.deg_x()), grow(a.deg_y()));
  if (cells > limits.pow_cells) {
    throw BudgetExceeded("power expansion needs " + std::to_string(cells) +
                         " cells, cap is " + std::to_string(limits.pow_cells));
  }
  BiPoly result(1);
  BiPoly base = a;
  for (;;) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k == 0) break;
    base = square(base);
  }
  return result;
}

Rational evaluate(const BiPoly& a, const Rational& x0, const Rational& y0) {
  const auto& terms = a.terms();
  if (terms.empty()) return 0;

  // Sparse Horner over the rows of equal deg_x, highest row first; each row
  // is itself a sparse Horner in y.
  auto row_value = [&](std::size_t first, std::size_t last) -> Rational {
    Rational acc = 0;
    long prev = -1;
    for (std::size_t i = last; i-- > first;) {
      const long d = terms[i].deg_y;
      if (prev >= 0) acc *= pow(y0, prev - d);
      acc += Rational(terms[i].coeff);
      prev = d;
    }
    return acc * pow(y0, prev);
  };

  Rational total = 0;
  long prev_dx = -1;
  std::size_t end = terms.size();
  while (end > 0) {
    std::size_t begin = end - 1;
    while (begin > 0 && terms[begin - 1].deg_x == terms[end - 1].deg_x) --begin;
    const long dx = terms[begin].deg_x;
    if (prev_dx >= 0) total *= pow(x0, prev_dx - dx);
    total += row_value(begin, end);
    prev_dx = dx;
    end = begin;
  }
  return total * pow(x0, prev_dx);
}

UniPoly partial_eval_x(const BiPoly& a, const Rational& x0) {
  std::vector<Rational> x_powers(a.deg_x() + 1);
  x_powers[0] = 1;
  for (std::size_t i = 1; i < x_powers.size(); ++i) x_powers[i] = x_powers[i - 1] * x0;

  std::vector<Rational> dense(a.deg_y() + 1);
  for (const auto& t : a.terms()) dense[t.deg_y] += t.coeff * x_powers[t.deg_x];

  std::vector<UniPoly::Coeff> coeffs;
  for (std::uint32_t d = 0; d < dense.size(); ++d) {
    if (dense[d] != 0) coeffs.emplace_back(d, std::move(dense[d]));
  }
  return UniPoly::from_coeffs(Variable::y, std::move(coeffs));
}

UniPoly substitute_x_affine(const BiPoly& a, const Rational& c0, const Rational& c1) {
  // Horner in x over the y-free terms: p <- p*(c0 + c1*lambda) + a_k.
  const BiPoly ax = restrict_y_zero(a);
  if (ax.is_zero()) return UniPoly(Variable::lambda);
  const std::uint32_t d = ax.deg_x();
  std::vector<Rational> by_degree(d + 1);
  for (const auto& t : ax.terms()) by_degree[t.deg_x] = t.coeff;

  std::vector<Rational> p{by_degree[d]};
  for (std::uint32_t k = d; k-- > 0;) {
    std::vector<Rational> next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i] * c0;
      next[i + 1] += p[i] * c1;
    }
    next[0] += by_degree[k];
    p = std::move(next);
  }
  std::vector<UniPoly::Coeff> coeffs;
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) coeffs.emplace_back(i, std::move(p[i]));
  }
  return UniPoly::from_coeffs(Variable::lambda, std::move(coeffs));
}

BiPoly restrict_y_zero(const BiPoly& a) {
  std::vector<BiPoly::Term> kept;
  for (const auto& t : a.terms()) {
    if (t.deg_y == 0) kept.push_back(t);
  }
  return BiPoly::from_terms(std::move(kept));
}

BiPoly times_x_minus_one(const BiPoly& a) { return a.shifted(1, 0) - a; }

std::string to_string(const BiPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const bool negative = it->coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    const BigInt magnitude = abs(it->coeff);
    bool wrote = false;
    const bool constant = it->deg_x == 0 && it->deg_y == 0;
    if (magnitude != 1 || constant) {
      out << magnitude.get_str();
      wrote = true;
    }
    auto factor = [&](char name, std::uint32_t deg) {
      if (deg == 0) return;
      if (wrote) out << '*';
      out << name;
      if (deg > 1) out << '^' << deg;
      wrote = true;
    };
    factor('x', it->deg_x);
    factor('y', it->deg_y);
  }
  return out.str();
}

}  // namespace tuttekit
