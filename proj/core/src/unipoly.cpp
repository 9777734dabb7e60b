#include "tuttekit/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "tuttekit/errors.hpp"

namespace tuttekit {

std::string_view display_name(Variable v) {
  switch (v) {
    case Variable::y: return "y";
    case Variable::lambda: return "λ";
    case Variable::p: return "p";
    case Variable::q: return "q";
  }
  return "?";
}

std::string_view tag_name(Variable v) {
  switch (v) {
    case Variable::y: return "y";
    case Variable::lambda: return "lambda";
    case Variable::p: return "p";
    case Variable::q: return "q";
  }
  return "?";
}

Variable variable_from_tag(std::string_view tag) {
  for (Variable v : {Variable::y, Variable::lambda, Variable::p, Variable::q}) {
    if (tag == tag_name(v)) return v;
  }
  throw DomainError("unknown polynomial variable '" + std::string(tag) + "'");
}

namespace {

// Integer image of a polynomial: a(t) = t^low * sum(dense[i] t^i) / den.
struct Cleared {
  std::uint32_t low = 0;
  std::vector<BigInt> dense;
  BigInt den = 1;
};

Cleared clear_denominators(const UniPoly& a, bool from_zero = false) {
  Cleared out;
  for (const auto& [deg, c] : a.coeffs()) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c.get_den_mpz_t());
  }
  out.low = from_zero ? 0 : a.min_degree();
  out.dense.resize(a.is_zero() ? 0 : a.degree() - out.low + 1);
  for (const auto& [deg, c] : a.coeffs()) {
    BigInt& slot = out.dense[deg - out.low];
    mpz_divexact(slot.get_mpz_t(), out.den.get_mpz_t(), c.get_den_mpz_t());
    slot *= c.get_num();
  }
  return out;
}

UniPoly from_cleared(Variable var, std::uint32_t low, std::vector<BigInt>& dense,
                     const BigInt& den) {
  std::vector<UniPoly::Coeff> coeffs;
  for (std::uint32_t i = 0; i < dense.size(); ++i) {
    if (dense[i] == 0) continue;
    coeffs.emplace_back(low + i, make_rational(dense[i], den));
  }
  return UniPoly::from_coeffs(var, std::move(coeffs));
}

void require_same_var(const UniPoly& a, const UniPoly& b) {
  if (a.var() != b.var()) {
    throw DomainError("polynomials in different variables: " + std::string(tag_name(a.var())) +
                      " vs " + std::string(tag_name(b.var())));
  }
}

std::vector<UniPoly::Coeff> merge(const std::vector<UniPoly::Coeff>& a,
                                  const std::vector<UniPoly::Coeff>& b, int sign) {
  std::vector<UniPoly::Coeff> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
      if (sign < 0) out.back().second = -out.back().second;
    } else {
      Rational c = sign < 0 ? Rational(ia->second - ib->second)
                            : Rational(ia->second + ib->second);
      if (c != 0) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

UniPoly::UniPoly(Variable var, Rational constant) : var_(var) {
  if (constant != 0) coeffs_.emplace_back(0, std::move(constant));
}

UniPoly UniPoly::from_coeffs(Variable var, std::vector<Coeff> coeffs) {
  std::sort(coeffs.begin(), coeffs.end(),
            [](const Coeff& a, const Coeff& b) { return a.first < b.first; });
  UniPoly out(var);
  for (auto& c : coeffs) {
    if (!out.coeffs_.empty() && out.coeffs_.back().first == c.first) {
      out.coeffs_.back().second += c.second;
    } else {
      if (!out.coeffs_.empty() && out.coeffs_.back().second == 0) out.coeffs_.pop_back();
      out.coeffs_.push_back(std::move(c));
    }
  }
  if (!out.coeffs_.empty() && out.coeffs_.back().second == 0) out.coeffs_.pop_back();
  return out;
}

UniPoly UniPoly::from_dense(Variable var, const std::vector<BigInt>& dense) {
  UniPoly out(var);
  for (std::uint32_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) out.coeffs_.emplace_back(i, Rational(dense[i]));
  }
  return out;
}

UniPoly UniPoly::monomial(Variable var, std::uint32_t degree, Rational coeff) {
  UniPoly out(var);
  if (coeff != 0) out.coeffs_.emplace_back(degree, std::move(coeff));
  return out;
}

Rational UniPoly::coeff(std::uint32_t degree) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), degree,
                             [](const Coeff& c, std::uint32_t d) { return c.first < d; });
  if (it != coeffs_.end() && it->first == degree) return it->second;
  return 0;
}

Rational UniPoly::operator()(const Rational& at) const {
  if (coeffs_.empty()) return 0;
  Rational acc = 0;
  long prev = -1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const long d = it->first;
    if (prev >= 0) acc *= pow(at, prev - d);
    acc += it->second;
    prev = d;
  }
  return acc * pow(at, prev);
}

UniPoly UniPoly::with_var(Variable var) const {
  UniPoly out = *this;
  out.var_ = var;
  return out;
}

UniPoly UniPoly::shifted(std::uint32_t k) const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c.first += k;
  return out;
}

UniPoly UniPoly::scaled(const Rational& factor) const {
  if (factor == 0) return UniPoly(var_);
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c.second *= factor;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  require_same_var(*this, other);
  coeffs_ = merge(coeffs_, other.coeffs_, +1);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  require_same_var(*this, other);
  coeffs_ = merge(coeffs_, other.coeffs_, -1);
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.coeffs_) c.second = -c.second;
  return a;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_var(a, b);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.var());

  const Cleared ca = clear_denominators(a);
  std::vector<BigInt> acc;
  BigInt den;
  if (&a == &b) {
    // Symmetric: cross terms once, doubled, plus the diagonal.
    const auto& d = ca.dense;
    acc.resize(2 * d.size() - 1);
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        mpz_addmul(acc[i + j].get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      }
    }
    for (auto& cell : acc) mpz_mul_2exp(cell.get_mpz_t(), cell.get_mpz_t(), 1);
    for (std::size_t i = 0; i < d.size(); ++i) {
      mpz_addmul(acc[2 * i].get_mpz_t(), d[i].get_mpz_t(), d[i].get_mpz_t());
    }
    den = ca.den * ca.den;
    return from_cleared(a.var(), 2 * ca.low, acc, den);
  }

  const Cleared cb = clear_denominators(b);
  acc.resize(ca.dense.size() + cb.dense.size() - 1);
  for (std::size_t i = 0; i < ca.dense.size(); ++i) {
    if (ca.dense[i] == 0) continue;
    mpz_srcptr ci = ca.dense[i].get_mpz_t();
    for (std::size_t j = 0; j < cb.dense.size(); ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), ci, cb.dense[j].get_mpz_t());
    }
  }
  den = ca.den * cb.den;
  return from_cleared(a.var(), ca.low + cb.low, acc, den);
}

UniPoly pow(const UniPoly& a, std::uint64_t k) {
  UniPoly result(a.var(), 1);
  if (k == 0) return result;
  UniPoly base = a;
  for (;;) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k == 0) break;
    base = base * base;
  }
  return result;
}

UniPoly reciprocal_transform(const UniPoly& a, std::uint32_t nullity) {
  if (a.degree() > nullity) {
    throw DomainError("degree " + std::to_string(a.degree()) + " exceeds nullity " +
                      std::to_string(nullity));
  }
  std::vector<UniPoly::Coeff> out;
  out.reserve(a.coeffs().size());
  for (const auto& [deg, c] : a.coeffs()) out.emplace_back(nullity - deg, c);
  return UniPoly::from_coeffs(Variable::q, std::move(out));
}

UniPoly substitute_one_minus(const UniPoly& a, Variable result_var) {
  if (a.is_zero()) return UniPoly(result_var);
  Cleared c = clear_denominators(a, /*from_zero=*/true);
  auto& d = c.dense;
  const std::size_t n = d.size() - 1;
  // a(1 + z): Taylor shift by one, additions only.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > i;) d[j] += d[j + 1];
  }
  // a(1 - t) = shifted(-t).
  for (std::size_t j = 1; j <= n; j += 2) d[j] = -d[j];
  return from_cleared(result_var, 0, d, c.den);
}

std::string to_string(const UniPoly& a) {
  if (a.is_zero()) return "0";
  const std::string_view name = display_name(a.var());
  std::ostringstream out;
  bool first = true;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    const auto& [deg, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = abs(c);
    if (deg == 0) {
      out << to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out << to_string(magnitude) << '*';
    out << name;
    if (deg > 1) out << '^' << deg;
  }
  return out.str();
}

}  // namespace tuttekit
