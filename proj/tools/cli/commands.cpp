#include <sstream>
#include <string>

#include "cli/cli.hpp"
#include "tuttekit/errors.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/farey.hpp"
#include "tuttekit/generators.hpp"
#include "tuttekit/graph_io.hpp"
#include "tuttekit/serialize.hpp"

namespace tuttekit::cli {

namespace {

std::uint64_t bit_size(const Rational& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

// Farey values square once per generation, so their size is roughly
// 2^(n+1) times the size of the evaluation point.
void check_farey_scalar(unsigned n, const Rational& x0, const Rational& y0,
                        const Settings& settings) {
  const std::uint64_t per_step = bit_size(x0) + bit_size(y0) + 2;
  const bool over = n >= 58 || (per_step << (n + 1)) > settings.max_bits;
  if (over) {
    throw BudgetExceeded("value at generation " + std::to_string(n) + " would exceed " +
                         std::to_string(settings.max_bits) + " bits (raise --max-bits)");
  }
}

void check_degree(std::uint64_t degree, const Settings& settings) {
  if (degree > settings.max_degree) {
    throw BudgetExceeded("polynomial of degree " + std::to_string(degree) + " exceeds " +
                         std::to_string(settings.max_degree) + " (raise --max-degree)");
  }
}

std::pair<Rational, Rational> parse_point(const std::optional<std::string>& point) {
  if (!point) throw DomainError("--kind eval needs --point x0,y0");
  const auto comma = point->find(',');
  if (comma == std::string::npos) throw DomainError("--point must look like x0,y0");
  return {parse_rational(point->substr(0, comma)), parse_rational(point->substr(comma + 1))};
}

Output scalar(const BigInt& value) {
  return {value.get_str(), {{"value", value.get_str()}}};
}

Output scalar(const Rational& value) {
  return {to_string(value), {{"value", to_string(value)}}};
}

Output count(const CountForm& cf, const Settings& settings) {
  return {cf.render(settings.max_bits), to_json(cf)};
}

Output poly(const UniPoly& p) { return {to_string(p), to_json(p)}; }

Output power(const UniPowerForm& pf, bool expand, const Settings& settings) {
  if (!expand) return {to_string(pf), to_json(pf)};
  return poly(pf.expand(settings.max_degree));
}

PowerForm family_tutte(const FamilySpec& spec) {
  return spec.family == Family::koch ? koch_tutte(*spec.m, spec.n) : exp_tutte(spec.n);
}

Output farey_invariant(unsigned n, const std::string& kind,
                       const std::optional<std::string>& point, const Settings& settings) {
  const Limits& limits = settings.limits;
  if (kind == "spanning-trees") {
    check_farey_scalar(n, 1, 1, settings);
    return scalar(farey_nst(n, limits));
  }
  if (kind == "cssg") {
    check_farey_scalar(n, 1, 2, settings);
    return scalar(farey_ncssg(n, limits));
  }
  if (kind == "forests") {
    check_farey_scalar(n, 2, 1, settings);
    return scalar(farey_eval(n, 2, 1, limits));
  }
  if (kind == "eval") {
    const auto [x0, y0] = parse_point(point);
    check_farey_scalar(n, x0, y0, settings);
    return scalar(farey_eval(n, x0, y0, limits));
  }
  if (n >= 32) throw BudgetExceeded("generation " + std::to_string(n) + " is too large");
  if (kind == "chromatic") {
    check_degree((std::uint64_t{1} << n) + 1, settings);
    return poly(farey_chromatic(n, limits));
  }
  if (kind == "reliability") {
    check_degree((std::uint64_t{2} << n) - 1, settings);
    return poly(farey_reliability(n, limits));
  }
  throw DomainError("unknown invariant kind '" + kind + "'");
}

Output power_invariant(const FamilySpec& spec, const std::string& kind,
                       const std::optional<std::string>& point, bool expand,
                       const Settings& settings) {
  const PowerForm pf = family_tutte(spec);
  if (kind == "spanning-trees") return count(powerform_eval(pf, 1, 1), settings);
  if (kind == "cssg") return count(powerform_eval(pf, 1, 2), settings);
  if (kind == "forests") return count(powerform_eval(pf, 2, 1), settings);
  if (kind == "eval") {
    const auto [x0, y0] = parse_point(point);
    const Rational base = evaluate(pf.base, x0, y0);
    if (is_integer(base)) return count(CountForm{base.get_num(), pf.exponent}, settings);
    const bool fits = pf.exponent.fits_ulong_p() &&
                      pf.exponent.get_ui() <= settings.max_bits / bit_size(base);
    if (!fits) {
      throw BudgetExceeded("(" + to_string(base) + ")^" + pf.exponent.get_str() +
                           " exceeds " + std::to_string(settings.max_bits) + " bits");
    }
    return scalar(pow(base, static_cast<long>(pf.exponent.get_ui())));
  }
  // Both families are trees of triangles glued at single vertices.
  if (kind == "chromatic") return power(triangle_tree_chromatic(pf.exponent), expand, settings);
  if (kind == "reliability") {
    return power(triangle_tree_reliability(pf.exponent), expand, settings);
  }
  throw DomainError("unknown invariant kind '" + kind + "'");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::farey: return "farey";
    case Family::koch: return "koch";
    case Family::exp: return "exp";
  }
  return "?";
}

void validate(const FamilySpec& spec) {
  if (spec.family == Family::koch) {
    if (!spec.m) throw DomainError("--family koch needs --m");
    if (*spec.m == 0) throw DomainError("--m must be positive");
  } else if (spec.m) {
    throw DomainError("--m applies only to --family koch");
  }
}

Output cmd_tutte(const FamilySpec& spec, bool expand, const Settings& settings) {
  validate(spec);
  if (spec.family == Family::farey) {
    const BiPoly t = farey_tutte(spec.n, settings.limits);
    return {to_string(t), to_json(t)};
  }
  const PowerForm pf = family_tutte(spec);
  if (!expand) return {to_string(pf), to_json(pf)};
  const BiPoly t = powerform_expand(pf, settings.limits);
  return {to_string(t), to_json(t)};
}

Output cmd_invariant(const FamilySpec& spec, const std::string& kind,
                     const std::optional<std::string>& point, bool expand,
                     const Settings& settings) {
  validate(spec);
  if (spec.family == Family::farey) return farey_invariant(spec.n, kind, point, settings);
  return power_invariant(spec, kind, point, expand, settings);
}

Output cmd_graph(const FamilySpec& spec, const Settings& settings) {
  validate(spec);
  std::ostringstream text;
  if (spec.family == Family::exp) {
    const MultiGraph g = exp_graph(spec.n, settings.limits);
    write_edge_list(text, g);
    return {text.str(), to_json(g)};
  }
  const MarkedGraph g = spec.family == Family::farey ? farey_graph(spec.n, settings.limits)
                                                     : koch_graph(*spec.m, spec.n, settings.limits);
  write_edge_list(text, g);
  return {text.str(), to_json(g)};
}

}  // namespace tuttekit::cli
