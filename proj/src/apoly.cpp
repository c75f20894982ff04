#include "ajcable/apoly.hpp"

#include <algorithm>

#include "ajcable/linalg.hpp"

namespace ajcable {

namespace {

LaurentQ m_mono(long c, long e) { return LaurentQ::monomial(mpq_class(c), e); }

// Bracket (M^8 + M^-8 - M^4 - M^-4 - 2)^2 - 2.
LaurentQ quadratic_middle() {
  const LaurentQ inner = m_mono(1, 8) + m_mono(1, -8) - m_mono(1, 4) - m_mono(1, -4) - m_mono(2, 0);
  return inner * inner - LaurentQ(mpq_class(2));
}

// p = integer_part / scale with integer_part in Z[M^{+-1}].
std::pair<LaurentPoly1, mpz_class> clear_denominators(const LaurentQ& p) {
  mpz_class scale = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  std::vector<LaurentPoly1::Term> terms;
  for (const auto& [e, c] : p.terms()) {
    mpq_class v = c * scale;
    terms.emplace_back(e, v.get_num());
  }
  return {LaurentPoly1::from_terms(std::move(terms)), scale};
}

MRatio reduce_ratio(const LaurentQ& num, const LaurentQ& den) {
  auto [n_int, n_scale] = clear_denominators(num);
  auto [d_int, d_scale] = clear_denominators(den);
  const LaurentPoly1 g = poly_gcd(n_int, d_int);
  LaurentPoly1 n_red = div_exact(n_int, g);
  LaurentPoly1 d_red = div_exact(d_int, g);
  // d_red = unit * primitive(d_red), unit = c t^k
  const LaurentPoly1 d_prim = primitive_part(d_red);
  const LaurentPoly1 unit = div_exact(d_red, d_prim);
  if (unit.size() != 1) throw Error("primitive part left a non-monomial cofactor");
  const auto [k, c] = unit.terms().front();
  const mpq_class factor = mpq_class(d_scale) / (mpq_class(n_scale) * mpq_class(c));
  MRatio out{to_rational(n_red.shifted(-k)).scaled(factor), to_rational(d_prim)};
  return out;
}

}  // namespace

CommutativeMLPoly cable_quadratic_factor() {
  return CommutativeMLPoly::from_coeffs({{2, LaurentQ(mpq_class(1))}, {1, -quadratic_middle()}, {0, LaurentQ(mpq_class(1))}});
}

CommutativeMLPoly a_polynomial_cable(long r) {
  require_odd(r);
  const CommutativeMLPoly l_minus_one =
      CommutativeMLPoly::from_coeffs({{1, LaurentQ(mpq_class(1))}, {0, LaurentQ(mpq_class(-1))}});
  const CommutativeMLPoly cable_factor =
      CommutativeMLPoly::from_coeffs({{1, LaurentQ(mpq_class(1))}, {0, m_mono(1, -2 * r)}});
  return l_minus_one * cable_quadratic_factor() * cable_factor;
}

Proportionality eq_up_to_M(const CommutativeMLPoly& f, const CommutativeMLPoly& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroInput("proportionality test needs nonzero inputs");
  Proportionality out;
  // Reference pair: the top L-coefficient of g.
  const long ref = g.max_l();
  const LaurentQ f_ref = f.coefficient(ref);
  const LaurentQ g_ref = g.coefficient(ref);
  std::vector<long> exps;
  for (const auto& [k, a] : f.coeffs()) exps.push_back(k);
  for (const auto& [k, a] : g.coeffs()) exps.push_back(k);
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  for (long k : exps)
    if (f.coefficient(k) * g_ref != g.coefficient(k) * f_ref) out.failures.emplace_back(k, ref);
  out.proportional = out.failures.empty() && !f_ref.is_zero();
  if (out.proportional) out.witness = reduce_ratio(f_ref, g_ref);
  return out;
}

AJReport check_aj(long r, long n_check, const FitOptions& fit) {
  require_odd(r);
  if (n_check < 1) throw UsageError("n_check must be positive");
  AJReport report;
  report.r = r;
  CertificateOptions options;
  options.check_range = index_range(1, n_check);
  options.fit = fit;
  report.certificate = build_S(r, options);
  report.epsilon_S = report.certificate.op.epsilon();
  report.a_poly = a_polynomial_cable(r);
  Proportionality p = eq_up_to_M(report.epsilon_S, report.a_poly);
  report.proportional = p.proportional;
  report.witness = std::move(p.witness);
  report.failures = std::move(p.failures);
  return report;
}

std::optional<LaurentQ> laurent_sqrt(const LaurentQ& p) {
  if (p.is_zero()) return LaurentQ();
  const long lo = p.min_degree();
  const long hi = p.max_degree();
  if (lo % 2 != 0 || hi % 2 != 0) return std::nullopt;
  const mpq_class& lead = p.leading();
  if (lead < 0 || !mpz_perfect_square_p(lead.get_num_mpz_t()) ||
      !mpz_perfect_square_p(lead.get_den_mpz_t()))
    return std::nullopt;
  const long half = (hi - lo) / 2;
  // Coefficients of the root from the top, s[i] at exponent lo/2 + i.
  std::vector<mpq_class> s(static_cast<std::size_t>(half) + 1);
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), lead.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), lead.get_den_mpz_t());
  s[static_cast<std::size_t>(half)] = mpq_class(num, den);
  s[static_cast<std::size_t>(half)].canonicalize();
  for (long i = half - 1; i >= 0; --i) {
    // exponent lo + half + i collects s[i] s[half] twice plus products above i
    mpq_class acc = p.coeff(lo + half + i);
    for (long a = i + 1; a < half; ++a)
      acc -= s[static_cast<std::size_t>(a)] * s[static_cast<std::size_t>(half + i - a)];
    s[static_cast<std::size_t>(i)] = acc / (2 * s[static_cast<std::size_t>(half)]);
  }
  std::vector<LaurentQ::Term> terms;
  for (long i = 0; i <= half; ++i)
    if (s[static_cast<std::size_t>(i)] != 0) terms.emplace_back(lo / 2 + i, s[static_cast<std::size_t>(i)]);
  LaurentQ root = LaurentQ::from_terms(std::move(terms));
  if (root * root != p) return std::nullopt;
  return root;
}

bool irreducibility_probe() {
  const LaurentQ b = quadratic_middle();
  const LaurentQ disc = b * b - LaurentQ(mpq_class(4));
  return !laurent_sqrt(disc).has_value();
}

}  // namespace ajcable
