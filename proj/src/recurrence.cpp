#include "ajcable/recurrence.hpp"

#include <algorithm>
#include <cstdlib>

#include "ajcable/linalg.hpp"
#include "ajcable/modular.hpp"
#include "ajcable/parallel.hpp"

namespace ajcable {

namespace {

LaurentPoly2 mono(long c, long t_exp, long m_exp) { return LaurentPoly2::monomial(c, t_exp, m_exp); }

// P(t, t^{2k} M)
LaurentPoly2 shift_M(const LaurentPoly2& p, long k) { return p.subst_M(2 * k, 1); }

QTorusOperator three_term(const LaurentPoly2& up, const LaurentPoly2& down, const LaurentPoly2& mid) {
  return QTorusOperator::monomial(up, 1) + QTorusOperator::monomial(down, -1) + QTorusOperator(mid);
}

long max_abs_m_exponent(const QTorusOperator& op) {
  long w = 0;
  for (const auto& [k, a] : op.coeffs()) {
    auto [lo, hi] = a.m_range();
    w = std::max({w, std::abs(lo), std::abs(hi)});
  }
  return w;
}

}  // namespace

LaurentPoly1 InhomogeneousFit::value_at(long n) const {
  return div_exact(rho.at_M_power(n), denominator);
}

OperatorParts operator_parts() {
  OperatorParts parts;
  parts.p1 = mono(1, -2, 2) - mono(1, 2, -2);
  parts.p_minus1 = mono(1, 2, 2) - mono(1, -2, -2);
  parts.p0 = (mono(1, 0, 2) - mono(1, 0, -2)) *
             (mono(-1, 0, 4) - mono(1, 0, -4) + mono(1, 0, 2) + mono(1, 0, -2) + mono(1, 4, 0) +
              mono(1, -4, 0));
  const auto& p1 = parts.p1;
  const auto& pm = parts.p_minus1;
  const auto& p0 = parts.p0;
  parts.q1 = p1 * shift_M(p1, 1) * shift_M(p0, -1);
  parts.q_minus1 = pm * shift_M(pm, -1) * shift_M(p0, 1);
  parts.q0 = p1 * shift_M(pm, 1) * shift_M(p0, -1) + pm * shift_M(p1, -1) * shift_M(p0, 1) -
             p0 * shift_M(p0, 1) * shift_M(p0, -1);
  return parts;
}

QTorusOperator cm_operator() {
  const OperatorParts parts = operator_parts();
  return three_term(parts.p1, parts.p_minus1, parts.p0);
}

namespace {

QTorusOperator q_even() {
  const OperatorParts parts = operator_parts();
  return QTorusOperator::monomial(parts.q1, 2) + QTorusOperator::monomial(parts.q_minus1, -2) +
         QTorusOperator(parts.q0);
}

}  // namespace

QTorusOperator factorization_defect() {
  const OperatorParts parts = operator_parts();
  const auto& p0 = parts.p0;
  const QTorusOperator left = three_term(parts.p1 * shift_M(p0, -1), parts.p_minus1 * shift_M(p0, 1),
                                         -(shift_M(p0, 1) * shift_M(p0, -1)));
  return q_even() - left * cm_operator();
}

QTorusOperator parity_transform(const QTorusOperator& op) {
  QTorusOperator out;
  for (const auto& [k, a] : op.coeffs()) {
    if (k % 2 != 0) throw UsageError("parity transform needs even L-exponents");
    out += QTorusOperator::monomial(a.subst_M(2, 2), k / 2);
  }
  return out;
}

QTorusOperator build_Q() {
  if (!factorization_defect().is_zero())
    throw FactorizationMismatch("Q_1 L^2 + Q_{-1} L^{-2} + Q_0 differs from the factored product");
  return parity_transform(q_even());
}

QTorusOperator build_Qprime(long r) {
  require_odd(r);
  const QTorusOperator shift_part =
      QTorusOperator::monomial(mono(1, 0, r), 1) + QTorusOperator(mono(1, -2 * r, -r));
  return QTorusOperator::L(1) * build_Q() * shift_part;
}

// ---------------------------------------------------------------------------

InhomogeneousFit fit_inhomogeneous(const QTorusOperator& op, const JonesSequence& seq, Window window,
                                   const FitOptions& options) {
  if (window.width() < 1) throw UsageError("fit window must be nonempty");
  if (options.holdout < 1) throw UsageError("fit needs at least one held-out index");
  InhomogeneousFit fit;
  fit.window = window;
  fit.samples_used = index_range(options.n_start, options.n_start + window.width() - 1);
  fit.verified_on = index_range(options.n_start + window.width(),
                                options.n_start + window.width() + options.holdout - 1);

  std::vector<long> all = fit.samples_used;
  all.insert(all.end(), fit.verified_on.begin(), fit.verified_on.end());
  std::vector<LaurentPoly1> values =
      parallel_map(all, [&](long n) { return op.apply(seq, n); }, options.threads);
  std::vector<LaurentPoly1> held(values.begin() + window.width(), values.end());
  values.resize(static_cast<std::size_t>(window.width()));

  VandermondeSolution sol =
      solve_monomial_vandermonde(options.n_start, window.j_min, window.j_max, values);

  // Cancel what the numerators share with the (cyclotomic) denominator.
  LaurentPoly1 g = sol.denominator;
  for (const auto& c : sol.numerators) {
    if (g == LaurentPoly1(1)) break;
    if (!c.is_zero()) g = poly_gcd(g, c);
  }
  std::vector<LaurentPoly2::Term> terms;
  for (std::size_t i = 0; i < sol.numerators.size(); ++i) {
    const LaurentPoly1 c = div_exact(sol.numerators[i], g);
    for (const auto& [e, coeff] : c.terms())
      terms.emplace_back(Exponent2{e, window.j_min + static_cast<long>(i)}, coeff);
  }
  fit.rho = LaurentPoly2::from_terms(std::move(terms));
  fit.denominator = div_exact(sol.denominator, g);
  if (fit.rho.is_zero()) fit.denominator = 1;

  for (std::size_t i = 0; i < held.size(); ++i) {
    if (fit.rho.at_M_power(fit.verified_on[i]) != fit.denominator * held[i])
      throw WindowTooSmall("fit on M-window [" + std::to_string(window.j_min) + ", " +
                           std::to_string(window.j_max) + "] disagrees at held-out n = " +
                           std::to_string(fit.verified_on[i]));
  }
  return fit;
}

InhomogeneousFit fit_inhomogeneous_adaptive(const QTorusOperator& op, const JonesSequence& seq,
                                            const FitOptions& options) {
  constexpr long kCap = 64;
  long w = std::min(kCap, max_abs_m_exponent(op) + 4);
  for (;;) {
    try {
      return fit_inhomogeneous(op, seq, {-w, w}, options);
    } catch (const WindowTooSmall&) {
      if (w >= kCap) throw;
      w = std::min(kCap, 2 * w);
    }
  }
}

std::pair<long, LaurentPoly2> extract_one_plus_t(const LaurentPoly2& p) {
  if (p.is_zero()) throw ZeroPolynomial("(1+t)-adic valuation of zero is undefined");
  long m = 0;
  LaurentPoly2 cur = p;
  const LaurentPoly1 d = one_plus_t();
  while (auto q = cur.try_div_exact_t(d)) {
    cur = std::move(*q);
    ++m;
  }
  return {m, std::move(cur)};
}

long one_plus_t_valuation(const LaurentPoly1& p) {
  if (p.is_zero()) throw ZeroPolynomial("(1+t)-adic valuation of zero is undefined");
  long m = 0;
  LaurentPoly1 cur = p;
  while (auto q = try_div_exact(cur, one_plus_t())) {
    cur = std::move(*q);
    ++m;
  }
  return m;
}

QTorusOperator homogenize(const LaurentPoly2& r_prime, const QTorusOperator& op) {
  const QTorusOperator left =
      QTorusOperator::monomial(r_prime, 1) - QTorusOperator(shift_M(r_prime, 1));
  return left * op;
}

std::vector<long> index_range(long first, long last) {
  std::vector<long> out;
  for (long n = first; n <= last; ++n) out.push_back(n);
  return out;
}

AnnihilationReport verify_annihilates(const QTorusOperator& op, const JonesSequence& seq,
                                      const std::vector<long>& indices, unsigned threads) {
  std::vector<long> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  const auto zero = parallel_map(
      sorted, [&](long n) { return op.apply(seq, n).is_zero() ? 1 : 0; }, threads);
  AnnihilationReport report;
  report.checked = sorted;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (!zero[i]) report.failures.push_back(sorted[i]);
  return report;
}

AnnihilatorCertificate build_S(long r, const CertificateOptions& options) {
  require_odd(r);
  const QTorusOperator q_prime = build_Qprime(r);
  const SequencePtr seq = cable(r);
  AnnihilatorCertificate cert;
  cert.r = r;
  cert.fit = fit_inhomogeneous_adaptive(q_prime, *seq, options.fit);
  if (cert.fit.is_zero())
    throw RIsZero("Q' annihilates the cabled colored Jones function; expected a nonzero remainder");
  auto [m, r_prime] = extract_one_plus_t(cert.fit.rho);
  cert.m = m - one_plus_t_valuation(cert.fit.denominator);
  cert.r_prime = std::move(r_prime);
  cert.op = homogenize(cert.r_prime, q_prime).normalized();
  cert.annihilation = verify_annihilates(cert.op, *seq, options.check_range, options.fit.threads);
  if (!cert.annihilation.pass())
    throw AnnihilationFailure("S fails to annihilate the cable", cert.annihilation.failures.front());
  return cert;
}

OddAnnihilator build_odd_annihilator(const std::vector<long>& check_range, const FitOptions& options) {
  const QTorusOperator q = build_Q();
  OddAnnihilator out;
  out.fit = fit_inhomogeneous_adaptive(q, *odd_fig8(), options);
  if (out.fit.is_zero()) throw RIsZero("Q annihilates the odd subsequence; expected a remainder");
  auto [m, cofactor] = extract_one_plus_t(out.fit.rho);
  out.m = m - one_plus_t_valuation(out.fit.denominator);
  out.q_triple_prime = std::move(cofactor);
  out.op = homogenize(out.q_triple_prime, q).normalized();
  out.annihilation = verify_annihilates(out.op, *odd_fig8(), check_range, options.threads);
  if (!out.annihilation.pass())
    throw AnnihilationFailure("odd-subsequence annihilator fails", out.annihilation.failures.front());
  return out;
}

// ---------------------------------------------------------------------------

GuessResult guess_annihilator(const JonesSequence& seq, long l_degree, Window window,
                              const std::vector<long>& samples, const GuessOptions& options) {
  if (l_degree < 0) throw UsageError("L-degree must be nonnegative");
  if (window.width() < 1) throw UsageError("M-window must be nonempty");
  if (samples.empty()) throw InsufficientSamples("no sample indices given");
  GuessResult result;
  result.l_degree = l_degree;
  result.window = window;
  result.samples = samples;
  result.unknowns = (l_degree + 1) * window.width();
  const long needed = result.unknowns + options.slack;
  const long n_samples = static_cast<long>(samples.size());
  const long holdout = options.holdout.value_or(std::max(5L, needed - n_samples));
  if (n_samples + holdout < needed)
    throw InsufficientSamples(std::to_string(n_samples + holdout) + " equations for " +
                              std::to_string(result.unknowns) + " unknowns (+" +
                              std::to_string(options.slack) + " slack)");
  const long last = *std::max_element(samples.begin(), samples.end());
  result.holdout = index_range(last + 1, last + holdout);

  std::vector<long> rows = samples;
  rows.insert(rows.end(), result.holdout.begin(), result.holdout.end());

  // Column order: k-major, then j.
  const Zp field(options.prime);
  std::vector<std::vector<std::uint64_t>> modular;
  modular.reserve(rows.size());
  for (long n : rows) {
    std::vector<std::uint64_t> row;
    row.reserve(static_cast<std::size_t>(result.unknowns));
    for (long k = 0; k <= l_degree; ++k) {
      const std::uint64_t value = seq.value_mod(n + k, options.t0, options.prime);
      for (long j = window.j_min; j <= window.j_max; ++j)
        row.push_back(field.mul(value, field.pow_signed(options.t0, 2 * n * j)));
    }
    modular.push_back(std::move(row));
  }
  const std::vector<std::size_t> independent = independent_rows_mod(modular, field);
  result.rank_mod_p = static_cast<long>(independent.size());
  if (result.rank_mod_p == result.unknowns) return result;

  auto exact_row = [&](long n) {
    std::vector<LaurentPoly1> row;
    for (long k = 0; k <= l_degree; ++k) {
      const LaurentPoly1& value = seq(n + k);
      for (long j = window.j_min; j <= window.j_max; ++j) row.push_back(value.shifted(2 * n * j));
    }
    return row;
  };
  auto residual_free = [&](const std::vector<LaurentPoly1>& v) {
    for (long n : rows) {
      const auto row = exact_row(n);
      LaurentPoly1 acc;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!v[c].is_zero() && !row[c].is_zero()) acc += v[c] * row[c];
      if (!acc.is_zero()) return false;
    }
    return true;
  };

  PolyMatrix reduced;
  for (std::size_t i : independent) reduced.push_back(exact_row(rows[i]));
  if (reduced.empty()) reduced.push_back(std::vector<LaurentPoly1>(static_cast<std::size_t>(result.unknowns)));
  auto basis = ff_nullspace(reduced);
  if (!std::all_of(basis.begin(), basis.end(), residual_free)) {
    PolyMatrix full;
    for (long n : rows) full.push_back(exact_row(n));
    basis = ff_nullspace(full);
  }

  for (const auto& v : basis) {
    QTorusOperator op;
    std::size_t c = 0;
    for (long k = 0; k <= l_degree; ++k)
      for (long j = window.j_min; j <= window.j_max; ++j, ++c)
        if (!v[c].is_zero()) op += QTorusOperator::monomial(LaurentPoly2(v[c]).shifted(0, j), k);
    result.candidates.push_back(op.normalized());
  }
  return result;
}

}  // namespace ajcable
