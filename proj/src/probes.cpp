#include "ajcable/probes.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ajcable/parallel.hpp"

namespace ajcable {

namespace {

struct Complex {
  mpf_class re, im;
};

Complex make(double re, double im, mp_bitcnt_t bits) { return {mpf_class(re, bits), mpf_class(im, bits)}; }

Complex mul(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex sub(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex div(const Complex& a, const Complex& b) {
  const mpf_class d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Complex power(Complex base, unsigned long e, mp_bitcnt_t bits) {
  Complex out = make(1, 0, bits);
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}
std::complex<double> to_double(const Complex& a) { return {a.re.get_d(), a.im.get_d()}; }

// Principal n-th root of z, refined by Newton's method from the double estimate.
Complex principal_root(std::complex<double> z, long n, mp_bitcnt_t bits) {
  const std::complex<double> guess = std::pow(z, 1.0 / static_cast<double>(n));
  Complex u = make(guess.real(), guess.imag(), bits);
  const Complex target = make(z.real(), z.imag(), bits);
  const Complex nn = make(static_cast<double>(n), 0, bits);
  const auto un = static_cast<unsigned long>(n);
  for (mp_bitcnt_t good = 40; good < 2 * bits; good *= 2) {
    // u <- u - (u^n - z) / (n u^{n-1})
    const Complex un1 = power(u, un - 1, bits);
    u = sub(u, div(sub(mul(un1, u), target), mul(nn, un1)));
  }
  return u;
}

MMSample evaluate(std::complex<double> z, long n) {
  MMSample sample;
  sample.n = n;
  const LaurentPoly1& jn = jones_fig8(n);
  std::size_t coeff_bits = 1;
  for (const auto& [e, c] : jn.terms()) coeff_bits = std::max(coeff_bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  const long lo = jn.min_degree() / 2, hi = jn.max_degree() / 2;
  const double growth = std::abs(std::log2(std::abs(z))) / static_cast<double>(2 * n);
  const auto span = static_cast<double>(std::max(std::abs(lo), std::abs(hi)));
  const auto bits = static_cast<mp_bitcnt_t>(coeff_bits + span * growth + 64 + 64);

  // t^2 = z^{1/(2n)}, so that t^{4n} = z.
  const Complex u = principal_root(z, 2 * n, bits);
  const Complex one = make(1, 0, bits);
  const Complex u_inv = div(one, u);
  // Horner in u from the top exponent; exponents of J_E(n) are even in t.
  Complex acc = make(0, 0, bits);
  auto it = jn.terms().rbegin();
  for (long e = hi; e >= lo; --e) {
    acc = mul(acc, u);
    if (it != jn.terms().rend() && it->first == 2 * e) {
      acc.re += mpf_class(it->second, bits);
      ++it;
    }
  }
  acc = mul(acc, lo < 0 ? power(u_inv, static_cast<unsigned long>(-lo), bits)
                        : power(u, static_cast<unsigned long>(lo), bits));
  const Complex un = power(u, static_cast<unsigned long>(n), bits);
  const Complex qn = div(sub(un, div(one, un)), sub(u, u_inv));
  const Complex value = div(acc, qn);
  sample.value = to_double(value);
  sample.overflow = !std::isfinite(sample.value.real()) || !std::isfinite(sample.value.imag());
  return sample;
}

}  // namespace

bool MMProbeResult::strictly_decreasing() const {
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i].error < samples[i - 1].error)) return false;
  return true;
}

MMProbeResult mm_probe(std::complex<double> z, const std::vector<long>& n_list, unsigned threads) {
  if (z == 0.0 || z == 1.0 || z == -1.0) throw UsageError("z must avoid 0, 1 and -1");
  if (n_list.empty()) throw UsageError("empty n list");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1) throw UsageError("n must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw UsageError("n list must be ascending");
  }
  MMProbeResult result;
  result.z = z;
  result.target = 1.0 / (-z + 3.0 - 1.0 / z);
  result.samples = parallel_map(n_list, [&](long n) { return evaluate(z, n); }, threads);
  for (auto& s : result.samples)
    s.error = s.overflow ? std::numeric_limits<double>::infinity() : std::abs(s.value - result.target);
  return result;
}

Quadratic breadth_fit(const JonesSequence& seq, const std::vector<long>& n_range) {
  if (n_range.size() < 4) throw UsageError("breadth fit needs at least four indices");
  for (std::size_t i = 0; i < n_range.size(); ++i) {
    if (n_range[i] < 1) throw UsageError("breadth fit indices must be positive");
    if (i > 0 && n_range[i] != n_range[i - 1] + 1) throw UsageError("breadth fit indices must be consecutive");
  }
  std::vector<long> br;
  for (long n : n_range) {
    const LaurentPoly1& v = seq(n);
    if (v.is_zero()) throw ZeroValue(seq.descriptor() + " vanishes at n = " + std::to_string(n));
    br.push_back(degrees(v).breadth);
  }
  const long n1 = n_range[0];
  const long second = br[2] - 2 * br[1] + br[0];
  if (second % 2 != 0) throw NonQuadratic("second difference of the breadth is odd");
  Quadratic q;
  q.a = second / 2;
  q.b = (br[1] - br[0]) - q.a * (2 * n1 + 1);
  q.c = br[0] - q.a * n1 * n1 - q.b * n1;
  for (std::size_t i = 3; i < n_range.size(); ++i) {
    const long n = n_range[i];
    if (q.a * n * n + q.b * n + q.c != br[i])
      throw NonQuadratic("breadth leaves the fitted quadratic at n = " + std::to_string(n));
  }
  return q;
}

std::vector<DegreeRow> degree_sweep(const std::vector<long>& r_list, long n_max, unsigned threads) {
  if (n_max < 1) throw UsageError("n_max must be positive");
  for (long r : r_list) require_odd(r);
  std::vector<long> flat;
  for (std::size_t i = 0; i < r_list.size(); ++i)
    for (long n = 1; n <= n_max; ++n) flat.push_back(static_cast<long>(i) * n_max + (n - 1));
  return parallel_map(
      flat,
      [&](long idx) {
        DegreeRow row;
        row.r = r_list[static_cast<std::size_t>(idx / n_max)];
        row.n = idx % n_max + 1;
        const Degrees d = degrees((*cable(row.r))(row.n));
        row.dplus_computed = d.plus;
        row.dminus_computed = d.minus;
        row.dplus_oracle = degree_oracle(DegreeKind::CablePlus, row.n, row.r);
        row.dminus_oracle = degree_oracle(DegreeKind::CableMinus, row.n, row.r);
        return row;
      },
      threads);
}

std::string degree_sweep_csv(const std::vector<DegreeRow>& rows) {
  std::ostringstream out;
  out << "r,n,dplus_computed,dplus_oracle,dminus_computed,dminus_oracle,match\n";
  for (const auto& row : rows)
    out << row.r << ',' << row.n << ',' << row.dplus_computed << ',' << row.dplus_oracle << ','
        << row.dminus_computed << ',' << row.dminus_oracle << ',' << (row.match() ? "true" : "false")
        << '\n';
  return out.str();
}

}  // namespace ajcable
