#include "ajcable/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

namespace ajcable {

namespace {

using Dense = std::vector<mpz_class>;

Dense to_dense(const LaurentPoly1& p) {
  if (p.is_zero()) return {};
  const long lo = p.min_degree();
  Dense d(static_cast<std::size_t>(p.max_degree() - lo + 1));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
  return d;
}

LaurentPoly1 from_dense(const Dense& d) {
  std::vector<LaurentPoly1::Term> terms;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) terms.emplace_back(static_cast<long>(i), d[i]);
  return LaurentPoly1::from_terms(std::move(terms));
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

void make_primitive(Dense& d) {
  trim(d);
  if (d.empty()) return;
  mpz_class g = 0;
  for (const auto& c : d) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (d.back() < 0) g = -g;
  for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Remainder of lc(b)^k a modulo b for a suitable k.
Dense pseudo_remainder(Dense a, const Dense& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    make_primitive(a);
  }
  return a;
}

}  // namespace

LaurentPoly1 primitive_part(const LaurentPoly1& p) {
  Dense d = to_dense(p);
  make_primitive(d);
  return from_dense(d);
}

LaurentPoly1 poly_gcd(const LaurentPoly1& a, const LaurentPoly1& b) {
  Dense x = to_dense(a), y = to_dense(b);
  make_primitive(x);
  make_primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = pseudo_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  make_primitive(x);
  return from_dense(x);
}

// ---------------------------------------------------------------------------

RationalFunc1::RationalFunc1(LaurentPoly1 num, LaurentPoly1 den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw UsageError("rational function with zero denominator");
}

RationalFunc1 RationalFunc1::reduced() const {
  if (num_.is_zero()) return {};
  LaurentPoly1 g = poly_gcd(num_, den_);
  LaurentPoly1 n = div_exact(num_, g);
  LaurentPoly1 d = div_exact(den_, g);
  // Units: integer content and t-powers go to the numerator side.
  mpz_class cn = content(n), cd = content(d);
  mpz_class common;
  mpz_gcd(common.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (d.leading() < 0) common = -common;
  n = div_exact(n, LaurentPoly1(common));
  d = div_exact(d, LaurentPoly1(common));
  const long shift = d.min_degree();
  return {n.shifted(-shift), d.shifted(-shift)};
}

std::optional<LaurentPoly1> RationalFunc1::as_polynomial() const {
  auto q = try_div_exact(num_, den_);
  return q;
}

RationalFunc1 operator+(const RationalFunc1& a, const RationalFunc1& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunc1 operator-(const RationalFunc1& a, const RationalFunc1& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunc1 operator*(const RationalFunc1& a, const RationalFunc1& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunc1 operator/(const RationalFunc1& a, const RationalFunc1& b) {
  if (b.is_zero()) throw UsageError("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalFunc1::to_string() const {
  if (den_ == LaurentPoly1(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------

namespace {

// One fraction-free Gauss-Jordan step on pivot (r, col): every other row i
// becomes (p * row_i - m[i][col] * row_r) / prev.
void bareiss_step(PolyMatrix& m, std::size_t r, std::size_t col, const LaurentPoly1& prev) {
  const LaurentPoly1 pivot = m[r][col];
  const bool trivial_prev = prev == LaurentPoly1(1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == r) continue;
    const LaurentPoly1 factor = m[i][col];
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j == col) continue;
      LaurentPoly1 v = pivot * m[i][j];
      if (!factor.is_zero() && !m[r][j].is_zero()) v -= factor * m[r][j];
      m[i][j] = trivial_prev ? std::move(v) : div_exact(v, prev);
    }
    m[i][col] = LaurentPoly1();
  }
}

std::size_t choose_pivot(const PolyMatrix& m, std::size_t from, std::size_t col) {
  std::size_t best = m.size();
  for (std::size_t i = from; i < m.size(); ++i) {
    if (m[i][col].is_zero()) continue;
    if (best == m.size() || m[i][col].size() < m[best][col].size()) best = i;
  }
  return best;
}

}  // namespace

std::vector<RationalFunc1> ff_solve(const PolyMatrix& a, const std::vector<LaurentPoly1>& rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw UsageError("ff_solve: right-hand side length mismatch");
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw UsageError("ff_solve: matrix must be square");
    m[i] = a[i];
    m[i].push_back(rhs[i]);
  }
  LaurentPoly1 prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = choose_pivot(m, k, k);
    if (p == n) throw SingularMatrix();
    std::swap(m[k], m[p]);
    bareiss_step(m, k, k, prev);
    prev = m[k][k];
  }
  std::vector<RationalFunc1> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.push_back(RationalFunc1(m[i][n], m[i][i]).reduced());
  return x;
}

std::vector<std::vector<LaurentPoly1>> ff_nullspace(const PolyMatrix& a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  PolyMatrix m = a;
  for (const auto& row : m)
    if (row.size() != cols) throw UsageError("ff_nullspace: ragged matrix");
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(cols, false);
  LaurentPoly1 prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    const std::size_t p = choose_pivot(m, r, col);
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    bareiss_step(m, r, col, prev);
    prev = m[r][col];
    pivot_cols.push_back(col);
    is_pivot[col] = true;
    ++r;
  }
  std::vector<std::vector<LaurentPoly1>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<LaurentPoly1> v(cols);
    v[f] = prev;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][f];
    LaurentPoly1 g;
    for (const auto& x : v)
      if (!x.is_zero()) g = g.is_zero() ? primitive_part(x) : poly_gcd(g, x);
    long shift = 0;
    bool first = true;
    for (auto& x : v) {
      if (x.is_zero()) continue;
      x = div_exact(x, g);
      shift = first ? x.min_degree() : std::min(shift, x.min_degree());
      first = false;
    }
    for (auto& x : v) x = x.shifted(-shift);
    // Sign: first nonzero entry gets a positive leading coefficient.
    for (const auto& x : v)
      if (!x.is_zero()) {
        if (x.leading() < 0)
          for (auto& y : v) y = -y;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------

const LaurentPoly1& cyclotomic(long e) {
  if (e < 1) throw UsageError("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<long, LaurentPoly1> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  // Phi_e = (t^e - 1) / prod_{f | e, f < e} Phi_f
  LaurentPoly1 p = LaurentPoly1::from_terms({{e, mpz_class(1)}, {0, mpz_class(-1)}});
  for (long f = 1; f < e; ++f) {
    if (e % f != 0) continue;
    auto found = cache.find(f);
    LaurentPoly1 phi;
    if (found != cache.end()) {
      phi = found->second;
    } else {
      // Divisors are always smaller, so compute bottom-up without the lock.
      LaurentPoly1 q = LaurentPoly1::from_terms({{f, mpz_class(1)}, {0, mpz_class(-1)}});
      for (long g = 1; g < f; ++g)
        if (f % g == 0) q = div_exact(q, cache.at(g));
      phi = cache.emplace(f, std::move(q)).first->second;
    }
    p = div_exact(p, phi);
  }
  return cache.emplace(e, std::move(p)).first->second;
}

VandermondeSolution solve_monomial_vandermonde(long n0, long j_min, long j_max,
                                               const std::vector<LaurentPoly1>& values) {
  if (j_max < j_min) throw UsageError("empty Vandermonde window");
  const std::size_t width = static_cast<std::size_t>(j_max - j_min + 1);
  if (values.size() != width) throw UsageError("Vandermonde system needs exactly W samples");
  auto node = [&](std::size_t s) { return j_min + static_cast<long>(s); };
  auto binomial = [](long a, long b) {  // t^{2a} - t^{2b}
    return LaurentPoly1::from_terms({{2 * a, mpz_class(1)}, {2 * b, mpz_class(-1)}});
  };

  // head[k] = sum_{m >= k} c_m t^{2 n0 j_m} prod_{s<k} (t^{2 j_m} - t^{2 j_s}),
  // all scaled by the running denominator.
  std::vector<LaurentPoly1> head(width);
  std::vector<LaurentPoly1> diff = values;
  head[0] = diff[0];
  for (std::size_t k = 1; k < width; ++k) {
    const long eliminated = node(k - 1);
    for (std::size_t i = 0; i + k < width; ++i)
      diff[i] = diff[i + 1] - diff[i].shifted(2 * eliminated);
    head[k] = diff[0];
  }

  LaurentPoly1 denominator = 1;
  std::vector<LaurentPoly1> numerators(width);
  std::vector<LaurentPoly1> scale_at(width);  // denominator when c_m was fixed
  for (std::size_t m = width; m-- > 0;) {
    const long jm = node(m);
    LaurentPoly1 x = head[m];
    for (std::size_t s = 0; s < m; ++s) {
      const LaurentPoly1 b = binomial(jm, node(s));
      if (auto q = try_div_exact(x, b)) {
        x = std::move(*q);
        continue;
      }
      // t^{2a} - t^{2b} = +-t^{2 min} (t^{2|a-b|} - 1); peel cyclotomic factors,
      // moving the ones that do not divide into the common denominator.
      const long gap = 2 * std::abs(jm - node(s));
      x = x.shifted(-2 * std::min(jm, node(s)));
      if (jm < node(s)) x = -x;
      for (long e = 1; e <= gap; ++e) {
        if (gap % e != 0) continue;
        const LaurentPoly1& phi = cyclotomic(e);
        if (auto q = try_div_exact(x, phi)) {
          x = std::move(*q);
        } else {
          denominator *= phi;
          for (std::size_t k = 0; k < m; ++k) head[k] *= phi;
        }
      }
    }
    numerators[m] = x.shifted(-2 * n0 * jm);
    scale_at[m] = denominator;
    LaurentPoly1 contribution = x;
    for (std::size_t k = 0; k < m; ++k) {
      head[k] -= contribution;
      contribution *= binomial(jm, node(k));
    }
  }
  for (std::size_t m = 0; m < width; ++m)
    if (scale_at[m] != denominator) numerators[m] *= div_exact(denominator, scale_at[m]);
  return {std::move(numerators), std::move(denominator)};
}

}  // namespace ajcable
