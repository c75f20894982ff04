#pragma once

// Sparse univariate Laurent polynomials with exact coefficients.
//
// Laurent<mpz_class> is the workhorse (values of colored Jones functions,
// specialized operator coefficients); Laurent<mpq_class> carries the rational
// polynomials in M that appear after the t = -1 reduction.

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ajcable/errors.hpp"

namespace ajcable {

namespace detail {

inline void addmul(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void addmul(mpq_class& acc, const mpq_class& a, const mpq_class& b) {
  acc += a * b;
}

// q = n / d when the quotient lies in the coefficient ring.
inline bool divide_coeff(const mpz_class& n, const mpz_class& d, mpz_class& q) {
  if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) return false;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return true;
}
inline bool divide_coeff(const mpq_class& n, const mpq_class& d, mpq_class& q) {
  q = n / d;
  return true;
}

inline double to_double(const mpz_class& c) { return c.get_d(); }
inline double to_double(const mpq_class& c) { return c.get_d(); }

}  // namespace detail

template <class C>
class Laurent {
 public:
  using Coeff = C;
  using Term = std::pair<long, C>;

  Laurent() = default;
  Laurent(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(0, C(c));
  }
  Laurent(const C& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(0, c);
  }

  static Laurent monomial(const C& c, long exponent) {
    Laurent p;
    if (c != 0) p.terms_.emplace_back(exponent, c);
    return p;
  }

  // The variable itself, t.
  static Laurent var() { return monomial(C(1), 1); }

  // Accepts terms in any order with repeats; produces canonical form.
  static Laurent from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Laurent p;
    for (auto& [e, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == e) {
        p.terms_.back().second += c;
        if (p.terms_.back().second == 0) p.terms_.pop_back();
      } else if (c != 0) {
        p.terms_.emplace_back(e, std::move(c));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  long max_degree() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.back().first;
  }
  long min_degree() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.front().first;
  }
  const C& leading() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.back().second;
  }
  const C& trailing() const {
    if (is_zero()) throw ZeroPolynomial();
    return terms_.front().second;
  }

  C coeff(long exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, long e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return C(0);
  }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return *this = combine(*this, o, false); }
  Laurent& operator-=(const Laurent& o) { return *this = combine(*this, o, true); }
  Laurent& operator*=(const Laurent& o) { return *this = multiply(*this, o); }

  friend Laurent operator+(const Laurent& a, const Laurent& b) { return combine(a, b, false); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return combine(a, b, true); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) { return multiply(a, b); }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // Multiplication by t^k.
  Laurent shifted(long k) const {
    Laurent r = *this;
    for (auto& term : r.terms_) term.first += k;
    return r;
  }

  Laurent scaled(const C& s) const {
    if (s == 0) return {};
    Laurent r = *this;
    for (auto& term : r.terms_) term.second *= s;
    return r;
  }

  // t -> t^a for a != 0.
  Laurent substitute_power(long a) const {
    if (a == 0) throw UsageError("substitute_power: exponent must be nonzero");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(e * a, c);
    if (a < 0) std::reverse(out.begin(), out.end());
    Laurent r;
    r.terms_ = std::move(out);
    return r;
  }

  // p(t) -> p(-t).
  Laurent negated_variable() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_)
      if (e % 2 != 0) c = -c;
    return r;
  }

  C sum_of_coefficients() const {
    C s = 0;
    for (const auto& term : terms_) s += term.second;
    return s;
  }

  // Value at t = -1.
  C value_at_minus_one() const {
    C s = 0;
    for (const auto& [e, c] : terms_) {
      if (e % 2 == 0) s += c;
      else s -= c;
    }
    return s;
  }

  std::complex<double> eval(std::complex<double> t0) const {
    if (t0 == std::complex<double>(0.0, 0.0))
      throw UsageError("cannot evaluate a Laurent polynomial at 0");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_)
      acc += detail::to_double(c) * std::pow(t0, static_cast<double>(e));
    return acc;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  static Laurent combine(const Laurent& a, const Laurent& b, bool subtract);
  static Laurent multiply(const Laurent& a, const Laurent& b);

  std::vector<Term> terms_;
};

using LaurentPoly1 = Laurent<mpz_class>;
using LaurentQ = Laurent<mpq_class>;

struct Degrees {
  long plus;
  long minus;
  long breadth;
  friend bool operator==(const Degrees&, const Degrees&) = default;
};

template <class C>
Degrees degrees(const Laurent<C>& p) {
  if (p.is_zero()) throw ZeroPolynomial("degrees of the zero polynomial are undefined");
  return {p.max_degree(), p.min_degree(), p.max_degree() - p.min_degree()};
}

// Exact quotient p / d, or nullopt when d does not divide p in C[t^{+-1}].
template <class C>
std::optional<Laurent<C>> try_div_exact(const Laurent<C>& p, const Laurent<C>& d);

template <class C>
Laurent<C> div_exact(const Laurent<C>& p, const Laurent<C>& d) {
  auto q = try_div_exact(p, d);
  if (!q) throw NotDivisible();
  return std::move(*q);
}

// Quantum-integer style helper used all over: (1 + t).
inline LaurentPoly1 one_plus_t() {
  return LaurentPoly1::from_terms({{0, mpz_class(1)}, {1, mpz_class(1)}});
}

// gcd of the integer coefficients (nonnegative; 0 for the zero polynomial).
mpz_class content(const LaurentPoly1& p);

// p(t0) mod prime, t0 a unit modulo prime.
std::uint64_t eval_mod(const LaurentPoly1& p, std::uint64_t t0, std::uint64_t prime);

LaurentQ to_rational(const LaurentPoly1& p);

// ---------------------------------------------------------------------------

template <class C>
Laurent<C> Laurent<C>::combine(const Laurent& a, const Laurent& b, bool subtract) {
  Laurent r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      r.terms_.emplace_back(j->first, subtract ? C(-j->second) : j->second);
      ++j;
    } else {
      C c = subtract ? C(i->second - j->second) : C(i->second + j->second);
      if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

namespace detail {

template <class C>
long exponent_stride(const std::vector<std::pair<long, C>>& terms) {
  long g = 0;
  for (std::size_t k = 1; k < terms.size(); ++k)
    g = std::gcd(g, terms[k].first - terms[0].first);
  return g;
}

}  // namespace detail

template <class C>
Laurent<C> Laurent<C>::multiply(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() < b.size()) return multiply(b, a);
  if (b.size() == 1) {
    Laurent r = a.shifted(b.terms_[0].first);
    if (b.terms_[0].second != 1)
      for (auto& term : r.terms_) term.second *= b.terms_[0].second;
    return r;
  }
  const long lo = a.terms_.front().first + b.terms_.front().first;
  const long hi = a.terms_.back().first + b.terms_.back().first;
  long stride = std::gcd(detail::exponent_stride(a.terms_), detail::exponent_stride(b.terms_));
  if (stride == 0) stride = 1;
  const long slots = (hi - lo) / stride + 1;
  const double pairs = static_cast<double>(a.size()) * static_cast<double>(b.size());

  Laurent r;
  if (static_cast<double>(slots) <= 4.0 * pairs + 64.0) {
    std::vector<C> acc(static_cast<std::size_t>(slots));
    const long a0 = a.terms_.front().first;
    const long b0 = b.terms_.front().first;
    for (const auto& [ea, ca] : a.terms_) {
      const long base = (ea - a0) / stride;
      for (const auto& [eb, cb] : b.terms_)
        detail::addmul(acc[static_cast<std::size_t>(base + (eb - b0) / stride)], ca, cb);
    }
    for (long k = 0; k < slots; ++k) {
      auto& c = acc[static_cast<std::size_t>(k)];
      if (c != 0) r.terms_.emplace_back(lo + k * stride, std::move(c));
    }
    return r;
  }
  std::vector<Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) raw.emplace_back(ea + eb, C(ca * cb));
  return from_terms(std::move(raw));
}

template <class C>
std::optional<Laurent<C>> try_div_exact(const Laurent<C>& p, const Laurent<C>& d) {
  if (d.is_zero()) throw UsageError("division by the zero polynomial");
  if (p.is_zero()) return Laurent<C>{};
  if (d.size() == 1) {
    std::vector<typename Laurent<C>::Term> out;
    out.reserve(p.size());
    const auto& [de, dc] = d.terms().front();
    for (const auto& [e, c] : p.terms()) {
      C q;
      if (!detail::divide_coeff(c, dc, q)) return std::nullopt;
      out.emplace_back(e - de, std::move(q));
    }
    return Laurent<C>::from_terms(std::move(out));
  }
  const long p_lo = p.min_degree(), p_hi = p.max_degree();
  const long d_lo = d.min_degree(), d_hi = d.max_degree();
  const long q_lo = p_lo - d_lo, q_hi = p_hi - d_hi;
  if (q_hi < q_lo) return std::nullopt;

  // Dense remainder indexed from p_lo; peel quotient terms off the top.
  std::vector<C> rem(static_cast<std::size_t>(p_hi - p_lo + 1));
  for (const auto& [e, c] : p.terms()) rem[static_cast<std::size_t>(e - p_lo)] = c;
  const C& lead = d.leading();
  std::vector<typename Laurent<C>::Term> quotient;
  for (long qe = q_hi; qe >= q_lo; --qe) {
    C& top = rem[static_cast<std::size_t>(qe + d_hi - p_lo)];
    if (top == 0) continue;
    C q;
    if (!detail::divide_coeff(top, lead, q)) return std::nullopt;
    for (const auto& [de, dc] : d.terms()) {
      C& slot = rem[static_cast<std::size_t>(qe + de - p_lo)];
      slot -= q * dc;
    }
    quotient.emplace_back(qe, std::move(q));
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  std::reverse(quotient.begin(), quotient.end());
  return Laurent<C>::from_terms(std::move(quotient));
}

template <class C>
std::string Laurent<C>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff = c.get_str();
    bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += coeff + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace ajcable
