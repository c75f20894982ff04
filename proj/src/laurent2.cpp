#include "ajcable/laurent2.hpp"

#include <algorithm>
#include <map>

namespace ajcable {

LaurentPoly2::LaurentPoly2(long c) {
  if (c != 0) terms_.emplace_back(Exponent2{0, 0}, mpz_class(c));
}

LaurentPoly2::LaurentPoly2(const LaurentPoly1& p) {
  terms_.reserve(p.size());
  for (const auto& [e, c] : p.terms()) terms_.emplace_back(Exponent2{e, 0}, c);
}

LaurentPoly2 LaurentPoly2::monomial(const mpz_class& c, long t_exp, long m_exp) {
  LaurentPoly2 p;
  if (c != 0) p.terms_.emplace_back(Exponent2{t_exp, m_exp}, c);
  return p;
}

LaurentPoly2 LaurentPoly2::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly2 p;
  p.terms_.reserve(terms.size());
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

std::pair<long, long> LaurentPoly2::m_range() const {
  if (is_zero()) throw ZeroPolynomial();
  long lo = terms_.front().first.m, hi = lo;
  for (const auto& [e, c] : terms_) {
    lo = std::min(lo, e.m);
    hi = std::max(hi, e.m);
  }
  return {lo, hi};
}

std::pair<long, long> LaurentPoly2::t_range() const {
  if (is_zero()) throw ZeroPolynomial();
  return {terms_.front().first.t, terms_.back().first.t};
}

LaurentPoly1 LaurentPoly2::m_coefficient(long j) const {
  std::vector<LaurentPoly1::Term> out;
  for (const auto& [e, c] : terms_)
    if (e.m == j) out.emplace_back(e.t, c);
  return LaurentPoly1::from_terms(std::move(out));
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r = *this;
  for (auto& term : r.terms_) term.second = -term.second;
  return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return *this = from_terms(std::move(all));
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) { return *this += -o; }

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) { return *this = *this * o; }

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly2::Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      raw.emplace_back(Exponent2{ea.t + eb.t, ea.m + eb.m}, mpz_class(ca * cb));
  return LaurentPoly2::from_terms(std::move(raw));
}

LaurentPoly2 LaurentPoly2::shifted(long t_shift, long m_shift) const {
  LaurentPoly2 r = *this;
  for (auto& term : r.terms_) {
    term.first.t += t_shift;
    term.first.m += m_shift;
  }
  return r;
}

LaurentPoly2 LaurentPoly2::scaled(const mpz_class& s) const {
  if (s == 0) return {};
  LaurentPoly2 r = *this;
  for (auto& term : r.terms_) term.second *= s;
  return r;
}

LaurentPoly2 LaurentPoly2::subst_M(long a, long b) const {
  if (b == 0) throw UsageError("subst_M: M -> t^a M^0 is not an automorphism");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(Exponent2{e.t + a * e.m, b * e.m}, c);
  return from_terms(std::move(out));
}

LaurentPoly1 LaurentPoly2::at_t_minus_one() const {
  std::vector<LaurentPoly1::Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e.m, e.t % 2 == 0 ? c : mpz_class(-c));
  return LaurentPoly1::from_terms(std::move(out));
}

LaurentPoly1 LaurentPoly2::at_M_power(long n) const {
  std::vector<LaurentPoly1::Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e.t + 2 * n * e.m, c);
  return LaurentPoly1::from_terms(std::move(out));
}

std::optional<LaurentPoly2> LaurentPoly2::try_div_exact_t(const LaurentPoly1& d) const {
  std::map<long, std::vector<LaurentPoly1::Term>> by_m;
  for (const auto& [e, c] : terms_) by_m[e.m].emplace_back(e.t, c);
  std::vector<Term> out;
  for (auto& [m, group] : by_m) {
    auto q = try_div_exact(LaurentPoly1::from_terms(std::move(group)), d);
    if (!q) return std::nullopt;
    for (const auto& [e, c] : q->terms()) out.emplace_back(Exponent2{e, m}, c);
  }
  return from_terms(std::move(out));
}

mpz_class LaurentPoly2::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

std::string LaurentPoly2::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff = c.get_str();
    const bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (e.t != 0) mono += e.t == 1 ? "t" : "t^" + std::to_string(e.t);
    if (e.m != 0) {
      if (!mono.empty()) mono += "*";
      mono += e.m == 1 ? "M" : "M^" + std::to_string(e.m);
    }
    if (mono.empty()) out += coeff;
    else out += (coeff == "1" ? "" : coeff + "*") + mono;
  }
  return out;
}

}  // namespace ajcable
