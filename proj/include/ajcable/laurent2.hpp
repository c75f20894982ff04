#pragma once

// Laurent polynomials in t and M over the integers.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "ajcable/laurent.hpp"

namespace ajcable {

struct Exponent2 {
  long t;
  long m;
  friend auto operator<=>(const Exponent2&, const Exponent2&) = default;
};

class LaurentPoly2 {
 public:
  using Term = std::pair<Exponent2, mpz_class>;

  LaurentPoly2() = default;
  LaurentPoly2(long c);  // NOLINT(google-explicit-constructor)
  // Embeds an M-free polynomial.
  explicit LaurentPoly2(const LaurentPoly1& p);

  static LaurentPoly2 monomial(const mpz_class& c, long t_exp, long m_exp);
  static LaurentPoly2 t() { return monomial(1, 1, 0); }
  static LaurentPoly2 M() { return monomial(1, 0, 1); }
  static LaurentPoly2 from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Smallest and largest M-exponent present.
  std::pair<long, long> m_range() const;
  std::pair<long, long> t_range() const;

  // Coefficient of M^j as a polynomial in t.
  LaurentPoly1 m_coefficient(long j) const;

  LaurentPoly2 operator-() const;
  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
    return a.terms_ == b.terms_;
  }

  // Multiplication by t^a M^b.
  LaurentPoly2 shifted(long t_shift, long m_shift) const;
  LaurentPoly2 scaled(const mpz_class& s) const;

  // M -> t^a M^b. Each term c t^i M^j becomes c t^(i + a j) M^(b j).
  LaurentPoly2 subst_M(long a, long b) const;

  // t -> -1; the result is a Laurent polynomial in M.
  LaurentPoly1 at_t_minus_one() const;

  // M -> t^(2n).
  LaurentPoly1 at_M_power(long n) const;

  // Exact division by an M-free polynomial, coefficientwise in M.
  std::optional<LaurentPoly2> try_div_exact_t(const LaurentPoly1& d) const;

  mpz_class content() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace ajcable
