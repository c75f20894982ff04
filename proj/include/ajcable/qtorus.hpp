#pragma once

// The quantum torus Z[t^{+-1}]<L^{+-1}, M^{+-1}> / (LM - t^2 ML), elements kept
// in the normal form sum_k a_k(t, M) L^k, and its commutative image at t = -1.

#include <map>
#include <string>
#include <vector>

#include "ajcable/jones.hpp"
#include "ajcable/laurent2.hpp"

namespace ajcable {

class CommutativeMLPoly;

class QTorusOperator {
 public:
  QTorusOperator() = default;
  QTorusOperator(long c);                         // NOLINT(google-explicit-constructor)
  QTorusOperator(const LaurentPoly2& a);          // NOLINT(google-explicit-constructor)

  static QTorusOperator monomial(const LaurentPoly2& a, long l_exp);
  static QTorusOperator identity() { return QTorusOperator(1); }
  static QTorusOperator L(long k = 1) { return monomial(LaurentPoly2(1), k); }
  static QTorusOperator M(long k = 1) { return QTorusOperator(LaurentPoly2::monomial(1, 0, k)); }

  const std::map<long, LaurentPoly2>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  LaurentPoly2 coefficient(long k) const;
  long min_l() const;
  long max_l() const;
  // Spread of L-exponents, max_l - min_l.
  long l_degree() const { return max_l() - min_l(); }

  QTorusOperator operator-() const;
  QTorusOperator& operator+=(const QTorusOperator& o);
  QTorusOperator& operator-=(const QTorusOperator& o);
  friend QTorusOperator operator+(QTorusOperator a, const QTorusOperator& b) { return a += b; }
  friend QTorusOperator operator-(QTorusOperator a, const QTorusOperator& b) { return a -= b; }
  // a(M) L^k * b(M) L^l = a(M) b(t^{2k} M) L^{k+l}
  friend QTorusOperator operator*(const QTorusOperator& a, const QTorusOperator& b);
  friend bool operator==(const QTorusOperator& a, const QTorusOperator& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // (a f)(n) = sum_k a_k(t, t^{2n}) f(n + k)
  LaurentPoly1 apply(const JonesSequence& f, long n) const;

  // t -> -1 coefficientwise.
  CommutativeMLPoly epsilon() const;

  // sum a_k(t, M) L^k -> sum a_k(t, t^{-2} M^{-1}) L^{-k}
  QTorusOperator mirror() const;

  // Left-multiplies by L^{-min_l} and removes the integer content.
  QTorusOperator normalized() const;

  std::string to_string() const;

 private:
  void add_term(long k, const LaurentPoly2& a);

  std::map<long, LaurentPoly2> coeffs_;
};

// Polynomial in L with coefficients in Q[M^{+-1}]; the commutative image of
// the quantum torus at t = -1.
class CommutativeMLPoly {
 public:
  CommutativeMLPoly() = default;
  static CommutativeMLPoly monomial(const LaurentQ& a, long l_exp);
  static CommutativeMLPoly from_coeffs(std::map<long, LaurentQ> coeffs);

  const std::map<long, LaurentQ>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  LaurentQ coefficient(long k) const;
  long min_l() const;
  long max_l() const;
  long l_degree() const { return max_l() - min_l(); }

  CommutativeMLPoly operator-() const;
  CommutativeMLPoly& operator+=(const CommutativeMLPoly& o);
  CommutativeMLPoly& operator-=(const CommutativeMLPoly& o);
  friend CommutativeMLPoly operator+(CommutativeMLPoly a, const CommutativeMLPoly& b) {
    return a += b;
  }
  friend CommutativeMLPoly operator-(CommutativeMLPoly a, const CommutativeMLPoly& b) {
    return a -= b;
  }
  friend CommutativeMLPoly operator*(const CommutativeMLPoly& a, const CommutativeMLPoly& b);
  friend bool operator==(const CommutativeMLPoly& a, const CommutativeMLPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  CommutativeMLPoly scaled(const LaurentQ& s) const;

  // Value at L = 1, a polynomial in M.
  LaurentQ at_L_equals_one() const;
  // Substitutes a rational value for M (must be nonzero).
  CommutativeMLPoly at_M(const mpq_class& m) const;
  bool divisible_by_L_minus_one() const { return at_L_equals_one().is_zero(); }
  // Exact quotient by (L - 1); throws NotDivisible.
  CommutativeMLPoly divide_by_L_minus_one() const;
  // Largest e with (L - 1)^e dividing this polynomial.
  int multiplicity_of_L_minus_one() const;

  std::string to_string() const;

 private:
  void add_term(long k, const LaurentQ& a);

  std::map<long, LaurentQ> coeffs_;
};

// Commutative polynomial built from integer M-polynomials, L-exponents as keys.
CommutativeMLPoly commutative_from(const std::map<long, LaurentPoly1>& coeffs);

}  // namespace ajcable
