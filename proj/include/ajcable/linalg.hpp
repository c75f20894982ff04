#pragma once

// Exact linear algebra over Q(t) with Laurent-polynomial entries.

#include <optional>
#include <string>
#include <vector>

#include "ajcable/laurent.hpp"

namespace ajcable {

// gcd over Q[t^{+-1}], returned primitive over Z with positive leading
// coefficient and lowest exponent 0 (units t^k and integers are stripped).
LaurentPoly1 poly_gcd(const LaurentPoly1& a, const LaurentPoly1& b);

// Primitive part: content removed, lowest exponent moved to 0, positive
// leading coefficient. Zero maps to zero.
LaurentPoly1 primitive_part(const LaurentPoly1& p);

// Element of Q(t) stored as a quotient of integer Laurent polynomials.
class RationalFunc1 {
 public:
  RationalFunc1() : num_(), den_(1) {}
  RationalFunc1(const LaurentPoly1& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunc1(LaurentPoly1 num, LaurentPoly1 den);

  const LaurentPoly1& num() const noexcept { return num_; }
  const LaurentPoly1& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  // Cancels the gcd; denominator gets lowest exponent 0 and positive
  // leading coefficient.
  RationalFunc1 reduced() const;
  // The numerator when the (reduced) denominator is a unit +-t^k.
  std::optional<LaurentPoly1> as_polynomial() const;

  friend RationalFunc1 operator+(const RationalFunc1& a, const RationalFunc1& b);
  friend RationalFunc1 operator-(const RationalFunc1& a, const RationalFunc1& b);
  friend RationalFunc1 operator*(const RationalFunc1& a, const RationalFunc1& b);
  friend RationalFunc1 operator/(const RationalFunc1& a, const RationalFunc1& b);
  // Cross-multiplication equality.
  friend bool operator==(const RationalFunc1& a, const RationalFunc1& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const;

 private:
  LaurentPoly1 num_;
  LaurentPoly1 den_;
};

using PolyMatrix = std::vector<std::vector<LaurentPoly1>>;

// Solves A x = b for square nonsingular A by fraction-free (Bareiss)
// Gauss-Jordan elimination. Throws SingularMatrix.
std::vector<RationalFunc1> ff_solve(const PolyMatrix& a, const std::vector<LaurentPoly1>& rhs);

// Basis of the right nullspace of A (any shape) over Q(t), each vector
// scaled to a primitive integer polynomial vector.
std::vector<std::vector<LaurentPoly1>> ff_nullspace(const PolyMatrix& a);

// Cyclotomic polynomial Phi_e(t), e >= 1.
const LaurentPoly1& cyclotomic(long e);

// Solution of a monomial-node Vandermonde system over Q(t): c_j is
// numerators[j - j_min] / denominator, the denominator being a product of
// cyclotomic polynomials (1 when every c_j is a Laurent polynomial).
struct VandermondeSolution {
  std::vector<LaurentPoly1> numerators;
  LaurentPoly1 denominator;
};

// Solves
//   sum_{j=j_min}^{j_max} c_j(t) t^{2 n j} = values[n - n0],  n = n0 .. n0+W-1,
// W = j_max - j_min + 1, by eliminating one monomial node at a time
// (operator L - t^{2j} kills the j-th column) followed by back substitution
// with exact divisions. Denominators are tracked factor by factor.
VandermondeSolution solve_monomial_vandermonde(long n0, long j_min, long j_max,
                                               const std::vector<LaurentPoly1>& values);

}  // namespace ajcable
