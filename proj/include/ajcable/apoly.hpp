#pragma once

// The A-polynomial of the (r,2)-cable of the figure-eight knot and the
// comparison of commutative operators up to a factor in M.

#include <optional>
#include <utility>
#include <vector>

#include "ajcable/qtorus.hpp"
#include "ajcable/recurrence.hpp"

namespace ajcable {

// (L - 1){L^2 - ((M^8 + M^-8 - M^4 - M^-4 - 2)^2 - 2) L + 1}(L + M^{-2r}).
CommutativeMLPoly a_polynomial_cable(long r);

// The quadratic middle factor above.
CommutativeMLPoly cable_quadratic_factor();

// Ratio num/den in Q(M); den is a primitive integer polynomial with lowest
// exponent 0 and positive leading coefficient.
struct MRatio {
  LaurentQ num;
  LaurentQ den;
};

struct Proportionality {
  bool proportional = false;
  std::optional<MRatio> witness;  // f = witness * g when proportional
  // L-exponent pairs (k, reference) whose cross products disagree.
  std::vector<std::pair<long, long>> failures;
};

// f and g agree up to a nonzero factor in Q(M). Throws ZeroInput.
Proportionality eq_up_to_M(const CommutativeMLPoly& f, const CommutativeMLPoly& g);

struct AJReport {
  long r = 0;
  CommutativeMLPoly epsilon_S;
  CommutativeMLPoly a_poly;
  bool proportional = false;
  std::optional<MRatio> witness;
  std::vector<std::pair<long, long>> failures;
  AnnihilatorCertificate certificate;

  bool pass() const { return proportional && certificate.pass(); }
};

// Builds S for r with annihilation checked on 1..n_check and compares eps(S)
// with the cable A-polynomial. Propagates build_S errors.
AJReport check_aj(long r, long n_check, const FitOptions& fit = {});

// Exact square root in Q[M^{+-1}], if one exists.
std::optional<LaurentQ> laurent_sqrt(const LaurentQ& p);

// Q(M)-irreducibility surrogate for the quadratic factor of eps(Q): true when
// its discriminant is not a square in Q[M^{+-1}].
bool irreducibility_probe();

}  // namespace ajcable
