#pragma once

#include <random>

#include "ajcable/laurent.hpp"
#include "ajcable/laurent2.hpp"
#include "ajcable/qtorus.hpp"

namespace testing_support {

using namespace ajcable;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline LaurentPoly1 random_poly1(int max_terms = 5, long exp_range = 6, long coeff_range = 9) {
  std::vector<LaurentPoly1::Term> terms;
  const long count = uniform(1, max_terms);
  for (long i = 0; i < count; ++i) terms.emplace_back(uniform(-exp_range, exp_range), mpz_class(uniform(-coeff_range, coeff_range)));
  return LaurentPoly1::from_terms(std::move(terms));
}

inline LaurentPoly1 random_nonzero_poly1(int max_terms = 5, long exp_range = 6) {
  for (;;) {
    LaurentPoly1 p = random_poly1(max_terms, exp_range);
    if (!p.is_zero()) return p;
  }
}

inline LaurentPoly2 random_poly2(int max_terms = 5, long exp_range = 4) {
  std::vector<LaurentPoly2::Term> terms;
  const long count = uniform(1, max_terms);
  for (long i = 0; i < count; ++i)
    terms.emplace_back(Exponent2{uniform(-exp_range, exp_range), uniform(-exp_range, exp_range)}, mpz_class(uniform(-9, 9)));
  return LaurentPoly2::from_terms(std::move(terms));
}

inline QTorusOperator random_operator(int max_l_terms = 3) {
  QTorusOperator op;
  const long count = uniform(1, max_l_terms);
  for (long i = 0; i < count; ++i) op += QTorusOperator::monomial(random_poly2(3, 3), uniform(-2, 2));
  return op;
}

}  // namespace testing_support
