#include <doctest.h>

#include "ajcable/apoly.hpp"
#include "random_poly.hpp"

using namespace ajcable;
using testing_support::uniform;

namespace {
LaurentQ mq(long e, long c = 1) { return LaurentQ::monomial(mpq_class(c), e); }
CommutativeMLPoly l_poly(std::map<long, LaurentQ> coeffs) { return CommutativeMLPoly::from_coeffs(std::move(coeffs)); }

LaurentQ random_m_poly() {
  for (;;) {
    std::vector<LaurentQ::Term> terms;
    for (long i = uniform(1, 3); i > 0; --i) {
      mpq_class c(uniform(-5, 5), uniform(1, 3));
      c.canonicalize();
      terms.emplace_back(uniform(-3, 3), c);
    }
    auto p = LaurentQ::from_terms(std::move(terms));
    if (!p.is_zero()) return p;
  }
}

CommutativeMLPoly random_ml_poly() {
  std::map<long, LaurentQ> coeffs;
  for (long k = 0; k <= uniform(0, 3); ++k) coeffs[k] = random_m_poly();
  return l_poly(coeffs);
}
}  // namespace

TEST_SUITE("apoly") {
  TEST_CASE("cable A-polynomial examples") {
    const auto a = a_polynomial_cable(9);
    CHECK(a.l_degree() == 4);
    CHECK(a.coefficient(4) == mq(0));
    CHECK(a.coefficient(0) == -mq(-18));
    const auto l_minus_one = l_poly({{1, mq(0)}, {0, -mq(0)}});
    const auto l_plus_one = l_poly({{1, mq(0)}, {0, mq(0)}});
    CHECK(a.at_M(1) == l_minus_one * l_minus_one * l_minus_one * l_plus_one);
    CHECK_THROWS_AS(a_polynomial_cable(4), EvenR);
  }

  TEST_CASE("L - 1 divides the cable A-polynomial exactly once") {
    for (long r : {-13, -9, -5, -3, 3, 5, 9, 13}) CHECK(a_polynomial_cable(r).multiplicity_of_L_minus_one() == 1);
  }

  TEST_CASE("proportionality examples") {
    const auto g = random_ml_poly();
    const auto f = g.scaled(mq(1));
    const auto p = eq_up_to_M(f, g);
    CHECK(p.proportional);
    REQUIRE(p.witness.has_value());
    CHECK(p.witness->num == mq(1));
    CHECK(p.witness->den == mq(0));

    CHECK_FALSE(eq_up_to_M(l_poly({{1, mq(0)}, {0, mq(0)}}), l_poly({{1, mq(0)}, {0, -mq(0)}})).proportional);

    const auto q = eq_up_to_M(l_poly({{1, mq(2)}, {0, -mq(2)}}), l_poly({{1, mq(-1, 2)}, {0, mq(-1, -2)}}));
    REQUIRE(q.proportional);
    CHECK(q.witness->num == LaurentQ::monomial(mpq_class(1, 2), 3));
    CHECK(q.witness->den == mq(0));
    CHECK_THROWS_AS(eq_up_to_M(CommutativeMLPoly(), g), ZeroInput);
  }

  TEST_CASE("proportionality with a rational witness") {
    const auto h = l_poly({{2, mq(1) + mq(-3)}, {0, mq(3, 2)}});
    const auto f = h.scaled(mq(0) - mq(1));
    const auto g = h.scaled(mq(0) + mq(1));
    const auto p = eq_up_to_M(f, g);
    REQUIRE(p.proportional);
    CHECK(p.witness->den == mq(0) + mq(1));
    CHECK(g.scaled(p.witness->num) == f.scaled(p.witness->den));
    const auto r = eq_up_to_M(f, g + l_poly({{1, mq(0)}}));
    CHECK_FALSE(r.proportional);
    CHECK_FALSE(r.failures.empty());
  }

  TEST_CASE("proportionality is an equivalence relation") {
    for (int i = 0; i < 20; ++i) {
      const auto g = random_ml_poly();
      const auto f = g.scaled(random_m_poly());
      const auto h = f.scaled(random_m_poly());
      CHECK(eq_up_to_M(g, g).proportional);
      CHECK(eq_up_to_M(f, g).proportional);
      CHECK(eq_up_to_M(g, f).proportional);
      CHECK(eq_up_to_M(h, f).proportional);
      CHECK(eq_up_to_M(h, g).proportional);
      const auto w = eq_up_to_M(f, g).witness;
      REQUIRE(w.has_value());
      CHECK(g.scaled(w->num) == f.scaled(w->den));
    }
  }

  TEST_CASE("square roots of Laurent polynomials") {
    CHECK(laurent_sqrt(mq(4)) == std::optional<LaurentQ>(mq(2)));
    CHECK_FALSE(laurent_sqrt(mq(4) + mq(0)).has_value());
    CHECK_FALSE(laurent_sqrt(mq(3)).has_value());
    CHECK_FALSE(laurent_sqrt(-mq(2)).has_value());
    for (int i = 0; i < 30; ++i) {
      const auto p = random_m_poly();
      const auto root = laurent_sqrt(p * p);
      REQUIRE(root.has_value());
      CHECK((*root * *root) == p * p);
    }
  }

  TEST_CASE("quadratic factor has a non-square discriminant") {
    CHECK(irreducibility_probe());
  }
}
