#include <doctest.h>

#include "ajcable/jones.hpp"
#include "ajcable/qtorus.hpp"
#include "random_poly.hpp"

using namespace ajcable;
using testing_support::random_operator;
using testing_support::uniform;

namespace {
LaurentPoly2 mono2(long te, long me, long c = 1) { return LaurentPoly2::monomial(c, te, me); }
QTorusOperator op(const LaurentPoly2& a, long k) { return QTorusOperator::monomial(a, k); }
LaurentQ mq(long e, long c = 1) { return LaurentQ::monomial(mpq_class(c), e); }
}  // namespace

TEST_SUITE("qtorus") {
  TEST_CASE("commutation rule") {
    CHECK(QTorusOperator::L() * QTorusOperator::M() == op(mono2(2, 1), 1));
    CHECK(op(mono2(0, 1), 1) * op(mono2(0, 1), 1) == op(mono2(2, 2), 2));
    for (int i = 0; i < 20; ++i) {
      const auto a = random_operator();
      CHECK(QTorusOperator::identity() * a == a);
      CHECK(a * QTorusOperator::identity() == a);
    }
  }

  TEST_CASE("associativity and distributivity") {
    for (int i = 0; i < 30; ++i) {
      const auto a = random_operator(), b = random_operator(), c = random_operator();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
    }
  }

  TEST_CASE("zero coefficients are never stored") {
    const auto a = op(mono2(0, 1), 1) - op(mono2(0, 1), 1);
    CHECK(a.is_zero());
    CHECK(a.coeffs().empty());
  }

  TEST_CASE("action on sequences") {
    CHECK(QTorusOperator::L().apply(*quantum_integers(), 2) == qint(3));
    for (long n = -3; n <= 3; ++n)
      CHECK(op(mono2(0, 1), 1).apply(*constant_one(), n) == LaurentPoly1::monomial(1, 2 * n));
    const auto annihilator = QTorusOperator::L() - QTorusOperator(mono2(2, 1));
    for (long n = -5; n <= 5; ++n) CHECK(annihilator.apply(*demo_exp(), n).is_zero());
  }

  TEST_CASE("LM - t^2 ML vanishes and acts as zero") {
    const auto lm = QTorusOperator::L() * QTorusOperator::M();
    const auto ml = QTorusOperator(mono2(2, 0)) * QTorusOperator::M() * QTorusOperator::L();
    CHECK((lm - ml).is_zero());
    for (long n = 1; n <= 4; ++n) CHECK(lm.apply(*fig8(), n) == ml.apply(*fig8(), n));
  }

  TEST_CASE("action of a product is composition") {
    for (int i = 0; i < 15; ++i) {
      const auto a = random_operator(), b = random_operator();
      const long n = uniform(-3, 3);
      FunctionSequence inner("inner", [&](long m) { return b.apply(*quantum_integers(), m); });
      CHECK((a * b).apply(*quantum_integers(), n) == a.apply(inner, n));
    }
  }

  TEST_CASE("epsilon") {
    CHECK(op(mono2(1, 1), 2).epsilon() == CommutativeMLPoly::monomial(-mq(1), 2));
    CHECK(op(mono2(-2, 2) - mono2(2, -2), 1).epsilon() == CommutativeMLPoly::monomial(mq(2) - mq(-2), 1));
    for (int i = 0; i < 20; ++i) {
      const auto a = random_operator(), b = random_operator();
      CHECK((QTorusOperator(LaurentPoly2(one_plus_t())) * a).epsilon().is_zero());
      CHECK((a * b).epsilon() == a.epsilon() * b.epsilon());
    }
  }

  TEST_CASE("mirror") {
    CHECK(QTorusOperator::L().mirror() == QTorusOperator::L(-1));
    CHECK(QTorusOperator::M().mirror() == QTorusOperator(mono2(-2, -1)));
    for (int i = 0; i < 30; ++i) {
      const auto a = random_operator(), b = random_operator();
      CHECK(a.mirror().mirror() == a);
      CHECK((a * b).mirror() == a.mirror() * b.mirror());
    }
  }

  TEST_CASE("normalization") {
    CHECK((op(mono2(2, 0), -1) + QTorusOperator::L()).normalized() == QTorusOperator(mono2(2, 0)) + QTorusOperator::L(2));
    CHECK((op(LaurentPoly2(2), 1) + QTorusOperator(2)).normalized() == QTorusOperator::L() + QTorusOperator(1));
    const auto normal = QTorusOperator::L() + QTorusOperator(1);
    CHECK(normal.normalized() == normal);
    CHECK_THROWS_AS(QTorusOperator().normalized(), ZeroPolynomial);
  }

  TEST_CASE("division of commutative polynomials by L - 1") {
    const auto l_minus_one = CommutativeMLPoly::from_coeffs({{1, mq(0)}, {0, -mq(0)}});
    const auto f = CommutativeMLPoly::from_coeffs({{2, mq(3)}, {0, mq(-1)}});
    CHECK(l_minus_one.divisible_by_L_minus_one());
    CHECK_FALSE(f.divisible_by_L_minus_one());
    const auto g = l_minus_one * l_minus_one * f;
    CHECK(g.multiplicity_of_L_minus_one() == 2);
    CHECK(g.divide_by_L_minus_one() == l_minus_one * f);
    CHECK_THROWS_AS(f.divide_by_L_minus_one(), NotDivisible);
  }
}
