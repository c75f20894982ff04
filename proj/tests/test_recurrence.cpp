#include <doctest.h>

#include "ajcable/apoly.hpp"
#include "ajcable/recurrence.hpp"

using namespace ajcable;

namespace {
LaurentPoly1 t(long e, long c = 1) { return LaurentPoly1::monomial(c, e); }
LaurentPoly2 mono2(long te, long me, long c = 1) { return LaurentPoly2::monomial(c, te, me); }
LaurentQ mq(long e, long c = 1) { return LaurentQ::monomial(mpq_class(c), e); }
}  // namespace

TEST_SUITE("recurrence") {
  TEST_CASE("three-term operator") {
    const auto cm = cm_operator();
    CHECK(cm.coefficient(1) == mono2(-2, 2) - mono2(2, -2));
    CHECK(cm.coefficient(-1) == mono2(2, 2) - mono2(-2, -2));
    CHECK(cm.epsilon().coefficient(1) == mq(2) - mq(-2));
    CHECK(cm.apply(*fig8(), 0) == t(-2, 2) - t(2, 2));
  }

  TEST_CASE("three-term operator fit on the figure-eight") {
    const InhomogeneousFit fit = fit_inhomogeneous_adaptive(cm_operator(), *fig8());
    CHECK(fit.verified_on.size() >= 5);
    for (long n = 1; n <= 25; ++n) CHECK(fit.value_at(n) == cm_operator().apply(*fig8(), n));
    CHECK(fit.rho.at_M_power(0) == (t(-2, 2) - t(2, 2)) * fit.denominator);
    CHECK_FALSE(fit.is_zero());
  }

  TEST_CASE("fit examples on synthetic sequences") {
    const auto zero = fit_inhomogeneous(QTorusOperator::L() - QTorusOperator(1), *constant_one(), {-2, 2});
    CHECK(zero.is_zero());
    const auto m = fit_inhomogeneous(QTorusOperator::M(), *constant_one(), {-2, 2});
    CHECK(m.rho == mono2(0, 1));
    CHECK(m.denominator == LaurentPoly1(1));
    CHECK_THROWS_AS(fit_inhomogeneous(QTorusOperator::M(3), *constant_one(), {-2, 2}), WindowTooSmall);
    CHECK_THROWS_AS(fit_inhomogeneous(QTorusOperator::M(), *constant_one(), {2, 1}), UsageError);
  }

  TEST_CASE("factorization identity") {
    CHECK(factorization_defect().is_zero());
    CHECK_NOTHROW(build_Q());
  }

  TEST_CASE("parity transform") {
    const auto p = mono2(1, 1) + mono2(0, -2, 3);
    CHECK(parity_transform(QTorusOperator::monomial(p, 2)) == QTorusOperator::monomial(p.subst_M(2, 2), 1));
    CHECK_THROWS_AS(parity_transform(QTorusOperator::L()), UsageError);
  }

  TEST_CASE("parity transform matches odd subsequences") {
    // (P(t,M) L^{2l} J)(2n+1) = (P(t,t^2M^2) L^l J_odd)(n)
    const auto a = QTorusOperator::monomial(mono2(1, 3) - mono2(-2, -1), 2) + QTorusOperator::monomial(mono2(0, 2), -2);
    const auto b = parity_transform(a);
    for (long n = -3; n <= 4; ++n) CHECK(a.apply(*fig8(), 2 * n + 1) == b.apply(*odd_fig8(), n));
  }

  TEST_CASE("Q applied to the odd subsequence has linear degree growth") {
    const auto q = build_Q();
    std::vector<long> spans;
    for (long n = 3; n <= 12; ++n) spans.push_back(degrees(q.apply(*odd_fig8(), n)).breadth);
    for (std::size_t i = 2; i < spans.size(); ++i) CHECK(spans[i] - spans[i - 1] == spans[i - 1] - spans[i - 2]);
  }

  TEST_CASE("Q' shape") {
    const auto qp = build_Qprime(9);
    CHECK(qp.min_l() == 0);
    CHECK(qp.max_l() == 3);
    CHECK(qp.normalized().l_degree() == 3);
    const auto expected = cable_quadratic_factor() *
                          CommutativeMLPoly::from_coeffs({{1, mq(0)}, {0, mq(-18)}});
    CHECK(eq_up_to_M(qp.epsilon(), expected).proportional);
    CHECK_FALSE(qp.epsilon().divisible_by_L_minus_one());
    CHECK_THROWS_AS(build_Qprime(2), EvenR);
  }

  TEST_CASE("(1+t) extraction") {
    const auto p = mono2(0, 1) + mono2(3, -1, 2);
    const auto one_t = LaurentPoly2(one_plus_t());
    const auto [m, rest] = extract_one_plus_t(one_t * one_t * p);
    CHECK(m == 2);
    CHECK(rest == p);
    CHECK(one_plus_t_valuation(t(4) - LaurentPoly1(1)) == 1);
    CHECK_THROWS_AS(extract_one_plus_t(LaurentPoly2()), ZeroPolynomial);
  }

  TEST_CASE("homogenizing an inhomogeneous relation") {
    // f(n) = sum_{k<n} t^{2k} has (L - 1) f = M.
    const auto f = std::make_shared<FunctionSequence>("partial", [](long n) {
      LaurentPoly1 s;
      for (long k = 0; k < n; ++k) s += t(2 * k);
      return s;
    });
    const auto op = QTorusOperator::L() - QTorusOperator(1);
    const auto fit = fit_inhomogeneous(op, *f, {-1, 1});
    CHECK(fit.rho == mono2(0, 1));
    const auto s = homogenize(fit.rho, op);
    CHECK(verify_annihilates(s, *f, index_range(1, 10)).pass());
  }

  TEST_CASE("annihilation reports") {
    CHECK(verify_annihilates(QTorusOperator::L() - QTorusOperator(1), *constant_one(), index_range(-3, 3)).pass());
    CHECK(verify_annihilates(QTorusOperator::L() - QTorusOperator(mono2(2, 1)), *demo_exp(), index_range(-3, 3)).pass());
    const auto report = verify_annihilates(QTorusOperator::L() - QTorusOperator(1), *quantum_integers(), {3, 1, 2}, 2);
    CHECK(report.checked == std::vector<long>{1, 2, 3});
    CHECK(report.failures == std::vector<long>{1, 2, 3});
  }

  TEST_CASE("bounded search finds the planted operators") {
    const auto exp_result = guess_annihilator(*demo_exp(), 1, {0, 1}, index_range(1, 10));
    REQUIRE(exp_result.candidates.size() == 1);
    const auto& found = exp_result.candidates.front();
    CHECK((found == (QTorusOperator::L() - QTorusOperator(mono2(2, 1))).normalized() ||
           found == (QTorusOperator(mono2(2, 1)) - QTorusOperator::L()).normalized()));
    const auto const_result = guess_annihilator(*constant_one(), 1, {0, 0}, index_range(1, 6));
    REQUIRE(const_result.candidates.size() == 1);
    CHECK(verify_annihilates(const_result.candidates.front(), *constant_one(), index_range(-5, 20)).pass());
    CHECK(const_result.candidates.front().l_degree() == 1);
  }

  TEST_CASE("bounded search finds nothing for quantum integers below their order") {
    // [n] satisfies an L-degree 2 recurrence but no L-degree 0 one.
    const auto none = guess_annihilator(*quantum_integers(), 0, {-2, 2}, index_range(1, 10));
    CHECK(none.candidates.empty());
    CHECK(none.rank_mod_p == none.unknowns);
    const auto found = guess_annihilator(*quantum_integers(), 2, {0, 0}, index_range(1, 10));
    REQUIRE(found.candidates.size() == 1);
    CHECK(verify_annihilates(found.candidates.front(), *quantum_integers(), index_range(-10, 30)).pass());
  }

  TEST_CASE("bounded search rejects too few equations") {
    GuessOptions options;
    options.holdout = 1;
    CHECK_THROWS_AS(guess_annihilator(*fig8(), 3, {-8, 8}, index_range(1, 40), options), InsufficientSamples);
    CHECK_THROWS_AS(guess_annihilator(*fig8(), 1, {0, 0}, {}), InsufficientSamples);
  }

  TEST_CASE("odd-subsequence three-term operators do not annihilate on their own") {
    CHECK_FALSE(verify_annihilates(build_Q(), *odd_fig8(), index_range(1, 3)).pass());
  }
}
