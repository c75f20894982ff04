#pragma once

// The operator tower for the figure-eight knot and its (r,2)-cables:
// the inhomogeneous three-term operator, the Q-operators, Q', the remainder R
// and the L-degree 4 annihilator S; plus annihilation checks and a bounded
// annihilator search.

#include <optional>
#include <string>
#include <vector>

#include "ajcable/jones.hpp"
#include "ajcable/qtorus.hpp"

namespace ajcable {

struct Window {
  long j_min;
  long j_max;
  long width() const { return j_max - j_min + 1; }
};

// op applied to seq equals rho(t, t^{2n}) / denominator(t) for every sampled
// and held-out n.
struct InhomogeneousFit {
  LaurentPoly2 rho;
  LaurentPoly1 denominator = 1;
  Window window{0, 0};
  std::vector<long> samples_used;
  std::vector<long> verified_on;

  bool is_zero() const { return rho.is_zero(); }
  // rho / denominator at M = t^{2n}; throws NotDivisible if not a polynomial.
  LaurentPoly1 value_at(long n) const;
};

// Pieces of the operator construction, kept for inspection and reports.
struct OperatorParts {
  LaurentPoly2 p1, p_minus1, p0;
  LaurentPoly2 q1, q_minus1, q0;
};

OperatorParts operator_parts();

// P_1 L + P_{-1} L^{-1} + P_0.
QTorusOperator cm_operator();

// Q_1 L^2 + Q_{-1} L^{-2} + Q_0 minus the displayed product of the two
// three-term operators; zero when the factorization identity holds.
QTorusOperator factorization_defect();

// sum_k P_k(t, M) L^{2k} -> sum_k P_k(t, t^2 M^2) L^k. Rejects odd L-exponents.
QTorusOperator parity_transform(const QTorusOperator& op);

// Q(t, M, L) = Q_1(t, t^2M^2) L + Q_{-1}(t, t^2M^2) L^{-1} + Q_0(t, t^2M^2).
// Throws FactorizationMismatch if the factorization identity fails.
QTorusOperator build_Q();

// L Q M^r (L + t^{-2r} M^{-2r}).
QTorusOperator build_Qprime(long r);

struct FitOptions {
  long n_start = 3;
  long holdout = 5;
  unsigned threads = 1;
};

// Fits rho on the fixed M-window. Throws WindowTooSmall if the held-out
// indices disagree.
InhomogeneousFit fit_inhomogeneous(const QTorusOperator& op, const JonesSequence& seq, Window window,
                                   const FitOptions& options = {});

// Symmetric windows (-w, w), w starting at the operator's M-support plus 4 and
// doubling on WindowTooSmall up to 64.
InhomogeneousFit fit_inhomogeneous_adaptive(const QTorusOperator& op, const JonesSequence& seq,
                                            const FitOptions& options = {});

// Largest m with (1+t)^m dividing p, and the cofactor.
std::pair<long, LaurentPoly2> extract_one_plus_t(const LaurentPoly2& p);
long one_plus_t_valuation(const LaurentPoly1& p);

// (R'(t,M) L - R'(t, t^2 M)) * op.
QTorusOperator homogenize(const LaurentPoly2& r_prime, const QTorusOperator& op);

struct AnnihilationReport {
  std::vector<long> checked;
  std::vector<long> failures;
  bool pass() const { return failures.empty(); }
};

// Exact-zero test of op applied to seq at each index; ordered by index.
AnnihilationReport verify_annihilates(const QTorusOperator& op, const JonesSequence& seq,
                                      const std::vector<long>& indices, unsigned threads = 1);

std::vector<long> index_range(long first, long last);

struct AnnihilatorCertificate {
  QTorusOperator op;  // S, normalized
  long r = 0;
  // (1+t)-adic valuation of R = rho / denominator (numerator minus denominator).
  long m = 0;
  LaurentPoly2 r_prime;
  InhomogeneousFit fit;
  AnnihilationReport annihilation;
  bool pass() const { return annihilation.pass() && op.l_degree() == 4; }
};

struct CertificateOptions {
  std::vector<long> check_range = index_range(1, 12);
  FitOptions fit;
};

// Builds S for the (r,2)-cable of the figure-eight knot and checks that it
// annihilates the cabled colored Jones function on the configured range.
// Throws EvenR, RIsZero, AnnihilationFailure.
AnnihilatorCertificate build_S(long r, const CertificateOptions& options = {});

struct OddAnnihilator {
  QTorusOperator op;  // (Q'''L - Q'''(t, t^2M)) Q, normalized
  long m = 0;
  LaurentPoly2 q_triple_prime;
  InhomogeneousFit fit;
  AnnihilationReport annihilation;
};

// Homogeneous annihilator of n -> J_E(2n+1). Throws AnnihilationFailure.
OddAnnihilator build_odd_annihilator(const std::vector<long>& check_range = index_range(1, 12),
                                     const FitOptions& options = {});

struct GuessOptions {
  // Held-out indices appended after the sample range. When absent, enough
  // are used to make the equation count exceed the unknown count by `slack`.
  std::optional<long> holdout;
  long slack = 4;
  std::uint64_t prime = 4611686018427387847ULL;  // 2^62 - 57
  std::uint64_t t0 = 1234567;
};

struct GuessResult {
  long l_degree = 0;
  Window window{0, 0};
  std::vector<long> samples;
  std::vector<long> holdout;
  long unknowns = 0;
  long rank_mod_p = 0;
  // Operators sum_{k,j} c_{k,j}(t) M^j L^k vanishing on every sample and
  // held-out index; empty when none exist within the bounds.
  std::vector<QTorusOperator> candidates;
};

// Bounded search for annihilators of L-degree <= l_degree with M-exponents in
// the window and coefficients in Q(t). Full column rank of the equation
// matrix after t -> t0 (mod prime) certifies an empty search space.
GuessResult guess_annihilator(const JonesSequence& seq, long l_degree, Window window,
                              const std::vector<long>& samples, const GuessOptions& options = {});

}  // namespace ajcable
