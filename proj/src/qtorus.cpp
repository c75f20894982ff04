#include "ajcable/qtorus.hpp"

namespace ajcable {

QTorusOperator::QTorusOperator(long c) {
  if (c != 0) coeffs_.emplace(0, LaurentPoly2(c));
}

QTorusOperator::QTorusOperator(const LaurentPoly2& a) {
  if (!a.is_zero()) coeffs_.emplace(0, a);
}

QTorusOperator QTorusOperator::monomial(const LaurentPoly2& a, long l_exp) {
  QTorusOperator op;
  if (!a.is_zero()) op.coeffs_.emplace(l_exp, a);
  return op;
}

LaurentPoly2 QTorusOperator::coefficient(long k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? LaurentPoly2{} : it->second;
}

long QTorusOperator::min_l() const {
  if (is_zero()) throw ZeroPolynomial("zero operator has no L-support");
  return coeffs_.begin()->first;
}

long QTorusOperator::max_l() const {
  if (is_zero()) throw ZeroPolynomial("zero operator has no L-support");
  return coeffs_.rbegin()->first;
}

void QTorusOperator::add_term(long k, const LaurentPoly2& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, a);
  if (inserted) return;
  it->second += a;
  if (it->second.is_zero()) coeffs_.erase(it);
}

QTorusOperator QTorusOperator::operator-() const {
  QTorusOperator r = *this;
  for (auto& [k, a] : r.coeffs_) a = -a;
  return r;
}

QTorusOperator& QTorusOperator::operator+=(const QTorusOperator& o) {
  for (const auto& [k, a] : o.coeffs_) add_term(k, a);
  return *this;
}

QTorusOperator& QTorusOperator::operator-=(const QTorusOperator& o) {
  for (const auto& [k, a] : o.coeffs_) add_term(k, -a);
  return *this;
}

QTorusOperator operator*(const QTorusOperator& a, const QTorusOperator& b) {
  QTorusOperator r;
  for (const auto& [k, ak] : a.coeffs_)
    for (const auto& [l, bl] : b.coeffs_) r.add_term(k + l, ak * bl.subst_M(2 * k, 1));
  return r;
}

LaurentPoly1 QTorusOperator::apply(const JonesSequence& f, long n) const {
  LaurentPoly1 acc;
  for (const auto& [k, a] : coeffs_) {
    const LaurentPoly1& value = f(n + k);
    if (value.is_zero()) continue;
    acc += a.at_M_power(n) * value;
  }
  return acc;
}

CommutativeMLPoly QTorusOperator::epsilon() const {
  std::map<long, LaurentPoly1> image;
  for (const auto& [k, a] : coeffs_) {
    LaurentPoly1 c = a.at_t_minus_one();
    if (!c.is_zero()) image.emplace(k, std::move(c));
  }
  return commutative_from(image);
}

QTorusOperator QTorusOperator::mirror() const {
  QTorusOperator r;
  for (const auto& [k, a] : coeffs_) r.add_term(-k, a.subst_M(-2, -1));
  return r;
}

QTorusOperator QTorusOperator::normalized() const {
  if (is_zero()) throw ZeroPolynomial("cannot normalize the zero operator");
  QTorusOperator r = L(-min_l()) * *this;
  mpz_class g = 0;
  for (const auto& [k, a] : r.coeffs_) {
    mpz_class c = a.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1)
    for (auto& [k, a] : r.coeffs_) {
      std::vector<LaurentPoly2::Term> terms = a.terms();
      for (auto& term : terms) mpz_divexact(term.second.get_mpz_t(), term.second.get_mpz_t(), g.get_mpz_t());
      a = LaurentPoly2::from_terms(std::move(terms));
    }
  return r;
}

std::string QTorusOperator::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [k, a] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + a.to_string() + ")";
    if (k != 0) out += k == 1 ? "*L" : "*L^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------

CommutativeMLPoly CommutativeMLPoly::monomial(const LaurentQ& a, long l_exp) {
  CommutativeMLPoly p;
  if (!a.is_zero()) p.coeffs_.emplace(l_exp, a);
  return p;
}

CommutativeMLPoly CommutativeMLPoly::from_coeffs(std::map<long, LaurentQ> coeffs) {
  CommutativeMLPoly p;
  for (auto& [k, a] : coeffs)
    if (!a.is_zero()) p.coeffs_.emplace(k, std::move(a));
  return p;
}

CommutativeMLPoly commutative_from(const std::map<long, LaurentPoly1>& coeffs) {
  std::map<long, LaurentQ> q;
  for (const auto& [k, a] : coeffs) q.emplace(k, to_rational(a));
  return CommutativeMLPoly::from_coeffs(std::move(q));
}

LaurentQ CommutativeMLPoly::coefficient(long k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? LaurentQ{} : it->second;
}

long CommutativeMLPoly::min_l() const {
  if (is_zero()) throw ZeroPolynomial();
  return coeffs_.begin()->first;
}

long CommutativeMLPoly::max_l() const {
  if (is_zero()) throw ZeroPolynomial();
  return coeffs_.rbegin()->first;
}

void CommutativeMLPoly::add_term(long k, const LaurentQ& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(k, a);
  if (inserted) return;
  it->second += a;
  if (it->second.is_zero()) coeffs_.erase(it);
}

CommutativeMLPoly CommutativeMLPoly::operator-() const {
  CommutativeMLPoly r = *this;
  for (auto& [k, a] : r.coeffs_) a = -a;
  return r;
}

CommutativeMLPoly& CommutativeMLPoly::operator+=(const CommutativeMLPoly& o) {
  for (const auto& [k, a] : o.coeffs_) add_term(k, a);
  return *this;
}

CommutativeMLPoly& CommutativeMLPoly::operator-=(const CommutativeMLPoly& o) {
  for (const auto& [k, a] : o.coeffs_) add_term(k, -a);
  return *this;
}

CommutativeMLPoly operator*(const CommutativeMLPoly& a, const CommutativeMLPoly& b) {
  CommutativeMLPoly r;
  for (const auto& [k, ak] : a.coeffs_)
    for (const auto& [l, bl] : b.coeffs_) r.add_term(k + l, ak * bl);
  return r;
}

CommutativeMLPoly CommutativeMLPoly::scaled(const LaurentQ& s) const {
  CommutativeMLPoly r;
  for (const auto& [k, a] : coeffs_) r.add_term(k, a * s);
  return r;
}

LaurentQ CommutativeMLPoly::at_L_equals_one() const {
  LaurentQ s;
  for (const auto& [k, a] : coeffs_) s += a;
  return s;
}

CommutativeMLPoly CommutativeMLPoly::at_M(const mpq_class& m) const {
  if (m == 0) throw UsageError("M must be nonzero");
  CommutativeMLPoly r;
  for (const auto& [k, a] : coeffs_) {
    mpq_class v = 0;
    for (const auto& [e, c] : a.terms()) {
      mpq_class power = 1;
      mpq_class base = e >= 0 ? m : mpq_class(1 / m);
      for (long i = 0; i < (e >= 0 ? e : -e); ++i) power *= base;
      v += c * power;
    }
    r.add_term(k, LaurentQ(v));
  }
  return r;
}

CommutativeMLPoly CommutativeMLPoly::divide_by_L_minus_one() const {
  if (!divisible_by_L_minus_one()) throw NotDivisible("not divisible by L - 1");
  if (is_zero()) return {};
  // Synthetic division from the top: q_{k-1} = c_k + q_k.
  CommutativeMLPoly q;
  LaurentQ carry;
  for (long k = max_l(); k > min_l(); --k) {
    carry += coefficient(k);
    q.add_term(k - 1, carry);
  }
  return q;
}

int CommutativeMLPoly::multiplicity_of_L_minus_one() const {
  if (is_zero()) throw ZeroPolynomial();
  int e = 0;
  CommutativeMLPoly p = *this;
  while (p.divisible_by_L_minus_one()) {
    p = p.divide_by_L_minus_one();
    ++e;
  }
  return e;
}

std::string CommutativeMLPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [k, a] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + a.to_string("M") + ")";
    if (k != 0) out += k == 1 ? "*L" : "*L^" + std::to_string(k);
  }
  return out;
}

}  // namespace ajcable
