#include "ajcable/laurent.hpp"

#include "ajcable/modular.hpp"

namespace ajcable {

mpz_class content(const LaurentPoly1& p) {
  mpz_class g = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::uint64_t eval_mod(const LaurentPoly1& p, std::uint64_t t0, std::uint64_t prime) {
  if (p.is_zero()) return 0;
  const Zp field(prime);
  const std::uint64_t first = field.pow_signed(t0, p.min_degree());
  std::uint64_t acc = 0;
  std::uint64_t power = first;
  long last = p.min_degree();
  for (const auto& [e, c] : p.terms()) {
    if (e != last) {
      power = field.mul(power, field.pow_signed(t0, e - last));
      last = e;
    }
    acc = field.add(acc, field.mul(field.reduce(c), power));
  }
  return acc;
}

LaurentQ to_rational(const LaurentPoly1& p) {
  std::vector<LaurentQ::Term> terms;
  terms.reserve(p.size());
  for (const auto& [e, c] : p.terms()) terms.emplace_back(e, mpq_class(c));
  return LaurentQ::from_terms(std::move(terms));
}

}  // namespace ajcable
