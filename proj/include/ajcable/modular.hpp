#pragma once

// Arithmetic in Z/p for a word-sized prime p. Used to certify full column
// rank of polynomial matrices by specializing t to a residue.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace ajcable {

class Zp {
 public:
  explicit Zp(std::uint64_t prime) : p_(prime) {}

  std::uint64_t prime() const noexcept { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const {
    std::uint64_t r = 1;
    base %= p_;
    while (e != 0) {
      if (e & 1U) r = mul(r, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p_ - 2); }
  std::uint64_t pow_signed(std::uint64_t base, long e) const {
    return e >= 0 ? pow(base, static_cast<std::uint64_t>(e))
                  : inv(pow(base, static_cast<std::uint64_t>(-e)));
  }
  std::uint64_t reduce(const mpz_class& c) const {
    return mpz_fdiv_ui(c.get_mpz_t(), p_);
  }
  std::uint64_t from_signed(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(p_) : r);
  }

 private:
  std::uint64_t p_;
};

// Indices of a maximal linearly independent subset of `rows` over Z/p,
// chosen greedily in input order. Its size is the rank.
std::vector<std::size_t> independent_rows_mod(const std::vector<std::vector<std::uint64_t>>& rows,
                                              const Zp& field);

}  // namespace ajcable
