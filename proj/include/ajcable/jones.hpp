#pragma once

// Discrete functions Z -> Z[t^{+-1}]: quantum integers, the colored Jones
// function of the figure-eight knot, its (r,2)-cables and odd subsequence.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "ajcable/laurent.hpp"

namespace ajcable {

// A memoizing sequence. Values are computed on first request and cached;
// concurrent callers may compute the same index twice but always observe
// the same polynomial.
class JonesSequence {
 public:
  virtual ~JonesSequence() = default;
  JonesSequence() = default;
  JonesSequence(const JonesSequence&) = delete;
  JonesSequence& operator=(const JonesSequence&) = delete;

  const LaurentPoly1& operator()(long n) const;
  const LaurentPoly1& value(long n) const { return (*this)(n); }

  // Value at t = t0 in Z/prime. Subclasses with a cheap scalar recursion
  // override this so large indices never need the full polynomial.
  virtual std::uint64_t value_mod(long n, std::uint64_t t0, std::uint64_t prime) const;

  // Stable text tag: "qint", "fig8", "cable:9", "odd-fig8", ...
  virtual std::string descriptor() const = 0;

 protected:
  virtual LaurentPoly1 compute(long n) const = 0;

 private:
  mutable std::mutex mutex_;
  mutable std::map<long, LaurentPoly1> cache_;
};

using SequencePtr = std::shared_ptr<const JonesSequence>;

// [n] = (t^{2n} - t^{-2n}) / (t^2 - t^{-2}).
LaurentPoly1 qint(long n);

class QuantumIntegerSequence final : public JonesSequence {
 public:
  std::string descriptor() const override { return "qint"; }

 protected:
  LaurentPoly1 compute(long n) const override { return qint(n); }
};

// Habiro's cyclotomic sum, extended to n <= 0 by J(-n) = -J(n).
class Fig8Sequence final : public JonesSequence {
 public:
  std::string descriptor() const override { return "fig8"; }
  std::uint64_t value_mod(long n, std::uint64_t t0, std::uint64_t prime) const override;

 protected:
  LaurentPoly1 compute(long n) const override;
};

// The (r,2)-cable of a base knot, r odd. Evaluated incrementally through the
// one-step cabling recurrence; extended to n <= 0 by oddness.
class CableSequence final : public JonesSequence {
 public:
  CableSequence(long r, SequencePtr base);
  long r() const noexcept { return r_; }
  const JonesSequence& base() const noexcept { return *base_; }
  std::string descriptor() const override;
  std::uint64_t value_mod(long n, std::uint64_t t0, std::uint64_t prime) const override;

 protected:
  LaurentPoly1 compute(long n) const override;

 private:
  long r_;
  SequencePtr base_;
};

// n -> base(2n + 1).
class OddSubsequence final : public JonesSequence {
 public:
  explicit OddSubsequence(SequencePtr base) : base_(std::move(base)) {}
  std::string descriptor() const override { return "odd-" + base_->descriptor(); }
  std::uint64_t value_mod(long n, std::uint64_t t0, std::uint64_t prime) const override {
    return base_->value_mod(2 * n + 1, t0, prime);
  }

 protected:
  LaurentPoly1 compute(long n) const override { return base_->value(2 * n + 1); }

 private:
  SequencePtr base_;
};

// Arbitrary rule; used for synthetic fixtures.
class FunctionSequence final : public JonesSequence {
 public:
  FunctionSequence(std::string tag, std::function<LaurentPoly1(long)> rule)
      : tag_(std::move(tag)), rule_(std::move(rule)) {}
  std::string descriptor() const override { return tag_; }

 protected:
  LaurentPoly1 compute(long n) const override { return rule_(n); }

 private:
  std::string tag_;
  std::function<LaurentPoly1(long)> rule_;
};

// Shared instances.
SequencePtr fig8();
SequencePtr odd_fig8();
SequencePtr cable(long r, SequencePtr base = fig8());
SequencePtr quantum_integers();
SequencePtr constant_one();
// f(n) = t^(n^2 + n), annihilated by L - t^2 M.
SequencePtr demo_exp();

// Parses "fig8", "odd-fig8", "cable:<r>", "qint", "const", "demo-exp".
SequencePtr sequence_from_descriptor(const std::string& tag);

LaurentPoly1 jones_fig8(long n);
LaurentPoly1 odd_jones(long n);

// Direct evaluation of the cabling sum
//   t^{-2r(n^2-1)} sum_{k=1}^n (-1)^{r(n-k)} t^{2rk(k-1)} J(2k-1),  n >= 1.
LaurentPoly1 cable_jones(long r, long n, const JonesSequence& base);

// One step of the cabling recurrence: given J_c(n) and J(2n+1) returns
//   -t^{-2r(2n+1)} J_c(n) + t^{-2rn} J(2n+1)  (= J_c(n+1)).
LaurentPoly1 cable_step(long r, long n, const LaurentPoly1& cable_at_n,
                        const JonesSequence& base);

void require_odd(long r);

enum class DegreeKind { Fig8Plus, Fig8Minus, CablePlus, CableMinus };

// Closed-form extreme t-degrees of J_E(n) and of its (r,2)-cables, n > 0.
long degree_oracle(DegreeKind kind, long n, std::optional<long> r = std::nullopt);

}  // namespace ajcable
