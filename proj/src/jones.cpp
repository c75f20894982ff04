#include "ajcable/jones.hpp"

#include <algorithm>
#include <mutex>

#include "ajcable/modular.hpp"

namespace ajcable {

const LaurentPoly1& JonesSequence::operator()(long n) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
  }
  LaurentPoly1 v = compute(n);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.try_emplace(n, std::move(v)).first->second;
}

std::uint64_t JonesSequence::value_mod(long n, std::uint64_t t0, std::uint64_t prime) const {
  return eval_mod(value(n), t0, prime);
}

void require_odd(long r) {
  if (r % 2 == 0) throw EvenR(r);
}

LaurentPoly1 qint(long n) {
  if (n == 0) return {};
  if (n < 0) return -qint(-n);
  std::vector<LaurentPoly1::Term> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (long i = n - 1; i >= 0; --i) terms.emplace_back(2 * n - 2 - 4 * i, mpz_class(1));
  return LaurentPoly1::from_terms(std::move(terms));
}

namespace {

// Pairwise coprime moduli below 2^62 for the residue evaluation below.
const std::vector<std::uint64_t>& habiro_moduli(std::size_t count) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> moduli;
  std::lock_guard<std::mutex> lock(mutex);
  mpz_class p = (mpz_class(1) << 62) - (mpz_class(1) << 32);
  if (!moduli.empty()) p = moduli.back();
  while (moduli.size() < count) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    moduli.push_back(p.get_ui());
  }
  return moduli;
}

// Coefficients of S = sum_{k=0}^{n-1} prod_{l=1}^k (x^n + x^{-n} - x^l - x^{-l})
// modulo m, densely from x^{-(n-1)n} to x^{(n-1)n}.
std::vector<std::uint64_t> habiro_sum_mod(long n, std::uint64_t m) {
  const long span = (n - 1) * n;
  const std::size_t size = static_cast<std::size_t>(2 * span + 1);
  std::vector<std::uint64_t> running(size, 0), next(size, 0), sum(size, 0);
  running[static_cast<std::size_t>(span)] = 1;
  sum[static_cast<std::size_t>(span)] = 1;
  auto add = [m](std::uint64_t& a, std::uint64_t b) { a = a >= m - b ? a - (m - b) : a + b; };
  auto sub = [m](std::uint64_t& a, std::uint64_t b) { a = a >= b ? a - b : a + (m - b); };
  for (long l = 1; l < n; ++l) {
    const long old_reach = (l - 1) * n;
    const long reach = l * n;
    std::fill(next.begin() + (span - reach), next.begin() + (span + reach + 1), 0);
    std::uint64_t* out = next.data() + span;
    const std::uint64_t* in = running.data() + span;
    for (long e = -old_reach; e <= old_reach; ++e) {
      const std::uint64_t c = in[e];
      if (c == 0) continue;
      add(out[e + n], c);
      add(out[e - n], c);
      sub(out[e + l], c);
      sub(out[e - l], c);
    }
    std::swap(running, next);
    for (long e = -reach; e <= reach; ++e)
      add(sum[static_cast<std::size_t>(span + e)], running[static_cast<std::size_t>(span + e)]);
  }
  return sum;
}

// S exactly, by CRT. Each factor has l1-norm 4, so |coefficients| < 4^n.
std::vector<mpz_class> habiro_sum(long n) {
  const std::size_t bits = static_cast<std::size_t>(2 * n + 2);
  const std::size_t count = (bits + 60) / 61;
  const auto& moduli = habiro_moduli(count);
  std::vector<std::vector<std::uint64_t>> residues;
  for (std::size_t i = 0; i < count; ++i) residues.push_back(habiro_sum_mod(n, moduli[i]));

  // Garner: x = r_0 + m_0 (c_1 + m_1 (c_2 + ...)), mixed-radix digits mod each modulus.
  std::vector<Zp> fields;
  for (std::size_t i = 0; i < count; ++i) fields.emplace_back(moduli[i]);
  std::vector<std::vector<std::uint64_t>> inverse(count, std::vector<std::uint64_t>(count, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < i; ++j) inverse[j][i] = fields[i].inv(moduli[j] % moduli[i]);
  mpz_class modulus = 1;
  for (std::size_t i = 0; i < count; ++i) modulus *= moduli[i];
  const mpz_class half = modulus / 2;

  const std::size_t size = residues.front().size();
  std::vector<mpz_class> out(size);
  std::vector<std::uint64_t> digit(count);
  for (std::size_t idx = 0; idx < size; ++idx) {
    bool all_zero = true;
    for (std::size_t i = 0; i < count; ++i) all_zero &= residues[i][idx] == 0;
    if (all_zero) continue;
    for (std::size_t i = 0; i < count; ++i) {
      const Zp& f = fields[i];
      std::uint64_t v = residues[i][idx];
      for (std::size_t j = 0; j < i; ++j) v = f.mul(f.sub(v, digit[j] % moduli[i]), inverse[j][i]);
      digit[i] = v;
    }
    mpz_class x = digit[count - 1];
    for (std::size_t i = count - 1; i-- > 0;) {
      x *= static_cast<unsigned long>(moduli[i]);
      x += static_cast<unsigned long>(digit[i]);
    }
    if (x > half) x -= modulus;
    out[idx] = std::move(x);
  }
  return out;
}

}  // namespace

LaurentPoly1 Fig8Sequence::compute(long n) const {
  if (n == 0) return {};
  if (n < 0) return -value(-n);
  // J = [n] S with [n] = t^{2n-2} sum_{i<n} x^{-i}, x = t^4: the x^m
  // coefficient is a sum of n consecutive coefficients of S.
  const long span = (n - 1) * n;
  const std::vector<mpz_class> s = habiro_sum(n);
  std::vector<LaurentPoly1::Term> terms;
  mpz_class window = 0;
  for (long m = span; m >= -span - (n - 1); --m) {
    if (m >= -span) window += s[static_cast<std::size_t>(m + span)];
    if (m + n <= span) window -= s[static_cast<std::size_t>(m + n + span)];
    if (window != 0) terms.emplace_back(4 * m + 2 * n - 2, window);
  }
  return LaurentPoly1::from_terms(std::move(terms));
}

std::uint64_t Fig8Sequence::value_mod(long n, std::uint64_t t0, std::uint64_t prime) const {
  const Zp f(prime);
  if (n == 0) return 0;
  if (n < 0) return f.neg(value_mod(-n, t0, prime));
  const std::uint64_t x = f.pow(t0, 4);
  const std::uint64_t x_inv = f.inv(x);
  const std::uint64_t big = f.add(f.pow(x, static_cast<std::uint64_t>(n)),
                                  f.pow(x_inv, static_cast<std::uint64_t>(n)));
  std::uint64_t running = 1, sum = 1, xl = 1, xl_inv = 1;
  for (long l = 1; l < n; ++l) {
    xl = f.mul(xl, x);
    xl_inv = f.mul(xl_inv, x_inv);
    running = f.mul(running, f.sub(big, f.add(xl, xl_inv)));
    sum = f.add(sum, running);
  }
  // [n] = sum_{i=0}^{n-1} t^{2n-2-4i}
  const std::uint64_t t4_inv = f.inv(f.pow(t0, 4));
  std::uint64_t q = 0, term = f.pow_signed(t0, 2 * n - 2);
  for (long i = 0; i < n; ++i) {
    q = f.add(q, term);
    term = f.mul(term, t4_inv);
  }
  return f.mul(q, sum);
}

CableSequence::CableSequence(long r, SequencePtr base) : r_(r), base_(std::move(base)) {
  require_odd(r);
}

std::string CableSequence::descriptor() const {
  const std::string b = base_->descriptor();
  return "cable:" + std::to_string(r_) + (b == "fig8" ? "" : "/" + b);
}

LaurentPoly1 CableSequence::compute(long n) const {
  if (n == 0) return {};
  if (n < 0) return -value(-n);
  return cable_step(r_, n - 1, value(n - 1), *base_);
}

std::uint64_t CableSequence::value_mod(long n, std::uint64_t t0, std::uint64_t prime) const {
  const Zp f(prime);
  if (n == 0) return 0;
  if (n < 0) return f.neg(value_mod(-n, t0, prime));
  std::uint64_t v = 0;
  for (long k = 0; k < n; ++k) {
    const std::uint64_t a = f.neg(f.mul(f.pow_signed(t0, -2 * r_ * (2 * k + 1)), v));
    v = f.add(a, f.mul(f.pow_signed(t0, -2 * r_ * k), base_->value_mod(2 * k + 1, t0, prime)));
  }
  return v;
}

LaurentPoly1 cable_step(long r, long n, const LaurentPoly1& cable_at_n,
                        const JonesSequence& base) {
  require_odd(r);
  return base.value(2 * n + 1).shifted(-2 * r * n) - cable_at_n.shifted(-2 * r * (2 * n + 1));
}

LaurentPoly1 cable_jones(long r, long n, const JonesSequence& base) {
  require_odd(r);
  if (n == 0) return {};
  if (n < 0) return -cable_jones(r, -n, base);
  LaurentPoly1 sum;
  for (long k = 1; k <= n; ++k) {
    LaurentPoly1 term = base.value(2 * k - 1).shifted(2 * r * k * (k - 1));
    if ((n - k) % 2 != 0) sum -= term;  // (-1)^{r(n-k)} with r odd
    else sum += term;
  }
  return sum.shifted(-2 * r * (n * n - 1));
}

SequencePtr fig8() {
  static const SequencePtr instance = std::make_shared<Fig8Sequence>();
  return instance;
}

SequencePtr odd_fig8() {
  static const SequencePtr instance = std::make_shared<OddSubsequence>(fig8());
  return instance;
}

SequencePtr cable(long r, SequencePtr base) {
  require_odd(r);
  static std::mutex mutex;
  static std::map<std::pair<long, const JonesSequence*>, SequencePtr> instances;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = instances[{r, base.get()}];
  if (!slot) slot = std::make_shared<CableSequence>(r, std::move(base));
  return slot;
}

SequencePtr quantum_integers() {
  static const SequencePtr instance = std::make_shared<QuantumIntegerSequence>();
  return instance;
}

SequencePtr constant_one() {
  static const SequencePtr instance =
      std::make_shared<FunctionSequence>("const", [](long) { return LaurentPoly1(1); });
  return instance;
}

SequencePtr demo_exp() {
  static const SequencePtr instance = std::make_shared<FunctionSequence>(
      "demo-exp", [](long n) { return LaurentPoly1::monomial(1, n * n + n); });
  return instance;
}

SequencePtr sequence_from_descriptor(const std::string& tag) {
  if (tag == "fig8") return fig8();
  if (tag == "odd-fig8") return odd_fig8();
  if (tag == "qint") return quantum_integers();
  if (tag == "const") return constant_one();
  if (tag == "demo-exp") return demo_exp();
  if (tag.rfind("cable:", 0) == 0) {
    std::size_t used = 0;
    long r = 0;
    try {
      r = std::stol(tag.substr(6), &used);
    } catch (const std::exception&) {
      throw UsageError("malformed cable descriptor '" + tag + "'");
    }
    if (used != tag.size() - 6) throw UsageError("malformed cable descriptor '" + tag + "'");
    return cable(r);
  }
  throw UsageError("unknown sequence '" + tag + "'");
}

LaurentPoly1 jones_fig8(long n) { return fig8()->value(n); }

LaurentPoly1 odd_jones(long n) { return odd_fig8()->value(n); }

long degree_oracle(DegreeKind kind, long n, std::optional<long> r) {
  if (n <= 0) throw UsageError("degree formulas hold for n > 0 only");
  const bool cable_kind = kind == DegreeKind::CablePlus || kind == DegreeKind::CableMinus;
  if (cable_kind) {
    if (!r) throw UsageError("cable degree formulas need r");
    require_odd(*r);
  }
  switch (kind) {
    case DegreeKind::Fig8Plus:
      return 4 * n * n - 2 * n - 2;
    case DegreeKind::Fig8Minus:
      return -4 * n * n + 2 * n + 2;
    case DegreeKind::CablePlus:
      if (*r >= -7) return 16 * n * n - (2 * *r + 20) * n + 2 * *r + 4;
      return -2 * *r * n * n + 2 * *r;
    case DegreeKind::CableMinus:
      if (*r >= 9) return -2 * *r * n * n + 2 * *r;
      return -16 * n * n - (2 * *r - 20) * n + 2 * *r - 4;
  }
  throw UsageError("unknown degree kind");
}

}  // namespace ajcable
