#pragma once

// Numeric and combinatorial probes: the Melvin-Morton limit of J_E(n)/[n],
// exact quadratic fits of the breadth, and degree sweeps against the
// closed-form degree formulas.

#include <complex>
#include <string>
#include <vector>

#include "ajcable/jones.hpp"

namespace ajcable {

struct MMSample {
  long n = 0;
  std::complex<double> value;
  double error = 0.0;  // |value - target|
  bool overflow = false;
};

struct MMProbeResult {
  std::complex<double> z;
  std::complex<double> target;  // 1 / (-z + 3 - 1/z)
  std::vector<MMSample> samples;

  // Errors strictly decrease along the samples.
  bool strictly_decreasing() const;
};

// J_E(n)/[n] at t^4 = z^{1/n}, i.e. t^2 the principal (2n)-th root of z, for
// each n; with this normalization t^{4n} = z and the limit is 1/Delta(z). The polynomial is
// evaluated in multiprecision floating point, wide enough to absorb the
// cancellation between its large coefficients. Rejects z in {0, 1, -1} and
// non-ascending n lists with UsageError.
MMProbeResult mm_probe(std::complex<double> z, const std::vector<long>& n_list,
                       unsigned threads = 1);

// Absolute tolerance for the largest-n error; a chosen value, not a derived one.
inline constexpr double kMMTolerance = 0.05;

struct Quadratic {
  long a = 0, b = 0, c = 0;
  friend bool operator==(const Quadratic&, const Quadratic&) = default;
};

// Exact interpolation of br[seq(n)] through the first three indices of a run
// of >= 4 consecutive positive integers, checked on the rest.
// Throws NonQuadratic, ZeroValue, UsageError.
Quadratic breadth_fit(const JonesSequence& seq, const std::vector<long>& n_range);

struct DegreeRow {
  long r = 0, n = 0;
  long dplus_computed = 0, dplus_oracle = 0;
  long dminus_computed = 0, dminus_oracle = 0;
  bool match() const { return dplus_computed == dplus_oracle && dminus_computed == dminus_oracle; }
};

// Rows ordered by r as given, then n = 1..n_max. Throws EvenR.
std::vector<DegreeRow> degree_sweep(const std::vector<long>& r_list, long n_max, unsigned threads = 1);

std::string degree_sweep_csv(const std::vector<DegreeRow>& rows);

}  // namespace ajcable
