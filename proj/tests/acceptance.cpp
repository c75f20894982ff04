// End-to-end acceptance checks. One line per criterion:
//   [PASS] 04 factorization-identity: ... (0.01 s)
// Usage: acceptance [criterion numbers...]   (default: all)
// Exit status 0 iff every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "ajcable/apoly.hpp"
#include "ajcable/probes.hpp"
#include "ajcable/recurrence.hpp"

using namespace ajcable;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

LaurentPoly1 t(long e, long c = 1) { return LaurentPoly1::monomial(c, e); }

const std::vector<long> kDegreeRs = {5, -5, 7, -7, 9, -9, 11, -11, 13, -13};

// Shared between criteria when several run in one process.
std::map<long, AJReport>& aj_reports() {
  static std::map<long, AJReport> reports;
  return reports;
}

const AJReport& aj_report(long r) {
  auto& cache = aj_reports();
  auto it = cache.find(r);
  if (it == cache.end()) it = cache.emplace(r, check_aj(r, 12)).first;
  return it->second;
}

const OddAnnihilator& odd_annihilator() {
  static const OddAnnihilator op = build_odd_annihilator(index_range(1, 12));
  return op;
}

Outcome base_values() {
  std::ostringstream why;
  bool ok = true;
  if (!jones_fig8(0).is_zero()) ok = false, why << "J(0) != 0; ";
  if (jones_fig8(1) != LaurentPoly1(1)) ok = false, why << "J(1) != 1; ";
  // (t^2 + t^-2)(t^8 - t^4 + 1 - t^-4 + t^-8) expanded by hand
  if (jones_fig8(2) != t(10) + t(-10)) ok = false, why << "J(2) = " << jones_fig8(2).to_string() << "; ";
  for (long n = 0; n <= 10; ++n)
    if (jones_fig8(-n) != -jones_fig8(n)) ok = false, why << "J(-" << n << ") != -J(" << n << "); ";
  return {ok, ok ? "J(0)=0, J(1)=1, J(2)=t^10+t^-10, J(-n)=-J(n) for n<=10" : why.str()};
}

Outcome degree_formulas() {
  std::ostringstream why;
  long checked = 0, bad = 0;
  for (long n = 1; n <= 12; ++n) {
    const Degrees d = degrees(jones_fig8(n));
    checked += 2;
    if (d.plus != degree_oracle(DegreeKind::Fig8Plus, n) || d.minus != degree_oracle(DegreeKind::Fig8Minus, n)) {
      ++bad;
      why << " fig8 n=" << n;
    }
  }
  for (const auto& row : degree_sweep(kDegreeRs, 8)) {
    checked += 2;
    if (!row.match()) {
      ++bad;
      why << " r=" << row.r << ",n=" << row.n << ": d+ " << row.dplus_computed << " vs " << row.dplus_oracle
          << ", d- " << row.dminus_computed << " vs " << row.dminus_oracle << ";";
    }
  }
  std::ostringstream detail;
  detail << checked << " degree values, " << bad << " mismatches" << why.str();
  return {bad == 0, detail.str()};
}

Outcome cabling_consistency() {
  long checked = 0;
  std::ostringstream why;
  bool ok = true;
  for (long r : kDegreeRs) {
    for (long n = 1; n <= 10; ++n) {
      ++checked;
      const LaurentPoly1 direct = cable_jones(r, n, *fig8());
      const LaurentPoly1 stepped = n == 1 ? cable_step(r, 0, LaurentPoly1(), *fig8())
                                          : cable_step(r, n - 1, cable_jones(r, n - 1, *fig8()), *fig8());
      if (direct != stepped || (*cable(r))(n) != direct) ok = false, why << " r=" << r << ",n=" << n;
    }
  }
  std::ostringstream detail;
  detail << checked << " step/direct comparisons" << (ok ? ", all equal" : ", mismatches:" + why.str());
  return {ok, detail.str()};
}

Outcome factorization_identity() {
  const bool ok = factorization_defect().is_zero();
  return {ok, ok ? "Q1 L^2 + Q-1 L^-2 + Q0 equals the factored product exactly" : "nonzero defect"};
}

Outcome inhomogeneous_membership() {
  const InhomogeneousFit cm = fit_inhomogeneous_adaptive(cm_operator(), *fig8());
  const InhomogeneousFit q = fit_inhomogeneous_adaptive(build_Q(), *odd_fig8());
  const LaurentPoly1 expected = t(-2, 2) - t(2, 2);
  const bool at_one = cm.rho.at_M_power(0) == expected * cm.denominator;
  const bool holdouts = cm.verified_on.size() >= 5 && q.verified_on.size() >= 5;
  std::ostringstream detail;
  detail << "three-term fit on window [" << cm.window.j_min << "," << cm.window.j_max << "] with denominator "
         << cm.denominator.to_string() << ", verified on " << cm.verified_on.size() << " held-out n; Q fit on ["
         << q.window.j_min << "," << q.window.j_max << "] verified on " << q.verified_on.size()
         << " held-out n; rho(t,1)/den " << (at_one ? "=" : "!=") << " 2(t^-2 - t^2)";
  return {at_one && holdouts, detail.str()};
}

Outcome main_certificate() {
  std::ostringstream detail;
  bool ok = true;
  for (long r : {9L, -9L, 11L, -11L}) {
    const auto start = std::chrono::steady_clock::now();
    const AJReport& report = aj_report(r);
    const double secs = seconds_since(start);
    const bool this_ok = report.pass() && secs <= 600.0;
    ok &= this_ok;
    detail << "r=" << r << ": L-degree " << report.certificate.op.l_degree() << ", annihilates n=1..12 "
           << (report.certificate.annihilation.pass() ? "yes" : "no") << ", eps(S) ~ A "
           << (report.proportional ? "yes" : "no") << ", m=" << report.certificate.m << " (" << static_cast<long>(secs)
           << " s); ";
  }
  return {ok, detail.str()};
}

Outcome l_minus_one_divisibility() {
  const AJReport& report = aj_report(9);
  const QTorusOperator& odd = odd_annihilator().op;
  const auto start = std::chrono::steady_clock::now();
  const bool s_ok = report.epsilon_S.divisible_by_L_minus_one();
  const bool odd_ok = odd.epsilon().divisible_by_L_minus_one();
  const double secs = seconds_since(start);
  std::ostringstream detail;
  detail << "eps(S) for r=9 " << (s_ok ? "is" : "is not") << " divisible by L-1; eps(odd annihilator) "
         << (odd_ok ? "is" : "is not") << " divisible by L-1; check took " << secs << " s";
  return {s_ok && odd_ok && secs < 1.0, detail.str()};
}

Outcome mirror_closure() {
  const QTorusOperator& odd = odd_annihilator().op;
  const auto start = std::chrono::steady_clock::now();
  const AnnihilationReport report = verify_annihilates(odd.mirror(), *odd_fig8(), index_range(-6, 6));
  const double secs = seconds_since(start);
  std::ostringstream detail;
  detail << "mirror image annihilates the odd subsequence at n=-6..6: " << (report.pass() ? "yes" : "no");
  for (long n : report.failures) detail << " fails at " << n;
  detail << "; check took " << secs << " s";
  return {report.pass() && secs < 1.0, detail.str()};
}

Outcome bounded_nonexistence() {
  const GuessResult result = guess_annihilator(*cable(9), 3, {-8, 8}, index_range(1, 40));
  std::ostringstream detail;
  detail << "bound: L-degree <= 3, M-exponents in [-8,8], coefficients in Q(t), samples n=1..40 plus held-out n="
         << result.holdout.front() << ".." << result.holdout.back() << "; " << result.unknowns
         << " unknowns, rank mod p " << result.rank_mod_p << "; "
         << (result.candidates.empty() ? "no annihilator within the bound" : "candidates found");
  return {result.candidates.empty(), detail.str()};
}

Outcome breadth_quadraticity() {
  const Quadratic q = breadth_fit(*odd_fig8(), index_range(1, 10));
  std::ostringstream detail;
  detail << "br = " << q.a << " n^2 + " << q.b << " n + " << q.c << " on n=1..10";
  return {q == Quadratic{32, 24, 0}, detail.str()};
}

Outcome melvin_morton() {
  std::ostringstream detail;
  bool ok = true;
  for (double z : {0.5, 2.0}) {
    const MMProbeResult result = mm_probe(z, {10, 20, 40});
    const bool this_ok = result.strictly_decreasing() && result.samples.back().error < kMMTolerance;
    ok &= this_ok;
    detail << "z=" << z << " errors";
    for (const auto& s : result.samples) detail << " " << s.error;
    detail << "; ";
  }
  detail << "tolerance " << kMMTolerance << " at n=40 is a chosen value";
  return {ok, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "base-values", 1, base_values},
      {2, "degree-formulas", 60, degree_formulas},
      {3, "cabling-consistency", 60, cabling_consistency},
      {4, "factorization-identity", 1, factorization_identity},
      {5, "inhomogeneous-membership", 60, inhomogeneous_membership},
      {6, "cable-certificates", 2400, main_certificate},
      {7, "l-minus-one-divisibility", 0, l_minus_one_divisibility},
      {8, "mirror-closure", 0, mirror_closure},
      {9, "bounded-nonexistence", 900, bounded_nonexistence},
      {10, "breadth-quadraticity", 60, breadth_quadraticity},
      {11, "melvin-morton-limit", 60, melvin_morton},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    const long id = std::strtol(argv[i], &end, 10);
    if (*end != '\0' || id < 1 || id > static_cast<long>(criteria.size())) {
      std::cerr << "usage: acceptance [1-" << criteria.size() << "]...\n";
      return 2;
    }
    selected.push_back(static_cast<int>(id));
  }
  if (selected.empty())
    for (const auto& c : criteria) selected.push_back(c.id);

  int failures = 0;
  for (int id : selected) {
    const Criterion& c = criteria[static_cast<std::size_t>(id - 1)];
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    const double secs = seconds_since(start);
    // Criteria 7 and 8 time only the check, not the operators they reuse.
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      outcome.pass = false;
      outcome.detail += " [over the " + std::to_string(static_cast<long>(c.budget_seconds)) + " s budget]";
    }
    if (!outcome.pass) ++failures;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (outcome.pass ? "[PASS] " : "[FAIL] ") << (id < 10 ? "0" : "") << id << " " << c.name
         << ": " << outcome.detail << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
