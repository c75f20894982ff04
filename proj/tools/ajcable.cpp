// Command-line front end. Exit codes: 0 all checks pass, 1 a mathematical
// check failed, 2 usage or configuration error.

#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "ajcable/apoly.hpp"
#include "ajcable/probes.hpp"
#include "ajcable/recurrence.hpp"
#include "ajcable/serialize.hpp"

using namespace ajcable;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file '" + path + "'");
    out << text;
  }
  void write(const json& j) const { write(j.dump(2) + "\n"); }
};

std::pair<long, long> parse_range(const std::string& text, const std::string& what) {
  static const std::regex pattern(R"(\s*(-?\d+)\s*:\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError(what + " must look like a:b, got '" + text + "'");
  const long a = std::stol(m[1]), b = std::stol(m[2]);
  if (a > b) throw UsageError(what + " is empty: " + text);
  return {a, b};
}

std::vector<long> parse_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  static const std::regex integer(R"(\s*-?\d+\s*)");
  while (std::getline(ss, item, ',')) {
    if (!std::regex_match(item, integer)) throw UsageError(what + " must be a comma-separated integer list");
    out.push_back(std::stol(item));
  }
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

// "0.5", "-2", "0.5+0.5i", "1-2i", "3i"
std::complex<double> parse_complex(const std::string& text) {
  static const std::regex full(R"(\s*([-+]?[0-9.]+(?:[eE][-+]?\d+)?)\s*([-+]\s*[0-9.]*(?:[eE][-+]?\d+)?)\s*i\s*)");
  static const std::regex real(R"(\s*([-+]?[0-9.]+(?:[eE][-+]?\d+)?)\s*)");
  static const std::regex imag(R"(\s*([-+]?[0-9.]*(?:[eE][-+]?\d+)?)\s*i\s*)");
  auto number = [](std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return std::stod(s);
  };
  std::smatch m;
  try {
    if (std::regex_match(text, m, real)) return {number(m[1]), 0.0};
    if (std::regex_match(text, m, full)) return {number(m[1]), number(m[2])};
    if (std::regex_match(text, m, imag)) return {0.0, number(m[1])};
  } catch (const std::exception&) {
  }
  throw UsageError("cannot parse complex number '" + text + "'");
}

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

json verdict(const std::string& which, long checks, const json& failures, json details = json::object()) {
  json out = {{"which", which}, {"checks", checks}, {"failures", failures}};
  for (auto& [k, v] : details.items()) out[k] = v;
  out["result"] = failures.empty() ? "pass" : "fail";
  return out;
}

struct VerifyArgs {
  std::string which;
  long r = 9;
  long n_max = 10;
  std::string r_list;  // empty: --r for cable-step, the default set for degrees
  std::string csv_path;
};

json run_verify(const VerifyArgs& args, unsigned threads) {
  json failures = json::array();
  long checks = 0;
  if (args.n_max < 1) throw UsageError("--n-max must be positive");
  if (args.which == "factorization") {
    const QTorusOperator defect = factorization_defect();
    ++checks;
    if (!defect.is_zero()) failures.push_back({{"defect", to_json(defect)}});
    return verdict(args.which, checks, failures);
  }
  if (args.which == "cm") {
    FitOptions options;
    options.threads = threads;
    const InhomogeneousFit fit = fit_inhomogeneous_adaptive(cm_operator(), *fig8(), options);
    checks += static_cast<long>(fit.samples_used.size() + fit.verified_on.size());
    // rho(t, 1) / denominator against 2(t^-2 - t^2)
    const LaurentPoly1 at_one = fit.rho.at_M_power(0);
    const LaurentPoly1 expected = LaurentPoly1::monomial(2, -2) - LaurentPoly1::monomial(2, 2);
    ++checks;
    if (at_one != expected * fit.denominator) failures.push_back({{"rho_at_M_1", to_json(at_one)}});
    return verdict(args.which, checks, failures,
                   {{"rho", to_json(fit.rho)},
                    {"denominator", to_json(fit.denominator)},
                    {"window", {fit.window.j_min, fit.window.j_max}},
                    {"verified_on", fit.verified_on}});
  }
  if (args.which == "cable-step") {
    const std::vector<long> rs = args.r_list.empty() ? std::vector<long>{args.r} : parse_list(args.r_list, "--r-list");
    for (long r : rs) {
      require_odd(r);
      const SequencePtr seq = cable(r);
      for (long n = 1; n <= args.n_max; ++n) {
        ++checks;
        if ((*seq)(n) != cable_jones(r, n, *fig8())) failures.push_back({{"r", r}, {"n", n}});
      }
    }
    return verdict(args.which, checks, failures);
  }
  if (args.which == "symmetry") {
    const SequencePtr seq = fig8();
    for (long n = 0; n <= args.n_max; ++n) {
      checks += 2;
      if ((*seq)(-n) != -(*seq)(n)) failures.push_back({{"n", n}, {"property", "odd"}});
      if ((*seq)(n).substitute_power(-1) != (*seq)(n)) failures.push_back({{"n", n}, {"property", "t -> 1/t"}});
    }
    return verdict(args.which, checks, failures);
  }
  if (args.which == "degrees") {
    for (long n = 1; n <= args.n_max; ++n) {
      const Degrees d = degrees(jones_fig8(n));
      checks += 2;
      if (d.plus != degree_oracle(DegreeKind::Fig8Plus, n) || d.minus != degree_oracle(DegreeKind::Fig8Minus, n))
        failures.push_back({{"r", nullptr}, {"n", n}});
    }
    const std::vector<long> rs =
        args.r_list.empty() ? std::vector<long>{5, -5, 7, -7, 9, -9, 11, -11, 13, -13} : parse_list(args.r_list, "--r-list");
    const auto rows = degree_sweep(rs, args.n_max, threads);
    for (const auto& row : rows) {
      checks += 2;
      if (!row.match())
        failures.push_back({{"r", row.r},
                            {"n", row.n},
                            {"dplus", {row.dplus_computed, row.dplus_oracle}},
                            {"dminus", {row.dminus_computed, row.dminus_oracle}}});
    }
    if (!args.csv_path.empty()) Output{args.csv_path}.write(degree_sweep_csv(rows));
    return verdict(args.which, checks, failures);
  }
  if (args.which == "breadth") {
    ++checks;
    const Quadratic q = breadth_fit(*odd_fig8(), index_range(1, std::max(4L, args.n_max)));
    if (!(q == Quadratic{32, 24, 0})) failures.push_back({{"fit", {q.a, q.b, q.c}}});
    return verdict(args.which, checks, failures, {{"fit", {q.a, q.b, q.c}}});
  }
  throw UsageError("unknown suite '" + args.which + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored Jones functions of the figure-eight knot and its (r,2)-cables"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  std::string out_path;
  app.add_option("--threads", threads, "Worker threads for independent index checks")->check(CLI::Range(1U, 256U));
  app.add_option("-o,--out", out_path, "Output file (default stdout)");

  long jones_n = 0;
  std::optional<long> jones_cable;
  bool jones_odd = false;
  std::string jones_format = "json";
  auto* jones = app.add_subcommand("jones", "Print a colored Jones polynomial");
  jones->add_option("--n", jones_n, "Color")->required();
  jones->add_option("--cable", jones_cable, "Odd r: use the (r,2)-cable");
  jones->add_flag("--odd", jones_odd, "Use n -> J(2n+1)");
  jones->add_option("--format", jones_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  long aj_r = 0;
  long aj_n_check = 12;
  std::string aj_cert_path;
  auto* check_aj_cmd = app.add_subcommand("check-aj", "Build S for the (r,2)-cable and compare eps(S) with the A-polynomial");
  check_aj_cmd->add_option("--r", aj_r, "Odd cabling parameter")->required();
  check_aj_cmd->add_option("--n-check", aj_n_check, "Check annihilation on n = 1..N")->check(CLI::PositiveNumber);
  check_aj_cmd->add_option("--cert", aj_cert_path, "Also write the annihilator certificate here");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("--which", verify_args.which, "Suite")
      ->required()
      ->check(CLI::IsMember({"cm", "factorization", "cable-step", "symmetry", "degrees", "breadth"}));
  verify->add_option("--r", verify_args.r, "Odd r (cable-step)");
  verify->add_option("--n-max", verify_args.n_max, "Largest index checked");
  verify->add_option("--r-list", verify_args.r_list, "Comma-separated odd r values");
  verify->add_option("--csv", verify_args.csv_path, "Degree table output (degrees)");

  std::string guess_seq;
  long guess_ldeg = 0;
  std::string guess_window, guess_n;
  std::optional<long> guess_holdout;
  auto* guess = app.add_subcommand("guess", "Bounded search for annihilating operators");
  guess->add_option("--seq", guess_seq, "fig8, odd-fig8, cable:R, qint, const, demo-exp")->required();
  guess->add_option("--ldeg", guess_ldeg, "Largest L-degree")->required()->check(CLI::NonNegativeNumber);
  guess->add_option("--window", guess_window, "M-exponent window a:b")->required();
  guess->add_option("--n", guess_n, "Sample indices a:b")->required();
  guess->add_option("--holdout", guess_holdout, "Held-out indices after the samples")->check(CLI::PositiveNumber);

  auto* probe = app.add_subcommand("probe", "Numeric and combinatorial probes");
  probe->require_subcommand(1);
  std::string mm_z;
  std::string mm_n = "10,20,40";
  auto* probe_mm = probe->add_subcommand("mm", "J_E(n)/[n] against 1/Delta(z)");
  probe_mm->add_option("--z", mm_z, "Complex point, e.g. 0.5 or 0.5+0.5i")->required();
  probe_mm->add_option("--n", mm_n, "Ascending comma-separated colors");
  std::string br_seq = "odd-fig8";
  std::string br_n = "1:10";
  auto* probe_breadth = probe->add_subcommand("breadth", "Exact quadratic fit of the breadth");
  probe_breadth->add_option("--seq", br_seq, "Sequence descriptor");
  probe_breadth->add_option("--n", br_n, "Consecutive indices a:b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  const Output out{out_path};
  try {
    if (*jones) {
      SequencePtr seq = fig8();
      if (jones_cable) seq = cable(*jones_cable);
      if (jones_odd) seq = std::make_shared<OddSubsequence>(seq);
      const LaurentPoly1& value = (*seq)(jones_n);
      if (jones_format == "text")
        out.write(value.to_string("t") + "\n");
      else
        out.write(to_json(value));
      return kPass;
    }
    if (*check_aj_cmd) {
      require_odd(aj_r);
      FitOptions fit;
      fit.threads = threads;
      AJReport report;
      try {
        report = check_aj(aj_r, aj_n_check, fit);
      } catch (const AnnihilationFailure& e) {
        std::cerr << "check-aj: " << e.what() << "\n";
        return kFail;
      }
      out.write(to_json(report));
      if (!aj_cert_path.empty()) Output{aj_cert_path}.write(to_json(report.certificate));
      return report.pass() ? kPass : kFail;
    }
    if (*verify) {
      const json report = run_verify(verify_args, threads);
      out.write(report);
      return report["result"] == "pass" ? kPass : kFail;
    }
    if (*guess) {
      const SequencePtr seq = sequence_from_descriptor(guess_seq);
      const auto [j_min, j_max] = parse_range(guess_window, "--window");
      const auto [n_first, n_last] = parse_range(guess_n, "--n");
      GuessOptions options;
      options.holdout = guess_holdout;
      const GuessResult result =
          guess_annihilator(*seq, guess_ldeg, {j_min, j_max}, index_range(n_first, n_last), options);
      json candidates = json::array();
      for (const auto& op : result.candidates) candidates.push_back(to_json(op));
      std::ostringstream bound;
      bound << "operators sum c_{k,j}(t) M^j L^k with 0 <= k <= " << guess_ldeg << ", " << j_min
            << " <= j <= " << j_max << ", c in Q(t), vanishing at n = " << n_first << ".."
            << result.holdout.back();
      json report = {{"seq", guess_seq},
                     {"ldeg", guess_ldeg},
                     {"window", {j_min, j_max}},
                     {"samples", {n_first, n_last}},
                     {"holdout", {result.holdout.front(), result.holdout.back()}},
                     {"unknowns", result.unknowns},
                     {"rank_mod_p", result.rank_mod_p},
                     {"bound", bound.str()},
                     {"result", result.candidates.empty() ? "none" : "found"},
                     {"candidates", candidates}};
      out.write(report);
      return kPass;
    }
    if (*probe_mm) {
      const MMProbeResult result = mm_probe(parse_complex(mm_z), parse_list(mm_n, "--n"), threads);
      std::ostringstream csv;
      csv << "n,value_re,value_im,target_re,target_im,error\n";
      for (const auto& s : result.samples)
        csv << s.n << ',' << format_double(s.value.real()) << ',' << format_double(s.value.imag()) << ','
            << format_double(result.target.real()) << ',' << format_double(result.target.imag()) << ','
            << format_double(s.error) << '\n';
      out.write(csv.str());
      return kPass;
    }
    if (*probe_breadth) {
      const auto [first, last] = parse_range(br_n, "--n");
      const Quadratic q = breadth_fit(*sequence_from_descriptor(br_seq), index_range(first, last));
      out.write(std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) + "\n");
      return kPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
