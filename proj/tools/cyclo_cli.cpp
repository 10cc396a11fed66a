// cyclo: coefficient queries, certificate hunting and verification, value
// scans and strategy benchmarks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or resource error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclo/cyclo.hpp"

namespace {

using namespace cyclo;

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_error = 2;

Mode parse_mode(const std::string& s) {
  if (s == "a") return Mode::a;
  if (s == "c") return Mode::c;
  throw Error(ErrorCode::invalid_argument, "mode must be 'a' or 'c'");
}

int cmd_coeff(const std::string& kind, u64 n, u64 k, bool json, const Limits& limits) {
  const Mode mode = parse_mode(kind);
  const Coeff value = mode == Mode::a ? a_coeff(n, k, limits) : c_coeff(n, k, limits);
  if (json) std::cout << Json{{"kind", kind}, {"n", n}, {"k", k}, {"value", value}}.dump() << "\n";
  else std::cout << value << "\n";
  return exit_ok;
}

int cmd_hunt(u64 m, Coeff v, const std::string& mode, const std::string& ratio, const std::string& out,
             const Limits& limits) {
  const auto cert = build_certificate(m, v, parse_mode(mode), Ratio::parse(ratio), limits);
  const auto report = verify_certificate(cert, true, limits);
  const CertificateDocument doc{cert, VerificationSummary::of(report)};
  const std::string text = serialize(doc);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(ErrorCode::invalid_argument, "cannot open " + out + " for writing");
    f << text;
    if (!f.flush()) throw Error(ErrorCode::invalid_argument, "failed writing " + out);
  }
  if (!report.pass) {
    std::cerr << "internal error: freshly built certificate failed verification\n";
    return exit_verification_failed;
  }
  return exit_ok;
}

int cmd_verify(const std::string& path, bool full_window, const Limits& limits) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::invalid_argument, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  const auto doc = parse_document(text, limits);
  const auto report = verify_certificate(doc.certificate, full_window, limits);
  std::cout << to_json(report).dump(2) << "\n";
  return report.pass ? exit_ok : exit_verification_failed;
}

int cmd_scan(u64 m, u64 n_max, u64 k_max, const std::string& kind, bool json, const Limits& limits) {
  const Mode mode = parse_mode(kind);
  const auto rows = scan_values(m, n_max, mode, k_max, limits);
  if (json) {
    Json values = Json::array();
    for (const auto& r : rows)
      values.push_back({{"value", r.value}, {"n", r.multiplier}, {"index", r.index}, {"k", r.k}});
    std::cout << Json{{"m", m}, {"nmax", n_max}, {"kind", kind}, {"values", values}}.dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "# " << kind << "(" << m << "n, k), n <= " << n_max << ": " << rows.size() << " distinct values\n";
  std::cout << std::setw(8) << "value" << std::setw(10) << "n" << std::setw(12) << "index" << std::setw(10) << "k"
            << "\n";
  for (const auto& r : rows)
    std::cout << std::setw(8) << r.value << std::setw(10) << r.multiplier << std::setw(12) << r.index
              << std::setw(10) << r.k << "\n";
  return exit_ok;
}

int cmd_bench(const std::vector<u64>& ns, bool json, const Limits& limits) {
  bool all_agree = true;
  Json rows = Json::array();
  if (!json)
    std::cout << std::setw(12) << "n" << std::setw(10) << "degree" << std::setw(12) << "division" << std::setw(12)
              << "mobius" << std::setw(12) << "radical" << std::setw(8) << "agree" << "\n";
  for (u64 n : ns) {
    const auto row = bench_phi(n, limits);
    all_agree = all_agree && row.agree;
    if (json) {
      Json t = Json::object();
      for (const auto& s : row.timings) t[s.name] = s.seconds;
      rows.push_back({{"n", n}, {"degree", row.degree}, {"agree", row.agree}, {"seconds", t}});
    } else {
      std::cout << std::setw(12) << n << std::setw(10) << row.degree;
      for (const auto& s : row.timings) std::cout << std::setw(12) << std::scientific << std::setprecision(2) << s.seconds;
      std::cout << std::setw(8) << (row.agree ? "yes" : "NO") << "\n";
    }
  }
  if (json) std::cout << rows.dump(2) << "\n";
  if (!all_agree) {
    std::cerr << "strategies disagree\n";
    return exit_verification_failed;
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclotomic coefficient queries and self-checking value certificates"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Structured output instead of tables");

  auto* coeff = app.add_subcommand("coeff", "Print a(n,k) or c(n,k)")->fallthrough();
  std::string coeff_kind;
  u64 coeff_n = 0;
  u64 coeff_k = 0;
  coeff->add_option("kind", coeff_kind, "a or c")->required()->check(CLI::IsMember({"a", "c"}));
  coeff->add_option("n", coeff_n)->required()->check(CLI::PositiveNumber);
  coeff->add_option("k", coeff_k)->required();

  auto* hunt = app.add_subcommand("hunt", "Build and self-verify a certificate")->fallthrough();
  u64 hunt_m = 0;
  Coeff hunt_v = 0;
  std::string hunt_mode = "a";
  std::string hunt_ratio = "15/8";
  std::string hunt_out;
  hunt->add_option("--m", hunt_m, "Modulus m (N will be a multiple of m)")->required()->check(CLI::PositiveNumber);
  hunt->add_option("--value", hunt_v, "Target coefficient value")->required()->allow_extra_args(false);
  hunt->add_option("--mode", hunt_mode, "a: a(N,k)=v, c: c(N,k)=v")->check(CLI::IsMember({"a", "c"}));
  hunt->add_option("--ratio", hunt_ratio, "Cluster ratio NUM/DEN in (1,2)");
  hunt->add_option("--out", hunt_out, "Output path (default: standard output)");

  auto* verify = app.add_subcommand("verify", "Independently recheck a certificate")->fallthrough();
  std::string verify_path;
  bool full_window = false;
  verify->add_option("path", verify_path, "Certificate file, or - for standard input")->required();
  verify->add_flag("--full-window", full_window, "Check the window formula at every k in [p_t, 2 p_1)");

  auto* scan = app.add_subcommand("scan", "Distinct coefficient values of index m*n, n <= nmax")->fallthrough();
  u64 scan_m = 0;
  u64 scan_nmax = 0;
  u64 scan_kmax = std::numeric_limits<u64>::max();
  std::string scan_kind = "a";
  scan->add_option("--m", scan_m)->required()->check(CLI::PositiveNumber);
  scan->add_option("--nmax", scan_nmax)->required()->check(CLI::PositiveNumber);
  scan->add_option("--kmax", scan_kmax, "Largest k examined");
  scan->add_option("--kind", scan_kind, "a (default) or c")->check(CLI::IsMember({"a", "c"}));

  auto* bench = app.add_subcommand("bench", "Time and cross-check the exact Phi_n strategies")->fallthrough();
  std::vector<u64> bench_ns;
  bench->add_option("--n", bench_ns, "Comma-separated list of n")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_error;
  }

  try {
    const Limits limits = Limits::from_environment();
    if (*coeff) return cmd_coeff(coeff_kind, coeff_n, coeff_k, json, limits);
    if (*hunt) return cmd_hunt(hunt_m, hunt_v, hunt_mode, hunt_ratio, hunt_out, limits);
    if (*verify) return cmd_verify(verify_path, full_window, limits);
    if (*scan) return cmd_scan(scan_m, scan_nmax, scan_kmax, scan_kind, json, limits);
    if (*bench) return cmd_bench(bench_ns, json, limits);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
