#pragma once

// Constructive witnesses for "every integer v occurs as a(N,k) (or c(N,k))
// with m | N".
//
// For squarefree m > 1 take t primes p_1 < ... < p_t, all 1 mod m, inside
// (n, r*n) with r < 2, so that p_t < 2 p_1. Let M be their product, times one
// more prime q > 2 p_1 when needed to force mu(M) = -1 (target a) or
// mu(M) = +1 (target c). Modulo x^(2 p_1) only the divisors of m and the p_j
// survive in the product form, which gives
//
//   Phi_{mM}(x)    (mode a)  }
//   1/Phi_{mM}(x)  (mode c)  }  = (1/Phi_m(x)) (1 - mu(m)(x^p_1 + ... + x^p_t))
//
// and, because c(m, .) has period m and p_j = 1 (mod m),
//
//   coeff_k = c(m,k) - mu(m) t c(m,k-1)   for p_t <= k < 2 p_1.
//
// The planner picks (t, delta) with k = p_t + delta so that this equals v.
// Non-squarefree m is handled through Phi_{Ns}(x) = Phi_N(x^s).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "cyclo/arith.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/limits.hpp"

namespace cyclo {

enum class Mode { a, c };

constexpr std::string_view to_string(Mode m) noexcept { return m == Mode::a ? "a" : "c"; }

struct TargetPlan {
  u64 kernel = 0;
  int mu_kernel = 0;
  u64 t = 0;
  u64 delta = 0;
  Coeff predicted_value = 0;
  std::optional<u64> q1;
  std::optional<u64> q2;

  friend bool operator==(const TargetPlan&, const TargetPlan&) = default;
};

struct Certificate {
  Mode mode = Mode::a;
  u64 m_original = 0;
  Coeff v = 0;
  TargetPlan plan;
  PrimeCluster cluster;
  std::optional<u64> q;
  FactoredInteger N;
  u64 k = 0;
  u64 stretch = 1;
  FactoredInteger N_lifted;
  u64 k_lifted = 0;
  u64 truncation = 0;
  Ratio ratio;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class Reason {
  malformed,
  structure,
  primality,
  congruence,
  cluster_bounds,
  q_bound,
  parity,
  coprimality,
  window,
  lift_divisibility,
  value_mismatch,
  window_mismatch,
  lift_mismatch,
};

constexpr std::string_view to_string(Reason r) noexcept {
  switch (r) {
    case Reason::malformed: return "malformed";
    case Reason::structure: return "structure";
    case Reason::primality: return "primality";
    case Reason::congruence: return "congruence";
    case Reason::cluster_bounds: return "cluster-bounds";
    case Reason::q_bound: return "q-bound";
    case Reason::parity: return "parity";
    case Reason::coprimality: return "coprimality";
    case Reason::window: return "window";
    case Reason::lift_divisibility: return "lift-divisibility";
    case Reason::value_mismatch: return "value-mismatch";
    case Reason::window_mismatch: return "window-mismatch";
    case Reason::lift_mismatch: return "lift-mismatch";
  }
  return "unknown";
}

inline std::optional<Reason> reason_from_string(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(Reason::lift_mismatch); ++i)
    if (to_string(static_cast<Reason>(i)) == s) return static_cast<Reason>(i);
  return std::nullopt;
}

struct Failure {
  Reason reason = Reason::malformed;
  std::string detail;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  Certificate certificate;
  Coeff computed_value = 0;
  bool window_checked = false;
  bool lift_checked = false;
  bool pass = false;
  std::vector<Failure> failures;

  bool has(Reason r) const noexcept {
    return std::any_of(failures.begin(), failures.end(), [r](const Failure& f) { return f.reason == r; });
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// c(kernel, k) - mu * t * c(kernel, k - 1), with k >= 1.
inline Coeff window_value(const InverseCoefficientTable& table, int mu, u64 t, u64 k) {
  const Coeff scaled = checked::mul(checked::mul<Coeff>(mu, static_cast<Coeff>(t)), table.at(k - 1));
  return checked::sub(table.at(k), scaled);
}

/// Smallest t >= 1, then smallest delta in [0, kernel), such that the window
/// value at k = p_t + delta (k = 1 + delta mod kernel) is v with
/// c(kernel, delta) != 0. The mode does not enter: both modes share the same
/// window series.
inline TargetPlan plan_target(u64 m, Coeff v, Mode mode, const Limits& limits = {}) {
  (void)mode;
  if (m == 0) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  const auto kf = radical(factor(m));
  const u64 kernel = kf.value();
  if (kernel < 2) throw Error(ErrorCode::invalid_argument, "plan_target needs a kernel >= 2");
  const int mu = mobius(kf);
  const auto table = c_table(kernel, limits);

  Coeff height = 0;
  for (Coeff c : table.period) height = std::max(height, c < 0 ? checked::neg(c) : c);
  const u64 abs_v = v < 0 ? u64(0) - static_cast<u64>(v) : static_cast<u64>(v);
  // With |c(kernel,delta)| >= 1 the window value has magnitude >= t - height.
  const u64 t_max = checked::add<u64>(checked::add<u64>(abs_v, static_cast<u64>(height)), 1);

  TargetPlan plan{kernel, mu, 0, 0, v, std::nullopt, std::nullopt};
  if (mu == 1) {
    plan.q1 = kf.factors()[0].prime;
    plan.q2 = kf.factors()[1].prime;
  }
  for (u64 t = 1; t <= t_max; ++t) {
    for (u64 delta = 0; delta < kernel; ++delta) {
      if (table.at(delta) == 0) continue;
      if (window_value(table, mu, t, delta + 1) == v) {
        plan.t = t;
        plan.delta = delta;
        return plan;
      }
    }
  }
  throw Error(ErrorCode::no_plan_found, "no (t, delta) reaches " + std::to_string(v) + " for kernel " +
                                             std::to_string(kernel));
}

/// Lifts (N, k) from the kernel to the original modulus:
/// Phi_{Ns}(x) = Phi_N(x^s) (and likewise for 1/Phi) when every prime of s divides N.
inline std::pair<FactoredInteger, u64> lift_to_modulus(const Certificate& cert) {
  return {cert.N * factor(cert.stretch), checked::mul(cert.k, cert.stretch)};
}

inline u64 ceil_div(u64 a, u64 b) { return a / b + (a % b != 0); }

inline Certificate build_certificate(u64 m, Coeff v, Mode mode, Ratio ratio = {}, const Limits& limits = {}) {
  if (m == 0) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  if (!ratio.valid()) throw Error(ErrorCode::invalid_argument, "ratio must satisfy 1 < r < 2");
  // Every multiple of 2 is a multiple of 1.
  const u64 working = m == 1 ? 2 : m;
  const auto mf = factor(m);
  const auto kernel_f = radical(factor(working));

  Certificate cert;
  cert.mode = mode;
  cert.m_original = m;
  cert.v = v;
  cert.ratio = ratio;
  cert.stretch = m / radical(mf).value();
  cert.plan = plan_target(working, v, mode, limits);

  // p_1 > n and p_t < r n give 2 p_1 - p_t > (2 - r) n, so n >= x / (2 - r)
  // guarantees p_t + x < 2 p_1.
  const u64 gap = 2 * ratio.den - ratio.num;
  u64 floor_n = std::max<u64>(1, ceil_div(checked::mul(cert.plan.delta, ratio.den), gap));
  if (cert.plan.q2) floor_n = std::max(floor_n, ceil_div(checked::mul(*cert.plan.q2, ratio.den), gap));

  const auto t = static_cast<std::uint32_t>(cert.plan.t);
  for (;;) {
    cert.cluster = find_prime_cluster({cert.plan.kernel, t, ratio, floor_n}, limits.scan_ceiling);
    if (cert.cluster.primes.back() + cert.plan.delta < 2 * cert.cluster.primes.front()) break;
    floor_n = cert.cluster.n + 1;
  }

  const u64 p1 = cert.cluster.primes.front();
  const bool t_even = cert.plan.t % 2 == 0;
  std::vector<u64> cofactor = cert.cluster.primes;
  if ((mode == Mode::a) == t_even) {
    cert.q = next_prime_above(checked::mul<u64>(2, p1));
    cofactor.push_back(*cert.q);
  }
  cert.N = kernel_f * FactoredInteger::squarefree(std::move(cofactor));
  cert.k = cert.cluster.primes.back() + cert.plan.delta;
  cert.truncation = 2 * p1;
  std::tie(cert.N_lifted, cert.k_lifted) = lift_to_modulus(cert);
  return cert;
}

/// Window-formula prediction for every k in [p_t, 2 p_1), indexed by k - p_t.
inline std::vector<Coeff> predict_window(const Certificate& cert, const Limits& limits = {}) {
  const auto table = c_table(cert.plan.kernel, limits);
  const u64 first = cert.cluster.primes.back();
  const u64 end = 2 * cert.cluster.primes.front();
  std::vector<Coeff> out;
  for (u64 k = first; k < end; ++k) out.push_back(window_value(table, cert.plan.mu_kernel, cert.plan.t, k));
  return out;
}

namespace detail {

inline TruncatedSeries target_series(Mode mode, const FactoredInteger& n, std::size_t truncation) {
  return mode == Mode::a ? phi_truncated(n, truncation) : inverse_phi_truncated(n, truncation);
}

inline void check_structure(const Certificate& c, std::vector<Failure>& out) {
  auto fail = [&](Reason r, std::string detail) { out.push_back({r, std::move(detail)}); };
  const auto& primes = c.cluster.primes;
  const u64 p1 = primes.front();
  const u64 pt = primes.back();
  const u64 kernel = c.plan.kernel;

  // Modulus bookkeeping.
  const u64 working = c.m_original == 1 ? 2 : c.m_original;
  const auto kernel_f = radical(factor(working));
  if (kernel != kernel_f.value()) fail(Reason::structure, "kernel is not the squarefree kernel of m");
  if (c.plan.mu_kernel != mobius(kernel_f)) fail(Reason::structure, "mu_kernel disagrees with kernel");
  if (c.stretch != c.m_original / radical(factor(c.m_original)).value())
    fail(Reason::structure, "stretch is not m / kappa(m)");
  if (c.plan.t != primes.size()) fail(Reason::structure, "t differs from the number of cluster primes");
  if (!c.ratio.valid()) fail(Reason::structure, "ratio outside (1, 2)");
  if (c.truncation != 2 * p1) fail(Reason::structure, "truncation is not 2 p_1");
  for (std::size_t i = 1; i < primes.size(); ++i)
    if (primes[i - 1] >= primes[i]) fail(Reason::structure, "cluster primes not strictly increasing");

  for (u64 p : primes)
    if (!is_prime(p)) fail(Reason::primality, std::to_string(p) + " is not prime");
  if (c.q && !is_prime(*c.q)) fail(Reason::primality, "q = " + std::to_string(*c.q) + " is not prime");

  for (u64 p : primes)
    if (p % kernel != 1) fail(Reason::congruence, std::to_string(p) + " is not 1 mod " + std::to_string(kernel));

  if (c.ratio.valid() && !(c.cluster.n < p1 && c.ratio.below_times(pt, c.cluster.n)))
    fail(Reason::cluster_bounds, "primes not inside (n, r n)");
  if (pt >= 2 * p1) fail(Reason::cluster_bounds, "p_t >= 2 p_1");

  if (c.q && *c.q <= 2 * p1) fail(Reason::q_bound, "q <= 2 p_1");
  const bool want_q = (c.mode == Mode::a) == (primes.size() % 2 == 0);
  if (want_q != c.q.has_value())
    fail(Reason::parity, c.mode == Mode::a ? "mu(m_1) != -1" : "mu(m_1) != +1");

  for (u64 p : primes)
    if (std::gcd(p, kernel) != 1) fail(Reason::coprimality, std::to_string(p) + " shares a factor with m");
  if (c.q) {
    if (std::gcd(*c.q, kernel) != 1) fail(Reason::coprimality, "q shares a factor with m");
    if (std::find(primes.begin(), primes.end(), *c.q) != primes.end())
      fail(Reason::coprimality, "q repeats a cluster prime");
  }

  std::vector<u64> cofactor = primes;
  if (c.q) cofactor.push_back(*c.q);
  std::sort(cofactor.begin(), cofactor.end());
  if (std::adjacent_find(cofactor.begin(), cofactor.end()) == cofactor.end()) {
    if (c.N != kernel_f * FactoredInteger::squarefree(cofactor))
      fail(Reason::structure, "N is not kernel * p_1 ... p_t [* q]");
  } else {
    fail(Reason::structure, "repeated prime in p_1 ... p_t [* q]");
  }

  if (c.k < pt || c.k >= 2 * p1) fail(Reason::window, "k outside [p_t, 2 p_1)");

  if (c.N_lifted != c.N * factor(c.stretch)) fail(Reason::structure, "N_lifted is not N * stretch");
  u64 k_lifted = 0;
  if (__builtin_mul_overflow(c.k, c.stretch, &k_lifted) || k_lifted != c.k_lifted)
    fail(Reason::structure, "k_lifted is not k * stretch");
  if (!factor(c.m_original).divides(c.N_lifted)) fail(Reason::lift_divisibility, "m does not divide N_lifted");
}

}  // namespace detail

/// Rechecks a certificate from scratch. The claimed coefficient is read off
/// the truncated divisor product of N, which shares nothing with the planner.
inline VerificationReport verify_certificate(const Certificate& cert, bool full_window, const Limits& limits = {}) {
  VerificationReport report;
  report.certificate = cert;
  auto& failures = report.failures;
  try {
    if (cert.cluster.primes.empty() || cert.m_original == 0 || cert.plan.kernel < 2 || cert.stretch == 0)
      throw Error(ErrorCode::invalid_argument, "missing primes, modulus, kernel or stretch");
    if (cert.N.is_one()) throw Error(ErrorCode::invalid_argument, "N = 1");
    detail::check_structure(cert, failures);

    const u64 p1 = cert.cluster.primes.front();
    const u64 pt = cert.cluster.primes.back();
    const u64 truncation = std::max(checked::mul<u64>(2, p1), checked::add<u64>(cert.k, 1));
    if (truncation > limits.degree_budget)
      throw Error(ErrorCode::degree_budget_exceeded, "truncation exceeds degree budget");
    const auto series = detail::target_series(cert.mode, cert.N, static_cast<std::size_t>(truncation));
    report.computed_value = series[cert.k];
    if (report.computed_value != cert.v)
      failures.push_back({Reason::value_mismatch, "coefficient " + std::to_string(cert.k) + " is " +
                                                      std::to_string(report.computed_value) + ", expected " +
                                                      std::to_string(cert.v)});

    if (full_window && pt < 2 * p1 && cert.plan.kernel <= limits.degree_budget) {
      const auto predicted = predict_window(cert, limits);
      for (u64 k = pt; k < 2 * p1; ++k) {
        if (predicted[k - pt] != series[k]) {
          failures.push_back({Reason::window_mismatch, "window formula fails at k = " + std::to_string(k)});
          break;
        }
      }
      report.window_checked = true;
    }

    if (cert.stretch == 1) {
      report.lift_checked = cert.N_lifted == cert.N && cert.k_lifted == cert.k;
    } else if (cert.k_lifted < limits.degree_budget && !cert.N_lifted.is_one()) {
      const auto lifted =
          detail::target_series(cert.mode, cert.N_lifted, static_cast<std::size_t>(cert.k_lifted + 1));
      if (lifted[cert.k_lifted] != report.computed_value)
        failures.push_back({Reason::lift_mismatch, "lifted coefficient differs"});
      report.lift_checked = true;
    }
  } catch (const Error& e) {
    failures.push_back({Reason::malformed, e.what()});
  }
  report.pass = failures.empty();
  return report;
}

}  // namespace cyclo
