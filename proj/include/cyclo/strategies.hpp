#pragma once

// Alternative ways of computing Phi_n exactly. They exist to cross-check
// phi_poly and to be timed against it.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "cyclo/cyclotomic.hpp"

namespace cyclo {

/// p(x) -> p(x^s).
inline std::vector<Coeff> stretch(const std::vector<Coeff>& p, u64 s) {
  if (s == 0) throw Error(ErrorCode::invalid_argument, "stretch factor must be positive");
  std::vector<Coeff> out(checked::add<std::size_t>(checked::mul<std::size_t>(p.size() - 1, s), 1), 0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * s] = p[i];
  return out;
}

/// Exact quotient of num by a divisor with leading coefficient +-1. Throws if
/// the remainder is nonzero.
inline std::vector<Coeff> exact_divide(std::vector<Coeff> num, const std::vector<Coeff>& den) {
  const std::size_t dd = den.size() - 1;
  const Coeff lead = den.back();
  if (lead != 1 && lead != -1) throw Error(ErrorCode::invalid_argument, "divisor must have unit leading coefficient");
  if (num.size() < den.size()) throw Error(ErrorCode::invalid_argument, "dividend degree below divisor degree");
  std::vector<Coeff> q(num.size() - dd, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Coeff c = checked::mul(num[i + dd], lead);
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j)
      if (den[j] != 0) num[i + j] = checked::sub(num[i + j], checked::mul(c, den[j]));
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw std::logic_error("exact_divide: nonzero remainder");
  return q;
}

/// Builds Phi_n one prime factor at a time from x^n - 1 = prod_{d|n} Phi_d:
/// Phi_{pm}(x) = Phi_m(x^p) / Phi_m(x) when p does not divide m, and
/// Phi_{pm}(x) = Phi_m(x^p) when it does.
inline std::vector<Coeff> phi_by_division(u64 n, const Limits& limits = {}) {
  const auto f = factor(n);
  if (euler_phi(f) > limits.degree_budget)
    throw Error(ErrorCode::degree_budget_exceeded, "phi(" + std::to_string(n) + ") exceeds degree budget");
  std::vector<Coeff> cur = {-1, 1};
  for (const auto& pp : f.factors()) {
    cur = exact_divide(stretch(cur, pp.prime), cur);
    for (std::uint32_t e = 1; e < pp.exponent; ++e) cur = stretch(cur, pp.prime);
  }
  return cur;
}

/// Phi_kappa(n) by the truncated Moebius product, stretched by n / kappa(n).
inline std::vector<Coeff> phi_by_radical(u64 n, const Limits& limits = {}) {
  if (n == 1) return {-1, 1};
  const auto f = factor(n);
  if (euler_phi(f) > limits.degree_budget)
    throw Error(ErrorCode::degree_budget_exceeded, "phi(" + std::to_string(n) + ") exceeds degree budget");
  const u64 kernel = radical(f).value();
  return stretch(phi_poly(kernel, limits).coeffs, n / kernel);
}

inline std::vector<Coeff> phi_by_mobius(u64 n, const Limits& limits = {}) { return phi_poly(n, limits).coeffs; }

struct StrategyTiming {
  std::string name;
  double seconds = 0;
  std::vector<Coeff> result;
};

struct BenchRow {
  u64 n = 0;
  std::size_t degree = 0;
  bool agree = false;
  std::vector<StrategyTiming> timings;
};

inline BenchRow bench_phi(u64 n, const Limits& limits = {}) {
  using clock = std::chrono::steady_clock;
  using Fn = std::vector<Coeff> (*)(u64, const Limits&);
  const std::pair<const char*, Fn> strategies[] = {
      {"division", &phi_by_division},
      {"mobius", &phi_by_mobius},
      {"radical", &phi_by_radical},
  };
  BenchRow row{n, 0, true, {}};
  for (const auto& [name, fn] : strategies) {
    const auto start = clock::now();
    auto result = fn(n, limits);
    const std::chrono::duration<double> elapsed = clock::now() - start;
    row.timings.push_back({name, elapsed.count(), std::move(result)});
  }
  row.degree = row.timings.front().result.size() - 1;
  for (const auto& t : row.timings) row.agree = row.agree && t.result == row.timings.front().result;
  return row;
}

}  // namespace cyclo
