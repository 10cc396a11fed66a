#pragma once

// Empirical look at which values a(mn, k) or c(mn, k) take for small n.

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <thread>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/hunter.hpp"

namespace cyclo {

struct ScanRow {
  Coeff value = 0;
  u64 multiplier = 0;  // n, so the polynomial index is m * n
  u64 index = 0;       // m * n
  u64 k = 0;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// One row per distinct value among the coefficients of index m*n,
/// 1 <= n <= n_max, k <= k_max, with its first occurrence in (n, k) order.
/// For mode c only one period k < m*n is examined.
inline std::vector<ScanRow> scan_values(u64 m, u64 n_max, Mode mode,
                                        u64 k_max = std::numeric_limits<u64>::max(), const Limits& limits = {},
                                        unsigned workers = 0) {
  if (m == 0 || n_max == 0) throw Error(ErrorCode::invalid_argument, "m and nmax must be positive");
  const u64 top = checked::mul(m, n_max);
  if (mode == Mode::a ? euler_phi(factor(top)) > limits.degree_budget : top > limits.degree_budget)
    throw Error(ErrorCode::degree_budget_exceeded, "m * nmax exceeds the degree budget");

  using FirstSeen = std::map<Coeff, ScanRow>;
  auto scan_one = [&](u64 n, FirstSeen& seen) {
    const u64 index = m * n;
    std::vector<Coeff> coeffs;
    if (mode == Mode::a) coeffs = phi_poly(index, limits).coeffs;
    else coeffs = c_table(index, limits).period;
    const u64 end = std::min<u64>(coeffs.size() - 1, k_max);
    for (u64 k = 0; k <= end; ++k) seen.try_emplace(coeffs[k], ScanRow{coeffs[k], n, index, k});
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<u64>(workers, n_max));
  // Worker w takes the contiguous block of n values [lo_w, hi_w]; merging the
  // blocks in order keeps the earliest occurrence.
  std::vector<FirstSeen> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const u64 lo = 1 + n_max * w / workers;
      const u64 hi = n_max * (w + 1) / workers;
      try {
        for (u64 n = lo; n <= hi; ++n) scan_one(n, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  FirstSeen merged;
  for (auto& p : partial)
    for (auto& [value, row] : p) merged.try_emplace(value, row);
  std::vector<ScanRow> out;
  for (auto& [value, row] : merged) out.push_back(row);
  return out;
}

}  // namespace cyclo
