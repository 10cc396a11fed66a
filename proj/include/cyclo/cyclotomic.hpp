#pragma once

// Cyclotomic polynomials Phi_n, their cofactors Psi_n = (x^n - 1)/Phi_n, and
// the coefficient sequences a(n,k) of Phi_n and c(n,k) of 1/Phi_n.
//
// Everything is driven by the product form, valid for n > 1,
//
//   Phi_n(x) = prod_{d | n} (1 - x^d)^mu(n/d),
//
// evaluated as a truncated power series. Only divisors below the truncation
// contribute, so Phi_N mod x^T is cheap even when N has hundreds of bits.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo/arith.hpp"
#include "cyclo/limits.hpp"
#include "cyclo/series.hpp"

namespace cyclo {

/// Exact Phi_n; coeffs[k] = a(n,k), length phi(n)+1.
struct CyclotomicPoly {
  u64 n = 1;
  std::vector<Coeff> coeffs;

  std::size_t degree() const noexcept { return coeffs.size() - 1; }
  Coeff operator[](u64 k) const noexcept { return k < coeffs.size() ? coeffs[k] : 0; }
};

/// Exact Psi_n = prod_{d | n, d < n} Phi_d, of degree n - phi(n).
struct PsiPoly {
  u64 n = 1;
  std::vector<Coeff> coeffs;

  std::size_t degree() const noexcept { return coeffs.size() - 1; }
  Coeff operator[](u64 k) const noexcept { return k < coeffs.size() ? coeffs[k] : 0; }
};

/// One period of c(n, .): period[j] = c(n, j) for 0 <= j < n.
struct InverseCoefficientTable {
  u64 n = 1;
  std::vector<Coeff> period;

  Coeff at(u64 k) const noexcept { return period[k % n]; }
};

/// Phi_N mod x^T. N must exceed 1 (the product form fails for Phi_1).
inline TruncatedSeries phi_truncated(const FactoredInteger& n, std::size_t truncation) {
  if (n.is_one()) throw Error(ErrorCode::invalid_argument, "phi_truncated requires N > 1");
  if (truncation == 0) throw Error(ErrorCode::invalid_argument, "truncation must be positive");
  auto s = TruncatedSeries::one(truncation);
  for (auto [d, mu] : mobius_divisors_up_to(n, truncation - 1)) s.apply_one_minus_power(d, mu);
  return s;
}

/// 1/Phi_N mod x^T: the same divisor product with every exponent negated.
inline TruncatedSeries inverse_phi_truncated(const FactoredInteger& n, std::size_t truncation) {
  if (n.is_one()) throw Error(ErrorCode::invalid_argument, "inverse_phi_truncated requires N > 1");
  if (truncation == 0) throw Error(ErrorCode::invalid_argument, "truncation must be positive");
  auto s = TruncatedSeries::one(truncation);
  for (auto [d, mu] : mobius_divisors_up_to(n, truncation - 1)) s.apply_one_minus_power(d, -mu);
  return s;
}

/// Computes the lower half of Phi_n by the truncated product and mirrors it,
/// since Phi_n is self-reciprocal for n > 1.
inline CyclotomicPoly phi_poly(u64 n, const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "phi_poly(0)");
  if (n == 1) return {1, {-1, 1}};
  const auto f = factor(n);
  const u64 deg = euler_phi(f);
  if (deg > limits.degree_budget)
    throw Error(ErrorCode::degree_budget_exceeded,
                "phi(" + std::to_string(n) + ") = " + std::to_string(deg) + " exceeds degree budget " +
                    std::to_string(limits.degree_budget));
  const u64 half = (deg + 1) / 2;
  // One coefficient past the half overlaps the mirrored part and is checked.
  const std::size_t t = static_cast<std::size_t>(std::min(half + 2, deg + 1));
  const auto low = phi_truncated(f, t);

  CyclotomicPoly p{n, std::vector<Coeff>(deg + 1, 0)};
  for (u64 k = 0; k <= half; ++k) p.coeffs[k] = low[k];
  for (u64 k = half + 1; k <= deg; ++k) p.coeffs[k] = p.coeffs[deg - k];
  if (t > half + 1 && low[half + 1] != p.coeffs[half + 1])
    throw std::logic_error("phi_poly: truncated product is not self-reciprocal");
  return p;
}

/// Psi_n mod x^(deg+1) coincides with -1/Phi_n, because
/// 1/Phi_n = -Psi_n (1 + x^n + ...) and deg Psi_n < n.
inline PsiPoly psi_poly(u64 n, const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "psi_poly(0)");
  if (n == 1) return {1, {1}};
  if (n > limits.degree_budget)
    throw Error(ErrorCode::degree_budget_exceeded,
                "psi_poly(" + std::to_string(n) + ") exceeds degree budget " + std::to_string(limits.degree_budget));
  const auto f = factor(n);
  const u64 deg = n - euler_phi(f);
  auto s = inverse_phi_truncated(f, static_cast<std::size_t>(deg + 1));
  s.negate();
  PsiPoly p{n, std::vector<Coeff>(s.coeffs().begin(), s.coeffs().end())};
  if (p.coeffs.back() != 1) throw std::logic_error("psi_poly: cofactor is not monic");
  return p;
}

/// Index reduction Phi_n(x) = Phi_kappa(n)(x^s) with s = n / kappa(n).
/// nullopt means a(n,k) = 0 because s does not divide k.
struct ReducedIndex {
  u64 n = 1;
  u64 k = 0;

  friend bool operator==(const ReducedIndex&, const ReducedIndex&) = default;
};

inline std::optional<ReducedIndex> radical_reduce(u64 n, u64 k) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "radical_reduce requires n > 1");
  const u64 kernel = radical(factor(n)).value();
  const u64 stretch = n / kernel;
  if (k % stretch != 0) return std::nullopt;
  return ReducedIndex{kernel, k / stretch};
}

inline Coeff a_coeff(u64 n, u64 k, const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "a_coeff(0, k)");
  if (n == 1) return k == 0 ? -1 : k == 1 ? 1 : 0;
  const auto r = radical_reduce(n, k);
  if (!r) return 0;
  return phi_poly(r->n, limits)[r->k];
}

inline InverseCoefficientTable c_table(u64 n, const Limits& limits = {}) {
  const auto psi = psi_poly(n, limits);
  InverseCoefficientTable t{n, std::vector<Coeff>(n, 0)};
  for (std::size_t j = 0; j < psi.coeffs.size(); ++j) t.period[j] = checked::neg(psi.coeffs[j]);
  return t;
}

/// c(n,k); non-squarefree n is reduced first since 1/Phi_n(x) = 1/Phi_kappa(x^s).
inline Coeff c_coeff(u64 n, u64 k, const Limits& limits = {}) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "c_coeff(0, k)");
  if (n == 1) return -1;
  const auto r = radical_reduce(n, k);
  if (!r) return 0;
  return c_table(r->n, limits).at(r->k);
}

}  // namespace cyclo
