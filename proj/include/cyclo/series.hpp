#pragma once

// Integer power series truncated mod x^T with overflow-checked coefficients.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/error.hpp"

namespace cyclo {

using Coeff = std::int64_t;

class TruncatedSeries {
 public:
  /// The zero series mod x^truncation.
  explicit TruncatedSeries(std::size_t truncation) : coeffs_(truncation, 0) {
    if (truncation == 0) throw Error(ErrorCode::invalid_argument, "truncation must be positive");
  }

  /// Takes the first `truncation` entries of coeffs, zero-padding as needed.
  TruncatedSeries(std::span<const Coeff> coeffs, std::size_t truncation) : TruncatedSeries(truncation) {
    for (std::size_t i = 0; i < truncation && i < coeffs.size(); ++i) coeffs_[i] = coeffs[i];
  }

  TruncatedSeries(std::initializer_list<Coeff> coeffs, std::size_t truncation)
      : TruncatedSeries(std::span<const Coeff>(coeffs.begin(), coeffs.size()), truncation) {}

  static TruncatedSeries one(std::size_t truncation) {
    TruncatedSeries s(truncation);
    s.coeffs_[0] = 1;
    return s;
  }

  std::size_t truncation() const noexcept { return coeffs_.size(); }
  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  Coeff operator[](std::size_t i) const { return coeffs_.at(i); }

  /// In-place multiplication by (1 - x^d) for sign = +1, division by it for
  /// sign = -1. O(T) either way.
  TruncatedSeries& apply_one_minus_power(std::size_t d, int sign) {
    if (d == 0) throw Error(ErrorCode::invalid_argument, "apply_one_minus_power needs d >= 1");
    const std::size_t t = coeffs_.size();
    if (sign == 1) {
      for (std::size_t i = t; i-- > d;) coeffs_[i] = checked::sub(coeffs_[i], coeffs_[i - d]);
    } else if (sign == -1) {
      for (std::size_t i = d; i < t; ++i) coeffs_[i] = checked::add(coeffs_[i], coeffs_[i - d]);
    } else {
      throw Error(ErrorCode::invalid_argument, "sign must be +1 or -1");
    }
    return *this;
  }

  TruncatedSeries& negate() {
    for (auto& c : coeffs_) c = checked::neg(c);
    return *this;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      if (!s.empty()) s += coeffs_[i] < 0 ? " - " : " + ";
      else if (coeffs_[i] < 0) s += "-";
      const Coeff a = coeffs_[i] < 0 ? -coeffs_[i] : coeffs_[i];
      if (a != 1 || i == 0) s += std::to_string(a);
      if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return (s.empty() ? "0" : s) + " mod x^" + std::to_string(coeffs_.size());
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Coeff> coeffs_;
};

inline TruncatedSeries apply_one_minus_power(TruncatedSeries a, std::size_t d, int sign) {
  a.apply_one_minus_power(d, sign);
  return a;
}

/// Schoolbook convolution truncated to T.
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.truncation() != b.truncation()) throw Error(ErrorCode::invalid_argument, "truncation mismatch");
  const std::size_t t = a.truncation();
  std::vector<Coeff> out(t, 0);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  for (std::size_t i = 0; i < t; ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; i + j < t; ++j)
      if (bc[j] != 0) out[i + j] = checked::add(out[i + j], checked::mul(ac[i], bc[j]));
  }
  return TruncatedSeries(out, t);
}

/// Reciprocal of a series whose constant term is +1 or -1.
inline TruncatedSeries invert(const TruncatedSeries& a) {
  const auto ac = a.coeffs();
  const Coeff a0 = ac[0];
  if (a0 != 1 && a0 != -1) throw Error(ErrorCode::non_unit_constant_term, "constant term must be +1 or -1");
  const std::size_t t = a.truncation();
  std::vector<Coeff> b(t, 0);
  b[0] = a0;
  for (std::size_t i = 1; i < t; ++i) {
    Coeff acc = 0;
    for (std::size_t j = 1; j <= i; ++j)
      if (ac[j] != 0 && b[i - j] != 0) acc = checked::add(acc, checked::mul(ac[j], b[i - j]));
    // a0 * b_i = -acc, and a0 is its own inverse.
    b[i] = checked::mul(checked::neg(acc), a0);
  }
  return TruncatedSeries(b, t);
}

}  // namespace cyclo
