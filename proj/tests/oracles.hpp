#pragma once

// Brute-force references used only by the tests. Nothing here calls into the
// library's computational paths.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  return out;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

inline int mobius(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return 0;
  int sign = 1;
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0 && is_prime(d)) sign = -sign;
  return sign;
}

inline std::uint64_t radical(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0 && is_prime(d)) r *= d;
  return r;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Long division of num by a monic den; throws on a nonzero remainder.
inline Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (den.back() != 1) throw std::logic_error("oracle divisor not monic");
  Poly q(num.size() - dd, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + dd];
    for (std::size_t j = 0; j <= dd; ++j) num[i + j] -= q[i] * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw std::logic_error("oracle division has remainder");
  return q;
}

/// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, memoized.
class PhiByDivision {
 public:
  const Poly& operator()(std::uint64_t n) {
    auto it = memo_.find(n);
    if (it != memo_.end()) return it->second;
    Poly proper = {1};
    for (std::uint64_t d : divisors(n))
      if (d < n) proper = multiply(proper, (*this)(d));
    Poly xn(n + 1, 0);
    xn[0] = -1;
    xn[n] = 1;
    return memo_[n] = divide_exact(xn, proper);
  }

 private:
  std::map<std::uint64_t, Poly> memo_;
};

/// First T coefficients of 1/p by long division of 1 by p (p[0] = +-1).
inline Poly invert_series(const Poly& p, std::size_t T) {
  Poly remainder(T, 0);
  remainder[0] = 1;
  Poly q(T, 0);
  for (std::size_t i = 0; i < T; ++i) {
    q[i] = remainder[i] / p[0];
    for (std::size_t j = 0; j < p.size() && i + j < T; ++j) remainder[i + j] -= q[i] * p[j];
  }
  return q;
}

/// prod over (d, e) of (1 - x^d)^e mod x^T, with e in {+1, -1}, using explicit
/// binomial / geometric expansions and plain convolution.
inline Poly expand_product(const std::vector<std::pair<std::uint64_t, int>>& factors, std::size_t T) {
  Poly acc(T, 0);
  acc[0] = 1;
  for (auto [d, e] : factors) {
    Poly f(T, 0);
    if (e == 1) {
      f[0] = 1;
      if (d < T) f[d] = -1;
    } else {
      for (std::size_t i = 0; i < T; i += d) f[i] = 1;
    }
    Poly next(T, 0);
    for (std::size_t i = 0; i < T; ++i)
      for (std::size_t j = 0; i + j < T; ++j) next[i + j] += acc[i] * f[j];
    acc = next;
  }
  return acc;
}

}  // namespace oracle
