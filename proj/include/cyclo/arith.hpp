#pragma once

// Elementary multiplicative number theory on machine-width integers, plus
// the factored representation used for moduli too large to expand.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/error.hpp"

namespace cyclo {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimePower {
  u64 prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// An integer held as its prime factorization. The empty factor list is 1.
/// Factors are kept sorted by prime with positive exponents; primality of the
/// entries is not re-checked here (certificate verification does that).
class FactoredInteger {
 public:
  FactoredInteger() = default;

  explicit FactoredInteger(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].prime < 2 || factors_[i].exponent == 0)
        throw Error(ErrorCode::invalid_argument, "factor entries need prime >= 2 and exponent >= 1");
      if (i > 0 && factors_[i - 1].prime >= factors_[i].prime)
        throw Error(ErrorCode::invalid_argument, "factor primes must be strictly increasing");
    }
  }

  /// Product of distinct primes, given in any order.
  static FactoredInteger squarefree(std::vector<u64> primes) {
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> f;
    f.reserve(primes.size());
    for (u64 p : primes) f.push_back({p, 1});
    return FactoredInteger(std::move(f));
  }

  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  std::uint32_t exponent_of(u64 p) const noexcept {
    for (const auto& f : factors_)
      if (f.prime == p) return f.exponent;
    return 0;
  }

  /// Expanded value, or nullopt when it does not fit in 64 bits.
  std::optional<u64> try_value() const noexcept {
    u64 v = 1;
    for (const auto& f : factors_)
      for (std::uint32_t e = 0; e < f.exponent; ++e)
        if (__builtin_mul_overflow(v, f.prime, &v)) return std::nullopt;
    return v;
  }

  u64 value() const {
    auto v = try_value();
    if (!v) throw Error(ErrorCode::arithmetic_overflow, "factored integer exceeds 64 bits");
    return *v;
  }

  /// Number of divisors, prod(e_i + 1).
  u64 divisor_count() const {
    u64 c = 1;
    for (const auto& f : factors_) c = checked::mul<u64>(c, u64{f.exponent} + 1);
    return c;
  }

  /// True iff *this divides other.
  bool divides(const FactoredInteger& other) const noexcept {
    return std::all_of(factors_.begin(), factors_.end(),
                       [&](const PrimePower& f) { return other.exponent_of(f.prime) >= f.exponent; });
  }

  friend FactoredInteger operator*(const FactoredInteger& a, const FactoredInteger& b) {
    std::vector<PrimePower> out;
    out.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->prime < j->prime)) {
        out.push_back(*i++);
      } else if (i == a.factors_.end() || j->prime < i->prime) {
        out.push_back(*j++);
      } else {
        out.push_back({i->prime, checked::add(i->exponent, j->exponent)});
        ++i;
        ++j;
      }
    }
    return FactoredInteger(std::move(out));
  }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& f : factors_) {
      if (!s.empty()) s += "*";
      s += std::to_string(f.prime);
      if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
    }
    return s;
  }

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Trial division with a mod-30 wheel. n must be >= 1.
inline FactoredInteger factor(u64 n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "factor(0)");
  std::vector<PrimePower> out;
  auto strip = [&](u64 p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  strip(5);
  static constexpr std::array<u64, 8> gaps = {4, 2, 4, 2, 4, 6, 2, 6};  // from 7
  u64 p = 7;
  for (std::size_t g = 0; p <= n / p; p += gaps[g], g = (g + 1) % gaps.size()) strip(p);
  if (n > 1) out.push_back({n, 1});
  return FactoredInteger(std::move(out));
}

inline int mobius(const FactoredInteger& n) noexcept {
  for (const auto& f : n.factors())
    if (f.exponent > 1) return 0;
  return n.factors().size() % 2 == 0 ? 1 : -1;
}

inline u64 euler_phi(const FactoredInteger& n) {
  u64 r = 1;
  for (const auto& f : n.factors()) {
    r = checked::mul<u64>(r, f.prime - 1);
    for (std::uint32_t e = 1; e < f.exponent; ++e) r = checked::mul<u64>(r, f.prime);
  }
  return r;
}

/// Squarefree kernel: the same primes with every exponent set to 1.
inline FactoredInteger radical(const FactoredInteger& n) {
  std::vector<PrimePower> out;
  out.reserve(n.factors().size());
  for (const auto& f : n.factors()) out.push_back({f.prime, 1});
  return FactoredInteger(std::move(out));
}

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) noexcept { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) noexcept {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin. The first twelve primes as witnesses are
/// sufficient for every n < 3.3e24, hence for all 64-bit inputs.
inline bool is_prime(u64 n) noexcept {
  static constexpr std::array<u64, 12> witnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 p : witnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : witnesses) {
    u64 x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Smallest prime strictly greater than x.
inline u64 next_prime_above(u64 x) {
  u64 c = x;
  do {
    c = checked::add<u64>(c, 1);
  } while (!is_prime(c));
  return c;
}

/// Exact rational num/den used as the cluster ratio; 1 < num/den < 2.
struct Ratio {
  u64 num = 15;
  u64 den = 8;

  static Ratio make(u64 num, u64 den) {
    Ratio r{num, den};
    if (!r.valid()) throw Error(ErrorCode::invalid_argument, "ratio must satisfy 1 < num/den < 2");
    return r;
  }

  /// Parses "NUM/DEN".
  static Ratio parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw Error(ErrorCode::invalid_argument, "ratio must be NUM/DEN");
    try {
      std::size_t used_num = 0;
      std::size_t used_den = 0;
      const std::string num_text = text.substr(0, slash);
      const std::string den_text = text.substr(slash + 1);
      if (num_text.empty() || den_text.empty() || num_text[0] == '-' || den_text[0] == '-')
        throw std::invalid_argument("sign");
      u64 num = std::stoull(num_text, &used_num);
      u64 den = std::stoull(den_text, &used_den);
      if (used_num != num_text.size() || used_den != den_text.size()) throw std::invalid_argument("junk");
      return make(num, den);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::invalid_argument, "ratio must be NUM/DEN with positive integers");
    }
  }

  bool valid() const noexcept {
    return den > 0 && den < num && u128(num) < u128(den) * 2;
  }

  /// x < ratio * n, compared exactly.
  bool below_times(u64 x, u64 n) const noexcept { return u128(x) * den < u128(n) * num; }

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

inline constexpr u64 default_scan_ceiling = 100'000'000;

struct ClusterQuery {
  u64 modulus = 1;
  std::uint32_t count = 1;
  Ratio ratio{};
  u64 floor_n = 1;
};

struct PrimeCluster {
  u64 n = 0;
  std::vector<u64> primes;

  friend bool operator==(const PrimeCluster&, const PrimeCluster&) = default;
};

/// The defining predicate of a cluster: n < p_1 < ... < p_t < ratio*n, all
/// prime and 1 mod the modulus.
inline bool is_valid_cluster(const PrimeCluster& c, u64 modulus, const Ratio& ratio) {
  if (c.primes.empty() || modulus == 0 || !ratio.valid()) return false;
  if (c.n >= c.primes.front() || !ratio.below_times(c.primes.back(), c.n)) return false;
  for (std::size_t i = 0; i < c.primes.size(); ++i) {
    if (i > 0 && c.primes[i - 1] >= c.primes[i]) return false;
    if (c.primes[i] % modulus != 1 % modulus || !is_prime(c.primes[i])) return false;
  }
  return c.primes.back() < 2 * c.primes.front();
}

/// Smallest n >= floor_n such that (n, ratio*n) holds at least `count` primes
/// congruent to 1 mod `modulus`; returns that n with the `count` smallest such
/// primes. Equivalent to scanning n = floor_n, floor_n+1, ... but jumps
/// directly between the ranges of n sharing the same first prime.
inline PrimeCluster find_prime_cluster(const ClusterQuery& query, u64 ceiling = default_scan_ceiling) {
  if (query.modulus == 0 || query.count == 0 || query.floor_n == 0 || !query.ratio.valid())
    throw Error(ErrorCode::invalid_argument, "invalid prime cluster query");
  const u64 m = query.modulus;
  const Ratio r = query.ratio;

  // Primes p ≡ 1 (mod m) with p > floor_n, generated lazily in order.
  std::vector<u64> primes;
  u64 candidate = 0;
  if (m == 1) {
    candidate = std::max<u64>(query.floor_n + 1, 2);
  } else {
    u64 j = query.floor_n / m + 1;  // 1 + j*m > floor_n
    candidate = checked::add<u64>(checked::mul<u64>(j, m), 1);
  }
  auto ensure = [&](std::size_t count) {
    while (primes.size() < count) {
      if (is_prime(candidate)) primes.push_back(candidate);
      candidate = checked::add<u64>(candidate, m);
    }
  };

  for (std::size_t i = 0;; ++i) {
    ensure(i + query.count);
    // Values of n for which primes[i] is the first admissible prime above n.
    const u64 lo = i == 0 ? query.floor_n : std::max(query.floor_n, primes[i - 1]);
    if (lo > ceiling)
      throw Error(ErrorCode::search_bound_exceeded,
                  "no prime cluster with n <= " + std::to_string(ceiling));
    const u64 last = primes[i + query.count - 1];
    // Smallest n with last < ratio*n, i.e. last*den < n*num.
    const u64 need = static_cast<u64>(u128(last) * r.den / r.num) + 1;
    const u64 n = std::max(lo, need);
    if (n < primes[i]) {
      if (n > ceiling)
        throw Error(ErrorCode::search_bound_exceeded,
                    "no prime cluster with n <= " + std::to_string(ceiling));
      return PrimeCluster{n, std::vector<u64>(primes.begin() + static_cast<std::ptrdiff_t>(i),
                                              primes.begin() + static_cast<std::ptrdiff_t>(i + query.count))};
    }
  }
}

/// Divisors of n not exceeding bound, ascending. Never expands n itself.
inline std::vector<u64> divisors_up_to(const FactoredInteger& n, u64 bound) {
  std::vector<u64> out;
  const auto& f = n.factors();
  auto dfs = [&](auto&& self, std::size_t idx, u64 d) -> void {
    if (idx == f.size()) {
      out.push_back(d);
      return;
    }
    u64 cur = d;
    for (std::uint32_t e = 0;; ++e) {
      self(self, idx + 1, cur);
      if (e == f[idx].exponent || cur > bound / f[idx].prime) break;
      cur *= f[idx].prime;
    }
  };
  if (bound >= 1) dfs(dfs, 0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Divisors d <= bound of n with n/d squarefree, paired with mu(n/d).
/// These are exactly the factors that survive in prod_{d|n} (1-x^d)^mu(n/d).
inline std::vector<std::pair<u64, int>> mobius_divisors_up_to(const FactoredInteger& n, u64 bound) {
  std::vector<std::pair<u64, int>> out;
  const auto& f = n.factors();
  auto dfs = [&](auto&& self, std::size_t idx, u64 d, int mu) -> void {
    if (d > bound) return;
    if (idx == f.size()) {
      out.emplace_back(d, mu);
      return;
    }
    const u64 p = f[idx].prime;
    // d's exponent is e-1 (p divides n/d once) or e (it does not).
    u64 base = d;
    for (std::uint32_t e = 1; e < f[idx].exponent; ++e) {
      if (base > bound / p) return;
      base *= p;
    }
    self(self, idx + 1, base, -mu);
    if (base <= bound / p) self(self, idx + 1, base * p, mu);
  };
  dfs(dfs, 0, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cyclo
