#include <gtest/gtest.h>

#include <random>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/strategies.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

std::vector<Coeff> as_coeffs(const oracle::Poly& p) { return {p.begin(), p.end()}; }

std::vector<Coeff> as_coeffs(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

TEST(PhiPoly, Examples) {
  EXPECT_EQ(phi_poly(1).coeffs, (std::vector<Coeff>{-1, 1}));
  EXPECT_EQ(phi_poly(6).coeffs, (std::vector<Coeff>{1, -1, 1}));
  EXPECT_EQ(phi_poly(105)[7], -2);
  EXPECT_EQ(phi_poly(2).coeffs, (std::vector<Coeff>{1, 1}));
  EXPECT_THROW(phi_poly(0), Error);
}

TEST(PhiPoly, DegreeBudget) {
  Limits tight;
  tight.degree_budget = 10;
  EXPECT_NO_THROW(phi_poly(11, tight));
  try {
    phi_poly(13, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degree_budget_exceeded);
  }
  EXPECT_THROW(psi_poly(11, tight), Error);
}

TEST(PhiPoly, MatchesDivisionOracle) {
  oracle::PhiByDivision div;
  for (u64 n = 1; n <= 300; ++n) ASSERT_EQ(phi_poly(n).coeffs, as_coeffs(div(n))) << n;
}

TEST(PsiPoly, Examples) {
  EXPECT_EQ(psi_poly(1).coeffs, (std::vector<Coeff>{1}));
  EXPECT_EQ(psi_poly(6).coeffs, (std::vector<Coeff>{-1, -1, 0, 1, 1}));
  for (u64 p : {2, 3, 97}) EXPECT_EQ(psi_poly(p).coeffs, (std::vector<Coeff>{-1, 1}));
}

TEST(PsiPoly, ProductWithPhiIsXnMinusOne) {
  for (u64 n = 1; n <= 300; ++n) {
    const auto psi = psi_poly(n);
    ASSERT_EQ(psi.degree(), n - euler_phi(factor(n)));
    const auto phi_coeffs = phi_poly(n).coeffs;
    oracle::Poly phi(phi_coeffs.begin(), phi_coeffs.end());
    oracle::Poly ps(psi.coeffs.begin(), psi.coeffs.end());
    oracle::Poly expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    ASSERT_EQ(oracle::multiply(phi, ps), expect) << n;
  }
}

TEST(ACoeff, Examples) {
  EXPECT_EQ(a_coeff(6, 1), -1);
  for (u64 n : {2, 15, 105, 1024}) EXPECT_EQ(a_coeff(n, 0), 1);
  EXPECT_EQ(a_coeff(105, 7), -2);
  EXPECT_EQ(a_coeff(105, 49), 0);
  EXPECT_EQ(a_coeff(1, 0), -1);
  // Phi_{2^40} = x^{2^39} + 1, reachable through the radical.
  EXPECT_EQ(a_coeff(1ULL << 40, 1ULL << 39), 1);
  EXPECT_EQ(a_coeff(1ULL << 40, 12345), 0);
}

TEST(CTable, Examples) {
  EXPECT_EQ(c_table(1).period, (std::vector<Coeff>{-1}));
  EXPECT_EQ(c_table(6).period, (std::vector<Coeff>{1, 1, 0, -1, -1, 0}));
  EXPECT_EQ(c_table(2).period, (std::vector<Coeff>{1, -1}));
}

TEST(CCoeff, Examples) {
  EXPECT_EQ(c_coeff(3, 43), oracle::invert_series(oracle::Poly{1, 1, 1}, 45)[43]);
  EXPECT_EQ(c_coeff(3, 43), -1);
  EXPECT_EQ(c_coeff(1, 1000000), -1);
  EXPECT_EQ(c_coeff(6, 604), oracle::invert_series(oracle::Poly{1, -1, 1}, 606)[604]);
  EXPECT_EQ(c_coeff(6, 604), -1);
  // 1/Phi_12(x) = 1/Phi_6(x^2)
  EXPECT_EQ(c_coeff(12, 3), 0);
  EXPECT_EQ(c_coeff(12, 8), c_coeff(6, 4));
}

TEST(CTable, PeriodicityAgainstDirectInversion) {
  for (u64 n = 1; n <= 200; ++n) {
    const auto phi = phi_poly(n).coeffs;
    const auto direct = invert(TruncatedSeries(phi, 6 * n + 1));
    const auto table = c_table(n);
    for (u64 k = 0; k <= 5 * n; ++k) {
      ASSERT_EQ(direct[k], direct[k + n]) << n << "," << k;
      ASSERT_EQ(direct[k], table.at(k)) << n << "," << k;
      ASSERT_EQ(c_coeff(n, k), table.at(k));
    }
  }
}

TEST(CTable, TailZeroWindow) {
  for (u64 n = 1; n <= 200; ++n) {
    const auto table = c_table(n);
    const u64 tail_start = n - euler_phi(factor(n));
    for (u64 j = tail_start + 1; j < n; ++j) ASSERT_EQ(table.period[j], 0) << n << "," << j;
  }
}

TEST(PhiPoly, SelfReciprocal) {
  for (u64 n = 2; n <= 500; ++n) {
    const auto p = phi_poly(n);
    EXPECT_EQ(p.coeffs.back(), 1);
    for (std::size_t k = 0; k <= p.degree(); ++k) ASSERT_EQ(p[k], p[p.degree() - k]) << n;
  }
}

TEST(PhiPoly, ProductIdentity) {
  for (u64 n = 1; n <= 300; ++n) {
    oracle::Poly prod = {1};
    for (u64 d : oracle::divisors(n)) {
      const auto c = phi_poly(d).coeffs;
      prod = oracle::multiply(prod, oracle::Poly(c.begin(), c.end()));
    }
    oracle::Poly expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    ASSERT_EQ(prod, expect) << n;
  }
}

TEST(PhiPoly, Stretching) {
  for (u64 n = 1; n <= 500; ++n) {
    for (u64 p : oracle::sieve(n)) {
      if (n % p != 0 || p * n > 500) continue;
      const auto small = phi_poly(n).coeffs;
      const auto big = phi_poly(p * n).coeffs;
      ASSERT_EQ(big.size(), (small.size() - 1) * p + 1);
      for (std::size_t i = 0; i < big.size(); ++i) ASSERT_EQ(big[i], i % p == 0 ? small[i / p] : 0);
    }
  }
}

TEST(PhiTruncated, Examples) {
  EXPECT_EQ(phi_truncated(factor(6), 3), TruncatedSeries({1, -1, 1}, 3));
  const auto s = phi_truncated(factor(3 * 31 * 37 * 43), 86);
  const auto oracle_series = oracle::expand_product({{1, 1}, {3, -1}, {31, -1}, {37, -1}, {43, -1}}, 86);
  EXPECT_EQ(as_coeffs(s), as_coeffs(oracle_series));
  EXPECT_EQ(s[43], 2);
  for (u64 p : {5, 13, 101}) {
    const auto sp = phi_truncated(factor(p), p);
    for (u64 i = 0; i < p; ++i) EXPECT_EQ(sp[i], 1);
  }
  EXPECT_THROW(phi_truncated(FactoredInteger(), 4), Error);
}

TEST(PhiTruncated, ConsistentWithExactPoly) {
  for (u64 n = 2; n <= 200; ++n) {
    const auto exact = phi_poly(n).coeffs;
    for (std::size_t t = 1; t <= exact.size(); ++t) {
      const auto s = phi_truncated(factor(n), t);
      ASSERT_EQ(as_coeffs(s), std::vector<Coeff>(exact.begin(), exact.begin() + static_cast<std::ptrdiff_t>(t)))
          << n << "," << t;
    }
  }
}

TEST(InversePhiTruncated, Examples) {
  EXPECT_EQ(inverse_phi_truncated(factor(6), 8), TruncatedSeries({1, 1, 0, -1, -1, 0, 1, 1}, 8));
  EXPECT_EQ(inverse_phi_truncated(factor(2), 4), TruncatedSeries({1, -1, 1, -1}, 4));
  // (1 - x^3)(1 - x^5)/(1 - x) with q1 = 3, q2 = 5.
  EXPECT_EQ(inverse_phi_truncated(factor(15), 7), TruncatedSeries({1, 1, 1, 0, 0, -1, -1}, 7));
}

TEST(InversePhiTruncated, RandomSquarefreeProductsInvert) {
  const auto primes = oracle::sieve(100);
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<u64> pick = primes;
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.resize(3 + rng() % 3);
    const auto n = FactoredInteger::squarefree(pick);
    const std::size_t t = 1 + rng() % 128;
    ASSERT_EQ(mul(phi_truncated(n, t), inverse_phi_truncated(n, t)), TruncatedSeries::one(t)) << n.to_string();
  }
}

TEST(PhiTruncated, HugeFactoredN) {
  // N far beyond 64 bits; only divisors below T matter.
  std::vector<u64> ps = {3, 31, 37, 43};
  for (u64 p = 1000003; ps.size() < 40; p = next_prime_above(p)) ps.push_back(p);
  const auto n = FactoredInteger::squarefree(ps);
  EXPECT_FALSE(n.try_value().has_value());
  const auto small = FactoredInteger::squarefree({3, 31, 37, 43});
  // 36 extra primes (even count) leave every exponent's sign unchanged.
  EXPECT_EQ(phi_truncated(n, 86), phi_truncated(small, 86));
}

TEST(RadicalReduce, Examples) {
  EXPECT_EQ(radical_reduce(12, 2), (ReducedIndex{6, 1}));
  EXPECT_EQ(a_coeff(12, 2), a_coeff(6, 1));
  EXPECT_EQ(a_coeff(12, 2), -1);
  EXPECT_FALSE(radical_reduce(12, 1).has_value());
  EXPECT_EQ(radical_reduce(30, 7), (ReducedIndex{30, 7}));
  EXPECT_THROW(radical_reduce(1, 0), Error);
}

TEST(RadicalReduce, AgreesWithExactPolynomials) {
  for (u64 n = 2; n <= 400; ++n) {
    const auto p = phi_poly(n);
    for (u64 k = 0; k <= p.degree() + 2; ++k) {
      const auto r = radical_reduce(n, k);
      const Coeff reduced = r ? phi_poly(r->n)[r->k] : 0;
      ASSERT_EQ(p[k], reduced) << n << "," << k;
    }
  }
}

TEST(HeightBounds, SmallOrders) {
  for (u64 n = 2; n < 105; ++n)
    for (Coeff c : phi_poly(n).coeffs) ASSERT_LE(std::abs(c), 1) << n;
  bool seen = false;
  for (Coeff c : phi_poly(105).coeffs) seen = seen || c == -2;
  EXPECT_TRUE(seen);
}

TEST(Strategies, AgreeOnBenchExamples) {
  for (u64 n : {1ULL, 2ULL, 105ULL, 1024ULL * 3, 2ULL * 2 * 3 * 3 * 5 * 7, 3ULL * 5 * 7 * 11 * 13}) {
    const auto row = bench_phi(n);
    EXPECT_TRUE(row.agree) << n;
    EXPECT_EQ(row.timings.size(), 3u);
    EXPECT_EQ(row.degree, euler_phi(factor(n)));
  }
}

TEST(Strategies, DivisionMatchesOracle) {
  oracle::PhiByDivision div;
  for (u64 n = 1; n <= 150; ++n) {
    ASSERT_EQ(phi_by_division(n), as_coeffs(div(n))) << n;
    ASSERT_EQ(phi_by_radical(n), as_coeffs(div(n))) << n;
  }
}

TEST(Strategies, ExactDivideDetectsRemainder) {
  EXPECT_THROW(exact_divide({1, 0, 1}, {1, 1}), std::logic_error);
  EXPECT_EQ(exact_divide({-1, 0, 1}, {1, 1}), (std::vector<Coeff>{-1, 1}));
  EXPECT_EQ(stretch({1, 2}, 3), (std::vector<Coeff>{1, 0, 0, 2}));
}
