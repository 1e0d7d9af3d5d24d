#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "float_oracle.hpp"
#include "rtfin/cyclotomic.hpp"
#include "rtfin/errors.hpp"
#include "rtfin/number_theory.hpp"

using rtfin::CyclotomicInteger;
using rtfin::EmbeddingIndex;
using rtfin::Sign;

namespace {

std::vector<std::int64_t> to_vec(const CyclotomicInteger& x) {
  return {x.coeffs().begin(), x.coeffs().end()};
}

CyclotomicInteger random_element(std::mt19937_64& rng, int N, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  std::vector<std::int64_t> raw(static_cast<std::size_t>(rtfin::nt::euler_phi(N)));
  for (auto& v : raw) v = coeff(rng);
  return CyclotomicInteger::reduce(raw, N);
}

// Value of sum raw[j] z^j for an unreduced coefficient list.
std::complex<double> eval_raw(std::span<const std::int64_t> raw, std::complex<double> z) {
  std::complex<double> acc = 0, pw = 1;
  for (auto c : raw) {
    acc += static_cast<double>(c) * pw;
    pw *= z;
  }
  return acc;
}

}  // namespace

TEST(Cyclotomic, PolynomialsOfSmallOrder) {
  EXPECT_EQ(rtfin::cyclotomic_polynomial(10), (std::vector<std::int64_t>{1, -1, 1, -1, 1}));
  EXPECT_EQ(rtfin::cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(rtfin::cyclotomic_polynomial(7), (std::vector<std::int64_t>(7, 1)));
  for (int N : {3, 5, 10, 14, 20, 28, 44, 105}) {
    EXPECT_EQ(rtfin::cyclotomic_polynomial(N).size(),
              static_cast<std::size_t>(rtfin::nt::euler_phi(N)) + 1);
  }
}

TEST(Cyclotomic, PolynomialVanishesAtPrimitiveRoots) {
  for (int N : {10, 14, 20, 28, 60}) {
    const auto& phi = rtfin::cyclotomic_polynomial(N);
    for (int t = 1; t < N; ++t) {
      if (std::gcd(t, N) != 1) continue;
      EXPECT_LT(std::abs(eval_raw(phi, oracle::root_of_unity(t, N))), 1e-9) << N << " " << t;
    }
  }
}

TEST(Cyclotomic, ReduceExamples) {
  const std::vector<std::int64_t> a{0, 1};
  EXPECT_EQ(to_vec(rtfin::reduce(a, 10)), (std::vector<std::int64_t>{0, 1, 0, 0}));
  const std::vector<std::int64_t> a4{0, 0, 0, 0, 1};
  EXPECT_EQ(to_vec(rtfin::reduce(a4, 10)), (std::vector<std::int64_t>{-1, 1, -1, 1}));
  const std::vector<std::int64_t> five{5};
  EXPECT_EQ(to_vec(rtfin::reduce(five, 14)), (std::vector<std::int64_t>{5, 0, 0, 0, 0, 0}));
}

TEST(Cyclotomic, MultiplyExamples) {
  std::mt19937_64 rng(7);
  for (int N : {10, 14, 20}) {
    const auto x = random_element(rng, N);
    EXPECT_EQ(rtfin::multiply(CyclotomicInteger::constant(1, N), x), x);
    const int d = rtfin::nt::euler_phi(N);
    EXPECT_EQ(CyclotomicInteger::monomial(1, N) * CyclotomicInteger::monomial(d - 1, N),
              CyclotomicInteger::monomial(d, N));
  }
  const auto A = CyclotomicInteger::monomial(1, 10);
  const auto one = CyclotomicInteger::constant(1, 10);
  EXPECT_EQ(to_vec((A - one) * (A + one)), (std::vector<std::int64_t>{-1, 0, 1, 0}));
}

TEST(Cyclotomic, MismatchedModuliRejected) {
  const auto x = CyclotomicInteger::constant(1, 10);
  const auto y = CyclotomicInteger::constant(1, 14);
  EXPECT_THROW(x * y, rtfin::UsageError);
  EXPECT_THROW(x + y, rtfin::UsageError);
}

TEST(Cyclotomic, ConjugateExamples) {
  EXPECT_EQ(CyclotomicInteger::constant(3, 10).conjugate(), CyclotomicInteger::constant(3, 10));
  EXPECT_EQ(CyclotomicInteger::monomial(1, 10).conjugate(), CyclotomicInteger::monomial(9, 10));
  EXPECT_EQ(to_vec(CyclotomicInteger::monomial(1, 10).conjugate()),
            (std::vector<std::int64_t>{1, -1, 1, -1}));
}

TEST(Cyclotomic, TraceExamples) {
  EXPECT_EQ(CyclotomicInteger::constant(1, 10).trace(), 4);
  EXPECT_EQ(CyclotomicInteger::monomial(1, 10).trace(), 1);
  EXPECT_EQ(CyclotomicInteger::monomial(5, 10).trace(), -4);

  // Brute-force sum over the Galois orbit.
  for (int N : {10, 12, 20, 28, 36}) {
    for (int m = 0; m < 2 * N; ++m) {
      double s = 0;
      for (int t = 1; t < N; ++t) {
        if (std::gcd(t, N) == 1) s += oracle::root_of_unity(static_cast<long long>(m) * t, N).real();
      }
      EXPECT_EQ(rtfin::ramanujan_sum(m, N), std::llround(s)) << "N=" << N << " m=" << m;
    }
  }
}

TEST(Cyclotomic, SinSignExamples) {
  EXPECT_EQ(rtfin::sin_sign(0, 7), Sign::Zero);
  EXPECT_EQ(rtfin::sin_sign(9, 10), Sign::Negative);
  EXPECT_EQ(rtfin::sin_sign(2, 5), Sign::Positive);
  EXPECT_EQ(rtfin::sin_sign(-2, 5), Sign::Negative);
  EXPECT_EQ(rtfin::sin_sign(5, 10), Sign::Zero);
}

TEST(Cyclotomic, SinSignMatchesFloat) {
  for (int p = 3; p <= 60; ++p) {
    for (int m = -3 * p; m <= 3 * p; ++m) {
      const double s = std::sin(2.0 * std::numbers::pi * m / p);
      if (std::abs(s) <= 1e-9) {
        EXPECT_EQ(rtfin::sin_sign(m, p), Sign::Zero) << m << "/" << p;
      } else {
        EXPECT_EQ(rtfin::sin_sign(m, p), s > 0 ? Sign::Positive : Sign::Negative) << m << "/" << p;
      }
    }
  }
}

TEST(Cyclotomic, Embeddings) {
  auto ks = [](int p) {
    std::vector<int> out;
    for (const auto& e : rtfin::embeddings(p)) out.push_back(e.k());
    return out;
  };
  EXPECT_EQ(ks(5), (std::vector<int>{1, 3}));
  EXPECT_EQ(ks(10), (std::vector<int>{1, 3, 7, 9}));
  EXPECT_EQ(ks(14), (std::vector<int>{1, 3, 5, 9, 11, 13}));
  for (int p = 3; p <= 40; ++p) {
    const auto e = rtfin::embeddings(p);
    EXPECT_EQ(e.size() * 2, static_cast<std::size_t>(rtfin::nt::euler_phi(2 * p)));
    for (const auto& k : e) {
      EXPECT_TRUE(k.canonical());
      EXPECT_EQ(std::gcd(k.k(), 2 * p), 1);
      EXPECT_FALSE(k.conjugate().canonical());
    }
  }
  EXPECT_THROW(EmbeddingIndex(2, 5), rtfin::UsageError);
  EXPECT_THROW(EmbeddingIndex(5, 5), rtfin::UsageError);
  EXPECT_THROW(EmbeddingIndex(0, 5), rtfin::UsageError);
}

TEST(CyclotomicProperty, RingLaws) {
  std::mt19937_64 rng(11);
  for (int N : {10, 14, 20, 28}) {
    for (int t = 0; t < 50; ++t) {
      const auto x = random_element(rng, N), y = random_element(rng, N), z = random_element(rng, N);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_TRUE((x - x).is_zero());
    }
  }
}

TEST(CyclotomicProperty, ConjugationAndTrace) {
  std::mt19937_64 rng(13);
  for (int N : {10, 14, 20, 28}) {
    for (int t = 0; t < 50; ++t) {
      const auto x = random_element(rng, N), y = random_element(rng, N);
      EXPECT_EQ(x.conjugate().conjugate(), x);
      EXPECT_EQ((x * y).conjugate(), x.conjugate() * y.conjugate());
      EXPECT_EQ((x + y).trace(), x.trace() + y.trace());
      EXPECT_EQ(x.conjugate().trace(), x.trace());
      const auto n = (x * x.conjugate()).trace();
      if (x.is_zero()) {
        EXPECT_EQ(n, 0);
      } else {
        EXPECT_GT(n, 0);
      }
    }
  }
}

TEST(CyclotomicProperty, FloatEvaluationConsistent) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int p : {5, 7, 10, 14}) {
    const int N = 2 * p;
    for (int t = 0; t < 30; ++t) {
      // Unreduced raw polynomial of degree up to 2N, evaluated both ways.
      std::vector<std::int64_t> raw(static_cast<std::size_t>(2 * N));
      for (auto& v : raw) v = coeff(rng);
      const auto x = rtfin::reduce(raw, N);
      for (const auto& k : rtfin::embeddings(p)) {
        for (int kk : {k.k(), k.conjugate().k()}) {
          const auto z = oracle::root_of_unity(kk, N);
          const auto want = eval_raw(raw, z);
          const auto got = x.evaluate_at(kk);
          EXPECT_LE(std::abs(got - want), 1e-9 * std::max(1.0, std::abs(want)));
        }
        EXPECT_LT(std::abs(k.root() - oracle::root_of_unity(k.k(), N)), 1e-12);
      }
    }
  }
}

TEST(Cyclotomic, OverflowDetected) {
  auto x = CyclotomicInteger::constant(std::int64_t{1} << 40, 10);
  EXPECT_THROW(x * x, std::overflow_error);
}

TEST(Cyclotomic, ConcurrentPolynomialCache) {
  std::vector<std::thread> pool;
  std::vector<std::size_t> sizes(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([t, &sizes] { sizes[t] = rtfin::cyclotomic_polynomial(210 + 2 * (t % 2)).size(); });
  }
  for (auto& th : pool) th.join();
  for (int t = 0; t < 8; ++t) {
    EXPECT_EQ(sizes[t], static_cast<std::size_t>(rtfin::nt::euler_phi(210 + 2 * (t % 2))) + 1);
  }
}
