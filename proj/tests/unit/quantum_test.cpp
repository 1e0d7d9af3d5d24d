#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "float_oracle.hpp"
#include "rtfin/errors.hpp"
#include "rtfin/quantum.hpp"

using rtfin::EmbeddingIndex;
using rtfin::QuantumFactored;
using rtfin::qint;
using rtfin::Sign;

namespace {

Sign float_sign(double v) { return v > 0 ? Sign::Positive : Sign::Negative; }

double float_value(const QuantumFactored& x, int k, int p) {
  if (x.is_zero()) return 0.0;
  double v = x.unit_sign();
  for (const auto& [n, e] : x.factors()) v *= std::pow(oracle::qint(n, k, p), e);
  return v;
}

}  // namespace

TEST(Quantum, SymbolBasics) {
  EXPECT_TRUE(qint(1).is_unit());
  EXPECT_TRUE(qint(0).is_zero());
  const auto x = qint(4) * qint(3);
  EXPECT_EQ(x.unit_sign(), 1);
  EXPECT_EQ(x.factors(), (std::map<int, int>{{3, 1}, {4, 1}}));
  EXPECT_TRUE((x / x).is_unit());
  EXPECT_TRUE((qint(0) * x).is_zero());
  EXPECT_EQ(qint(2).pow(3).exponent(2), 3);
  EXPECT_EQ(qint(2).pow(-2), qint(2).pow(2).inverse());
  EXPECT_THROW(QuantumFactored::zero().inverse(), rtfin::UsageError);
}

TEST(Quantum, ToString) {
  EXPECT_EQ(QuantumFactored::unit().to_string(), "1");
  EXPECT_EQ(QuantumFactored::zero().to_string(), "0");
  EXPECT_EQ(rtfin::theta_symbol(2, 2, 2).to_string(), "-[4][3]/[2]^2");
  EXPECT_EQ((qint(4) / (qint(2).pow(2) * qint(3).pow(2))).to_string(), "[4]/([3]^2[2]^2)");
}

TEST(Quantum, QintSignExamples) {
  EXPECT_EQ(rtfin::qint_sign(4, EmbeddingIndex(3, 5)), Sign::Negative);
  EXPECT_EQ(rtfin::qint_sign(3, EmbeddingIndex(3, 10)), Sign::Negative);
  for (int p = 3; p <= 30; ++p) {
    for (const auto& k : rtfin::embeddings(p)) EXPECT_EQ(rtfin::qint_sign(1, k), Sign::Positive);
  }
}

TEST(Quantum, EvalSignExamples) {
  EXPECT_EQ(rtfin::eval_sign(QuantumFactored::unit(), EmbeddingIndex(3, 7)), Sign::Positive);
  const auto displayed = qint(4) / (qint(2).pow(2) * qint(3).pow(2));
  EXPECT_EQ(rtfin::eval_sign(displayed, EmbeddingIndex(3, 5)), Sign::Negative);
  const auto r = qint(6) * qint(1) / (qint(4) * qint(3));
  EXPECT_EQ(rtfin::eval_sign(r, EmbeddingIndex(5, 14)), Sign::Positive);
  EXPECT_GT(float_value(r, 5, 14), 0.0);
}

TEST(Quantum, DivisionByZeroReported) {
  // [5] vanishes at p = 10 ([n] is zero iff r | n for p = 2r).
  const auto x = qint(1) / qint(5);
  try {
    rtfin::eval_sign(x, EmbeddingIndex(3, 10));
    FAIL() << "expected DivisionByZeroQuantumInteger";
  } catch (const rtfin::DivisionByZeroQuantumInteger& e) {
    EXPECT_EQ(e.index(), 5);
    EXPECT_EQ(e.embedding(), 3);
    EXPECT_EQ(e.level(), 10);
  }
  EXPECT_EQ(rtfin::eval_sign(qint(5), EmbeddingIndex(3, 10)), Sign::Zero);
}

TEST(Quantum, BracketColor) {
  EXPECT_TRUE(rtfin::bracket_color(0).is_unit());
  EXPECT_EQ(rtfin::bracket_color(2), qint(3));
  EXPECT_EQ(rtfin::bracket_color(1), QuantumFactored::unit(-1) * qint(2));
}

TEST(Quantum, ThetaSymbol) {
  EXPECT_TRUE(rtfin::theta_symbol(0, 0, 0).is_unit());
  EXPECT_EQ(rtfin::theta_symbol(2, 2, 2), QuantumFactored::unit(-1) * qint(4) * qint(3) / qint(2).pow(2));
  for (int n = 0; n < 12; ++n) {
    EXPECT_EQ(rtfin::theta_symbol(n, n, 0), rtfin::bracket_color(n));
    EXPECT_EQ(rtfin::theta_symbol(n, 0, n), rtfin::bracket_color(n));
  }
  EXPECT_THROW(rtfin::theta_symbol(1, 1, 1), rtfin::UsageError);
  EXPECT_THROW(rtfin::theta_symbol(4, 1, 1), rtfin::UsageError);
}

TEST(QuantumProperty, ThetaMatchesFloat) {
  for (int p : {7, 10, 14, 22}) {
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; b <= 6; ++b)
        for (int c = 0; c <= 6; ++c) {
          if ((a + b + c) % 2 || a > b + c || b > a + c || c > a + b) continue;
          if ((a + b + c) / 2 + 1 >= (p % 2 ? p : p / 2)) continue;  // keep factorials nonzero
          const auto t = rtfin::theta_symbol(a, b, c);
          for (const auto& k : rtfin::embeddings(p)) {
            const double want = oracle::theta(a, b, c, k.k(), p);
            if (std::abs(want) < 1e-9) continue;
            EXPECT_NEAR(float_value(t, k.k(), p), want, 1e-9 * std::max(1.0, std::abs(want)));
            EXPECT_EQ(rtfin::eval_sign(t, k), float_sign(want));
          }
        }
  }
}

TEST(Quantum, TwistEigenvalue) {
  const auto ten = rtfin::LevelContext::make(10);
  EXPECT_EQ(rtfin::twist_eigenvalue(0, ten), rtfin::CyclotomicInteger::constant(1, 20));
  const auto mu1 = rtfin::twist_eigenvalue(1, ten);
  EXPECT_EQ(mu1, rtfin::CyclotomicInteger::monomial(3, 20, -1));
  EXPECT_EQ(std::vector<std::int64_t>(mu1.coeffs().begin(), mu1.coeffs().end()),
            (std::vector<std::int64_t>{0, 0, 0, -1, 0, 0, 0, 0}));
  for (int p : {5, 7, 10, 14}) {
    const auto level = rtfin::LevelContext::make(p);
    for (int c = 0; c < 6; ++c) {
      const auto mu = rtfin::twist_eigenvalue(c, level);
      for (const auto& k : rtfin::embeddings(p)) {
        EXPECT_NEAR(std::abs(mu.evaluate_at(k.k())), 1.0, 1e-9);
        const auto want = (c % 2 ? -1.0 : 1.0) * oracle::root_of_unity(c * (c + 2) * k.k(), 2 * p);
        EXPECT_LT(std::abs(mu.evaluate_at(k.k()) - want), 1e-9);
      }
    }
  }
}

TEST(QuantumProperty, QintSignMatchesFloat) {
  for (int p = 3; p <= 60; ++p) {
    for (const auto& k : rtfin::embeddings(p)) {
      for (int n = 1; n <= 2 * p; ++n) {
        const double v = oracle::qint(n, k.k(), p);
        const Sign s = rtfin::qint_sign(n, k);
        if (std::abs(v) > 1e-9) EXPECT_EQ(s, float_sign(v)) << n << " " << k.k() << " " << p;
        else EXPECT_EQ(s, Sign::Zero);
        // k and its conjugate agree on every real quantity.
        EXPECT_EQ(s, rtfin::qint_sign(n, k.conjugate()));
        if (n < p) {
          const double w = oracle::qint(p - n, k.k(), p);
          EXPECT_NEAR(std::abs(w), std::abs(v), 1e-9 * std::max(1.0, std::abs(v)));
        }
        if (p % 2 == 0 && 0 < n && n < p) {
          EXPECT_EQ(s == Sign::Zero, n % (p / 2) == 0);
        }
      }
    }
  }
}

TEST(QuantumProperty, EvalSignMultiplicative) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> idx(1, 12), ex(-2, 2);
  for (int p : {26, 38, 58}) {  // r > 12: no index vanishes
    for (int t = 0; t < 200; ++t) {
      QuantumFactored x = QuantumFactored::unit(), y = QuantumFactored::unit();
      for (int j = 0; j < 4; ++j) {
        x *= qint(idx(rng)).pow(ex(rng));
        y *= qint(idx(rng)).pow(ex(rng));
      }
      for (const auto& k : rtfin::embeddings(p)) {
        EXPECT_EQ(rtfin::eval_sign(x * y, k), rtfin::eval_sign(x, k) * rtfin::eval_sign(y, k));
        const double v = float_value(x, k.k(), p);
        if (std::abs(v) > 1e-9) EXPECT_EQ(rtfin::eval_sign(x, k), float_sign(v));
      }
    }
  }
}

TEST(Quantum, Factorial) {
  EXPECT_TRUE(rtfin::quantum_factorial(0).is_unit());
  EXPECT_TRUE(rtfin::quantum_factorial(1).is_unit());
  EXPECT_EQ(rtfin::quantum_factorial(4), qint(2) * qint(3) * qint(4));
}
