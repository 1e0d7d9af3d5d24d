#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "rtfin/level.hpp"
#include "rtfin/sign.hpp"

namespace rtfin {

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Computed once per N and cached; safe to call concurrently.
const std::vector<std::int64_t>& cyclotomic_polynomial(int N);

/// Trace of A^m from Q(zeta_N) to Q, i.e. the Ramanujan sum c_N(m).
std::int64_t ramanujan_sum(std::int64_t m, int N);

/// Exact sign of sin(2 pi m / p).
Sign sin_sign(std::int64_t m, int p);

/// Element of Z[A]/phi_N(A) in the power basis 1, A, ..., A^{phi(N)-1}.
class CyclotomicInteger {
 public:
  CyclotomicInteger() = default;

  static CyclotomicInteger reduce(std::span<const std::int64_t> raw, int N);
  static CyclotomicInteger constant(std::int64_t c, int N);
  /// coeff * A^exponent; negative exponents are taken modulo N.
  static CyclotomicInteger monomial(std::int64_t exponent, int N, std::int64_t coeff = 1);

  int modulus_index() const { return N_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  bool is_zero() const;

  CyclotomicInteger conjugate() const;
  std::int64_t trace() const;

  /// Value at A = exp(2 pi i t / N).
  std::complex<double> evaluate_at(std::int64_t t) const;

  CyclotomicInteger operator-() const;
  friend CyclotomicInteger operator+(const CyclotomicInteger& x, const CyclotomicInteger& y);
  friend CyclotomicInteger operator-(const CyclotomicInteger& x, const CyclotomicInteger& y);
  friend CyclotomicInteger operator*(const CyclotomicInteger& x, const CyclotomicInteger& y);
  friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;

 private:
  CyclotomicInteger(int N, std::vector<std::int64_t> coeffs)
      : N_(N), coeffs_(std::move(coeffs)) {}

  int N_ = 0;
  std::vector<std::int64_t> coeffs_;
};

inline CyclotomicInteger reduce(std::span<const std::int64_t> raw, int N) {
  return CyclotomicInteger::reduce(raw, N);
}
CyclotomicInteger multiply(const CyclotomicInteger& x, const CyclotomicInteger& y);
inline CyclotomicInteger conjugate(const CyclotomicInteger& x) { return x.conjugate(); }
inline std::int64_t trace(const CyclotomicInteger& x) { return x.trace(); }

/// A primitive 2p-th root of unity A = exp(i pi k / p), gcd(k, 2p) = 1.
///
/// k and 2p - k are complex conjugates and give identical signs on every
/// real quantity, so enumeration only visits the canonical half k <= p.
/// Non-canonical values are still constructible for invariance checks.
class EmbeddingIndex {
 public:
  EmbeddingIndex(int k, int p);

  int k() const { return k_; }
  int level() const { return p_; }
  bool canonical() const { return k_ <= p_; }
  EmbeddingIndex conjugate() const { return EmbeddingIndex(2 * p_ - k_, p_); }
  std::complex<double> root() const;

  friend bool operator==(const EmbeddingIndex&, const EmbeddingIndex&) = default;

 private:
  int k_;
  int p_;
};

std::vector<EmbeddingIndex> embeddings(int p);
inline std::vector<EmbeddingIndex> embeddings(const LevelContext& level) {
  return embeddings(level.p);
}

}  // namespace rtfin
