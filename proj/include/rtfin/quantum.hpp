#pragma once

#include <map>
#include <string>

#include "rtfin/cyclotomic.hpp"
#include "rtfin/level.hpp"
#include "rtfin/sign.hpp"

namespace rtfin {

/// A formal signed product unit * prod [n]^{e_n} of quantum integers
/// [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}).
///
/// Values are never evaluated numerically; only their sign at an embedding
/// is computed, exactly. [1] is the unit and is never stored, nor are zero
/// exponents, so equality of symbols is equality of the canonical form.
/// The symbol [0] is representable as the flagged zero value.
class QuantumFactored {
 public:
  QuantumFactored() = default;

  static QuantumFactored unit(int sign = 1);
  static QuantumFactored zero();
  static QuantumFactored qint(int n);

  int unit_sign() const { return unit_; }
  bool is_zero() const { return zero_; }
  bool is_unit() const { return !zero_ && unit_ == 1 && factors_.empty(); }
  const std::map<int, int>& factors() const { return factors_; }
  int exponent(int n) const;

  QuantumFactored inverse() const;
  QuantumFactored pow(int e) const;

  QuantumFactored& operator*=(const QuantumFactored& other);
  QuantumFactored& operator/=(const QuantumFactored& other);
  friend QuantumFactored operator*(QuantumFactored a, const QuantumFactored& b) { return a *= b; }
  friend QuantumFactored operator/(QuantumFactored a, const QuantumFactored& b) { return a /= b; }
  friend bool operator==(const QuantumFactored&, const QuantumFactored&) = default;

  /// Bracket rendering, e.g. "-[4][3]/[2]^2", "1", "0".
  std::string to_string() const;

 private:
  int unit_ = 1;
  bool zero_ = false;
  std::map<int, int> factors_;
};

inline QuantumFactored qint(int n) { return QuantumFactored::qint(n); }

/// Sign of [n] at A = exp(i pi k / p): sin_sign(n k, p) * sin_sign(k, p).
Sign qint_sign(int n, const EmbeddingIndex& k);

/// Throws DivisionByZeroQuantumInteger if a denominator factor vanishes at k.
Sign eval_sign(const QuantumFactored& x, const EmbeddingIndex& k);

/// [m]! expanded into its factors.
QuantumFactored quantum_factorial(int m);

/// <n> = (-1)^n [n+1].
QuantumFactored bracket_color(int n);

/// Theta symbol <a,b,c>. With x = (b+c-a)/2, y = (a+c-b)/2, z = (a+b-c)/2:
///   (-1)^{x+y+z} [x+y+z+1]! [x]! [y]! [z]! / ([y+z]! [x+z]! [x+y]!).
/// Throws UsageError unless a+b+c is even and the triangle inequality holds.
QuantumFactored theta_symbol(int a, int b, int c);

/// Dehn twist eigenvalue mu_c = (-1)^c A^{c(c+2)} in Z[A]/phi_{2p}.
CyclotomicInteger twist_eigenvalue(int c, const LevelContext& level);

}  // namespace rtfin
