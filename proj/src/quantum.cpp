#include "rtfin/quantum.hpp"

#include <string>

#include "rtfin/errors.hpp"
#include "rtfin/number_theory.hpp"

namespace rtfin {

DivisionByZeroQuantumInteger::DivisionByZeroQuantumInteger(int n, int k, int p, std::string context)
    : std::domain_error("quantum integer [" + std::to_string(n) + "] vanishes in a denominator at k=" +
                        std::to_string(k) + ", p=" + std::to_string(p) +
                        (context.empty() ? "" : " (" + context + ")")),
      n_(n),
      k_(k),
      p_(p),
      context_(std::move(context)) {}

QuantumFactored QuantumFactored::unit(int sign) {
  QuantumFactored q;
  q.unit_ = sign < 0 ? -1 : 1;
  return q;
}

QuantumFactored QuantumFactored::zero() {
  QuantumFactored q;
  q.zero_ = true;
  return q;
}

QuantumFactored QuantumFactored::qint(int n) {
  if (n < 0) return qint(-n) * unit(-1);  // [-n] = -[n]
  if (n == 0) return zero();
  QuantumFactored q;
  if (n > 1) q.factors_[n] = 1;
  return q;
}

int QuantumFactored::exponent(int n) const {
  const auto it = factors_.find(n);
  return it == factors_.end() ? 0 : it->second;
}

QuantumFactored QuantumFactored::inverse() const {
  if (zero_) throw UsageError("inverse of the zero quantum symbol");
  QuantumFactored q = *this;
  for (auto& [n, e] : q.factors_) e = -e;
  return q;
}

QuantumFactored QuantumFactored::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return unit();
  if (zero_) return zero();
  QuantumFactored q = *this;
  if (e % 2 == 0) q.unit_ = 1;
  for (auto& [n, ex] : q.factors_) ex *= e;
  return q;
}

QuantumFactored& QuantumFactored::operator*=(const QuantumFactored& other) {
  if (zero_ || other.zero_) return *this = zero();
  unit_ *= other.unit_;
  for (const auto& [n, e] : other.factors_) {
    const int updated = (factors_[n] += e);
    if (updated == 0) factors_.erase(n);
  }
  return *this;
}

QuantumFactored& QuantumFactored::operator/=(const QuantumFactored& other) {
  return *this *= other.inverse();
}

std::string QuantumFactored::to_string() const {
  if (zero_) return "0";
  std::string num, den;
  int den_terms = 0;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    const auto [n, e] = *it;
    std::string term = "[" + std::to_string(n) + "]";
    const int mag = e < 0 ? -e : e;
    if (mag > 1) term += "^" + std::to_string(mag);
    if (e > 0) {
      num += term;
    } else {
      den += term;
      ++den_terms;
    }
  }
  std::string out = unit_ < 0 ? "-" : "";
  out += num.empty() ? "1" : num;
  if (den_terms == 1) out += "/" + den;
  if (den_terms > 1) out += "/(" + den + ")";
  return out;
}

Sign qint_sign(int n, const EmbeddingIndex& k) {
  if (n < 1) throw UsageError("qint_sign requires n >= 1");
  const int p = k.level();
  return sin_sign(static_cast<std::int64_t>(n) * k.k(), p) * sin_sign(k.k(), p);
}

Sign eval_sign(const QuantumFactored& x, const EmbeddingIndex& k) {
  if (x.is_zero()) return Sign::Zero;
  Sign s = x.unit_sign() < 0 ? Sign::Negative : Sign::Positive;
  bool vanishes = false;
  for (const auto& [n, e] : x.factors()) {
    const Sign f = qint_sign(n, k);
    if (f == Sign::Zero) {
      if (e < 0) throw DivisionByZeroQuantumInteger(n, k.k(), k.level());
      vanishes = true;
      continue;
    }
    if (e % 2 != 0) s *= f;
  }
  return vanishes ? Sign::Zero : s;
}

QuantumFactored quantum_factorial(int m) {
  if (m < 0) throw UsageError("quantum factorial of a negative integer");
  QuantumFactored q;
  for (int j = 2; j <= m; ++j) q *= qint(j);
  return q;
}

QuantumFactored bracket_color(int n) {
  if (n < 0) throw UsageError("colors are nonnegative");
  return QuantumFactored::unit(n % 2 == 0 ? 1 : -1) * qint(n + 1);
}

QuantumFactored theta_symbol(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0 || (a + b + c) % 2 != 0 || a > b + c || b > a + c || c > a + b) {
    throw UsageError("theta symbol needs an admissible triple, got (" + std::to_string(a) + "," +
                     std::to_string(b) + "," + std::to_string(c) + ")");
  }
  const int x = (b + c - a) / 2;
  const int y = (a + c - b) / 2;
  const int z = (a + b - c) / 2;
  QuantumFactored q = QuantumFactored::unit((x + y + z) % 2 == 0 ? 1 : -1);
  q *= quantum_factorial(x + y + z + 1);
  q *= quantum_factorial(x);
  q *= quantum_factorial(y);
  q *= quantum_factorial(z);
  q /= quantum_factorial(y + z);
  q /= quantum_factorial(x + z);
  q /= quantum_factorial(x + y);
  return q;
}

CyclotomicInteger twist_eigenvalue(int c, const LevelContext& level) {
  if (c < 0) throw UsageError("colors are nonnegative");
  const std::int64_t e = static_cast<std::int64_t>(c) * (c + 2);
  return CyclotomicInteger::monomial(e, 2 * level.p, c % 2 == 0 ? 1 : -1);
}

}  // namespace rtfin
