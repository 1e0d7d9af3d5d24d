#include "rtfin/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "rtfin/errors.hpp"
#include "rtfin/number_theory.hpp"

namespace rtfin {

namespace {

using Poly = std::vector<std::int64_t>;

// Exact quotient of num by a monic divisor.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t m = num.size(); m-- > dn;) {
    const std::int64_t t = num[m];
    quot[m - dn] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) {
      num[m - dn + j] = nt::checked_add(num[m - dn + j], -nt::checked_mul(t, den[j]));
    }
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw InvariantViolation("cyclotomic division left a remainder");
  }
  return quot;
}

std::recursive_mutex& cache_mutex() {
  static std::recursive_mutex m;
  return m;
}

std::map<int, Poly>& cache() {
  static std::map<int, Poly> c;
  return c;
}

void require_same(const CyclotomicInteger& x, const CyclotomicInteger& y) {
  if (x.modulus_index() != y.modulus_index()) {
    throw UsageError("mismatched cyclotomic moduli " + std::to_string(x.modulus_index()) +
                     " and " + std::to_string(y.modulus_index()));
  }
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int N) {
  if (N < 1) throw UsageError("cyclotomic index must be positive");
  std::lock_guard lock(cache_mutex());
  auto& c = cache();
  if (auto it = c.find(N); it != c.end()) return it->second;

  // X^N - 1 = prod_{d | N} phi_d
  Poly poly(static_cast<std::size_t>(N) + 1, 0);
  poly[0] = -1;
  poly[N] = 1;
  for (std::int64_t d : nt::divisors(N)) {
    if (d == N) continue;
    poly = divide_exact(std::move(poly), cyclotomic_polynomial(static_cast<int>(d)));
  }
  return c.emplace(N, std::move(poly)).first->second;
}

std::int64_t ramanujan_sum(std::int64_t m, int N) {
  const std::int64_t g = std::gcd(nt::mod(m, N), static_cast<std::int64_t>(N));
  const std::int64_t q = N / (g == 0 ? N : g);
  return nt::mobius(q) * (nt::euler_phi(N) / nt::euler_phi(q));
}

Sign sin_sign(std::int64_t m, int p) {
  if (p < 3) throw UsageError("sin_sign requires p >= 3");
  const std::int64_t r = nt::mod(m, p);
  if (r == 0 || 2 * r == p) return Sign::Zero;
  return 2 * r < p ? Sign::Positive : Sign::Negative;
}

CyclotomicInteger CyclotomicInteger::reduce(std::span<const std::int64_t> raw, int N) {
  if (N < 3) throw UsageError("cyclotomic modulus must be at least 3");
  const Poly& phi = cyclotomic_polynomial(N);
  const std::size_t deg = phi.size() - 1;
  Poly work(raw.begin(), raw.end());
  if (work.size() < deg) work.resize(deg, 0);
  for (std::size_t m = work.size(); m-- > deg;) {
    const std::int64_t t = work[m];
    if (t == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      work[m - deg + j] = nt::checked_add(work[m - deg + j], -nt::checked_mul(t, phi[j]));
    }
  }
  work.resize(deg);
  return CyclotomicInteger(N, std::move(work));
}

CyclotomicInteger CyclotomicInteger::constant(std::int64_t c, int N) {
  const std::int64_t v[] = {c};
  return reduce(v, N);
}

CyclotomicInteger CyclotomicInteger::monomial(std::int64_t exponent, int N, std::int64_t coeff) {
  if (N < 3) throw UsageError("cyclotomic modulus must be at least 3");
  Poly raw(static_cast<std::size_t>(nt::mod(exponent, N)) + 1, 0);
  raw.back() = coeff;
  return reduce(raw, N);
}

bool CyclotomicInteger::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

CyclotomicInteger CyclotomicInteger::conjugate() const {
  Poly raw(static_cast<std::size_t>(N_), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    raw[nt::mod(-static_cast<std::int64_t>(j), N_)] += coeffs_[j];
  }
  return reduce(raw, N_);
}

std::int64_t CyclotomicInteger::trace() const {
  std::int64_t t = 0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    t = nt::checked_add(t, nt::checked_mul(coeffs_[j], ramanujan_sum(static_cast<std::int64_t>(j), N_)));
  }
  return t;
}

std::complex<double> CyclotomicInteger::evaluate_at(std::int64_t t) const {
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(nt::mod(t, N_)) / N_;
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    acc += static_cast<double>(coeffs_[j]) * std::polar(1.0, theta * static_cast<double>(j));
  }
  return acc;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  Poly out(coeffs_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = nt::checked_mul(-1, coeffs_[j]);
  return CyclotomicInteger(N_, std::move(out));
}

CyclotomicInteger operator+(const CyclotomicInteger& x, const CyclotomicInteger& y) {
  require_same(x, y);
  std::vector<std::int64_t> out(x.coeffs_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = nt::checked_add(x.coeffs_[j], y.coeffs_[j]);
  return CyclotomicInteger(x.N_, std::move(out));
}

CyclotomicInteger operator-(const CyclotomicInteger& x, const CyclotomicInteger& y) {
  return x + (-y);
}

CyclotomicInteger operator*(const CyclotomicInteger& x, const CyclotomicInteger& y) {
  require_same(x, y);
  const auto& a = x.coeffs_;
  const auto& b = y.coeffs_;
  if (a.empty() || b.empty()) return CyclotomicInteger::reduce({}, x.N_);
  std::vector<std::int64_t> raw(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      raw[i + j] = nt::checked_add(raw[i + j], nt::checked_mul(a[i], b[j]));
    }
  }
  return CyclotomicInteger::reduce(raw, x.N_);
}

CyclotomicInteger multiply(const CyclotomicInteger& x, const CyclotomicInteger& y) { return x * y; }

EmbeddingIndex::EmbeddingIndex(int k, int p) : k_(k), p_(p) {
  if (p < 3 || k < 1 || k >= 2 * p || std::gcd(k, 2 * p) != 1) {
    throw UsageError("k=" + std::to_string(k) + " is not a primitive 2p-th root index for p=" +
                     std::to_string(p));
  }
}

std::complex<double> EmbeddingIndex::root() const {
  return std::polar(1.0, std::numbers::pi * k_ / p_);
}

std::vector<EmbeddingIndex> embeddings(int p) {
  std::vector<EmbeddingIndex> out;
  for (int k = 1; k <= p; ++k) {
    if (std::gcd(k, 2 * p) == 1) out.emplace_back(k, p);
  }
  return out;
}

}  // namespace rtfin
