#include "rtfin/lattice.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "rtfin/errors.hpp"
#include "rtfin/number_theory.hpp"

namespace rtfin {

namespace {

int require_alpha(const LevelContext& level) {
  if (!level.r) throw UsageError("O_p needs p = r or 2r with r an odd prime");
  return level.alpha_p;
}

constexpr std::size_t kMaxDiscrepancyRows = 8;

}  // namespace

LatticeElement::LatticeElement(const LevelContext& level, std::span<const std::int64_t> coeffs)
    : value_(CyclotomicInteger::reduce(coeffs, require_alpha(level))) {}

NormValue psi_norm_sq(const LatticeElement& P) {
  const auto& x = P.value();
  return {(x * x.conjugate()).trace(), nt::euler_phi(x.modulus_index())};
}

double psi_norm_sq_direct(const LatticeElement& P) {
  const int N = P.alpha();
  double sum = 0.0;
  int count = 0;
  for (int t = 1; t < N; ++t) {
    if (std::gcd(t, N) != 1) continue;
    sum += std::norm(P.value().evaluate_at(t));
    ++count;
  }
  return sum / count;
}

LiteralNormComparison literal_norm_formula(const LatticeElement& P, const LevelContext& level) {
  const auto n = P.value().coeffs();
  std::int64_t literal = 0;
  for (auto c : n) literal = nt::checked_add(literal, nt::checked_mul(c, c));
  if (level.p % 2 == 0) {
    const std::size_t gap = static_cast<std::size_t>(level.p);  // |i - j| = 2r
    for (std::size_t i = 0; i + gap < n.size(); ++i) {
      literal = nt::checked_add(literal, -2 * nt::checked_mul(n[i], n[i + gap]));
    }
  }
  LiteralNormComparison out;
  out.literal = {literal, 1};
  out.exact = psi_norm_sq(P);
  out.agrees = out.literal.same_value(out.exact);
  return out;
}

DiscretenessReport discreteness_certificate(const LevelContext& level, std::size_t sample_size,
                                            std::uint64_t seed) {
  if (sample_size < 1) throw UsageError("sample_size must be at least 1");
  DiscretenessReport rep;
  rep.p = level.p;
  rep.alpha = require_alpha(level);
  rep.phi = level.phi_alpha;
  rep.samples = sample_size;
  rep.seed = seed;
  rep.min_trace = std::numeric_limits<std::int64_t>::max();
  rep.min_norm = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(-10, 10);
  std::vector<std::int64_t> raw(static_cast<std::size_t>(rep.phi));

  for (std::size_t s = 0; s < sample_size; ++s) {
    bool nonzero = false;
    while (!nonzero) {
      for (auto& c : raw) {
        c = coeff(rng);
        nonzero = nonzero || c != 0;
      }
    }
    const LatticeElement P(level, raw);
    const NormValue exact = psi_norm_sq(P);
    if (exact.numerator >= 1) ++rep.integrality_passes;
    rep.min_trace = std::min(rep.min_trace, exact.numerator);
    rep.min_norm = std::min(rep.min_norm, exact.to_double());

    const double direct = psi_norm_sq_direct(P);
    const double rel = std::abs(direct - exact.to_double()) / std::max(exact.to_double(), 1e-300);
    rep.max_relative_error = std::max(rep.max_relative_error, rel);
    if (rel <= kLatticeFloatTolerance) ++rep.float_agreements;

    const auto cmp = literal_norm_formula(P, level);
    if (!cmp.agrees) {
      ++rep.literal_formula_disagreements;
      if (rep.discrepancies.size() < kMaxDiscrepancyRows) {
        rep.discrepancies.push_back({raw, cmp.literal, cmp.exact});
      }
    }
  }
  return rep;
}

}  // namespace rtfin
