#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rtfin/cyclotomic.hpp"
#include "rtfin/level.hpp"

namespace rtfin {

/// Element of O_p = Z[A]/phi_{alpha_p}(A).
class LatticeElement {
 public:
  LatticeElement(const LevelContext& level, std::span<const std::int64_t> coeffs);
  explicit LatticeElement(CyclotomicInteger value) : value_(std::move(value)) {}

  const CyclotomicInteger& value() const { return value_; }
  int alpha() const { return value_.modulus_index(); }

 private:
  CyclotomicInteger value_;
};

/// numerator / denominator with denominator = phi(alpha_p), unreduced.
struct NormValue {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  double to_double() const { return static_cast<double>(numerator) / denominator; }
  bool same_value(const NormValue& o) const {
    return numerator * o.denominator == o.numerator * denominator;
  }
};

/// ||Psi(P)||^2 = trace(P * conj(P)) / phi(alpha_p), exact.
NormValue psi_norm_sq(const LatticeElement& P);

/// (1 / phi) sum |P(q)|^2 over all primitive alpha_p-th roots q, in floating point.
double psi_norm_sq_direct(const LatticeElement& P);

struct LiteralNormComparison {
  NormValue literal;  // sum n_i^2 [- 2 sum_{|i-j|=2r} n_i n_j for p = 2r]
  NormValue exact;
  bool agrees = false;
};

/// Evaluates the literal closed form (which omits Ramanujan-sum cross terms)
/// beside the exact trace value.
LiteralNormComparison literal_norm_formula(const LatticeElement& P, const LevelContext& level);

struct DiscrepancyRow {
  std::vector<std::int64_t> coeffs;
  NormValue literal;
  NormValue exact;
};

struct DiscretenessReport {
  int p = 0;
  int alpha = 0;
  int phi = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t integrality_passes = 0;
  std::size_t float_agreements = 0;
  std::int64_t min_trace = 0;  // min of phi * ||Psi(P)||^2 over samples
  double min_norm = 0.0;
  double max_relative_error = 0.0;
  std::size_t literal_formula_disagreements = 0;
  std::vector<DiscrepancyRow> discrepancies;  // first few, for display

  bool all_pass() const {
    return integrality_passes == samples && float_agreements == samples;
  }
};

inline constexpr std::uint64_t kDefaultLatticeSeed = 20140611;
inline constexpr double kLatticeFloatTolerance = 1e-6;

/// Samples nonzero P with coefficients uniform in [-10, 10].
DiscretenessReport discreteness_certificate(const LevelContext& level, std::size_t sample_size,
                                            std::uint64_t seed = kDefaultLatticeSeed);

}  // namespace rtfin
