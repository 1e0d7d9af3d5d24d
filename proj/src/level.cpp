#include "rtfin/level.hpp"

#include <string>

#include "rtfin/bases.hpp"
#include "rtfin/errors.hpp"
#include "rtfin/number_theory.hpp"

namespace rtfin {

namespace {

std::optional<int> underlying_prime(int p) {
  if (nt::is_odd_prime(p)) return p;
  if (p % 2 == 0 && nt::is_odd_prime(p / 2)) return p / 2;
  return std::nullopt;
}

}  // namespace

int alpha(int p) {
  const auto r = underlying_prime(p);
  if (p < 3 || !r) {
    throw UsageError("level p=" + std::to_string(p) + " is not r or 2r for an odd prime r");
  }
  return p % 4 == 3 ? p : 4 * *r;
}

LevelContext LevelContext::make(int p) {
  if (p < 3) throw UsageError("level p must be at least 3, got " + std::to_string(p));
  LevelContext level;
  level.p = p;
  level.r = underlying_prime(p);
  if (level.r) {
    level.alpha_p = alpha(p);
    level.phi_alpha = static_cast<int>(nt::euler_phi(level.alpha_p));
  }
  level.kappa_exponent = -6 - p * (p + 1) / 2;
  level.color_set = rtfin::color_set(level);
  return level;
}

int LevelContext::prime() const {
  if (!r) throw UsageError("level p=" + std::to_string(p) + " has no underlying odd prime");
  return *r;
}

std::string LevelContext::kappa_constraint() const {
  return "kappa^6 = A^" + std::to_string(kappa_exponent);
}

}  // namespace rtfin
