#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rtfin {

/// Root object for every computation at a fixed level p.
///
/// `r` is set when p = r or p = 2r for an odd prime r; the torus and lattice
/// machinery requires it. Generic levels (p = 4, 8, ...) only carry the
/// color set. The kappa relation kappa^6 = A^{kappa_exponent} is recorded but
/// never enters the arithmetic: a global sign flip of the form cannot change
/// a definiteness verdict.
struct LevelContext {
  int p = 0;
  std::optional<int> r;
  int alpha_p = 0;    // 0 when r is absent
  int phi_alpha = 0;  // Euler totient of alpha_p
  std::vector<int> color_set;
  int kappa_exponent = 0;

  static LevelContext make(int p);

  bool has_prime() const { return r.has_value(); }
  bool is_odd() const { return p % 2 != 0; }
  int prime() const;  // throws UsageError when r is absent
  std::string kappa_constraint() const;
};

/// alpha_p = p for p = 3 (mod 4), 4r for p = 1, 2 (mod 4).
int alpha(int p);

}  // namespace rtfin
