#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rtfin/level.hpp"
#include "rtfin/quantum.hpp"

namespace rtfin {

/// Lollipop vector u_i^c: stick colored 2c, loop colored i + c.
struct LollipopVector {
  int c = 0;
  int i = 0;

  int loop_color() const { return i + c; }
  int stick_color() const { return 2 * c; }
  friend bool operator==(const LollipopVector&, const LollipopVector&) = default;
};

struct AdmissibleTriple {
  int a = 0;
  int b = 0;
  int c = 0;

  std::string to_string() const;
  friend auto operator<=>(const AdmissibleTriple&, const AdmissibleTriple&) = default;
};

/// Ratio <u, u> / <v, v> of diagonal Gram entries of two orthogonal basis
/// vectors. `form` keeps the unreduced product as written in the literature
/// ("[6][1]/([4][3])"); `value` is the canonical symbol.
struct GramRatio {
  std::string numerator;    // basis label of u
  std::string denominator;  // basis label of v
  std::string form;
  QuantumFactored value;

  std::string id() const { return numerator + "/" + denominator; }
};

/// p even: {0, ..., p/2 - 2}; p odd: even colors {0, 2, ..., p - 3}.
std::vector<int> color_set(const LevelContext& level);

/// Parity, triangle inequality, colors in I_p and the level bound
/// a+b+c <= p-4 (p even) or a+b+c <= 2p-4 (p odd).
bool is_admissible(const LevelContext& level, int a, int b, int c);

/// u_0^c ... u_{r-2-2c}^c; empty when r - 2 - 2c < 0.
std::vector<LollipopVector> lollipop_basis(const LevelContext& level, int c);

/// <u_{i+1}, u_{i+1}> / <u_i, u_i> = [2c+i+2][i+1] / ([c+i+2][c+i+1]).
GramRatio lollipop_ratio_step(const LevelContext& level, int c, int i);

/// <u_{i+2}, u_{i+2}> / <u_i, u_i>
///   = [2c+i+3][2c+i+2][i+2][i+1] / ([c+i+1][c+i+3][c+i+2]^2).
GramRatio lollipop_ratio_two_step(const LevelContext& level, int c, int i);

/// <u_j, u_j> / <u_0, u_0> for j = 0 .. dim-1 (entry 0 is the unit).
std::vector<GramRatio> lollipop_relative_norms(const LevelContext& level, int c);

/// Closed torus: basis indexed by the loop color a in I_p, relative norms
/// against the empty coloring. All entries are the unit symbol.
std::vector<GramRatio> closed_torus_relative_norms(const LevelContext& level);

/// All admissible triples over I_p in lexicographic order.
std::vector<AdmissibleTriple> admissible_triples(const LevelContext& level);

/// Norm of the theta-graph vector u_{a,b,c} relative to u_{0,0,0}:
/// <a,b,c>^2 / (<a><b><c>) (two trivalent vertices, three edges).
GramRatio theta_norm_ratio(const LevelContext& level, const AdmissibleTriple& t);

/// theta_norm_ratio over admissible_triples(level), (0,0,0) first.
std::vector<GramRatio> theta_relative_norms(const LevelContext& level);

}  // namespace rtfin
