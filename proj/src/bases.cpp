#include "rtfin/bases.hpp"

#include <string>

#include "rtfin/errors.hpp"

namespace rtfin {

namespace {

std::string bracketed(int n) { return "[" + std::to_string(n) + "]"; }

std::string lollipop_label(int i) { return "u_" + std::to_string(i); }

bool in_color_set(const LevelContext& level, int x) {
  if (x < 0) return false;
  if (level.p % 2 == 0) return x <= level.p / 2 - 2;
  return x % 2 == 0 && x <= level.p - 3;
}

void require_prime(const LevelContext& level) {
  if (!level.r) {
    throw UsageError("lollipop bases need p = r or 2r with r an odd prime, got p=" +
                     std::to_string(level.p));
  }
}

}  // namespace

std::string AdmissibleTriple::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::vector<int> color_set(const LevelContext& level) {
  std::vector<int> colors;
  if (level.p % 2 == 0) {
    for (int x = 0; x <= level.p / 2 - 2; ++x) colors.push_back(x);
  } else {
    for (int x = 0; x <= level.p - 3; x += 2) colors.push_back(x);
  }
  return colors;
}

bool is_admissible(const LevelContext& level, int a, int b, int c) {
  if (!in_color_set(level, a) || !in_color_set(level, b) || !in_color_set(level, c)) return false;
  if ((a + b + c) % 2 != 0) return false;
  if (a > b + c || b > a + c || c > a + b) return false;
  const int bound = level.p % 2 == 0 ? level.p - 4 : 2 * level.p - 4;
  return a + b + c <= bound;
}

std::vector<LollipopVector> lollipop_basis(const LevelContext& level, int c) {
  require_prime(level);
  if (c < 0) throw UsageError("boundary half-color must be nonnegative");
  std::vector<LollipopVector> basis;
  for (int i = 0; i <= *level.r - 2 - 2 * c; ++i) basis.push_back({c, i});
  return basis;
}

GramRatio lollipop_ratio_step(const LevelContext& level, int c, int i) {
  require_prime(level);
  const int r = *level.r;
  if (c < 0 || i < 0 || i > r - 3 - 2 * c) {
    throw UsageError("one-step ratio index i=" + std::to_string(i) + " outside 0.." +
                     std::to_string(r - 3 - 2 * c) + " for c=" + std::to_string(c));
  }
  GramRatio g;
  g.numerator = lollipop_label(i + 1);
  g.denominator = lollipop_label(i);
  g.form = bracketed(2 * c + i + 2) + bracketed(i + 1) + "/(" + bracketed(c + i + 2) +
           bracketed(c + i + 1) + ")";
  g.value = qint(2 * c + i + 2) * qint(i + 1) / (qint(c + i + 2) * qint(c + i + 1));
  return g;
}

GramRatio lollipop_ratio_two_step(const LevelContext& level, int c, int i) {
  require_prime(level);
  const int r = *level.r;
  if (c < 0 || i < 0 || i > r - 4 - 2 * c) {
    throw UsageError("two-step ratio index i=" + std::to_string(i) + " outside 0.." +
                     std::to_string(r - 4 - 2 * c) + " for c=" + std::to_string(c));
  }
  GramRatio g;
  g.numerator = lollipop_label(i + 2);
  g.denominator = lollipop_label(i);
  g.form = bracketed(2 * c + i + 3) + bracketed(2 * c + i + 2) + bracketed(i + 2) +
           bracketed(i + 1) + "/(" + bracketed(c + i + 1) + bracketed(c + i + 3) +
           bracketed(c + i + 2) + "^2)";
  g.value = qint(2 * c + i + 3) * qint(2 * c + i + 2) * qint(i + 2) * qint(i + 1) /
            (qint(c + i + 1) * qint(c + i + 3) * qint(c + i + 2).pow(2));
  return g;
}

std::vector<GramRatio> lollipop_relative_norms(const LevelContext& level, int c) {
  const auto basis = lollipop_basis(level, c);
  std::vector<GramRatio> out;
  if (basis.empty()) return out;
  QuantumFactored acc;
  out.push_back({lollipop_label(0), lollipop_label(0), "1", acc});
  for (std::size_t j = 1; j < basis.size(); ++j) {
    acc *= lollipop_ratio_step(level, c, static_cast<int>(j) - 1).value;
    out.push_back({lollipop_label(static_cast<int>(j)), lollipop_label(0), acc.to_string(), acc});
  }
  return out;
}

std::vector<GramRatio> closed_torus_relative_norms(const LevelContext& level) {
  std::vector<GramRatio> out;
  for (int a : level.color_set) {
    // c = 0 lollipop steps from the empty loop up to color a
    QuantumFactored acc;
    for (int i = 0; i < a; ++i) acc *= qint(i + 2) * qint(i + 1) / (qint(i + 2) * qint(i + 1));
    out.push_back({"v_" + std::to_string(a), "v_0", acc.to_string(), acc});
  }
  return out;
}

std::vector<AdmissibleTriple> admissible_triples(const LevelContext& level) {
  std::vector<AdmissibleTriple> out;
  for (int a : level.color_set) {
    for (int b : level.color_set) {
      for (int c : level.color_set) {
        if (is_admissible(level, a, b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

GramRatio theta_norm_ratio(const LevelContext& level, const AdmissibleTriple& t) {
  if (!is_admissible(level, t.a, t.b, t.c)) {
    throw UsageError("triple " + t.to_string() + " is not admissible at p=" + std::to_string(level.p));
  }
  GramRatio g;
  g.numerator = "u" + t.to_string();
  g.denominator = "u(0,0,0)";
  const std::string abc = std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c);
  g.form = "<" + abc + ">^2/(<" + std::to_string(t.a) + "><" + std::to_string(t.b) + "><" +
           std::to_string(t.c) + ">)";
  g.value = theta_symbol(t.a, t.b, t.c).pow(2) /
            (bracket_color(t.a) * bracket_color(t.b) * bracket_color(t.c));
  g.form += " = " + g.value.to_string();
  return g;
}

std::vector<GramRatio> theta_relative_norms(const LevelContext& level) {
  std::vector<GramRatio> out;
  for (const auto& t : admissible_triples(level)) out.push_back(theta_norm_ratio(level, t));
  return out;
}

}  // namespace rtfin
