#include "rtfin/positivity.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rtfin/errors.hpp"
#include "rtfin/number_theory.hpp"

namespace rtfin {

namespace {

Crosscheck compare(Finiteness computed, Finiteness expected) {
  return computed == expected ? Crosscheck::Agree : Crosscheck::Disagree;
}

Finiteness from_report(const PositivityReport& report) {
  return report.verdict == Completeness::CompletelyPositive ? Finiteness::Finite : Finiteness::Infinite;
}

DocumentedWitness evaluate_documented(const GramRatio& ratio, int k, int p) {
  DocumentedWitness w;
  w.k = k;
  w.ratio = ratio.id();
  w.form = ratio.form;
  w.sign = eval_sign(ratio.value, EmbeddingIndex(k, p));
  w.confirmed = w.sign == Sign::Negative;
  return w;
}

}  // namespace

std::optional<DocumentedWitness> closed_form_witness(const LevelContext& level, int c, int clause) {
  const int r = level.prime();
  const auto k = closed_form_witness_k(r, c, clause);
  if (!k) return std::nullopt;
  if (clause == 4) {
    const EmbeddingIndex e(*k, level.p);
    for (int i = 0; i <= r - 3 - 2 * c; ++i) {
      const auto step = lollipop_ratio_step(level, c, i);
      if (eval_sign(step.value, e) == Sign::Negative) return evaluate_documented(step, *k, level.p);
    }
    return evaluate_documented(lollipop_ratio_step(level, c, 0), *k, level.p);
  }
  if (r - 4 - 2 * c < 0) return std::nullopt;
  return evaluate_documented(lollipop_ratio_two_step(level, c, 0), *k, level.p);
}

namespace {

// Every vertex of a p-admissible coloring is (0,0,0) or (m,m,0) with
// theta = <m>, so colored edges form disjoint circles whose vertex and edge
// factors cancel: every basis norm equals the empty coloring's.
bool circle_certificate(const LevelContext& level) {
  for (const auto& t : admissible_triples(level)) {
    const int zeros = (t.a == 0) + (t.b == 0) + (t.c == 0);
    if (zeros == 3) continue;
    if (zeros != 1) return false;
    const int m = std::max({t.a, t.b, t.c});
    if (theta_symbol(t.a, t.b, t.c) != bracket_color(m)) return false;
  }
  return true;
}

}  // namespace

std::string SurfaceDescriptor::to_string() const {
  switch (kind) {
    case Kind::OneHoledTorus: return "one-holed torus T^" + std::to_string(c);
    case Kind::ClosedTorus: return "closed torus";
    case Kind::ThetaGenus2: return "theta graph (genus " + std::to_string(genus) + ")";
  }
  return "?";
}

std::string Provenance::to_string() const {
  switch (kind) {
    case Kind::DirectComputation: return "DirectComputation";
    case Kind::TheoremClause: return "TheoremClause(" + std::to_string(clause) + ")";
    case Kind::ClosedSurfaceRule: return "ClosedSurfaceRule";
  }
  return "?";
}

std::string to_string(Completeness c) {
  return c == Completeness::CompletelyPositive ? "CompletelyPositive" : "NotCompletelyPositive";
}

std::string to_string(Finiteness f) { return f == Finiteness::Finite ? "Finite" : "Infinite"; }

std::string to_string(Crosscheck c) {
  switch (c) {
    case Crosscheck::Agree: return "Agree";
    case Crosscheck::Disagree: return "Disagree";
    case Crosscheck::NotApplicable: return "NotApplicable";
  }
  return "?";
}

PositivityReport check_complete_positivity(std::vector<GramRatio> ratios, const LevelContext& level,
                                           SurfaceDescriptor surface, ExecOptions exec) {
  PositivityReport report;
  report.level = level;
  report.surface = surface;
  report.ratios = std::move(ratios);
  const auto emb = embeddings(level);
  report.signs = exec.execution == Execution::Serial
                     ? fill_sign_matrix_serial(report.ratios, emb)
                     : fill_sign_matrix_parallel(report.ratios, emb, exec.threads);
  for (std::size_t e = 0; e < emb.size() && !report.witness; ++e) {
    for (std::size_t r = 0; r < report.ratios.size(); ++r) {
      if (report.signs.at(e, r) == Sign::Negative) {
        report.witness = Witness{emb[e], r};
        break;
      }
    }
  }
  report.verdict = report.witness ? Completeness::NotCompletelyPositive : Completeness::CompletelyPositive;
  return report;
}

std::vector<ClausePrediction> applicable_clauses(int r, int c) {
  std::vector<ClausePrediction> out;
  if (c < 0) return out;
  const bool two_step = r - 2 - 2 * c >= 2;
  const int cm = c % 5;
  const int rm = r % 5;
  if (2 * c == r - 3) out.push_back({1, Finiteness::Finite});
  if (two_step && c % 3 == 1 && r != 3 && r != 5) out.push_back({2, Finiteness::Infinite});
  if (two_step &&
      ((cm == 3 && (rm == 2 || rm == 3)) || (cm == 1 && rm == 3) || (cm == 2 && rm == 2))) {
    out.push_back({3, Finiteness::Infinite});
  }
  if (c >= 1 && 3 * c <= r - 7) out.push_back({4, Finiteness::Infinite});
  return out;
}

std::optional<ClausePrediction> theorem_predicate(int r, int c) {
  const auto all = applicable_clauses(r, c);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<int> closed_form_witness_k(int r, int, int clause) {
  std::optional<int> k;
  switch (clause) {
    case 2:
      if (r % 3 == 1) k = (2 * r + 1) / 3;
      if (r % 3 == 2) k = (2 * r - 1) / 3;
      break;
    case 3:
      if (r % 5 == 2) k = (2 * r + 1) / 5;
      if (r % 5 == 3) k = (2 * r - 1) / 5;
      break;
    case 4:
      k = 3;
      break;
    default:
      break;
  }
  if (k && (*k < 1 || std::gcd(*k, 4 * r) != 1)) return std::nullopt;
  return k;
}

FinitenessVerdict decide_torus(int r, int c, TorusLevel which, ExecOptions exec) {
  if (!nt::is_odd_prime(r)) throw UsageError("r must be an odd prime, got " + std::to_string(r));
  if (c < 0) throw UsageError("c must be nonnegative, got " + std::to_string(c));
  const LevelContext level = LevelContext::make(which == TorusLevel::Double ? 2 * r : r);

  FinitenessVerdict v;
  v.provenance.kind = Provenance::Kind::DirectComputation;
  v.experimental = which == TorusLevel::Prime;
  if (v.experimental) v.notes.push_back("experimental: lollipop formulas applied at odd level p=r");

  auto ratios = lollipop_relative_norms(level, c);
  if (ratios.empty()) {
    v.verdict = Finiteness::Finite;
    v.dimension_zero = true;
    v.notes.push_back("empty lollipop basis (r-1-2c <= 0): vacuously completely positive");
    return v;
  }
  v.report = check_complete_positivity(std::move(ratios), level,
                                       {SurfaceDescriptor::Kind::OneHoledTorus, c, 1}, exec);
  v.verdict = from_report(*v.report);

  if (which == TorusLevel::Double) {
    v.clause = theorem_predicate(r, c);
    if (v.clause) {
      v.crosscheck = compare(v.verdict, v.clause->expected);
      v.documented = closed_form_witness(level, c, v.clause->clause);
    }
  }
  return v;
}

FinitenessVerdict decide_closed(int p, int g, ExecOptions exec) {
  const LevelContext level = LevelContext::make(p);
  if (!level.r) throw UsageError("p must be r or 2r for an odd prime r, got " + std::to_string(p));
  if (g < 1) throw UsageError("genus must be at least 1, got " + std::to_string(g));
  const int r = *level.r;
  const Finiteness expected = (g == 1 || r == 3) ? Finiteness::Finite : Finiteness::Infinite;

  FinitenessVerdict v;
  v.provenance.kind = Provenance::Kind::ClosedSurfaceRule;

  if (g == 1) {
    v.provenance.rule = "genus 1: every closed-torus ratio is the unit symbol";
    v.report = check_complete_positivity(closed_torus_relative_norms(level), level,
                                         {SurfaceDescriptor::Kind::ClosedTorus, 0, 1}, exec);
    v.verdict = from_report(*v.report);
  } else if (r == 3) {
    v.report = check_complete_positivity(theta_relative_norms(level), level,
                                         {SurfaceDescriptor::Kind::ThetaGenus2, 0, g}, exec);
    const bool circles = circle_certificate(level);
    v.provenance.rule = p == 3 ? "p=3: the space is one-dimensional"
                               : "p=6: colorings are disjoint circles colored 1, all norms 1";
    if (p == 3 && v.report->ratios.size() != 1) {
      throw InvariantViolation("expected a one-dimensional space at p=3");
    }
    v.verdict = (from_report(*v.report) == Finiteness::Finite && circles) ? Finiteness::Finite
                                                                         : Finiteness::Infinite;
    if (!circles) v.notes.push_back("circle certificate failed");
  } else if (r == 5) {
    v.provenance.rule = "r=5: theta-graph witness in genus 2";
    v.report = check_complete_positivity(theta_relative_norms(level), level,
                                         {SurfaceDescriptor::Kind::ThetaGenus2, 0, g}, exec);
    v.verdict = from_report(*v.report);
    const AdmissibleTriple documented_triple = p == 5 ? AdmissibleTriple{2, 2, 2} : AdmissibleTriple{2, 1, 1};
    v.documented = evaluate_documented(theta_norm_ratio(level, documented_triple), 3, p);
    if (g >= 3) {
      v.notes.push_back("genus " + std::to_string(g) +
                        ": theta graph embedded with its complement colored 0; norms as in genus 2");
    }
  } else {
    const auto which = p == 2 * r ? TorusLevel::Double : TorusLevel::Prime;
    auto torus = decide_torus(r, 1, which, exec);
    v.provenance.rule = "handle splitting: V_p(T^1) is a tensor factor of a summand of V_p(Sigma_g)";
    v.report = std::move(torus.report);
    v.report->surface.genus = g;
    v.verdict = from_report(*v.report);
    v.experimental = torus.experimental;
    v.notes.insert(v.notes.end(), torus.notes.begin(), torus.notes.end());
    v.documented = closed_form_witness(level, 1, 2);

    // Independent genus-2 check; higher genus embeds the same theta graph, so it is not repeated.
    if (g == 2) {
      const auto theta = check_complete_positivity(theta_relative_norms(level), level,
                                                   {SurfaceDescriptor::Kind::ThetaGenus2, 0, 2}, exec);
      if (from_report(theta) != v.verdict) {
        v.notes.push_back("genus-2 theta-graph computation disagrees with the T^1 argument");
        v.crosscheck = Crosscheck::Disagree;
        return v;
      }
      v.notes.push_back("genus-2 theta-graph computation agrees");
    }
  }
  v.crosscheck = compare(v.verdict, expected);
  return v;
}

}  // namespace rtfin
