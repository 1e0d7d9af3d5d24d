#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rtfin/bases.hpp"
#include "rtfin/level.hpp"
#include "rtfin/sign_kernels.hpp"

namespace rtfin {

struct SurfaceDescriptor {
  enum class Kind { OneHoledTorus, ClosedTorus, ThetaGenus2 };
  Kind kind = Kind::OneHoledTorus;
  int c = 0;      // boundary half-color, one-holed torus only
  int genus = 1;  // genus the computation stands for

  std::string to_string() const;
};

enum class Completeness { CompletelyPositive, NotCompletelyPositive };

struct Witness {
  EmbeddingIndex k;
  std::size_t ratio_index;
};

struct PositivityReport {
  LevelContext level;
  SurfaceDescriptor surface;
  std::vector<GramRatio> ratios;
  SignMatrix signs;
  Completeness verdict = Completeness::CompletelyPositive;
  std::optional<Witness> witness;

  const GramRatio& witness_ratio() const { return ratios.at(witness->ratio_index); }
};

enum class Execution { Serial, Parallel };

struct ExecOptions {
  Execution execution = Execution::Parallel;
  int threads = 0;
};

/// Evaluates every ratio at every canonical embedding. Ratios must be norms
/// relative to one common base vector, so a single Negative entry means the
/// form is indefinite there. Witness: lowest k, then lowest ratio index.
PositivityReport check_complete_positivity(std::vector<GramRatio> ratios,
                                           const LevelContext& level,
                                           SurfaceDescriptor surface = {},
                                           ExecOptions exec = {});

enum class Finiteness { Finite, Infinite };

struct Provenance {
  enum class Kind { DirectComputation, TheoremClause, ClosedSurfaceRule };
  Kind kind = Kind::DirectComputation;
  int clause = 0;    // TheoremClause only
  std::string rule;  // ClosedSurfaceRule only

  std::string to_string() const;
};

enum class Crosscheck { Agree, Disagree, NotApplicable };

struct ClausePrediction {
  int clause;
  Finiteness expected;
};

/// A witness stated in closed form (embedding, basis ratio) and whether exact
/// evaluation confirms it is Negative.
struct DocumentedWitness {
  int k = 0;
  std::string ratio;
  std::string form;
  Sign sign = Sign::Zero;
  bool confirmed = false;
};

struct FinitenessVerdict {
  Finiteness verdict = Finiteness::Finite;
  Provenance provenance;
  std::optional<PositivityReport> report;
  Crosscheck crosscheck = Crosscheck::NotApplicable;
  std::optional<ClausePrediction> clause;
  std::optional<DocumentedWitness> documented;
  bool dimension_zero = false;
  bool experimental = false;
  std::vector<std::string> notes;
};

enum class TorusLevel { Double, Prime };  // p = 2r or p = r

/// Every clause of the one-holed torus theorem whose hypothesis holds, in
/// order 1..4. Clauses 2 and 3 are certified by a two-step ratio and need
/// r - 2 - 2c >= 2; clause 4 needs c >= 1 (c = 0 is the closed torus).
std::vector<ClausePrediction> applicable_clauses(int r, int c);

/// First entry of applicable_clauses, if any.
std::optional<ClausePrediction> theorem_predicate(int r, int c);

/// Closed-form witness embedding k for clauses 2, 3 and 4 (absent for 1).
std::optional<int> closed_form_witness_k(int r, int c, int clause);

/// Evaluates the closed-form witness of a clause at level p = 2r (or r):
/// clauses 2, 3 use the two-step ratio at i = 0, clause 4 the first one-step
/// ratio negative at k = 3. Absent for clause 1 or when no k is defined.
std::optional<DocumentedWitness> closed_form_witness(const LevelContext& level, int c, int clause);

FinitenessVerdict decide_torus(int r, int c, TorusLevel which = TorusLevel::Double,
                               ExecOptions exec = {});

/// Requires p = r or 2r with r an odd prime, g >= 1.
FinitenessVerdict decide_closed(int p, int g, ExecOptions exec = {});

std::string to_string(Completeness c);
std::string to_string(Finiteness f);
std::string to_string(Crosscheck c);

}  // namespace rtfin
