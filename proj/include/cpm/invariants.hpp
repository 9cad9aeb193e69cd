#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpm/closure.hpp"
#include "cpm/lattice.hpp"

namespace cpm {

enum class WCertification { Trivial, CertifiedCommuting, CheckedToDepth };

struct WResult {
  SubspaceF subspace;  // inside the quotient, in its canonical coordinates
  WCertification certification = WCertification::Trivial;
  int depth = 0;  // word length checked, for CheckedToDepth
};

/// Greatest subspace W of the quotient that is invariant under every
/// generator and on which every generator acts semisimply with real
/// eigenvalues. When the restrictions do not commute, every reduced word of
/// length ≤ depth is required to satisfy the same condition.
WResult compute_W(const InducedAction& action, const FieldDescriptor& field, int depth = 4);

enum class Exactness { Exact, UpperBound };
enum class ValueSource { AutoZero, User, Presentation };
enum class Rigidity { Rigid, NotRigid, Inconsistent };
enum class CheckOutcome { Pass, Fail, Skipped };

struct Crosscheck {
  std::string name;
  CheckOutcome outcome = CheckOutcome::Skipped;
  std::string detail;
};

struct SourcedValue {
  long value = 0;
  ValueSource source = ValueSource::User;
};

struct InvariantReport {
  std::size_t dim_g = 0;
  std::size_t dim_g_mod_gprime = 0;
  std::size_t dim_radical = 0;
  std::size_t dim_nilradical = 0;
  std::size_t dim_levi = 0;
  bool solvable = false;
  bool nilpotent = false;
  bool semisimple = false;
  bool has_rank_one_factor = false;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t dim_b_mod_a = 0;
  SourcedValue b1_semisimple_quotient;
  std::size_t dim_W = 0;
  WCertification w_certification = WCertification::Trivial;
  int w_depth = 0;
  long h1 = 0;
  Exactness h1_exactness = Exactness::Exact;
  long h1_tangent = 0;
  SourcedValue b1_manifold;
  Rigidity rigid = Rigidity::Rigid;
  bool deformable = false;
  std::optional<AlbaneseResult> albanese;
  std::vector<Crosscheck> crosschecks;
  std::vector<std::string> assumptions;
};

/// b₁ of the image of Γ in the semisimple quotient: zero when g is solvable
/// or has no simple factor of dimension 3, otherwise the user value.
/// Throws MissingB1Input.
SourcedValue semisimple_quotient_b1(const StructureReport& structure, bool has_rank_one, const LatticeData& lattice);

/// Free rank of Γ_ab from the presentation, or the user override.
/// Throws NoB1Data.
SourcedValue b1_manifold(const LatticeData& lattice);

/// rigid, deformable and h1_tangent from h1, exactness and b₁.
void rigidity_verdict(InvariantReport& report);

std::vector<Crosscheck> crosscheck_special_cases(const InvariantReport& report);

/// Validation, structure theory, W, h1, b₁, rigidity, cross-checks and the
/// Albanese dimension (when every generator has an abelianization image).
InvariantReport analyze(const AnalysisInput& input);

std::string to_string(WCertification c);
std::string to_string(Exactness e);
std::string to_string(ValueSource s);
std::string to_string(Rigidity r);
std::string to_string(CheckOutcome o);

}  // namespace cpm
