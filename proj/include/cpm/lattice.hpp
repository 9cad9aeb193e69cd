#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpm/lie_algebra.hpp"
#include "cpm/zmodule.hpp"

namespace cpm {

/// One generator γ of the lattice, described by Ad(γ) and its image in the
/// abelianization g/g′. A generator without `ad` is symbolic: only its
/// abelianization image takes part in the analysis.
struct Generator {
  std::string name;
  std::optional<MatrixF> ad;
  std::optional<VecF> abelianization_image;  // coordinates in the canonical basis of g/g′
  std::optional<std::vector<FieldElement>> eigenvalues;  // full spectrum of ad, if known
};

struct LatticeData {
  std::vector<Generator> generators;
  std::optional<Presentation> presentation;
  std::optional<long> b1_semisimple_quotient;
  bool linear_algebraic = false;
  std::optional<long> b1_manifold_override;
};

struct AnalysisInput {
  LieAlgebra lie;
  LatticeData lattice;
  int depth = 4;
};

/// Throws NotAutomorphism naming the first basis pair (i, j) where
/// m[e_i, e_j] ≠ [m e_i, m e_j], or Singular.
void validate_automorphism(const MatrixF& m, const LieAlgebra& lie, const std::string& name = "");

/// Checks generator count, ad shapes, automorphism property, image lengths
/// and eigenvalue certificates. Throws on the first problem, naming the
/// generator.
void validate_lattice(const LieAlgebra& lie, const LatticeData& lattice);

/// g′ and the canonical quotient g/g′ in which abelianization images live.
QuotientF abelianization_quotient(const LieAlgebra& lie);

/// Induced action of the generators on a quotient of ideals sup/sub.
struct InducedAction {
  QuotientF quotient;
  std::vector<std::string> names;
  std::vector<MatrixF> matrices;
  std::vector<std::vector<FieldElement>> eigenvalue_hints;  // per generator, may be empty

  std::size_t dim() const { return quotient.dim(); }
};

/// Throws NotInvariant if a generator fails to preserve sub or sup, and
/// MissingAdjoint if the quotient is nonzero and a generator is symbolic.
InducedAction induced_quotient_action(const LieAlgebra& lie, const QuotientF& quotient,
                                      const LatticeData& lattice);

/// The same input expressed in the basis given by the columns of t:
/// structure constants and ad matrices are conjugated and abelianization
/// images are carried to the new canonical basis of g/g′.
AnalysisInput change_basis(const AnalysisInput& input, const MatrixF& t);

}  // namespace cpm
