#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpm/subspace.hpp"

namespace cpm {

/// Finite-dimensional Lie algebra over F from structure constants
/// [e_i, e_j] = Σ_k c_ij^k e_k. Only i < j is stored by the caller;
/// antisymmetry is implicit.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::size_t dim, FieldDescriptor field, std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  const FieldDescriptor& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Adds c·e_k to [e_i, e_j] (and −c·e_k to [e_j, e_i]); i ≠ j.
  void add_structure_constant(std::size_t i, std::size_t j, std::size_t k, const FieldElement& c);
  void set_bracket(std::size_t i, std::size_t j, const VecF& value);

  const VecF& bracket_of_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  VecF bracket(const VecF& x, const VecF& y) const;
  /// ad x as a matrix acting on column vectors.
  MatrixF ad(const VecF& x) const;
  MatrixF ad_basis(std::size_t i) const;
  /// κ(e_i, e_j) = tr(ad e_i · ad e_j).
  MatrixF killing_form() const;

  /// The same algebra in the basis given by the columns of t.
  LieAlgebra change_basis(const MatrixF& t) const;
  /// Structure constants of a subalgebra in the echelon basis of s.
  LieAlgebra subalgebra(const SubspaceF& s) const;

  VecF basis_vector(std::size_t i) const { return unit_vector<FieldElement>(dim_, i); }

 private:
  std::size_t dim_ = 0;
  FieldDescriptor field_;
  std::vector<std::string> labels_;
  std::vector<VecF> table_;
};

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct JacobiReport {
  std::size_t i = 0, j = 0, k = 0;
  VecF residual;
};

/// First basis triple violating the Jacobi identity, if any.
std::optional<JacobiReport> find_jacobi_violation(const LieAlgebra& lie);
/// Throws JacobiViolation naming the triple and residual.
void validate_lie_algebra(const LieAlgebra& lie);

SubspaceF bracket_spaces(const LieAlgebra& lie, const SubspaceF& a, const SubspaceF& b);
bool is_subalgebra(const LieAlgebra& lie, const SubspaceF& s);
bool is_ideal(const LieAlgebra& lie, const SubspaceF& s);
/// Derived series of a subalgebra until it stabilizes (first term is s).
std::vector<SubspaceF> derived_series(const LieAlgebra& lie, const SubspaceF& s);
/// Lower central series of a subalgebra until it stabilizes.
std::vector<SubspaceF> lower_central_series(const LieAlgebra& lie, const SubspaceF& s);
bool is_solvable(const LieAlgebra& lie, const SubspaceF& s);
bool is_nilpotent(const LieAlgebra& lie, const SubspaceF& s);
bool killing_nondegenerate(const LieAlgebra& lie);

/// Maximal solvable ideal: the Killing-orthogonal complement of g′.
SubspaceF radical(const LieAlgebra& lie);
/// Maximal nilpotent ideal, inside the radical r.
SubspaceF nilradical(const LieAlgebra& lie, const SubspaceF& r);

struct StructureReport {
  std::vector<SubspaceF> derived_series;
  std::vector<SubspaceF> lower_central_series;
  SubspaceF derived;  // g′
  SubspaceF radical;
  SubspaceF nilradical;
  MatrixF killing;
  bool solvable = false;
  bool nilpotent = false;
  bool semisimple = false;
  bool abelian = false;
};

StructureReport structure_report(const LieAlgebra& lie);

/// Semisimple subalgebra s with g = s ⊕ r, lifted through the derived
/// series of r. Throws LiftFailure if a correction system is inconsistent.
SubspaceF levi_subalgebra(const LieAlgebra& lie, const SubspaceF& r);
inline SubspaceF levi_subalgebra(const LieAlgebra& lie) { return levi_subalgebra(lie, radical(lie)); }

struct SimpleIdeal {
  SubspaceF space;            // in the coordinates of the ambient algebra
  std::size_t simple_dim = 0;  // dimension of each absolutely simple factor
  std::size_t multiplicity = 1;  // absolutely simple factors merged over F
};

struct SimpleDecomposition {
  std::vector<SimpleIdeal> ideals;
  bool has_rank_one = false;  // some simple factor has dimension 3 (≅ sl₂)
};

/// Decomposition of a semisimple subalgebra s into simple ideals via the
/// centroid. Throws NotSemisimple.
SimpleDecomposition simple_ideal_decomposition(const LieAlgebra& lie, const SubspaceF& s);
inline SimpleDecomposition simple_ideal_decomposition(const LieAlgebra& lie) {
  return simple_ideal_decomposition(lie, SubspaceF::full(lie.dim()));
}

/// The ideals entering the H¹ formula: a = [s,r] + n′ and b = r′ + a.
struct CharacteristicIdeals {
  SubspaceF levi;
  SubspaceF radical;
  SubspaceF nilradical;
  SubspaceF nilradical_derived;  // n′
  SubspaceF levi_radical;        // [s, r]
  SubspaceF radical_derived;     // r′
  SubspaceF a;
  SubspaceF b;
  QuotientF b_mod_a;
};

CharacteristicIdeals characteristic_ideals(const LieAlgebra& lie, const StructureReport& report,
                                           const SubspaceF& levi);
CharacteristicIdeals characteristic_ideals(const LieAlgebra& lie);

}  // namespace cpm
