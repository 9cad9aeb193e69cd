#pragma once

#include <string>
#include <vector>

#include "cpm/lattice.hpp"

namespace cpm {

/// (Re z₁, Im z₁, …, Re z_k, Im z_k) as real elements of F.
VecF realify(const VecF& z);
/// Inverse of realify.
VecF complexify(const VecF& x);

/// Closed subgroup H̄ of ℝ^m (m = 2k) given by the double annihilator of a
/// finitely generated subgroup H with coordinates in ℚ(√d).
///
/// H̄ = {x ∈ V : w_l · x ∈ ℤ for all l} where V = span_ℝ(H) and the w_l
/// generate the dual lattice modulo V^⊥.
class ClosedSubgroup {
 public:
  std::size_t ambient() const { return span_.ambient(); }
  /// Real span of the generators.
  const SubspaceF& span() const { return span_; }
  const SubspaceF& identity_component() const { return identity_component_; }
  std::size_t discrete_rank() const { return discrete_generators_.size(); }
  /// Elements of H whose classes form a ℤ-basis of H̄ / H̄₀.
  const std::vector<VecF>& discrete_generators() const { return discrete_generators_; }
  /// Dual characters: x ∈ H̄ iff x ∈ span() and w·x ∈ ℤ for each of these.
  const std::vector<VecF>& characters() const { return characters_; }
  /// Complex span of the identity component, as a subspace of F^k.
  const SubspaceF& complex_core() const { return complex_core_; }

  bool contains(const VecF& x) const;
  /// A finite set whose generated subgroup has closure equal to this one:
  /// the discrete generators plus b and √d·b for each component basis vector b.
  std::vector<VecF> generators() const;

  friend bool operator==(const ClosedSubgroup& a, const ClosedSubgroup& b);

 private:
  friend ClosedSubgroup real_subgroup_closure(const std::vector<VecF>&, std::size_t, const FieldDescriptor&);
  FieldDescriptor field_;
  SubspaceF span_, identity_component_, complex_core_;
  std::vector<VecF> discrete_generators_, characters_;
};

/// Closure of the ℤ-span of real vectors in ℝ^m (m even).
ClosedSubgroup real_subgroup_closure(const std::vector<VecF>& vectors, std::size_t m, const FieldDescriptor& field);
/// Closure of the ℤ-span of complex vectors in ℂ^k ≅ ℝ^{2k}.
ClosedSubgroup subgroup_closure(const std::vector<VecF>& vectors, std::size_t k, const FieldDescriptor& field);

struct AlbaneseResult {
  std::size_t albanese_dim = 0;
  std::size_t lattice_rank = 0;
  SubspaceF complex_core;  // kernel of ℂ^k → ℂ^{albanese_dim}
  std::size_t rounds = 0;
  std::vector<std::string> flags;
};

/// Quotients ℂ^k by the complex span of the identity component of the image
/// closure until the closure is discrete.
AlbaneseResult albanese_dimension(const std::vector<VecF>& images, std::size_t k, const FieldDescriptor& field);
/// Throws MissingAbelianizationImages unless every generator has an image.
AlbaneseResult albanese_dimension(const LieAlgebra& lie, const LatticeData& lattice);

}  // namespace cpm
