#pragma once

// Standard Lie algebras used by the example constructors and tests.

#include "cpm/lie_algebra.hpp"

namespace cpm::algebras {

LieAlgebra abelian(std::size_t n, FieldDescriptor field = FieldDescriptor(1));
/// Basis (x, y, z) with [x, y] = z.
LieAlgebra heisenberg(FieldDescriptor field = FieldDescriptor(1));
/// Basis (h, e, f) with [h, e] = 2e, [h, f] = −2f, [e, f] = h.
LieAlgebra sl2(FieldDescriptor field = FieldDescriptor(1));
LieAlgebra sl3(FieldDescriptor field = FieldDescriptor(1));
/// Basis (t, x, y) with [t, x] = x, [t, y] = −y.
LieAlgebra unit_solvable(FieldDescriptor field = FieldDescriptor(1));
/// sl₂ ⋉ V where V is the irreducible module of dimension rep_dim.
LieAlgebra sl2_semidirect(std::size_t rep_dim, FieldDescriptor field = FieldDescriptor(1));
/// sl₂ ⋉ heisenberg: sl₂ acts on span(v₀, v₁) in the standard way and
/// trivially on the center z, with [v₀, v₁] = z.
LieAlgebra sl2_heisenberg(FieldDescriptor field = FieldDescriptor(1));
/// Linear Lie algebra spanned by the given matrices (closed under commutators).
LieAlgebra matrix_algebra(const std::vector<MatrixF>& basis, FieldDescriptor field,
                          std::vector<std::string> labels = {});

}  // namespace cpm::algebras
