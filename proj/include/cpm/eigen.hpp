#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cpm/polynomial.hpp"
#include "cpm/subspace.hpp"

namespace cpm {

struct Eigenvalue {
  FieldElement value;
  std::size_t multiplicity = 0;  // algebraic
};

/// Roots of p lying in F with multiplicities, found from the rational roots
/// and the quadratic rational factors of the norm of p down to ℚ. The list
/// may be incomplete when p has roots of degree four over ℚ.
std::vector<Eigenvalue> discover_roots_in_field(const PolyF& p, const FieldDescriptor& field);

/// Full eigenvalue multiset of m over F. `hints` are tried first; then
/// discovery. Throws ScalarFieldTooSmall if the characteristic polynomial
/// does not split over the values found.
std::vector<Eigenvalue> eigenvalues_in_field(const MatrixF& m, const FieldDescriptor& field,
                                             const std::vector<FieldElement>& hints = {});

/// Throws BadEigenvalueCertificate unless ∏(x − λ_j) equals det(x·I − m).
void verify_eigenvalue_certificate(const MatrixF& m, const std::vector<FieldElement>& eigenvalues);

/// Σ ker(m − λI) over the real eigenvalues λ. Without a certificate the real
/// spectrum is isolated by Sturm counting when it is all or nothing of the
/// conjugation-closed part of the spectrum, and by root discovery in F
/// otherwise.
SubspaceF real_eigenspace_sum(const MatrixF& m, const FieldDescriptor& field,
                              const std::optional<std::vector<FieldElement>>& supplied = std::nullopt);

/// True if m is semisimple with only real eigenvalues (decided by Sturm
/// counting, without splitting the characteristic polynomial).
bool is_real_semisimple(const MatrixF& m);

}  // namespace cpm
