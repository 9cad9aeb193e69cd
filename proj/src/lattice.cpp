#include "cpm/lattice.hpp"

#include <algorithm>

#include "cpm/eigen.hpp"

namespace cpm {

namespace {

std::string generator_label(const std::string& name) { return name.empty() ? "" : "generator '" + name + "': "; }

}  // namespace

void validate_automorphism(const MatrixF& m, const LieAlgebra& lie, const std::string& name) {
  std::size_t n = lie.dim();
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorKind::DimensionMismatch, generator_label(name) + "ad must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
  if (determinant(m).is_zero()) throw Error(ErrorKind::Singular, generator_label(name) + "ad is singular");
  std::vector<VecF> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(m.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      VecF residual = m * lie.bracket_of_basis(i, j) - lie.bracket(images[i], images[j]);
      if (!is_zero_vector(residual))
        throw Error(ErrorKind::NotAutomorphism, generator_label(name) + "not an automorphism at basis pair (" +
                                                    std::to_string(i) + ", " + std::to_string(j) +
                                                    "), residual " + to_string(residual));
    }
}

QuotientF abelianization_quotient(const LieAlgebra& lie) {
  auto full = SubspaceF::full(lie.dim());
  return QuotientF(bracket_spaces(lie, full, full), full);
}

void validate_lattice(const LieAlgebra& lie, const LatticeData& lattice) {
  if (lattice.generators.empty()) throw Error(ErrorKind::BadParams, "lattice: at least one generator is required");
  std::size_t ab_dim = abelianization_quotient(lie).dim();
  for (const auto& g : lattice.generators) {
    if (g.ad) {
      validate_automorphism(*g.ad, lie, g.name);
      if (g.eigenvalues) {
        try {
          verify_eigenvalue_certificate(*g.ad, *g.eigenvalues);
        } catch (const Error& e) {
          throw Error(e.kind(), generator_label(g.name) + e.what());
        }
      }
    }
    if (g.abelianization_image && g.abelianization_image->size() != ab_dim)
      throw Error(ErrorKind::DimensionMismatch, generator_label(g.name) + "abelianization_image must have length " +
                                                    std::to_string(ab_dim));
  }
  for (long v : {lattice.b1_semisimple_quotient.value_or(0), lattice.b1_manifold_override.value_or(0)})
    if (v < 0) throw Error(ErrorKind::BadParams, "lattice: Betti numbers must be non-negative");
}

InducedAction induced_quotient_action(const LieAlgebra& lie, const QuotientF& quotient,
                                      const LatticeData& lattice) {
  InducedAction action{quotient, {}, {}, {}};
  for (const auto& g : lattice.generators) {
    if (!g.ad) {
      if (quotient.dim() == 0) continue;
      throw Error(ErrorKind::MissingAdjoint, generator_label(g.name) + "ad is required to act on the quotient");
    }
    if (!quotient.sub().contains(quotient.sub().image(*g.ad)))
      throw Error(ErrorKind::NotInvariant, generator_label(g.name) + "does not preserve the subideal of the quotient");
    if (!quotient.sup().contains(quotient.sup().image(*g.ad)))
      throw Error(ErrorKind::NotInvariant, generator_label(g.name) + "does not preserve the ideal of the quotient");
    action.names.push_back(g.name);
    action.matrices.push_back(quotient.induced(*g.ad));
    action.eigenvalue_hints.push_back(g.eigenvalues.value_or(std::vector<FieldElement>{}));
  }
  (void)lie;
  return action;
}

AnalysisInput change_basis(const AnalysisInput& input, const MatrixF& t) {
  MatrixF t_inv = inverse(t);
  AnalysisInput out = input;
  out.lie = input.lie.change_basis(t);
  QuotientF old_ab = abelianization_quotient(input.lie);
  QuotientF new_ab = abelianization_quotient(out.lie);
  for (auto& g : out.lattice.generators) {
    if (g.ad) g.ad = t_inv * *g.ad * t;
    if (g.abelianization_image) g.abelianization_image = new_ab.project(t_inv * old_ab.lift(*g.abelianization_image));
  }
  return out;
}

}  // namespace cpm
