#include "cpm/algebras.hpp"

namespace cpm::algebras {

LieAlgebra abelian(std::size_t n, FieldDescriptor field) { return LieAlgebra(n, field); }

LieAlgebra heisenberg(FieldDescriptor field) {
  LieAlgebra lie(3, field, {"x", "y", "z"});
  lie.add_structure_constant(0, 1, 2, 1);
  return lie;
}

LieAlgebra sl2(FieldDescriptor field) {
  LieAlgebra lie(3, field, {"h", "e", "f"});
  lie.add_structure_constant(0, 1, 1, 2);
  lie.add_structure_constant(0, 2, 2, -2);
  lie.add_structure_constant(1, 2, 0, 1);
  return lie;
}

LieAlgebra matrix_algebra(const std::vector<MatrixF>& basis, FieldDescriptor field, std::vector<std::string> labels) {
  std::size_t n = basis.size();
  if (n == 0) return LieAlgebra(0, field, std::move(labels));
  std::size_t m = basis[0].rows();
  std::vector<VecF> flat;
  for (const auto& b : basis) {
    VecF v;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) v.push_back(b(r, c));
    flat.push_back(std::move(v));
  }
  MatrixF columns = MatrixF::from_columns(flat, m * m);
  LieAlgebra lie(n, field, std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MatrixF comm = basis[i] * basis[j] - basis[j] * basis[i];
      VecF v;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) v.push_back(comm(r, c));
      auto coords = solve(columns, v);
      if (!coords) throw Error(ErrorKind::NotInvariant, "matrix span is not closed under commutators");
      lie.set_bracket(i, j, *coords);
    }
  return lie;
}

LieAlgebra sl3(FieldDescriptor field) {
  std::vector<MatrixF> basis;
  std::vector<std::string> labels;
  auto unit = [](std::size_t r, std::size_t c) {
    MatrixF m(3, 3);
    m(r, c) = FieldElement(1);
    return m;
  };
  basis.push_back(unit(0, 0) - unit(1, 1));
  labels.push_back("h1");
  basis.push_back(unit(1, 1) - unit(2, 2));
  labels.push_back("h2");
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (r != c) {
        basis.push_back(unit(r, c));
        labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
      }
  return matrix_algebra(basis, field, labels);
}

LieAlgebra unit_solvable(FieldDescriptor field) {
  LieAlgebra lie(3, field, {"t", "x", "y"});
  lie.add_structure_constant(0, 1, 1, 1);
  lie.add_structure_constant(0, 2, 2, -1);
  return lie;
}

namespace {

// sl₂ action on V_k (dim k+1): h v_j = (k−2j) v_j, f v_j = v_{j+1}, e v_j = j(k−j+1) v_{j−1}.
void add_sl2_module(LieAlgebra& lie, std::size_t offset, std::size_t rep_dim) {
  long k = static_cast<long>(rep_dim) - 1;
  for (long j = 0; j <= k; ++j) {
    std::size_t vj = offset + static_cast<std::size_t>(j);
    if (k - 2 * j != 0) lie.add_structure_constant(0, vj, vj, FieldElement(k - 2 * j));
    if (j < k) lie.add_structure_constant(2, vj, vj + 1, 1);
    if (j > 0) lie.add_structure_constant(1, vj, vj - 1, FieldElement(j * (k - j + 1)));
  }
}

}  // namespace

LieAlgebra sl2_semidirect(std::size_t rep_dim, FieldDescriptor field) {
  std::vector<std::string> labels{"h", "e", "f"};
  for (std::size_t j = 0; j < rep_dim; ++j) labels.push_back("v" + std::to_string(j));
  LieAlgebra lie(3 + rep_dim, field, labels);
  lie.add_structure_constant(0, 1, 1, 2);
  lie.add_structure_constant(0, 2, 2, -2);
  lie.add_structure_constant(1, 2, 0, 1);
  add_sl2_module(lie, 3, rep_dim);
  return lie;
}

LieAlgebra sl2_heisenberg(FieldDescriptor field) {
  LieAlgebra lie(6, field, {"h", "e", "f", "v0", "v1", "z"});
  lie.add_structure_constant(0, 1, 1, 2);
  lie.add_structure_constant(0, 2, 2, -2);
  lie.add_structure_constant(1, 2, 0, 1);
  add_sl2_module(lie, 3, 2);
  lie.add_structure_constant(3, 4, 5, 1);
  return lie;
}

}  // namespace cpm::algebras
