#pragma once

#include <vector>

#include "cpm/matrix.hpp"

namespace cpm {

using IntMatrix = Matrix<Integer>;

/// A = U·D·V with D diagonal, d₁ | d₂ | …, all dᵢ ≥ 0, and U, V unimodular.
/// The inverses of U and V are kept as well (U⁻¹·A·V⁻¹ = D).
struct SmithDecomposition {
  IntMatrix U, D, V;
  IntMatrix U_inv, V_inv;

  std::size_t rank() const;
  std::vector<Integer> elementary_divisors() const;  // nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Row-style Hermite normal form of the row module of a: echelon rows with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// ℤ-basis of {x ∈ ℤⁿ : a·x = 0}, as vectors.
std::vector<Vec<Integer>> integer_kernel(const IntMatrix& a);

/// Group word over generators 1..n; negative entries are inverses.
using Word = std::vector<int>;

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;
};

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Integer> torsion;  // elementary divisors > 1
};

/// Exponent-sum matrix of the relators; throws MalformedWord.
IntMatrix relation_matrix(const Presentation& presentation);

AbelianInvariants abelianization_rank(int generator_count, const std::vector<Word>& relators);

inline AbelianInvariants abelianization_rank(const Presentation& p) {
  return abelianization_rank(p.generator_count, p.relators);
}

/// Commutator word [a, b] = a b a⁻¹ b⁻¹.
Word commutator(int a, int b);

}  // namespace cpm
