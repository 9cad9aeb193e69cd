#pragma once

#include <utility>

#include "cpm/lattice.hpp"

namespace cpm::examples {

/// Minimal positive solution of x² − p·y² = 1 from the continued fraction
/// of √p. Throws PerfectSquareInput, or BadParams for p < 2.
std::pair<Integer, Integer> pell_fundamental(long p);

/// Solvmanifold ℂ ⋉ ℂ² / Γ with t acting by diag(eᵗ, e⁻ᵗ). Γ is generated
/// by the unit α = x + y√p acting as diag(1, α, α′), the central loop
/// t = 2πi, the translations by ℤ[√p, i] embedded through the two
/// embeddings (√p, i) ↦ (±√p, ±i), and, if with_i, the unit i acting as
/// diag(1, i, −i).
AnalysisInput unit_solvmanifold(long p, bool with_i);

/// Complex Heisenberg group modulo its Gaussian-integer points.
AnalysisInput iwasawa();

/// ℂⁿ modulo the lattice ℤ[i]ⁿ.
AnalysisInput torus(long n);

/// SL₂(ℂ) × ℂ modulo a lattice built from a cocompact Λ ⊂ SL₂(ℂ) with
/// rank(Λ/Λ′) = rank. Λ enters symbolically.
AnalysisInput sl2_times_c(long rank);

}  // namespace cpm::examples
