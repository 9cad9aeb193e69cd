#include <algorithm>
#include <random>

#include "cpm/algebras.hpp"
#include "cpm/eigen.hpp"
#include "cpm/examples.hpp"
#include "cpm/invariants.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cpm;
using cpm::testing::Random;

namespace {

const FieldElement kAlpha(3, 2, 0, 0, 2);
const FieldElement kAlphaConj(3, -2, 0, 0, 2);
const FieldElement kI = FieldElement::imaginary_unit();

InducedAction action_on(std::size_t n, std::vector<MatrixF> matrices) {
  InducedAction a{QuotientF(SubspaceF::zero(n), SubspaceF::full(n)), {}, std::move(matrices), {}};
  for (std::size_t g = 0; g < a.matrices.size(); ++g) {
    a.names.push_back("g" + std::to_string(g));
    a.eigenvalue_hints.emplace_back();
  }
  return a;
}

MatrixF block_diagonal(const std::vector<MatrixF>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  MatrixF out(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(offset + r, offset + c) = b(r, c);
    offset += b.rows();
  }
  return out;
}

void check_w_invariants(const InducedAction& action, const WResult& w) {
  for (const auto& m : action.matrices) {
    MatrixF r = w.subspace.restrict(m);
    CHECK(is_real_semisimple(r));
  }
}

InvariantReport run(const AnalysisInput& in) { return analyze(in); }

AnalysisInput semisimple_input(const LieAlgebra& lie, std::optional<long> b1_quotient, long b1) {
  AnalysisInput in;
  in.lie = lie;
  in.lattice.linear_algebraic = true;
  in.lattice.generators.push_back({"g", MatrixF::identity(lie.dim()), std::nullopt, std::nullopt});
  in.lattice.b1_semisimple_quotient = b1_quotient;
  in.lattice.b1_manifold_override = b1;
  return in;
}

}  // namespace

TEST_CASE("W examples") {
  auto totally_real = action_on(2, {MatrixF::diagonal({kAlpha, kAlphaConj})});
  auto w = compute_W(totally_real, FieldDescriptor(2));
  CHECK(w.subspace.is_full());
  CHECK(w.certification == WCertification::CertifiedCommuting);

  auto with_i = action_on(2, {MatrixF::diagonal({kAlpha, kAlphaConj}), MatrixF::diagonal({kI, -kI})});
  w = compute_W(with_i, FieldDescriptor(2));
  CHECK(w.subspace.is_zero());
  CHECK(w.certification == WCertification::Trivial);

  auto empty = action_on(0, {MatrixF(0, 0)});
  w = compute_W(empty, FieldDescriptor(1));
  CHECK(w.subspace.dim() == 0);
  CHECK(w.certification == WCertification::Trivial);
}

TEST_CASE("W drops non-semisimple and non-real parts") {
  // Jordan block: only the eigenline survives.
  auto jordan = action_on(2, {MatrixF{{2, 1}, {0, 2}}});
  auto w = compute_W(jordan, FieldDescriptor(1));
  CHECK(w.subspace == SubspaceF::span(2, {VecF{1, 0}}));
  CHECK(w.certification == WCertification::CertifiedCommuting);

  // Eigenvalues √2 and −√2 are real although the field is ℚ(√2, i).
  auto irrational = action_on(2, {MatrixF{{0, 2}, {1, 0}}});
  CHECK(compute_W(irrational, FieldDescriptor(2)).subspace.is_full());
  // x² + 2 has roots ±i√2.
  auto imaginary = action_on(2, {MatrixF{{0, -2}, {1, 0}}});
  CHECK(compute_W(imaginary, FieldDescriptor(2)).subspace.is_zero());
}

TEST_CASE("W is maximal on labelled block constructions") {
  Random rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    std::int64_t d = trial % 2 ? 2 : 3;
    std::size_t generators = static_cast<std::size_t>(rng.integer(1, 3));
    std::vector<std::vector<MatrixF>> blocks(generators);
    std::vector<bool> good;
    std::size_t blocks_count = static_cast<std::size_t>(rng.integer(1, 3));
    for (std::size_t b = 0; b < blocks_count; ++b) {
      bool is_good = rng.integer(0, 1) == 1;
      good.push_back(is_good);
      if (is_good) {
        // Simultaneously diagonalizable with real eigenvalues.
        std::size_t size = static_cast<std::size_t>(rng.integer(1, 2));
        MatrixF p = rng.invertible(size, d, true);
        for (std::size_t g = 0; g < generators; ++g) {
          VecF diag;
          for (std::size_t i = 0; i < size; ++i) {
            FieldElement x = rng.real_element(d, 4);
            diag.push_back(x.is_zero() ? FieldElement(1) : x);
          }
          blocks[g].push_back(p * MatrixF::diagonal(diag) * inverse(p));
        }
      } else {
        // One designated generator is non-real or non-semisimple here.
        std::size_t bad = static_cast<std::size_t>(rng.integer(0, static_cast<long>(generators) - 1));
        bool rotation = rng.integer(0, 1) == 1;
        // A real Jordan block always has a real eigenline, so the
        // non-semisimple case uses a Jordan block over a rotation.
        MatrixF jordan_rotation{{0, -1, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, -1}, {0, 0, 1, 0}};
        for (std::size_t g = 0; g < generators; ++g) {
          if (g != bad) blocks[g].push_back(MatrixF::identity(rotation ? 2 : 4));
          else if (rotation) blocks[g].push_back(MatrixF{{0, -1}, {1, 0}});
          else blocks[g].push_back(jordan_rotation);
        }
      }
    }
    std::vector<MatrixF> mats;
    for (auto& bl : blocks) mats.push_back(block_diagonal(bl));
    std::size_t n = mats.front().rows();
    std::vector<VecF> expected;
    std::size_t offset = 0;
    for (std::size_t b = 0; b < blocks_count; ++b) {
      std::size_t size = blocks[0][b].rows();
      if (good[b])
        for (std::size_t i = 0; i < size; ++i) expected.push_back(unit_vector<FieldElement>(n, offset + i));
      offset += size;
    }
    // Hide the block structure behind a random basis.
    MatrixF t = rng.invertible(n, d);
    MatrixF t_inv = inverse(t);
    for (auto& m : mats) m = t * m * t_inv;
    for (auto& v : expected) v = t * v;
    auto action = action_on(n, mats);
    auto w = compute_W(action, FieldDescriptor(d));
    CHECK(w.subspace == SubspaceF::span(n, expected));
    check_w_invariants(action, w);
  }
}

TEST_CASE("non-commuting generators are checked on words") {
  // A and B are real reflections but AB is a rotation by 90°.
  MatrixF a{{1, 0}, {0, -1}};
  MatrixF b{{0, 1}, {1, 0}};
  auto action = action_on(3, {block_diagonal({a, MatrixF{{3}}}), block_diagonal({b, MatrixF{{5}}})});
  auto shallow = compute_W(action, FieldDescriptor(1), 1);
  CHECK(shallow.subspace.is_full());
  CHECK(shallow.certification == WCertification::CheckedToDepth);
  CHECK(shallow.depth == 1);
  auto deep = compute_W(action, FieldDescriptor(1), 2);
  CHECK(deep.subspace == SubspaceF::span(3, {VecF{0, 0, 1}}));
  CHECK(deep.certification == WCertification::CertifiedCommuting);
  CHECK(shallow.subspace.contains(deep.subspace));
  for (int depth = 1; depth < 4; ++depth)
    CHECK(compute_W(action, FieldDescriptor(1), depth).subspace.contains(
        compute_W(action, FieldDescriptor(1), depth + 1).subspace));
}

TEST_CASE("W does not depend on generator order") {
  Random rng(5);
  std::vector<MatrixF> mats{MatrixF::diagonal({kAlpha, kAlphaConj, 1}), MatrixF{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}},
                            MatrixF::diagonal({1, 1, kI})};
  auto ref = compute_W(action_on(3, mats), FieldDescriptor(2));
  CHECK(ref.subspace == SubspaceF::span(3, {VecF{1, 0, 0}}));
  for (int trial = 0; trial < 6; ++trial) {
    std::shuffle(mats.begin(), mats.end(), rng.engine());
    CHECK(compute_W(action_on(3, mats), FieldDescriptor(2)).subspace == ref.subspace);
  }
}

TEST_CASE("eigenvalue hints rescue discovery failures") {
  // √2 ± i are roots of x⁴ − 2x² + 9, irreducible over ℚ, so root discovery
  // cannot separate them from the real eigenvalue 1 without a certificate.
  MatrixF quad{{0, -3}, {1, FieldElement(0, 2, 0, 0, 2)}};
  MatrixF m = block_diagonal({quad, MatrixF{{1}}});
  CHECK_THROWS_AS(compute_W(action_on(3, {m}), FieldDescriptor(2)), Error);
  auto hinted = action_on(3, {m});
  hinted.eigenvalue_hints[0] = {FieldElement(1), FieldElement(0, 1, 1, 0, 2), FieldElement(0, 1, -1, 0, 2)};
  CHECK(compute_W(hinted, FieldDescriptor(2)).subspace == SubspaceF::span(3, {VecF{0, 0, 1}}));
}

TEST_CASE("h1 and b1 on the built-in examples") {
  auto g1 = run(examples::unit_solvmanifold(2, false));
  CHECK(g1.h1 == 3);
  CHECK(g1.h1_exactness == Exactness::Exact);
  CHECK(g1.b1_manifold.value == 2);
  auto g2 = run(examples::unit_solvmanifold(2, true));
  CHECK(g2.h1 == 1);
  CHECK(g2.rigid == Rigidity::NotRigid);

  for (long r : {1, 3}) {
    auto e1 = run(examples::sl2_times_c(r));
    CHECK(e1.h1 == r + 1);
    CHECK(e1.b1_manifold.value == r + 2);
    CHECK(e1.b1_manifold.source == ValueSource::User);
    CHECK(e1.b1_semisimple_quotient.source == ValueSource::User);
  }
  for (long n : {1, 2, 3}) {
    auto t = run(examples::torus(n));
    CHECK(t.h1 == n);
    CHECK(t.b1_manifold.value == 2 * n);
    CHECK(t.rigid == Rigidity::NotRigid);
    CHECK(t.deformable);
    CHECK(t.h1_tangent == n * n);
  }
}

TEST_CASE("b1 from presentations") {
  LatticeData heis;
  heis.presentation = Presentation{3, {{1, 2, -1, -2, -3}, commutator(1, 3), commutator(2, 3)}};
  CHECK(b1_manifold(heis).value == 2);
  CHECK(b1_manifold(heis).source == ValueSource::Presentation);
  heis.b1_manifold_override = 7;
  CHECK(b1_manifold(heis).value == 7);
  LatticeData none;
  CHECK_THROWS_AS(b1_manifold(none), Error);
}

TEST_CASE("semisimple inputs") {
  // sl₃ has no dimension-3 factor, so the quotient term is zero automatically.
  auto rigid = run(semisimple_input(algebras::sl3(), std::nullopt, 0));
  CHECK(rigid.h1 == 0);
  CHECK(rigid.b1_semisimple_quotient.source == ValueSource::AutoZero);
  CHECK(rigid.rigid == Rigidity::Rigid);
  CHECK_FALSE(rigid.deformable);

  try {
    run(semisimple_input(algebras::sl2(), std::nullopt, 0));
    FAIL("expected MissingB1Input");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingB1Input);
  }

  auto user = run(semisimple_input(algebras::sl2(), 4, 4));
  CHECK(user.h1 == 4);
  auto betti = std::find_if(user.crosschecks.begin(), user.crosschecks.end(),
                            [](const Crosscheck& c) { return c.name == "semisimple_betti"; });
  REQUIRE(betti != user.crosschecks.end());
  CHECK(betti->outcome == CheckOutcome::Pass);
  auto mismatch = run(semisimple_input(algebras::sl2(), 4, 3));
  CHECK(std::find_if(mismatch.crosschecks.begin(), mismatch.crosschecks.end(), [](const Crosscheck& c) {
          return c.name == "semisimple_betti" && c.outcome == CheckOutcome::Fail;
        }) != mismatch.crosschecks.end());
}

TEST_CASE("rigidity verdicts") {
  auto in = examples::torus(2);
  in.lattice.b1_manifold_override = 0;
  CHECK(run(in).rigid == Rigidity::Inconsistent);

  auto bound = examples::torus(2);
  bound.lattice.linear_algebraic = false;
  auto r = run(bound);
  CHECK(r.h1_exactness == Exactness::UpperBound);
  CHECK(r.rigid == Rigidity::NotRigid);
  bound.lattice.b1_manifold_override = 0;
  CHECK(run(bound).rigid == Rigidity::Rigid);

  auto rigid_bound = semisimple_input(algebras::sl3(), std::nullopt, 3);
  rigid_bound.lattice.linear_algebraic = false;
  CHECK(run(rigid_bound).rigid == Rigidity::Inconsistent);
}

TEST_CASE("cross-checks") {
  auto named = [](const InvariantReport& r, const std::string& name) {
    for (const auto& c : r.crosschecks)
      if (c.name == name) return c.outcome;
    return CheckOutcome::Skipped;
  };
  auto iw = run(examples::iwasawa());
  CHECK(named(iw, "nilpotent_reduction") == CheckOutcome::Pass);
  CHECK(named(iw, "semisimple_betti") == CheckOutcome::Skipped);
  auto sol = run(examples::unit_solvmanifold(2, false));
  CHECK(named(sol, "nilpotent_reduction") == CheckOutcome::Skipped);
  CHECK(named(sol, "nilpotent_radical_reduction") == CheckOutcome::Skipped);
  CHECK(named(sol, "rigidity_equivalence") == CheckOutcome::Pass);
  auto e1 = run(examples::sl2_times_c(2));
  CHECK(named(e1, "nilpotent_radical_reduction") == CheckOutcome::Skipped);
}

TEST_CASE("reported values are unchanged by basis changes") {
  Random rng(77);
  std::vector<AnalysisInput> corpus{examples::unit_solvmanifold(3, false), examples::unit_solvmanifold(3, true),
                                    examples::iwasawa(), examples::sl2_times_c(2), examples::torus(2)};
  for (const auto& in : corpus) {
    auto ref = run(in);
    for (int trial = 0; trial < 3; ++trial) {
      auto moved = change_basis(in, rng.invertible(in.lie.dim(), in.lie.field().d));
      auto r = run(moved);
      CHECK(r.h1 == ref.h1);
      CHECK(r.dim_W == ref.dim_W);
      CHECK(r.w_certification == ref.w_certification);
      CHECK(r.dim_b_mod_a == ref.dim_b_mod_a);
      CHECK(r.dim_nilradical == ref.dim_nilradical);
      CHECK(r.b1_manifold.value == ref.b1_manifold.value);
      REQUIRE(r.albanese.has_value() == ref.albanese.has_value());
      if (r.albanese) {
        CHECK(r.albanese->albanese_dim == ref.albanese->albanese_dim);
        CHECK(r.albanese->lattice_rank == ref.albanese->lattice_rank);
      }
    }
  }
}

TEST_CASE("assumptions are reported") {
  auto r = run(examples::sl2_times_c(1));
  auto has = [&r](const std::string& fragment) {
    return std::any_of(r.assumptions.begin(), r.assumptions.end(),
                       [&](const std::string& a) { return a.find(fragment) != std::string::npos; });
  };
  CHECK(has("cocompact lattice"));
  CHECK(has("UNVERIFIED"));
  CHECK(has("symbolic"));
  CHECK(has("user-supplied"));
}
