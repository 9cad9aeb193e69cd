#include <algorithm>
#include <functional>

#include "cpm/algebras.hpp"
#include "cpm/examples.hpp"
#include "cpm/lattice.hpp"
#include "cpm/polynomial.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cpm;
using cpm::testing::Random;

namespace {

const FieldElement kAlpha(3, 2, 0, 0, 2);  // 3 + 2√2
const FieldElement kAlphaConj(3, -2, 0, 0, 2);

MatrixF word_value(const Word& w, const std::vector<MatrixF>& mats) {
  MatrixF out = MatrixF::identity(mats.front().rows());
  for (int letter : w) {
    const MatrixF& m = mats[static_cast<std::size_t>(std::abs(letter)) - 1];
    out = out * (letter > 0 ? m : inverse(m));
  }
  return out;
}

std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("automorphism validation examples") {
  auto heis = algebras::heisenberg();
  CHECK_NOTHROW(validate_automorphism(MatrixF::identity(3), heis));
  CHECK_NOTHROW(validate_automorphism(MatrixF::identity(8), algebras::sl3()));

  auto sol = algebras::unit_solvable(FieldDescriptor(2));
  CHECK_NOTHROW(validate_automorphism(MatrixF::diagonal({FieldElement(1), kAlpha, kAlphaConj}), sol));

  // Swapping x and y forces z ↦ −z; keeping z fixed leaves residual 2z on (x, y).
  MatrixF swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  std::string msg = error_message([&] { validate_automorphism(swap, heis, "s"); });
  CHECK(msg.find("(0, 1)") != std::string::npos);
  CHECK(msg.find("(0,0,2)") != std::string::npos);
  CHECK(msg.find("'s'") != std::string::npos);
  MatrixF swap_signed{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}};
  CHECK_NOTHROW(validate_automorphism(swap_signed, heis));

  MatrixF singular{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  CHECK_THROWS_AS(validate_automorphism(singular, heis), Error);
  try {
    validate_automorphism(singular, heis);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

TEST_CASE("automorphisms built from inner derivations pass validation") {
  // exp(ad x) for nilpotent ad x on the Heisenberg algebra is I + ad x.
  auto heis = algebras::heisenberg();
  Random rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    VecF v{rng.small_element(1), rng.small_element(1), rng.small_element(1)};
    MatrixF m = MatrixF::identity(3) + heis.ad(v);
    CHECK_NOTHROW(validate_automorphism(m, heis));
  }
}

TEST_CASE("lattice validation names the generator") {
  auto in = examples::unit_solvmanifold(2, false);
  CHECK_NOTHROW(validate_lattice(in.lie, in.lattice));
  in.lattice.generators[0].eigenvalues = std::vector<FieldElement>{1, 1, 1};
  std::string msg = error_message([&] { validate_lattice(in.lie, in.lattice); });
  CHECK(msg.find("'u'") != std::string::npos);

  auto bad_image = examples::torus(2);
  bad_image.lattice.generators[1].abelianization_image = VecF{1};
  CHECK(error_message([&] { validate_lattice(bad_image.lie, bad_image.lattice); }).find("'ie1'") !=
        std::string::npos);

  LatticeData empty;
  CHECK_THROWS_AS(validate_lattice(algebras::abelian(1), empty), Error);
}

TEST_CASE("induced action examples") {
  auto heis = examples::iwasawa();
  auto ci = characteristic_ideals(heis.lie);
  auto heis_action = induced_quotient_action(heis.lie, ci.b_mod_a, heis.lattice);
  CHECK(heis_action.dim() == 0);

  auto in = examples::unit_solvmanifold(2, false);
  auto sol = characteristic_ideals(in.lie);
  REQUIRE(sol.b_mod_a.dim() == 2);
  auto action = induced_quotient_action(in.lie, sol.b_mod_a, in.lattice);
  REQUIRE(action.names.front() == "u");
  CHECK(action.matrices[0] == MatrixF::diagonal({kAlpha, kAlphaConj}));
  for (std::size_t g = 1; g < action.matrices.size(); ++g) CHECK(action.matrices[g] == MatrixF::identity(2));
}

TEST_CASE("induced action errors") {
  auto lie = algebras::unit_solvable(FieldDescriptor(2));
  auto ci = characteristic_ideals(lie);
  LatticeData lattice;
  lattice.generators.push_back({"p", MatrixF{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, std::nullopt, std::nullopt});
  try {
    induced_quotient_action(lie, ci.b_mod_a, lattice);
    FAIL("expected NotInvariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvariant);
    CHECK(std::string(e.what()).find("'p'") != std::string::npos);
  }

  LatticeData symbolic;
  symbolic.generators.push_back({"s", std::nullopt, std::nullopt, std::nullopt});
  try {
    induced_quotient_action(lie, ci.b_mod_a, symbolic);
    FAIL("expected MissingAdjoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingAdjoint);
  }
  auto heis = algebras::heisenberg();
  CHECK(induced_quotient_action(heis, characteristic_ideals(heis).b_mod_a, symbolic).dim() == 0);
}

TEST_CASE("ad matrices and induced matrices satisfy the presentation relators") {
  for (const auto& in : {examples::unit_solvmanifold(2, false), examples::unit_solvmanifold(3, true),
                         examples::iwasawa(), examples::torus(2)}) {
    REQUIRE(in.lattice.presentation);
    std::vector<MatrixF> full;
    for (const auto& g : in.lattice.generators) full.push_back(*g.ad);
    auto action = induced_quotient_action(in.lie, characteristic_ideals(in.lie).b_mod_a, in.lattice);
    for (const auto& w : in.lattice.presentation->relators) {
      CHECK(word_value(w, full) == MatrixF::identity(in.lie.dim()));
      if (action.dim() > 0) CHECK(word_value(w, action.matrices) == MatrixF::identity(action.dim()));
    }
  }
}

TEST_CASE("basis changes conjugate the induced action") {
  Random rng(41);
  for (bool with_i : {false, true}) {
    auto in = examples::unit_solvmanifold(2, with_i);
    auto ref = induced_quotient_action(in.lie, characteristic_ideals(in.lie).b_mod_a, in.lattice);
    for (int trial = 0; trial < 4; ++trial) {
      auto moved = change_basis(in, rng.invertible(3, 2));
      CHECK_NOTHROW(validate_lie_algebra(moved.lie));
      CHECK_NOTHROW(validate_lattice(moved.lie, moved.lattice));
      auto action = induced_quotient_action(moved.lie, characteristic_ideals(moved.lie).b_mod_a, moved.lattice);
      REQUIRE(action.dim() == ref.dim());
      for (std::size_t g = 0; g < ref.matrices.size(); ++g)
        CHECK(characteristic_polynomial(action.matrices[g]) == characteristic_polynomial(ref.matrices[g]));
    }
  }
}

TEST_CASE("basis changes carry abelianization images along") {
  Random rng(8);
  auto in = examples::iwasawa();
  for (int trial = 0; trial < 5; ++trial) {
    MatrixF t = rng.invertible(3, 1);
    auto moved = change_basis(in, t);
    auto back = change_basis(moved, inverse(t));
    for (std::size_t g = 0; g < in.lattice.generators.size(); ++g) {
      CHECK(*back.lattice.generators[g].abelianization_image == *in.lattice.generators[g].abelianization_image);
      CHECK(*back.lattice.generators[g].ad == *in.lattice.generators[g].ad);
    }
  }
}
