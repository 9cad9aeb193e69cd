#include "cpm/examples.hpp"
#include "cpm/invariants.hpp"
#include "cpm/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cpm;

TEST_CASE("Pell fundamental solutions") {
  using P = std::pair<Integer, Integer>;
  CHECK(examples::pell_fundamental(2) == P{3, 2});
  CHECK(examples::pell_fundamental(3) == P{2, 1});
  CHECK(examples::pell_fundamental(5) == P{9, 4});
  CHECK(examples::pell_fundamental(61) == P{Integer("1766319049"), Integer("226153980")});
}

TEST_CASE("Pell solutions match bounded search for p < 50") {
  for (long p = 2; p < 50; ++p) {
    long r = 1;
    while ((r + 1) * (r + 1) <= p) ++r;
    if (r * r == p) continue;
    auto searched = testing::pell_by_search(p, 100000);
    REQUIRE(searched);
    CHECK(examples::pell_fundamental(p) == *searched);
  }
}

TEST_CASE("Pell rejects bad parameters") {
  for (long p : {4L, 9L, 49L}) {
    try {
      examples::pell_fundamental(p);
      FAIL("expected PerfectSquareInput");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PerfectSquareInput);
    }
  }
  CHECK_THROWS_AS(examples::pell_fundamental(1), Error);
  CHECK_THROWS_AS(examples::pell_fundamental(-3), Error);
  CHECK_THROWS_AS(examples::unit_solvmanifold(16, false), Error);
  CHECK_THROWS_AS(examples::torus(0), Error);
  CHECK_THROWS_AS(examples::sl2_times_c(0), Error);
}

TEST_CASE("unit solvmanifold pair") {
  for (long p : {2L, 3L, 5L, 6L, 7L, 8L, 10L, 12L}) {
    auto plain = examples::unit_solvmanifold(p, false);
    auto twisted = examples::unit_solvmanifold(p, true);
    CHECK_NOTHROW(validate_lie_algebra(plain.lie));
    CHECK_NOTHROW(validate_lattice(plain.lie, plain.lattice));
    CHECK_NOTHROW(validate_lattice(twisted.lie, twisted.lattice));
    CHECK(io::input_to_json(AnalysisInput{plain.lie, {}, 4}) == io::input_to_json(AnalysisInput{twisted.lie, {}, 4}));
    CHECK(twisted.lattice.generators.size() == plain.lattice.generators.size() + 1);
    for (std::size_t g = 0; g < plain.lattice.generators.size(); ++g)
      CHECK(*plain.lattice.generators[g].ad == *twisted.lattice.generators[g].ad);

    auto r1 = analyze(plain);
    auto r2 = analyze(twisted);
    CHECK(r1.h1 == 3);
    CHECK(r1.w_certification == WCertification::CertifiedCommuting);
    CHECK(r2.h1 == 1);
    CHECK(r2.w_certification == WCertification::Trivial);
    CHECK(r1.b1_manifold.value == 2);
    CHECK(r2.b1_manifold.value == 2);
    REQUIRE(r1.albanese);
    CHECK(r1.albanese->albanese_dim == 1);
  }
}

TEST_CASE("large Pell units fall back to the known Betti number") {
  auto in = examples::unit_solvmanifold(61, false);
  CHECK_FALSE(in.lattice.presentation.has_value());
  CHECK(in.lattice.b1_manifold_override == 2);
  CHECK(analyze(in).h1 == 3);
}

TEST_CASE("Iwasawa manifold") {
  auto in = examples::iwasawa();
  CHECK_NOTHROW(validate_lattice(in.lie, in.lattice));
  auto r = analyze(in);
  CHECK(r.h1 == 2);
  // Γ_ab ⊗ ℚ is spanned by the four images in ℤ[i]², whose real rank is 4.
  CHECK(r.b1_manifold.value == 4);
  CHECK(r.rigid == Rigidity::NotRigid);
  REQUIRE(r.albanese);
  CHECK(r.albanese->albanese_dim == 2);
}

TEST_CASE("SL2 times C skeleton") {
  for (long rank : {1L, 2L, 5L}) {
    auto r = analyze(examples::sl2_times_c(rank));
    CHECK(r.h1 == rank + 1);
    CHECK(r.b1_manifold.value == rank + 2);
    REQUIRE(r.albanese);
    CHECK(r.albanese->albanese_dim == 0);
    CHECK(r.has_rank_one_factor);
  }
}

TEST_CASE("input documents round-trip") {
  for (const auto& in : {examples::unit_solvmanifold(5, true), examples::iwasawa(), examples::torus(3),
                         examples::sl2_times_c(2)}) {
    std::string text = io::input_to_json(in);
    auto parsed = io::parse_input(text);
    CHECK(io::input_to_json(parsed) == text);
    CHECK(io::report_to_json(analyze(parsed)) == io::report_to_json(analyze(in)));
  }
}

TEST_CASE("parse errors name the field") {
  auto message = [](const std::string& text) {
    try {
      io::parse_input(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("{").find("input") != std::string::npos);
  CHECK(message(R"({"field": {"d": 4}})").find("field.d") != std::string::npos);
  std::string base = R"({"field": {"d": 2}, "lie_algebra": {"dim": 2, "brackets": [{"i": 0, "j": 1, "k": 5, "c": "1"}]}})";
  CHECK(message(base).find("lie_algebra.brackets[0].k") != std::string::npos);
  std::string gen = R"({"field": {"d": 2}, "lie_algebra": {"dim": 1},
    "lattice": {"generators": [{"name": "q", "ad": [["1+i*x"]]}]}})";
  CHECK(message(gen).find("('q').ad[0][0]") != std::string::npos);
}
