#include "cpm/zmodule.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cpm;
using namespace cpm::testing;

namespace {

IntMatrix random_unimodular(Random& rng, std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
    if (i == j) continue;
    long k = rng.integer(-2, 2);
    for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
  }
  return m;
}

void check_decomposition(const IntMatrix& a, const SmithDecomposition& s) {
  CHECK(s.U * s.D * s.V == a);
  CHECK(s.U_inv * a * s.V_inv == s.D);
  CHECK(abs(det_int(s.U)) == 1);
  CHECK(abs(det_int(s.V)) == 1);
  CHECK(s.U * s.U_inv == IntMatrix::identity(a.rows()));
  CHECK(s.V * s.V_inv == IntMatrix::identity(a.cols()));
  for (std::size_t r = 0; r < s.D.rows(); ++r)
    for (std::size_t c = 0; c < s.D.cols(); ++c)
      if (r != c) CHECK(s.D(r, c) == 0);
  auto divs = s.elementary_divisors();
  for (std::size_t k = 0; k + 1 < divs.size(); ++k) {
    CHECK(divs[k] > 0);
    CHECK(mpz_divisible_p(divs[k + 1].get_mpz_t(), divs[k].get_mpz_t()) != 0);
  }
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  IntMatrix diag{{1, 0}, {0, 6}};
  auto s1 = smith_normal_form(diag);
  CHECK(s1.D == diag);
  IntMatrix a{{2, 4}, {6, 8}};
  auto s2 = smith_normal_form(a);
  CHECK(s2.D == IntMatrix{{2, 0}, {0, 4}});
  check_decomposition(a, s2);
  IntMatrix zero(2, 3);
  auto s3 = smith_normal_form(zero);
  CHECK(s3.D.is_zero());
  CHECK(s3.rank() == 0);
  check_decomposition(zero, s3);
}

TEST_CASE("Smith normal form matches the gcd-of-minors oracle") {
  Random rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = random_int_matrix(rng, 3, 4, 9);
    auto s = smith_normal_form(a);
    check_decomposition(a, s);
    CHECK(s.elementary_divisors() == elementary_divisors_by_minors(a));
  }
}

TEST_CASE("Smith form is invariant under unimodular multiplication") {
  Random rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a = random_int_matrix(rng, 4, 3, 6);
    IntMatrix b = random_unimodular(rng, 4) * a * random_unimodular(rng, 3);
    CHECK(smith_normal_form(a).D == smith_normal_form(b).D);
  }
}

TEST_CASE("Hermite normal form spans the same lattice") {
  IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  IntMatrix h = hermite_normal_form(a);
  CHECK(h == IntMatrix{{2, 4, 4}, {0, 6, 0}, {0, 0, 12}});
  Random rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = random_int_matrix(rng, 3, 4, 5);
    IntMatrix hm = hermite_normal_form(m);
    CHECK(hermite_normal_form(random_unimodular(rng, 3) * m) == hm);
    CHECK(smith_normal_form(hm).elementary_divisors() == smith_normal_form(m).elementary_divisors());
  }
}

TEST_CASE("integer kernel") {
  IntMatrix a{{1, 2, 3}};
  auto k = integer_kernel(a);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK(is_zero_vector(a * v));
  // the kernel lattice has index 1 in its saturation
  IntMatrix kb = IntMatrix::from_columns(k, 3);
  auto divs = smith_normal_form(kb).elementary_divisors();
  for (const auto& d : divs) CHECK(d == 1);
}

TEST_CASE("abelianization examples") {
  auto free2 = abelianization_rank(2, {});
  CHECK(free2.free_rank == 2);
  CHECK(free2.torsion.empty());
  auto comm = abelianization_rank(2, {commutator(1, 2)});
  CHECK(comm.free_rank == 2);
  CHECK(comm.torsion.empty());
  auto cyclic = abelianization_rank(1, {{1, 1, 1}});
  CHECK(cyclic.free_rank == 0);
  CHECK(cyclic.torsion == std::vector<Integer>{3});
  // ⟨a,b | a²b³, a⁴b⁶⟩ → ℤ ⊕ ?; relation rows (2,3),(4,6): rank 1
  auto mixed = abelianization_rank(2, {{1, 1, 2, 2, 2}, {1, 1, 1, 1, 2, 2, 2, 2, 2, 2}});
  CHECK(mixed.free_rank == 1);
  CHECK(mixed.torsion.empty());
}

TEST_CASE("abelianization of the free group on n generators has rank n") {
  for (int n = 0; n < 6; ++n) CHECK(abelianization_rank(n, {}).free_rank == n);
}

TEST_CASE("malformed words are rejected") {
  CHECK_THROWS_AS(abelianization_rank(2, {{1, 3}}), Error);
  CHECK_THROWS_AS(abelianization_rank(2, {{0}}), Error);
}
