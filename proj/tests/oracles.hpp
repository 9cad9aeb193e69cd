#pragma once

// Independent oracles used by the unit tests and the acceptance run.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <utility>

#include "cpm/zmodule.hpp"
#include "test_support.hpp"

namespace cpm::testing {

// Number of distinct real roots from the eigenvalues of the companion matrix.
inline std::size_t floating_real_root_count(std::vector<long> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::size_t zero_root = 0;
  while (coeffs.size() > 1 && coeffs.front() == 0) {
    zero_root = 1;
    coeffs.erase(coeffs.begin());
  }
  int n = static_cast<int>(coeffs.size()) - 1;
  if (n <= 0) return zero_root;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -static_cast<double>(coeffs[i]) / coeffs[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<double> real_roots;
  for (int i = 0; i < n; ++i) {
    auto z = solver.eigenvalues()[i];
    if (std::abs(z.imag()) < 1e-7 * (1 + std::abs(z.real()))) real_roots.push_back(z.real());
  }
  std::sort(real_roots.begin(), real_roots.end());
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < real_roots.size(); ++i)
    if (i == 0 || real_roots[i] - real_roots[i - 1] > 1e-5) ++distinct;
  return distinct + zero_root;
}

inline IntMatrix random_int_matrix(Random& rng, std::size_t rows, std::size_t cols, long range) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.integer(-range, range);
  return m;
}

inline Integer det_int(const IntMatrix& m) {
  MatrixQ q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = Rational(m(r, c));
  Rational d = determinant(q);
  return d.get_num();
}

// d₁⋯d_k = gcd of all k×k minors.
inline std::vector<Integer> elementary_divisors_by_minors(const IntMatrix& a) {
  std::vector<Integer> minors_gcd;
  std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= limit; ++k) {
    Integer g = 0;
    std::vector<std::size_t> rows, cols;
    std::function<void(std::size_t)> pick_cols;
    std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
      if (rows.size() == k) {
        pick_cols(0);
        return;
      }
      for (std::size_t r = start; r < a.rows(); ++r) {
        rows.push_back(r);
        pick_rows(r + 1);
        rows.pop_back();
      }
    };
    pick_cols = [&](std::size_t start) {
      if (cols.size() == k) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
        Integer det = det_int(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
        return;
      }
      for (std::size_t c = start; c < a.cols(); ++c) {
        cols.push_back(c);
        pick_cols(c + 1);
        cols.pop_back();
      }
    };
    pick_rows(0);
    if (g == 0) break;
    minors_gcd.push_back(g);
  }
  std::vector<Integer> divisors;
  for (std::size_t k = 0; k < minors_gcd.size(); ++k)
    divisors.push_back(k == 0 ? minors_gcd[0] : Integer(minors_gcd[k] / minors_gcd[k - 1]));
  return divisors;
}

// Smallest y ≥ 1 with 1 + p·y² a perfect square.
inline std::optional<std::pair<Integer, Integer>> pell_by_search(long p, long max_y) {
  for (long y = 1; y <= max_y; ++y) {
    Integer n = 1 + Integer(p) * y * y, root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    if (root * root == n) return std::make_pair(root, Integer(y));
  }
  return std::nullopt;
}

}  // namespace cpm::testing
