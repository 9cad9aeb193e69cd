#include "cpm/zmodule.hpp"

#include <algorithm>
#include <cstdlib>

namespace cpm {

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntMatrix& a)
      : d_(a),
        u_(IntMatrix::identity(a.rows())),
        u_inv_(IntMatrix::identity(a.rows())),
        v_(IntMatrix::identity(a.cols())),
        v_inv_(IntMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    std::size_t limit = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      if (!move_smallest_to(t, t)) break;
      for (;;) {
        if (!clear_cross(t)) continue;
        if (!fix_divisibility(t)) break;
      }
      if (d_(t, t) < 0) negate_row(t);
    }
    return {u_, d_, v_, u_inv_, v_inv_};
  }

 private:
  // Row ops update U⁻¹ (rows) and U (columns); column ops update V⁻¹ and V.
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    d_.swap_rows(i, j);
    u_inv_.swap_rows(i, j);
    u_.swap_columns(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    d_.swap_columns(i, j);
    v_inv_.swap_columns(i, j);
    v_.swap_rows(i, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(i, c) = -d_(i, c);
    for (std::size_t c = 0; c < u_inv_.cols(); ++c) u_inv_(i, c) = -u_inv_(i, c);
    for (std::size_t r = 0; r < u_.rows(); ++r) u_(r, i) = -u_(r, i);
  }
  // row_i += k·row_j
  void add_row(std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(i, c) += k * d_(j, c);
    for (std::size_t c = 0; c < u_inv_.cols(); ++c) u_inv_(i, c) += k * u_inv_(j, c);
    for (std::size_t r = 0; r < u_.rows(); ++r) u_(r, j) -= k * u_(r, i);
  }
  // col_i += k·col_j
  void add_col(std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < d_.rows(); ++r) d_(r, i) += k * d_(r, j);
    for (std::size_t r = 0; r < v_inv_.rows(); ++r) v_inv_(r, i) += k * v_inv_(r, j);
    for (std::size_t c = 0; c < v_.cols(); ++c) v_(j, c) -= k * v_(i, c);
  }

  bool move_smallest_to(std::size_t t, std::size_t from) {
    bool found = false;
    std::size_t best_r = 0, best_c = 0;
    Integer best;
    for (std::size_t r = from; r < d_.rows(); ++r)
      for (std::size_t c = from; c < d_.cols(); ++c) {
        if (d_(r, c) == 0) continue;
        Integer mag = abs(d_(r, c));
        if (!found || mag < best) {
          found = true;
          best = mag;
          best_r = r;
          best_c = c;
        }
      }
    if (!found) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  // Reduce row t and column t against the pivot. Returns false if a
  // nonzero remainder became the new pivot and another pass is needed.
  bool clear_cross(std::size_t t) {
    for (std::size_t r = t + 1; r < d_.rows(); ++r) {
      if (d_(r, t) == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), d_(r, t).get_mpz_t(), d_(t, t).get_mpz_t());
      add_row(r, t, -q);
      if (d_(r, t) != 0) {
        swap_rows(t, r);
        return false;
      }
    }
    for (std::size_t c = t + 1; c < d_.cols(); ++c) {
      if (d_(t, c) == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), d_(t, c).get_mpz_t(), d_(t, t).get_mpz_t());
      add_col(c, t, -q);
      if (d_(t, c) != 0) {
        swap_cols(t, c);
        return false;
      }
    }
    return true;
  }

  // If some remaining entry is not divisible by the pivot, fold its row into
  // row t and report that another pass is needed.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t r = t + 1; r < d_.rows(); ++r)
      for (std::size_t c = t + 1; c < d_.cols(); ++c)
        if (!mpz_divisible_p(d_(r, c).get_mpz_t(), d_(t, t).get_mpz_t())) {
          add_row(t, r, Integer(1));
          return true;
        }
    return false;
  }

  IntMatrix d_, u_, u_inv_, v_, v_inv_;
};

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithDecomposition::elementary_divisors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) { return SmithReducer(a).run(); }

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  std::size_t lead = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < h.cols() && lead < h.rows(); ++c) {
    // Euclid down column c until a single nonzero entry remains at `lead`.
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t r = lead; r < h.rows(); ++r)
        if (h(r, c) != 0 && (best == h.rows() || abs(h(r, c)) < abs(h(best, c)))) best = r;
      if (best == h.rows()) break;
      h.swap_rows(lead, best);
      bool done = true;
      for (std::size_t r = lead + 1; r < h.rows(); ++r) {
        if (h(r, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(lead, c).get_mpz_t());
        for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) -= q * h(lead, j);
        if (h(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (lead >= h.rows() || h(lead, c) == 0) continue;
    if (h(lead, c) < 0)
      for (std::size_t j = 0; j < h.cols(); ++j) h(lead, j) = -h(lead, j);
    for (std::size_t r = 0; r < lead; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, c).get_mpz_t(), h(lead, c).get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) -= q * h(lead, j);
    }
    pivot_cols.push_back(c);
    ++lead;
  }
  IntMatrix out(lead, h.cols());
  for (std::size_t r = 0; r < lead; ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) out(r, c) = h(r, c);
  return out;
}

std::vector<Vec<Integer>> integer_kernel(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  std::vector<Vec<Integer>> basis;
  for (std::size_t k = snf.rank(); k < a.cols(); ++k) basis.push_back(snf.V_inv.column(k));
  return basis;
}

IntMatrix relation_matrix(const Presentation& presentation) {
  int n = presentation.generator_count;
  if (n < 0) throw Error(ErrorKind::MalformedWord, "negative generator count");
  IntMatrix rel(presentation.relators.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < presentation.relators.size(); ++r) {
    for (int letter : presentation.relators[r]) {
      if (letter == 0 || std::abs(letter) > n)
        throw Error(ErrorKind::MalformedWord, "relator " + std::to_string(r) + " uses symbol " +
                                                  std::to_string(letter) + " outside ±1..±" + std::to_string(n));
      rel(r, static_cast<std::size_t>(std::abs(letter) - 1)) += letter > 0 ? 1 : -1;
    }
  }
  return rel;
}

AbelianInvariants abelianization_rank(int generator_count, const std::vector<Word>& relators) {
  IntMatrix rel = relation_matrix({generator_count, relators});
  AbelianInvariants out;
  if (rel.rows() == 0) {
    out.free_rank = generator_count;
    return out;
  }
  auto snf = smith_normal_form(rel);
  out.free_rank = generator_count - static_cast<int>(snf.rank());
  for (const auto& d : snf.elementary_divisors())
    if (d > 1) out.torsion.push_back(d);
  return out;
}

Word commutator(int a, int b) { return {a, b, -a, -b}; }

}  // namespace cpm
