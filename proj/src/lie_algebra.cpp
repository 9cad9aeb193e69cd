#include "cpm/lie_algebra.hpp"

#include <functional>

#include "cpm/eigen.hpp"

namespace cpm {

LieAlgebra::LieAlgebra(std::size_t dim, FieldDescriptor field, std::vector<std::string> labels)
    : dim_(dim), field_(field), labels_(std::move(labels)), table_(dim * dim, VecF(dim)) {
  if (labels_.empty())
    for (std::size_t i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != dim) throw Error(ErrorKind::DimensionMismatch, "basis label count differs from dimension");
}

void LieAlgebra::add_structure_constant(std::size_t i, std::size_t j, std::size_t k, const FieldElement& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_)
    throw Error(ErrorKind::DimensionMismatch, "structure constant index out of range");
  if (i == j) throw Error(ErrorKind::DimensionMismatch, "structure constant with i == j");
  table_[i * dim_ + j][k] += c;
  table_[j * dim_ + i][k] -= c;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const VecF& value) {
  if (value.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "bracket value has wrong length");
  table_[i * dim_ + j] = value;
  VecF neg(value);
  for (auto& x : neg) x = -x;
  table_[j * dim_ + i] = neg;
}

VecF LieAlgebra::bracket(const VecF& x, const VecF& y) const {
  VecF out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      FieldElement coeff = x[i] * y[j];
      const VecF& e = table_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!e[k].is_zero()) out[k] += coeff * e[k];
    }
  }
  return out;
}

MatrixF LieAlgebra::ad(const VecF& x) const {
  MatrixF m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    VecF col = bracket(x, basis_vector(j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

MatrixF LieAlgebra::ad_basis(std::size_t i) const {
  MatrixF m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = table_[i * dim_ + j][k];
  return m;
}

MatrixF LieAlgebra::killing_form() const {
  std::vector<MatrixF> ads;
  for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad_basis(i));
  MatrixF k(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      FieldElement trace(0);
      for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
          if (!ads[i](a, b).is_zero() && !ads[j](b, a).is_zero()) trace += ads[i](a, b) * ads[j](b, a);
      k(i, j) = trace;
      k(j, i) = trace;
    }
  return k;
}

LieAlgebra LieAlgebra::change_basis(const MatrixF& t) const {
  if (t.rows() != dim_ || t.cols() != dim_) throw Error(ErrorKind::DimensionMismatch, "basis change has wrong shape");
  MatrixF t_inv = inverse(t);
  LieAlgebra out(dim_, field_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = a + 1; b < dim_; ++b) out.set_bracket(a, b, t_inv * bracket(t.column(a), t.column(b)));
  return out;
}

LieAlgebra LieAlgebra::subalgebra(const SubspaceF& s) const {
  auto basis = s.basis();
  LieAlgebra out(basis.size(), field_);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      VecF v = bracket(basis[a], basis[b]);
      if (!s.contains(v)) throw Error(ErrorKind::NotInvariant, "subspace is not closed under the bracket");
      out.set_bracket(a, b, s.coordinates(v));
    }
  return out;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::size_t n = a.dim() + b.dim();
  std::vector<std::string> labels(a.labels());
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  FieldDescriptor field = a.field().d > 1 ? a.field() : b.field();
  LieAlgebra out(n, field, labels);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!a.bracket_of_basis(i, j)[k].is_zero()) out.add_structure_constant(i, j, k, a.bracket_of_basis(i, j)[k]);
  std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        if (!b.bracket_of_basis(i, j)[k].is_zero())
          out.add_structure_constant(o + i, o + j, o + k, b.bracket_of_basis(i, j)[k]);
  return out;
}

std::optional<JacobiReport> find_jacobi_violation(const LieAlgebra& lie) {
  std::size_t n = lie.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        VecF ei = lie.basis_vector(i), ej = lie.basis_vector(j), ek = lie.basis_vector(k);
        VecF residual = lie.bracket(ei, lie.bracket_of_basis(j, k)) + lie.bracket(ej, lie.bracket_of_basis(k, i)) +
                        lie.bracket(ek, lie.bracket_of_basis(i, j));
        if (!is_zero_vector(residual)) return JacobiReport{i, j, k, residual};
      }
  return std::nullopt;
}

void validate_lie_algebra(const LieAlgebra& lie) {
  if (auto bad = find_jacobi_violation(lie)) {
    const auto& l = lie.labels();
    throw Error(ErrorKind::JacobiViolation, "Jacobi identity fails for basis triple (" + std::to_string(bad->i) + "," +
                                                std::to_string(bad->j) + "," + std::to_string(bad->k) + ") = (" +
                                                l[bad->i] + "," + l[bad->j] + "," + l[bad->k] +
                                                "), residual " + to_string(bad->residual));
  }
}

SubspaceF bracket_spaces(const LieAlgebra& lie, const SubspaceF& a, const SubspaceF& b) {
  std::vector<VecF> vectors;
  auto ab = a.basis();
  auto bb = b.basis();
  for (const auto& x : ab)
    for (const auto& y : bb) {
      VecF v = lie.bracket(x, y);
      if (!is_zero_vector(v)) vectors.push_back(std::move(v));
    }
  return SubspaceF::span(lie.dim(), vectors);
}

bool is_subalgebra(const LieAlgebra& lie, const SubspaceF& s) { return s.contains(bracket_spaces(lie, s, s)); }

bool is_ideal(const LieAlgebra& lie, const SubspaceF& s) {
  return s.contains(bracket_spaces(lie, SubspaceF::full(lie.dim()), s));
}

std::vector<SubspaceF> derived_series(const LieAlgebra& lie, const SubspaceF& s) {
  std::vector<SubspaceF> series{s};
  for (;;) {
    SubspaceF next = bracket_spaces(lie, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<SubspaceF> lower_central_series(const LieAlgebra& lie, const SubspaceF& s) {
  std::vector<SubspaceF> series{s};
  for (;;) {
    SubspaceF next = bracket_spaces(lie, s, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const LieAlgebra& lie, const SubspaceF& s) { return derived_series(lie, s).back().is_zero(); }
bool is_nilpotent(const LieAlgebra& lie, const SubspaceF& s) { return lower_central_series(lie, s).back().is_zero(); }

bool killing_nondegenerate(const LieAlgebra& lie) {
  return lie.dim() == 0 || !determinant(lie.killing_form()).is_zero();
}

SubspaceF radical(const LieAlgebra& lie) {
  std::size_t n = lie.dim();
  SubspaceF derived = bracket_spaces(lie, SubspaceF::full(n), SubspaceF::full(n));
  if (derived.is_zero()) return SubspaceF::full(n);
  MatrixF rows = derived.basis_matrix() * lie.killing_form();
  return SubspaceF::span(n, kernel(rows));
}

SubspaceF nilradical(const LieAlgebra& lie, const SubspaceF& r) {
  std::size_t n = lie.dim();
  if (r.is_zero()) return SubspaceF::zero(n);
  auto r_basis = r.basis();
  std::vector<MatrixF> generators;
  for (const auto& x : r_basis) generators.push_back(lie.ad(x));
  auto flatten = [n](const MatrixF& m) {
    VecF v(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) v[a * n + b] = m(a, b);
    return v;
  };
  // Associative (non-unital) algebra generated by ad(r): close the span
  // under left multiplication by the generators.
  std::vector<MatrixF> algebra_basis;
  SubspaceF span = SubspaceF::zero(n * n);
  std::vector<MatrixF> frontier;
  for (const auto& g : generators) {
    VecF flat = flatten(g);
    if (span.contains(flat)) continue;
    span = span + SubspaceF::span(n * n, {flat});
    algebra_basis.push_back(g);
    frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<MatrixF> next;
    for (const auto& b : frontier)
      for (const auto& g : generators) {
        MatrixF product = g * b;
        VecF flat = flatten(product);
        if (span.contains(flat)) continue;
        span = span + SubspaceF::span(n * n, {flat});
        algebra_basis.push_back(product);
        next.push_back(std::move(product));
      }
    frontier = std::move(next);
  }
  // n = {x ∈ r : tr(ad x · b) = 0 for all b in the algebra}; the radical of
  // the trace form is the nilpotent radical of the algebra.
  MatrixF system(algebra_basis.size(), r_basis.size());
  for (std::size_t j = 0; j < algebra_basis.size(); ++j)
    for (std::size_t i = 0; i < r_basis.size(); ++i) {
      MatrixF prod = generators[i] * algebra_basis[j];
      FieldElement trace(0);
      for (std::size_t a = 0; a < n; ++a) trace += prod(a, a);
      system(j, i) = trace;
    }
  std::vector<VecF> vectors;
  for (const auto& coeffs : kernel(system)) {
    VecF v(n);
    for (std::size_t i = 0; i < r_basis.size(); ++i)
      if (!coeffs[i].is_zero()) v = v + scale(coeffs[i], r_basis[i]);
    vectors.push_back(std::move(v));
  }
  return SubspaceF::span(n, vectors);
}

StructureReport structure_report(const LieAlgebra& lie) {
  std::size_t n = lie.dim();
  SubspaceF full = SubspaceF::full(n);
  StructureReport rep;
  rep.derived_series = derived_series(lie, full);
  rep.lower_central_series = lower_central_series(lie, full);
  rep.derived = rep.derived_series.size() > 1 ? rep.derived_series[1] : rep.derived_series[0];
  rep.killing = lie.killing_form();
  rep.radical = radical(lie);
  rep.nilradical = nilradical(lie, rep.radical);
  rep.solvable = rep.derived_series.back().is_zero();
  rep.nilpotent = rep.lower_central_series.back().is_zero();
  rep.abelian = rep.derived.is_zero();
  rep.semisimple = n == 0 || !determinant(rep.killing).is_zero();
  return rep;
}

SubspaceF levi_subalgebra(const LieAlgebra& lie, const SubspaceF& r) {
  std::size_t n = lie.dim();
  if (r.is_zero()) return SubspaceF::full(n);
  if (r.is_full()) return SubspaceF::zero(n);

  // Complement of r spanned by its echelon non-pivot coordinates.
  std::vector<bool> pivot(n, false);
  for (auto p : r.pivots()) pivot[p] = true;
  std::vector<VecF> ys;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) ys.push_back(lie.basis_vector(c));
  std::size_t m = ys.size();

  // Structure constants of g/r in the basis ȳ.
  std::vector<VecF> combined = ys;
  auto r_basis = r.basis();
  combined.insert(combined.end(), r_basis.begin(), r_basis.end());
  MatrixF decompose = MatrixF::from_columns(combined, n);
  std::vector<std::vector<VecF>> quotient_constants(m, std::vector<VecF>(m, VecF(m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto coords = solve(decompose, lie.bracket(ys[i], ys[j]));
      if (!coords) throw Error(ErrorKind::LiftFailure, "complement does not span g/r");
      VecF c(coords->begin(), coords->begin() + static_cast<std::ptrdiff_t>(m));
      quotient_constants[i][j] = c;
      for (auto& x : c) x = -x;
      quotient_constants[j][i] = c;
    }

  auto error_of = [&](std::size_t i, std::size_t j) {
    VecF err = lie.bracket(ys[i], ys[j]);
    for (std::size_t l = 0; l < m; ++l)
      if (!quotient_constants[i][j][l].is_zero()) err = err - scale(quotient_constants[i][j][l], ys[l]);
    return err;
  };

  auto series = derived_series(lie, r);
  if (!series.back().is_zero()) throw Error(ErrorKind::LiftFailure, "radical is not solvable");
  for (std::size_t k = 0; k + 1 < series.size(); ++k) {
    const SubspaceF& current = series[k];
    const SubspaceF& next = series[k + 1];
    auto projection = next.annihilator();  // rows vanishing on r_{k+1}
    auto u = current.basis();
    std::size_t q = u.size();
    std::size_t unknowns = m * q;
    std::vector<VecF> rows;
    VecF rhs;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        VecF err = error_of(i, j);
        std::vector<VecF> columns(unknowns);
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t p = 0; p < q; ++p) {
            VecF col(n);
            if (a == j) col = col + lie.bracket(ys[i], u[p]);
            if (a == i) col = col + lie.bracket(u[p], ys[j]);
            if (!quotient_constants[i][j][a].is_zero()) col = col - scale(quotient_constants[i][j][a], u[p]);
            columns[a * q + p] = std::move(col);
          }
        for (const auto& phi : projection) {
          VecF row(unknowns);
          for (std::size_t c = 0; c < unknowns; ++c) {
            FieldElement acc(0);
            for (std::size_t t = 0; t < n; ++t)
              if (!phi[t].is_zero() && !columns[c][t].is_zero()) acc += phi[t] * columns[c][t];
            row[c] = acc;
          }
          FieldElement target(0);
          for (std::size_t t = 0; t < n; ++t)
            if (!phi[t].is_zero() && !err[t].is_zero()) target -= phi[t] * err[t];
          rows.push_back(std::move(row));
          rhs.push_back(target);
        }
      }
    if (rows.empty()) continue;
    auto solution = solve(MatrixF::from_rows(rows, unknowns), rhs);
    if (!solution)
      throw Error(ErrorKind::LiftFailure, "Levi correction system inconsistent at derived step " + std::to_string(k));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t p = 0; p < q; ++p)
        if (!(*solution)[a * q + p].is_zero()) ys[a] = ys[a] + scale((*solution)[a * q + p], u[p]);
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!is_zero_vector(error_of(i, j))) throw Error(ErrorKind::LiftFailure, "lifted complement is not a subalgebra");
  return SubspaceF::span(n, ys);
}

namespace {

// Centroid {T : T ad(x) = ad(x) T ∀x} of an intrinsic algebra, as matrices.
std::vector<MatrixF> centroid(const LieAlgebra& lie) {
  std::size_t n = lie.dim();
  std::vector<MatrixF> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(lie.ad_basis(i));
  // Unknown T(a,b) at index a*n + b; equation (T A − A T)(r, c) = 0.
  std::vector<VecF> rows;
  for (const auto& a_mat : ads)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        VecF row(n * n);
        bool any = false;
        for (std::size_t k = 0; k < n; ++k) {
          if (!a_mat(k, c).is_zero()) {
            row[r * n + k] += a_mat(k, c);
            any = true;
          }
          if (!a_mat(r, k).is_zero()) {
            row[k * n + c] -= a_mat(r, k);
            any = true;
          }
        }
        if (any) rows.push_back(std::move(row));
      }
  std::vector<MatrixF> out;
  auto basis = rows.empty() ? SubspaceF::full(n * n).basis() : kernel(MatrixF::from_rows(rows, n * n));
  for (const auto& v : basis) {
    MatrixF t(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) t(a, b) = v[a * n + b];
    out.push_back(std::move(t));
  }
  return out;
}

bool is_scalar(const MatrixF& t) {
  for (std::size_t a = 0; a < t.rows(); ++a)
    for (std::size_t b = 0; b < t.cols(); ++b) {
      if (a != b && !t(a, b).is_zero()) return false;
      if (a == b && t(a, a) != t(0, 0)) return false;
    }
  return true;
}

void split_ideal(const LieAlgebra& lie, const SubspaceF& ideal, std::vector<SimpleIdeal>& out) {
  LieAlgebra intrinsic = lie.subalgebra(ideal);
  auto cent = centroid(intrinsic);
  if (cent.size() <= 1) {
    out.push_back({ideal, ideal.dim(), 1});
    return;
  }
  std::vector<MatrixF> trials = cent;
  for (std::size_t a = 0; a + 1 < cent.size(); ++a) trials.push_back(cent[a] + FieldElement(2) * cent[a + 1]);
  auto basis = ideal.basis();
  std::size_t k = ideal.dim();
  for (const auto& t : trials) {
    if (is_scalar(t)) continue;
    auto mp = matrix_min_poly(t);
    for (const auto& root : discover_roots_in_field(mp.poly, lie.field())) {
      MatrixF shifted = t - root.value * MatrixF::identity(k);
      auto ker = kernel(shifted);
      if (ker.empty() || ker.size() == k) continue;
      // T is semisimple on a semisimple algebra: I = ker ⊕ im, both ideals.
      auto to_ambient = [&](const std::vector<VecF>& coords) {
        std::vector<VecF> vs;
        for (const auto& c : coords) vs.push_back(ideal.from_coordinates(c));
        return SubspaceF::span(lie.dim(), vs);
      };
      std::vector<VecF> image_coords;
      for (std::size_t c = 0; c < k; ++c) image_coords.push_back(shifted.column(c));
      SubspaceF first = to_ambient(ker);
      SubspaceF second = to_ambient(SubspaceF::span(k, image_coords).basis());
      split_ideal(lie, first, out);
      split_ideal(lie, second, out);
      return;
    }
  }
  // Centroid is a field extension of F: Galois-conjugate simple factors.
  out.push_back({ideal, ideal.dim() / cent.size(), cent.size()});
}

}  // namespace

SimpleDecomposition simple_ideal_decomposition(const LieAlgebra& lie, const SubspaceF& s) {
  LieAlgebra intrinsic = lie.subalgebra(s);
  if (!killing_nondegenerate(intrinsic))
    throw Error(ErrorKind::NotSemisimple, "Killing form of the given subalgebra is degenerate");
  SimpleDecomposition out;
  if (s.is_zero()) return out;
  split_ideal(lie, s, out.ideals);
  for (const auto& ideal : out.ideals)
    if (ideal.simple_dim == 3) out.has_rank_one = true;
  return out;
}

CharacteristicIdeals characteristic_ideals(const LieAlgebra& lie, const StructureReport& report,
                                           const SubspaceF& levi) {
  CharacteristicIdeals ci;
  ci.levi = levi;
  ci.radical = report.radical;
  ci.nilradical = report.nilradical;
  ci.nilradical_derived = bracket_spaces(lie, ci.nilradical, ci.nilradical);
  ci.levi_radical = bracket_spaces(lie, levi, ci.radical);
  ci.radical_derived = bracket_spaces(lie, ci.radical, ci.radical);
  ci.a = ci.levi_radical + ci.nilradical_derived;
  ci.b = ci.radical_derived + ci.a;
  ci.b_mod_a = QuotientF(ci.a, ci.b);
  return ci;
}

CharacteristicIdeals characteristic_ideals(const LieAlgebra& lie) {
  auto report = structure_report(lie);
  return characteristic_ideals(lie, report, levi_subalgebra(lie, report.radical));
}

}  // namespace cpm
