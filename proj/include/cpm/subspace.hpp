#pragma once

#include <cstddef>
#include <vector>

#include "cpm/matrix.hpp"

namespace cpm {

/// Subspace of T^n stored as its reduced row echelon basis, so equal
/// subspaces have identical representations.
template <class T>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix<T>::identity(ambient);
    s.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<Vec<T>>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix<T> m = Matrix<T>::from_rows(vectors, ambient);
    s.pivots_ = rref_in_place(m);
    s.basis_ = Matrix<T>(s.pivots_.size(), ambient);
    for (std::size_t r = 0; r < s.pivots_.size(); ++r)
      for (std::size_t c = 0; c < ambient; ++c) s.basis_(r, c) = m(r, c);
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }
  bool is_full() const { return dim() == ambient_; }
  const Matrix<T>& basis_matrix() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Vec<T>> basis() const {
    std::vector<Vec<T>> out;
    for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
    return out;
  }

  /// Coordinates of v with respect to basis(); meaningful only if contains(v).
  Vec<T> coordinates(const Vec<T>& v) const {
    Vec<T> out(dim());
    for (std::size_t r = 0; r < dim(); ++r) out[r] = v[pivots_[r]];
    return out;
  }

  Vec<T> from_coordinates(const Vec<T>& coords) const {
    Vec<T> v(ambient_, T(0));
    for (std::size_t r = 0; r < dim(); ++r)
      if (!cpm::is_zero(coords[r]))
        for (std::size_t c = 0; c < ambient_; ++c)
          if (!cpm::is_zero(basis_(r, c))) v[c] += coords[r] * basis_(r, c);
    return v;
  }

  bool contains(const Vec<T>& v) const {
    check_ambient(v.size());
    return is_zero_vector(v - from_coordinates(coordinates(v)));
  }

  bool contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_.row(r))) return false;
    return true;
  }

  /// Rows φ with φ·v = 0 for every v in the subspace.
  std::vector<Vec<T>> annihilator() const {
    if (dim() == 0) {
      std::vector<Vec<T>> out;
      for (std::size_t i = 0; i < ambient_; ++i) out.push_back(unit_vector<T>(ambient_, i));
      return out;
    }
    return kernel(basis_);
  }

  friend Subspace operator+(const Subspace& a, const Subspace& b) {
    a.check_ambient(b.ambient_);
    auto vectors = a.basis();
    auto more = b.basis();
    vectors.insert(vectors.end(), more.begin(), more.end());
    return span(a.ambient_, vectors);
  }

  Subspace intersect(const Subspace& other) const {
    check_ambient(other.ambient_);
    auto rows = annihilator();
    auto more = other.annihilator();
    rows.insert(rows.end(), more.begin(), more.end());
    if (rows.empty()) return full(ambient_);
    return span(ambient_, kernel(Matrix<T>::from_rows(rows, ambient_)));
  }

  /// {m v : v in this}.
  Subspace image(const Matrix<T>& m) const {
    if (m.cols() != ambient_) throw Error(ErrorKind::DimensionMismatch, "image: matrix width mismatch");
    std::vector<Vec<T>> vectors;
    for (std::size_t r = 0; r < dim(); ++r) vectors.push_back(m * basis_.row(r));
    return span(m.rows(), vectors);
  }

  /// {v : m v in this}.
  Subspace preimage(const Matrix<T>& m) const {
    if (m.rows() != ambient_) throw Error(ErrorKind::DimensionMismatch, "preimage: matrix height mismatch");
    auto ann = annihilator();
    if (ann.empty()) return full(m.cols());
    Matrix<T> composed = Matrix<T>::from_rows(ann, ambient_) * m;
    return span(m.cols(), kernel(composed));
  }

  /// Matrix of m restricted to this invariant subspace, in basis() coordinates.
  Matrix<T> restrict(const Matrix<T>& m) const {
    Matrix<T> out(dim(), dim());
    for (std::size_t c = 0; c < dim(); ++c) {
      Vec<T> image_vec = m * basis_.row(c);
      if (!contains(image_vec)) throw Error(ErrorKind::NotInvariant, "restrict: subspace is not invariant");
      Vec<T> coords = coordinates(image_vec);
      for (std::size_t r = 0; r < dim(); ++r) out(r, c) = coords[r];
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check_ambient(std::size_t n) const {
    if (n != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace ambient dimension mismatch");
  }

  std::size_t ambient_ = 0;
  Matrix<T> basis_;
  std::vector<std::size_t> pivots_;
};

/// sup/sub with the canonical basis obtained by completing sub's echelon
/// basis with echelon rows of sup.
template <class T>
class Quotient {
 public:
  Quotient() = default;
  Quotient(Subspace<T> sub, Subspace<T> sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
    if (!sup_.contains(sub_)) throw Error(ErrorKind::DimensionMismatch, "quotient: sub is not contained in sup");
    std::size_t n = sup_.ambient();
    Subspace<T> current = sub_;
    for (const auto& row : sup_.basis()) {
      if (current.contains(row)) continue;
      complement_.push_back(row);
      current = current + Subspace<T>::span(n, {row});
    }
    // Left inverse of the combined basis restricted to its pivot columns.
    std::vector<Vec<T>> combined = sub_.basis();
    combined.insert(combined.end(), complement_.begin(), complement_.end());
    if (combined.empty()) return;
    Matrix<T> b = Matrix<T>::from_rows(combined, n);
    Matrix<T> reduced = b;
    columns_ = rref_in_place(reduced);
    Matrix<T> square(combined.size(), combined.size());
    for (std::size_t r = 0; r < combined.size(); ++r)
      for (std::size_t c = 0; c < columns_.size(); ++c) square(r, c) = b(r, columns_[c]);
    solver_ = inverse(square);
  }

  const Subspace<T>& sub() const { return sub_; }
  const Subspace<T>& sup() const { return sup_; }
  std::size_t dim() const { return complement_.size(); }
  std::size_t ambient() const { return sup_.ambient(); }
  const std::vector<Vec<T>>& complement_basis() const { return complement_; }

  /// Coordinates of v (which must lie in sup) in the quotient basis.
  Vec<T> project(const Vec<T>& v) const {
    if (!sup_.contains(v)) throw Error(ErrorKind::NotInvariant, "project: vector not in the ambient subspace");
    Vec<T> out(dim(), T(0));
    if (dim() == 0) return out;
    std::size_t offset = sub_.dim();
    // x^T B = v^T  ⇒  x^T = v_P^T B_P^{-1}
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t c = 0; c < columns_.size(); ++c)
        if (!cpm::is_zero(v[columns_[c]])) out[j] += v[columns_[c]] * solver_(c, offset + j);
    return out;
  }

  Vec<T> lift(const Vec<T>& coords) const {
    Vec<T> v(ambient(), T(0));
    for (std::size_t j = 0; j < dim(); ++j)
      if (!cpm::is_zero(coords[j])) v = v + scale(coords[j], complement_[j]);
    return v;
  }

  /// Induced map on sup/sub of an endomorphism preserving both spaces.
  Matrix<T> induced(const Matrix<T>& m) const {
    Matrix<T> out(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec<T> coords = project(m * complement_[j]);
      for (std::size_t i = 0; i < dim(); ++i) out(i, j) = coords[i];
    }
    return out;
  }

 private:
  Subspace<T> sub_, sup_;
  std::vector<Vec<T>> complement_;
  std::vector<std::size_t> columns_;
  Matrix<T> solver_;
};

using SubspaceF = Subspace<FieldElement>;
using QuotientF = Quotient<FieldElement>;

}  // namespace cpm
