#include "cpm/closure.hpp"

namespace cpm {

namespace {

FieldElement dot(const VecF& a, const VecF& b) {
  FieldElement s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

bool is_integer(const FieldElement& x) { return x.is_rational() && x.a().get_den() == 1; }

// Integer rows spanning the same rational row space as `rows`.
IntMatrix clear_denominators(const std::vector<Vec<Rational>>& rows, std::size_t n) {
  IntMatrix out(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Integer l = 1;
    for (const auto& q : rows[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      Rational scaled = rows[r][c] * Rational(l);
      out(r, c) = scaled.get_num();
    }
  }
  return out;
}

}  // namespace

VecF realify(const VecF& z) {
  VecF x;
  x.reserve(2 * z.size());
  for (const auto& c : z) {
    x.push_back(c.real_part());
    x.push_back(c.imag_part());
  }
  return x;
}

VecF complexify(const VecF& x) {
  VecF z(x.size() / 2, FieldElement(0));
  for (std::size_t j = 0; j < z.size(); ++j) z[j] = x[2 * j] + FieldElement::imaginary_unit() * x[2 * j + 1];
  return z;
}

ClosedSubgroup real_subgroup_closure(const std::vector<VecF>& vectors, std::size_t m, const FieldDescriptor& field) {
  for (const auto& v : vectors) {
    if (v.size() != m) throw Error(ErrorKind::DimensionMismatch, "closure: vector length mismatch");
    for (const auto& x : v)
      if (!x.is_real()) throw Error(ErrorKind::NonRealInput, "closure: real coordinates expected");
  }
  ClosedSubgroup out;
  out.field_ = field;
  out.span_ = SubspaceF::span(m, vectors);
  std::size_t n = vectors.size();

  // U = image of w ↦ (w·v_i)_i. Its rational points are cut out by the
  // rational and √d parts of the relations y with Σ y_i v_i = 0.
  std::vector<Vec<Rational>> relation_parts;
  if (n > 0) {
    MatrixF rows = MatrixF::from_rows(vectors, m);
    for (const auto& y : kernel(rows.transpose())) {
      Vec<Rational> p(n), q(n);
      for (std::size_t i = 0; i < n; ++i) {
        p[i] = y[i].a();
        q[i] = y[i].b();
      }
      relation_parts.push_back(p);
      if (field.has_real_radical()) relation_parts.push_back(q);
    }
  }
  std::vector<Vec<Integer>> dual;  // ℤ-basis of U ∩ ℤⁿ
  if (relation_parts.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec<Integer> e(n, Integer(0));
      e[i] = 1;
      dual.push_back(e);
    }
  } else {
    dual = integer_kernel(clear_denominators(relation_parts, n));
  }

  // Characters w_l with w_l·v_i = (n_l)_i, chosen inside V.
  std::vector<VecF> basis = out.span_.basis();
  std::size_t r = basis.size();
  MatrixF gram(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) gram(i, j) = dot(vectors[i], basis[j]);
  // Rows of G = (v_i · b_j); a character c·b has values G·c.
  MatrixF gram_v(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram_v(i, j) = dot(basis[i], basis[j]);
  MatrixF values(dual.size(), r);  // A(l, j) = w_l · b_j
  for (std::size_t l = 0; l < dual.size(); ++l) {
    VecF target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = FieldElement(Rational(dual[l][i]));
    auto c = solve(gram, target);
    if (!c) throw Error(ErrorKind::Singular, "closure: dual character system is inconsistent");
    VecF w(m, FieldElement(0));
    for (std::size_t j = 0; j < r; ++j) w = w + scale((*c)[j], basis[j]);
    out.characters_.push_back(w);
    VecF row = gram_v * *c;
    for (std::size_t j = 0; j < r; ++j) values(l, j) = row[j];
  }

  std::vector<VecF> component;
  if (dual.empty()) {
    component = basis;
  } else {
    for (const auto& c : kernel(values)) {
      VecF v(m, FieldElement(0));
      for (std::size_t j = 0; j < r; ++j) v = v + scale(c[j], basis[j]);
      component.push_back(v);
    }
  }
  out.identity_component_ = SubspaceF::span(m, component);

  // Integer combinations of the v_i hitting each unit vector of ℤ^s.
  if (!dual.empty()) {
    IntMatrix nmat(dual.size(), n);
    for (std::size_t l = 0; l < dual.size(); ++l)
      for (std::size_t i = 0; i < n; ++i) nmat(l, i) = dual[l][i];
    auto snf = smith_normal_form(nmat);
    for (std::size_t l = 0; l < dual.size(); ++l) {
      if (snf.D(l, l) != 1) throw Error(ErrorKind::Singular, "closure: dual basis is not saturated");
      Vec<Integer> y(n, Integer(0));
      for (std::size_t i = 0; i < dual.size(); ++i) y[i] = snf.U_inv(i, l);
      VecF g(m, FieldElement(0));
      for (std::size_t j = 0; j < n; ++j) {
        Integer cj = 0;
        for (std::size_t i = 0; i < n; ++i) cj += snf.V_inv(j, i) * y[i];
        if (cj != 0) g = g + scale(FieldElement(Rational(cj)), vectors[j]);
      }
      out.discrete_generators_.push_back(g);
    }
  }

  std::vector<VecF> complex_vectors;
  for (const auto& b : out.identity_component_.basis()) complex_vectors.push_back(complexify(b));
  out.complex_core_ = SubspaceF::span(m / 2, complex_vectors);
  return out;
}

ClosedSubgroup subgroup_closure(const std::vector<VecF>& vectors, std::size_t k, const FieldDescriptor& field) {
  std::vector<VecF> real;
  for (const auto& v : vectors) {
    if (v.size() != k) throw Error(ErrorKind::DimensionMismatch, "closure: vector length mismatch");
    real.push_back(realify(v));
  }
  return real_subgroup_closure(real, 2 * k, field);
}

bool ClosedSubgroup::contains(const VecF& x) const {
  if (!span_.contains(x)) return false;
  for (const auto& w : characters_)
    if (!is_integer(dot(w, x))) return false;
  return true;
}

std::vector<VecF> ClosedSubgroup::generators() const {
  std::vector<VecF> out = discrete_generators_;
  if (!identity_component_.is_zero() && !field_.has_real_radical())
    throw Error(ErrorKind::ScalarFieldTooSmall, "closure: a dense component needs an irrational radical");
  FieldElement root = FieldElement::sqrt_d(field_.d);
  for (const auto& b : identity_component_.basis()) {
    out.push_back(b);
    out.push_back(scale(root, b));
  }
  return out;
}

bool operator==(const ClosedSubgroup& a, const ClosedSubgroup& b) {
  if (a.identity_component_ != b.identity_component_ || a.discrete_rank() != b.discrete_rank()) return false;
  for (const auto& g : a.discrete_generators_)
    if (!b.contains(g)) return false;
  for (const auto& g : b.discrete_generators_)
    if (!a.contains(g)) return false;
  return true;
}

AlbaneseResult albanese_dimension(const std::vector<VecF>& images, std::size_t k, const FieldDescriptor& field) {
  AlbaneseResult out;
  std::size_t k0 = k;
  MatrixF projection = MatrixF::identity(k0);  // ℂ^{k0} → current quotient
  std::vector<VecF> current = images;
  for (;;) {
    ++out.rounds;
    ClosedSubgroup closure = subgroup_closure(current, k, field);
    if (closure.complex_core().is_zero()) {
      out.albanese_dim = k;
      out.lattice_rank = closure.discrete_rank();
      break;
    }
    QuotientF q(closure.complex_core(), SubspaceF::full(k));
    for (auto& v : current) v = q.project(v);
    std::vector<VecF> columns;
    for (std::size_t c = 0; c < k0; ++c) columns.push_back(q.project(projection.column(c)));
    k = q.dim();
    projection = MatrixF::from_columns(columns, k);
  }
  out.complex_core = SubspaceF::span(k0, kernel(projection));
  if (out.lattice_rank < 2 * out.albanese_dim) out.flags.push_back("IMAGE_NOT_COCOMPACT");
  return out;
}

AlbaneseResult albanese_dimension(const LieAlgebra& lie, const LatticeData& lattice) {
  std::size_t k = abelianization_quotient(lie).dim();
  std::vector<VecF> images;
  for (const auto& g : lattice.generators) {
    if (!g.abelianization_image)
      throw Error(ErrorKind::MissingAbelianizationImages,
                  "generator '" + g.name + "': abelianization_image is required for the Albanese dimension");
    images.push_back(*g.abelianization_image);
  }
  return albanese_dimension(images, k, lie.field());
}

}  // namespace cpm
