#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpm/matrix.hpp"

namespace cpm {

/// Dense polynomial over F, coefficients in increasing degree. The zero
/// polynomial has no coefficients and no degree.
class PolyF {
 public:
  PolyF() = default;
  explicit PolyF(std::vector<FieldElement> coeffs);

  static PolyF constant(const FieldElement& c) { return PolyF({c}); }
  static PolyF x() { return PolyF({FieldElement(0), FieldElement(1)}); }
  /// x − root
  static PolyF linear(const FieldElement& root) { return PolyF({-root, FieldElement(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Throws std::domain_error for the zero polynomial.
  std::size_t degree() const;
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  const FieldElement& leading() const;
  FieldElement coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : FieldElement(0); }

  FieldElement evaluate(const FieldElement& x) const;
  MatrixF evaluate(const MatrixF& m) const;
  PolyF derivative() const;
  PolyF monic() const;
  bool has_real_coefficients() const;
  bool has_rational_coefficients() const;

  friend PolyF operator+(const PolyF& a, const PolyF& b);
  friend PolyF operator-(const PolyF& a, const PolyF& b);
  friend PolyF operator*(const PolyF& a, const PolyF& b);
  PolyF operator-() const;
  friend bool operator==(const PolyF& a, const PolyF& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const PolyF& a, const PolyF& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<PolyF, PolyF> divmod(const PolyF& a, const PolyF& b);
/// Monic gcd (zero if both are zero).
PolyF gcd(PolyF a, PolyF b);

/// Number of distinct real roots via a Sturm sequence with exact signs.
std::size_t sturm_real_root_count(const PolyF& p);

/// det(x·I − M), monic of degree n.
PolyF characteristic_polynomial(const MatrixF& m);

struct MinimalPolynomial {
  PolyF poly;
  bool semisimple = false;
};

/// Least-degree monic annihilator; semisimple iff gcd(m, m') = 1.
MinimalPolynomial matrix_min_poly(const MatrixF& m);

}  // namespace cpm
