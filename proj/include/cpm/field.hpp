#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cpm {

using Integer = mpz_class;
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

bool is_squarefree(std::int64_t n);

/// Coefficient field ℚ(√d)(i). d = 1 collapses to ℚ(i). √d embeds as the
/// positive real root and i as +i.
struct FieldDescriptor {
  std::int64_t d = 1;

  explicit FieldDescriptor(std::int64_t d_value = 1);
  bool has_real_radical() const { return d > 1; }
  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// a + b·√d + c·i + e·i·√d with rational coefficients.
///
/// Each element remembers the d it was built over. Elements without a √d
/// component are compatible with every field; mixing two different radicals
/// throws FieldMismatch.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational value) : a_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  FieldElement(Rational a, Rational b, Rational c, Rational e, std::int64_t d);

  static FieldElement imaginary_unit() { return FieldElement(0, 0, 1, 0, 0); }
  static FieldElement sqrt_d(std::int64_t d) { return FieldElement(0, 1, 0, 0, d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& e() const { return e_; }
  std::int64_t d() const { return d_; }
  bool has_radical() const { return sgn(b_) != 0 || sgn(e_) != 0; }

  bool is_zero() const { return sgn(a_) == 0 && !has_radical() && sgn(c_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(e_) == 0; }
  bool is_real() const { return sgn(c_) == 0 && sgn(e_) == 0; }
  bool is_rational() const { return is_real() && sgn(b_) == 0; }

  FieldElement real_part() const { return FieldElement(a_, b_, 0, 0, d_); }
  FieldElement imag_part() const { return FieldElement(c_, e_, 0, 0, d_); }
  /// Complex conjugation under the designated embedding.
  FieldElement conj() const { return FieldElement(a_, b_, -c_, -e_, d_); }
  /// The automorphism √d ↦ −√d fixing i.
  FieldElement radical_conj() const { return FieldElement(a_, -b_, c_, -e_, d_); }

  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(const FieldElement& lhs, const FieldElement& rhs);
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }
  FieldElement operator-() const { return FieldElement(-a_, -b_, -c_, -e_, d_); }

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.e_ == y.e_;
  }
  friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

  std::complex<long double> to_complex() const;

  /// Canonical text "a+b*r+c*i+e*i*r"; "0" for zero.
  std::string to_string() const;
  static FieldElement parse(std::string_view text, std::int64_t d);

 private:
  void normalize();
  std::int64_t common_d(const FieldElement& other) const;

  Rational a_, b_, c_, e_;
  std::int64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Exact sign of a real element of ℚ(√d); throws NonRealInput otherwise.
int sign_real(const FieldElement& x);

/// sign_real(x − y).
inline int compare_real(const FieldElement& x, const FieldElement& y) { return sign_real(x - y); }

/// If the rational q has a square root in ℚ(√d)(i), return one.
bool sqrt_of_rational_in_field(const Rational& q, std::int64_t d, FieldElement& root);

}  // namespace cpm
