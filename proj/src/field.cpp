#include "cpm/field.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <vector>

#include "cpm/error.hpp"

namespace cpm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonRealInput: return "NonRealInput";
    case ErrorKind::NonRealCoefficients: return "NonRealCoefficients";
    case ErrorKind::ScalarFieldTooSmall: return "ScalarFieldTooSmall";
    case ErrorKind::BadEigenvalueCertificate: return "BadEigenvalueCertificate";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::MalformedWord: return "MalformedWord";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::LiftFailure: return "LiftFailure";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::MissingAdjoint: return "MissingAdjoint";
    case ErrorKind::MissingB1Input: return "MissingB1Input";
    case ErrorKind::NoB1Data: return "NoB1Data";
    case ErrorKind::MissingAbelianizationImages: return "MissingAbelianizationImages";
    case ErrorKind::PerfectSquareInput: return "PerfectSquareInput";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
    if (part.empty()) return false;
    for (char ch : part)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string_view view(s);
  if (slash == std::string::npos) {
    if (!digits_ok(view, true)) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    return Rational(Integer(s));
  }
  auto num = view.substr(0, slash);
  auto den = view.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
  Integer d(std::string{den});
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
  Rational q(Integer(std::string{num}), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_squarefree(std::int64_t n) {
  if (n <= 0) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

FieldDescriptor::FieldDescriptor(std::int64_t d_value) : d(d_value) {
  if (!is_squarefree(d)) throw Error(ErrorKind::BadParams, "field d=" + std::to_string(d) + " is not a squarefree positive integer");
}

FieldElement::FieldElement(Rational a, Rational b, Rational c, Rational e, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), e_(std::move(e)), d_(d) {
  normalize();
}

void FieldElement::normalize() {
  if (d_ == 1) {
    a_ += b_;
    c_ += e_;
    b_ = 0;
    e_ = 0;
  } else if (d_ == 0 && has_radical()) {
    throw Error(ErrorKind::FieldMismatch, "radical component without a field");
  }
}

std::int64_t FieldElement::common_d(const FieldElement& other) const {
  if (has_radical() && other.has_radical() && d_ != other.d_)
    throw Error(ErrorKind::FieldMismatch,
                "mixing sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(other.d_) + ")");
  if (has_radical()) return d_;
  if (other.has_radical()) return other.d_;
  return d_ != 0 ? d_ : other.d_;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  d_ = common_d(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  c_ += rhs.c_;
  e_ += rhs.e_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  d_ = common_d(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  c_ -= rhs.c_;
  e_ -= rhs.e_;
  return *this;
}

namespace {

// (p + q√d)(p' + q'√d) in ℚ(√d).
inline void mul_real(const Rational& p, const Rational& q, const Rational& p2, const Rational& q2,
                     const Rational& d, Rational& out_p, Rational& out_q) {
  out_p = p * p2 + d * q * q2;
  out_q = p * q2 + q * p2;
}

}  // namespace

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  FieldElement out;
  out.d_ = x.common_d(y);
  if (x.is_rational()) {
    out.a_ = x.a_ * y.a_;
    out.b_ = x.a_ * y.b_;
    out.c_ = x.a_ * y.c_;
    out.e_ = x.a_ * y.e_;
    return out;
  }
  if (y.is_rational()) return y * x;
  Rational d(out.d_);
  Rational ac_p, ac_q, ce_p, ce_q, ai_p, ai_q, ci_p, ci_q;
  // (A + iC)(A' + iC') = (AA' − CC') + i(AC' + CA'), A = a + b√d, C = c + e√d.
  mul_real(x.a_, x.b_, y.a_, y.b_, d, ac_p, ac_q);
  mul_real(x.c_, x.e_, y.c_, y.e_, d, ce_p, ce_q);
  mul_real(x.a_, x.b_, y.c_, y.e_, d, ai_p, ai_q);
  mul_real(x.c_, x.e_, y.a_, y.b_, d, ci_p, ci_q);
  out.a_ = ac_p - ce_p;
  out.b_ = ac_q - ce_q;
  out.c_ = ai_p + ci_p;
  out.e_ = ai_q + ci_q;
  return out;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  *this = *this * rhs;
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in FieldElement");
  if (is_rational()) return FieldElement(1 / a_, 0, 0, 0, d_);
  // 1/(A + iC) = (A − iC)/(A² + C²); A² + C² = p + q√d is real and positive.
  Rational d(d_);
  Rational aa_p, aa_q, cc_p, cc_q;
  mul_real(a_, b_, a_, b_, d, aa_p, aa_q);
  mul_real(c_, e_, c_, e_, d, cc_p, cc_q);
  Rational p = aa_p + cc_p;
  Rational q = aa_q + cc_q;
  Rational norm = p * p - d * q * q;  // nonzero since d is not a square
  FieldElement inv_norm(p / norm, -q / norm, 0, 0, d_);
  return conj() * inv_norm;
}

std::complex<long double> FieldElement::to_complex() const {
  long double r = std::sqrt(static_cast<long double>(d_ > 0 ? d_ : 0));
  long double re = a_.get_d() + static_cast<long double>(b_.get_d()) * r;
  long double im = c_.get_d() + static_cast<long double>(e_.get_d()) * r;
  return {re, im};
}

std::string FieldElement::to_string() const {
  std::string out;
  auto term = [&out](const Rational& coeff, const char* symbol) {
    if (sgn(coeff) == 0) return;
    bool negative = sgn(coeff) < 0;
    Rational mag = abs(coeff);
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (symbol[0] == '\0') {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        out += '*';
      }
      out += symbol;
    }
  };
  term(a_, "");
  term(b_, "r");
  term(c_, "i");
  term(e_, "i*r");
  return out.empty() ? "0" : out;
}

FieldElement FieldElement::parse(std::string_view text, std::int64_t d) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty field element");
  Rational parts[4];
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorKind::ParseError, "bad field element '" + s + "'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string token = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (token.empty()) throw Error(ErrorKind::ParseError, "bad field element '" + s + "'");
    Rational coeff(1);
    bool has_i = false;
    bool has_r = false;
    bool has_coeff = false;
    std::size_t start = 0;
    while (start <= token.size()) {
      std::size_t star = token.find('*', start);
      std::string factor = token.substr(start, star == std::string::npos ? std::string::npos : star - start);
      if (factor == "i" && !has_i) {
        has_i = true;
      } else if (factor == "r" && !has_r) {
        has_r = true;
      } else if (!has_coeff && !factor.empty() && factor != "i" && factor != "r") {
        coeff = parse_rational(factor);
        has_coeff = true;
      } else {
        throw Error(ErrorKind::ParseError, "bad term '" + token + "' in '" + s + "'");
      }
      if (star == std::string::npos) break;
      start = star + 1;
    }
    if (negative) coeff = -coeff;
    if (has_r && d < 1) throw Error(ErrorKind::ParseError, "'r' used without a field radical in '" + s + "'");
    parts[(has_i ? 2 : 0) + (has_r ? 1 : 0)] += coeff;
  }
  return FieldElement(parts[0], parts[1], parts[2], parts[3], d);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

int sign_real(const FieldElement& x) {
  if (!x.is_real()) throw Error(ErrorKind::NonRealInput, "sign of non-real element " + x.to_string());
  int sa = sgn(x.a());
  int sb = sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a² with d·b².
  Rational lhs = x.a() * x.a();
  Rational rhs = Rational(x.d()) * x.b() * x.b();
  return lhs > rhs ? sa : sb;
}

namespace {

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  Integer n = sqrt(q.get_num());
  Integer m = sqrt(q.get_den());
  root = Rational(n, m);
  root.canonicalize();
  return true;
}

}  // namespace

bool sqrt_of_rational_in_field(const Rational& q, std::int64_t d, FieldElement& root) {
  Rational s;
  if (rational_sqrt(q, s)) {
    root = FieldElement(s, 0, 0, 0, d);
    return true;
  }
  if (rational_sqrt(-q, s)) {
    root = FieldElement(0, 0, s, 0, d);
    return true;
  }
  if (d > 1) {
    Rational dq(d);
    if (rational_sqrt(q / dq, s)) {
      root = FieldElement(0, s, 0, 0, d);  // q = d·s²
      return true;
    }
    if (rational_sqrt(-q / dq, s)) {
      root = FieldElement(0, 0, 0, s, d);
      return true;
    }
  }
  return false;
}

}  // namespace cpm
