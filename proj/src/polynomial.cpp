#include "cpm/polynomial.hpp"

#include <stdexcept>

namespace cpm {

PolyF::PolyF(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void PolyF::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t PolyF::degree() const {
  if (coeffs_.empty()) throw std::domain_error("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

const FieldElement& PolyF::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

FieldElement PolyF::evaluate(const FieldElement& x) const {
  FieldElement acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

MatrixF PolyF::evaluate(const MatrixF& m) const {
  MatrixF acc(m.rows(), m.cols());
  MatrixF id = MatrixF::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

PolyF PolyF::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<FieldElement> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = FieldElement(static_cast<long>(k)) * coeffs_[k];
  return PolyF(std::move(out));
}

PolyF PolyF::monic() const {
  if (is_zero()) return {};
  FieldElement inv = leading().inverse();
  std::vector<FieldElement> out(coeffs_);
  for (auto& c : out) c = inv * c;
  return PolyF(std::move(out));
}

bool PolyF::has_real_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.is_real()) return false;
  return true;
}

bool PolyF::has_rational_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.is_rational()) return false;
  return true;
}

PolyF operator+(const PolyF& a, const PolyF& b) {
  std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
  return PolyF(std::move(out));
}

PolyF operator-(const PolyF& a, const PolyF& b) { return a + (-b); }

PolyF PolyF::operator-() const {
  std::vector<FieldElement> out(coeffs_);
  for (auto& c : out) c = -c;
  return PolyF(std::move(out));
}

PolyF operator*(const PolyF& a, const PolyF& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyF(std::move(out));
}

std::string PolyF::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_string() + ")";
    if (k > 0) out += k == 1 ? "*x" : "*x^" + std::to_string(k);
  }
  return out;
}

std::pair<PolyF, PolyF> divmod(const PolyF& a, const PolyF& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<FieldElement> rem(a.coefficients());
  std::size_t db = b.degree();
  if (rem.size() <= db) return {PolyF(), a};
  std::vector<FieldElement> quot(rem.size() - db);
  FieldElement inv_lead = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    FieldElement factor = rem[k] * inv_lead;
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coefficient(j);
  }
  return {PolyF(std::move(quot)), PolyF(std::move(rem))};
}

PolyF gcd(PolyF a, PolyF b) {
  while (!b.is_zero()) {
    PolyF r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// Sign changes in a sequence of nonzero signs.
std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t sturm_real_root_count(const PolyF& p) {
  if (p.is_zero()) throw std::domain_error("Sturm count of the zero polynomial");
  if (!p.has_real_coefficients())
    throw Error(ErrorKind::NonRealCoefficients, "Sturm sequence requires real coefficients: " + p.to_string());
  std::vector<PolyF> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    PolyF r = divmod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(-r);
  }
  seq.pop_back();
  std::vector<int> at_pos_inf;
  std::vector<int> at_neg_inf;
  for (const auto& q : seq) {
    int lead = sign_real(q.leading());
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back(q.degree() % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
}

PolyF characteristic_polynomial(const MatrixF& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
  // Faddeev–LeVerrier: M_k = A M_{k−1} + c_{n−k+1} I, c_{n−k} = −tr(A M_k)/k.
  std::size_t n = m.rows();
  std::vector<FieldElement> coeffs(n + 1);
  coeffs[n] = FieldElement(1);
  MatrixF id = MatrixF::identity(n);
  MatrixF mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + coeffs[n - k + 1] * id;
    MatrixF amk = m * mk;
    FieldElement trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    coeffs[n - k] = -trace / FieldElement(static_cast<long>(k));
  }
  return PolyF(std::move(coeffs));
}

MinimalPolynomial matrix_min_poly(const MatrixF& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "minimal polynomial of non-square matrix");
  std::size_t n = m.rows();
  std::size_t n2 = n * n;
  // Columns are vec(M^0), vec(M^1), ...; stop at the first dependency.
  std::vector<VecF> powers;
  MatrixF power = MatrixF::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    VecF flat(n2);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) flat[r * n + c] = power(r, c);
    if (!powers.empty()) {
      MatrixF basis = MatrixF::from_columns(powers, n2);
      if (auto combo = solve(basis, flat)) {
        std::vector<FieldElement> coeffs(k + 1);
        for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*combo)[j];
        coeffs[k] = FieldElement(1);
        PolyF poly(std::move(coeffs));
        bool semisimple = gcd(poly, poly.derivative()).degree() == 0;
        return {poly, semisimple};
      }
    } else if (n == 0) {
      return {PolyF::constant(FieldElement(1)), true};
    }
    powers.push_back(std::move(flat));
    power = power * m;
  }
  throw std::logic_error("minimal polynomial search exceeded degree n");
}

}  // namespace cpm
