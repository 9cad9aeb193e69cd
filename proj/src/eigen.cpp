#include "cpm/eigen.hpp"

#include <algorithm>
#include <map>

namespace cpm {

namespace {

using IntPoly = std::vector<Integer>;  // increasing degree

constexpr std::size_t kMaxDivisors = 4096;
constexpr std::size_t kMaxKroneckerTrials = 2'000'000;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Positive divisors of |n|, n ≠ 0; empty if n cannot be factored cheaply.
std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> factors;
  for (unsigned long p = 2; p <= 1'000'000 && Integer(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(Integer(p), e);
  }
  if (n > 1) {
    if (n > Integer(1'000'000) * 1'000'000 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return {};
    factors.emplace_back(n, 1);
  }
  std::vector<Integer> divisors{1};
  for (const auto& [prime, exponent] : factors) {
    std::size_t existing = divisors.size();
    Integer power = 1;
    for (unsigned k = 1; k <= exponent; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) divisors.push_back(divisors[i] * power);
    }
    if (divisors.size() > kMaxDivisors) return {};
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

Integer evaluate(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Exact division by a polynomial over ℤ; nullopt if not exact.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly rem(a);
  std::size_t db = b.size() - 1;
  if (rem.size() < b.size()) return std::nullopt;
  IntPoly quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer factor = rem[k] / b.back();
    quot[k - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return quot;
}

// Primitive integer polynomial with the same roots as a rational-coefficient p.
IntPoly to_primitive_integer(const PolyF& p) {
  Integer lcm_den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.a().get_den_mpz_t());
  IntPoly out;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Rational scaled = c.a() * lcm_den;
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content != 0 && content != 1)
    for (auto& c : out) c /= content;
  if (!out.empty() && out.back() < 0)
    for (auto& c : out) c = -c;
  return out;
}

// ∏ over Gal(F/ℚ) of the conjugated polynomial; rational coefficients.
PolyF norm_to_rationals(const PolyF& p, std::int64_t d) {
  auto map = [&p](auto&& sigma) {
    std::vector<FieldElement> coeffs;
    for (const auto& c : p.coefficients()) coeffs.push_back(sigma(c));
    return PolyF(std::move(coeffs));
  };
  PolyF out = p * map([](const FieldElement& c) { return c.conj(); });
  if (d > 1) {
    out = out * map([](const FieldElement& c) { return c.radical_conj(); }) *
          map([](const FieldElement& c) { return c.radical_conj().conj(); });
  }
  if (!out.has_rational_coefficients()) throw std::logic_error("norm polynomial is not rational");
  return out;
}

void rational_roots(IntPoly& f, std::vector<Rational>& roots) {
  trim(f);
  while (f.size() > 1 && f.front() == 0) {
    roots.emplace_back(0);
    f.erase(f.begin());
  }
  if (f.size() <= 1) return;
  auto num_divs = positive_divisors(f.front());
  auto den_divs = positive_divisors(f.back());
  if (num_divs.empty() || den_divs.empty()) return;
  for (const auto& q : den_divs) {
    for (const auto& pnum : num_divs) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), pnum.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Integer p_signed = sign * pnum;
        // f(p/q)·q^deg = 0 ⟺ (q x − p) | f
        IntPoly lin{-p_signed, q};
        while (f.size() > 1) {
          auto quot = divide_exact(f, lin);
          if (!quot) break;
          roots.emplace_back(p_signed, q);
          roots.back().canonicalize();
          f = *quot;
        }
        if (f.size() <= 1) return;
      }
    }
  }
}

// Monic rational quadratic factors x² + s x + t of f (f without rational roots).
void quadratic_factors(IntPoly& f, std::vector<std::pair<Rational, Rational>>& factors) {
  bool progress = true;
  while (progress && f.size() >= 3) {
    progress = false;
    if (f.size() == 3) {
      factors.emplace_back(Rational(f[1], f[2]), Rational(f[0], f[2]));
      factors.back().first.canonicalize();
      factors.back().second.canonicalize();
      f = {f[2]};
      return;
    }
    if (f.size() == 4) return;  // a cubic without rational roots is irreducible
    Integer vm = evaluate(f, -1), v0 = evaluate(f, 0), vp = evaluate(f, 1);
    auto dm = positive_divisors(vm), d0 = positive_divisors(v0), dp = positive_divisors(vp);
    if (dm.empty() || d0.empty() || dp.empty()) return;
    std::size_t trials = 0;
    for (const auto& c0 : d0) {
      for (const auto& cm_abs : dm) {
        for (const auto& cp_abs : dp) {
          for (int sm : {1, -1}) {
            for (int sp : {1, -1}) {
              if (++trials > kMaxKroneckerTrials) return;
              // h(0) = c0 > 0 fixes the overall sign of h.
              Integer cm = sm * cm_abs, cp = sp * cp_abs;
              Integer two_a = cp + cm - 2 * c0;
              Integer two_b = cp - cm;
              if (two_a <= 0 && two_a >= 0) continue;
              if (mpz_odd_p(two_a.get_mpz_t()) || mpz_odd_p(two_b.get_mpz_t())) continue;
              IntPoly h{c0, two_b / 2, two_a / 2};
              auto quot = divide_exact(f, h);
              if (!quot) continue;
              Rational lead(h[2]);
              factors.emplace_back(Rational(h[1]) / lead, Rational(h[0]) / lead);
              f = *quot;
              progress = true;
              break;
            }
            if (progress) break;
          }
          if (progress) break;
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
}

std::size_t strip_root(PolyF& p, const FieldElement& root) {
  std::size_t multiplicity = 0;
  PolyF lin = PolyF::linear(root);
  while (!p.is_zero() && p.degree() > 0) {
    auto [q, r] = divmod(p, lin);
    if (!r.is_zero()) break;
    p = q;
    ++multiplicity;
  }
  return multiplicity;
}

}  // namespace

std::vector<Eigenvalue> discover_roots_in_field(const PolyF& p, const FieldDescriptor& field) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  if (p.degree() == 0) return {};
  PolyF rational = p.has_rational_coefficients() ? p : norm_to_rationals(p, field.d);
  IntPoly f = to_primitive_integer(rational);

  std::vector<FieldElement> candidates;
  std::vector<Rational> rat;
  rational_roots(f, rat);
  for (const auto& r : rat) candidates.emplace_back(r, 0, 0, 0, field.d);
  std::vector<std::pair<Rational, Rational>> quads;
  quadratic_factors(f, quads);
  for (const auto& [s, t] : quads) {
    FieldElement root;
    if (!sqrt_of_rational_in_field(s * s - 4 * t, field.d, root)) continue;
    FieldElement half(Rational(1, 2));
    FieldElement minus_s(-s, 0, 0, 0, field.d);
    candidates.push_back(half * (minus_s + root));
    candidates.push_back(half * (minus_s - root));
  }

  PolyF remaining = p;
  std::vector<Eigenvalue> out;
  for (const auto& c : candidates) {
    bool seen = std::any_of(out.begin(), out.end(), [&c](const Eigenvalue& e) { return e.value == c; });
    if (seen) continue;
    std::size_t m = strip_root(remaining, c);
    if (m > 0) out.push_back({c, m});
  }
  return out;
}

std::vector<Eigenvalue> eigenvalues_in_field(const MatrixF& m, const FieldDescriptor& field,
                                             const std::vector<FieldElement>& hints) {
  PolyF chi = characteristic_polynomial(m);
  std::size_t n = m.rows();
  std::vector<Eigenvalue> out;
  std::size_t total = 0;
  PolyF remaining = chi;
  for (const auto& h : hints) {
    bool seen = std::any_of(out.begin(), out.end(), [&h](const Eigenvalue& e) { return e.value == h; });
    if (seen) continue;
    std::size_t mult = strip_root(remaining, h);
    if (mult > 0) {
      out.push_back({h, mult});
      total += mult;
    }
  }
  if (total < n) {
    for (auto& e : discover_roots_in_field(remaining, field)) {
      total += e.multiplicity;
      out.push_back(std::move(e));
    }
  }
  if (total < n)
    throw Error(ErrorKind::ScalarFieldTooSmall,
                "characteristic polynomial " + chi.to_string() + " does not split over Q(sqrt(" +
                    std::to_string(field.d) + "))(i) with the eigenvalues found; supply eigenvalue certificates");
  return out;
}

void verify_eigenvalue_certificate(const MatrixF& m, const std::vector<FieldElement>& eigenvalues) {
  PolyF product = PolyF::constant(FieldElement(1));
  for (const auto& lambda : eigenvalues) {
    MatrixF shifted = m - lambda * MatrixF::identity(m.rows());
    if (!determinant(shifted).is_zero())
      throw Error(ErrorKind::BadEigenvalueCertificate, lambda.to_string() + " is not an eigenvalue");
    product = product * PolyF::linear(lambda);
  }
  if (product != characteristic_polynomial(m))
    throw Error(ErrorKind::BadEigenvalueCertificate,
                "supplied eigenvalues do not reproduce the characteristic polynomial with multiplicities");
}

namespace {

// Monic polynomial whose roots are the distinct real roots of p, when these
// can be isolated without splitting p over F.
std::optional<PolyF> real_root_part(const PolyF& p) {
  PolyF squarefree = divmod(p, gcd(p, p.derivative())).first.monic();
  std::vector<FieldElement> conj_coeffs;
  for (const auto& c : squarefree.coefficients()) conj_coeffs.push_back(c.conj());
  // Roots closed under conjugation; contains every real root.
  PolyF closed = gcd(squarefree, PolyF(std::move(conj_coeffs)));
  if (closed.degree() == 0) return closed;
  std::size_t real = sturm_real_root_count(closed);
  if (real == 0) return PolyF::constant(FieldElement(1));
  if (real == closed.degree()) return closed;
  return std::nullopt;
}

}  // namespace

SubspaceF real_eigenspace_sum(const MatrixF& m, const FieldDescriptor& field,
                              const std::optional<std::vector<FieldElement>>& supplied) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "eigenspaces of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return SubspaceF::zero(0);
  std::vector<Eigenvalue> spectrum;
  if (supplied) {
    verify_eigenvalue_certificate(m, *supplied);
    for (const auto& lambda : *supplied) {
      auto it = std::find_if(spectrum.begin(), spectrum.end(), [&lambda](const Eigenvalue& e) { return e.value == lambda; });
      if (it == spectrum.end()) spectrum.push_back({lambda, 1});
      else ++it->multiplicity;
    }
  } else {
    // ker ∏(M − λ) over distinct real λ is the sum of the real eigenspaces.
    if (auto part = real_root_part(characteristic_polynomial(m))) {
      if (part->degree() == 0) return SubspaceF::zero(n);
      return SubspaceF::span(n, kernel(part->evaluate(m)));
    }
    spectrum = eigenvalues_in_field(m, field);
  }
  SubspaceF sum = SubspaceF::zero(n);
  for (const auto& e : spectrum) {
    if (!e.value.is_real()) continue;
    MatrixF shifted = m - e.value * MatrixF::identity(n);
    sum = sum + SubspaceF::span(n, kernel(shifted));
  }
  return sum;
}

bool is_real_semisimple(const MatrixF& m) {
  if (m.rows() == 0) return true;
  if (!matrix_min_poly(m).semisimple) return false;
  PolyF chi = characteristic_polynomial(m);
  if (!chi.has_real_coefficients()) return false;
  PolyF squarefree = divmod(chi, gcd(chi, chi.derivative())).first;
  return sturm_real_root_count(squarefree) == squarefree.degree();
}

}  // namespace cpm
