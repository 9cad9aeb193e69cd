#include "cpm/examples.hpp"

#include "cpm/algebras.hpp"

namespace cpm::examples {

namespace {

constexpr long kMaxWordExponent = 2000;

MatrixF diagonal3(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  return MatrixF::diagonal({a, b, c});
}

void append_power(Word& w, int letter, const Integer& exponent) {
  long e = exponent.get_si();
  for (long i = 0; i < std::abs(e); ++i) w.push_back(e > 0 ? letter : -letter);
}

Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Relator g·τ_j·g⁻¹·(∏ τ_k^{A(k,j)})⁻¹ for each j.
void add_conjugation_relators(std::vector<Word>& relators, int g, const std::vector<int>& taus,
                              const std::vector<std::vector<Integer>>& a) {
  for (std::size_t j = 0; j < taus.size(); ++j) {
    Word image;
    for (std::size_t k = 0; k < taus.size(); ++k) append_power(image, taus[k], a[k][j]);
    Word w{g, taus[j], -g};
    Word inv = inverse_word(image);
    w.insert(w.end(), inv.begin(), inv.end());
    relators.push_back(w);
  }
}

std::vector<FieldElement> ones(std::size_t n) { return std::vector<FieldElement>(n, FieldElement(1)); }

}  // namespace

std::pair<Integer, Integer> pell_fundamental(long p) {
  if (p < 2) throw Error(ErrorKind::BadParams, "pell: p must be at least 2");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(p).get_mpz_t());
  if (root * root == p) throw Error(ErrorKind::PerfectSquareInput, "pell: " + std::to_string(p) + " is a perfect square");
  // √p = [a0; a1, a2, …] with m_{k+1} = d_k a_k − m_k, d_{k+1} = (p − m_{k+1}²)/d_k.
  Integer m = 0, d = 1, a = root;
  Integer h_prev = 1, h = a, k_prev = 0, k = 1;
  while (h * h - Integer(p) * k * k != 1) {
    m = d * a - m;
    d = (Integer(p) - m * m) / d;
    a = (root + m) / d;
    Integer h_next = a * h + h_prev, k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return {h, k};
}

AnalysisInput unit_solvmanifold(long p, bool with_i) {
  auto [x, y] = pell_fundamental(p);
  // √p = s·√d with d squarefree.
  long s = 1;
  for (long f = 2; f * f <= p; ++f)
    while (p % (s * s * f * f) == 0) s *= f;
  long d = p / (s * s);
  FieldDescriptor field(d);
  FieldElement root_p = FieldElement(Rational(s)) * FieldElement::sqrt_d(d);
  FieldElement i = FieldElement::imaginary_unit();
  FieldElement alpha = FieldElement(Rational(x)) + FieldElement(Rational(y)) * root_p;
  FieldElement alpha_conj = alpha.radical_conj();

  AnalysisInput in;
  in.lie = algebras::unit_solvable(field);
  in.lattice.linear_algebraic = true;
  auto& gens = in.lattice.generators;
  gens.push_back({"u", diagonal3(1, alpha, alpha_conj), VecF{FieldElement(1)},
                  std::vector<FieldElement>{FieldElement(1), alpha, alpha_conj}});
  gens.push_back({"z", MatrixF::identity(3), VecF{i}, ones(3)});
  // Translation by (ω, σ(ω)) where σ sends √p ↦ −√p and i ↦ −i.
  std::vector<FieldElement> basis{FieldElement(1), root_p, i, i * root_p};
  const char* names[] = {"tau1", "tau_sqrt", "tau_i", "tau_i_sqrt"};
  for (std::size_t j = 0; j < 4; ++j) {
    FieldElement w = basis[j];
    FieldElement w_sigma = w.conj().radical_conj();
    MatrixF ad = MatrixF::identity(3);
    ad(1, 0) = -w;
    ad(2, 0) = w_sigma;
    gens.push_back({names[j], ad, VecF{FieldElement(0)}, ones(3)});
  }
  if (with_i) gens.push_back({"w", diagonal3(1, i, -i), VecF{i * FieldElement(Rational(1, 4))},
                              std::vector<FieldElement>{FieldElement(1), i, -i}});

  // Multiplication by α and by i on the ℤ-basis (1, √p, i, i√p).
  std::vector<std::vector<Integer>> mult_alpha{
      {x, Integer(p) * y, 0, 0}, {y, x, 0, 0}, {0, 0, x, Integer(p) * y}, {0, 0, y, x}};
  std::vector<std::vector<Integer>> mult_i{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  if (x > kMaxWordExponent || Integer(p) * y > kMaxWordExponent) {
    // Γ_ab has free rank 2 (u and the loop) since A_α − I is invertible.
    in.lattice.b1_manifold_override = 2;
    return in;
  }
  Presentation pres;
  pres.generator_count = with_i ? 7 : 6;
  const int u = 1, z = 2, w = 7;
  std::vector<int> taus{3, 4, 5, 6};
  for (int g = 1; g <= pres.generator_count; ++g)
    if (g != z) pres.relators.push_back(commutator(z, g));
  for (std::size_t a = 0; a < taus.size(); ++a)
    for (std::size_t b = a + 1; b < taus.size(); ++b) pres.relators.push_back(commutator(taus[a], taus[b]));
  add_conjugation_relators(pres.relators, u, taus, mult_alpha);
  if (with_i) {
    add_conjugation_relators(pres.relators, w, taus, mult_i);
    pres.relators.push_back(commutator(u, w));
    pres.relators.push_back(Word{w, w, w, w, -z});
  }
  in.lattice.presentation = pres;
  return in;
}

AnalysisInput iwasawa() {
  FieldDescriptor field(1);
  FieldElement i = FieldElement::imaginary_unit();
  AnalysisInput in;
  in.lie = algebras::heisenberg(field);
  in.lattice.linear_algebraic = true;
  // Ad(exp(s·x)) sends y ↦ y + s·z; Ad(exp(s·y)) sends x ↦ x − s·z.
  auto along_x = [](const FieldElement& s) {
    MatrixF m = MatrixF::identity(3);
    m(2, 1) = s;
    return m;
  };
  auto along_y = [](const FieldElement& s) {
    MatrixF m = MatrixF::identity(3);
    m(2, 0) = -s;
    return m;
  };
  FieldElement one(1), zero(0);
  auto& gens = in.lattice.generators;
  gens.push_back({"a1", along_x(one), VecF{one, zero}, ones(3)});
  gens.push_back({"a2", along_x(i), VecF{i, zero}, ones(3)});
  gens.push_back({"b1", along_y(one), VecF{zero, one}, ones(3)});
  gens.push_back({"b2", along_y(i), VecF{zero, i}, ones(3)});
  gens.push_back({"c1", MatrixF::identity(3), VecF{zero, zero}, ones(3)});
  gens.push_back({"c2", MatrixF::identity(3), VecF{zero, zero}, ones(3)});

  // [A(s), B(t)] = C(st) in the upper unitriangular model.
  Presentation pres;
  pres.generator_count = 6;
  const int a1 = 1, a2 = 2, b1 = 3, b2 = 4, c1 = 5, c2 = 6;
  auto with = [](Word w, int tail) {
    w.push_back(tail);
    return w;
  };
  pres.relators.push_back(with(commutator(a1, b1), -c1));
  pres.relators.push_back(with(commutator(a1, b2), -c2));
  pres.relators.push_back(with(commutator(a2, b1), -c2));
  pres.relators.push_back(with(commutator(a2, b2), c1));
  pres.relators.push_back(commutator(a1, a2));
  pres.relators.push_back(commutator(b1, b2));
  for (int c : {c1, c2})
    for (int g = 1; g <= 6; ++g)
      if (g != c && !(c == c2 && g == c1)) pres.relators.push_back(commutator(c, g));
  in.lattice.presentation = pres;
  return in;
}

AnalysisInput torus(long n) {
  if (n < 1) throw Error(ErrorKind::BadParams, "torus: dimension must be at least 1");
  std::size_t k = static_cast<std::size_t>(n);
  FieldElement i = FieldElement::imaginary_unit();
  AnalysisInput in;
  in.lie = algebras::abelian(k);
  in.lattice.linear_algebraic = true;
  for (std::size_t j = 0; j < k; ++j) {
    VecF e = unit_vector<FieldElement>(k, j);
    in.lattice.generators.push_back({"e" + std::to_string(j + 1), MatrixF::identity(k), e, ones(k)});
    in.lattice.generators.push_back({"ie" + std::to_string(j + 1), MatrixF::identity(k), scale(i, e), ones(k)});
  }
  Presentation pres;
  pres.generator_count = static_cast<int>(2 * k);
  for (int a = 1; a <= pres.generator_count; ++a)
    for (int b = a + 1; b <= pres.generator_count; ++b) pres.relators.push_back(commutator(a, b));
  in.lattice.presentation = pres;
  return in;
}

AnalysisInput sl2_times_c(long rank) {
  if (rank < 1) throw Error(ErrorKind::BadParams, "sl2_times_c: rank must be at least 1");
  FieldDescriptor field(2);
  AnalysisInput in;
  in.lie = direct_sum(algebras::sl2(field), algebras::abelian(1, field));
  in.lattice.linear_algebraic = true;
  in.lattice.b1_semisimple_quotient = rank;
  in.lattice.b1_manifold_override = rank + 2;
  // Λ enters through ρ(λ)·√2 in the ℂ factor.
  in.lattice.generators.push_back({"lambda", std::nullopt, VecF{FieldElement::sqrt_d(2)}, std::nullopt});
  in.lattice.generators.push_back({"t1", MatrixF::identity(4), VecF{FieldElement(1)}, ones(4)});
  in.lattice.generators.push_back({"t2", MatrixF::identity(4), VecF{FieldElement::imaginary_unit()}, ones(4)});
  return in;
}

}  // namespace cpm::examples
