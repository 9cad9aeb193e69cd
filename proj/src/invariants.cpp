#include "cpm/invariants.hpp"

#include <algorithm>

#include "cpm/eigen.hpp"

namespace cpm {

namespace {

SubspaceF real_part_of(const MatrixF& m, const FieldDescriptor& field, const std::vector<FieldElement>& hints) {
  try {
    return real_eigenspace_sum(m, field);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ScalarFieldTooSmall || hints.empty()) throw;
  }
  SubspaceF sum = SubspaceF::zero(m.rows());
  for (const auto& e : eigenvalues_in_field(m, field, hints))
    if (e.value.is_real()) sum = sum + SubspaceF::span(m.rows(), kernel(m - e.value * MatrixF::identity(m.rows())));
  return sum;
}

// Largest subspace of u invariant under every matrix (and so under inverses).
SubspaceF invariant_core(SubspaceF u, const std::vector<MatrixF>& matrices) {
  for (;;) {
    SubspaceF next = u;
    for (const auto& m : matrices) next = next.intersect(u.preimage(m));
    if (next == u) return u;
    u = next;
  }
}

struct Condition {
  MatrixF restricted;
  const std::vector<FieldElement>* hints;
};

// One round: intersect the real eigenspace sums of every condition matrix
// (given on w) and take the invariant core.
SubspaceF shrink(const SubspaceF& w, const std::vector<Condition>& conditions, const std::vector<MatrixF>& generators,
                 const FieldDescriptor& field) {
  std::size_t n = w.ambient();
  SubspaceF u = w;
  static const std::vector<FieldElement> no_hints;
  for (const auto& c : conditions) {
    SubspaceF e = real_part_of(c.restricted, field, c.hints ? *c.hints : no_hints);
    std::vector<VecF> lifted;
    for (const auto& v : e.basis()) lifted.push_back(w.from_coordinates(v));
    u = u.intersect(SubspaceF::span(n, lifted));
  }
  return invariant_core(u, generators);
}

std::vector<MatrixF> restrictions(const SubspaceF& w, const std::vector<MatrixF>& matrices) {
  std::vector<MatrixF> out;
  for (const auto& m : matrices) out.push_back(w.restrict(m));
  return out;
}

bool pairwise_commute(const std::vector<MatrixF>& ms) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!(ms[i] * ms[j] == ms[j] * ms[i])) return false;
  return true;
}

// Distinct matrices of all reduced words of length 1..depth in the letters
// and their inverses.
std::vector<MatrixF> word_matrices(const std::vector<MatrixF>& letters, int depth) {
  std::vector<MatrixF> alphabet;
  std::vector<std::size_t> inverse_of;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    alphabet.push_back(letters[i]);
    alphabet.push_back(inverse(letters[i]));
    inverse_of.push_back(2 * i + 1);
    inverse_of.push_back(2 * i);
  }
  std::vector<MatrixF> distinct;
  auto remember = [&distinct](const MatrixF& m) {
    if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
  };
  struct Partial {
    MatrixF value;
    std::size_t last;
  };
  std::vector<Partial> frontier;
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    frontier.push_back({alphabet[a], a});
    remember(alphabet[a]);
  }
  for (int len = 2; len <= depth; ++len) {
    std::vector<Partial> next;
    for (const auto& p : frontier)
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        if (a == inverse_of[p.last]) continue;
        MatrixF m = p.value * alphabet[a];
        remember(m);
        next.push_back({std::move(m), a});
      }
    frontier = std::move(next);
  }
  return distinct;
}

}  // namespace

WResult compute_W(const InducedAction& action, const FieldDescriptor& field, int depth) {
  if (depth < 1) throw Error(ErrorKind::BadParams, "depth must be at least 1");
  std::size_t n = action.dim();
  WResult out;
  out.subspace = SubspaceF::full(n);
  if (n == 0) return out;
  const auto& gens = action.matrices;

  for (;;) {
    std::vector<Condition> conditions;
    auto restricted = restrictions(out.subspace, gens);
    for (std::size_t g = 0; g < gens.size(); ++g) conditions.push_back({restricted[g], &action.eigenvalue_hints[g]});
    SubspaceF next = shrink(out.subspace, conditions, gens, field);
    if (next == out.subspace) break;
    out.subspace = next;
  }
  if (out.subspace.is_zero()) return out;
  if (pairwise_commute(restrictions(out.subspace, gens))) {
    out.certification = WCertification::CertifiedCommuting;
    return out;
  }

  for (;;) {
    std::vector<Condition> conditions;
    for (auto& m : word_matrices(restrictions(out.subspace, gens), depth)) conditions.push_back({m, nullptr});
    SubspaceF next = shrink(out.subspace, conditions, gens, field);
    if (next == out.subspace) break;
    out.subspace = next;
  }
  if (out.subspace.is_zero()) return out;
  if (pairwise_commute(restrictions(out.subspace, gens))) {
    out.certification = WCertification::CertifiedCommuting;
    return out;
  }
  out.certification = WCertification::CheckedToDepth;
  out.depth = depth;
  return out;
}

SourcedValue semisimple_quotient_b1(const StructureReport& structure, bool has_rank_one, const LatticeData& lattice) {
  if (structure.solvable || !has_rank_one) return {0, ValueSource::AutoZero};
  if (!lattice.b1_semisimple_quotient)
    throw Error(ErrorKind::MissingB1Input,
                "lattice.b1_semisimple_quotient: required because the semisimple part has a factor of dimension 3");
  return {*lattice.b1_semisimple_quotient, ValueSource::User};
}

SourcedValue b1_manifold(const LatticeData& lattice) {
  if (lattice.b1_manifold_override) return {*lattice.b1_manifold_override, ValueSource::User};
  if (lattice.presentation) return {abelianization_rank(*lattice.presentation).free_rank, ValueSource::Presentation};
  throw Error(ErrorKind::NoB1Data, "lattice: neither presentation nor b1_manifold_override is given");
}

void rigidity_verdict(InvariantReport& report) {
  long h1 = report.h1;
  long b1 = report.b1_manifold.value;
  report.h1_tangent = static_cast<long>(report.dim_g) * h1;
  report.deformable = b1 > 0;
  if (report.h1_exactness == Exactness::Exact) {
    if ((h1 == 0) != (b1 == 0)) report.rigid = Rigidity::Inconsistent;
    else report.rigid = h1 == 0 ? Rigidity::Rigid : Rigidity::NotRigid;
    return;
  }
  // h1 is only an upper bound: h1 = 0 still proves rigidity, while
  // non-rigidity is read off b₁.
  if (h1 == 0) report.rigid = b1 == 0 ? Rigidity::Rigid : Rigidity::Inconsistent;
  else report.rigid = b1 > 0 ? Rigidity::NotRigid : Rigidity::Rigid;
}

std::vector<Crosscheck> crosscheck_special_cases(const InvariantReport& report) {
  std::vector<Crosscheck> out;
  auto compare = [&](const std::string& name, bool applicable, long expected, const std::string& what) {
    Crosscheck c{name, CheckOutcome::Skipped, "hypotheses not met"};
    if (applicable) {
      c.outcome = report.h1 == expected ? CheckOutcome::Pass : CheckOutcome::Fail;
      c.detail = "h1 = " + std::to_string(report.h1) + ", " + what + " = " + std::to_string(expected);
    }
    out.push_back(c);
  };
  long ab = static_cast<long>(report.dim_g_mod_gprime);
  compare("nilpotent_reduction", report.nilpotent, ab, "dim g/g'");
  compare("nilpotent_radical_reduction", report.dim_radical == report.dim_nilradical && !report.has_rank_one_factor,
          ab, "dim g/g'");
  compare("semisimple_betti", report.semisimple, report.b1_manifold.value, "b1");

  Crosscheck eq{"rigidity_equivalence", CheckOutcome::Pass, ""};
  long b1 = report.b1_manifold.value;
  bool violated = report.h1_exactness == Exactness::Exact ? (report.h1 == 0) != (b1 == 0) : report.h1 == 0 && b1 > 0;
  if (violated) eq.outcome = CheckOutcome::Fail;
  eq.detail = "h1 = " + std::to_string(report.h1) + ", b1 = " + std::to_string(b1);
  out.push_back(eq);
  return out;
}

InvariantReport analyze(const AnalysisInput& input) {
  const LieAlgebra& lie = input.lie;
  const LatticeData& lattice = input.lattice;
  validate_lie_algebra(lie);
  validate_lattice(lie, lattice);

  InvariantReport r;
  StructureReport structure = structure_report(lie);
  SubspaceF levi = levi_subalgebra(lie, structure.radical);
  if (!levi.is_zero()) r.has_rank_one_factor = simple_ideal_decomposition(lie, levi).has_rank_one;
  CharacteristicIdeals ideals = characteristic_ideals(lie, structure, levi);

  r.dim_g = lie.dim();
  r.dim_g_mod_gprime = lie.dim() - structure.derived.dim();
  r.dim_radical = structure.radical.dim();
  r.dim_nilradical = structure.nilradical.dim();
  r.dim_levi = levi.dim();
  r.solvable = structure.solvable;
  r.nilpotent = structure.nilpotent;
  r.semisimple = structure.semisimple;
  r.dim_a = ideals.a.dim();
  r.dim_b = ideals.b.dim();
  r.dim_b_mod_a = ideals.b_mod_a.dim();

  InducedAction action = induced_quotient_action(lie, ideals.b_mod_a, lattice);
  WResult w = compute_W(action, lie.field(), input.depth);
  r.dim_W = w.subspace.dim();
  r.w_certification = w.certification;
  r.w_depth = w.depth;

  r.b1_semisimple_quotient = semisimple_quotient_b1(structure, r.has_rank_one_factor, lattice);
  r.h1 = static_cast<long>(r.dim_g_mod_gprime) + r.b1_semisimple_quotient.value + static_cast<long>(r.dim_W);
  r.h1_exactness = lattice.linear_algebraic ? Exactness::Exact : Exactness::UpperBound;
  r.b1_manifold = b1_manifold(lattice);
  rigidity_verdict(r);
  r.crosschecks = crosscheck_special_cases(r);

  std::size_t with_images = 0;
  bool symbolic = false;
  for (const auto& g : lattice.generators) {
    if (g.abelianization_image) ++with_images;
    if (!g.ad) symbolic = true;
  }
  if (with_images == lattice.generators.size()) r.albanese = albanese_dimension(lie, lattice);
  else if (with_images > 0) albanese_dimension(lie, lattice);  // names the generator lacking an image

  r.assumptions.push_back("the generators are asserted to generate a cocompact lattice in the simply connected group");
  if (lattice.linear_algebraic) r.assumptions.push_back("the group is asserted to be linear-algebraic, so h1 is exact");
  else r.assumptions.push_back("the group is not asserted to be linear-algebraic, so h1 is an upper bound");
  if (r.albanese)
    r.assumptions.push_back("abelianization images are UNVERIFIED and asserted to generate the image of the lattice in G/G'");
  if (symbolic) r.assumptions.push_back("some generators are symbolic and enter only through their abelianization images");
  if (r.b1_semisimple_quotient.source == ValueSource::User)
    r.assumptions.push_back("b1 of the semisimple quotient lattice is user-supplied");
  else if (lattice.b1_semisimple_quotient && *lattice.b1_semisimple_quotient != 0)
    r.assumptions.push_back("user-supplied b1_semisimple_quotient ignored: it is zero for this algebra");
  if (r.b1_manifold.source == ValueSource::User) r.assumptions.push_back("b1 of the manifold is user-supplied");
  if (w.certification == WCertification::CheckedToDepth)
    r.assumptions.push_back("W is verified on words up to length " + std::to_string(w.depth) + " only");
  return r;
}

std::string to_string(WCertification c) {
  switch (c) {
    case WCertification::Trivial: return "TRIVIAL";
    case WCertification::CertifiedCommuting: return "CERTIFIED_COMMUTING";
    case WCertification::CheckedToDepth: return "CHECKED_TO_DEPTH";
  }
  return "";
}

std::string to_string(Exactness e) { return e == Exactness::Exact ? "EXACT" : "UPPER_BOUND"; }

std::string to_string(ValueSource s) {
  switch (s) {
    case ValueSource::AutoZero: return "AUTO_ZERO";
    case ValueSource::User: return "USER";
    case ValueSource::Presentation: return "PRESENTATION";
  }
  return "";
}

std::string to_string(Rigidity r) {
  switch (r) {
    case Rigidity::Rigid: return "RIGID";
    case Rigidity::NotRigid: return "NOT_RIGID";
    case Rigidity::Inconsistent: return "INCONSISTENT";
  }
  return "";
}

std::string to_string(CheckOutcome o) {
  switch (o) {
    case CheckOutcome::Pass: return "PASS";
    case CheckOutcome::Fail: return "FAIL";
    case CheckOutcome::Skipped: return "SKIPPED";
  }
  return "";
}

}  // namespace cpm
