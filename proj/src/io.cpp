#include "cpm/io.hpp"

#include <sstream>

#include "json.hpp"

namespace cpm::io {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(ErrorKind::ParseError, path + ": " + message);
}

const Json& require(const Json& object, const char* key, const std::string& path) {
  if (!object.is_object() || !object.contains(key)) fail(path + "." + key, "missing");
  return object.at(key);
}

bool present(const Json& object, const char* key) {
  return object.is_object() && object.contains(key) && !object.at(key).is_null();
}

long as_integer(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "integer expected");
  return value.get<long>();
}

long as_count(const Json& value, const std::string& path) {
  long v = as_integer(value, path);
  if (v < 0) fail(path, "non-negative integer expected");
  return v;
}

FieldElement as_element(const Json& value, std::int64_t d, const std::string& path) {
  try {
    if (value.is_number_integer()) return FieldElement(value.get<long>());
    if (value.is_string()) return FieldElement::parse(value.get<std::string>(), d);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "field element string expected");
}

VecF as_vector(const Json& value, std::int64_t d, const std::string& path, std::size_t length) {
  if (!value.is_array()) fail(path, "array expected");
  if (value.size() != length) fail(path, "length " + std::to_string(length) + " expected");
  VecF out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(as_element(value[i], d, path + "[" + std::to_string(i) + "]"));
  return out;
}

MatrixF as_matrix(const Json& value, std::int64_t d, const std::string& path, std::size_t n) {
  if (!value.is_array() || value.size() != n) fail(path, std::to_string(n) + " rows expected");
  MatrixF m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    VecF row = as_vector(value[r], d, path + "[" + std::to_string(r) + "]", n);
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

Json element_json(const FieldElement& x) { return x.to_string(); }

Json vector_json(const VecF& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(element_json(x));
  return out;
}

Json optional_count(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

std::string rigid_text(Rigidity r) {
  switch (r) {
    case Rigidity::Rigid: return "true";
    case Rigidity::NotRigid: return "false";
    case Rigidity::Inconsistent: return "INCONSISTENT";
  }
  return "";
}

}  // namespace

AnalysisInput parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("input: ") + e.what());
  }
  if (!doc.is_object()) fail("input", "object expected");

  long d = as_integer(require(require(doc, "field", "input"), "d", "field"), "field.d");
  FieldDescriptor field;
  try {
    field = FieldDescriptor(d);
  } catch (const Error& e) {
    fail("field.d", e.what());
  }

  const Json& la = require(doc, "lie_algebra", "input");
  long dim = as_count(require(la, "dim", "lie_algebra"), "lie_algebra.dim");
  std::size_t n = static_cast<std::size_t>(dim);
  std::vector<std::string> labels;
  if (present(la, "basis")) {
    const Json& basis = la.at("basis");
    if (!basis.is_array() || basis.size() != n) fail("lie_algebra.basis", std::to_string(n) + " labels expected");
    for (const auto& b : basis) {
      if (!b.is_string()) fail("lie_algebra.basis", "string labels expected");
      labels.push_back(b.get<std::string>());
    }
  }
  AnalysisInput in;
  in.lie = LieAlgebra(n, field, labels);
  if (present(la, "brackets")) {
    const Json& brackets = la.at("brackets");
    if (!brackets.is_array()) fail("lie_algebra.brackets", "array expected");
    for (std::size_t t = 0; t < brackets.size(); ++t) {
      std::string path = "lie_algebra.brackets[" + std::to_string(t) + "]";
      const Json& entry = brackets[t];
      std::size_t idx[3];
      const char* keys[] = {"i", "j", "k"};
      for (int q = 0; q < 3; ++q) {
        long v = as_count(require(entry, keys[q], path), path + "." + keys[q]);
        if (v >= dim) fail(path + "." + keys[q], "index out of range");
        idx[q] = static_cast<std::size_t>(v);
      }
      if (idx[0] == idx[1]) fail(path, "i and j must differ");
      in.lie.add_structure_constant(idx[0], idx[1], idx[2], as_element(require(entry, "c", path), d, path + ".c"));
    }
  }

  const Json& lat = require(doc, "lattice", "input");
  const Json& gens = require(lat, "generators", "lattice");
  if (!gens.is_array()) fail("lattice.generators", "array expected");
  std::size_t ab_dim = abelianization_quotient(in.lie).dim();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::string path = "lattice.generators[" + std::to_string(g) + "]";
    const Json& entry = gens[g];
    if (!entry.is_object()) fail(path, "object expected");
    Generator gen;
    gen.name = present(entry, "name") && entry.at("name").is_string() ? entry.at("name").get<std::string>()
                                                                      : "g" + std::to_string(g + 1);
    path += " ('" + gen.name + "')";
    if (present(entry, "ad")) gen.ad = as_matrix(entry.at("ad"), d, path + ".ad", n);
    if (present(entry, "abelianization_image"))
      gen.abelianization_image = as_vector(entry.at("abelianization_image"), d, path + ".abelianization_image", ab_dim);
    if (present(entry, "eigenvalues")) {
      const Json& ev = entry.at("eigenvalues");
      gen.eigenvalues = as_vector(ev, d, path + ".eigenvalues", ev.is_array() ? ev.size() : 0);
    }
    in.lattice.generators.push_back(std::move(gen));
  }
  if (present(lat, "presentation")) {
    const Json& p = lat.at("presentation");
    Presentation pres;
    pres.generator_count = static_cast<int>(as_count(require(p, "generators", "lattice.presentation"),
                                                     "lattice.presentation.generators"));
    if (present(p, "relators")) {
      const Json& rels = p.at("relators");
      if (!rels.is_array()) fail("lattice.presentation.relators", "array expected");
      for (std::size_t r = 0; r < rels.size(); ++r) {
        std::string path = "lattice.presentation.relators[" + std::to_string(r) + "]";
        if (!rels[r].is_array()) fail(path, "array of letters expected");
        Word w;
        for (std::size_t l = 0; l < rels[r].size(); ++l)
          w.push_back(static_cast<int>(as_integer(rels[r][l], path + "[" + std::to_string(l) + "]")));
        pres.relators.push_back(std::move(w));
      }
    }
    in.lattice.presentation = pres;
  }
  if (present(lat, "b1_semisimple_quotient"))
    in.lattice.b1_semisimple_quotient = as_count(lat.at("b1_semisimple_quotient"), "lattice.b1_semisimple_quotient");
  if (present(lat, "b1_manifold_override"))
    in.lattice.b1_manifold_override = as_count(lat.at("b1_manifold_override"), "lattice.b1_manifold_override");
  if (present(lat, "linear_algebraic")) {
    if (!lat.at("linear_algebraic").is_boolean()) fail("lattice.linear_algebraic", "boolean expected");
    in.lattice.linear_algebraic = lat.at("linear_algebraic").get<bool>();
  }
  if (present(doc, "options") && present(doc.at("options"), "depth")) {
    long depth = as_integer(doc.at("options").at("depth"), "options.depth");
    if (depth < 1) fail("options.depth", "must be at least 1");
    in.depth = static_cast<int>(depth);
  }
  return in;
}

std::string input_to_json(const AnalysisInput& input) {
  const LieAlgebra& lie = input.lie;
  Json doc;
  doc["field"] = {{"d", lie.field().d}};
  Json brackets = Json::array();
  for (std::size_t i = 0; i < lie.dim(); ++i)
    for (std::size_t j = i + 1; j < lie.dim(); ++j) {
      const VecF& v = lie.bracket_of_basis(i, j);
      for (std::size_t k = 0; k < lie.dim(); ++k)
        if (!v[k].is_zero()) brackets.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", v[k].to_string()}});
    }
  doc["lie_algebra"] = {{"dim", lie.dim()}, {"basis", lie.labels()}, {"brackets", brackets}};

  Json gens = Json::array();
  for (const auto& g : input.lattice.generators) {
    Json entry;
    entry["name"] = g.name;
    if (g.ad) {
      Json rows = Json::array();
      for (std::size_t r = 0; r < g.ad->rows(); ++r) rows.push_back(vector_json(g.ad->row(r)));
      entry["ad"] = rows;
    } else {
      entry["ad"] = nullptr;
    }
    entry["abelianization_image"] = g.abelianization_image ? vector_json(*g.abelianization_image) : Json(nullptr);
    entry["eigenvalues"] = g.eigenvalues ? vector_json(*g.eigenvalues) : Json(nullptr);
    gens.push_back(entry);
  }
  Json lattice;
  lattice["generators"] = gens;
  if (input.lattice.presentation) {
    Json rels = Json::array();
    for (const auto& w : input.lattice.presentation->relators) rels.push_back(w);
    lattice["presentation"] = {{"generators", input.lattice.presentation->generator_count}, {"relators", rels}};
  } else {
    lattice["presentation"] = nullptr;
  }
  lattice["b1_semisimple_quotient"] = optional_count(input.lattice.b1_semisimple_quotient);
  lattice["linear_algebraic"] = input.lattice.linear_algebraic;
  lattice["b1_manifold_override"] = optional_count(input.lattice.b1_manifold_override);
  doc["lattice"] = lattice;
  doc["options"] = {{"depth", input.depth}};
  return doc.dump(2) + "\n";
}

std::string report_to_json(const InvariantReport& r) {
  Json doc;
  doc["dim_g"] = r.dim_g;
  doc["dim_g_mod_gprime"] = r.dim_g_mod_gprime;
  doc["dim_radical"] = r.dim_radical;
  doc["dim_nilradical"] = r.dim_nilradical;
  doc["dim_levi"] = r.dim_levi;
  doc["solvable"] = r.solvable;
  doc["nilpotent"] = r.nilpotent;
  doc["semisimple"] = r.semisimple;
  doc["has_rank_one_factor"] = r.has_rank_one_factor;
  doc["dim_a"] = r.dim_a;
  doc["dim_b"] = r.dim_b;
  doc["dim_b_mod_a"] = r.dim_b_mod_a;
  doc["b1_semisimple_quotient"] = r.b1_semisimple_quotient.value;
  doc["b1_semisimple_quotient_source"] = to_string(r.b1_semisimple_quotient.source);
  doc["dim_W"] = r.dim_W;
  doc["W_certification"] = to_string(r.w_certification);
  doc["W_depth"] = r.w_certification == WCertification::CheckedToDepth ? Json(r.w_depth) : Json(nullptr);
  doc["h1"] = r.h1;
  doc["h1_exactness"] = to_string(r.h1_exactness);
  doc["h1_tangent"] = r.h1_tangent;
  doc["b1_manifold"] = r.b1_manifold.value;
  doc["b1_manifold_source"] = to_string(r.b1_manifold.source);
  if (r.rigid == Rigidity::Inconsistent) doc["rigid"] = "INCONSISTENT";
  else doc["rigid"] = r.rigid == Rigidity::Rigid;
  doc["deformable"] = r.deformable;
  if (r.albanese)
    doc["albanese"] = {{"albanese_dim", r.albanese->albanese_dim},
                       {"lattice_rank", r.albanese->lattice_rank},
                       {"flags", r.albanese->flags}};
  else
    doc["albanese"] = nullptr;
  Json checks = Json::array();
  for (const auto& c : r.crosschecks)
    checks.push_back({{"name", c.name}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}});
  doc["crosschecks"] = checks;
  doc["assumptions"] = r.assumptions;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "dim g                  " << r.dim_g << "\n"
      << "dim g/g'               " << r.dim_g_mod_gprime << "\n"
      << "dim radical            " << r.dim_radical << "\n"
      << "dim nilradical         " << r.dim_nilradical << "\n"
      << "dim levi               " << r.dim_levi << (r.has_rank_one_factor ? " (has sl2 factor)" : "") << "\n"
      << "dim b/a                " << r.dim_b_mod_a << " (a: " << r.dim_a << ", b: " << r.dim_b << ")\n"
      << "b1 semisimple quotient " << r.b1_semisimple_quotient.value << " (" << to_string(r.b1_semisimple_quotient.source)
      << ")\n"
      << "dim W                  " << r.dim_W << " (" << to_string(r.w_certification);
  if (r.w_certification == WCertification::CheckedToDepth) out << " " << r.w_depth;
  out << ")\n"
      << "h1                     " << r.h1 << " (" << to_string(r.h1_exactness) << ")\n"
      << "h1 tangent             " << r.h1_tangent << "\n"
      << "b1                     " << r.b1_manifold.value << " (" << to_string(r.b1_manifold.source) << ")\n"
      << "rigid                  " << rigid_text(r.rigid) << "\n"
      << "deformable             " << (r.deformable ? "true" : "false") << "\n";
  if (r.albanese) {
    out << "albanese dim           " << r.albanese->albanese_dim << " (lattice rank " << r.albanese->lattice_rank << ")";
    for (const auto& f : r.albanese->flags) out << " " << f;
    out << "\n";
  }
  for (const auto& c : r.crosschecks) out << "check " << c.name << ": " << to_string(c.outcome) << " (" << c.detail << ")\n";
  for (const auto& a : r.assumptions) out << "assumes: " << a << "\n";
  return out.str();
}

}  // namespace cpm::io
