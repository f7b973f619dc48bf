#include "eliahou/serialize.hpp"

#include <algorithm>

#include "eliahou/error.hpp"

namespace eliahou {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field_of(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

Json config_json(const TermOrder& order, const Field& k) {
  return Json{{"order", order.name()}, {"field", k.name()}};
}

GeneratorMatrix matrix_from_json(const Json& j) {
  GeneratorMatrix a;
  const Json& dim = field_of(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1) bad("\"dim\" must be a positive integer");
  a.dim = dim.get<std::size_t>();
  const Json& gens = field_of(j, "generators");
  if (!gens.is_array() || gens.empty()) bad("\"generators\" must be a nonempty array");
  for (const Json& col : gens) {
    SDegree n = degree_from_json(col);
    if (n.size() != a.dim) bad("generator of length " + std::to_string(n.size()) + ", expected " + std::to_string(a.dim));
    a.generators.push_back(std::move(n));
  }
  return a;
}

Json matrix_to_json(const GeneratorMatrix& a) {
  Json gens = Json::array();
  for (const auto& n : a.generators) gens.push_back(degree_to_json(n));
  return Json{{"dim", a.dim}, {"generators", gens}};
}

Json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.get<std::string>());
    return v;
  }
  bad("expected an integer, got " + j.dump());
}

Json degree_to_json(const SDegree& m) {
  Json out = Json::array();
  for (const auto& c : m) out.push_back(integer_to_json(c));
  return out;
}

SDegree degree_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an integer array, got " + j.dump());
  SDegree m;
  for (const Json& c : j) m.push_back(integer_from_json(c));
  return m;
}

Json monomial_to_json(const Monomial& x) { return Json(x.exponents()); }

Monomial monomial_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an exponent array, got " + j.dump());
  std::vector<Exponent> e;
  for (const Json& c : j) {
    if (!c.is_number_integer() || c.get<long long>() < 0) bad("exponents must be nonnegative integers");
    e.push_back(c.get<Exponent>());
  }
  return Monomial(std::move(e));
}

Json sparse_to_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [i, c] : v.entries()) out.push_back(Json::array({i, scalar_to_string(c)}));
  return out;
}

SparseVec sparse_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a sparse vector");
  std::vector<SparseVec::Entry> entries;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_string()) {
      bad("bad sparse entry " + e.dump());
    }
    entries.emplace_back(e[0].get<std::size_t>(), scalar_from_string(e[1].get<std::string>()));
  }
  return SparseVec(std::move(entries));
}

namespace {

Json sparse_list(const std::vector<SparseVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(sparse_to_json(v));
  return out;
}

std::vector<SparseVec> sparse_list_from(const Json& j) {
  if (!j.is_array()) bad("expected a list of vectors");
  std::vector<SparseVec> out;
  for (const Json& v : j) out.push_back(sparse_from_json(v));
  return out;
}

}  // namespace

Json chain_basis_to_json(const ChainBasis& b) {
  return Json{{"degree", degree_to_json(b.degree)},
              {"dim", b.dim},
              {"num_faces", b.num_faces},
              {"num_next_faces", b.num_next_faces},
              {"boundary", sparse_list(b.boundary)},
              {"boundary_preimage", sparse_list(b.boundary_preimage)},
              {"homology", sparse_list(b.homology)}};
}

ChainBasis chain_basis_from_json(const Json& j) {
  ChainBasis b;
  b.degree = degree_from_json(field_of(j, "degree"));
  b.dim = field_of(j, "dim").get<int>();
  b.num_faces = field_of(j, "num_faces").get<std::size_t>();
  b.num_next_faces = field_of(j, "num_next_faces").get<std::size_t>();
  b.boundary = sparse_list_from(field_of(j, "boundary"));
  b.boundary_preimage = sparse_list_from(field_of(j, "boundary_preimage"));
  b.homology = sparse_list_from(field_of(j, "homology"));
  if (b.boundary.size() != b.boundary_preimage.size()) bad("boundary and preimage lists differ in length");
  return b;
}

Json polynomial_to_json(const Polynomial& p, const TermOrder& order) {
  std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  Json out = Json::array();
  for (const auto& [x, c] : terms) out.push_back(Json{{"monomial", monomial_to_json(x)}, {"coeff", scalar_to_string(c)}});
  return out;
}

Polynomial polynomial_from_json(const Json& j, const Field& k) {
  if (!j.is_array()) bad("expected a polynomial term list");
  Polynomial p;
  for (const Json& t : j) {
    const Json& c = field_of(t, "coeff");
    Scalar v = c.is_string() ? scalar_from_string(c.get<std::string>()) : Scalar(integer_from_json(c));
    p.add_term(k, monomial_from_json(field_of(t, "monomial")), v);
  }
  return p;
}

Json generator_id_to_json(const GeneratorId& id) {
  if (id.is_ring()) return Json("R");
  return Json{{"level", id.level}, {"degree", degree_to_json(id.degree)}, {"index", id.index}};
}

GeneratorId generator_id_from_json(const Json& j, const Semigroup& s) {
  if (j.is_string() && j.get<std::string>() == "R") return GeneratorId::ring(s.dim());
  GeneratorId id;
  id.level = field_of(j, "level").get<int>();
  if (id.level < 0) bad("generator level must be nonnegative");
  id.degree = degree_from_json(field_of(j, "degree"));
  s.check_degree(id.degree);
  id.weight = s.weight(id.degree);
  id.index = field_of(j, "index").get<std::size_t>();
  return id;
}

Json module_element_to_json(const ModuleElement& v, const TermOrder& order) {
  Json out = Json::array();
  for (const auto& [id, p] : v) {
    if (p.is_zero()) continue;
    out.push_back(Json{{"generator", generator_id_to_json(id)}, {"coeff", polynomial_to_json(p, order)}});
  }
  return out;
}

ModuleElement module_element_from_json(const Json& j, const Semigroup& s, const Field& k) {
  if (!j.is_array()) bad("expected a module element");
  ModuleElement v;
  for (const Json& e : j) {
    GeneratorId id = generator_id_from_json(field_of(e, "generator"), s);
    Polynomial p = polynomial_from_json(field_of(e, "coeff"), k);
    for (const auto& [x, c] : p.terms()) s.check_monomial(x);
    if (!p.is_zero()) v[id].add_scaled(k, p, 1, Monomial::unit(s.nvars()));
  }
  std::erase_if(v, [](const auto& e) { return e.second.is_zero(); });
  return v;
}

Json generator_record_to_json(const GeneratorRecord& r, const TermOrder& order) {
  Json out{{"level", r.level()}, {"degree", degree_to_json(r.degree())}, {"index", r.id.index}};
  if (r.level() == 0) {
    auto b = as_binomial(r, order);
    if (b) {
      out["value"] = Json{{"lead", monomial_to_json(b->lead)}, {"trail", monomial_to_json(b->trail)}};
      out["text"] = b->lead.to_string() + " - " + b->trail.to_string();
    } else {
      out["value"] = Json{{"polynomial", polynomial_to_json(r.value.begin()->second, order)}};
    }
  } else {
    out["value"] = module_element_to_json(r.value, order);
  }
  out["witness"] = sparse_to_json(r.witness);
  return out;
}

GeneratorRecord generator_record_from_json(const Json& j, const Semigroup& s, const Field& k) {
  GeneratorRecord r;
  r.id.level = field_of(j, "level").get<int>();
  if (r.id.level < 0) bad("generator level must be nonnegative");
  r.id.degree = degree_from_json(field_of(j, "degree"));
  s.check_degree(r.id.degree);
  r.id.weight = s.weight(r.id.degree);
  r.id.index = field_of(j, "index").get<std::size_t>();
  const Json& value = field_of(j, "value");
  if (r.id.level == 0) {
    Polynomial p;
    if (value.is_object() && value.contains("lead")) {
      Monomial lead = monomial_from_json(value.at("lead"));
      Monomial trail = monomial_from_json(field_of(value, "trail"));
      s.check_monomial(lead);
      s.check_monomial(trail);
      p = Binomial{lead, trail}.to_polynomial(k);
    } else {
      p = polynomial_from_json(field_of(value, "polynomial"), k);
    }
    if (!p.is_zero()) r.value[GeneratorId::ring(s.dim())] = p;
  } else {
    r.value = module_element_from_json(value, s, k);
    for (const auto& [id, p] : r.value) {
      if (id.level != r.id.level - 1) bad("level-" + std::to_string(r.id.level) + " generator refers to " + id.to_string());
    }
  }
  if (j.contains("witness")) r.witness = sparse_from_json(j.at("witness"));
  return r;
}

Json fragment_to_json(const ResolutionFragment& f, const TermOrder& order) {
  Json gens = Json::array();
  for (const auto& r : f.generators) gens.push_back(generator_record_to_json(r, order));

  // phi_j as a matrix: rows are level-(j-1) generators (or R), columns level-j generators.
  Json maps = Json::array();
  for (int j = 0; j <= f.max_level; ++j) {
    std::vector<GeneratorId> cols;
    for (const auto* r : f.level(j)) cols.push_back(r->id);
    if (cols.empty()) continue;
    std::vector<GeneratorId> rows;
    if (j == 0) {
      rows.push_back(GeneratorId::ring(f.root.size()));
    } else {
      for (const auto* r : f.level(j - 1)) rows.push_back(r->id);
    }
    Json entries = Json::array();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const ModuleElement& v = f.level(j)[c]->value;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto it = v.find(rows[r]);
        if (it == v.end() || it->second.is_zero()) continue;
        entries.push_back(Json{{"row", r}, {"col", c}, {"coeff", polynomial_to_json(it->second, order)}});
      }
    }
    Json row_ids = Json::array();
    for (const auto& id : rows) row_ids.push_back(generator_id_to_json(id));
    Json col_ids = Json::array();
    for (const auto& id : cols) col_ids.push_back(generator_id_to_json(id));
    maps.push_back(Json{{"level", j}, {"rows", row_ids}, {"cols", col_ids}, {"entries", entries}});
  }
  return Json{{"root", degree_to_json(f.root)},
              {"max_level", f.max_level},
              {"ranks", f.ranks()},
              {"faces_walked", f.faces_walked},
              {"generators", gens},
              {"maps", maps}};
}

ResolutionFragment fragment_from_json(const Json& j, const Semigroup& s, const Field& k) {
  ResolutionFragment f;
  f.root = degree_from_json(field_of(j, "root"));
  s.check_degree(f.root);
  f.max_level = field_of(j, "max_level").get<int>();
  if (j.contains("faces_walked")) f.faces_walked = j.at("faces_walked").get<std::vector<std::size_t>>();
  const Json& gens = field_of(j, "generators");
  if (!gens.is_array()) bad("\"generators\" must be an array");
  for (const Json& g : gens) f.generators.push_back(generator_record_from_json(g, s, k));
  std::sort(f.generators.begin(), f.generators.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return f;
}

Json report_to_json(const FragmentReport& r) {
  return Json{{"ok", r.ok}, {"ranks", r.ranks}, {"checked_generators", r.checked_generators}, {"violations", r.violations}};
}

Json decomposition_to_json(const DecompositionResult& d, const ResolutionEngine& engine) {
  const TermOrder& order = engine.order();
  Json terms = Json::array();
  for (const auto& [id, f] : d.coefficients) {
    Json t{{"generator", generator_id_to_json(id)}};
    if (const GeneratorRecord* r = engine.find(id)) t["value"] = generator_record_to_json(*r, order)["value"];
    t["coeff"] = polynomial_to_json(f, order);
    terms.push_back(std::move(t));
  }
  return Json{{"level", d.level},
              {"degree", degree_to_json(d.degree)},
              {"input", module_element_to_json(d.input, order)},
              {"terms", terms}};
}

Json nabla_to_json(const NablaComplex& k) {
  Json vertices = Json::array();
  for (const auto& v : k.vertices()) vertices.push_back(monomial_to_json(v));
  return Json{{"degree", degree_to_json(k.degree())}, {"vertices", vertices}, {"facets", k.facets()}};
}

Json delta_to_json(const DeltaComplex& k) {
  return Json{{"degree", degree_to_json(k.degree())},
              {"has_empty_face", k.has_empty_face()},
              {"faces", k.faces()},
              {"facets", k.facets()}};
}

}  // namespace eliahou
