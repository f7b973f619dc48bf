// Command-line front end: fibers, complexes, Betti tables, minimalization and fragments.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "eliahou/error.hpp"
#include "eliahou/resolution.hpp"
#include "eliahou/serialize.hpp"

using namespace eliahou;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInvalidInput = 2;

struct Globals {
  std::string order = "degrevlex";
  std::string field = "rational";
  std::string cache;
  std::string format = "text";
  bool check = false;
};

struct Context {
  TermOrder order;
  Field field = Field::rational();
  bool json = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

Semigroup load_semigroup(const std::string& path) { return Semigroup(matrix_from_json(read_json_file(path))); }

SDegree degree_arg(const Semigroup& s, const std::string& text) {
  SDegree m;
  try {
    m = parse_degree(text);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "bad degree \"" + text + "\"");
  }
  s.check_degree(m);
  return m;
}

Monomial monomial_arg(const Semigroup& s, const std::string& text) {
  std::vector<Exponent> e;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(part, &used);
      if (used != part.size() || v < 0) throw std::invalid_argument(part);
      e.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad exponent vector \"" + text + "\"");
    }
  }
  Monomial x(std::move(e));
  s.check_monomial(x);
  return x;
}

std::string weight_string(const PositiveGrading& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.weight.size(); ++i) {
    if (i) out += ",";
    out += scalar_to_string(w.weight[i]);
  }
  return out + ")";
}

Json with_config(const Context& ctx, Json body) {
  Json out{{"config", config_json(ctx.order, ctx.field)}};
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

EngineOptions engine_options(const Globals& g, const Context& ctx) {
  EngineOptions o;
  o.order = ctx.order;
  o.field = ctx.field;
  if (!g.cache.empty()) o.cache_dir = g.cache;
  o.check_diagrams = g.check;
  return o;
}

// --- commands ---

int cmd_validate(const Context& ctx, const std::string& file) {
  GeneratorMatrix a = matrix_from_json(read_json_file(file));
  PositiveGrading w = validate_presentation(a);
  if (ctx.json) {
    Json weight = Json::array();
    for (const auto& c : w.weight) weight.push_back(scalar_to_string(c));
    emit(with_config(ctx, {{"combinatorially_finite", true},
                           {"weight", weight},
                           {"dim", a.dim},
                           {"generators", a.rank()},
                           {"lattice_rank", a.lattice_rank()}}));
  } else {
    std::cout << "combinatorially finite, w = " << weight_string(w) << '\n';
  }
  return kOk;
}

int cmd_fiber(const Context& ctx, const std::string& file, const std::string& degree) {
  Semigroup s = load_semigroup(file);
  SDegree m = degree_arg(s, degree);
  auto fiber = s.fiber(m, ctx.order);
  if (ctx.json) {
    Json mons = Json::array();
    Json text = Json::array();
    for (const auto& x : fiber) {
      mons.push_back(monomial_to_json(x));
      text.push_back(x.to_string());
    }
    emit(with_config(ctx, {{"degree", degree_to_json(m)}, {"size", fiber.size()}, {"monomials", mons}, {"text", text}}));
  } else {
    std::cout << "C" << degree_to_string(m) << ": " << fiber.size() << " monomials\n";
    for (const auto& x : fiber) std::cout << "  " << x.to_string() << '\n';
  }
  return kOk;
}

int cmd_nabla(const Context& ctx, const std::string& file, const std::string& degree) {
  Semigroup s = load_semigroup(file);
  SDegree m = degree_arg(s, degree);
  NablaComplex k = build_nabla(s, m, ctx.order);
  if (ctx.json) {
    Json j = nabla_to_json(k);
    j["components"] = k.num_components();
    emit(with_config(ctx, j));
    return kOk;
  }
  std::cout << "nabla" << degree_to_string(m) << ": " << k.num_vertices() << " vertices, " << k.num_components()
            << " components\n";
  for (std::size_t i = 0; i < k.num_vertices(); ++i) std::cout << "  v" << i << " = " << k.vertices()[i].to_string() << '\n';
  std::cout << "facets:\n";
  for (const auto& f : k.facets()) {
    std::cout << "  {";
    for (std::size_t t = 0; t < f.size(); ++t) std::cout << (t ? "," : "") << "v" << f[t];
    std::cout << "}\n";
  }
  return kOk;
}

int cmd_delta(const Context& ctx, const std::string& file, const std::string& degree) {
  Semigroup s = load_semigroup(file);
  SDegree m = degree_arg(s, degree);
  DeltaComplex d = build_delta(s, m);
  if (ctx.json) {
    emit(with_config(ctx, delta_to_json(d)));
    return kOk;
  }
  std::cout << "delta" << degree_to_string(m) << ": " << (d.has_empty_face() ? "" : "no empty face, ") << d.faces().size()
            << " nonempty faces\nfacets:\n";
  for (const auto& f : d.facets()) {
    std::cout << "  {";
    for (std::size_t t = 0; t < f.size(); ++t) std::cout << (t ? "," : "") << f[t] + 1;
    std::cout << "}\n";
  }
  return kOk;
}

int cmd_betti(const Globals& g, const Context& ctx, const std::string& file, const std::string& degree,
              std::optional<int> jmax, bool crosscheck) {
  Semigroup s = load_semigroup(file);
  SDegree m = degree_arg(s, degree);
  ResolutionEngine engine(s, engine_options(g, ctx));
  const int top = jmax.value_or(static_cast<int>(s.nvars()) - 1);
  std::optional<DeltaComplex> delta;
  if (crosscheck) delta = build_delta(s, m);
  bool agree = true;
  Json rows = Json::array();
  for (int j = 0; j <= top; ++j) {
    Json row{{"j", j}, {"nabla", engine.multigraded_betti(m, j)}};
    if (delta) {
      std::size_t dv = betti_reduced(ctx.field, *delta, j);
      row["delta"] = dv;
      row["agree"] = dv == row["nabla"].get<std::size_t>();
      agree = agree && row["agree"].get<bool>();
    }
    rows.push_back(row);
  }
  if (ctx.json) {
    Json body{{"degree", degree_to_json(m)}, {"rows", rows}};
    if (crosscheck) body["crosscheck"] = agree ? "ok" : "mismatch";
    emit(with_config(ctx, body));
  } else {
    std::cout << "degree " << degree_to_string(m) << '\n' << (crosscheck ? "j\tnabla\tdelta\n" : "j\tnabla\n");
    for (const auto& row : rows) {
      std::cout << row["j"].get<int>() << '\t' << row["nabla"].get<std::size_t>();
      if (crosscheck) std::cout << '\t' << row["delta"].get<std::size_t>();
      std::cout << '\n';
    }
    if (crosscheck) std::cout << "crosscheck " << (agree ? "OK" : "MISMATCH") << '\n';
  }
  return agree ? kOk : kVerificationFailed;
}

int cmd_minimalize(const Globals& g, const Context& ctx, const std::string& file, const std::string& lead,
                   const std::string& trail) {
  Semigroup s = load_semigroup(file);
  Binomial b{monomial_arg(s, lead), monomial_arg(s, trail)};
  ResolutionEngine engine(s, engine_options(g, ctx));
  DecompositionResult d = engine.minimalize_binomial(b);
  if (ctx.json) {
    emit(with_config(ctx, decomposition_to_json(d, engine)));
    return kOk;
  }
  std::cout << b.lead.to_string() << " - " << b.trail.to_string() << " at degree " << degree_to_string(d.degree) << " =\n";
  for (const auto& [id, f] : d.coefficients) {
    const GeneratorRecord* r = engine.find(id);
    std::cout << "  + (" << f.to_string(ctx.order) << ") * (" << r->value.begin()->second.to_string(ctx.order) << ")   ["
              << id.to_string() << "]\n";
  }
  return kOk;
}

void print_fragment_text(const Context& ctx, const ResolutionFragment& f, const FragmentReport& r) {
  std::cout << "fragment at " << degree_to_string(f.root) << ", levels 0.." << f.max_level << "\nranks:";
  for (auto n : f.ranks()) std::cout << ' ' << n;
  std::cout << '\n';
  for (const auto& g : f.generators) {
    std::cout << "  " << g.id.to_string() << ": ";
    if (g.level() == 0) {
      std::cout << g.value.begin()->second.to_string(ctx.order);
    } else {
      bool first = true;
      for (const auto& [id, p] : g.value) {
        std::cout << (first ? "" : ", ") << id.to_string() << " -> " << p.to_string(ctx.order);
        first = false;
      }
    }
    std::cout << '\n';
  }
  std::cout << "verification " << (r.ok ? "passed" : "FAILED") << '\n';
  for (const auto& v : r.violations) std::cout << "  " << v << '\n';
}

int cmd_harvest(const Globals& g, const Context& ctx, const std::string& file, const std::string& degree,
                int max_level, std::optional<std::size_t> face_cap, const std::string& output) {
  Semigroup s = load_semigroup(file);
  SDegree m = degree_arg(s, degree);
  EngineOptions o = engine_options(g, ctx);
  o.face_cap = face_cap;
  ResolutionEngine engine(s, o);
  ResolutionFragment f = engine.harvest(m, max_level);
  FragmentReport r = engine.verify(f);
  Json doc = with_config(ctx, {{"fragment", fragment_to_json(f, ctx.order)}, {"report", report_to_json(r)}});
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + output);
    out << doc.dump(2) << '\n';
  }
  if (ctx.json) {
    emit(doc);
  } else {
    print_fragment_text(ctx, f, r);
  }
  return r.ok ? kOk : kVerificationFailed;
}

int cmd_scan(const Globals& g, const Context& ctx, const std::string& file, const std::string& bound,
             std::optional<int> jmax, bool crosscheck) {
  Semigroup s = load_semigroup(file);
  mpq_class w;
  try {
    w = scalar_from_string(bound);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "bad weight bound \"" + bound + "\"");
  }
  ResolutionEngine engine(s, engine_options(g, ctx));
  const int top = jmax.value_or(static_cast<int>(s.nvars()) - 1);
  const int cm = static_cast<int>(s.nvars()) - static_cast<int>(s.matrix().lattice_rank());
  std::size_t disagreements = 0;
  Json rows = Json::array();
  Json flagged = Json::array();
  for (const auto& m : degrees_up_to(s, w)) {
    Json ranks = Json::array();
    for (int j = 0; j <= top; ++j) ranks.push_back(engine.multigraded_betti(m, j));
    Json row{{"degree", degree_to_json(m)}, {"weight", scalar_to_string(s.weight(m))}, {"betti", ranks}};
    if (engine.multigraded_betti(m, cm) != 0) {
      row["cm_obstruction"] = true;
      flagged.push_back(degree_to_json(m));
    }
    if (crosscheck) {
      DeltaComplex d = build_delta(s, m);
      bool agree = true;
      for (int j = 0; j <= top; ++j) agree = agree && betti_reduced(ctx.field, d, j) == engine.multigraded_betti(m, j);
      row["delta_agrees"] = agree;
      if (!agree) ++disagreements;
    }
    rows.push_back(row);
  }
  if (ctx.json) {
    Json body{{"bound", scalar_to_string(w)}, {"jmax", top}, {"cm_dimension", cm}, {"degrees", rows}, {"flagged", flagged}};
    if (crosscheck) body["disagreements"] = disagreements;
    emit(with_config(ctx, body));
  } else {
    std::cout << "degrees with w.m <= " << scalar_to_string(w) << " and some nonzero Betti number (j = 0.." << top << "):\n";
    for (const auto& row : rows) {
      bool any = false;
      for (const auto& v : row["betti"]) any = any || v.get<std::size_t>() != 0;
      if (!any) continue;
      std::cout << "  " << degree_to_string(degree_from_json(row["degree"])) << "\t";
      for (const auto& v : row["betti"]) std::cout << ' ' << v.get<std::size_t>();
      if (row.contains("cm_obstruction")) std::cout << "\t[H_" << cm << " != 0]";
      std::cout << '\n';
    }
    std::cout << rows.size() << " degrees scanned, " << flagged.size() << " with nonzero H_" << cm << '\n';
    if (crosscheck) std::cout << "delta crosscheck: " << disagreements << " disagreements\n";
  }
  return disagreements == 0 ? kOk : kVerificationFailed;
}

int cmd_verify(const Globals& g, Context ctx, const std::string& file, const std::string& fragment_file) {
  Semigroup s = load_semigroup(file);
  Json doc = read_json_file(fragment_file);
  if (doc.contains("config")) {
    // Fragments are only meaningful relative to the configuration that produced them.
    ctx.order = TermOrder::parse(doc["config"].at("order").get<std::string>());
    ctx.field = Field::parse(doc["config"].at("field").get<std::string>());
  }
  const Json& body = doc.contains("fragment") ? doc["fragment"] : doc;
  ResolutionFragment f = fragment_from_json(body, s, ctx.field);
  ResolutionEngine engine(s, engine_options(g, ctx));
  FragmentReport r = engine.verify(f);
  if (ctx.json) {
    emit(with_config(ctx, {{"report", report_to_json(r)}}));
  } else {
    print_fragment_text(ctx, f, r);
  }
  return r.ok ? kOk : kVerificationFailed;
}

int exit_code_for(ErrorKind kind) {
  return kind == ErrorKind::LiftFailed ? kVerificationFailed : kInvalidInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal generators and syzygies of semigroup rings from Eliahou complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--order", g.order, "Term order: degrevlex or lex")->check(CLI::IsMember({"degrevlex", "lex"}));
  app.add_option("--field", g.field, "Coefficient field: rational or prime:<p>");
  app.add_option("--cache", g.cache, "Directory for persistent cycle bases");
  app.add_option("--format", g.format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--check", g.check, "Check every psi diagram while computing");

  std::string file, degree, lead, trail, bound, fragment_file, output;
  std::optional<int> jmax;
  int max_level = 2;
  std::optional<std::size_t> face_cap;
  bool crosscheck = false;

  auto* validate = app.add_subcommand("validate", "Check combinatorial finiteness and print a positive grading");
  validate->add_option("file", file, "Semigroup JSON file")->required();

  auto* fiber = app.add_subcommand("fiber", "List the monomials of a given degree");
  fiber->add_option("file", file)->required();
  fiber->add_option("degree", degree, "Degree, e.g. 52,8")->required();

  auto* nabla = app.add_subcommand("nabla", "Export the Eliahou complex of a degree");
  nabla->add_option("file", file)->required();
  nabla->add_option("degree", degree)->required();

  auto* delta = app.add_subcommand("delta", "Export the comparison complex of a degree");
  delta->add_option("file", file)->required();
  delta->add_option("degree", degree)->required();

  auto* betti = app.add_subcommand("betti", "Multigraded Betti numbers of one degree");
  betti->add_option("file", file)->required();
  betti->add_option("degree", degree)->required();
  betti->add_option("--jmax", jmax, "Highest homological dimension (default r-1)");
  betti->add_flag("--delta-crosscheck", crosscheck, "Compare with the comparison complex");

  auto* minimalize = app.add_subcommand("minimalize", "Write a binomial in terms of minimal generators");
  minimalize->add_option("file", file)->required();
  minimalize->add_option("--lead", lead, "Exponents of the first monomial, e.g. 0,2,6,0")->required();
  minimalize->add_option("--trail", trail, "Exponents of the second monomial")->required();

  auto* harvest = app.add_subcommand("harvest", "Collect a verified resolution fragment from one degree");
  harvest->add_option("file", file)->required();
  harvest->add_option("degree", degree)->required();
  harvest->add_option("--max-level", max_level, "Highest syzygy level")->check(CLI::NonNegativeNumber);
  harvest->add_option("--face-cap", face_cap, "Visit at most this many faces per dimension");
  harvest->add_option("--output", output, "Also write the JSON document to this file");

  auto* scan = app.add_subcommand("scan", "Betti table of every degree up to a weight bound");
  scan->add_option("file", file)->required();
  scan->add_option("--bound", bound, "Weight bound on w.m")->required();
  scan->add_option("--jmax", jmax, "Highest homological dimension (default r-1)");
  scan->add_flag("--delta-crosscheck", crosscheck, "Compare every degree with the comparison complex");

  auto* verify = app.add_subcommand("verify", "Re-verify a fragment written by harvest");
  verify->add_option("file", file)->required();
  verify->add_option("fragment", fragment_file, "Fragment JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  Context ctx;
  ctx.json = g.format == "json";
  try {
    ctx.order = TermOrder::parse(g.order);
    ctx.field = Field::parse(g.field);
    if (*validate) return cmd_validate(ctx, file);
    if (*fiber) return cmd_fiber(ctx, file, degree);
    if (*nabla) return cmd_nabla(ctx, file, degree);
    if (*delta) return cmd_delta(ctx, file, degree);
    if (*betti) return cmd_betti(g, ctx, file, degree, jmax, crosscheck);
    if (*minimalize) return cmd_minimalize(g, ctx, file, lead, trail);
    if (*harvest) return cmd_harvest(g, ctx, file, degree, max_level, face_cap, output);
    if (*scan) return cmd_scan(g, ctx, file, bound, jmax, crosscheck);
    if (*verify) return cmd_verify(g, ctx, file, fragment_file);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    if (ctx.json) emit(Json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}});
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "InvalidInput: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInvalidInput;
}
