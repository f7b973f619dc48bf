// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "eliahou/error.hpp"
#include "eliahou/resolution.hpp"
#include "eliahou/serialize.hpp"
#include "support.hpp"

using namespace eliahou;
using namespace testing_support;

namespace {

const Field kQ = Field::rational();

// Collects failed checks for one criterion.
struct Checks {
  std::vector<std::string> failures;
  std::size_t count = 0;
  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Checks&)> body;
};

Polynomial binomial(const Monomial& a, const Monomial& b) {
  Polynomial p;
  p.add_term(kQ, a, 1);
  p.add_term(kQ, b, -1);
  return p;
}

Polynomial monomial_poly(const Monomial& x) {
  Polynomial p;
  p.add_term(kQ, x, 1);
  return p;
}

bool equal_up_to_sign(const Polynomial& a, const Polynomial& b) {
  if (a == b) return true;
  if (b.is_zero()) return false;
  Polynomial neg;
  neg.add_scaled(kQ, b, -1, Monomial::unit(b.terms().begin()->first.nvars()));
  return a == neg;
}

const Polynomial& value0(const ResolutionEngine& e, const GeneratorId& id) { return e.find(id)->value.begin()->second; }

// Reconstruction, divisibility by the monomial content, and nonzero coefficients.
void check_decomposition(Checks& c, const ResolutionEngine& e, const DecompositionResult& d, const std::string& tag) {
  c.expect(e.apply_phi(d.coefficients) == d.input, tag + ": sum f_j b_j differs from the input");
  auto h = monomial_content(d.input);
  c.expect(h.has_value(), tag + ": input has no monomial content");
  if (!h) return;
  for (const auto& [id, f] : d.coefficients) {
    c.expect(!f.is_zero(), tag + ": zero coefficient on " + id.to_string());
    c.expect(f.divisible_by(*h), tag + ": coefficient of " + id.to_string() + " not divisible by " + h->to_string());
  }
}

// Lead and trail of every level-0 generator sit in different components of its complex.
void check_components(Checks& c, ResolutionEngine& e, const GeneratorId& id, const std::string& tag) {
  if (id.level != 0) return;
  auto b = as_binomial(*e.find(id), e.order());
  c.expect(b.has_value(), tag + ": " + id.to_string() + " is not a binomial");
  if (!b) return;
  const NablaComplex& k = e.nabla(id.degree);
  auto labels = k.component_labels();
  c.expect(labels[*k.vertex_index(b->lead)] != labels[*k.vertex_index(b->trail)],
           tag + ": monomials of " + id.to_string() + " share a component");
}

std::string degree_text(const SDegree& m) { return degree_to_json(m).dump(); }

void example1_end_to_end(Checks& c) {
  Semigroup s = example1();
  auto f = s.fiber(deg({52, 8}), TermOrder());
  std::set<Monomial> expected{mono({0, 2, 6, 0}), mono({0, 3, 3, 2}), mono({0, 4, 0, 4}), mono({1, 1, 5, 1}),
                             mono({1, 2, 2, 3}), mono({2, 0, 4, 2}), mono({2, 1, 1, 4}), mono({3, 0, 0, 5})};
  c.expect(f.size() == 8 && std::set<Monomial>(f.begin(), f.end()) == expected, "fiber at (52,8)");

  ResolutionEngine e(s);
  auto d = e.minimalize_binomial({mono({0, 2, 6, 0}), mono({3, 0, 0, 5})});
  c.expect(d.coefficients.size() == 2, "expected 2 generators, got " + std::to_string(d.coefficients.size()));
  std::map<SDegree, Polynomial> by_degree;
  for (const auto& [id, p] : d.coefficients) by_degree[id.degree] = value0(e, id);
  c.expect(by_degree.count(deg({21, 3})) &&
               equal_up_to_sign(by_degree[deg({21, 3})], binomial(mono({0, 0, 3, 0}), mono({0, 1, 0, 2}))),
           "generator x3^3 - x2x4^2 at (21,3)");
  c.expect(by_degree.count(deg({12, 2})) &&
               equal_up_to_sign(by_degree[deg({12, 2})], binomial(mono({0, 1, 1, 0}), mono({1, 0, 0, 1}))),
           "generator x2x3 - x1x4 at (12,2)");
  check_decomposition(c, e, d, "(52,8)");
}

void example2_syzygy(Checks& c) {
  ResolutionEngine e(example1());
  std::vector<GeneratorId> ids;
  for (const auto& [a, b] : std::vector<std::pair<Monomial, Monomial>>{{mono({0, 1, 1, 0}), mono({1, 0, 0, 1})},
                                                                       {mono({0, 0, 3, 0}), mono({0, 1, 0, 2})},
                                                                       {mono({1, 0, 2, 0}), mono({0, 2, 0, 1})}}) {
    auto d = e.minimalize_binomial({a, b});
    c.expect(d.coefficients.size() == 1, "level-0 generator " + a.to_string() + " - " + b.to_string());
    ids.push_back(d.coefficients.begin()->first);
  }
  auto poly = [](std::initializer_list<std::pair<Monomial, long>> terms) {
    Polynomial p;
    for (const auto& [x, v] : terms) p.add_term(kQ, x, v);
    return p;
  };
  ModuleElement g;
  g[ids[0]] = poly({{mono({0, 1, 4, 0}), 1}, {mono({1, 1, 0, 3}), 1}});
  g[ids[1]] = poly({{mono({0, 2, 2, 0}), -1}, {mono({2, 0, 0, 2}), -1}});
  g[ids[2]] = poly({{mono({0, 1, 2, 1}), 1}, {mono({1, 0, 1, 2}), 1}});
  c.expect(is_zero(e.apply_phi(g)), "g is not a syzygy");

  auto d = e.minimalize(1, g);
  c.expect(d.degree == deg({45, 7}), "degree of g is " + degree_text(d.degree));
  c.expect(d.coefficients.size() == 2, "expected 2 level-1 generators, got " + std::to_string(d.coefficients.size()));
  std::map<SDegree, Polynomial> coeff;
  for (const auto& [id, f] : d.coefficients) {
    c.expect(id.level == 1, id.to_string() + " is not a level-1 generator");
    coeff[id.degree] = f;
    c.expect(is_zero(e.apply_phi(e.find(id)->value)), id.to_string() + " is not a syzygy");
  }
  c.expect(coeff.count(deg({25, 4})) && equal_up_to_sign(coeff[deg({25, 4})], monomial_poly(mono({1, 0, 0, 2}))),
           "coefficient x1x4^2 at (25,4)");
  c.expect(coeff.count(deg({26, 4})) && equal_up_to_sign(coeff[deg({26, 4})], monomial_poly(mono({0, 1, 2, 0}))),
           "coefficient x2x3^2 at (26,4)");
  check_decomposition(c, e, d, "(45,7)");
}

void final_fragment(Checks& c) {
  ResolutionEngine e(example1());
  ResolutionFragment f = e.harvest(deg({60, 10}), 2);
  c.expect(f.level(0).size() == 4, "level-0 count " + std::to_string(f.level(0).size()));
  c.expect(f.level(1).size() >= 4, "level-1 count " + std::to_string(f.level(1).size()));
  c.expect(f.level(2).size() >= 1, "level-2 count " + std::to_string(f.level(2).size()));
  std::vector<Polynomial> expected = {binomial(mono({0, 2, 0, 1}), mono({1, 0, 2, 0})),
                                      binomial(mono({0, 1, 1, 0}), mono({1, 0, 0, 1})),
                                      binomial(mono({0, 3, 0, 0}), mono({2, 0, 1, 0})),
                                      binomial(mono({0, 0, 3, 0}), mono({0, 1, 0, 2}))};
  std::vector<bool> seen(expected.size(), false);
  for (const auto* g : f.level(0)) {
    bool found = false;
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (g->value.size() == 1 && equal_up_to_sign(g->value.begin()->second, expected[i])) found = seen[i] = true;
    c.expect(found, "unexpected level-0 generator " + g->id.to_string());
  }
  for (std::size_t i = 0; i < seen.size(); ++i) c.expect(seen[i], "missing level-0 binomial #" + std::to_string(i));
  FragmentReport r = e.verify(f);
  c.expect(r.ok, "verify_fragment failed");
  for (const auto& v : r.violations) c.failures.push_back(v);
  c.expect(f.ranks() == std::vector<std::size_t>{1, 4, 4, 1}, "summand ranks are not 1,4,4,1");
}

void iso_suite(Checks& c) {
  for (const auto& s : {example1(), numerical_2_3()}) {
    const int r = static_cast<int>(s.nvars());
    for (const auto& m : degrees_up_to(s, 6)) {
      NablaComplex nabla = build_nabla(s, m, TermOrder());
      DeltaComplex delta = build_delta(s, m);
      for (int j = 0; j <= r - 1; ++j) {
        const auto a = betti_reduced(kQ, nabla, j), b = betti_reduced(kQ, delta, j);
        c.expect(a == b, "m = " + degree_text(m) + ", j = " + std::to_string(j) + ": " + std::to_string(a) +
                             " vs " + std::to_string(b));
      }
    }
  }
}

void oracle_suite(Checks& c) {
  ResolutionEngine e(example1());
  for (const auto& m : degrees_up_to(e.semigroup(), 5)) {
    const auto a = e.multigraded_betti(m, 0), b = oracle_v0(e.semigroup(), m);
    c.expect(a == b, "m = " + degree_text(m) + ": " + std::to_string(a) + " vs oracle " + std::to_string(b));
  }
}

void check_boundary_squares(Checks& c, const FaceLattice& lat, int top, const std::string& tag) {
  for (int j = 1; j <= top; ++j) {
    SparseMatrix dd = boundary_matrix(lat, j).matrix.multiply(kQ, boundary_matrix(lat, j + 1).matrix);
    for (const auto& col : dd.columns) c.expect(col.empty(), tag + ": nonzero boundary square at " + std::to_string(j));
  }
  // The augmentation composes to zero as well.
  SparseMatrix aug = boundary_matrix(lat, 0).matrix.multiply(kQ, boundary_matrix(lat, 1).matrix);
  for (const auto& col : aug.columns) c.expect(col.empty(), tag + ": augmentation of boundary is nonzero");
}

void check_gauss(Checks& c, const Field& k, const SparseMatrix& a, const std::string& tag) {
  GaussReduction g = gauss_reduce(k, a);
  SparseMatrix aq = a.multiply(k, g.q);
  for (std::size_t col = 0; col < a.cols; ++col) {
    SparseVec expected = col < g.rank ? g.p.columns[col] : SparseVec();
    SparseVec got;
    for (const auto& [i, x] : aq.columns[col].entries()) got.axpy(k, 1, SparseVec::unit(i, k.reduce(x)));
    c.expect(got == expected, tag + ": A Q differs from P [I 0; 0 0] in column " + std::to_string(col));
  }
  if (a.rows > 0) c.expect(!k.is_zero(determinant(k, g.p)), tag + ": P is singular");
  if (a.cols > 0) c.expect(!k.is_zero(determinant(k, g.q)), tag + ": Q is singular");
}

std::string pipeline_json(const std::optional<std::filesystem::path>& cache) {
  EngineOptions o;
  o.cache_dir = cache;
  ResolutionEngine e(example1(), o);
  Json out = Json::object();
  out["fragment"] = fragment_to_json(e.harvest(deg({60, 10}), 2), e.order());
  out["decomposition"] = decomposition_to_json(e.minimalize_binomial({mono({0, 2, 6, 0}), mono({3, 0, 0, 5})}), e);
  Json reg = Json::array();
  for (const auto& [id, r] : e.registry()) reg.push_back(generator_record_to_json(r, e.order()));
  out["registry"] = reg;
  return out.dump();
}

void structural_suite(Checks& c) {
  std::mt19937 rng(20261016);
  for (const auto& s : {example1(), numerical_2_3()}) {
    const std::string name = s.nvars() == 4 ? "example" : "[[2,3]]";
    for (const auto& m : degrees_up_to(s, 6)) {
      const NablaComplex nabla = build_nabla(s, m, TermOrder());
      const FaceLattice nl = FaceLattice::of(nabla, static_cast<int>(s.nvars()) + 1);
      check_boundary_squares(c, nl, static_cast<int>(s.nvars()), name + " nabla " + degree_text(m));
      const FaceLattice dl = FaceLattice::of(build_delta(s, m));
      check_boundary_squares(c, dl, static_cast<int>(s.nvars()), name + " delta " + degree_text(m));
      if (m == deg({60, 10}) || m == deg({52, 8}) || m == deg({12})) {
        for (int j = 0; j <= 2; ++j) check_gauss(c, kQ, boundary_matrix(nl, j).matrix, name + " boundary");
      }

      // Fiber against the box [0, floor(w.m)]^r.
      const mpq_class wm = s.weight(m);
      const Exponent bound = mpz_class(wm.get_num() / wm.get_den()).get_si();
      auto f = s.fiber(m, TermOrder());
      c.expect(std::set<Monomial>(f.begin(), f.end()) == box_fiber(s, m, bound), name + " fiber " + degree_text(m));
    }
  }
  std::uniform_int_distribution<int> entry(-3, 3), keep(0, 2);
  std::uniform_int_distribution<std::size_t> dim(0, 8);
  for (const Field& k : {Field::rational(), Field::prime(2), Field::prime(32003)}) {
    for (int t = 0; t < 40; ++t) {
      SparseMatrix a(dim(rng), dim(rng));
      for (auto& col : a.columns) {
        std::vector<SparseVec::Entry> e;
        for (std::size_t r = 0; r < a.rows; ++r)
          if (keep(rng) == 0) e.emplace_back(r, Scalar(entry(rng)));
        col = SparseVec(std::move(e));
      }
      check_gauss(c, k, a, "random matrix");
    }
  }

  Semigroup s = example1();
  std::uniform_int_distribution<int> ex(0, 3);
  int done = 0;
  while (done < 50) {
    Monomial x({ex(rng), ex(rng), ex(rng), ex(rng)});
    NablaComplex k = build_nabla(s, s.degree_of(x), TermOrder());
    std::uniform_int_distribution<std::size_t> pick(0, k.num_vertices() - 1);
    Monomial beta = gcd(x, k.vertices()[pick(rng)]);
    if (s.degree_of(beta) == s.degree_of(x)) continue;
    NablaComplex r = restrict_nabla(s, k, beta);
    NablaComplex direct = build_nabla(s, s.degree_of(x) - s.degree_of(beta), TermOrder());
    bool same = r.vertices() == direct.vertices();
    for (int j = 0; j < 4; ++j) same = same && r.faces_of_dim(j) == direct.faces_of_dim(j);
    c.expect(same, "restrict_nabla of " + x.to_string() + " by " + beta.to_string());
    ++done;
  }

  const auto dir = std::filesystem::temp_directory_path() / ("eliahou-acceptance-" + std::to_string(rng()));
  std::filesystem::remove_all(dir);
  const std::string plain1 = pipeline_json(std::nullopt), plain2 = pipeline_json(std::nullopt);
  const std::string cold = pipeline_json(dir), warm = pipeline_json(dir);
  std::filesystem::remove_all(dir);
  c.expect(plain1 == plain2, "two runs differ");
  c.expect(plain1 == cold && cold == warm, "runs with a cold and a warm cache differ");
}

void random_binomials(Checks& c) {
  ResolutionEngine e(example1());
  std::vector<SDegree> pool;
  for (const auto& m : degrees_up_to(e.semigroup(), 8))
    if (e.semigroup().fiber(m, e.order()).size() >= 2) pool.push_back(m);
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> pick_m(0, pool.size() - 1);
  for (int t = 0; t < 100; ++t) {
    const SDegree& m = pool[pick_m(rng)];
    auto f = e.semigroup().fiber(m, e.order());
    std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    const std::string tag = f[std::min(i, j)].to_string() + " - " + f[std::max(i, j)].to_string();
    // Fibers are sorted decreasing, so the smaller index is the lead.
    auto d = e.minimalize_binomial({f[std::min(i, j)], f[std::max(i, j)]});
    check_decomposition(c, e, d, tag);
    for (const auto& [id, p] : d.coefficients) check_components(c, e, id, tag);
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "fiber and minimalization at (52,8)", 5, example1_end_to_end},
      {2, "level-1 decomposition of a syzygy at (45,7)", 5, example2_syzygy},
      {3, "fragment at (60,10) with ranks 1,4,4,1", 30, final_fragment},
      {4, "reduced Betti numbers of nabla and delta agree, w.m <= 6", 120, iso_suite},
      {5, "level-0 Betti numbers match the elimination oracle, w.m <= 5", 120, oracle_suite},
      {6, "structural invariants and determinism", 60, structural_suite},
      {7, "100 random binomials: reconstruction, divisibility, components", 120, random_binomials},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& ex) {
      c.failures.push_back(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= cr.limit_seconds) {
      std::ostringstream o;
      o << "took " << secs << " s, limit " << cr.limit_seconds << " s";
      c.failures.push_back(o.str());
    }
    const bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::printf("%s [%d] %s (%zu checks, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", cr.number, cr.title.c_str(),
                c.count, secs, cr.limit_seconds);
    for (std::size_t i = 0; i < c.failures.size() && i < 20; ++i) std::printf("    %s\n", c.failures[i].c_str());
    if (c.failures.size() > 20) std::printf("    ... %zu more\n", c.failures.size() - 20);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
