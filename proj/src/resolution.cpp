#include "eliahou/resolution.hpp"

#include <algorithm>
#include <set>

#include "eliahou/error.hpp"

namespace eliahou {

namespace {

Face drop(const Face& f, std::size_t t) {
  Face sub;
  sub.reserve(f.size() - 1);
  for (std::size_t u = 0; u < f.size(); ++u)
    if (u != t) sub.push_back(f[u]);
  return sub;
}

// Boundary of a j-chain (j >= 1) given on the faces of `lat`.
SparseVec boundary_of(const Field& k, const FaceLattice& lat, int j, const SparseVec& chain) {
  std::vector<SparseVec::Entry> out;
  for (const auto& [idx, c] : chain.entries()) {
    const Face& f = lat.faces(j).at(idx);
    for (std::size_t t = 0; t < f.size(); ++t) {
      auto sub = lat.index_of(j - 1, drop(f, t));
      if (!sub) throw std::logic_error("face lattice is not closed under taking faces");
      out.emplace_back(*sub, t % 2 == 0 ? c : k.neg(c));
    }
  }
  SparseVec merged(std::move(out));
  SparseVec reduced;
  for (const auto& [i, c] : merged.entries()) reduced.axpy(k, 1, SparseVec::unit(i, k.reduce(c)));
  return reduced;
}

}  // namespace

ResolutionEngine::ResolutionEngine(Semigroup s, EngineOptions options)
    : s_(std::move(s)), options_(std::move(options)), cache_(options_.cache_dir) {}

const NablaComplex& ResolutionEngine::nabla(const SDegree& m) {
  auto it = nabla_.find(m);
  if (it != nabla_.end()) return *it->second;
  s_.check_degree(m);
  ++stats_.nabla_built;
  auto built = std::make_unique<NablaComplex>(build_nabla(s_, m, options_.order));
  return *nabla_.emplace(m, std::move(built)).first->second;
}

const FaceLattice& ResolutionEngine::lattice(const SDegree& m, int max_dim) {
  auto it = lattice_.find(m);
  if (it != lattice_.end() && it->second->complete_through() >= max_dim) return *it->second;
  auto fresh = std::make_unique<FaceLattice>(FaceLattice::of(nabla(m), max_dim));
  if (it == lattice_.end()) return *lattice_.emplace(m, std::move(fresh)).first->second;
  retired_.push_back(std::move(it->second));
  it->second = std::move(fresh);
  return *it->second;
}

const CycleBasis& ResolutionEngine::cycle_basis(const SDegree& m, int j) {
  auto key = std::make_pair(m, j);
  if (auto it = bases_.find(key); it != bases_.end()) return *it->second;
  if (j < 0) throw Error(ErrorKind::InvalidInput, "homological dimension must be nonnegative");
  const FaceLattice& lat = lattice(m, j + 1);
  auto basis = cache_.get(basis_key(s_.matrix(), m, j, options_.order, options_.field), options_.field, lat.count(j),
                          lat.count(j + 1), [&] {
                            ChainBasis b = fixed_cycle_basis(options_.field, lat, j);
                            b.degree = m;
                            return b;
                          });
  return *bases_.emplace(key, std::move(basis)).first->second;
}

std::size_t ResolutionEngine::multigraded_betti(const SDegree& m, int j) {
  return cycle_basis(m, j).basis().homology.size();
}

GeneratorId ResolutionEngine::make_id(int level, const SDegree& m, std::size_t k) const {
  return GeneratorId{level, s_.weight(m), m, k};
}

const GeneratorRecord* ResolutionEngine::find(const GeneratorId& id) const {
  auto it = registry_.find(id);
  return it == registry_.end() ? nullptr : &it->second;
}

const GeneratorRecord& ResolutionEngine::register_generator(int level, const SDegree& m, std::size_t k) {
  const GeneratorId id = make_id(level, m, k);
  if (const GeneratorRecord* r = find(id)) return *r;
  const CycleBasis& cb = cycle_basis(m, level);
  if (k >= cb.basis().homology.size()) throw std::out_of_range("no homology representative " + id.to_string());
  const Field& f = options_.field;
  SparseVec witness = cb.basis().homology[k];
  ModuleElement value = psi_chain(level, m, witness);
  if (level == 0 && !value.empty()) {
    // Make the leading coefficient 1, so the value reads x^lead - x^trail.
    const Polynomial& p = value.begin()->second;
    auto lead = std::max_element(p.terms().begin(), p.terms().end(), [&](const auto& a, const auto& b) {
      return options_.order.compare(a.first, b.first) < 0;
    });
    Scalar scale = f.inv(lead->second);
    ModuleElement scaled;
    add_scaled(f, scaled, value, scale);
    value = std::move(scaled);
    witness.scale(f, scale);
  }
  return registry_.emplace(id, GeneratorRecord{id, std::move(value), std::move(witness)}).first->second;
}

const ModuleElement& ResolutionEngine::psi(int i, const SDegree& m, std::size_t face) {
  auto key = std::make_tuple(i, m, face);
  if (auto it = psi_memo_.find(key); it != psi_memo_.end()) return it->second;
  const Field& k = options_.field;
  const FaceLattice& lat = lattice(m, i);
  if (face >= lat.count(i)) throw Error(ErrorKind::NotAFace, "no " + std::to_string(i) + "-face with index " + std::to_string(face));
  const Face f = lat.faces(i)[face];

  ModuleElement out;
  if (i == 0) {
    out[GeneratorId::ring(s_.dim())] = Polynomial::term(nabla(m).vertices()[f[0]], 1);
  } else {
    ModuleElement g;
    for (std::size_t t = 0; t < f.size(); ++t) {
      auto sub = lat.index_of(i - 1, drop(f, t));
      if (!sub) throw std::logic_error("face lattice is not closed under taking faces");
      add_scaled(k, g, psi(i - 1, m, *sub), t % 2 == 0 ? Scalar(1) : k.neg(1));
    }
    if (!is_zero(g)) {
      // gcd(F) divides every term, so the recursion below runs at a strictly smaller degree.
      if (monomial_content(g)->is_unit()) throw std::logic_error("psi recursion does not descend");
      out = minimalize_impl(i - 1, g);
      if (options_.check_diagrams && apply_phi(out) != g) {
        throw std::logic_error("psi diagram does not commute at " + degree_to_string(m));
      }
    }
  }
  ++stats_.psi_evaluations;
  return psi_memo_.emplace(key, std::move(out)).first->second;
}

ModuleElement ResolutionEngine::psi_chain(int i, const SDegree& m, const SparseVec& chain) {
  ModuleElement out;
  for (const auto& [idx, c] : chain.entries()) add_scaled(options_.field, out, psi(i, m, idx), c);
  return out;
}

ModuleElement ResolutionEngine::apply_phi(const ModuleElement& v) const {
  std::vector<GeneratorId> missing;
  ModuleElement out = apply_values(options_.field, [this](const GeneratorId& id) { return find(id); }, v, &missing);
  if (!missing.empty()) throw Error(ErrorKind::InvalidInput, "unknown generator " + missing.front().to_string());
  return out;
}

SparseVec ResolutionEngine::lift_to_cycle(int i, const ModuleElement& g, const SDegree& m) {
  if (is_zero(g)) return {};
  const Field& k = options_.field;
  if (i == 0) {
    const NablaComplex& nab = nabla(m);
    std::vector<SparseVec::Entry> entries;
    Scalar total = 0;
    for (const auto& [id, p] : g) {
      if (!id.is_ring()) throw Error(ErrorKind::InvalidInput, "level-0 element must be a polynomial");
      for (const auto& [x, c] : p.terms()) {
        auto idx = nab.vertex_index(x);
        if (!idx) throw Error(ErrorKind::DegreeMismatch, x.to_string() + " is not in the fiber of " + degree_to_string(m));
        entries.emplace_back(*idx, c);
        total = k.add(total, c);
      }
    }
    if (!k.is_zero(total)) throw Error(ErrorKind::NotInIdeal, "coefficients do not sum to zero");
    return SparseVec(std::move(entries));
  }
  ++stats_.lifts;
  if (auto chain = lift_by_witness(i, g, m)) return *chain;
  ++stats_.lift_fallbacks;
  return lift_by_solving(i, g, m);
}

std::optional<SparseVec> ResolutionEngine::lift_by_witness(int i, const ModuleElement& g, const SDegree& m) {
  const Field& k = options_.field;
  const NablaComplex& nab = nabla(m);
  const FaceLattice& lat = lattice(m, i);
  SparseVec chain;
  for (const auto& [id, p] : g) {
    const GeneratorRecord* rec = find(id);
    if (!rec || rec->level() != i - 1) throw Error(ErrorKind::InvalidInput, "unknown generator " + id.to_string());
    if (i == 1) {
      auto b = as_binomial(*rec, options_.order);
      if (!b) return std::nullopt;
      // x^gamma * (x^lead - x^trail) lifts to the oriented edge from gamma*trail to gamma*lead.
      for (const auto& [gamma, c] : p.terms()) {
        auto u = nab.vertex_index(gamma * b->trail);
        auto v = nab.vertex_index(gamma * b->lead);
        if (!u || !v) return std::nullopt;
        auto e = lat.index_of(1, Face{std::min(*u, *v), std::max(*u, *v)});
        if (!e) return std::nullopt;
        chain.axpy(k, *u < *v ? c : k.neg(c), SparseVec::unit(*e));
      }
      continue;
    }
    // x^delta times the witness of b is a boundary in nabla(m); take the chain it bounds.
    const NablaComplex& src = nabla(rec->degree());
    const FaceLattice& src_lat = lattice(rec->degree(), i - 1);
    for (const auto& [delta, c] : p.terms()) {
      std::vector<SparseVec::Entry> shifted;
      for (const auto& [idx, w] : rec->witness.entries()) {
        Face f;
        for (std::size_t v : src_lat.faces(i - 1).at(idx)) {
          auto t = nab.vertex_index(src.vertices()[v] * delta);
          if (!t) return std::nullopt;
          f.push_back(*t);
        }
        std::sort(f.begin(), f.end());
        auto fi = lat.index_of(i - 1, f);
        if (!fi) return std::nullopt;
        shifted.emplace_back(*fi, w);
      }
      BasisCoordinates coords;
      try {
        coords = cycle_basis(m, i - 1).express(SparseVec(std::move(shifted)));
      } catch (const Error&) {
        return std::nullopt;
      }
      if (!coords.lambda.empty()) return std::nullopt;
      chain.axpy(k, c, cycle_basis(m, i - 1).boundary_chain(coords.mu));
    }
  }
  if (!boundary_of(k, lattice(m, i), i, chain).empty()) return std::nullopt;
  if (psi_chain(i, m, chain) != g) return std::nullopt;
  return chain;
}

SparseVec ResolutionEngine::lift_by_solving(int i, const ModuleElement& g, const SDegree& m) {
  const Field& k = options_.field;
  const CycleBasis& cb = cycle_basis(m, i);
  std::map<std::pair<GeneratorId, Monomial>, std::size_t> coordinate;
  auto encode = [&](const ModuleElement& v) {
    std::vector<SparseVec::Entry> entries;
    for (const auto& [id, p] : v) {
      for (const auto& [x, c] : p.terms()) {
        auto [it, fresh] = coordinate.try_emplace({id, x}, coordinate.size());
        entries.emplace_back(it->second, c);
      }
    }
    return SparseVec(std::move(entries));
  };
  std::vector<const SparseVec*> cycles;
  for (const auto& h : cb.basis().boundary) cycles.push_back(&h);
  for (const auto& b : cb.basis().homology) cycles.push_back(&b);
  SpanSolver images(k);
  for (const SparseVec* z : cycles) images.insert(encode(psi_chain(i, m, *z)));
  auto solution = images.solve(encode(g));
  if (!solution) {
    if (!is_zero(apply_phi(g))) throw Error(ErrorKind::NotASyzygy, "element is not a syzygy");
    throw Error(ErrorKind::LiftFailed, "no cycle of the complex at " + degree_to_string(m) + " maps onto the element");
  }
  SparseVec chain;
  for (const auto& [idx, c] : solution->entries()) chain.axpy(k, c, *cycles.at(idx));
  return chain;
}

void ResolutionEngine::check_element(int level, const ModuleElement& g) const {
  if (level < 0) throw Error(ErrorKind::InvalidInput, "level must be nonnegative");
  for (const auto& [id, p] : g) {
    if (level == 0 ? !id.is_ring() : (id.level != level - 1 || !find(id))) {
      throw Error(ErrorKind::InvalidInput, "coordinate " + id.to_string() + " does not belong to level " + std::to_string(level));
    }
    for (const auto& [x, c] : p.terms()) s_.check_monomial(x);
  }
  homogeneous_degree(s_, g);
  if (level == 0) {
    Scalar total = 0;
    for (const auto& [id, p] : g)
      for (const auto& [x, c] : p.terms()) total = options_.field.add(total, c);
    if (!options_.field.is_zero(total)) throw Error(ErrorKind::NotInIdeal, "polynomial does not vanish on the semigroup");
  } else if (!is_zero(apply_phi(g))) {
    throw Error(ErrorKind::NotASyzygy, "element does not map to zero");
  }
}

DecompositionResult ResolutionEngine::minimalize_binomial(const Binomial& g) {
  s_.check_monomial(g.lead);
  s_.check_monomial(g.trail);
  if (g.lead == g.trail) throw Error(ErrorKind::NotInIdeal, "lead and trail coincide");
  if (s_.degree_of(g.lead) != s_.degree_of(g.trail)) {
    throw Error(ErrorKind::NotHomogeneous, degree_to_string(s_.degree_of(g.lead)) + " vs " +
                                               degree_to_string(s_.degree_of(g.trail)));
  }
  ModuleElement element{{GeneratorId::ring(s_.dim()), g.to_polynomial(options_.field)}};
  return minimalize(0, element);
}

DecompositionResult ResolutionEngine::minimalize(int level, const ModuleElement& g) {
  check_element(level, g);
  DecompositionResult out;
  out.level = level;
  out.degree = homogeneous_degree(s_, g).value_or(zero_degree(s_.dim()));
  out.input = g;
  std::erase_if(out.input, [](const auto& e) { return e.second.is_zero(); });
  out.coefficients = minimalize_impl(level, out.input);
  return out;
}

ModuleElement ResolutionEngine::minimalize_impl(int i, const ModuleElement& g) {
  if (is_zero(g)) return {};
  const Field& k = options_.field;
  const SDegree m = *homogeneous_degree(s_, g);
  const Monomial h = *monomial_content(g);
  const ModuleElement reduced = divided_by(g, h);
  const SDegree mr = m - s_.degree_of(h);

  const SparseVec z = lift_to_cycle(i, reduced, mr);
  const CycleBasis& cb = cycle_basis(mr, i);
  const BasisCoordinates coords = cb.express(z);

  const Monomial one = Monomial::unit(s_.nvars());
  ModuleElement out;
  ModuleElement explained;
  for (const auto& [idx, lambda] : coords.lambda.entries()) {
    const GeneratorRecord& rec = register_generator(i, mr, idx);
    const Scalar scale = k.div(rec.witness.entries().front().second, cb.basis().homology[idx].entries().front().second);
    const Scalar c = k.div(lambda, scale);
    out[rec.id].add_term(k, one, c);
    add_scaled(k, explained, rec.value, c);
  }
  if (explained != reduced) {
    // The boundary part: push mu onto (i+1)-faces and use psi_{i+1} there.
    const SparseVec nu = cb.boundary_chain(coords.mu);
    for (const auto& [face, c] : nu.entries()) add_scaled(k, out, psi(i + 1, mr, face), c);
  }
  ModuleElement shifted;
  add_scaled(k, shifted, out, 1, h);
  return shifted;
}

ResolutionFragment ResolutionEngine::harvest(const SDegree& m, int max_level) {
  s_.check_degree(m);
  if (max_level < 0) throw Error(ErrorKind::InvalidInput, "max level must be nonnegative");
  ResolutionFragment fragment;
  fragment.root = m;
  fragment.max_level = max_level;
  for (int j = 0; j <= max_level; ++j) {
    const std::size_t t = cycle_basis(m, j).basis().homology.size();
    for (std::size_t idx = 0; idx < t; ++idx) register_generator(j, m, idx);
  }
  const FaceLattice& lat = lattice(m, max_level + 1);
  fragment.faces_walked.push_back(lat.count(0));
  for (int i = 1; i <= max_level + 1; ++i) {
    std::size_t n = lat.count(i);
    if (options_.face_cap) n = std::min(n, *options_.face_cap);
    for (std::size_t idx = 0; idx < n; ++idx) psi(i, m, idx);
    fragment.faces_walked.push_back(n);
  }
  for (const auto& [id, rec] : registry_) {
    if (id.level <= max_level) fragment.generators.push_back(rec);
  }
  return fragment;
}

FragmentReport ResolutionEngine::verify(const ResolutionFragment& fragment) {
  return verify_fragment(s_, options_.field, options_.order, fragment,
                         [this](const SDegree& m, int j) { return multigraded_betti(m, j); });
}

std::vector<SDegree> degrees_up_to(const Semigroup& s, const mpq_class& bound) {
  std::set<SDegree> seen{zero_degree(s.dim())};
  std::vector<SDegree> frontier{zero_degree(s.dim())};
  while (!frontier.empty()) {
    std::vector<SDegree> next;
    for (const auto& m : frontier) {
      for (std::size_t i = 0; i < s.nvars(); ++i) {
        SDegree n = m + s.generator(i);
        if (s.weight(n) > bound) continue;
        if (seen.insert(n).second) next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  std::vector<SDegree> out(seen.begin(), seen.end());
  if (s.weight(out.front()) > bound) return {};
  std::stable_sort(out.begin(), out.end(), [&](const SDegree& a, const SDegree& b) { return s.weight(a) < s.weight(b); });
  return out;
}

}  // namespace eliahou
