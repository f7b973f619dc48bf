#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "eliahou/basis_cache.hpp"
#include "eliahou/complexes.hpp"
#include "eliahou/fragment.hpp"
#include "eliahou/homology.hpp"
#include "eliahou/module.hpp"
#include "eliahou/semigroup.hpp"

namespace eliahou {

struct EngineOptions {
  TermOrder order;
  Field field = Field::rational();
  std::optional<std::filesystem::path> cache_dir;
  // Check phi_i(psi_i(F)) = psi_{i-1}(boundary F) for every face evaluated.
  bool check_diagrams = false;
  // Maximum number of faces per dimension visited by harvest.
  std::optional<std::size_t> face_cap;
};

// sum_j f_j * b_j, with b_j registered generators of `level`.
struct DecompositionResult {
  int level = 0;
  SDegree degree;
  ModuleElement input;
  ModuleElement coefficients;  // generator id -> f_j
};

struct EngineStats {
  std::size_t psi_evaluations = 0;
  std::size_t lifts = 0;
  std::size_t lift_fallbacks = 0;
  std::size_t nabla_built = 0;
};

// Owns the fixed bases, the psi maps and the generator registry for one presentation and
// one configuration. Generators are keyed structurally (level, degree, basis index), so
// results do not depend on the order in which queries arrive.
class ResolutionEngine {
 public:
  ResolutionEngine(Semigroup s, EngineOptions options = {});

  const Semigroup& semigroup() const { return s_; }
  const Field& field() const { return options_.field; }
  const TermOrder& order() const { return options_.order; }
  const EngineOptions& options() const { return options_; }

  const NablaComplex& nabla(const SDegree& m);
  const FaceLattice& lattice(const SDegree& m, int max_dim);
  const CycleBasis& cycle_basis(const SDegree& m, int j);
  std::size_t multigraded_betti(const SDegree& m, int j);

  // psi_i on the i-face with index `face` in faces_of_dim(i) of nabla(m).
  const ModuleElement& psi(int i, const SDegree& m, std::size_t face);
  ModuleElement psi_chain(int i, const SDegree& m, const SparseVec& chain);

  // An i-cycle of nabla(m) whose image under psi_i is g.
  SparseVec lift_to_cycle(int i, const ModuleElement& g, const SDegree& m);

  // v has level-i coordinates (keys of level i-1); returns its image one level down.
  ModuleElement apply_phi(const ModuleElement& v) const;

  DecompositionResult minimalize_binomial(const Binomial& g);
  // g is an element of level `level`: a polynomial (level 0) or a syzygy on level-1 generators.
  DecompositionResult minimalize(int level, const ModuleElement& g);

  // Registers the homology representatives of nabla(m) up to max_level and evaluates psi on
  // every face up to dimension max_level+1. Pair with verify() for the report.
  ResolutionFragment harvest(const SDegree& m, int max_level);
  FragmentReport verify(const ResolutionFragment& fragment);

  const GeneratorRecord& register_generator(int level, const SDegree& m, std::size_t k);
  const GeneratorRecord* find(const GeneratorId& id) const;
  const std::map<GeneratorId, GeneratorRecord>& registry() const { return registry_; }
  GeneratorId make_id(int level, const SDegree& m, std::size_t k) const;

  const EngineStats& stats() const { return stats_; }
  const BasisCache& cache() const { return cache_; }

 private:
  ModuleElement minimalize_impl(int level, const ModuleElement& g);
  std::optional<SparseVec> lift_by_witness(int i, const ModuleElement& g, const SDegree& m);
  SparseVec lift_by_solving(int i, const ModuleElement& g, const SDegree& m);
  void check_element(int level, const ModuleElement& g) const;

  Semigroup s_;
  EngineOptions options_;
  BasisCache cache_;
  std::map<SDegree, std::unique_ptr<NablaComplex>> nabla_;
  std::map<SDegree, std::unique_ptr<FaceLattice>> lattice_;
  std::vector<std::unique_ptr<FaceLattice>> retired_;  // superseded lattices, kept alive for outstanding references
  std::map<std::pair<SDegree, int>, std::shared_ptr<const CycleBasis>> bases_;
  std::map<std::tuple<int, SDegree, std::size_t>, ModuleElement> psi_memo_;
  std::map<GeneratorId, GeneratorRecord> registry_;
  EngineStats stats_;
};

// dim (I_S)_m - dim (m I_S)_m by direct elimination on fiber differences.
std::size_t oracle_v0(const Semigroup& s, const SDegree& m);

// All m in S with w.m <= bound, sorted by (w.m, m).
std::vector<SDegree> degrees_up_to(const Semigroup& s, const mpq_class& bound);

}  // namespace eliahou
