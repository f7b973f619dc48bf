#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eliahou/homology.hpp"
#include "eliahou/module.hpp"

namespace eliahou {

// A registered minimal generator. value = psi_level(witness); witness is a scalar
// multiple of one homology representative of the fixed basis at `id.degree`.
struct GeneratorRecord {
  GeneratorId id;
  ModuleElement value;
  SparseVec witness;

  int level() const { return id.level; }
  const SDegree& degree() const { return id.degree; }
};

// Reads a two-term level-0 value as x^lead - x^trail with lead > trail; does not check the
// trailing coefficient.
std::optional<Binomial> as_binomial(const GeneratorRecord& r, const TermOrder& order);

struct ResolutionFragment {
  SDegree root;
  int max_level = 0;
  std::vector<GeneratorRecord> generators;  // sorted by id
  std::vector<std::size_t> faces_walked;    // per face dimension 0..max_level+1

  // Free summand ranks: entry 0 is R itself, entry j+1 counts level-j generators.
  std::vector<std::size_t> ranks() const;
  std::vector<const GeneratorRecord*> level(int j) const;
};

struct FragmentReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::vector<std::size_t> ranks;
  std::size_t checked_generators = 0;
};

using BettiFunction = std::function<std::size_t(const SDegree&, int)>;

// Composition zero, no constant terms, homogeneity, level-0 binomial shape, and the
// per-(level, degree) bound by the reduced Betti numbers.
FragmentReport verify_fragment(const Semigroup& s, const Field& k, const TermOrder& order,
                               const ResolutionFragment& fragment, const BettiFunction& betti);

using GeneratorLookup = std::function<const GeneratorRecord*(const GeneratorId&)>;

// Substitutes generator values: sum_j v_j * value(b_j). Unknown ids are reported through `missing`.
ModuleElement apply_values(const Field& k, const GeneratorLookup& lookup, const ModuleElement& v,
                           std::vector<GeneratorId>* missing = nullptr);

}  // namespace eliahou
