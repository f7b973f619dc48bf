#pragma once

#include <gmpxx.h>

#include <vector>

#include "eliahou/monomial.hpp"

namespace eliahou {

// Columns n_1..n_r of a d x r integer matrix.
struct GeneratorMatrix {
  std::size_t dim = 0;
  std::vector<SDegree> generators;

  std::size_t rank() const { return generators.size(); }
  // Rank of the matrix over Q (the rank of the group generated by S).
  std::size_t lattice_rank() const;
};

// Certificate of combinatorial finiteness: w . n_i >= 1 for every generator.
struct PositiveGrading {
  std::vector<mpq_class> weight;

  mpq_class evaluate(const SDegree& m) const;
};

// Throws ZeroGenerator / NotCombinatoriallyFinite / InvalidInput.
PositiveGrading validate_presentation(const GeneratorMatrix& a);

// A validated presentation. All queries are pure.
class Semigroup {
 public:
  explicit Semigroup(GeneratorMatrix a);

  const GeneratorMatrix& matrix() const { return a_; }
  const PositiveGrading& grading() const { return w_; }
  std::size_t dim() const { return a_.dim; }
  std::size_t nvars() const { return a_.rank(); }
  const SDegree& generator(std::size_t i) const { return a_.generators[i]; }

  mpq_class weight(const SDegree& m) const { return w_.evaluate(m); }
  mpq_class weight(const Monomial& x) const;

  SDegree degree_of(const Monomial& x) const;
  bool member(const SDegree& m) const;
  // All monomials of S-degree m, sorted decreasing under `order`.
  std::vector<Monomial> fiber(const SDegree& m, const TermOrder& order) const;
  // m' <_S m, i.e. m - m' in S.
  bool s_less(const SDegree& lower, const SDegree& upper) const { return member(upper - lower); }

  void check_degree(const SDegree& m) const;
  void check_monomial(const Monomial& x) const;

 private:
  // Calls visit(exponents) for each solution; stops early when visit returns false.
  template <class Visit>
  void enumerate(const SDegree& m, Visit&& visit) const;

  GeneratorMatrix a_;
  PositiveGrading w_;
  std::vector<mpq_class> generator_weight_;
};

}  // namespace eliahou
