#pragma once

#include <optional>
#include <vector>

#include "eliahou/monomial.hpp"
#include "eliahou/semigroup.hpp"

namespace eliahou {

// Strictly increasing vertex indices into the host complex.
using Face = std::vector<std::size_t>;

// The complex on the fiber C_m whose faces are the subsets with nontrivial gcd.
// It is the union of the full simplices on the cover sets D_i (vertices divisible by x_i).
class NablaComplex {
 public:
  NablaComplex(SDegree degree, TermOrder order, std::vector<Monomial> vertices);

  const SDegree& degree() const { return degree_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Monomial>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<std::vector<std::size_t>>& cover() const { return cover_; }
  bool empty() const { return vertices_.empty(); }

  std::optional<std::size_t> vertex_index(const Monomial& x) const;
  Monomial gcd_of(const Face& f) const;
  bool is_face(const Face& f) const;
  // j-faces ordered by gcd decreasing under the term order, ties by the index sequence.
  std::vector<Face> faces_of_dim(int j) const;
  // Maximal cover sets.
  std::vector<Face> facets() const;
  // Number of connected components of the 1-skeleton.
  std::size_t num_components() const;
  std::vector<std::size_t> component_labels() const;

 private:
  SDegree degree_;
  TermOrder order_;
  std::vector<Monomial> vertices_;
  std::vector<std::vector<std::size_t>> cover_;
};

NablaComplex build_nabla(const Semigroup& s, const SDegree& m, const TermOrder& order);

// Faces of K whose gcd is properly divisible by x^beta, divided by x^beta; a copy of the
// complex at m - deg(beta). Throws DegreeMismatch when m - deg(beta) is not in S.
NablaComplex restrict_nabla(const Semigroup& s, const NablaComplex& k, const Monomial& beta);

// Subsets F of the variable indices with m - n_F in S, the empty set included when m is in S.
class DeltaComplex {
 public:
  DeltaComplex(SDegree degree, std::size_t nvars, std::vector<Face> faces);

  const SDegree& degree() const { return degree_; }
  std::size_t nvars() const { return nvars_; }
  bool has_empty_face() const { return has_empty_; }
  // Nonempty faces, sorted by size then lexicographically.
  const std::vector<Face>& faces() const { return faces_; }
  bool contains(const Face& f) const;
  std::vector<Face> faces_of_dim(int j) const;
  std::vector<Face> facets() const;

 private:
  SDegree degree_;
  std::size_t nvars_;
  bool has_empty_ = false;
  std::vector<Face> faces_;
};

DeltaComplex build_delta(const Semigroup& s, const SDegree& m);

}  // namespace eliahou
