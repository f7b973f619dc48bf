#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "eliahou/complexes.hpp"
#include "eliahou/linalg.hpp"

namespace eliahou {

// Faces of a finite complex grouped by dimension, in a fixed order, plus the empty face.
class FaceLattice {
 public:
  FaceLattice(bool has_empty, std::vector<std::vector<Face>> by_dim, int complete_through);

  // Faces of dimension <= max_dim, each dimension in faces_of_dim order.
  static FaceLattice of(const NablaComplex& k, int max_dim);
  static FaceLattice of(const DeltaComplex& k);

  bool has_empty_face() const { return has_empty_; }
  int complete_through() const { return complete_through_; }
  // Number of j-faces; j = -1 counts the empty face.
  std::size_t count(int j) const;
  const std::vector<Face>& faces(int j) const;
  std::optional<std::size_t> index_of(int j, const Face& f) const;

 private:
  void require(int j) const;

  bool has_empty_;
  int complete_through_;
  std::vector<std::vector<Face>> by_dim_;
  std::vector<std::map<Face, std::size_t>> index_;
};

// Coefficients over the j-faces of some complex, in the lattice order.
struct ChainVector {
  int dim = 0;
  SparseVec coeffs;
};

// Matrix of the reduced boundary map from j-chains to (j-1)-chains.
struct BoundaryMatrix {
  int dim = 0;
  SparseMatrix matrix;
};

BoundaryMatrix boundary_matrix(const FaceLattice& lattice, int j);

// Fixed basis of the j-cycles: boundaries h_1..h_t' (with the (j+1)-chain each is the
// boundary of) followed by homology representatives b_1..b_t''.
struct ChainBasis {
  SDegree degree;
  int dim = 0;
  std::size_t num_faces = 0;       // d_j
  std::size_t num_next_faces = 0;  // d_{j+1}
  std::vector<SparseVec> boundary;
  std::vector<SparseVec> boundary_preimage;
  std::vector<SparseVec> homology;

  std::size_t cycle_rank() const { return boundary.size() + homology.size(); }
};

// Unique coordinates of a cycle: lambda on the homology representatives, mu on the boundaries.
struct BasisCoordinates {
  SparseVec lambda;
  SparseVec mu;
};

// ChainBasis together with the reduction needed to express cycles in it.
class CycleBasis {
 public:
  CycleBasis(const Field& k, ChainBasis basis);

  const ChainBasis& basis() const { return basis_; }
  // Throws NotACycle when z is not in the span of the basis.
  BasisCoordinates express(const SparseVec& z) const;
  // sum_j mu_j * preimage_j: a (j+1)-chain whose boundary is the mu-part of the cycle.
  SparseVec boundary_chain(const SparseVec& mu) const;

 private:
  Field field_;
  ChainBasis basis_;
  SpanSolver solver_;
};

ChainBasis fixed_cycle_basis(const Field& k, const FaceLattice& lattice, int j);

// dim Z_j - rank(boundary_{j+1}); j = -1 allowed.
std::size_t betti_reduced(const Field& k, const FaceLattice& lattice, int j);
std::size_t betti_reduced(const Field& k, const NablaComplex& complex, int j);
std::size_t betti_reduced(const Field& k, const DeltaComplex& complex, int j);

// Checks boundary(z) = 0, then expresses z in the basis.
BasisCoordinates express_in_basis(const Field& k, const BoundaryMatrix& aj, const CycleBasis& basis,
                                  const SparseVec& z);

}  // namespace eliahou
