#include "eliahou/homology.hpp"

#include <limits>
#include <stdexcept>

#include "eliahou/error.hpp"

namespace eliahou {

FaceLattice::FaceLattice(bool has_empty, std::vector<std::vector<Face>> by_dim, int complete_through)
    : has_empty_(has_empty), complete_through_(complete_through), by_dim_(std::move(by_dim)) {
  index_.resize(by_dim_.size());
  for (std::size_t j = 0; j < by_dim_.size(); ++j) {
    for (std::size_t i = 0; i < by_dim_[j].size(); ++i) index_[j].emplace(by_dim_[j][i], i);
  }
}

FaceLattice FaceLattice::of(const NablaComplex& k, int max_dim) {
  std::vector<std::vector<Face>> by_dim;
  for (int j = 0; j <= max_dim; ++j) {
    by_dim.push_back(k.faces_of_dim(j));
    if (by_dim.back().empty()) {
      by_dim.pop_back();
      return FaceLattice(!k.empty(), std::move(by_dim), std::numeric_limits<int>::max());
    }
  }
  return FaceLattice(!k.empty(), std::move(by_dim), max_dim);
}

FaceLattice FaceLattice::of(const DeltaComplex& k) {
  std::vector<std::vector<Face>> by_dim;
  for (const auto& f : k.faces()) {
    std::size_t j = f.size() - 1;
    if (by_dim.size() <= j) by_dim.resize(j + 1);
    by_dim[j].push_back(f);
  }
  return FaceLattice(k.has_empty_face(), std::move(by_dim), std::numeric_limits<int>::max());
}

void FaceLattice::require(int j) const {
  if (j > complete_through_) {
    throw std::logic_error("face lattice only computed through dimension " + std::to_string(complete_through_));
  }
}

std::size_t FaceLattice::count(int j) const {
  if (j < -1) return 0;
  if (j == -1) return has_empty_ ? 1 : 0;
  require(j);
  return static_cast<std::size_t>(j) < by_dim_.size() ? by_dim_[j].size() : 0;
}

const std::vector<Face>& FaceLattice::faces(int j) const {
  static const std::vector<Face> none;
  if (j < 0) return none;
  require(j);
  return static_cast<std::size_t>(j) < by_dim_.size() ? by_dim_[j] : none;
}

std::optional<std::size_t> FaceLattice::index_of(int j, const Face& f) const {
  if (j < 0 || static_cast<std::size_t>(j) >= index_.size()) return std::nullopt;
  auto it = index_[j].find(f);
  if (it == index_[j].end()) return std::nullopt;
  return it->second;
}

BoundaryMatrix boundary_matrix(const FaceLattice& lattice, int j) {
  BoundaryMatrix out;
  out.dim = j;
  out.matrix = SparseMatrix(lattice.count(j - 1), lattice.count(j));
  if (j < 0) return out;
  const auto& faces = lattice.faces(j);
  for (std::size_t c = 0; c < faces.size(); ++c) {
    if (j == 0) {
      out.matrix.columns[c] = SparseVec::unit(0);
      continue;
    }
    std::vector<SparseVec::Entry> col;
    const Face& f = faces[c];
    for (std::size_t t = 0; t < f.size(); ++t) {
      Face sub;
      sub.reserve(f.size() - 1);
      for (std::size_t u = 0; u < f.size(); ++u)
        if (u != t) sub.push_back(f[u]);
      auto idx = lattice.index_of(j - 1, sub);
      if (!idx) throw std::logic_error("face lattice is not closed under taking faces");
      col.emplace_back(*idx, Scalar(t % 2 == 0 ? 1 : -1));
    }
    out.matrix.columns[c] = SparseVec(std::move(col));
  }
  return out;
}

ChainBasis fixed_cycle_basis(const Field& k, const FaceLattice& lattice, int j) {
  ChainBasis out;
  out.dim = j;
  out.num_faces = lattice.count(j);
  out.num_next_faces = lattice.count(j + 1);

  const GaussReduction here = gauss_reduce(k, boundary_matrix(lattice, j).matrix);
  const GaussReduction next = gauss_reduce(k, boundary_matrix(lattice, j + 1).matrix);

  SpanSolver span(k);
  for (std::size_t i = 0; i < next.rank; ++i) {
    out.boundary.push_back(next.p.columns[i]);
    out.boundary_preimage.push_back(next.q.columns[i]);
    span.insert(next.p.columns[i]);
  }
  // Extend greedily by the kernel columns of Q_j, in order.
  for (std::size_t c = here.rank; c < out.num_faces; ++c) {
    const SparseVec& z = here.q.columns[c];
    if (span.insert(z)) out.homology.push_back(z);
  }
  return out;
}

CycleBasis::CycleBasis(const Field& k, ChainBasis basis) : field_(k), basis_(std::move(basis)), solver_(k) {
  for (const auto& h : basis_.boundary) solver_.insert(h);
  for (const auto& b : basis_.homology) solver_.insert(b);
  if (solver_.size() != basis_.cycle_rank()) throw std::logic_error("dependent cycle basis");
}

BasisCoordinates CycleBasis::express(const SparseVec& z) const {
  auto coords = solver_.solve(z);
  if (!coords) throw Error(ErrorKind::NotACycle, "chain is not in the span of the cycle basis");
  const std::size_t tb = basis_.boundary.size();
  std::vector<SparseVec::Entry> lambda, mu;
  for (const auto& [i, v] : coords->entries()) {
    if (i < tb) mu.emplace_back(i, v);
    else lambda.emplace_back(i - tb, v);
  }
  return {SparseVec(std::move(lambda)), SparseVec(std::move(mu))};
}

SparseVec CycleBasis::boundary_chain(const SparseVec& mu) const {
  SparseVec out;
  for (const auto& [i, v] : mu.entries()) out.axpy(field_, v, basis_.boundary_preimage.at(i));
  return out;
}

std::size_t betti_reduced(const Field& k, const FaceLattice& lattice, int j) {
  const std::size_t cycles = lattice.count(j) - gauss_reduce(k, boundary_matrix(lattice, j).matrix).rank;
  return cycles - gauss_reduce(k, boundary_matrix(lattice, j + 1).matrix).rank;
}

std::size_t betti_reduced(const Field& k, const NablaComplex& complex, int j) {
  return betti_reduced(k, FaceLattice::of(complex, j + 1), j);
}

std::size_t betti_reduced(const Field& k, const DeltaComplex& complex, int j) {
  return betti_reduced(k, FaceLattice::of(complex), j);
}

BasisCoordinates express_in_basis(const Field& k, const BoundaryMatrix& aj, const CycleBasis& basis,
                                  const SparseVec& z) {
  if (!aj.matrix.apply(k, z).empty()) throw Error(ErrorKind::NotACycle, "boundary of the chain is nonzero");
  return basis.express(z);
}

}  // namespace eliahou
