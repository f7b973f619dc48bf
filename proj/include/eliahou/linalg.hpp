#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "eliahou/field.hpp"

namespace eliahou {

// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVec() = default;
  explicit SparseVec(std::vector<Entry> entries);  // sorts, merges and drops zeros (no field reduction)
  static SparseVec unit(std::size_t i, const Scalar& one = 1) { return SparseVec({{i, one}}); }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  std::size_t top() const { return entries_.front().first; }
  Scalar at(std::size_t i) const;

  // this += factor * other
  void axpy(const Field& k, const Scalar& factor, const SparseVec& other);
  void scale(const Field& k, const Scalar& factor);

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<Entry> entries_;
};

// Column-major sparse matrix.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVec> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}
  static SparseMatrix identity(std::size_t n);

  SparseVec apply(const Field& k, const SparseVec& x) const;
  SparseMatrix multiply(const Field& k, const SparseMatrix& rhs) const;
  Scalar at(std::size_t r, std::size_t c) const { return columns[c].at(r); }
};

// Result of eliminating A: invertible P, Q with P^{-1} A Q = [I_rank 0; 0 0].
// Columns are scanned left to right; each pivot is the topmost surviving nonzero entry.
struct GaussReduction {
  SparseMatrix p;
  SparseMatrix q;
  std::size_t rank = 0;
};

GaussReduction gauss_reduce(const Field& k, const SparseMatrix& a);

// Exact determinant of a small dense matrix (used to certify invertibility).
Scalar determinant(const Field& k, const SparseMatrix& a);

// Incremental span of sparse vectors with coordinates of every member in terms of
// the inserted generators. Insertion order fixes the reduction.
class SpanSolver {
 public:
  explicit SpanSolver(const Field& k) : field_(k) {}

  // Returns false (and leaves the span unchanged) if v is already in the span.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const;
  // Coordinates of v over the inserted generators, or nullopt when v is outside the span.
  std::optional<SparseVec> solve(const SparseVec& v) const;
  std::size_t size() const { return generators_; }

 private:
  struct Pivot {
    SparseVec reduced;
    SparseVec combination;  // reduced = sum combination[g] * generator_g
  };
  // Reduces v to a vector whose top is not a pivot row; accumulates the coordinates used.
  SparseVec reduce(SparseVec v, SparseVec* coords) const;

  Field field_;
  std::size_t generators_ = 0;
  std::vector<Pivot> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> pivot_of_row_;  // sorted (row, pivot index)
};

}  // namespace eliahou
