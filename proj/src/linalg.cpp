#include "eliahou/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace eliahou {

SparseVec::SparseVec(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
    } else {
      entries_.push_back(std::move(e));
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return sgn(e.second) == 0; });
}

Scalar SparseVec::at(std::size_t i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t idx) { return e.first < idx; });
  if (it == entries_.end() || it->first != i) return 0;
  return it->second;
}

void SparseVec::axpy(const Field& k, const Scalar& factor, const SparseVec& other) {
  if (k.is_zero(factor) || other.empty()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, k.mul(factor, b->second));
      ++b;
    } else {
      Scalar v = k.add(a->second, k.mul(factor, b->second));
      if (!k.is_zero(v)) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

void SparseVec::scale(const Field& k, const Scalar& factor) {
  if (k.is_zero(factor)) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second = k.mul(e.second, factor);
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns[i] = SparseVec::unit(i);
  return m;
}

SparseVec SparseMatrix::apply(const Field& k, const SparseVec& x) const {
  SparseVec out;
  for (const auto& [c, v] : x.entries()) out.axpy(k, v, columns.at(c));
  return out;
}

SparseMatrix SparseMatrix::multiply(const Field& k, const SparseMatrix& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("matrix shape mismatch");
  SparseMatrix out(rows, rhs.cols);
  for (std::size_t c = 0; c < rhs.cols; ++c) out.columns[c] = apply(k, rhs.columns[c]);
  return out;
}

GaussReduction gauss_reduce(const Field& k, const SparseMatrix& a) {
  const std::size_t n = a.cols;
  std::vector<SparseVec> reduced;
  reduced.reserve(n);
  for (const auto& column : a.columns) {
    std::vector<SparseVec::Entry> e;
    for (const auto& [r, v] : column.entries()) e.emplace_back(r, k.reduce(v));
    reduced.emplace_back(std::move(e));
  }
  std::vector<SparseVec> transform(n);
  for (std::size_t c = 0; c < n; ++c) transform[c] = SparseVec::unit(c);

  std::vector<std::ptrdiff_t> pivot_col_of_row(a.rows, -1);
  std::vector<std::size_t> pivot_cols, kernel_cols;
  for (std::size_t c = 0; c < n; ++c) {
    while (!reduced[c].empty() && pivot_col_of_row[reduced[c].top()] >= 0) {
      const std::size_t row = reduced[c].top();
      const auto pc = static_cast<std::size_t>(pivot_col_of_row[row]);
      Scalar f = k.neg(reduced[c].entries().front().second);  // pivot entries are normalized to 1
      reduced[c].axpy(k, f, reduced[pc]);
      transform[c].axpy(k, f, transform[pc]);
    }
    if (reduced[c].empty()) {
      kernel_cols.push_back(c);
      continue;
    }
    Scalar inv = k.inv(reduced[c].entries().front().second);
    reduced[c].scale(k, inv);
    transform[c].scale(k, inv);
    pivot_col_of_row[reduced[c].top()] = static_cast<std::ptrdiff_t>(c);
    pivot_cols.push_back(c);
  }

  GaussReduction out;
  out.rank = pivot_cols.size();
  out.q = SparseMatrix(n, n);
  out.p = SparseMatrix(a.rows, a.rows);
  std::size_t col = 0;
  for (std::size_t c : pivot_cols) {
    out.q.columns[col] = transform[c];
    out.p.columns[col] = reduced[c];
    ++col;
  }
  for (std::size_t c : kernel_cols) out.q.columns[col++] = transform[c];
  std::size_t pcol = out.rank;
  for (std::size_t row = 0; row < a.rows; ++row) {
    if (pivot_col_of_row[row] < 0) out.p.columns[pcol++] = SparseVec::unit(row);
  }
  return out;
}

Scalar determinant(const Field& k, const SparseMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows;
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, 0));
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [r, v] : a.columns[c].entries()) m[r][c] = k.reduce(v);
  Scalar det = k.from_int(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && k.is_zero(m[piv][c])) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = k.neg(det);
    }
    det = k.mul(det, m[c][c]);
    Scalar inv = k.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (k.is_zero(m[r][c])) continue;
      Scalar f = k.mul(m[r][c], inv);
      for (std::size_t t = c; t < n; ++t) m[r][t] = k.sub(m[r][t], k.mul(f, m[c][t]));
    }
  }
  return det;
}

SparseVec SpanSolver::reduce(SparseVec v, SparseVec* coords) const {
  while (!v.empty()) {
    auto it = std::lower_bound(pivot_of_row_.begin(), pivot_of_row_.end(), std::make_pair(v.top(), std::size_t{0}));
    if (it == pivot_of_row_.end() || it->first != v.top()) break;
    const Pivot& p = pivots_[it->second];
    Scalar f = v.entries().front().second;
    v.axpy(field_, field_.neg(f), p.reduced);
    if (coords) coords->axpy(field_, f, p.combination);
  }
  return v;
}

bool SpanSolver::insert(const SparseVec& v) {
  SparseVec combo;
  SparseVec rest = reduce(v, &combo);
  const std::size_t id = generators_++;
  if (rest.empty()) return false;
  // rest = v - combo . generators
  SparseVec combination = SparseVec::unit(id, field_.from_int(1));
  combination.axpy(field_, field_.from_int(-1), combo);
  Scalar inv = field_.inv(rest.entries().front().second);
  rest.scale(field_, inv);
  combination.scale(field_, inv);
  const std::size_t row = rest.top();
  pivots_.push_back({std::move(rest), std::move(combination)});
  auto pos = std::lower_bound(pivot_of_row_.begin(), pivot_of_row_.end(), std::make_pair(row, std::size_t{0}));
  pivot_of_row_.insert(pos, {row, pivots_.size() - 1});
  return true;
}

bool SpanSolver::contains(const SparseVec& v) const { return reduce(v, nullptr).empty(); }

std::optional<SparseVec> SpanSolver::solve(const SparseVec& v) const {
  SparseVec coords;
  if (!reduce(v, &coords).empty()) return std::nullopt;
  return coords;
}

}  // namespace eliahou
