#include <map>
#include <vector>

#include "eliahou/resolution.hpp"

namespace eliahou {

namespace {

// Fraction-free (Bareiss) rank of an integer matrix.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t cc = c + 1; cc < cols; ++cc) {
        a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t oracle_v0(const Semigroup& s, const SDegree& m) {
  const TermOrder order;
  const std::vector<Monomial> fiber = s.fiber(m, order);
  if (fiber.size() < 2) return 0;
  std::map<Monomial, std::size_t> position;
  for (std::size_t i = 0; i < fiber.size(); ++i) position[fiber[i]] = i;

  // (m I_S)_m is spanned by x_i * (consecutive differences in the fiber of m - n_i).
  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t i = 0; i < s.nvars(); ++i) {
    const SDegree below = m - s.generator(i);
    const std::vector<Monomial> lower = s.fiber(below, order);
    const Monomial xi = Monomial::variable(s.nvars(), i);
    for (std::size_t t = 1; t < lower.size(); ++t) {
      std::vector<mpz_class> row(fiber.size(), 0);
      row[position.at(lower[t - 1] * xi)] += 1;
      row[position.at(lower[t] * xi)] -= 1;
      rows.push_back(std::move(row));
    }
  }
  return fiber.size() - 1 - bareiss_rank(std::move(rows));
}

}  // namespace eliahou
