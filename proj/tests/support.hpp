#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <set>
#include <vector>

#include "eliahou/complexes.hpp"
#include "eliahou/field.hpp"
#include "eliahou/monomial.hpp"
#include "eliahou/semigroup.hpp"

namespace testing_support {

using namespace eliahou;

inline GeneratorMatrix example1_matrix() { return GeneratorMatrix{2, {{4, 1}, {5, 1}, {7, 1}, {8, 1}}}; }
inline Semigroup example1() { return Semigroup(example1_matrix()); }
inline Semigroup numerical_2_3() { return Semigroup(GeneratorMatrix{1, {{2}, {3}}}); }

inline Monomial mono(std::initializer_list<Exponent> e) { return Monomial(std::vector<Exponent>(e)); }

inline SDegree deg(std::initializer_list<long> c) {
  SDegree m;
  for (long v : c) m.emplace_back(v);
  return m;
}

// Every exponent vector in the box [0, bound]^r of degree m.
inline std::set<Monomial> box_fiber(const Semigroup& s, const SDegree& m, Exponent bound) {
  std::set<Monomial> out;
  std::vector<Exponent> e(s.nvars(), 0);
  while (true) {
    Monomial x(e);
    if (s.degree_of(x) == m) out.insert(x);
    std::size_t i = 0;
    while (i < e.size() && e[i] == bound) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

// Coordinate-wise minimum, computed without the library's gcd.
inline bool has_common_variable(const std::vector<Monomial>& xs) {
  for (std::size_t v = 0; v < xs.front().nvars(); ++v) {
    bool all = true;
    for (const auto& x : xs) all = all && x[v] > 0;
    if (all) return true;
  }
  return false;
}

// Rank of a dense matrix over Q or Z/p by plain row reduction.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> a, const mpz_class& p = 0) {
  auto red = [&](mpq_class x) {
    if (p == 0) return x;
    mpz_class num = x.get_num() % p, den = x.get_den() % p, inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * inv) % p;
    if (r < 0) r += p;
    return mpq_class(r);
  };
  for (auto& row : a)
    for (auto& x : row) x = red(x);
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[rank][c];
      if (p != 0) {
        mpz_class inv;
        mpz_class piv_num = a[rank][c].get_num();
        mpz_invert(inv.get_mpz_t(), piv_num.get_mpz_t(), p.get_mpz_t());
        f = red(a[r][c] * mpq_class(inv));
      }
      for (std::size_t k = c; k < cols; ++k) a[r][k] = red(a[r][k] - f * a[rank][k]);
    }
    ++rank;
  }
  return rank;
}

// Reduced Betti numbers from an explicit list of nonempty faces (closed under subsets).
inline std::vector<std::size_t> betti_from_faces(const std::vector<std::vector<std::size_t>>& faces, bool has_empty,
                                                 int top, const mpz_class& p = 0) {
  std::vector<std::vector<std::vector<std::size_t>>> by_dim(top + 3);
  for (const auto& f : faces)
    if (static_cast<int>(f.size()) - 1 <= top + 1) by_dim[f.size() - 1].push_back(f);
  auto count = [&](int j) -> std::size_t {
    if (j == -1) return has_empty ? 1 : 0;
    return by_dim[j].size();
  };
  auto rank_of = [&](int j) -> std::size_t {  // rank of boundary from j to j-1
    if (j < 0 || count(j) == 0 || count(j - 1) == 0) return 0;
    std::vector<std::vector<mpq_class>> m(count(j - 1), std::vector<mpq_class>(count(j), 0));
    for (std::size_t c = 0; c < by_dim[j].size(); ++c) {
      const auto& f = by_dim[j][c];
      if (j == 0) {
        m[0][c] = 1;
        continue;
      }
      for (std::size_t t = 0; t < f.size(); ++t) {
        auto sub = f;
        sub.erase(sub.begin() + t);
        auto it = std::find(by_dim[j - 1].begin(), by_dim[j - 1].end(), sub);
        m[it - by_dim[j - 1].begin()][c] = t % 2 == 0 ? 1 : -1;
      }
    }
    return dense_rank(std::move(m), p);
  };
  std::vector<std::size_t> out;
  for (int j = 0; j <= top; ++j) out.push_back(count(j) - rank_of(j) - rank_of(j + 1));
  return out;
}

// All nonempty subsets of the vertex set that have a common variable.
inline std::vector<std::vector<std::size_t>> nabla_faces_brute(const NablaComplex& k) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = k.num_vertices();
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<std::size_t> f;
    std::vector<Monomial> xs;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) {
        f.push_back(i);
        xs.push_back(k.vertices()[i]);
      }
    if (has_common_variable(xs)) out.push_back(f);
  }
  return out;
}

}  // namespace testing_support
