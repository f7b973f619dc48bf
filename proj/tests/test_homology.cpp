#include <doctest.h>

#include <random>

#include "eliahou/error.hpp"
#include "eliahou/resolution.hpp"
#include "eliahou/serialize.hpp"
#include "support.hpp"

using namespace eliahou;
using namespace testing_support;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> v(-2, 2);
  std::uniform_int_distribution<int> keep(0, 2);
  SparseMatrix a(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<SparseVec::Entry> e;
    for (std::size_t r = 0; r < rows; ++r)
      if (keep(rng) == 0) e.emplace_back(r, Scalar(v(rng)));
    a.columns[c] = SparseVec(std::move(e));
  }
  return a;
}

void check_block_shape(const Field& k, const SparseMatrix& a) {
  GaussReduction g = gauss_reduce(k, a);
  REQUIRE(g.p.rows == a.rows);
  REQUIRE(g.q.rows == a.cols);
  // A Q = P [I 0; 0 0]
  SparseMatrix aq = a.multiply(k, g.q);
  for (std::size_t c = 0; c < a.cols; ++c) {
    SparseVec expected = c < g.rank ? g.p.columns[c] : SparseVec();
    SparseVec got = aq.columns[c];
    SparseVec reduced;
    for (const auto& [i, x] : got.entries()) reduced.axpy(k, 1, SparseVec::unit(i, k.reduce(x)));
    CHECK(reduced == expected);
  }
  if (a.rows > 0) CHECK_FALSE(k.is_zero(determinant(k, g.p)));
  if (a.cols > 0) CHECK_FALSE(k.is_zero(determinant(k, g.q)));
  std::vector<std::vector<mpq_class>> dense(a.rows, std::vector<mpq_class>(a.cols, 0));
  for (std::size_t c = 0; c < a.cols; ++c)
    for (const auto& [r, x] : a.columns[c].entries()) dense[r][c] = x;
  CHECK(g.rank == dense_rank(dense, k.characteristic()));
}

BoundaryMatrix boundary_of_degree(const Semigroup& s, const SDegree& m, int j) {
  return boundary_matrix(FaceLattice::of(build_nabla(s, m, TermOrder()), j), j);
}

}  // namespace

TEST_CASE("gauss_reduce examples") {
  Field q = Field::rational();
  SparseMatrix ones(1, 5);
  for (auto& c : ones.columns) c = SparseVec::unit(0);
  GaussReduction g = gauss_reduce(q, ones);
  CHECK(g.rank == 1);
  for (std::size_t c = 1; c < 5; ++c) CHECK(ones.apply(q, g.q.columns[c]).empty());

  SparseMatrix zero(3, 4);
  GaussReduction z = gauss_reduce(q, zero);
  CHECK(z.rank == 0);
  CHECK(z.p.columns == SparseMatrix::identity(3).columns);
  CHECK(z.q.columns == SparseMatrix::identity(4).columns);

  BoundaryMatrix a1 = boundary_of_degree(example1(), deg({24, 4}), 1);
  CHECK(a1.matrix.rows == 3);
  CHECK(a1.matrix.cols == 2);
  CHECK(gauss_reduce(q, a1.matrix).rank == 2);
}

TEST_CASE("gauss_reduce block shape and invertibility on random matrices") {
  std::mt19937 rng(11);
  for (const Field& k : {Field::rational(), Field::prime(2), Field::prime(32003)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(0, 7);
      check_block_shape(k, random_matrix(rng, dim(rng), dim(rng)));
    }
  }
}

TEST_CASE("SpanSolver") {
  Field q = Field::rational();
  SpanSolver span(q);
  CHECK(span.insert(SparseVec({{0, 1}, {1, 1}})));
  CHECK(span.insert(SparseVec({{1, 1}, {2, 1}})));
  CHECK_FALSE(span.contains(SparseVec({{0, 1}})));
  SparseVec v({{0, 1}, {1, 2}, {2, 1}});
  REQUIRE(span.contains(v));
  CHECK(*span.solve(v) == SparseVec({{0, 1}, {1, 1}}));
  CHECK_FALSE(span.insert(v));
  CHECK(span.solve(SparseVec()) == SparseVec());
}

TEST_CASE("boundary_matrix conventions") {
  Semigroup s = example1();
  NablaComplex k = build_nabla(s, deg({52, 8}), TermOrder());
  FaceLattice lat = FaceLattice::of(k, 4);
  BoundaryMatrix a0 = boundary_matrix(lat, 0);
  CHECK(a0.matrix.rows == 1);
  CHECK(a0.matrix.cols == 8);
  for (const auto& c : a0.matrix.columns) CHECK(c == SparseVec::unit(0));

  BoundaryMatrix a1 = boundary_matrix(lat, 1);
  for (std::size_t c = 0; c < a1.matrix.cols; ++c) {
    const Face& e = lat.faces(1)[c];
    CHECK(a1.matrix.columns[c] == SparseVec({{e[0], -1}, {e[1], 1}}));
  }
  Field q = Field::rational();
  for (int j = 1; j <= 4; ++j) {
    BoundaryMatrix lo = boundary_matrix(lat, j - 1);
    BoundaryMatrix hi = boundary_matrix(lat, j);
    for (const auto& c : hi.matrix.columns) CHECK(c.nnz() == static_cast<std::size_t>(j + 1));
    SparseMatrix prod = lo.matrix.multiply(q, hi.matrix);
    for (const auto& c : prod.columns) CHECK(c.empty());
  }
}

TEST_CASE("fixed_cycle_basis examples") {
  Semigroup s = example1();
  Field q = Field::rational();
  NablaComplex k21 = build_nabla(s, deg({21, 3}), TermOrder());
  ChainBasis b = fixed_cycle_basis(q, FaceLattice::of(k21, 1), 0);
  CHECK(b.boundary.empty());
  REQUIRE(b.homology.size() == 1);
  CHECK(k21.vertices()[0] == mono({0, 0, 3, 0}));
  CHECK(b.homology[0] == SparseVec({{0, -1}, {1, 1}}));

  NablaComplex k52 = build_nabla(s, deg({52, 8}), TermOrder());
  CHECK(fixed_cycle_basis(q, FaceLattice::of(k52, 1), 0).homology.empty());

  // Zero-cycles always take the shape {v_k} - {v_0} with v_0 the largest vertex.
  NablaComplex k60 = build_nabla(s, deg({60, 10}), TermOrder());
  ChainBasis b60 = fixed_cycle_basis(q, FaceLattice::of(k60, 1), 0);
  CHECK(b60.cycle_rank() == k60.num_vertices() - 1);
}

TEST_CASE("betti_reduced examples and comparison complex") {
  Semigroup s = example1();
  Field q = Field::rational();
  TermOrder order;
  CHECK(betti_reduced(q, build_nabla(s, deg({21, 3}), order), 0) == 1);
  CHECK(betti_reduced(q, build_nabla(s, deg({52, 8}), order), 0) == 0);
  NablaComplex k12 = build_nabla(s, deg({12, 2}), order);
  DeltaComplex d12 = build_delta(s, deg({12, 2}));
  for (int j = 0; j <= 3; ++j) CHECK(betti_reduced(q, k12, j) == betti_reduced(q, d12, j));
  CHECK(betti_reduced(q, k12, 0) == 1);
  // m outside S: the empty complex, nonzero only in dimension -1.
  NablaComplex none = build_nabla(s, deg({1, 0}), order);
  CHECK(betti_reduced(q, FaceLattice::of(none, 1), -1) == 0);
  CHECK(betti_reduced(q, FaceLattice::of(none, 1), 0) == 0);
}

TEST_CASE("express_in_basis") {
  Semigroup s = example1();
  Field q = Field::rational();
  NablaComplex k21 = build_nabla(s, deg({21, 3}), TermOrder());
  FaceLattice lat21 = FaceLattice::of(k21, 1);
  CycleBasis c21(q, fixed_cycle_basis(q, lat21, 0));
  auto coords = express_in_basis(q, boundary_matrix(lat21, 0), c21, c21.basis().homology[0]);
  CHECK(coords.lambda == SparseVec::unit(0));
  CHECK(coords.mu.empty());
  CHECK_THROWS_AS(express_in_basis(q, boundary_matrix(lat21, 0), c21, SparseVec::unit(0)), Error);

  NablaComplex k36 = build_nabla(s, deg({36, 6}), TermOrder());
  FaceLattice lat36 = FaceLattice::of(k36, 2);
  CycleBasis c36(q, fixed_cycle_basis(q, lat36, 0));
  const auto a = *k36.vertex_index(mono({0, 3, 3, 0}));
  const auto b = *k36.vertex_index(mono({3, 0, 0, 3}));
  SparseVec z({{a, 1}, {b, -1}});
  auto zc = express_in_basis(q, boundary_matrix(lat36, 0), c36, z);
  CHECK(zc.lambda.empty());
  SparseVec rebuilt;
  for (const auto& [i, mu] : zc.mu.entries()) rebuilt.axpy(q, mu, c36.basis().boundary[i]);
  CHECK(rebuilt == z);
  // The 1-chain with boundary z leaves x2^3*x3^3 through x1*x2^2*x3^2*x4. With our fixed
  // basis it is the path x2^3x3^3 - x1x2^2x3^2x4 - x1^2x2x3x4^2 - x1^3x4^3.
  CHECK(zc.mu == SparseVec({{0, 1}, {1, 1}, {2, 1}}));
  SparseVec path = c36.boundary_chain(zc.mu);
  CHECK(boundary_matrix(lat36, 1).matrix.apply(q, path) == z);
  const auto mid = *k36.vertex_index(mono({1, 2, 2, 1}));
  const auto next = *k36.vertex_index(mono({2, 1, 1, 2}));
  std::set<Face> used;
  for (const auto& [e, c] : path.entries()) used.insert(lat36.faces(1)[e]);
  CHECK(used == std::set<Face>{Face{std::min(a, mid), std::max(a, mid)}, Face{std::min(mid, next), std::max(mid, next)},
                               Face{std::min(next, b), std::max(next, b)}});

  // Boundaries have zero homology class.
  for (const auto& h : c36.basis().boundary) CHECK(c36.express(h).lambda.empty());
}

TEST_CASE("homology against an independent dense computation, Euler characteristic, cones") {
  for (auto which : {0, 1}) {
    Semigroup s = which == 0 ? example1() : numerical_2_3();
    Field q = Field::rational();
    for (const auto& m : degrees_up_to(s, which == 0 ? 7 : 12)) {
      NablaComplex k = build_nabla(s, m, TermOrder());
      if (k.num_vertices() > 14) continue;
      const int top = static_cast<int>(k.num_vertices());
      FaceLattice lat = FaceLattice::of(k, top);
      auto dense = betti_from_faces(nabla_faces_brute(k), !k.empty(), top);
      long euler_faces = 0, euler_betti = -static_cast<long>(betti_reduced(q, lat, -1));
      euler_faces -= static_cast<long>(lat.count(-1));
      for (int j = 0; j <= top; ++j) {
        const std::size_t bj = betti_reduced(q, lat, j);
        CHECK(bj == dense[j]);
        euler_faces += (j % 2 == 0 ? 1 : -1) * static_cast<long>(lat.count(j));
        euler_betti += (j % 2 == 0 ? 1 : -1) * static_cast<long>(bj);
      }
      CHECK(euler_faces == euler_betti);
      // A cover set containing every vertex makes the complex a cone.
      bool cone = false;
      for (const auto& d : k.cover()) cone = cone || (d.size() == k.num_vertices() && !d.empty());
      if (cone) {
        for (int j = 0; j <= top; ++j) CHECK(betti_reduced(q, lat, j) == 0);
      }
    }
  }
}

TEST_CASE("fixed bases are deterministic") {
  Semigroup s = example1();
  Field q = Field::rational();
  for (const auto& m : {deg({52, 8}), deg({60, 10}), deg({45, 7})}) {
    for (int j = 0; j <= 2; ++j) {
      NablaComplex k1 = build_nabla(s, m, TermOrder());
      NablaComplex k2 = build_nabla(s, m, TermOrder());
      ChainBasis b1 = fixed_cycle_basis(q, FaceLattice::of(k1, j + 1), j);
      ChainBasis b2 = fixed_cycle_basis(q, FaceLattice::of(k2, j + 1), j);
      CHECK(chain_basis_to_json(b1).dump() == chain_basis_to_json(b2).dump());
    }
  }
}

TEST_CASE("Betti ranks over Q and prime fields (diagnostic)") {
  std::size_t compared = 0, differing = 0;
  for (auto which : {0, 1}) {
    Semigroup s = which == 0 ? example1() : numerical_2_3();
    for (const auto& m : degrees_up_to(s, which == 0 ? 6 : 12)) {
      NablaComplex k = build_nabla(s, m, TermOrder());
      FaceLattice lat = FaceLattice::of(k, static_cast<int>(s.nvars()));
      for (int j = 0; j < static_cast<int>(s.nvars()); ++j) {
        const auto rq = betti_reduced(Field::rational(), lat, j);
        for (long p : {2L, 32003L}) {
          ++compared;
          if (betti_reduced(Field::prime(p), lat, j) != rq) {
            ++differing;
            MESSAGE("rank differs over F_" << p << " at " << degree_to_string(m) << ", j = " << j);
          }
        }
      }
    }
  }
  MESSAGE(compared << " ranks compared over F_2 and F_32003, " << differing << " differ from Q");
  CHECK(compared > 0);
}
