#include "doctest.h"
#include "gal/error.hpp"
#include "gal/matrix.hpp"
#include "gal/subspace.hpp"

using namespace gal;

TEST_CASE("field selection pins the smallest admissible prime") {
  RootField f = RootField::make({2});
  CHECK(f.n() == 4);
  CHECK(f.p() == 13);
  CHECK(f.zeta_n() == 5);
  CHECK(f.mul(f.zeta_n(), f.zeta_n()) == f.p() - 1);
  RootField g = RootField::make({3});
  CHECK(g.n() == 6);
  CHECK(g.p() == 13);
  RootField h = RootField::make({2, 3});
  CHECK(h.n() == 12);
  CHECK(h.p() == 37);
}

TEST_CASE("explicit primes are validated") {
  RootField f = RootField::make({2}, 29);
  CHECK(f.p() == 29);
  CHECK(f.pow(f.zeta_n(), 4) == 1);
  CHECK(f.pow(f.zeta_n(), 2) == 28);
  CHECK_THROWS_AS(RootField::make({2}, 7), GalError);   // 7 != 1 (mod 4)
  CHECK_THROWS_AS(RootField::make({2}, 15), GalError);  // not prime
}

TEST_CASE("field arithmetic identities") {
  RootField f = RootField::make({4, 3});
  for (std::int64_t a = 1; a < 20; ++a) {
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.add(a, f.neg(a)) == 0);
    CHECK(f.pow(a, f.p() - 1) == 1);
  }
  CHECK(f.reduce(-1) == f.p() - 1);
  CHECK(f.zeta(2) == f.p() - 1);
  CHECK(f.root(RootOfUnity::minus_one()) == f.p() - 1);
  CHECK(f.root(RootOfUnity::one()) == 1);
  std::int64_t z3 = f.zeta(3);
  CHECK(f.add(f.add(1, z3), f.mul(z3, z3)) == 0);
}

TEST_CASE("square roots") {
  RootField f = RootField::make({2});
  for (std::int64_t a = 1; a < f.p(); ++a) {
    auto r = f.sqrt(a);
    std::int64_t residue = f.pow(a, (f.p() - 1) / 2);
    if (residue == 1) {
      REQUIRE(r.has_value());
      CHECK(f.mul(*r, *r) == a);
    } else {
      CHECK(!r.has_value());
    }
  }
  auto i = f.sqrt(f.p() - 1);
  REQUIRE(i.has_value());  // -1 is a square since 4 | p-1
}

TEST_CASE("matrix product, kron, trace") {
  RootField f = RootField::make({2});
  MatrixF a(2, 2, {1, 2, 3, 4});
  MatrixF b(2, 2, {0, 1, 1, 0});
  CHECK(mat_mul(f, a, b) == MatrixF(2, 2, {2, 1, 4, 3}));
  CHECK(mat_mul(f, b, a) == MatrixF(2, 2, {3, 4, 1, 2}));
  CHECK(mat_transpose(a) == MatrixF(2, 2, {1, 3, 2, 4}));
  CHECK(mat_trace(f, a) == 5);
  MatrixF k = mat_kron(f, b, MatrixF::identity(2));
  CHECK(k.rows == 4);
  CHECK(k.at(0, 2) == 1);
  CHECK(k.at(1, 3) == 1);
  CHECK(k.at(0, 1) == 0);
  CHECK(mat_bracket(f, a, b) == mat_sub(f, mat_mul(f, a, b), mat_mul(f, b, a)));
}

TEST_CASE("inverse and singular detection") {
  RootField f = RootField::make({2});
  MatrixF a(2, 2, {1, 2, 3, 4});
  auto inv = mat_inverse(f, a);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(f, a, *inv) == MatrixF::identity(2));
  CHECK(!mat_inverse(f, MatrixF(2, 2, {1, 2, 2, 4})).has_value());
}

TEST_CASE("proportionality detection") {
  RootField f = RootField::make({2});
  MatrixF a(2, 2, {1, 0, 0, 3});
  CHECK(mat_proportional(f, a, mat_scale(f, 7, a)) == 7);
  CHECK(!mat_proportional(f, a, MatrixF(2, 2, {1, 0, 1, 3})).has_value());
  CHECK(!mat_proportional(f, MatrixF(2, 2), a).has_value());
}

TEST_CASE("linear solving with nullspace") {
  RootField f = RootField::make({2});
  MatrixF a(2, 3, {1, 1, 0, 0, 1, 1});
  LinearSolution s = solve_linear(f, a, {3, 5});
  REQUIRE(s.feasible);
  // a * particular == b
  for (int i = 0; i < 2; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < 3; ++j) acc = f.add(acc, f.mul(a.at(i, j), s.particular[j]));
    CHECK(acc == (i == 0 ? 3 : 5));
  }
  CHECK(s.nullspace.rows == 1);
  for (int i = 0; i < 2; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < 3; ++j) acc = f.add(acc, f.mul(a.at(i, j), s.nullspace.at(0, j)));
    CHECK(acc == 0);
  }
  LinearSolution bad = solve_linear(f, MatrixF(2, 1, {1, 1}), {1, 2});
  CHECK(!bad.feasible);
}

TEST_CASE("subspace canonical form and membership") {
  RootField f = RootField::make({2});
  MatrixF rows(3, 3, {1, 1, 0, 0, 1, 1, 1, 2, 1});
  Subspace u = Subspace::from_rows(f, rows);
  CHECK(u.dim() == 2);
  CHECK(u.contains(f, {1, 1, 0}));
  CHECK(u.contains(f, {1, 2, 1}));
  CHECK(!u.contains(f, {1, 0, 1}));
  Subspace v = Subspace::from_rows(f, MatrixF(2, 3, {1, 1, 0, 0, 2, 2}));
  CHECK(u == v);
}

TEST_CASE("sum and intersection dimensions") {
  RootField f = RootField::make({2});
  Subspace u = Subspace::from_rows(f, MatrixF(2, 4, {1, 0, 0, 0, 0, 1, 0, 0}));
  Subspace w = Subspace::from_rows(f, MatrixF(2, 4, {0, 1, 0, 0, 0, 0, 1, 0}));
  Subspace s = u.sum(f, w);
  Subspace i = u.intersect(f, w);
  CHECK(s.dim() == 3);
  CHECK(i.dim() == 1);
  CHECK(i.contains(f, {0, 1, 0, 0}));
  CHECK(u.dim() + w.dim() == s.dim() + i.dim());
  CHECK(s.contains(f, u));
  CHECK(s.contains(f, w));
  CHECK(u.contains(f, i));
}

TEST_CASE("dimension formula holds on random spans") {
  RootField f = RootField::make({2});
  std::uint64_t state = 12345;
  auto rnd = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::int64_t>((state >> 33) % f.p());
  };
  for (int trial = 0; trial < 40; ++trial) {
    MatrixF a(2, 5), b(3, 5);
    for (auto& x : a.a) x = rnd();
    for (auto& x : b.a) x = rnd();
    Subspace u = Subspace::from_rows(f, a);
    Subspace w = Subspace::from_rows(f, b);
    CHECK(u.dim() + w.dim() == u.sum(f, w).dim() + u.intersect(f, w).dim());
  }
}
