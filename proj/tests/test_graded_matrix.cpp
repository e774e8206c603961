#include <algorithm>

#include "doctest.h"
#include "gal/error.hpp"
#include "gal/graded_matrix.hpp"

using namespace gal;

namespace {

GradedMatrixAlgebra pauli_block_algebra(std::vector<std::int64_t> kappa_t) {
  FinAbGroup g = make_group({2, 2});
  Subgroup t = Subgroup::full(g);
  Bicharacter beta = enumerate_alternating_bicharacters(t).at(0);
  KappaMap kappa{std::move(kappa_t)};
  return build_model(g, t, beta, kappa);
}

GradedMatrixAlgebra two_coset_algebra(std::vector<std::int64_t> kappa_t) {
  FinAbGroup g = make_group({2, 2, 2});
  Subgroup t = Subgroup::from_generators(g, {Elem{1, 0, 0}, Elem{0, 1, 0}});
  Bicharacter beta = enumerate_alternating_bicharacters(t).at(0);
  KappaMap kappa{std::move(kappa_t)};
  return build_model(g, t, beta, kappa);
}

std::vector<std::pair<Elem, Subspace>> components_of(const GradedMatrixAlgebra& m) {
  std::vector<std::pair<Elem, Subspace>> comps;
  for (const Elem& deg : m.group().elements())
    comps.emplace_back(deg, m.component_space(deg));
  return comps;
}

}  // namespace

TEST_CASE("division grading of the 2x2 algebra") {
  GradedMatrixAlgebra m = pauli_block_algebra({1});
  CHECK(m.dim() == 2);
  CHECK(m.support().size() == 4);
  for (const Elem& deg : m.group().elements()) CHECK(m.component_dim(deg) == 1);
  GradingReport rep = verify_model(m);
  CHECK(rep.ok());
  rep = verify_grading(m.field(), m.group(), components_of(m), m.dim());
  CHECK(rep.ok());
}

TEST_CASE("mixed grading with repeated cosets") {
  GradedMatrixAlgebra m = pauli_block_algebra({2});
  CHECK(m.dim() == 4);
  for (const Elem& deg : m.group().elements()) CHECK(m.component_dim(deg) == 4);
  CHECK(verify_model(m).ok());
  CHECK(verify_grading(m.field(), m.group(), components_of(m), m.dim()).ok());
}

TEST_CASE("component bases match dimensions and degrees") {
  FinAbGroup g = make_group({4});
  Subgroup t = Subgroup::trivial(g);
  KappaMap kappa{{2, 1, 0, 0}};
  GradedMatrixAlgebra m = build_model(g, t, Bicharacter::trivial(t), kappa);
  CHECK(m.dim() == 3);
  std::int64_t total = 0;
  for (const Elem& deg : g.elements()) {
    auto basis = m.component_basis(deg);
    CHECK(static_cast<std::int64_t>(basis.size()) == m.component_dim(deg));
    for (const BasisTriple& e : basis) CHECK(m.degree(e) == deg);
    total += basis.size();
  }
  CHECK(total == 9);
  CHECK(verify_model(m).ok());
}

TEST_CASE("unit products follow the twist table") {
  GradedMatrixAlgebra m = two_coset_algebra({1, 2});
  const RootField& f = m.field();
  CHECK(m.dim() == 6);
  std::vector<BasisTriple> all;
  for (const Elem& deg : m.group().elements()) {
    auto part = m.component_basis(deg);
    all.insert(all.end(), part.begin(), part.end());
  }
  CHECK(all.size() == 36);
  for (const BasisTriple& x : all)
    for (const BasisTriple& y : all) {
      MatrixF lhs = mat_mul(f, m.realize(x), m.realize(y));
      auto prod = m.unit_product(x, y);
      MatrixF rhs = prod ? mat_scale(f, prod->first, m.realize(prod->second))
                         : MatrixF(m.dim(), m.dim());
      CHECK(lhs == rhs);
    }
}

TEST_CASE("multiplicity shifts relabel cosets") {
  FinAbGroup g = make_group({4});
  Subgroup t = Subgroup::from_generators(g, {Elem{2}});
  CosetTable ct = CosetTable::build(g, t);
  KappaMap kappa{{3, 1}};
  KappaMap shifted = kappa_shift(ct, kappa, {1});
  CHECK(shifted.mult == std::vector<std::int64_t>{1, 3});
  CHECK(kappa_shift(ct, shifted, {1}).mult == kappa.mult);
  CHECK(kappa_shift(ct, kappa, {2}).mult == kappa.mult);
  CHECK(kappa_reflect(ct, kappa).mult == kappa.mult);
  FinAbGroup g8 = make_group({8});
  Subgroup t8 = Subgroup::from_generators(g8, {Elem{4}});
  CosetTable ct8 = CosetTable::build(g8, t8);
  KappaMap k8{{1, 2, 0, 0}};
  CHECK(kappa_reflect(ct8, k8).mult == std::vector<std::int64_t>{1, 0, 0, 2});
}

TEST_CASE("elementary grading sorts indices into coset slots") {
  FinAbGroup g = make_group({2});
  ElementaryGrading eg = elementary_grading(g, {Elem{1}, Elem{0}, Elem{1}});
  const GradedMatrixAlgebra& m = eg.algebra;
  CHECK(m.dim() == 3);
  CHECK(m.kappa().mult == std::vector<std::int64_t>{1, 2});
  CHECK(eg.permutation == std::vector<int>{1, 0, 2});
  CHECK(m.component_dim({0}) == 5);
  CHECK(m.component_dim({1}) == 4);
  CHECK(verify_model(m).ok());

  // The permutation carries E_(i,j) into the slot units with the same degree.
  const RootField& f = m.field();
  MatrixF u(3, 3);
  for (int i = 0; i < 3; ++i) u.at(eg.permutation[i], i) = 1;
  auto uinv = mat_inverse(f, u);
  REQUIRE(uinv.has_value());
  std::vector<Elem> degs{{1}, {0}, {1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MatrixF e(3, 3);
      e.at(i, j) = 1;
      MatrixF moved = mat_mul(f, mat_mul(f, u, e), *uinv);
      Elem want = g.sub(degs[i], degs[j]);
      Subspace comp = m.component_space(want);
      CHECK(comp.contains(f, moved.a));
    }
}

TEST_CASE("embeddings compose exactly") {
  FinAbGroup g = make_group({2, 2});
  Subgroup t = Subgroup::full(g);
  Bicharacter beta = enumerate_alternating_bicharacters(t).at(0);
  RootField f = RootField::make(model_orders(g, symplectic_basis(t, beta)));
  auto d = std::make_shared<PauliAlgebra>(PauliAlgebra::build(t, beta, f));
  CosetTable ct = CosetTable::build(g, t);
  GradedMatrixAlgebra small = GradedMatrixAlgebra::build(d, ct, KappaMap{{1}});
  GradedMatrixAlgebra mid = GradedMatrixAlgebra::build(d, ct, KappaMap{{2}});
  GradedMatrixAlgebra big = GradedMatrixAlgebra::build(d, ct, KappaMap{{3}});
  Embedding e1 = embed(small, mid);
  Embedding e2 = embed(mid, big);
  Embedding direct = embed(small, big);
  for (const Elem& deg : g.elements())
    for (const BasisTriple& x : small.component_basis(deg)) {
      MatrixF via = e2.apply(e1.apply(small.realize(x), mid.dim()), big.dim());
      CHECK(via == direct.apply(small.realize(x), big.dim()));
      // Images stay homogeneous of the same degree.
      CHECK(big.component_space(deg).contains(f, via.a));
    }
  // Products are preserved.
  auto xs = small.component_basis(g.id());
  for (const BasisTriple& x : xs)
    for (const BasisTriple& y : xs) {
      MatrixF lhs = direct.apply(mat_mul(f, small.realize(x), small.realize(y)), big.dim());
      MatrixF rhs = mat_mul(f, direct.apply(small.realize(x), big.dim()),
                            direct.apply(small.realize(y), big.dim()));
      CHECK(lhs == rhs);
    }
  CHECK_THROWS_AS(embed(mid, small), GalError);
}

TEST_CASE("corrupting a component breaks verification") {
  GradedMatrixAlgebra m = pauli_block_algebra({1});
  auto comps = components_of(m);
  // Swap two components' degrees.
  std::swap(comps[0].first, comps[1].first);
  GradingReport rep = verify_grading(m.field(), m.group(), comps, m.dim());
  CHECK(!rep.ok());
  CHECK(!rep.witness.empty());
}

TEST_CASE("fingerprints: structural and generic paths agree") {
  std::vector<GradedMatrixAlgebra> algebras{
      pauli_block_algebra({1}), pauli_block_algebra({2}),
      two_coset_algebra({1, 1}), two_coset_algebra({2, 0})};
  for (const GradedMatrixAlgebra& m : algebras) {
    Fingerprint fast = fingerprint(m);
    Fingerprint slow = fingerprint(m.field(), m.group(), components_of(m), m.dim());
    CHECK(fast == slow);
  }
}

TEST_CASE("fingerprint pins: fine division grading vs trivial grading") {
  GradedMatrixAlgebra pauli = pauli_block_algebra({1});
  Fingerprint fp = fingerprint(pauli);
  CHECK(fp.block_sizes == std::vector<std::int64_t>{2});
  CHECK(fp.dims == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(fp.subgroup_factors == std::vector<std::int64_t>{2, 2});

  FinAbGroup g = make_group({2});
  ElementaryGrading split = elementary_grading(g, {Elem{0}, Elem{1}});
  Fingerprint fs = fingerprint(split.algebra);
  CHECK(fs.block_sizes == std::vector<std::int64_t>{1, 1});
  CHECK(fs.dims == std::vector<std::int64_t>{2, 2});

  ElementaryGrading trivial = elementary_grading(g, {Elem{0}, Elem{0}});
  Fingerprint ft = fingerprint(trivial.algebra);
  CHECK(ft.block_sizes == std::vector<std::int64_t>{2});
  CHECK(ft.dims == std::vector<std::int64_t>{4});
  CHECK(ft.subgroup_factors.empty());
  CHECK(fs != ft);
}

TEST_CASE("rejects inconsistent parameters") {
  FinAbGroup g = make_group({2, 2});
  Subgroup t = Subgroup::full(g);
  Bicharacter beta = enumerate_alternating_bicharacters(t).at(0);
  CHECK_THROWS_AS(build_model(g, t, beta, KappaMap{{0}}), GalError);
  CHECK_THROWS_AS(build_model(g, t, beta, KappaMap{{1, 1}}), GalError);
  CHECK_THROWS_AS(build_model(g, t, beta, KappaMap{{-1}}), GalError);
  // Field without the required roots.
  FinAbGroup g3 = make_group({3});
  Subgroup t3 = Subgroup::trivial(g3);
  CHECK_THROWS_AS(build_model(g3, t3, Bicharacter::trivial(t3), KappaMap{{1, 1, 1}},
                              std::nullopt, RootField::make({2})),
                  GalError);
}
