#include "doctest.h"
#include "gal/error.hpp"
#include "gal/pauli.hpp"

using namespace gal;

namespace {

PauliAlgebra order4_algebra() {
  FinAbGroup g = make_group({2, 2});
  Subgroup t = Subgroup::full(g);
  Bicharacter beta = enumerate_alternating_bicharacters(t).at(0);
  RootField f = RootField::make({2});
  return PauliAlgebra::build(t, beta, f);
}

}  // namespace

TEST_CASE("rank-2 elementary support gives the classic 2x2 quartet") {
  PauliAlgebra d = order4_algebra();
  const RootField& f = d.field();
  CHECK(d.dim() == 2);
  CHECK(d.x({0, 0}) == MatrixF::identity(2));
  // One generator is diagonal with entries 1, -1; the other is the swap.
  MatrixF diag(2, 2, {1, 0, 0, f.p() - 1});
  MatrixF swap(2, 2, {0, 1, 1, 0});
  MatrixF prod(2, 2, {0, 1, f.p() - 1, 0});
  CHECK(d.x({0, 1}) == diag);
  CHECK(d.x({1, 0}) == swap);
  CHECK(d.x({1, 1}) == prod);
}

TEST_CASE("transpose signs on the rank-2 elementary support") {
  PauliAlgebra d = order4_algebra();
  REQUIRE(d.has_sign_form());
  CHECK(d.sign({0, 0}) == RootOfUnity::one());
  CHECK(d.sign({0, 1}) == RootOfUnity::one());
  CHECK(d.sign({1, 0}) == RootOfUnity::one());
  CHECK(d.sign({1, 1}) == RootOfUnity::minus_one());
}

TEST_CASE("sign form is quadratic with polarization beta") {
  FinAbGroup g = make_group({2, 2, 2, 2});
  Subgroup t = Subgroup::full(g);
  RootField f = RootField::make({2});
  for (const Bicharacter& beta : enumerate_alternating_bicharacters(t)) {
    PauliAlgebra d = PauliAlgebra::build(t, beta, f);
    REQUIRE(d.has_sign_form());
    for (const Elem& s : t.elements())
      for (const Elem& u : t.elements()) {
        RootOfUnity lhs = d.sign(g.add(s, u));
        RootOfUnity rhs = d.sign(s).mul(d.sign(u)).mul(beta.eval(s, u));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("order-9 support over zeta_3") {
  FinAbGroup g = make_group({3, 3});
  Subgroup t = Subgroup::full(g);
  auto betas = enumerate_alternating_bicharacters(t);
  RootField f = RootField::make({3});
  for (const Bicharacter& beta : betas) {
    PauliAlgebra d = PauliAlgebra::build(t, beta, f);
    CHECK(d.dim() == 3);
    CHECK(!d.has_sign_form());
    // Commutation of the split pair is exactly zeta_3.
    const auto& sb = d.sym_basis();
    const Elem& u = sb.pairs[0].first;
    const Elem& v = sb.pairs[0].second;
    MatrixF uv = mat_mul(f, d.x(u), d.x(v));
    MatrixF vu = mat_mul(f, d.x(v), d.x(u));
    CHECK(uv == mat_scale(f, f.zeta(3), vu));
    CHECK_THROWS_AS(d.sign(u), GalError);
  }
}

TEST_CASE("twist table matches products for a mixed-order support") {
  FinAbGroup g = make_group({2, 2, 2, 2});
  Subgroup t = Subgroup::full(g);
  Bicharacter beta = enumerate_alternating_bicharacters(t).at(0);
  RootField f = RootField::make({2});
  PauliAlgebra d = PauliAlgebra::build(t, beta, f);
  CHECK(d.dim() == 4);
  for (const Elem& s : t.elements())
    for (const Elem& u : t.elements()) {
      MatrixF lhs = mat_mul(f, d.x(s), d.x(u));
      MatrixF rhs = mat_scale(f, d.sigma_f(s, u), d.x(g.add(s, u)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("trace of every nonidentity component vanishes") {
  FinAbGroup g = make_group({2, 2, 3, 3});
  Subgroup t = Subgroup::full(g);
  auto betas = enumerate_alternating_bicharacters(t);
  REQUIRE(!betas.empty());
  RootField f = RootField::make({6});
  PauliAlgebra d = PauliAlgebra::build(t, betas[0], f);
  CHECK(d.dim() == 6);
  for (const Elem& s : t.elements()) {
    std::int64_t tr = mat_trace(f, d.x(s));
    if (s == g.id())
      CHECK(tr == 6 % f.p());
    else
      CHECK(tr == 0);
  }
}

TEST_CASE("trivial support is the base field") {
  FinAbGroup g = make_group({2});
  Subgroup t = Subgroup::trivial(g);
  RootField f = RootField::make({2});
  PauliAlgebra d = PauliAlgebra::build(t, Bicharacter::trivial(t), f);
  CHECK(d.dim() == 1);
  CHECK(d.x(g.id()) == MatrixF::identity(1));
  CHECK(d.has_sign_form());
  CHECK(d.sign(g.id()).is_one());
}

TEST_CASE("intertwiner conjugates transposed generators back") {
  PauliAlgebra d = order4_algebra();
  const RootField& f = d.field();
  const auto& sb = d.sym_basis();
  std::vector<MatrixF> from, to;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < sb.pairs.size(); ++i) {
    from.push_back(mat_transpose(d.x(sb.pairs[i].first)));
    from.push_back(mat_transpose(d.x(sb.pairs[i].second)));
    to.push_back(d.x(sb.pairs[i].first));
    to.push_back(d.x(sb.pairs[i].second));
    orders.push_back(sb.orders[i]);
    orders.push_back(sb.orders[i]);
  }
  MatrixF w = pauli_intertwiner(f, from, to, orders);
  auto winv = mat_inverse(f, w);
  REQUIRE(winv.has_value());
  for (std::size_t k = 0; k < from.size(); ++k) {
    MatrixF conj = mat_mul(f, mat_mul(f, w, from[k]), *winv);
    CHECK(mat_proportional(f, to[k], conj).has_value());
  }
}

TEST_CASE("intertwiner handles the order-9 support") {
  FinAbGroup g = make_group({3, 3});
  Subgroup t = Subgroup::full(g);
  auto betas = enumerate_alternating_bicharacters(t);
  RootField f = RootField::make({3, 2 * 3 * 3});
  PauliAlgebra d = PauliAlgebra::build(t, betas[0], f);
  const auto& sb = d.sym_basis();
  std::vector<MatrixF> from, to;
  std::vector<std::int64_t> orders;
  // Transposition inverts the bicharacter, so pair it with the algebra of
  // the inverse bicharacter.
  PauliAlgebra dinv = PauliAlgebra::build(t, betas[0].inverse(), f);
  SymplecticBasis sbi = dinv.sym_basis();
  for (std::size_t i = 0; i < sbi.pairs.size(); ++i) {
    from.push_back(mat_transpose(d.x(sbi.pairs[i].first)));
    from.push_back(mat_transpose(d.x(sbi.pairs[i].second)));
    to.push_back(dinv.x(sbi.pairs[i].first));
    to.push_back(dinv.x(sbi.pairs[i].second));
    orders.push_back(sbi.orders[i]);
    orders.push_back(sbi.orders[i]);
  }
  MatrixF w = pauli_intertwiner(f, from, to, orders);
  auto winv = mat_inverse(f, w);
  REQUIRE(winv.has_value());
  for (const Elem& s : t.elements()) {
    MatrixF conj = mat_mul(f, mat_mul(f, w, mat_transpose(d.x(s))), *winv);
    CHECK(mat_proportional(f, dinv.x(s), conj).has_value());
  }
}
