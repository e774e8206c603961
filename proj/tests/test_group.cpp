#include "doctest.h"
#include "gal/error.hpp"
#include "gal/group.hpp"

using namespace gal;

TEST_CASE("invariant factor normalization") {
  CHECK(make_group({2, 2}).factors() == std::vector<std::int64_t>{2, 2});
  CHECK(make_group({4, 6}).factors() == std::vector<std::int64_t>{2, 12});
  CHECK(make_group({2, 3}).factors() == std::vector<std::int64_t>{6});
  CHECK(make_group({1, 1}).factors().empty());
  CHECK(make_group({12, 18, 2}).order() == 12 * 18 * 2);
}

TEST_CASE("arithmetic and indexing") {
  FinAbGroup g = make_group({2, 4});
  CHECK(g.order() == 8);
  CHECK(g.exponent() == 4);
  Elem a{1, 3}, b{1, 2};
  CHECK(g.add(a, b) == Elem{0, 1});
  CHECK(g.neg(a) == Elem{1, 1});
  CHECK(g.sub(a, a) == g.id());
  CHECK(g.order_of(a) == 4);
  CHECK(g.order_of({1, 0}) == 2);
  CHECK(g.order_of(g.id()) == 1);
  for (std::int64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.at(i)) == i);
  CHECK(g.elements().size() == 8);
  CHECK(g.elements()[0] == g.id());
  CHECK_THROWS_AS(g.check({0, 5}), GalError);
}

TEST_CASE("subgroup closure and membership") {
  FinAbGroup g = make_group({2, 4});
  Subgroup t = Subgroup::from_generators(g, {Elem{1, 2}});
  CHECK(t.order() == 2);
  CHECK(t.contains({1, 2}));
  CHECK(!t.contains({1, 0}));
  CHECK(Subgroup::trivial(g).order() == 1);
  CHECK(Subgroup::full(g).order() == 8);
  CHECK(Subgroup::full(g).is_elementary_2() == false);
  CHECK(Subgroup::from_generators(g, {Elem{1, 0}, Elem{0, 2}}).is_elementary_2());
}

TEST_CASE("subgroup basis is independent and spans") {
  FinAbGroup g = make_group({2, 2, 3});
  for (const Subgroup& t : enumerate_subgroups(g)) {
    auto b = t.basis();
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < b.gens.size(); ++i) {
      CHECK(g.order_of(b.gens[i]) == b.orders[i]);
      if (i) CHECK(b.orders[i - 1] >= b.orders[i]);
      prod *= b.orders[i];
    }
    CHECK(prod == t.order());
    CHECK(Subgroup::from_generators(g, b.gens) == t);
  }
}

TEST_CASE("subgroup lattice sizes") {
  CHECK(enumerate_subgroups(make_group({2, 2})).size() == 5);
  CHECK(enumerate_subgroups(make_group({4})).size() == 3);
  CHECK(enumerate_subgroups(make_group({2, 4})).size() == 8);
  CHECK(enumerate_subgroups(make_group({6})).size() == 4);
}

TEST_CASE("square order detection") {
  FinAbGroup g = make_group({2, 2, 2});
  std::int64_t root = 0;
  Subgroup t = Subgroup::from_generators(g, {Elem{1, 0, 0}, Elem{0, 1, 0}});
  CHECK(t.square_order(&root));
  CHECK(root == 2);
  CHECK(!Subgroup::from_generators(g, {Elem{1, 0, 0}}).square_order());
}

TEST_CASE("plain cosets use lex-min representatives") {
  FinAbGroup g = make_group({4});
  Subgroup t = Subgroup::from_generators(g, {Elem{2}});
  CosetTable ct = CosetTable::build(g, t);
  REQUIRE(ct.coset_count() == 2);
  CHECK(ct.gamma(0) == Elem{0});
  CHECK(ct.gamma(1) == Elem{1});
  CHECK(ct.coset_of({3}) == 1);
  CHECK(ct.shifted(0, {1}) == 1);
  CHECK(ct.shifted(1, {1}) == 0);
  CHECK(ct.inverse_coset(1) == 1);
}

TEST_CASE("paired cosets: both self-paired at the identity base point") {
  FinAbGroup g = make_group({4});
  Subgroup t = Subgroup::from_generators(g, {Elem{2}});
  CosetTable ct = CosetTable::build(g, t, Elem{0});
  REQUIRE(ct.coset_count() == 2);
  CHECK(ct.self_paired(0));
  CHECK(ct.self_paired(1));
  CHECK(ct.partner(0) == 0);
  CHECK(ct.partner(1) == 1);
}

TEST_CASE("paired cosets: partner pair with forced representative") {
  FinAbGroup g = make_group({4});
  Subgroup t = Subgroup::from_generators(g, {Elem{2}});
  CosetTable ct = CosetTable::build(g, t, Elem{1});
  REQUIRE(ct.coset_count() == 2);
  CHECK(!ct.self_paired(0));
  CHECK(ct.partner(0) == 1);
  CHECK(ct.partner(1) == 0);
  // g0 + gamma(A) + gamma(partner A) = 0
  Elem s = g.add(ct.g0(), g.add(ct.gamma(0), ct.gamma(1)));
  CHECK(s == g.id());
  CHECK(ct.gamma(0) == Elem{0});
  CHECK(ct.gamma(1) == Elem{3});
}

TEST_CASE("pairing identity holds across groups and base points") {
  for (auto moduli : {std::vector<std::int64_t>{8}, {2, 4}, {3, 3}, {12}}) {
    FinAbGroup g = make_group(moduli);
    for (const Subgroup& t : enumerate_subgroups(g)) {
      for (const Elem& g0 : g.elements()) {
        CosetTable ct = CosetTable::build(g, t, g0);
        for (std::size_t a = 0; a < ct.coset_count(); ++a) {
          std::size_t pa = ct.partner(a);
          CHECK(ct.partner(pa) == a);
          if (ct.self_paired(a)) {
            CHECK(pa == a);
            Elem tau = g.add(g0, g.mul_int(ct.gamma(a), 2));
            CHECK(t.contains(tau));
          } else {
            Elem s = g.add(g0, g.add(ct.gamma(a), ct.gamma(pa)));
            CHECK(s == g.id());
          }
          CHECK(ct.coset_of(ct.gamma(a)) == a);
        }
      }
    }
  }
}

TEST_CASE("quotient structure and maps") {
  FinAbGroup g = make_group({2, 4});
  Subgroup n = Subgroup::from_generators(g, {Elem{1, 2}});
  Quotient q = Quotient::build(g, n);
  CHECK(q.group().factors() == std::vector<std::int64_t>{4});
  // Projection is a homomorphism with kernel n.
  for (const Elem& x : g.elements())
    for (const Elem& y : g.elements()) {
      Elem lhs = q.project(g.add(x, y));
      Elem rhs = q.group().add(q.project(x), q.project(y));
      CHECK(lhs == rhs);
    }
  for (const Elem& x : g.elements())
    CHECK((q.project(x) == q.group().id()) == n.contains(x));
  for (const Elem& c : q.group().elements()) CHECK(q.project(q.lift(c)) == c);
}

TEST_CASE("quotient by the full group and by the trivial subgroup") {
  FinAbGroup g = make_group({2, 2});
  Quotient full = Quotient::build(g, Subgroup::full(g));
  CHECK(full.group().order() == 1);
  Quotient triv = Quotient::build(g, Subgroup::trivial(g));
  CHECK(triv.group().order() == 4);
  for (const Elem& x : g.elements()) CHECK(triv.lift(triv.project(x)) == x);
}
