#include "doctest.h"
#include "twistcoh/error.hpp"
#include "twistcoh/grp.hpp"

using namespace twistcoh;
using namespace twistcoh::grp;

TEST_CASE("make_abelian") {
  CHECK(make_abelian(std::vector<i64>{})->order() == 1);
  auto k = make_abelian({2, 2});
  CHECK(k->order() == 4);
  CHECK(k->exponent() == 2);
  auto g = make_abelian({2, 4});
  const auto& a = *g->abelian_structure();
  const Elem x = static_cast<Elem>(a.index(std::vector<i64>{1, 3}));
  const Elem y = static_cast<Elem>(a.index(std::vector<i64>{1, 2}));
  CHECK(a.coords(g->mul(x, y)) == std::vector<i64>{0, 1});
  CHECK_THROWS_AS(make_abelian({2, 1}), Error);
}

TEST_CASE("make_table validates") {
  CHECK(make_table({{0}})->order() == 1);
  CHECK(make_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}})->order() == 3);
  auto s3 = symmetric3()->table();
  // r*r = r^2 perturbed to s; identity and inverses survive.
  s3[1][1] = 3;
  try {
    make_table(s3);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAssociative);
    CHECK(std::string(e.what()).find("(a,b,c)") != std::string::npos);
  }
  // Identity not at index 0 is normalized.
  auto z2 = make_table({{1, 0}, {0, 1}});
  CHECK(z2->mul(0, 1) == 1);
  CHECK(z2->original_index()[0] == 1);
  CHECK_THROWS_AS(make_table({{0, 0}, {0, 0}}), Error);
}

TEST_CASE("direct products") {
  auto triv = make_abelian(std::vector<i64>{});
  auto z3 = make_abelian({3});
  auto p = direct_product(triv, z3);
  CHECK(p.group->same_table(*z3));
  auto k = direct_product(make_abelian({2}), make_abelian({2}));
  CHECK(k.group->order() == 4);
  CHECK(k.group->exponent() == 2);
  auto z2s3 = direct_product(make_abelian({2}), symmetric3());
  CHECK(z2s3.group->order() == 12);
  int involutions_in_s3_factor = 0;
  for (Elem e = 0; e < 12; ++e)
    if (z2s3.proj1(e) == 0 && z2s3.group->element_order(e) == 2) ++involutions_in_s3_factor;
  CHECK(involutions_in_s3_factor == 3);
  int involutions = 0;
  for (Elem e = 0; e < 12; ++e) involutions += z2s3.group->element_order(e) == 2;
  CHECK(involutions == 7);
}

TEST_CASE("abelianization") {
  auto z = make_abelian({2, 4});
  auto A = abelianization(z);
  CHECK(A.ab.factors() == std::vector<i64>{2, 4});
  auto d4 = abelianization(dihedral(4));
  CHECK(d4.ab.factors() == std::vector<i64>{2, 2});
  auto h = abelianization(heisenberg(3));
  CHECK(h.ab.factors() == std::vector<i64>{3, 3});
  // Z_6 x Z_4 in invariant form is Z_2 x Z_12.
  CHECK(abelianization(make_abelian({6, 4})).ab.factors() == std::vector<i64>{2, 12});
  // Idempotent.
  auto again = abelianization(d4.group);
  CHECK(again.ab == d4.ab);
  CHECK(abelianization(symmetric3()).ab.factors() == std::vector<i64>{2});
}

TEST_CASE("pairing") {
  AbelianGroup z6({6});
  CHECK(z6.pairing(2, 3) == 0);
  AbelianGroup a({2, 4});
  // 1*1*2 + 1*2*1 = 4 = 0 mod 4.
  CHECK(a.pairing(a.index(std::vector<i64>{1, 1}), a.index(std::vector<i64>{1, 2})) == 0);
  CHECK(a.pairing(a.index(std::vector<i64>{1, 1}), a.index(std::vector<i64>{1, 1})) == 3);
  // Nondegenerate.
  for (std::size_t chi = 1; chi < a.order(); ++chi) {
    bool nonzero = false;
    for (std::size_t x = 0; x < a.order(); ++x) nonzero = nonzero || a.pairing(chi, x) != 0;
    CHECK(nonzero);
  }
}

TEST_CASE("quotients") {
  auto z4 = make_abelian({4});
  std::vector<Elem> k{0};
  CHECK(quotient(z4, k).group->order() == 4);
  std::vector<Elem> k2{0, 2};
  auto q = quotient(z4, k2);
  CHECK(q.group->order() == 2);
  CHECK(q.hom.kernel() == k2);
  CHECK(q.hom.surjective());
  auto d4 = dihedral(4);
  auto qc = quotient(d4, d4->center());
  CHECK(qc.group->order() == 4);
  CHECK(qc.group->is_abelian());
  CHECK(qc.group->exponent() == 2);
  CHECK(qc.hom.kernel() == d4->center());
  std::vector<Elem> refl{0, 4};  // r0 s: not normal
  CHECK_THROWS_AS(quotient(d4, refl), Error);
  std::vector<Elem> bad{0, 1};
  CHECK_THROWS_AS(quotient(d4, bad), Error);
}

TEST_CASE("dual_hom") {
  auto z2 = make_abelian({2});
  auto z4 = make_abelian({4});
  GroupHom psi(z2, z4, {0, 2});
  auto d = dual_hom(psi);
  CHECK(d.image() == std::vector<Elem>{0, 1, 0, 1});
  CHECK(dual_hom(GroupHom::identity(z4)).image() == GroupHom::identity(z4).image());
  CHECK(dual_hom(GroupHom::trivial(z2, z4)).image() == std::vector<Elem>{0, 0, 0, 0});
  // Double dual is the identity in coordinates.
  auto a = make_abelian({2, 4});
  auto b = make_abelian({4});
  GroupHom f(a, b, [&] {
    std::vector<Elem> im(8);
    for (Elem x = 0; x < 8; ++x) {
      auto c = a->abelian_structure()->coords(x);
      im[x] = static_cast<Elem>((2 * c[0] + 3 * c[1]) % 4);
    }
    return im;
  }());
  CHECK(dual_hom(dual_hom(f)).image() == f.image());
}

TEST_CASE("order cap") {
  const auto old = max_order();
  set_max_order(8);
  CHECK_THROWS_AS(make_abelian({16}), Error);
  set_max_order(old);
  CHECK(make_abelian({16})->order() == 16);
}
