#include <algorithm>
#include <map>

#include "doctest.h"
#include "support.hpp"
#include "twistcoh/error.hpp"
#include "twistcoh/ext.hpp"

using namespace twistcoh;
using namespace twistcoh::ext;

namespace {

// Order histogram, center size, exponent: enough to separate the small groups used here.
struct Shape {
  std::map<std::size_t, std::size_t> orders;
  std::size_t center = 0;
  i64 exponent = 0;
  bool abelian = false;
  bool operator==(const Shape&) const = default;
};

Shape shape(const grp::FiniteGroup& g) {
  Shape s;
  for (Elem a = 0; a < g.order(); ++a) ++s.orders[g.element_order(a)];
  s.center = g.center().size();
  s.exponent = g.exponent();
  s.abelian = g.is_abelian();
  return s;
}

// a_i b_j on an abelian group, valued in Z_n.
Cochain product_form(const GroupPtr& g, std::size_t i, std::size_t j, i64 n, std::size_t base = 1) {
  const auto& a = *g->abelian_structure();
  Cochain u(g, 2, base, n);
  for (std::size_t x = 0; x < base; ++x)
    for (Elem s = 1; s < g->order(); ++s)
      for (Elem t = 1; t < g->order(); ++t) u.set(x, s, t, a.coords(s)[i] * a.coords(t)[j]);
  return u;
}

ValuedCochain single(const Cochain& u, i64 d) {
  ValuedCochain v = ValuedCochain::zero(u.group(), AbelianGroup({d}));
  v.parts[0] = u.embedded(d);
  return v;
}

ValuedCochain random_valued(const GroupPtr& g, const AbelianGroup& N, support::Rng& rng) {
  ValuedCochain v = ValuedCochain::zero(g, N);
  for (std::size_t i = 0; i < N.rank(); ++i) v.parts[i] = support::random_cocycle(g, 1, N.factors()[i], rng);
  return v;
}

// Z_4 -> Z_2 with kernel {0, 2}.
CentralExtension z4_over_z2() {
  auto z4 = grp::make_abelian({4});
  auto z2 = grp::make_abelian({2});
  return CentralExtension(AbelianGroup({2}), z2, z4, GroupHom(z2, z4, {0, 2}), GroupHom(z4, z2, {0, 1, 0, 1}));
}

// Quotient of D_8 by its center, as a representation group of a copy of D_4.
CentralExtension d8_over_d4() {
  auto d8 = grp::dihedral(8);
  const auto z = d8->center();
  auto Q = grp::quotient(d8, z);
  auto zg = grp::make_abelian({2});
  return CentralExtension(AbelianGroup({2}), Q.group, d8, GroupHom(zg, d8, {z[0], z[1]}), Q.hom);
}

bool pointwise_ext(const CentralExtension& e) {
  const auto r = is_pointwise_trivial_extension(e);
  CHECK(r.pointwise_trivial == r.cocycle_route);
  return r.pointwise_trivial;
}

}  // namespace

TEST_CASE("extension from cocycle: small cases") {
  auto v4 = grp::make_abelian({2, 2});
  const auto E0 = extension_from_cocycle(ValuedCochain::zero(v4, AbelianGroup({2})));
  CHECK(shape(*E0.E()) == shape(*grp::make_abelian({2, 2, 2})));

  const auto D = extension_from_cocycle(single(product_form(v4, 0, 1, 2), 2));
  CHECK(D.E()->order() == 8);
  CHECK(D.E()->center().size() == 2);
  CHECK(D.E()->exponent() == 4);
  CHECK(shape(*D.E()) == shape(*grp::dihedral(4)));

  auto z33 = grp::make_abelian({3, 3});
  const auto H = extension_from_cocycle(single(product_form(z33, 0, 1, 3), 3));
  CHECK(H.E()->order() == 27);
  CHECK(H.E()->exponent() == 3);
  CHECK(shape(*H.E()) == shape(*grp::heisenberg(3)));

  ValuedCochain bad = ValuedCochain::zero(v4, AbelianGroup({2}));
  bad.parts[0].set(0, 1, 2, 1);
  CHECK_THROWS_AS(extension_from_cocycle(bad), Error);
}

TEST_CASE("cocycle from extension") {
  const auto e = z4_over_z2();
  const auto eta = cocycle_from_extension(e);
  CHECK(eta.at(0, 1, 1) == 1);

  auto z2 = grp::make_abelian({2});
  const auto P = grp::direct_product(z2, z2);
  const CentralExtension split(AbelianGroup({2}), z2, P.group, P.incl2, P.proj1);
  CHECK(cocycle_from_extension(split).parts[0].is_zero());

  support::Rng rng(11);
  for (auto g : {grp::make_abelian({2, 2}), grp::dihedral(3), grp::dihedral(4), grp::make_abelian({6})})
    for (auto N : {AbelianGroup({2}), AbelianGroup({2, 3}), AbelianGroup({4})})
      for (int k = 0; k < 3; ++k) {
        const auto eta = random_valued(g, N, rng);
        CHECK(cocycle_from_extension(extension_from_cocycle(eta)) == eta);
      }
}

TEST_CASE("cohomologous cocycles give equivalent extensions") {
  support::Rng rng(12);
  for (auto g : {grp::make_abelian({2, 2}), grp::dihedral(3), grp::heisenberg(3)})
    for (auto N : {AbelianGroup({2}), AbelianGroup({3, 3})}) {
      const auto eta = random_valued(g, N, rng);
      ValuedCochain b = ValuedCochain::zero(g, N, 1);
      ValuedCochain eta2 = eta;
      for (std::size_t i = 0; i < N.rank(); ++i) {
        b.parts[i] = support::random_cochain(g, 1, 1, N.factors()[i], rng);
        eta2.parts[i] = coh::multiply(coh::coboundary(b.parts[i]), eta.parts[i]);
      }
      const auto E1 = extension_from_cocycle(eta);
      const auto E2 = extension_from_cocycle(eta2);
      const std::size_t k = N.order();
      auto bval = [&](Elem s) {
        std::vector<i64> c(N.rank());
        for (std::size_t i = 0; i < N.rank(); ++i) c[i] = b.parts[i].at(0, s);
        return N.index(c);
      };
      // (n, s) in E2 corresponds to (n + b(s), s) in E1.
      auto map = [&](Elem x) { return static_cast<Elem>((x / k) * k + N.add(x % k, bval(static_cast<Elem>(x / k)))); };
      bool ok = true;
      const auto& A = *E2.E();
      const auto& B = *E1.E();
      for (Elem x = 0; x < A.order(); ++x) {
        ok = ok && E1.p()(map(x)) == E2.p()(x);
        for (Elem y = 0; y < A.order(); ++y) ok = ok && map(A.mul(x, y)) == B.mul(map(x), map(y));
      }
      for (Elem n = 0; n < k; ++n) ok = ok && map(E2.iota()(n)) == E1.iota()(n);
      CHECK(ok);
    }
}

TEST_CASE("central extension validation") {
  auto z4 = grp::make_abelian({4});
  auto z2 = grp::make_abelian({2});
  CHECK_THROWS_AS(CentralExtension(AbelianGroup({2}), z2, z4, GroupHom(z2, z4, {0, 2}), GroupHom(z4, z2, {0, 1, 0, 1}),
                                   {0, 2}),
                  Error);
  auto s3 = grp::symmetric3();
  // A subgroup of order 2 in S_3 is not central.
  auto sign = GroupHom(s3, z2, {0, 0, 0, 1, 1, 1});
  CHECK_THROWS_AS(CentralExtension(AbelianGroup({3}), z2, s3, GroupHom(grp::make_abelian({3}), s3, {0, 1, 2}), sign),
                  Error);
}

TEST_CASE("transgression") {
  auto v4 = grp::make_abelian({2, 2});
  const coh::H2Circle h2(v4);
  const auto D = extension_from_cocycle(single(product_form(v4, 0, 1, 2), 2));
  CHECK(transgression(D, 0, h2) == std::vector<i64>{0});
  CHECK(transgression(D, 1, h2) == std::vector<i64>{1});

  support::Rng rng(13);
  for (auto g : {grp::make_abelian({2, 4}), grp::make_abelian({3, 3}), grp::dihedral(4)}) {
    const coh::H2Circle hc(g);
    const AbelianGroup N({2, 6});
    const auto e = extension_from_cocycle(random_valued(g, N, rng));
    for (int k = 0; k < 6; ++k) {
      const std::size_t a = static_cast<std::size_t>(support::uniform(rng, static_cast<i64>(N.order())));
      const std::size_t b = static_cast<std::size_t>(support::uniform(rng, static_cast<i64>(N.order())));
      const auto ta = transgression(e, a, hc), tb = transgression(e, b, hc), tab = transgression(e, N.add(a, b), hc);
      for (std::size_t i = 0; i < ta.size(); ++i) CHECK(zmod::reduce(ta[i] + tb[i] - tab[i], hc.invariants()[i]) == 0);
    }
  }
}

TEST_CASE("pointwise trivial extensions") {
  auto v4 = grp::make_abelian({2, 2});
  CHECK(pointwise_ext(extension_from_cocycle(ValuedCochain::zero(v4, AbelianGroup({2})))));
  const auto e = z4_over_z2();
  const auto r = is_pointwise_trivial_extension(e);
  CHECK(r.pointwise_trivial);
  REQUIRE(r.extending[1].has_value());
  // Any extension of the nontrivial character of Z_2 has order 4 on Z_4.
  CHECK(r.eab.ab.order() == 4);
  const auto D = extension_from_cocycle(single(product_form(v4, 0, 1, 2), 2));
  const auto rd = is_pointwise_trivial_extension(D);
  CHECK_FALSE(rd.pointwise_trivial);
  CHECK_FALSE(rd.cocycle_route);
  CHECK_FALSE(rd.extending[1].has_value());

  // Pointwise trivial over an abelian group forces an abelian total space.
  support::Rng rng(14);
  for (auto g : {grp::make_abelian({2, 2}), grp::make_abelian({2, 4}), grp::make_abelian({3, 3})})
    for (int k = 0; k < 4; ++k) {
      const auto u = support::random_pointwise_trivial(g, 1, rng);
      const auto E = extension_from_cocycle(single(u, static_cast<i64>(g->order())));
      CHECK(pointwise_ext(E));
      CHECK(E.E()->is_abelian());
    }
  for (auto g : {grp::dihedral(4), grp::dihedral(3)}) {
    const auto u = support::random_pointwise_trivial(g, 1, rng);
    CHECK(pointwise_ext(extension_from_cocycle(single(u, static_cast<i64>(g->order())))));
  }
}

TEST_CASE("representation groups of abelian groups") {
  {
    auto g = grp::make_abelian({5});
    const auto R = representation_group_abelian(g);
    CHECK(R.Z().order() == 1);
    CHECK(R.ext->E()->order() == 5);
  }
  {
    auto g = grp::make_abelian({2, 2});
    const auto R = representation_group_abelian(g);
    CHECK(R.Z().factors() == std::vector<i64>{2});
    CHECK(shape(*R.ext->E()) == shape(*grp::dihedral(4)));
    CHECK(R.inverse.size() == 2);
  }
  {
    const auto R = representation_group_abelian(grp::make_abelian({3, 3}));
    CHECK(R.Z().factors() == std::vector<i64>{3});
    CHECK(shape(*R.ext->E()) == shape(*grp::heisenberg(3)));
  }
  {
    const auto R = representation_group_abelian(grp::make_abelian({2, 4}));
    CHECK(R.Z().factors() == std::vector<i64>{2});
    CHECK(R.ext->E()->order() == 16);
    CHECK(R.h2->order() == 2);
  }
  {
    const auto R = representation_group_abelian(grp::make_abelian({6, 4}));
    CHECK(R.Z().factors() == std::vector<i64>{2});
    CHECK(R.ext->E()->order() == 48);
  }
  {
    const auto R = representation_group_abelian(grp::make_abelian({2, 2, 2}));
    CHECK(R.Z().order() == 8);
    CHECK(R.h2->order() == 8);
  }
  {
    const auto R = representation_group_abelian(grp::make_abelian({2, 2, 6}));
    CHECK(R.Z().factors() == std::vector<i64>{2, 2, 2});
    CHECK(R.ext->E()->order() == 192);
  }
  CHECK_THROWS_AS(representation_group_abelian(grp::dihedral(3)), Error);
}

TEST_CASE("representation group supplied for a nonabelian group") {
  const auto R = verify_representation_group(d8_over_d4());
  CHECK(R.h2->order() == 2);
  CHECK(shape(*R.ext->G()) == shape(*grp::dihedral(4)));

  auto v4 = grp::make_abelian({2, 2});
  const auto split = extension_from_cocycle(ValuedCochain::zero(v4, AbelianGroup({2})));
  try {
    verify_representation_group(split);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TransgressionNotBijective);
  }
}

TEST_CASE("classify and u_phi") {
  auto v4 = grp::make_abelian({2, 2});
  const auto R = representation_group_abelian(v4);
  Cochain u(v4, 2, 2, 2);
  const Cochain gen = product_form(v4, 0, 1, 2);
  for (Elem s = 1; s < 4; ++s)
    for (Elem t = 1; t < 4; ++t) u.set(1, s, t, gen.at(0, s, t));
  CHECK(classify_cocycle(u, R) == std::vector<std::size_t>{0, 1});

  support::Rng rng(15);
  for (auto g : {grp::make_abelian({2, 4}), grp::make_abelian({2, 2, 2}), grp::make_abelian({6, 6})}) {
    const auto Rg = representation_group_abelian(g);
    std::vector<std::size_t> phi(4);
    for (auto& p : phi) p = static_cast<std::size_t>(support::uniform(rng, static_cast<i64>(Rg.Z().order())));
    CHECK(classify_cocycle(build_u_phi(phi, Rg), Rg) == phi);
    const auto w = support::random_pointwise_trivial(g, 3, rng);
    CHECK(classify_cocycle(w, Rg) == std::vector<std::size_t>(3, 0));
  }
}

TEST_CASE("lift to the abelianization") {
  support::Rng rng(16);
  for (auto g : {grp::dihedral(4), grp::dihedral(3), grp::heisenberg(3), grp::make_abelian({2, 4})}) {
    const auto w = support::random_pointwise_trivial(g, 3, rng);
    const auto L = lift_to_abelianization(w);
    CHECK(coh::multiply(coh::coboundary(L.g), w) == coh::inflate(L.utilde, L.ab.q));
    CHECK(coh::pointwise_trivial(L.utilde).failing.empty());
    // A global coboundary lifts to a trivial class.
    const auto h = support::random_cochain(g, 1, 2, static_cast<i64>(g->order()), rng);
    const auto L2 = lift_to_abelianization(coh::coboundary(h));
    CHECK(coh::is_coboundary_circle(L2.utilde).has_value());
  }
  auto v4 = grp::make_abelian({2, 2});
  try {
    lift_to_abelianization(product_form(v4, 0, 1, 2, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPointwiseTrivial);
  }
}

TEST_CASE("decompose") {
  support::Rng rng(17);
  auto check = [](const Cochain& u, const Decomposition& d) {
    CHECK(coh::multiply(coh::multiply(coh::coboundary(d.g), coh::inflate(d.v, d.ab.q)), d.u_phi) == u);
  };
  {
    auto g = grp::make_abelian({2, 4});
    const auto R = representation_group_abelian(g);
    for (int k = 0; k < 4; ++k) {
      const auto u = support::random_cocycle(g, 3, 8, rng);
      check(u, decompose(u, R));
    }
    const auto triv = decompose(Cochain(g, 2, 2, 8), R);
    CHECK(triv.phi == std::vector<std::size_t>{0, 0});
    CHECK(coh::is_coboundary_circle(triv.v).has_value());
    const auto cu = build_u_phi({1, 1}, R);
    const auto dc = decompose(cu, R);
    CHECK(dc.phi == std::vector<std::size_t>{1, 1});
    CHECK(coh::is_coboundary_circle(dc.v).has_value());
  }
  {
    const auto R = verify_representation_group(d8_over_d4());
    const auto& g = R.ext->G();
    for (int k = 0; k < 3; ++k) {
      const auto u = support::random_cocycle(g, 2, 8, rng);
      check(u, decompose(u, R));
    }
  }
}

TEST_CASE("inflate extension") {
  auto d4 = grp::dihedral(4);
  const auto ab = grp::abelianization(d4);
  // Z_4 x Z_2 over Z_2^2: carry cocycle on the first factor.
  const auto& A = ab.ab;
  Cochain carry(ab.group, 2, 1, 2);
  for (Elem s = 1; s < 4; ++s)
    for (Elem t = 1; t < 4; ++t) carry.set(0, s, t, A.coords(s)[0] + A.coords(t)[0] >= 2 ? 1 : 0);
  const auto M = extension_from_cocycle(single(carry, 2));
  const auto I = inflate_extension(M, ab);
  CHECK(I.ext.E()->order() == 16);
  CHECK(I.cocycle_identity);

  // Over an abelian group with q = id the result is M again, up to relabeling.
  auto z24 = grp::make_abelian({2, 4});
  const auto abz = grp::abelianization(z24);
  const auto Mz = extension_from_cocycle(single(product_form(abz.group, 0, 1, 2), 2));
  const auto Iz = inflate_extension(Mz, abz);
  CHECK(Iz.cocycle_identity);
  CHECK(shape(*Iz.ext.E()) == shape(*Mz.E()));

  const auto split = inflate_extension(extension_from_cocycle(ValuedCochain::zero(ab.group, AbelianGroup({2}))), ab);
  CHECK(cocycle_from_extension(split.ext).parts[0].is_zero());
}

TEST_CASE("pushforward") {
  support::Rng rng(18);
  auto g = grp::make_abelian({4, 4});
  const auto R = representation_group_abelian(g);
  const auto& Zg = R.ext->N_group();
  const AbelianGroup N({8, 2});
  auto Ng = grp::make_abelian(N);
  CHECK(pushforward_cocycle(GroupHom::trivial(Zg, Ng), R.mu).parts[0].is_zero());
  CHECK(pushforward_cocycle(GroupHom::identity(Zg), R.mu) == R.mu);
  // Z = Z_4 here; homs Z_4 -> Z_8 x Z_2 are determined by the image of 1.
  std::vector<std::size_t> gens;
  for (std::size_t a = 0; a < N.order(); ++a)
    if (N.scale(a, 4) == 0) gens.push_back(a);
  auto hom = [&](std::size_t a) {
    std::vector<Elem> img(4);
    for (std::size_t z = 0; z < 4; ++z) img[z] = static_cast<Elem>(N.scale(a, static_cast<i64>(z)));
    return GroupHom(Zg, Ng, img);
  };
  for (int k = 0; k < 5; ++k) {
    const auto a = gens[static_cast<std::size_t>(support::uniform(rng, static_cast<i64>(gens.size())))];
    const auto b = gens[static_cast<std::size_t>(support::uniform(rng, static_cast<i64>(gens.size())))];
    const auto pa = pushforward_cocycle(hom(a), R.mu), pb = pushforward_cocycle(hom(b), R.mu);
    const auto pab = pushforward_cocycle(hom(N.add(a, b)), R.mu);
    CHECK(pab.is_cocycle());
    for (std::size_t i = 0; i < N.rank(); ++i) CHECK(coh::multiply(pa.parts[i], pb.parts[i]) == pab.parts[i]);
  }
}

TEST_CASE("prime extension") {
  auto v4 = grp::make_abelian({2, 2});
  const auto R = representation_group_abelian(v4);
  auto verify = [](const PrimeExtension& P) {
    CHECK(P.central);
    CHECK(P.cocycle_matches);
    CHECK(P.product_identity);
    CHECK(P.pointwise_trivial);
    CHECK(pointwise_ext(*P.ext));
  };

  const auto split = prime_extension(extension_from_cocycle(ValuedCochain::zero(v4, AbelianGroup({2}))), R);
  verify(split);
  CHECK(cocycle_from_extension(*split.ext).parts[0].is_zero());

  const auto same = prime_extension(*R.ext, R);
  verify(same);
  CHECK(same.phi_hat.image() == std::vector<Elem>{0, 1});
  CHECK(shape(*same.ext->E()) == shape(*grp::make_abelian({2, 2, 2})));

  const auto R3 = representation_group_abelian(grp::make_abelian({3, 3}));
  const auto heis = prime_extension(extension_from_cocycle(single(product_form(R3.ext->G(), 0, 1, 3), 3)), R3);
  verify(heis);
  CHECK(heis.ext->E()->order() == 27);
  CHECK(shape(*heis.ext->E()) == shape(*grp::make_abelian({3, 3, 3})));

  support::Rng rng(19);
  for (auto g : {grp::make_abelian({2, 4}), grp::make_abelian({2, 2, 2})}) {
    const auto Rg = representation_group_abelian(g);
    for (auto N : {AbelianGroup({4}), AbelianGroup({2, 2})}) {
      const auto P = prime_extension(extension_from_cocycle(random_valued(g, N, rng)), Rg);
      verify(P);
      CHECK(P.ext->E()->is_abelian());
    }
  }
  const auto Rd = verify_representation_group(d8_over_d4());
  const auto Pd = prime_extension(extension_from_cocycle(random_valued(Rd.ext->G(), AbelianGroup({4}), rng)), Rd);
  verify(Pd);
}

TEST_CASE("H2(G,N) splits as abelian part times Hom(Z,N)") {
  auto check = [](const GroupPtr& g, const AbelianGroup& N, const RepresentationGroup& R, i64 expected) {
    const auto d = decompose_h2_group(g, N, R);
    CHECK(d.h2_order == expected);
    CHECK(d.ab_order * d.hom_order == d.h2_order);
    CHECK(d.forward_injective);
    CHECK(d.bijective);
    CHECK(d.roundtrip);
    return d;
  };
  auto v4 = grp::make_abelian({2, 2});
  const auto R = representation_group_abelian(v4);
  // Brute-force count of H^2(Z_2^2, Z_2).
  const auto b = support::brute_h2(v4, 2, 1);
  const auto d = check(v4, AbelianGroup({2}), R, b.order);
  CHECK(d.ab_order == 4);
  CHECK(d.hom_order == 2);

  check(v4, AbelianGroup({4}), R, support::brute_h2(v4, 4, 1).order);
  auto z3 = grp::make_abelian({3, 3});
  const auto d3 = check(z3, AbelianGroup({3}), representation_group_abelian(z3), 27);
  CHECK(d3.hom_order == 3);
  auto z24 = grp::make_abelian({2, 4});
  check(z24, AbelianGroup({2, 2}), representation_group_abelian(z24), coh::h2_mod(z24, 2).order() * coh::h2_mod(z24, 2).order());

  const auto Rd = verify_representation_group(d8_over_d4());
  check(Rd.ext->G(), AbelianGroup({2}), Rd, coh::h2_mod(Rd.ext->G(), 2).order());
}
