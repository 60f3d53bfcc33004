#include <set>

#include "doctest.h"
#include "support.hpp"
#include "twistcoh/bundle.hpp"
#include "twistcoh/error.hpp"

using namespace twistcoh;
using namespace twistcoh::bundle;
using ext::ValuedCochain;

namespace {

Cochain bilinear(const GroupPtr& g, i64 n, std::size_t base) {
  const auto& a = *g->abelian_structure();
  Cochain u(g, 2, base, n);
  for (std::size_t x = 0; x < base; ++x)
    for (Elem s = 1; s < g->order(); ++s)
      for (Elem t = 1; t < g->order(); ++t) u.set(x, s, t, a.coords(s)[0] * a.coords(t)[1]);
  return u;
}

ext::CentralExtension from_scalar(const Cochain& u, i64 d) {
  ValuedCochain v = ValuedCochain::zero(u.group(), grp::AbelianGroup({d}));
  v.parts[0] = u.embedded(d);
  return ext::extension_from_cocycle(v);
}

}  // namespace

TEST_CASE("torsor bundle of the trivial cocycle") {
  auto v4 = grp::make_abelian({2, 2});
  const auto B = build_Zu(Cochain(v4, 2, 3, 2));
  CHECK(B.size() == 12);
  CHECK(B.fiber_size() == 4);
  CHECK(B.verify().ok());
  // Each fiber is exactly the set of homomorphisms G -> Z_{M'}.
  for (std::size_t p = 0; p < B.size(); ++p) CHECK(coh::coboundary(B.points().evaluate_at(p)).is_zero());
  const auto T = trivialization(B);
  CHECK(T.verified);
  CHECK(T.witness.is_zero());
}

TEST_CASE("fiber of Z_2 with u(1,1) = 1") {
  auto z2 = grp::make_abelian({2});
  Cochain u(z2, 2, 1, 2);
  u.set(0, 1, 1, 1);
  const auto B = build_Zu(u);
  CHECK(B.modulus() == 4);
  REQUIRE(B.size() == 2);
  std::set<i64> vals;
  for (std::size_t p = 0; p < 2; ++p) vals.insert(B.points().at(p, 1));
  // Independent oracle: every f(1) in Z_4 with 2 f(1) = 2.
  std::set<i64> brute;
  for (i64 f = 0; f < 4; ++f)
    if ((2 * f) % 4 == 2) brute.insert(f);
  CHECK(vals == brute);
}

TEST_CASE("bundle sizes and invariants on nonabelian groups") {
  support::Rng rng(21);
  for (auto g : {grp::dihedral(4), grp::dihedral(3), grp::heisenberg(3)}) {
    const auto u = support::random_pointwise_trivial(g, 3, rng);
    const auto B = build_Zu(u);
    CHECK(B.size() == 3 * grp::abelianization(g).ab.order());
    const auto c = B.verify();
    CHECK(c.equations);
    CHECK(c.free);
    CHECK(c.transitive);
    CHECK(c.complete);
    std::vector<std::size_t> twist{1, 0, 2};
    for (auto& t : twist) t %= B.fiber_size();
    CHECK(trivialization(B).verified);
    CHECK(trivialization(B, twist).verified);
  }
  auto v4 = grp::make_abelian({2, 2});
  try {
    build_Zu(bilinear(v4, 2, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPointwiseTrivial);
    CHECK(std::string(e.what()).find("{0,1}") != std::string::npos);
  }
}

TEST_CASE("bundle products") {
  support::Rng rng(22);
  auto z4 = grp::make_abelian({4});
  for (int k = 0; k < 3; ++k) {
    const auto u = support::random_cocycle(z4, 3, 4, rng);
    const auto v = support::random_cocycle(z4, 3, 8, rng);
    const auto P = bundle_product(build_Zu(u), build_Zu(v));
    CHECK(P.ok());
    CHECK(P.product.size() == 12);
  }
  auto d4 = grp::dihedral(4);
  const auto u = support::random_pointwise_trivial(d4, 2, rng);
  const auto Bu = build_Zu(u);
  const auto Ptriv = bundle_product(Bu, build_Zu(Cochain(d4, 2, 2, 1)));
  CHECK(Ptriv.ok());
  CHECK(equivariant_bundle_iso(Bu, Ptriv.product).has_value());

  const auto Pinv = bundle_product(Bu, build_Zu(coh::invert(u)));
  CHECK(Pinv.ok());
  // The product is Z of the trivial cocycle, whose zero section trivializes it.
  CHECK(Pinv.product.cocycle().is_zero());
  const auto T = trivialization(Pinv.product);
  CHECK(T.verified);
  CHECK(T.witness.is_zero());
}

TEST_CASE("equivariant isomorphisms between bundles") {
  support::Rng rng(23);
  auto g = grp::make_abelian({2, 4});
  const auto u = support::random_pointwise_trivial(g, 3, rng);
  const auto Bu = build_Zu(u);
  const auto self = equivariant_bundle_iso(Bu, Bu);
  REQUIRE(self.has_value());
  CHECK(self->verified);
  const auto h = support::random_cochain(g, 1, 3, 8, rng);
  const auto v = coh::multiply(coh::coboundary(h), u);
  const auto Bv = build_Zu(v);
  const auto shift = equivariant_bundle_iso(Bu, Bv, h);
  REQUIRE(shift.has_value());
  CHECK(shift->verified);
  // The shift map sends f to f + h(x).
  for (std::size_t p = 0; p < Bu.size(); ++p)
    CHECK(Bv.points().evaluate_at(shift->map[p]) ==
          coh::multiply(Bu.points().evaluate_at(p), h.evaluate_at(Bu.base_of(p))));
  CHECK_THROWS_AS(equivariant_bundle_iso(Bu, Bv, support::random_cochain(g, 1, 3, 8, rng)), Error);

  // Isomorphism exists exactly when the cocycles are cohomologous, for the
  // pointwise-trivial cocycles of the nonabelian D_4 whose classes differ by δ.
  auto d4 = grp::dihedral(4);
  const auto ds = support::delta_cocycles(d4);
  const auto a = build_Zu(Cochain(d4, 2, 1, 8));
  for (const auto& d : ds) {
    const auto b = build_Zu(d);
    const bool cohomologous = coh::is_coboundary_circle(d).has_value();
    CHECK(equivariant_bundle_iso(a, b).has_value() == cohomologous);
  }
  const auto s = support::random_pointwise_trivial(d4, 2, rng);
  const auto t = support::random_pointwise_trivial(d4, 2, rng);
  CHECK(equivariant_bundle_iso(build_Zu(s), build_Zu(t)).has_value() ==
        coh::is_coboundary_circle(coh::multiply(t, coh::invert(s))).has_value());
}

TEST_CASE("psi isomorphism") {
  auto z2 = grp::make_abelian({2});
  auto z4 = grp::make_abelian({4});
  {
    const ext::CentralExtension e(grp::AbelianGroup({2}), z2, z4, grp::GroupHom(z2, z4, {0, 2}),
                                  grp::GroupHom(z4, z2, {0, 1, 0, 1}));
    const auto P = psi_iso(e);
    CHECK(P.bundle.size() == 4);
    CHECK(P.eab.ab.order() == 4);
    CHECK(P.ok());
  }
  {
    auto v4 = grp::make_abelian({2, 2});
    const auto split = from_scalar(Cochain(v4, 2, 1, 2), 2);
    const auto P = psi_iso(split);
    CHECK(P.ok());
    CHECK(P.bundle.size() == 8);
    // On the split extension Ψ(f, χ) is the product character: Ψ(0, χ) kills c(G).
    for (std::size_t chi = 0; chi < 2; ++chi) {
      const auto v = psi_values(split, P.bundle, chi * P.bundle.fiber_size());
      for (Elem s = 0; s < 4; ++s) CHECK(v[split.section()[s]] == P.bundle.points().at(chi * 4, s));
    }
  }
  {
    auto v4 = grp::make_abelian({2, 2});
    CHECK_THROWS_AS(psi_iso(from_scalar(bilinear(v4, 2, 1), 2)), Error);
  }
  support::Rng rng(24);
  for (auto g : {grp::make_abelian({2, 2}), grp::make_abelian({2, 4}), grp::make_abelian({3, 3})}) {
    const auto R = ext::representation_group_abelian(g);
    for (auto N : {grp::AbelianGroup({2}), grp::AbelianGroup({4}), grp::AbelianGroup({3})}) {
      ValuedCochain eta = ValuedCochain::zero(g, N);
      eta.parts[0] = support::random_cocycle(g, 1, N.factors()[0], rng);
      const auto L = ext::prime_extension(ext::extension_from_cocycle(eta), R);
      CHECK(psi_iso(*L.ext).ok());
    }
  }
  const auto Pd = psi_iso(from_scalar(support::random_pointwise_trivial(grp::dihedral(4), 1, rng), 8));
  CHECK(Pd.ok());
}

TEST_CASE("psi is natural under equivalence of extensions") {
  support::Rng rng(25);
  auto d4 = grp::dihedral(4);
  const i64 n = 8;
  const auto u = support::random_pointwise_trivial(d4, 1, rng);
  const auto b = support::random_cochain(d4, 1, 1, n, rng);
  const auto E1 = from_scalar(u, n);
  const auto E2 = from_scalar(coh::multiply(coh::coboundary(b), u), n);
  const auto P1 = psi_iso(E1), P2 = psi_iso(E2);
  REQUIRE(P1.ok());
  REQUIRE(P2.ok());
  // m: E2 -> E1, (k, s) -> (k + b(s), s); Ψ1(f - χ∘b, χ) ∘ m = Ψ2(f, χ).
  auto m = [&](Elem x) { return static_cast<Elem>((x / n) * n + zmod::reduce(x % n + b.at(0, x / n), n)); };
  bool ok = true;
  for (std::size_t p = 0; p < P2.bundle.size(); ++p) {
    const std::size_t chi = P2.bundle.base_of(p);
    Cochain shift(d4, 1, 1, n);
    for (Elem s = 1; s < d4->order(); ++s) shift.set(0, s, -static_cast<i64>(chi) * b.at(0, s));
    const auto q = P1.bundle.find(chi, coh::multiply(P2.bundle.points().evaluate_at(p), shift));
    REQUIRE(q.has_value());
    const auto v1 = psi_values(E1, P1.bundle, *q);
    const auto v2 = psi_values(E2, P2.bundle, p);
    const i64 L = zmod::lcm(P1.bundle.modulus(), P2.bundle.modulus());
    for (Elem x = 0; x < E2.E()->order(); ++x)
      ok = ok && zmod::reduce(v1[m(x)] * (L / P1.bundle.modulus()) - v2[x] * (L / P2.bundle.modulus()), L) == 0;
  }
  CHECK(ok);
}
