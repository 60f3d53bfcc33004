#pragma once
// Random generators and brute-force oracles shared by the test suites.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "twistcoh/coh.hpp"
#include "twistcoh/ext.hpp"
#include "twistcoh/grp.hpp"
#include "twistcoh/zmod.hpp"

namespace support {

using twistcoh::coh::Cochain;
using twistcoh::grp::Elem;
using twistcoh::grp::GroupPtr;
using i64 = std::int64_t;
using Rng = std::mt19937_64;

inline i64 uniform(Rng& rng, i64 m) { return static_cast<i64>(rng() % static_cast<std::uint64_t>(m)); }

inline Cochain random_cochain(const GroupPtr& g, int deg, std::size_t base, i64 M, Rng& rng) {
  Cochain c(g, deg, base, M);
  const std::size_t n = g->order();
  for (std::size_t x = 0; x < base; ++x) {
    if (deg == 0) c.set(x, uniform(rng, M));
    if (deg == 1)
      for (Elem s = 1; s < n; ++s) c.set(x, s, uniform(rng, M));
    if (deg == 2)
      for (Elem s = 1; s < n; ++s)
        for (Elem t = 1; t < n; ++t) c.set(x, s, t, uniform(rng, M));
  }
  return c;
}

// Random cocycle: a random coboundary times random multiples of the H^2(G,Z_M)
// representatives, independently per base point.
inline Cochain random_cocycle(const GroupPtr& g, std::size_t base, i64 M, Rng& rng) {
  const auto h = twistcoh::coh::h2_mod(g, M);
  Cochain u = twistcoh::coh::coboundary(random_cochain(g, 1, base, M, rng));
  for (std::size_t x = 0; x < base; ++x) {
    std::vector<i64> c(h.invariants().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = uniform(rng, h.invariants()[i]);
    const Cochain w = h.cocycle(c);
    for (std::size_t i = 0; i < w.stride(); ++i) {
      auto& v = u.values_mut()[x * u.stride() + i];
      v = twistcoh::zmod::reduce(v + w.values()[i], M);
    }
  }
  return u;
}

// δ(γ) cocycles at modulus |G| for a basis of the dual of G_ab.
inline std::vector<Cochain> delta_cocycles(const GroupPtr& g) {
  const auto ab = twistcoh::grp::abelianization(g);
  const i64 m = static_cast<i64>(g->order());
  std::vector<Cochain> out;
  for (std::size_t j = 0; j < ab.ab.rank(); ++j) {
    std::vector<i64> ej(ab.ab.rank(), 0);
    ej[j] = 1;
    const auto gamma = ab.ab.index(ej);
    Cochain d(g, 2, 1, m);
    for (Elem s = 1; s < g->order(); ++s)
      for (Elem t = 1; t < g->order(); ++t) {
        auto tl = [&](Elem a) { return ab.ab.pairing(gamma, ab.q(a)) * (m / ab.ab.exponent()); };
        d.set(0, s, t, (tl(s) + tl(t) - tl(g->mul(s, t))) / m);
      }
    out.push_back(d);
  }
  return out;
}

// Pointwise trivial but in general not a coboundary over Z_|G|: random
// coboundary plus random multiples of δ(γ) classes, per base point.
inline Cochain random_pointwise_trivial(const GroupPtr& g, std::size_t base, Rng& rng) {
  const i64 m = static_cast<i64>(g->order());
  const auto ds = delta_cocycles(g);
  Cochain u = twistcoh::coh::coboundary(random_cochain(g, 1, base, m, rng));
  for (std::size_t x = 0; x < base; ++x)
    for (const auto& d : ds) {
      const i64 a = uniform(rng, m);
      for (std::size_t i = 0; i < d.stride(); ++i) {
        auto& v = u.values_mut()[x * u.stride() + i];
        v = twistcoh::zmod::reduce(v + a * d.values()[i], m);
      }
    }
  return u;
}

// Brute-force H^2(G, Z_M): counts[k-1] = #{classes c : k c = 0} for k = 1..kmax,
// and the order. Enumerates every normalized 2-cochain.
struct BruteH2 {
  i64 order = 0;
  std::vector<i64> killed;  // by k = 1..kmax
};

inline BruteH2 brute_h2(const GroupPtr& g, i64 M, i64 kmax) {
  const std::size_t n = g->order();
  const std::size_t vars = (n - 1) * (n - 1);
  auto idx = [&](Elem s, Elem t) { return (s - 1) * (n - 1) + (t - 1); };
  auto val = [&](const std::vector<i64>& u, Elem s, Elem t) -> i64 {
    return (s == 0 || t == 0) ? 0 : u[idx(s, t)];
  };
  std::set<std::vector<i64>> bnd;
  {
    std::vector<i64> f(n, 0);
    for (;;) {
      std::vector<i64> u(vars);
      for (Elem s = 1; s < n; ++s)
        for (Elem t = 1; t < n; ++t)
          u[idx(s, t)] = twistcoh::zmod::reduce(f[s] + f[t] - f[g->mul(s, t)], M);
      bnd.insert(u);
      std::size_t i = 1;
      while (i < n && ++f[i] == M) f[i++] = 0;
      if (i == n) break;
    }
  }
  std::vector<std::vector<i64>> cocycles;
  std::vector<i64> u(vars, 0);
  for (;;) {
    bool ok = true;
    for (Elem r = 1; r < n && ok; ++r)
      for (Elem s = 1; s < n && ok; ++s)
        for (Elem t = 1; t < n && ok; ++t)
          ok = twistcoh::zmod::reduce(val(u, s, t) - val(u, g->mul(r, s), t) +
                                          val(u, r, g->mul(s, t)) - val(u, r, s), M) == 0;
    if (ok) cocycles.push_back(u);
    std::size_t i = 0;
    while (i < vars && ++u[i] == M) u[i++] = 0;
    if (i == vars) break;
  }
  BruteH2 out;
  out.order = static_cast<i64>(cocycles.size() / bnd.size());
  // Each class has |B| members; count cocycles killed by k, divide by |B|.
  for (i64 k = 1; k <= kmax; ++k) {
    i64 c = 0;
    for (const auto& z : cocycles) {
      std::vector<i64> w(z.size());
      for (std::size_t i = 0; i < z.size(); ++i) w[i] = twistcoh::zmod::reduce(k * z[i], M);
      if (bnd.count(w)) ++c;
    }
    out.killed.push_back(c / static_cast<i64>(bnd.size()));
  }
  return out;
}

// #{x : k x = 0} in the direct sum of Z_d for d in invariants.
inline i64 killed_by(const std::vector<i64>& inv, i64 k) {
  i64 c = 1;
  for (i64 d : inv) c *= twistcoh::zmod::gcd(k, d);
  return c;
}

// All divisibility chains d1 | d2 | ... with d1 >= 2 and product <= limit.
inline void abelian_chains(i64 limit, std::vector<i64>& cur, std::vector<std::vector<i64>>& out) {
  out.push_back(cur);
  i64 prod = 1;
  for (i64 d : cur) prod *= d;
  const i64 start = cur.empty() ? 2 : cur.back();
  for (i64 d = start; prod * d <= limit; d += (cur.empty() ? 1 : cur.back()))
    if (cur.empty() || d % cur.back() == 0) {
      cur.push_back(d);
      abelian_chains(limit, cur, out);
      cur.pop_back();
    }
}

// Standard small central extensions.
inline twistcoh::ext::CentralExtension z4_over_z2() {
  using namespace twistcoh;
  auto z4 = grp::make_abelian({4});
  auto z2 = grp::make_abelian({2});
  return ext::CentralExtension(grp::AbelianGroup({2}), z2, z4, grp::GroupHom(z2, z4, {0, 2}),
                               grp::GroupHom(z4, z2, {0, 1, 0, 1}));
}

// A group modulo its (cyclic, prime order p) center.
inline twistcoh::ext::CentralExtension over_center(const GroupPtr& e, i64 p) {
  using namespace twistcoh;
  const auto z = e->center();
  auto Q = grp::quotient(e, z);
  auto zg = grp::make_abelian({p});
  // Images of 0..p-1: powers of a generator of the center.
  std::vector<Elem> img{0};
  for (i64 k = 1; k < p; ++k) img.push_back(e->mul(img.back(), z[1]));
  return ext::CentralExtension(grp::AbelianGroup({p}), Q.group, e, grp::GroupHom(zg, e, img), Q.hom);
}

// Z_2 x G -> G.
inline twistcoh::ext::CentralExtension split_z2(const GroupPtr& g) {
  using namespace twistcoh;
  auto z2 = grp::make_abelian({2});
  const auto P = grp::direct_product(g, z2);
  return ext::CentralExtension(grp::AbelianGroup({2}), g, P.group, P.incl2, P.proj1);
}

// a_i b_j on an abelian group, valued in Z_n.
inline Cochain product_form(const GroupPtr& g, std::size_t i, std::size_t j, i64 n, std::size_t base = 1) {
  const auto& a = *g->abelian_structure();
  Cochain u(g, 2, base, n);
  for (std::size_t x = 0; x < base; ++x)
    for (Elem s = 1; s < g->order(); ++s)
      for (Elem t = 1; t < g->order(); ++t) u.set(x, s, t, a.coords(s)[i] * a.coords(t)[j]);
  return u;
}

}  // namespace support
