#include <set>
#include <string>

#include "twistcoh/alg.hpp"
#include "twistcoh/error.hpp"

namespace twistcoh::alg {

using zmod::reduce;

FiberedAlgebra pull_back_algebra(const std::vector<std::size_t>& phi, const FiberedAlgebra& A) {
  const auto& S = A.alg;
  std::vector<std::size_t> fiber, source;
  std::vector<std::vector<std::size_t>> local(phi.size());  // x -> new indices, aligned with S.fiber_basis(φ(x))
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (phi[x] >= S.fibers()) throw Error(ErrorCode::InvalidArgument, "pull-back map leaves the base");
    for (std::size_t a : S.fiber_basis(phi[x])) {
      local[x].push_back(fiber.size());
      fiber.push_back(x);
      source.push_back(a);
    }
  }
  // Old index -> position inside its fiber.
  std::vector<std::size_t> pos(S.dim());
  for (std::size_t y = 0; y < S.fibers(); ++y)
    for (std::size_t k = 0; k < S.fiber_basis(y).size(); ++k) pos[S.fiber_basis(y)[k]] = k;

  FiberedAlgebra out{MonomialStarAlgebra(fiber, phi.size(), S.modulus()), {}};
  auto& T = out.alg;
  auto lift = [&](std::size_t x, std::size_t old) { return old == kZero ? kZero : local[x][pos[old]]; };
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const std::size_t x = fiber[i], a = source[i];
    for (std::size_t j : local[x]) T.set_product(i, j, lift(x, S.target(a, source[j])), S.exponent(a, source[j]));
    T.set_star(i, lift(x, S.star_target(a)), S.star_exponent(a));
    T.labels[i] = "(" + std::to_string(x) + "," + S.labels[a] + ")";
  }
  for (std::size_t x = 0; x < phi.size(); ++x) {
    T.set_unit(x, lift(x, S.unit(phi[x])));
    if (const auto& c = S.components[phi[x]]) {
      Component d = *c;
      for (auto& b : d.basis) b = lift(x, b);
      T.components[x] = std::move(d);
    }
  }
  out.action.group = A.action.group;
  out.action.modulus = A.action.modulus;
  const std::size_t K = A.action.group.order();
  out.action.perm.assign(K, std::vector<std::size_t>(fiber.size()));
  out.action.twist.assign(K, std::vector<i64>(fiber.size()));
  for (std::size_t g = 0; g < K; ++g)
    for (std::size_t i = 0; i < fiber.size(); ++i) {
      out.action.perm[g][i] = lift(fiber[i], A.action.perm[g][source[i]]);
      out.action.twist[g][i] = A.action.twist[g][source[i]];
    }
  return out;
}

FiberedProduct fibered_product_algebra(const bundle::TorsorBundle& Z, const FiberedAlgebra& A) {
  const auto& S = A.alg;
  const auto& act = A.action;
  if (Z.base() != S.fibers()) throw Error(ErrorCode::InvalidArgument, "bundle and algebra live over different bases");
  if (!(act.group == Z.fiber_group()))
    throw Error(ErrorCode::InvalidArgument, "algebra action and bundle use different groups");
  const std::size_t F = Z.fiber_size();
  const auto& K = Z.fiber_group();
  const i64 L = zmod::lcm(S.modulus(), act.modulus);
  const i64 ks = L / S.modulus(), ka = L / act.modulus;

  FiberedProduct out;
  const auto T = bundle::trivialization(Z);
  out.section = T.section;
  // E_a(γ⁻¹·z_x) = α_γ(δ_a); the point γ·z_x is reached with γ⁻¹ = γ.
  out.values.assign(Z.size(), std::vector<std::pair<i64, std::size_t>>(S.dim(), {0, kZero}));
  for (std::size_t x = 0; x < Z.base(); ++x)
    for (std::size_t g = 0; g < F; ++g) {
      const std::size_t p = Z.act(g, out.section[x]);
      for (std::size_t a : S.fiber_basis(x)) {
        const auto [t, e] = act.apply(K.neg(g), a);
        out.values[p][a] = {e, t};
      }
    }

  // α_γ(F(z)) = F(γ⁻¹·z) at every point.
  out.constraint_ok = true;
  for (std::size_t p = 0; p < Z.size() && out.constraint_ok; ++p)
    for (std::size_t g = 0; g < F && out.constraint_ok; ++g) {
      const std::size_t q = Z.act(K.neg(g), p);
      for (std::size_t a : S.fiber_basis(Z.base_of(p))) {
        const auto [e, t] = out.values[p][a];
        const auto [t2, e2] = act.apply(g, t);
        const auto [eq, tq] = out.values[q][a];
        if (tq != t2 || reduce(e + e2 - eq, act.modulus) != 0) out.constraint_ok = false;
      }
    }

  // Pointwise products: E_a E_b = ζ^{e(a,b)} E_{ab} at every point.
  out.product_ok = true;
  for (std::size_t p = 0; p < Z.size() && out.product_ok; ++p) {
    const auto& B = S.fiber_basis(Z.base_of(p));
    for (std::size_t a : B)
      for (std::size_t b : B) {
        const auto [ea, ta] = out.values[p][a];
        const auto [eb, tb] = out.values[p][b];
        const std::size_t ab = S.target(a, b), v = S.target(ta, tb);
        if ((ab == kZero) != (v == kZero)) {
          out.product_ok = false;
          continue;
        }
        if (ab == kZero) continue;
        const auto [ec, tc] = out.values[p][ab];
        const i64 lhs = (ea + eb) * ka + S.exponent(ta, tb) * ks;
        const i64 rhs = S.exponent(a, b) * ks + ec * ka;
        if (tc != v || reduce(lhs - rhs, L) != 0) out.product_ok = false;
      }
  }

  // (γF)(z) = α_γ(F(z)) again satisfies the constraint and equals ζ^t E_{a'}.
  out.action_ok = true;
  for (std::size_t g = 0; g < F && out.action_ok; ++g)
    for (std::size_t p = 0; p < Z.size() && out.action_ok; ++p)
      for (std::size_t a : S.fiber_basis(Z.base_of(p))) {
        const auto [e, t] = out.values[p][a];
        const auto [t2, e2] = act.apply(g, t);
        const auto [ta, ea] = act.apply(g, a);
        const auto [eb, tb] = out.values[p][ta];
        if (tb != t2 || reduce(e + e2 - ea - eb, act.modulus) != 0) out.action_ok = false;
      }

  // Evaluation at the section identifies (Z∗A)_x with A_x; structure constants carry over.
  out.algebra = A;
  for (std::size_t i = 0; i < S.dim(); ++i) out.algebra.alg.labels[i] = "E" + S.labels[i];
  return out;
}

FiberedProduct induced_algebra(const bundle::TorsorBundle& Z, const FiberedAlgebra& A) {
  if (A.base() != 1) throw Error(ErrorCode::InvalidArgument, "induction starts from a single fiber");
  return fibered_product_algebra(Z, pull_back_algebra(std::vector<std::size_t>(Z.base(), 0), A));
}

FiberedAlgebra tensor_product(const FiberedAlgebra& A, const FiberedAlgebra& B) {
  const auto& P = A.alg;
  const auto& Q = B.alg;
  if (P.fibers() != Q.fibers()) throw Error(ErrorCode::InvalidArgument, "tensor factors over different bases");
  const i64 L = zmod::lcm(P.modulus(), Q.modulus());
  const i64 kp = L / P.modulus(), kq = L / Q.modulus();
  std::vector<std::size_t> fiber;
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  std::vector<std::size_t> first(P.fibers());
  for (std::size_t x = 0; x < P.fibers(); ++x) {
    first[x] = fiber.size();
    for (std::size_t a : P.fiber_basis(x))
      for (std::size_t b : Q.fiber_basis(x)) {
        fiber.push_back(x);
        parts.emplace_back(a, b);
      }
  }
  std::vector<std::size_t> ppos(P.dim()), qpos(Q.dim());
  for (std::size_t x = 0; x < P.fibers(); ++x) {
    for (std::size_t k = 0; k < P.fiber_basis(x).size(); ++k) ppos[P.fiber_basis(x)[k]] = k;
    for (std::size_t k = 0; k < Q.fiber_basis(x).size(); ++k) qpos[Q.fiber_basis(x)[k]] = k;
  }
  auto index = [&](std::size_t x, std::size_t a, std::size_t b) {
    if (a == kZero || b == kZero) return kZero;
    return first[x] + ppos[a] * Q.fiber_basis(x).size() + qpos[b];
  };

  FiberedAlgebra out{MonomialStarAlgebra(fiber, P.fibers(), L), {}};
  auto& T = out.alg;
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    const std::size_t x = fiber[i];
    const auto [a, b] = parts[i];
    for (std::size_t a2 : P.fiber_basis(x))
      for (std::size_t b2 : Q.fiber_basis(x)) {
        const std::size_t j = index(x, a2, b2);
        T.set_product(i, j, index(x, P.target(a, a2), Q.target(b, b2)),
                      P.exponent(a, a2) * kp + Q.exponent(b, b2) * kq);
      }
    T.set_star(i, index(x, P.star_target(a), Q.star_target(b)), P.star_exponent(a) * kp + Q.star_exponent(b) * kq);
    T.labels[i] = P.labels[a] + "⊗" + Q.labels[b];
  }
  for (std::size_t x = 0; x < P.fibers(); ++x) {
    T.set_unit(x, index(x, P.unit(x), Q.unit(x)));
    const auto& cp = P.components[x];
    const auto& cq = Q.components[x];
    if (cp && cq) {
      const auto prod = grp::direct_product(cp->group, cq->group);
      const i64 M = zmod::lcm(cp->omega.modulus(), cq->omega.modulus());
      const auto wp = cp->omega.embedded(M), wq = cq->omega.embedded(M);
      Cochain w(prod.group, 2, 1, M);
      const std::size_t nl = cp->group->order(), nn = cq->group->order();
      std::vector<std::size_t> basis(nl * nn);
      for (Elem l = 0; l < nl; ++l)
        for (Elem n = 0; n < nn; ++n) {
          basis[prod.pair(l, n)] = index(x, cp->basis[l], cq->basis[n]);
          for (Elem l2 = 0; l2 < nl; ++l2)
            for (Elem n2 = 0; n2 < nn; ++n2)
              if (prod.pair(l, n) != 0 && prod.pair(l2, n2) != 0)
                w.set(0, prod.pair(l, n), prod.pair(l2, n2), wp.at(0, l, l2) + wq.at(0, n, n2));
        }
      T.components[x] = Component{prod.group, w, basis};
    }
  }
  // Action of the product group, first factor most significant.
  std::vector<i64> factors = A.action.group.factors();
  factors.insert(factors.end(), B.action.group.factors().begin(), B.action.group.factors().end());
  out.action.group = grp::AbelianGroup(factors);
  const i64 M = zmod::lcm(A.action.modulus, B.action.modulus);
  out.action.modulus = M;
  const std::size_t KA = A.action.group.order(), KB = B.action.group.order();
  out.action.perm.assign(KA * KB, std::vector<std::size_t>(fiber.size()));
  out.action.twist.assign(KA * KB, std::vector<i64>(fiber.size()));
  for (std::size_t g = 0; g < KA; ++g)
    for (std::size_t h = 0; h < KB; ++h)
      for (std::size_t i = 0; i < fiber.size(); ++i) {
        const auto [a, b] = parts[i];
        const auto [ta, ea] = A.action.apply(g, a);
        const auto [tb, eb] = B.action.apply(h, b);
        out.action.perm[g * KB + h][i] = index(fiber[i], ta, tb);
        out.action.twist[g * KB + h][i] = reduce(ea * (M / A.action.modulus) + eb * (M / B.action.modulus), M);
      }
  return out;
}

LemPointwiseReport verify_lem_pointwise(const Cochain& v) {
  const auto& g = v.group();
  if (!g->is_abelian()) throw Error(ErrorCode::InvalidArgument, "the lemma concerns abelian groups");
  LemPointwiseReport r;
  const std::size_t n = g->order();
  r.symmetric = true;
  for (std::size_t x = 0; x < v.base(); ++x)
    for (Elem s = 0; s < n; ++s)
      for (Elem t = 0; t < n; ++t) r.symmetric = r.symmetric && v.at(x, s, t) == v.at(x, t, s);
  const auto A = crossed_product(v);
  r.commutative = A.alg.is_commutative();
  if (!r.symmetric || !r.commutative) return r;

  const auto Z = bundle::build_Zu(v);
  const i64 m = Z.modulus();
  const i64 L = zmod::lcm(zmod::lcm(m, A.alg.modulus()), A.action.modulus);
  const i64 kz = L / m, kalg = L / A.alg.modulus(), kact = L / A.action.modulus;
  // The functional ε_x ⋊ f sends δ_(y,s) to [y = x] ζ^{f(s)}.
  auto value = [&](std::size_t p, std::size_t a) -> std::optional<i64> {
    if (A.alg.fiber_of(a) != Z.base_of(p)) return std::nullopt;
    return Z.points().at(p, static_cast<Elem>(a % n)) * kz;
  };
  r.characters_ok = true;
  std::set<std::pair<std::size_t, std::vector<i64>>> distinct;
  for (std::size_t p = 0; p < Z.size(); ++p) {
    const std::size_t x = Z.base_of(p);
    distinct.insert({x, Z.points().evaluate_at(p).values()});
    for (std::size_t a : A.alg.fiber_basis(x)) {
      const i64 va = *value(p, a);
      const i64 vs = *value(p, A.alg.star_target(a));
      r.characters_ok = r.characters_ok && reduce(A.alg.star_exponent(a) * kalg + vs + va, L) == 0;
      for (std::size_t b : A.alg.fiber_basis(x)) {
        const std::size_t ab = A.alg.target(a, b);
        r.characters_ok = r.characters_ok && reduce(va + *value(p, b) - A.alg.exponent(a, b) * kalg - *value(p, ab), L) == 0;
      }
    }
  }
  r.characters = Z.size();
  // A commutative algebra of this dimension has exactly dim characters.
  r.bijective = r.characters_ok && distinct.size() == Z.size() && Z.size() == A.alg.dim();
  r.equivariant = true;
  const auto& K = Z.fiber_group();
  for (std::size_t p = 0; p < Z.size() && r.equivariant; ++p)
    for (std::size_t g2 = 0; g2 < K.order() && r.equivariant; ++g2) {
      // (γ·χ)(δ) = χ(α_γ⁻¹ δ) is the character at γ·(f, x).
      const std::size_t q = Z.act(g2, p);
      for (std::size_t a : A.alg.fiber_basis(Z.base_of(p))) {
        const auto [t, e] = A.action.apply(K.neg(g2), a);
        r.equivariant = r.equivariant && reduce(e * kact + *value(p, t) - *value(q, a), L) == 0;
      }
    }
  return r;
}

namespace {

struct Split {
  grp::Abelianization ab, lab, nab;
  std::vector<std::size_t> to_l, to_n;  // γ -> restrictions
};

Split split_characters(const grp::ProductGroup& P) {
  Split s{grp::abelianization(P.group), grp::abelianization(P.proj1.target()), grp::abelianization(P.proj2.target()), {}, {}};
  for (std::size_t g = 0; g < s.ab.ab.order(); ++g) {
    s.to_l.push_back(restrict_character(s.ab, g, P.incl1, s.lab));
    s.to_n.push_back(restrict_character(s.ab, g, P.incl2, s.nab));
  }
  return s;
}

}  // namespace

DecomReport verify_prop_decom(const grp::ProductGroup& P, const Cochain& u) {
  if (!u.group()->same_table(*P.group)) throw Error(ErrorCode::InvalidArgument, "u must live on L × N");
  const auto& Lg = P.proj1.target();
  const auto& Ng = P.proj2.target();
  const std::size_t nl = Lg->order(), nn = Ng->order(), X = u.base();
  const i64 M = u.modulus();
  auto el = [&](Elem l) { return P.pair(l, 0); };
  auto en = [&](Elem n) { return P.pair(0, n); };
  auto beta = [&](std::size_t x, Elem l, Elem n) { return reduce(u.at(x, el(l), en(n)) - u.at(x, en(n), el(l)), M); };
  auto w = [&](std::size_t x, Elem l, Elem h) { return u.at(x, el(l), el(h)); };
  auto uN = [&](std::size_t x, Elem n, Elem m) { return u.at(x, en(n), en(m)); };

  DecomReport r;
  r.twisted_action = true;
  for (std::size_t x = 0; x < X; ++x)
    for (Elem l = 0; l < nl; ++l)
      for (Elem n = 0; n < nn; ++n) {
        for (Elem m = 0; m < nn; ++m)  // β_l is multiplicative on C[N, u_N]
          r.twisted_action = r.twisted_action && reduce(beta(x, l, n) + beta(x, l, m) - beta(x, l, Ng->mul(n, m)), M) == 0;
        for (Elem h = 0; h < nl; ++h)  // β_l β_h = β_lh (w is central)
          r.twisted_action = r.twisted_action && reduce(beta(x, l, n) + beta(x, h, n) - beta(x, Lg->mul(l, h), n), M) == 0;
      }
  for (std::size_t x = 0; x < X; ++x)
    for (Elem a = 0; a < nl; ++a)
      for (Elem b = 0; b < nl; ++b)
        for (Elem c = 0; c < nl; ++c)
          r.twisted_action = r.twisted_action &&
                             reduce(w(x, a, b) + w(x, Lg->mul(a, b), c) - w(x, b, c) - w(x, a, Lg->mul(b, c)), M) == 0;

  // Iterated algebra, basis (x, n, l) at (x|N| + n)|L| + l.
  std::vector<std::size_t> fiber(X * nn * nl);
  for (std::size_t i = 0; i < fiber.size(); ++i) fiber[i] = i / (nn * nl);
  MonomialStarAlgebra I(fiber, X, M);
  auto idx = [&](std::size_t x, Elem n, Elem l) { return (x * nn + n) * nl + l; };
  for (std::size_t x = 0; x < X; ++x) {
    for (Elem n = 0; n < nn; ++n)
      for (Elem l = 0; l < nl; ++l) {
        I.labels[idx(x, n, l)] = "(" + std::to_string(x) + "," + std::to_string(n) + "," + std::to_string(l) + ")";
        for (Elem m = 0; m < nn; ++m)
          for (Elem h = 0; h < nl; ++h)
            I.set_product(idx(x, n, l), idx(x, m, h), idx(x, Ng->mul(n, m), Lg->mul(l, h)),
                          uN(x, n, m) + beta(x, l, m) + w(x, l, h));
      }
    I.set_unit(x, idx(x, 0, 0));
  }
  I.derive_unitary_star();
  const auto left = crossed_product(u);
  for (std::size_t x = 0; x < X; ++x) {
    auto c = *left.alg.components[x];
    std::vector<std::size_t> basis(P.group->order());
    for (Elem l = 0; l < nl; ++l)
      for (Elem n = 0; n < nn; ++n) basis[P.pair(l, n)] = idx(x, n, l);
    c.basis = basis;
    I.components[x] = c;
  }
  r.algebra_ok = I.verify().ok();

  MonomialMap phi;
  phi.modulus = M;
  phi.target.resize(left.alg.dim());
  phi.exp.resize(left.alg.dim());
  const std::size_t n = P.group->order();
  for (std::size_t x = 0; x < X; ++x)
    for (Elem l = 0; l < nl; ++l)
      for (Elem m = 0; m < nn; ++m) {
        const std::size_t a = x * n + P.pair(l, m);
        phi.target[a] = idx(x, m, l);
        phi.exp[a] = reduce(-u.at(x, en(m), el(l)), M);
      }
  r.isomorphism = check_monomial_iso(left.alg, I, phi).ok();

  // L̂_ab × N̂_ab acts by γ_N on δ_n and γ_L on u_l.
  const auto sp = split_characters(P);
  MonomialAction act;
  act.group = left.action.group;
  act.modulus = zmod::lcm(sp.lab.ab.exponent(), sp.nab.ab.exponent());
  const i64 kl = act.modulus / sp.lab.ab.exponent(), kn = act.modulus / sp.nab.ab.exponent();
  act.perm.assign(act.group.order(), std::vector<std::size_t>(I.dim()));
  act.twist.assign(act.group.order(), std::vector<i64>(I.dim()));
  for (std::size_t g = 0; g < act.group.order(); ++g)
    for (std::size_t x = 0; x < X; ++x)
      for (Elem m = 0; m < nn; ++m)
        for (Elem l = 0; l < nl; ++l) {
          const std::size_t i = idx(x, m, l);
          act.perm[g][i] = i;
          act.twist[g][i] = reduce(-character_value(sp.lab, sp.to_l[g], l) * kl - character_value(sp.nab, sp.to_n[g], m) * kn,
                                   act.modulus);
        }
  r.equivariant = act.verify(I) && check_equivariant(left.action, act, phi);
  return r;
}

DecomReport verify_prop_decom1(const grp::ProductGroup& P, const Cochain& u, const Cochain& v) {
  if (u.base() != v.base()) throw Error(ErrorCode::InvalidArgument, "u and v need the same base");
  const auto& Lg = P.proj1.target();
  const auto& Ng = P.proj2.target();
  if (!u.group()->same_table(*Lg) || !v.group()->same_table(*Ng))
    throw Error(ErrorCode::InvalidArgument, "u must live on L and v on N");
  const std::size_t X = u.base(), nl = Lg->order(), nn = Ng->order(), n = P.group->order();
  const i64 M = zmod::lcm(u.modulus(), v.modulus());
  const auto ue = u.embedded(M), ve = v.embedded(M);
  Cochain uv(P.group, 2, X, M);
  for (std::size_t x = 0; x < X; ++x)
    for (Elem l = 0; l < nl; ++l)
      for (Elem a = 0; a < nn; ++a)
        for (Elem h = 0; h < nl; ++h)
          for (Elem b = 0; b < nn; ++b)
            if (P.pair(l, a) != 0 && P.pair(h, b) != 0)
              uv.set(x, P.pair(l, a), P.pair(h, b), ue.at(x, l, h) + ve.at(x, a, b));

  DecomReport r;
  r.twisted_action = coh::is_cocycle(uv);
  const auto left = crossed_product(uv);
  const auto right = tensor_product(crossed_product(u), crossed_product(v));
  r.algebra_ok = right.alg.verify().ok() && right.action.verify(right.alg);

  // Kronecker map δ_(x,(l,n)) -> δ_(x,l) ⊗ δ_(x,n).
  MonomialMap k;
  k.modulus = M;
  k.target.resize(left.alg.dim());
  k.exp.assign(left.alg.dim(), 0);
  for (std::size_t x = 0; x < X; ++x)
    for (Elem l = 0; l < nl; ++l)
      for (Elem a = 0; a < nn; ++a) k.target[x * n + P.pair(l, a)] = x * n + l * nn + a;
  r.isomorphism = check_monomial_iso(left.alg, right.alg, k).ok();

  // γ in the dual of (L × N)_ab goes to its pair of restrictions.
  const auto sp = split_characters(P);
  MonomialAction act;
  act.group = left.action.group;
  act.modulus = right.action.modulus;
  const std::size_t KN = sp.nab.ab.order();
  for (std::size_t g = 0; g < act.group.order(); ++g) {
    const std::size_t h = sp.to_l[g] * KN + sp.to_n[g];
    act.perm.push_back(right.action.perm[h]);
    act.twist.push_back(right.action.twist[h]);
  }
  r.equivariant = check_equivariant(left.action, act, k);
  return r;
}

}  // namespace twistcoh::alg
