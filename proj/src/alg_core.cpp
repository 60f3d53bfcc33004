#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "twistcoh/alg.hpp"
#include "twistcoh/error.hpp"

namespace twistcoh::alg {

using zmod::reduce;

Cx root_of_unity(i64 e, i64 m) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(reduce(e, m)) / static_cast<double>(m);
  return {std::cos(t), std::sin(t)};
}

MonomialStarAlgebra::MonomialStarAlgebra(std::vector<std::size_t> fiber_of, std::size_t fibers, i64 modulus)
    : fiber_(std::move(fiber_of)), basis_(fibers), units_(fibers, kZero), m_(modulus) {
  if (m_ < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  for (std::size_t a = 0; a < fiber_.size(); ++a) {
    if (fiber_[a] >= fibers) throw Error(ErrorCode::InvalidArgument, "fiber index out of range");
    basis_[fiber_[a]].push_back(a);
  }
  const std::size_t n = fiber_.size();
  tgt_.assign(n * n, kZero);
  exp_.assign(n * n, 0);
  star_tgt_.assign(n, kZero);
  star_exp_.assign(n, 0);
  labels.resize(n);
  components.resize(fibers);
}

void MonomialStarAlgebra::set_product(std::size_t a, std::size_t b, std::size_t target, i64 e) {
  tgt_[a * dim() + b] = target;
  exp_[a * dim() + b] = target == kZero ? 0 : reduce(e, m_);
}

void MonomialStarAlgebra::set_star(std::size_t a, std::size_t target, i64 e) {
  star_tgt_[a] = target;
  star_exp_[a] = reduce(e, m_);
}

void MonomialStarAlgebra::derive_unitary_star() {
  for (std::size_t a = 0; a < dim(); ++a) {
    const std::size_t u = units_[fiber_[a]];
    bool found = false;
    for (std::size_t b : basis_[fiber_[a]])
      if (target(a, b) == u) {
        set_star(a, b, -exponent(a, b));
        found = true;
        break;
      }
    if (!found) throw Error(ErrorCode::InvalidArgument, "basis element " + std::to_string(a) + " is not invertible");
  }
}

bool MonomialStarAlgebra::is_commutative() const {
  for (const auto& B : basis_)
    for (std::size_t a : B)
      for (std::size_t b : B)
        if (target(a, b) != target(b, a) || exponent(a, b) != exponent(b, a)) return false;
  return true;
}

MonomialStarAlgebra::Check MonomialStarAlgebra::verify() const {
  Check c{true, true, true};
  for (std::size_t x = 0; x < fibers(); ++x) {
    const auto& B = basis_[x];
    const std::size_t u = units_[x];
    if (u == kZero || fiber_[u] != x) {
      c.unit = false;
    } else {
      for (std::size_t a : B)
        c.unit = c.unit && target(u, a) == a && target(a, u) == a && exponent(u, a) == 0 && exponent(a, u) == 0;
      c.unit = c.unit && star_target(u) == u && star_exponent(u) == 0;
    }
    // Products leave the fiber only through the zero sentinel.
    for (std::size_t a : B)
      for (std::size_t b : B)
        if (target(a, b) != kZero && fiber_[target(a, b)] != x) c.associative = false;
    for (std::size_t a : B)
      for (std::size_t b : B) {
        const std::size_t ab = target(a, b);
        for (std::size_t d : B) {
          const std::size_t bd = target(b, d);
          const std::size_t l = ab == kZero ? kZero : target(ab, d);
          const std::size_t r = bd == kZero ? kZero : target(a, bd);
          if (l != r) {
            c.associative = false;
          } else if (l != kZero &&
                     reduce(exponent(a, b) + exponent(ab, d) - exponent(b, d) - exponent(a, bd), m_) != 0) {
            c.associative = false;
          }
        }
      }
    for (std::size_t a : B) {
      const std::size_t s = star_target(a);
      if (s == kZero || fiber_[s] != x || star_target(s) != a ||
          reduce(-star_exponent(a) + star_exponent(s), m_) != 0) {
        c.involution = false;
        continue;
      }
      for (std::size_t b : B) {
        // (δ_a δ_b)* = δ_b* δ_a*
        const std::size_t ab = target(a, b);
        const std::size_t sb = star_target(b);
        const std::size_t rhs = target(sb, s);
        if (ab == kZero || rhs == kZero) {
          c.involution = c.involution && ab == kZero && rhs == kZero;
          continue;
        }
        const i64 lhs_e = -exponent(a, b) + star_exponent(ab);
        const i64 rhs_e = star_exponent(b) + star_exponent(a) + exponent(sb, s);
        c.involution = c.involution && star_target(ab) == rhs && reduce(lhs_e - rhs_e, m_) == 0;
      }
    }
  }
  return c;
}

std::vector<Cx> MonomialStarAlgebra::multiply(const std::vector<Cx>& x, const std::vector<Cx>& y) const {
  std::vector<Cx> out(dim(), 0.0);
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0.0) continue;
    for (std::size_t b : basis_[fiber_[a]]) {
      if (y[b] == 0.0 || target(a, b) == kZero) continue;
      out[target(a, b)] += x[a] * y[b] * root_of_unity(exponent(a, b), m_);
    }
  }
  return out;
}

std::vector<Cx> MonomialStarAlgebra::star(const std::vector<Cx>& x) const {
  std::vector<Cx> out(dim(), 0.0);
  for (std::size_t a = 0; a < dim(); ++a)
    if (x[a] != 0.0) out[star_target(a)] += std::conj(x[a]) * root_of_unity(star_exponent(a), m_);
  return out;
}

bool MonomialAction::verify(const MonomialStarAlgebra& A) const {
  const std::size_t K = group.order(), n = A.dim();
  if (perm.size() != K || twist.size() != K) return false;
  const i64 L = zmod::lcm(modulus, A.modulus());
  const i64 ka = L / modulus, kb = L / A.modulus();
  for (std::size_t g = 0; g < K; ++g) {
    if (perm[g].size() != n || twist[g].size() != n) return false;
    if (std::set<std::size_t>(perm[g].begin(), perm[g].end()).size() != n) return false;
    for (std::size_t a = 0; a < n; ++a)
      if (A.fiber_of(perm[g][a]) != A.fiber_of(a)) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (perm[0][a] != a || reduce(twist[0][a], modulus) != 0) return false;
  for (std::size_t g = 0; g < K; ++g)
    for (std::size_t h = 0; h < K; ++h) {
      const std::size_t gh = group.add(g, h);
      for (std::size_t a = 0; a < n; ++a) {
        const std::size_t b = perm[h][a];
        if (perm[g][b] != perm[gh][a] || reduce(twist[h][a] + twist[g][b] - twist[gh][a], modulus) != 0) return false;
      }
    }
  for (std::size_t g = 0; g < K; ++g)
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t ga = perm[g][a];
      // α(δ_a*) = α(δ_a)*
      const std::size_t s = A.star_target(a);
      const i64 l = A.star_exponent(a) * kb + twist[g][s] * ka;
      const i64 r = -twist[g][a] * ka + A.star_exponent(ga) * kb;
      if (perm[g][s] != A.star_target(ga) || reduce(l - r, L) != 0) return false;
      for (std::size_t b : A.fiber_basis(A.fiber_of(a))) {
        const std::size_t ab = A.target(a, b), gb = perm[g][b];
        const std::size_t rhs = A.target(ga, gb);
        if ((ab == kZero) != (rhs == kZero)) return false;
        if (ab == kZero) continue;
        const i64 le = A.exponent(a, b) * kb + twist[g][ab] * ka;
        const i64 re = (twist[g][a] + twist[g][b]) * ka + A.exponent(ga, gb) * kb;
        if (perm[g][ab] != rhs || reduce(le - re, L) != 0) return false;
      }
    }
  return true;
}

MapCheck check_monomial_iso(const MonomialStarAlgebra& A, const MonomialStarAlgebra& B, const MonomialMap& f) {
  MapCheck c;
  const std::size_t n = A.dim();
  if (B.dim() != n || f.target.size() != n || f.exp.size() != n) return c;
  c.bijective = std::set<std::size_t>(f.target.begin(), f.target.end()).size() == n &&
                *std::max_element(f.target.begin(), f.target.end()) < n;
  if (!c.bijective) return c;
  const i64 L = zmod::lcm(zmod::lcm(A.modulus(), B.modulus()), f.modulus);
  const i64 ka = L / A.modulus(), kb = L / B.modulus(), kf = L / f.modulus;
  c.multiplicative = c.star = true;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t fa = f.target[a];
    // f(δ_a*) = f(δ_a)*
    const std::size_t s = A.star_target(a);
    const i64 l = A.star_exponent(a) * ka + f.exp[s] * kf;
    const i64 r = -f.exp[a] * kf + B.star_exponent(fa) * kb;
    c.star = c.star && f.target[s] == B.star_target(fa) && reduce(l - r, L) == 0;
    for (std::size_t b = 0; b < n && c.multiplicative; ++b) {
      const std::size_t ab = A.target(a, b), rhs = B.target(fa, f.target[b]);
      if (ab == kZero || rhs == kZero) {
        c.multiplicative = ab == kZero && rhs == kZero;
        continue;
      }
      const i64 le = A.exponent(a, b) * ka + f.exp[ab] * kf;
      const i64 re = (f.exp[a] + f.exp[b]) * kf + B.exponent(fa, f.target[b]) * kb;
      c.multiplicative = f.target[ab] == rhs && reduce(le - re, L) == 0;
    }
  }
  return c;
}

bool check_equivariant(const MonomialAction& a, const MonomialAction& b, const MonomialMap& f) {
  if (a.group.order() != b.group.order()) return false;
  const i64 L = zmod::lcm(zmod::lcm(a.modulus, b.modulus), f.modulus);
  const i64 ka = L / a.modulus, kb = L / b.modulus, kf = L / f.modulus;
  for (std::size_t g = 0; g < a.group.order(); ++g)
    for (std::size_t x = 0; x < f.target.size(); ++x) {
      // f(α_g δ_x) = β_g(f δ_x)
      const std::size_t ax = a.perm[g][x], fx = f.target[x];
      const i64 l = a.twist[g][x] * ka + f.exp[ax] * kf;
      const i64 r = f.exp[x] * kf + b.twist[g][fx] * kb;
      if (f.target[ax] != b.perm[g][fx] || reduce(l - r, L) != 0) return false;
    }
  return true;
}

MonomialMap identity_map(std::size_t n) {
  MonomialMap f;
  f.target.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.target[i] = i;
  f.exp.assign(n, 0);
  return f;
}

i64 character_value(const grp::Abelianization& ab, std::size_t gamma, Elem s) {
  return ab.ab.pairing(gamma, ab.q(s));
}

std::size_t restrict_character(const grp::Abelianization& g_ab, std::size_t gamma, const grp::GroupHom& h,
                               const grp::Abelianization& h_ab) {
  const i64 L = zmod::lcm(g_ab.ab.exponent(), h_ab.ab.exponent());
  const auto& H = *h.source();
  for (std::size_t c = 0; c < h_ab.ab.order(); ++c) {
    bool ok = true;
    for (Elem s = 0; s < H.order() && ok; ++s)
      ok = reduce(character_value(h_ab, c, s) * (L / h_ab.ab.exponent()) -
                      character_value(g_ab, gamma, h(s)) * (L / g_ab.ab.exponent()),
                  L) == 0;
    if (ok) return c;
  }
  throw Error(ErrorCode::Mismatch, "restricted character not found");
}

MonomialStarAlgebra twisted_group_algebra(const GroupPtr& g, const Cochain& omega) {
  if (omega.degree() != 2 || omega.base() != 1 || !omega.group()->same_table(*g))
    throw Error(ErrorCode::InvalidArgument, "twisted group algebra needs a single-point 2-cocycle on G");
  if (!coh::is_cocycle(omega)) throw Error(ErrorCode::NotACocycle, "ω is not a 2-cocycle");
  const std::size_t n = g->order();
  MonomialStarAlgebra A(std::vector<std::size_t>(n, 0), 1, omega.modulus());
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) A.set_product(s, t, g->mul(s, t), omega.at(0, s, t));
    A.set_star(s, g->inv(s), -omega.at(0, s, g->inv(s)));
    A.labels[s] = g->labels().empty() ? std::to_string(s) : g->labels()[s];
  }
  A.set_unit(0, 0);
  std::vector<std::size_t> basis(n);
  for (std::size_t s = 0; s < n; ++s) basis[s] = s;
  A.components[0] = Component{g, omega, basis};
  return A;
}

MonomialAction dual_action(const GroupPtr& g, const std::vector<Elem>& element_of) {
  const auto ab = grp::abelianization(g);
  MonomialAction act;
  act.group = ab.ab;
  act.modulus = ab.ab.exponent();
  const std::size_t K = ab.ab.order(), n = element_of.size();
  act.perm.assign(K, std::vector<std::size_t>(n));
  act.twist.assign(K, std::vector<i64>(n));
  for (std::size_t gam = 0; gam < K; ++gam)
    for (std::size_t a = 0; a < n; ++a) {
      act.perm[gam][a] = a;
      act.twist[gam][a] = reduce(-character_value(ab, gam, element_of[a]), act.modulus);
    }
  return act;
}

FiberedAlgebra crossed_product(const Cochain& u) {
  if (u.degree() != 2) throw Error(ErrorCode::InvalidArgument, "crossed product needs a 2-cocycle");
  if (!coh::is_cocycle(u)) throw Error(ErrorCode::NotACocycle, "u is not a 2-cocycle");
  const auto& g = u.group();
  const std::size_t n = g->order(), X = u.base();
  std::vector<std::size_t> fiber(X * n);
  for (std::size_t i = 0; i < fiber.size(); ++i) fiber[i] = i / n;
  FiberedAlgebra F{MonomialStarAlgebra(fiber, X, u.modulus()), {}};
  auto& A = F.alg;
  std::vector<Elem> element_of(X * n);
  for (std::size_t x = 0; x < X; ++x) {
    std::vector<std::size_t> basis(n);
    for (Elem s = 0; s < n; ++s) {
      const std::size_t a = x * n + s;
      basis[s] = a;
      element_of[a] = s;
      for (Elem t = 0; t < n; ++t) A.set_product(a, x * n + t, x * n + g->mul(s, t), u.at(x, s, t));
      A.set_star(a, x * n + g->inv(s), -u.at(x, s, g->inv(s)));
      A.labels[a] = "(" + std::to_string(x) + "," + (g->labels().empty() ? std::to_string(s) : g->labels()[s]) + ")";
    }
    A.set_unit(x, x * n);
    A.components[x] = Component{g, u.evaluate_at(x), basis};
  }
  // Products across fibers stay at the zero sentinel set by the constructor.
  F.action = dual_action(g, element_of);
  return F;
}

std::vector<std::size_t> i_G(const FiberedAlgebra& A, Elem s) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < A.base(); ++x) {
    const auto& c = A.alg.components[x];
    if (!c) throw Error(ErrorCode::InvalidArgument, "fiber without group structure");
    out.push_back(c->basis[s]);
  }
  return out;
}

std::vector<Cx> i_A(const FiberedAlgebra& A, const std::vector<Cx>& psi) {
  if (psi.size() != A.base()) throw Error(ErrorCode::InvalidArgument, "one value per base point expected");
  std::vector<Cx> out(A.alg.dim(), 0.0);
  for (std::size_t x = 0; x < A.base(); ++x) out[A.alg.unit(x)] = psi[x];
  return out;
}

ExtensionAlgebra group_algebra_of_extension(const ext::CentralExtension& e, double tol) {
  const auto& E = *e.E();
  const auto& G = e.G();
  const auto& N = e.N();
  const std::size_t nE = E.order(), nG = G->order(), nN = N.order();
  const auto& c = e.section();
  const auto eta = ext::cocycle_from_extension(e);

  ExtensionAlgebra out;
  out.group_algebra = twisted_group_algebra(e.E(), Cochain(e.E(), 2, 1, 1));
  const auto& CE = out.group_algebra;
  const i64 expN = N.exponent();

  for (std::size_t chi = 0; chi < nN; ++chi) {
    std::vector<Cx> p(nE, 0.0);
    for (std::size_t n = 0; n < nN; ++n)
      p[e.iota()(static_cast<Elem>(n))] += root_of_unity(-N.pairing(chi, n), expN) / static_cast<double>(nN);
    out.idempotents.push_back(std::move(p));
  }
  auto close = [&](const std::vector<Cx>& a, const std::vector<Cx>& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d <= tol;
  };
  auto delta = [&](Elem x) {
    std::vector<Cx> v(nE, 0.0);
    v[x] = 1.0;
    return v;
  };

  bool ok = true;
  std::vector<Cx> sum(nE, 0.0);
  for (std::size_t i = 0; i < nN; ++i) {
    const auto& p = out.idempotents[i];
    for (std::size_t k = 0; k < nE; ++k) sum[k] += p[k];
    ok = ok && close(CE.star(p), p);
    for (std::size_t j = 0; j < nN; ++j) {
      const auto pq = CE.multiply(p, out.idempotents[j]);
      ok = ok && close(pq, i == j ? p : std::vector<Cx>(nE, 0.0));
    }
    for (Elem x = 0; x < nE; ++x) {
      const auto d = delta(x);
      ok = ok && close(CE.multiply(d, p), CE.multiply(p, d));
    }
    for (std::size_t n = 0; n < nN; ++n) {
      auto rhs = p;
      for (auto& v : rhs) v *= root_of_unity(N.pairing(i, n), expN);
      ok = ok && close(CE.multiply(delta(e.iota()(static_cast<Elem>(n))), p), rhs);
    }
  }
  ok = ok && close(sum, delta(0));
  out.idempotents_ok = ok;

  // Corners: b_s = δ_{c(s)} p_χ at index χ|G| + s.
  std::vector<std::size_t> fiber(nN * nG);
  std::vector<Elem> element_of(nN * nG);
  for (std::size_t i = 0; i < fiber.size(); ++i) {
    fiber[i] = i / nG;
    element_of[i] = static_cast<Elem>(i % nG);
  }
  auto& F = out.fibered;
  F.alg = MonomialStarAlgebra(fiber, nN, expN);
  for (std::size_t chi = 0; chi < nN; ++chi) {
    const std::size_t o = chi * nG;
    for (Elem s = 0; s < nG; ++s) {
      for (Elem t = 0; t < nG; ++t) F.alg.set_product(o + s, o + t, o + G->mul(s, t), N.pairing(chi, eta.at(0, s, t)));
      F.alg.labels[o + s] = "(" + std::to_string(chi) + "," + std::to_string(s) + ")";
    }
    F.alg.set_unit(chi, o);
  }
  F.alg.derive_unitary_star();
  const auto omegas = ext::character_cocycle(eta);
  bool corners = true;
  for (std::size_t chi = 0; chi < nN; ++chi) {
    std::vector<std::size_t> basis(nG);
    for (std::size_t s = 0; s < nG; ++s) basis[s] = chi * nG + s;
    F.alg.components[chi] = Component{G, omegas.evaluate_at(chi), basis};
    // Numerically: b_s b_t = ζ^e b_st inside C[E].
    const auto& p = out.idempotents[chi];
    std::vector<std::vector<Cx>> b(nG);
    for (Elem s = 0; s < nG; ++s) b[s] = CE.multiply(delta(c[s]), p);
    for (Elem s = 0; s < nG && corners; ++s)
      for (Elem t = 0; t < nG && corners; ++t) {
        auto rhs = b[G->mul(s, t)];
        const std::size_t st = F.alg.target(chi * nG + s, chi * nG + t);
        for (auto& v : rhs) v *= root_of_unity(F.alg.exponent(chi * nG + s, chi * nG + t), expN);
        corners = st == chi * nG + G->mul(s, t) && close(CE.multiply(b[s], b[t]), rhs);
      }
    // Exact comparison with C[G, χ∘η].
    const auto T = twisted_group_algebra(G, ext::pairing_cocycle(eta, chi));
    MonomialStarAlgebra corner(std::vector<std::size_t>(nG, 0), 1, expN);
    for (std::size_t s = 0; s < nG; ++s) {
      for (std::size_t t = 0; t < nG; ++t)
        corner.set_product(s, t, F.alg.target(chi * nG + s, chi * nG + t) - chi * nG,
                           F.alg.exponent(chi * nG + s, chi * nG + t));
      corner.set_star(s, F.alg.star_target(chi * nG + s) - chi * nG, F.alg.star_exponent(chi * nG + s));
    }
    corner.set_unit(0, 0);
    corners = corners && check_monomial_iso(corner, T, identity_map(nG)).ok();
  }
  out.corners_ok = corners && F.alg.verify().ok();
  out.dimension_ok = nE == nN * nG && F.alg.dim() == nE;
  F.action = dual_action(G, element_of);
  return out;
}

}  // namespace twistcoh::alg
