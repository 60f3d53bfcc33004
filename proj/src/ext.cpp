#include "twistcoh/ext.hpp"

#include <algorithm>
#include <set>

#include "twistcoh/error.hpp"

namespace twistcoh::ext {

using zmod::reduce;

namespace {

// Coordinate i of a character value v in Z_{e} restricted to an element of
// order dividing d: the integer c with c/d = v/e in Q/Z.
i64 rescale(i64 v, i64 e, i64 d) {
  const i64 num = v * d;
  if (num % e != 0) throw Error(ErrorCode::Mismatch, "character value of unexpected order");
  return reduce(num / e, d);
}

std::vector<i64> unit(std::size_t r, std::size_t i) {
  std::vector<i64> e(r, 0);
  e[i] = 1;
  return e;
}

}  // namespace

// ---------------------------------------------------------------- ValuedCochain

ValuedCochain ValuedCochain::zero(GroupPtr g, AbelianGroup N, int degree, std::size_t base) {
  ValuedCochain v;
  for (i64 d : N.factors()) v.parts.emplace_back(g, degree, base, d);
  v.N = std::move(N);
  v.group = std::move(g);
  v.base = base;
  return v;
}

std::size_t ValuedCochain::at(std::size_t x, Elem s, Elem t) const {
  std::vector<i64> c(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) c[i] = parts[i].at(x, s, t);
  return N.index(c);
}

void ValuedCochain::set(std::size_t x, Elem s, Elem t, std::size_t n) {
  const auto c = N.coords(n);
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i].set(x, s, t, c[i]);
}

bool ValuedCochain::is_cocycle() const {
  return std::all_of(parts.begin(), parts.end(), [](const Cochain& c) { return coh::is_cocycle(c); });
}

bool ValuedCochain::operator==(const ValuedCochain& o) const {
  if (!(N == o.N) || parts.size() != o.parts.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!(parts[i] == o.parts[i])) return false;
  return true;
}

// ---------------------------------------------------------------- CentralExtension

CentralExtension::CentralExtension(AbelianGroup N, GroupPtr G, GroupPtr E, GroupHom iota, GroupHom p,
                                   std::vector<Elem> section)
    : N_(std::move(N)), G_(std::move(G)), E_(std::move(E)), iota_(std::move(iota)), p_(std::move(p)),
      c_(std::move(section)) {
  Ng_ = iota_.source();
  if (!Ng_->abelian_structure() || !(*Ng_->abelian_structure() == N_))
    throw Error(ErrorCode::InvalidExtension, "ι source is not the stated N");
  if (iota_.target() != E_ && !iota_.target()->same_table(*E_))
    throw Error(ErrorCode::InvalidExtension, "ι does not land in E");
  if (!p_.source()->same_table(*E_) || !p_.target()->same_table(*G_))
    throw Error(ErrorCode::InvalidExtension, "p is not a map E -> G");
  if (!iota_.injective()) throw Error(ErrorCode::InvalidExtension, "ι is not injective");
  if (!p_.surjective()) throw Error(ErrorCode::InvalidExtension, "p is not surjective");
  const auto& e = *E_;
  iota_inv_.assign(e.order(), static_cast<std::size_t>(-1));
  for (std::size_t n = 0; n < N_.order(); ++n) {
    const Elem x = iota_(static_cast<Elem>(n));
    iota_inv_[x] = n;
    if (p_(x) != 0) throw Error(ErrorCode::InvalidExtension, "p∘ι is not trivial");
    for (Elem y = 0; y < e.order(); ++y)
      if (!e.commute(x, y)) throw Error(ErrorCode::InvalidExtension, "ι(N) is not central");
  }
  if (p_.kernel().size() != N_.order()) throw Error(ErrorCode::InvalidExtension, "ker p differs from ι(N)");
  if (c_.empty()) {
    c_.assign(G_->order(), static_cast<Elem>(e.order()));
    for (Elem x = static_cast<Elem>(e.order()); x-- > 0;) c_[p_(x)] = x;
  }
  if (c_.size() != G_->order()) throw Error(ErrorCode::InvalidExtension, "section has wrong length");
  if (c_[0] != 0) throw Error(ErrorCode::InvalidExtension, "section must send e to e");
  for (Elem s = 0; s < G_->order(); ++s)
    if (c_[s] >= e.order() || p_(c_[s]) != s) throw Error(ErrorCode::InvalidExtension, "p∘c is not the identity");
}

std::size_t CentralExtension::n_of(Elem e) const {
  const std::size_t n = iota_inv_.at(e);
  if (n == static_cast<std::size_t>(-1)) throw Error(ErrorCode::InvalidArgument, "element not in ι(N)");
  return n;
}

CentralExtension extension_from_cocycle(const ValuedCochain& eta) {
  if (!eta.is_cocycle()) throw Error(ErrorCode::NotACocycle, "η is not a normalized 2-cocycle");
  if (eta.base != 1) throw Error(ErrorCode::InvalidArgument, "η must live over a single point");
  const auto& G = *eta.group;
  const std::size_t g = G.order(), k = eta.N.order(), n = g * k;
  // (s, a) at index s|N| + a; (s,a)(t,b) = (st, a + b + η(s,t)).
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem s = static_cast<Elem>(x / k);
    const std::size_t a = x % k;
    labels[x] = "[" + G.labels()[s] + ";" + std::to_string(a) + "]";
    for (std::size_t y = 0; y < n; ++y) {
      const Elem t = static_cast<Elem>(y / k);
      const std::size_t b = y % k;
      const std::size_t c = eta.N.add(eta.N.add(a, b), eta.at(0, s, t));
      mul[x * n + y] = static_cast<Elem>(G.mul(s, t) * k + c);
    }
  }
  auto E = std::make_shared<const grp::FiniteGroup>(grp::FiniteGroup::constructed(n, std::move(mul), std::move(labels)));
  auto Ng = grp::make_abelian(eta.N);
  std::vector<Elem> iota(k), p(n), c(g);
  for (std::size_t a = 0; a < k; ++a) iota[a] = static_cast<Elem>(a);
  for (std::size_t x = 0; x < n; ++x) p[x] = static_cast<Elem>(x / k);
  for (std::size_t s = 0; s < g; ++s) c[s] = static_cast<Elem>(s * k);
  return CentralExtension(eta.N, eta.group, E, GroupHom(Ng, E, std::move(iota)), GroupHom(E, eta.group, std::move(p)),
                          std::move(c));
}

ValuedCochain cocycle_from_extension(const CentralExtension& e) {
  const auto& G = *e.G();
  const auto& E = *e.E();
  const auto& c = e.section();
  ValuedCochain eta = ValuedCochain::zero(e.G(), e.N());
  for (Elem s = 1; s < G.order(); ++s)
    for (Elem t = 1; t < G.order(); ++t)
      eta.set(0, s, t, e.n_of(E.mul(E.mul(c[s], c[t]), E.inv(c[G.mul(s, t)]))));
  return eta;
}

Cochain pairing_cocycle(const ValuedCochain& eta, std::size_t chi) {
  const std::size_t n = eta.group->order();
  Cochain u(eta.group, 2, eta.base, eta.N.exponent());
  for (std::size_t x = 0; x < eta.base; ++x)
    for (Elem s = 1; s < n; ++s)
      for (Elem t = 1; t < n; ++t) u.set(x, s, t, eta.N.pairing(chi, eta.at(x, s, t)));
  return u;
}

Cochain character_cocycle(const ValuedCochain& eta) {
  if (eta.base != 1) throw Error(ErrorCode::InvalidArgument, "η must live over a single point");
  const std::size_t n = eta.group->order(), k = eta.N.order();
  Cochain u(eta.group, 2, k, eta.N.exponent());
  for (Elem s = 1; s < n; ++s)
    for (Elem t = 1; t < n; ++t) {
      const std::size_t v = eta.at(0, s, t);
      for (std::size_t chi = 0; chi < k; ++chi) u.set(chi, s, t, eta.N.pairing(chi, v));
    }
  return u;
}

std::vector<i64> transgression(const CentralExtension& e, std::size_t chi, const coh::H2Circle& h2) {
  return h2.class_of(pairing_cocycle(cocycle_from_extension(e), chi));
}

PointwiseExtension is_pointwise_trivial_extension(const CentralExtension& e) {
  PointwiseExtension r;
  r.eab = grp::abelianization(e.E());
  const auto& Eab = r.eab.ab;
  const auto& N = e.N();
  r.restriction.resize(Eab.order());
  r.extending.assign(N.order(), std::nullopt);
  for (std::size_t psi = 0; psi < Eab.order(); ++psi) {
    std::vector<i64> chi(N.rank());
    for (std::size_t i = 0; i < N.rank(); ++i) {
      const Elem ni = e.iota()(static_cast<Elem>(N.index(unit(N.rank(), i))));
      chi[i] = rescale(Eab.pairing(psi, r.eab.q(ni)), Eab.exponent(), N.factors()[i]);
    }
    const std::size_t c = N.index(chi);
    r.restriction[psi] = c;
    if (!r.extending[c]) r.extending[c] = psi;
  }
  r.pointwise_trivial = std::all_of(r.extending.begin(), r.extending.end(), [](const auto& o) { return o.has_value(); });
  r.cocycle_route = coh::pointwise_trivial(character_cocycle(cocycle_from_extension(e))).failing.empty();
  return r;
}

// ---------------------------------------------------------------- representation groups

std::size_t RepresentationGroup::zeta_of(const std::vector<i64>& coords) const {
  auto it = inverse.find(coords);
  if (it == inverse.end()) throw Error(ErrorCode::NoClassFound, "class not in the transgression image");
  return it->second;
}

RepresentationGroup verify_representation_group(const CentralExtension& e) {
  RepresentationGroup R;
  R.ext = std::make_shared<const CentralExtension>(e);
  R.mu = cocycle_from_extension(e);
  R.h2 = std::make_shared<const coh::H2Circle>(e.G());
  R.tg = R.h2->class_of_each(character_cocycle(R.mu));
  const auto& Z = e.N();
  for (std::size_t z = 0; z < Z.order(); ++z) R.inverse.emplace(R.tg[z], z);
  if (R.inverse.size() != Z.order() || static_cast<i64>(Z.order()) != R.h2->order())
    throw Error(ErrorCode::TransgressionNotBijective,
                "|Ẑ| = " + std::to_string(Z.order()) + ", image size " + std::to_string(R.inverse.size()) +
                    ", |H²(G,T)| = " + std::to_string(R.h2->order()));
  // Homomorphism check on all pairs.
  const auto& inv = R.h2->invariants();
  for (std::size_t a = 0; a < Z.order(); ++a)
    for (std::size_t b = 0; b < Z.order(); ++b) {
      const auto& ta = R.tg[a];
      const auto& tb = R.tg[b];
      const auto& tab = R.tg[Z.add(a, b)];
      for (std::size_t i = 0; i < inv.size(); ++i)
        if (reduce(ta[i] + tb[i] - tab[i], inv[i]) != 0)
          throw Error(ErrorCode::TransgressionNotBijective, "transgression is not a homomorphism");
    }
  return R;
}

RepresentationGroup representation_group_abelian(const GroupPtr& G) {
  if (!G->abelian_structure()) throw Error(ErrorCode::InvalidArgument, "representation_group_abelian needs an abelian group");
  const auto& d = G->abelian_structure()->factors();
  const auto& A = *G->abelian_structure();
  std::vector<i64> zf;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const i64 g = zmod::gcd(d[i], d[j]);
      if (g > 1) {
        zf.push_back(g);
        pairs.emplace_back(i, j);
      }
    }
  AbelianGroup Z(zf);
  ValuedCochain mu = ValuedCochain::zero(G, Z);
  for (Elem s = 1; s < G->order(); ++s)
    for (Elem t = 1; t < G->order(); ++t) {
      const auto a = A.coords(s), b = A.coords(t);
      std::vector<i64> v(pairs.size());
      for (std::size_t k = 0; k < pairs.size(); ++k) v[k] = a[pairs[k].first] * b[pairs[k].second];
      mu.set(0, s, t, Z.index(v));
    }
  return verify_representation_group(extension_from_cocycle(mu));
}

std::vector<std::size_t> classify_cocycle(const Cochain& u, const RepresentationGroup& R) {
  const auto classes = R.h2->class_of_each(u);
  std::vector<std::size_t> phi(u.base());
  for (std::size_t x = 0; x < u.base(); ++x) phi[x] = R.zeta_of(classes[x]);
  return phi;
}

Cochain build_u_phi(const std::vector<std::size_t>& phi, const RepresentationGroup& R) {
  const auto& Z = R.Z();
  const GroupPtr& G = R.ext->G();
  Cochain u(G, 2, phi.size(), Z.exponent());
  for (std::size_t x = 0; x < phi.size(); ++x)
    for (Elem s = 1; s < G->order(); ++s)
      for (Elem t = 1; t < G->order(); ++t) u.set(x, s, t, Z.pairing(phi[x], R.mu.at(0, s, t)));
  return u;
}

// ---------------------------------------------------------------- lifting

Lift lift_to_abelianization(const Cochain& w) {
  const auto pt = coh::pointwise_trivial(w);
  if (!pt.witnesses) {
    std::string xs;
    for (auto x : pt.failing) xs += (xs.empty() ? "" : ",") + std::to_string(x);
    throw Error(ErrorCode::NotPointwiseTrivial, "failing base points {" + xs + "}");
  }
  const Cochain& f = *pt.witnesses;
  const i64 m = f.modulus();
  Lift L{grp::abelianization(w.group()), Cochain(), Cochain()};
  const auto& c = L.ab.section;
  const auto& Gab = *L.ab.group;
  L.utilde = Cochain(L.ab.group, 2, w.base(), m);
  L.g = Cochain(w.group(), 1, w.base(), m);
  for (std::size_t x = 0; x < w.base(); ++x) {
    for (Elem a = 1; a < Gab.order(); ++a)
      for (Elem b = 1; b < Gab.order(); ++b)
        L.utilde.set(x, a, b, f.at(x, c[a]) + f.at(x, c[b]) - f.at(x, c[Gab.mul(a, b)]));
    for (Elem s = 1; s < w.order(); ++s) L.g.set(x, s, -f.at(x, s) + f.at(x, c[L.ab.q(s)]));
  }
  if (!(coh::multiply(coh::coboundary(L.g), w) == coh::inflate(L.utilde, L.ab.q)))
    throw Error(ErrorCode::Mismatch, "lifting identity ∂g·w = inf(ũ) failed");
  return L;
}

Decomposition decompose(const Cochain& u, const RepresentationGroup& R) {
  Decomposition d;
  d.phi = classify_cocycle(u, R);
  d.u_phi = build_u_phi(d.phi, R);
  const Cochain w = coh::multiply(u, coh::invert(d.u_phi));
  Lift L = lift_to_abelianization(w);
  d.ab = std::move(L.ab);
  d.v = std::move(L.utilde);
  d.g = coh::invert(L.g);
  const Cochain rebuilt = coh::multiply(coh::multiply(coh::coboundary(d.g), coh::inflate(d.v, d.ab.q)), d.u_phi);
  if (!(rebuilt == u)) throw Error(ErrorCode::Mismatch, "decomposition does not reconstruct u");
  return d;
}

// ---------------------------------------------------------------- inflation of extensions

InflatedExtension inflate_extension(const CentralExtension& M, const grp::Abelianization& ab) {
  if (!M.G()->same_table(*ab.group)) throw Error(ErrorCode::InvalidArgument, "extension is not over G_ab");
  const GroupPtr& G = ab.q.source();
  const auto& EM = *M.E();
  const std::size_t g = G->order();
  std::vector<std::pair<Elem, Elem>> elems;
  std::vector<std::size_t> pos(EM.order() * g, static_cast<std::size_t>(-1));
  for (Elem m = 0; m < EM.order(); ++m)
    for (Elem s = 0; s < g; ++s)
      if (M.p()(m) == ab.q(s)) {
        pos[m * g + s] = elems.size();
        elems.emplace_back(m, s);
      }
  const std::size_t n = elems.size();
  std::vector<Elem> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mul[i * n + j] = static_cast<Elem>(
          pos[EM.mul(elems[i].first, elems[j].first) * g + G->mul(elems[i].second, elems[j].second)]);
  auto E = std::make_shared<const grp::FiniteGroup>(grp::FiniteGroup::constructed(n, std::move(mul)));
  std::vector<Elem> iota(M.N().order()), p(n), d(g);
  for (std::size_t a = 0; a < iota.size(); ++a) iota[a] = static_cast<Elem>(pos[M.iota()(static_cast<Elem>(a)) * g]);
  for (std::size_t i = 0; i < n; ++i) p[i] = elems[i].second;
  for (Elem s = 0; s < g; ++s) d[s] = static_cast<Elem>(pos[M.section()[ab.q(s)] * g + s]);
  InflatedExtension out{CentralExtension(M.N(), G, E, GroupHom(M.N_group(), E, std::move(iota)),
                                         GroupHom(E, G, std::move(p)), std::move(d)),
                        false};
  const ValuedCochain dG = cocycle_from_extension(out.ext);
  const ValuedCochain cM = cocycle_from_extension(M);
  bool ok = true;
  for (std::size_t i = 0; i < dG.parts.size(); ++i) ok = ok && dG.parts[i] == coh::inflate(cM.parts[i], ab.q);
  out.cocycle_identity = ok;
  return out;
}

ValuedCochain pushforward_cocycle(const GroupHom& psi, const ValuedCochain& mu) {
  const auto& Nst = psi.target()->abelian_structure();
  if (!Nst) throw Error(ErrorCode::InvalidArgument, "pushforward target needs abelian structure");
  if (psi.source()->order() != mu.N.order()) throw Error(ErrorCode::InvalidArgument, "pushforward source is not the coefficient group");
  ValuedCochain out = ValuedCochain::zero(mu.group, *Nst, 2, mu.base);
  const std::size_t n = mu.group->order();
  for (std::size_t x = 0; x < mu.base; ++x)
    for (Elem s = 1; s < n; ++s)
      for (Elem t = 1; t < n; ++t) out.set(x, s, t, psi(static_cast<Elem>(mu.at(x, s, t))));
  return out;
}

// ---------------------------------------------------------------- L'

PrimeExtension prime_extension(const CentralExtension& L, const RepresentationGroup& R) {
  const CentralExtension& H = *R.ext;
  if (!L.G()->same_table(*H.G())) throw Error(ErrorCode::InvalidArgument, "L and H are over different groups");
  const GroupPtr& G = L.G();
  const auto& N = L.N();
  const auto& Z = H.N();
  const ValuedCochain eta = cocycle_from_extension(L);
  PrimeExtension out;

  // φ: N̂ -> Ẑ from the transgression of L.
  const auto classes = R.h2->class_of_each(character_cocycle(eta));
  std::vector<Elem> phi(N.order());
  for (std::size_t chi = 0; chi < N.order(); ++chi) phi[chi] = static_cast<Elem>(R.zeta_of(classes[chi]));
  out.phi = GroupHom(grp::dual_group(L.N_group()), grp::dual_group(H.N_group()), std::move(phi));
  out.phi_hat = grp::dual_hom(out.phi);  // Z -> N

  const auto& EL = *L.E();
  const auto& EH = *H.E();
  const std::size_t h = EH.order();
  std::vector<std::pair<Elem, Elem>> elems;
  std::vector<std::size_t> pos(EL.order() * h, static_cast<std::size_t>(-1));
  for (Elem l = 0; l < EL.order(); ++l)
    for (Elem x = 0; x < h; ++x)
      if (L.p()(l) == H.p()(x)) {
        pos[l * h + x] = elems.size();
        elems.emplace_back(l, x);
      }
  const std::size_t n = elems.size();
  std::vector<Elem> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mul[i * n + j] = static_cast<Elem>(
          pos[EL.mul(elems[i].first, elems[j].first) * h + EH.mul(elems[i].second, elems[j].second)]);
  auto F = std::make_shared<const grp::FiniteGroup>(grp::FiniteGroup::constructed(n, std::move(mul)));

  std::vector<Elem> delta;
  for (std::size_t z = 0; z < Z.order(); ++z) {
    const std::size_t idx = pos[L.iota()(out.phi_hat(static_cast<Elem>(z))) * h + H.iota()(static_cast<Elem>(z))];
    if (idx == static_cast<std::size_t>(-1)) throw Error(ErrorCode::DeltaNotSubgroup, "Δ(Z) leaves the fiber product");
    delta.push_back(static_cast<Elem>(idx));
  }
  std::sort(delta.begin(), delta.end());
  delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
  if (!grp::is_subgroup(*F, delta) || !grp::is_normal(*F, delta))
    throw Error(ErrorCode::DeltaNotSubgroup, "Δ(Z) is not a normal subgroup");
  const grp::QuotientGroup Q = grp::quotient(F, delta);

  std::vector<Elem> iota(N.order()), p(Q.group->order()), sec(G->order());
  for (std::size_t a = 0; a < N.order(); ++a) iota[a] = Q.hom(static_cast<Elem>(pos[L.iota()(static_cast<Elem>(a)) * h]));
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = L.p()(elems[Q.representatives[k]].first);
  for (Elem s = 0; s < G->order(); ++s) sec[s] = Q.hom(static_cast<Elem>(pos[L.section()[s] * h + H.section()[s]]));
  try {
    out.ext = std::make_shared<const CentralExtension>(N, G, Q.group, GroupHom(L.N_group(), Q.group, std::move(iota)),
                                                       GroupHom(Q.group, G, std::move(p)), std::move(sec));
    out.central = true;
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidExtension, std::string("L' is not a central extension: ") + e.what());
  }
  const CentralExtension& Lp = *out.ext;

  // ∂(c×d)(s,t) = [ι_L η(s,t), ι_H μ(s,t)] in L'.
  const auto& E = *Lp.E();
  const auto& c = Lp.section();
  bool ident = true;
  for (Elem s = 0; s < G->order() && ident; ++s)
    for (Elem t = 0; t < G->order() && ident; ++t) {
      const Elem lhs = E.mul(E.mul(c[s], c[t]), E.inv(c[G->mul(s, t)]));
      const Elem rhs = Q.hom(static_cast<Elem>(
          pos[L.iota()(static_cast<Elem>(eta.at(0, s, t))) * h + H.iota()(static_cast<Elem>(R.mu.at(0, s, t)))]));
      ident = lhs == rhs;
    }
  out.product_identity = ident;

  const ValuedCochain pushed = pushforward_cocycle(out.phi_hat, R.mu);
  ValuedCochain expect = ValuedCochain::zero(G, N);
  for (Elem s = 1; s < G->order(); ++s)
    for (Elem t = 1; t < G->order(); ++t) expect.set(0, s, t, N.add(eta.at(0, s, t), N.neg(pushed.at(0, s, t))));
  out.cocycle_matches = cocycle_from_extension(Lp) == expect;
  out.pointwise_trivial = is_pointwise_trivial_extension(Lp).pointwise_trivial;
  return out;
}

// ---------------------------------------------------------------- H^2(G,N) decomposition

H2GroupDecomposition decompose_h2_group(const GroupPtr& G, const AbelianGroup& N, const RepresentationGroup& R) {
  if (!R.ext->G()->same_table(*G)) throw Error(ErrorCode::InvalidArgument, "representation group is over another group");
  const auto ab = grp::abelianization(G);
  const auto& Z = R.Z();
  const std::size_t r = N.rank();
  H2GroupDecomposition out;

  std::vector<coh::H2Mod> hG, hA;
  for (i64 d : N.factors()) {
    hG.emplace_back(G, d);
    hA.emplace_back(ab.group, d);
  }
  out.h2_order = 1;
  for (const auto& h : hG) out.h2_order *= h.order();

  auto coords_of = [&](const ValuedCochain& eta) {
    std::vector<i64> c;
    for (std::size_t i = 0; i < r; ++i) {
      const auto ci = hG[i].coordinates(eta.parts[i]);
      c.insert(c.end(), ci.begin(), ci.end());
    }
    return c;
  };

  // Symmetric classes on G_ab, per factor.
  auto symmetric = [&](const Cochain& u) {
    for (Elem a = 0; a < u.order(); ++a)
      for (Elem b = 0; b < u.order(); ++b)
        if (u.at(0, a, b) != u.at(0, b, a)) return false;
    return true;
  };
  std::vector<std::vector<Cochain>> sym(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& inv = hA[i].invariants();
    std::vector<i64> c(inv.size(), 0);
    for (;;) {
      Cochain u = hA[i].cocycle(c);
      if (symmetric(u)) sym[i].push_back(std::move(u));
      std::size_t k = 0;
      while (k < inv.size() && ++c[k] == inv[k]) c[k++] = 0;
      if (k == inv.size()) break;
    }
  }
  out.ab_order = 1;
  for (const auto& s : sym) out.ab_order *= static_cast<i64>(s.size());

  // Hom(Z, N): images of the basis vectors with compatible orders.
  std::vector<GroupHom> homs;
  {
    const GroupPtr Zg = R.ext->N_group();
    const GroupPtr Ng = grp::make_abelian(N);
    std::vector<std::vector<std::size_t>> choices(Z.rank());
    for (std::size_t k = 0; k < Z.rank(); ++k)
      for (std::size_t a = 0; a < N.order(); ++a)
        if (N.scale(a, Z.factors()[k]) == 0) choices[k].push_back(a);
    std::vector<std::size_t> pick(Z.rank(), 0);
    for (;;) {
      std::vector<Elem> img(Z.order());
      for (std::size_t z = 0; z < Z.order(); ++z) {
        const auto zc = Z.coords(z);
        std::size_t v = 0;
        for (std::size_t k = 0; k < Z.rank(); ++k) v = N.add(v, N.scale(choices[k][pick[k]], zc[k]));
        img[z] = static_cast<Elem>(v);
      }
      homs.emplace_back(Zg, Ng, std::move(img));
      std::size_t k = 0;
      while (k < Z.rank() && ++pick[k] == choices[k].size()) pick[k++] = 0;
      if (k == Z.rank()) break;
    }
  }
  out.hom_order = static_cast<i64>(homs.size());

  auto forward = [&](const std::vector<Cochain>& etatilde, const GroupHom& psi) {
    const ValuedCochain pushed = pushforward_cocycle(psi, R.mu);
    ValuedCochain eta = ValuedCochain::zero(G, N);
    for (std::size_t i = 0; i < r; ++i)
      eta.parts[i] = coh::multiply(coh::inflate(etatilde[i], ab.q), pushed.parts[i]);
    return coords_of(eta);
  };

  std::set<std::vector<i64>> image;
  std::size_t pairs = 0;
  std::vector<std::size_t> idx(r, 0);
  for (;;) {
    std::vector<Cochain> et(r);
    for (std::size_t i = 0; i < r; ++i) et[i] = sym[i][idx[i]];
    for (const auto& psi : homs) {
      image.insert(forward(et, psi));
      ++pairs;
    }
    std::size_t k = 0;
    while (k < r && ++idx[k] == sym[k].size()) idx[k++] = 0;
    if (k == r) break;
  }
  out.forward_injective = image.size() == pairs;
  out.bijective = out.forward_injective && static_cast<i64>(image.size()) == out.h2_order;

  // Inverse on generators: ψ from the transgression, then lift the
  // pointwise-trivial remainder through the abelianized extension.
  bool round = true;
  for (std::size_t i = 0; i < r && round; ++i)
    for (const auto& rep : hG[i].representatives()) {
      ValuedCochain eta = ValuedCochain::zero(G, N);
      eta.parts[i] = rep;
      const CentralExtension L = extension_from_cocycle(eta);
      const PrimeExtension P = prime_extension(L, R);
      const ValuedCochain pushed = pushforward_cocycle(P.phi_hat, R.mu);
      ValuedCochain rest = ValuedCochain::zero(G, N);
      for (std::size_t k = 0; k < r; ++k) rest.parts[k] = coh::multiply(eta.parts[k], coh::invert(pushed.parts[k]));
      const CentralExtension Lr = extension_from_cocycle(rest);
      const auto eab = grp::abelianization(Lr.E());
      std::vector<Elem> iota(N.order()), p(eab.group->order());
      for (std::size_t a = 0; a < N.order(); ++a) iota[a] = eab.q(Lr.iota()(static_cast<Elem>(a)));
      for (Elem x = 0; x < p.size(); ++x) p[x] = ab.q(Lr.p()(eab.section[x]));
      const CentralExtension M(N, ab.group, eab.group, GroupHom(Lr.N_group(), eab.group, std::move(iota)),
                               GroupHom(eab.group, ab.group, std::move(p)));
      const ValuedCochain et = cocycle_from_extension(M);
      round = round && forward(et.parts, P.phi_hat) == coords_of(eta);
      if (!round) break;
    }
  out.roundtrip = round;
  return out;
}

}  // namespace twistcoh::ext
