#include "twistcoh/bundle.hpp"

#include <set>
#include <string>

#include "twistcoh/error.hpp"

namespace twistcoh::bundle {

using zmod::reduce;

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

void same_setting(const TorsorBundle& a, const TorsorBundle& b) {
  if (!a.group()->same_table(*b.group()) || a.base() != b.base())
    throw Error(ErrorCode::InvalidArgument, "bundles over different groups or bases");
}

}  // namespace

TorsorBundle::TorsorBundle(Cochain u, const Cochain& witnesses)
    : u_(std::move(u)), ab_(grp::abelianization(u_.group())) {
  if (witnesses.degree() != 1 || witnesses.base() != u_.base())
    throw Error(ErrorCode::InvalidArgument, "witnesses must be a degree-1 cochain over the same base");
  const i64 m = m_ = witnesses.modulus();
  if (m % ab_.ab.exponent() != 0) throw Error(ErrorCode::ModulusMismatch, "modulus does not carry the characters of G_ab");
  const std::size_t F = ab_.ab.order(), n = u_.order();
  points_ = Cochain(u_.group(), 1, u_.base() * F, m);
  for (std::size_t x = 0; x < u_.base(); ++x)
    for (std::size_t g = 0; g < F; ++g) {
      const Cochain chi = character(g);
      for (Elem s = 1; s < n; ++s) points_.set(x * F + g, s, witnesses.at(x, s) + chi.at(0, s));
    }
}

Cochain TorsorBundle::character(std::size_t gamma) const {
  Cochain c(u_.group(), 1, 1, m_);
  const i64 k = m_ / ab_.ab.exponent();
  for (Elem s = 1; s < u_.order(); ++s) c.set(0, s, ab_.ab.pairing(gamma, ab_.q(s)) * k);
  return c;
}

std::size_t TorsorBundle::act(std::size_t gamma, std::size_t point) const {
  const std::size_t F = fiber_size();
  return base_of(point) * F + ab_.ab.add(gamma, point % F);
}

std::optional<std::size_t> TorsorBundle::find(std::size_t x, const Cochain& f) const {
  const std::size_t F = fiber_size();
  for (std::size_t g = 0; g < F; ++g)
    if (points_.evaluate_at(x * F + g) == f) return x * F + g;
  return std::nullopt;
}

TorsorBundle::Check TorsorBundle::verify() const {
  Check c;
  const std::size_t F = fiber_size();
  std::vector<std::size_t> xs(size());
  for (std::size_t p = 0; p < size(); ++p) xs[p] = base_of(p);
  c.equations = coh::coboundary(points_) == u_.restrict_base(xs);

  bool table = true, distinct = true;
  for (std::size_t x = 0; x < base() && (table || distinct); ++x) {
    std::set<std::vector<i64>> seen;
    for (std::size_t g = 0; g < F; ++g) {
      const Cochain f = points_.evaluate_at(x * F + g);
      seen.insert(f.values());
      for (std::size_t h = 0; h < F; ++h)
        table = table && points_.evaluate_at(act(h, x * F + g)) == coh::multiply(f, character(h));
    }
    distinct = distinct && seen.size() == F;
  }
  c.free = table && distinct;
  c.transitive = table && distinct;
  c.complete = coh::hom_count(group(), modulus()) == static_cast<i64>(F);
  return c;
}

TorsorBundle build_Zu(const Cochain& u) {
  auto pt = coh::pointwise_trivial(u);
  if (!pt.witnesses) {
    std::string xs;
    for (auto x : pt.failing) xs += (xs.empty() ? "" : ",") + std::to_string(x);
    throw Error(ErrorCode::NotPointwiseTrivial, "failing base points {" + xs + "}");
  }
  TorsorBundle b(u, *pt.witnesses);
  if (!b.verify().ok()) throw Error(ErrorCode::Mismatch, "torsor bundle failed its invariants");
  return b;
}

ProductBundle bundle_product(const TorsorBundle& a, const TorsorBundle& b) {
  same_setting(a, b);
  ProductBundle out{build_Zu(coh::multiply(a.cocycle(), b.cocycle())), {}, true, true, true};
  const std::size_t F = a.fiber_size(), na = a.size(), nb = b.size();
  const auto& A = a.fiber_group();
  out.orbit.assign(na * nb, npos);
  for (std::size_t x = 0; x < a.base(); ++x)
    for (std::size_t i = 0; i < F; ++i)
      for (std::size_t j = 0; j < F; ++j) {
        const std::size_t pa = x * F + i, pb = x * F + j;
        const auto hit = out.product.find(x, coh::multiply(a.points().evaluate_at(pa), b.points().evaluate_at(pb)));
        if (!hit) out.well_defined = false;
        out.orbit[pa * nb + pb] = hit ? *hit : npos;
      }
  if (!out.well_defined) {
    out.bijective = out.equivariant = false;
    return out;
  }
  for (std::size_t x = 0; x < a.base(); ++x) {
    std::set<std::size_t> image;
    for (std::size_t i = 0; i < F; ++i)
      for (std::size_t j = 0; j < F; ++j) {
        const std::size_t pa = x * F + i, pb = x * F + j, here = out.orbit[pa * nb + pb];
        image.insert(here);
        for (std::size_t g = 0; g < F; ++g) {
          const std::size_t anti = out.orbit[a.act(g, pa) * nb + b.act(A.neg(g), pb)];
          out.well_defined = out.well_defined && anti == here;
          out.equivariant = out.equivariant && out.orbit[a.act(g, pa) * nb + pb] == out.product.act(g, here);
        }
      }
    out.bijective = out.bijective && image.size() == F;
  }
  return out;
}

Trivialization trivialization(const TorsorBundle& b, const std::vector<std::size_t>& twist) {
  if (!twist.empty() && twist.size() != b.base()) throw Error(ErrorCode::InvalidArgument, "twist needs one character per base point");
  Trivialization t;
  const std::size_t F = b.fiber_size();
  t.section.resize(b.base());
  for (std::size_t x = 0; x < b.base(); ++x) t.section[x] = x * F + (twist.empty() ? 0 : twist[x] % F);
  t.witness = b.points().restrict_base(t.section);
  t.verified = coh::coboundary(t.witness) == b.cocycle();
  return t;
}

std::vector<i64> psi_values(const ext::CentralExtension& e, const TorsorBundle& b, std::size_t point) {
  const auto& E = *e.E();
  const auto& N = e.N();
  const auto& c = e.section();
  const i64 m = b.modulus();
  const i64 k = m / N.exponent();
  const std::size_t chi = b.base_of(point);
  std::vector<i64> v(E.order());
  for (Elem x = 0; x < E.order(); ++x) {
    const Elem s = e.p()(x);
    const std::size_t n = e.n_of(E.mul(E.inv(c[s]), x));
    v[x] = reduce(b.points().at(point, s) + N.pairing(chi, n) * k, m);
  }
  return v;
}

PsiIso psi_iso(const ext::CentralExtension& e) {
  const auto eta = ext::cocycle_from_extension(e);
  PsiIso out{build_Zu(ext::character_cocycle(eta)), grp::abelianization(e.E()), {}, true, true, true, true};
  const auto& B = out.bundle;
  const auto& E = *e.E();
  const auto& Eab = out.eab.ab;
  const i64 m = B.modulus();
  const i64 L = zmod::lcm(m, Eab.exponent());
  const auto restriction = ext::is_pointwise_trivial_extension(e).restriction;

  out.map.assign(B.size(), npos);
  std::vector<std::vector<i64>> values(B.size());
  for (std::size_t p = 0; p < B.size(); ++p) {
    values[p] = psi_values(e, B, p);
    const auto& v = values[p];
    for (Elem x = 0; x < E.order() && out.character; ++x)
      for (Elem y = 0; y < E.order() && out.character; ++y)
        out.character = reduce(v[E.mul(x, y)] - v[x] - v[y], m) == 0;
    if (!out.character) break;
    // Coordinates on the cyclic factors of E_ab, then a full comparison.
    std::vector<i64> gam(Eab.rank());
    for (std::size_t i = 0; i < Eab.rank() && out.character; ++i) {
      std::vector<i64> ei(Eab.rank(), 0);
      ei[i] = 1;
      const i64 num = v[out.eab.section[Eab.index(ei)]] * Eab.factors()[i];
      if (num % m != 0) out.character = false;
      else gam[i] = reduce(num / m, Eab.factors()[i]);
    }
    if (!out.character) break;
    const std::size_t g = Eab.index(gam);
    for (Elem x = 0; x < E.order() && out.character; ++x)
      out.character = reduce(Eab.pairing(g, out.eab.q(x)) * (L / Eab.exponent()) - v[x] * (L / m), L) == 0;
    out.map[p] = g;
  }
  if (!out.character) {
    out.bijective = out.equivariant = out.fiber_preserving = false;
    return out;
  }
  out.bijective = std::set<std::size_t>(out.map.begin(), out.map.end()).size() == B.size() && B.size() == Eab.order();
  for (std::size_t p = 0; p < B.size(); ++p) {
    out.fiber_preserving = out.fiber_preserving && restriction[out.map[p]] == B.base_of(p);
    for (std::size_t g = 0; g < B.fiber_size() && out.equivariant; ++g) {
      const Cochain chi = B.character(g);
      const auto& moved = values[B.act(g, p)];
      for (Elem x = 0; x < E.order(); ++x)
        out.equivariant = out.equivariant && moved[x] == reduce(values[p][x] + chi.at(0, e.p()(x)), m);
    }
  }
  return out;
}

std::optional<BundleIso> equivariant_bundle_iso(const TorsorBundle& a, const TorsorBundle& b,
                                                const std::optional<Cochain>& witness) {
  same_setting(a, b);
  Cochain g;
  if (witness) {
    if (witness->degree() != 1 || witness->base() != a.base())
      throw Error(ErrorCode::InvalidArgument, "witness must be a degree-1 cochain over the base");
    if (!(coh::multiply(coh::coboundary(*witness), a.cocycle()) == b.cocycle()))
      throw Error(ErrorCode::Mismatch, "witness does not relate the two cocycles");
    g = *witness;
  } else {
    auto w = coh::is_coboundary_circle(coh::multiply(b.cocycle(), coh::invert(a.cocycle())));
    if (!w) return std::nullopt;
    g = std::move(*w);
  }
  BundleIso iso;
  iso.map.assign(a.size(), npos);
  for (std::size_t p = 0; p < a.size(); ++p) {
    const std::size_t x = a.base_of(p);
    const auto hit = b.find(x, coh::multiply(a.points().evaluate_at(p), g.evaluate_at(x)));
    if (!hit) throw Error(ErrorCode::Mismatch, "shifted point is not in the target bundle");
    iso.map[p] = *hit;
  }
  bool ok = std::set<std::size_t>(iso.map.begin(), iso.map.end()).size() == b.size() && a.size() == b.size();
  for (std::size_t p = 0; p < a.size() && ok; ++p) {
    ok = b.base_of(iso.map[p]) == a.base_of(p);
    for (std::size_t h = 0; h < a.fiber_size() && ok; ++h) ok = iso.map[a.act(h, p)] == b.act(h, iso.map[p]);
  }
  iso.verified = ok;
  return iso;
}

}  // namespace twistcoh::bundle
