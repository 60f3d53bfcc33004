#include "twistcoh/coh.hpp"

#include <algorithm>

#include "twistcoh/error.hpp"

namespace twistcoh::coh {

using zmod::reduce;

namespace {

std::size_t ipow(std::size_t n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

void same_shape(const Cochain& a, const Cochain& b) {
  if (a.group() != b.group() && !a.group()->same_table(*b.group()))
    throw Error(ErrorCode::InvalidArgument, "cochains over different groups");
  if (a.degree() != b.degree()) throw Error(ErrorCode::InvalidArgument, "cochain degree mismatch");
  if (a.base() != b.base()) throw Error(ErrorCode::InvalidArgument, "cochain base mismatch");
}

// Rows (s,t) in (G\e)^2, columns f(s) for s != e: f(s) + f(t) - f(st).
zmod::Matrix d1_matrix(const grp::FiniteGroup& g) {
  const std::size_t n = g.order();
  zmod::Matrix A((n - 1) * (n - 1), n - 1);
  std::size_t row = 0;
  for (Elem s = 1; s < n; ++s)
    for (Elem t = 1; t < n; ++t, ++row) {
      A(row, s - 1) += 1;
      A(row, t - 1) += 1;
      const Elem st = g.mul(s, t);
      if (st != 0) A(row, st - 1) -= 1;
    }
  return A;
}

}  // namespace

// ---------------------------------------------------------------- Cochain

Cochain::Cochain(GroupPtr g, int degree, std::size_t base, i64 modulus)
    : g_(std::move(g)), deg_(degree), base_(base), m_(modulus) {
  if (!g_) throw Error(ErrorCode::InvalidArgument, "cochain without group");
  if (degree < 0 || degree > 3) throw Error(ErrorCode::UnsupportedDegree, "degree " + std::to_string(degree));
  if (base < 1) throw Error(ErrorCode::InvalidArgument, "base size must be at least 1");
  if (modulus < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be at least 1");
  n_ = g_->order();
  v_.assign(base_ * ipow(n_, deg_), 0);
}

void Cochain::set(std::size_t x, i64 v) {
  if (deg_ != 0) throw Error(ErrorCode::UnsupportedDegree, "set(x) needs degree 0");
  v_.at(x) = reduce(v, m_);
}

void Cochain::set(std::size_t x, Elem s, i64 v) {
  if (deg_ != 1) throw Error(ErrorCode::UnsupportedDegree, "set(x,s) needs degree 1");
  v = reduce(v, m_);
  if (s == 0 && v != 0) throw Error(ErrorCode::InvalidArgument, "normalized cochain: f(e) must be 0");
  v_.at(x * n_ + s) = v;
}

void Cochain::set(std::size_t x, Elem s, Elem t, i64 v) {
  if (deg_ != 2) throw Error(ErrorCode::UnsupportedDegree, "set(x,s,t) needs degree 2");
  v = reduce(v, m_);
  if ((s == 0 || t == 0) && v != 0)
    throw Error(ErrorCode::InvalidArgument, "normalized cochain: identity argument must give 0");
  v_.at((x * n_ + s) * n_ + t) = v;
}

Cochain Cochain::embedded(i64 m) const {
  if (m % m_ != 0)
    throw Error(ErrorCode::ModulusMismatch, std::to_string(m_) + " does not divide " + std::to_string(m));
  Cochain c = *this;
  c.m_ = m;
  const i64 k = m / m_;
  for (auto& v : c.v_) v *= k;
  return c;
}

Cochain Cochain::evaluate_at(std::size_t x) const {
  if (x >= base_) throw Error(ErrorCode::InvalidArgument, "base point out of range");
  Cochain c(g_, deg_, 1, m_);
  const std::size_t s = stride();
  std::copy(v_.begin() + x * s, v_.begin() + (x + 1) * s, c.v_.begin());
  return c;
}

Cochain Cochain::restrict_base(std::span<const std::size_t> xs) const {
  Cochain c(g_, deg_, xs.size(), m_);
  const std::size_t s = stride();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >= base_) throw Error(ErrorCode::InvalidArgument, "base point out of range");
    std::copy(v_.begin() + xs[i] * s, v_.begin() + (xs[i] + 1) * s, c.v_.begin() + i * s);
  }
  return c;
}

Cochain Cochain::constant_over(std::size_t base) const {
  if (base_ != 1) throw Error(ErrorCode::InvalidArgument, "constant_over needs a single-point cochain");
  std::vector<std::size_t> xs(base, 0);
  return restrict_base(xs);
}

Cochain Cochain::reduced() const {
  i64 g = m_;
  for (i64 v : v_) g = zmod::gcd(g, v);
  Cochain c = *this;
  if (g == 0) g = m_;
  c.m_ = m_ / g;
  for (auto& v : c.v_) v /= g;
  return c;
}

bool Cochain::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](i64 v) { return v == 0; });
}

bool Cochain::normalized() const {
  if (deg_ == 0) return true;
  const std::size_t s = stride();
  for (std::size_t x = 0; x < base_; ++x)
    for (std::size_t i = 0; i < s; ++i) {
      if (v_[x * s + i] == 0) continue;
      std::size_t idx = i;
      for (int k = 0; k < deg_; ++k) {
        if (idx % n_ == 0) return false;
        idx /= n_;
      }
    }
  return true;
}

bool Cochain::operator==(const Cochain& o) const {
  if (deg_ != o.deg_ || base_ != o.base_ || n_ != o.n_) return false;
  if (!g_->same_table(*o.g_)) return false;
  const i64 L = zmod::lcm(m_, o.m_);
  const i64 a = L / m_, b = L / o.m_;
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (v_[i] * a != o.v_[i] * b) return false;
  return true;
}

Cochain multiply(const Cochain& a, const Cochain& b) {
  same_shape(a, b);
  const i64 L = zmod::lcm(a.modulus(), b.modulus());
  Cochain x = a.embedded(L);
  const Cochain y = b.embedded(L);
  Cochain out(a.group(), a.degree(), a.base(), L);
  std::vector<i64>& ov = out.values_mut();
  for (std::size_t i = 0; i < ov.size(); ++i) ov[i] = reduce(x.values()[i] + y.values()[i], L);
  return out;
}

Cochain power(const Cochain& a, i64 k) {
  Cochain out(a.group(), a.degree(), a.base(), a.modulus());
  std::vector<i64>& ov = out.values_mut();
  for (std::size_t i = 0; i < ov.size(); ++i) ov[i] = reduce(zmod::mulmod(a.values()[i], reduce(k, a.modulus()), a.modulus()), a.modulus());
  return out;
}

Cochain invert(const Cochain& a) { return power(a, -1); }

Cochain coboundary(const Cochain& c) {
  const int d = c.degree();
  if (d > 2) throw Error(ErrorCode::UnsupportedDegree, "coboundary of a degree-3 cochain");
  const auto& g = *c.group();
  const std::size_t n = g.order();
  const i64 M = c.modulus();
  Cochain out(c.group(), d + 1, c.base(), M);
  std::vector<i64>& ov = out.values_mut();
  for (std::size_t x = 0; x < c.base(); ++x) {
    if (d == 0) continue;  // constants have zero coboundary
    if (d == 1) {
      for (Elem s = 0; s < n; ++s)
        for (Elem t = 0; t < n; ++t)
          ov[(x * n + s) * n + t] = reduce(c.at(x, s) + c.at(x, t) - c.at(x, g.mul(s, t)), M);
    } else {
      for (Elem r = 0; r < n; ++r)
        for (Elem s = 0; s < n; ++s) {
          const Elem rs = g.mul(r, s);
          const i64 urs = c.at(x, r, s);
          for (Elem t = 0; t < n; ++t)
            ov[((x * n + r) * n + s) * n + t] =
                reduce(c.at(x, s, t) - c.at(x, rs, t) + c.at(x, r, g.mul(s, t)) - urs, M);
        }
    }
  }
  return out;
}

bool is_cocycle(const Cochain& u) {
  if (u.degree() != 2) return false;
  if (!u.normalized()) return false;
  const auto& g = *u.group();
  const std::size_t n = g.order();
  const i64 M = u.modulus();
  for (std::size_t x = 0; x < u.base(); ++x)
    for (Elem r = 1; r < n; ++r)
      for (Elem s = 1; s < n; ++s) {
        const Elem rs = g.mul(r, s);
        const i64 urs = u.at(x, r, s);
        for (Elem t = 1; t < n; ++t)
          if (reduce(u.at(x, s, t) - u.at(x, rs, t) + u.at(x, r, g.mul(s, t)) - urs, M) != 0)
            return false;
      }
  return true;
}

bool coboundary_is_zero(const Cochain& c) {
  if (c.degree() < 3) return coboundary(c).is_zero();
  const auto& g = *c.group();
  const std::size_t n = g.order();
  const i64 M = c.modulus();
  for (std::size_t x = 0; x < c.base(); ++x)
    for (Elem q = 0; q < n; ++q)
      for (Elem r = 0; r < n; ++r) {
        const Elem qr = g.mul(q, r);
        for (Elem s = 0; s < n; ++s) {
          const Elem rs = g.mul(r, s);
          for (Elem t = 0; t < n; ++t) {
            const i64 v = c.at(x, r, s, t) - c.at(x, qr, s, t) + c.at(x, q, rs, t) -
                          c.at(x, q, r, g.mul(s, t)) + c.at(x, q, r, s);
            if (zmod::reduce(v, M) != 0) return false;
          }
        }
      }
  return true;
}

Cochain inflate(const Cochain& u, const grp::GroupHom& q) {
  if (q.target()->order() != u.order()) throw Error(ErrorCode::InvalidArgument, "inflation along a hom with the wrong target");
  const std::size_t n = q.source()->order();
  Cochain out(q.source(), u.degree(), u.base(), u.modulus());
  std::vector<i64>& ov = out.values_mut();
  for (std::size_t x = 0; x < u.base(); ++x) {
    switch (u.degree()) {
      case 0: ov[x] = u.at(x); break;
      case 1:
        for (Elem s = 0; s < n; ++s) ov[x * n + s] = u.at(x, q(s));
        break;
      case 2:
        for (Elem s = 0; s < n; ++s)
          for (Elem t = 0; t < n; ++t) ov[(x * n + s) * n + t] = u.at(x, q(s), q(t));
        break;
      default:
        for (Elem r = 0; r < n; ++r)
          for (Elem s = 0; s < n; ++s)
            for (Elem t = 0; t < n; ++t) ov[((x * n + r) * n + s) * n + t] = u.at(x, q(r), q(s), q(t));
    }
  }
  return out;
}

// ---------------------------------------------------------------- coboundary tests

std::vector<std::optional<std::vector<i64>>> coboundary_witnesses(const Cochain& u, i64 m) {
  if (u.degree() != 2) throw Error(ErrorCode::UnsupportedDegree, "coboundary test needs degree 2");
  if (m % u.modulus() != 0)
    throw Error(ErrorCode::ModulusMismatch,
                std::to_string(u.modulus()) + " does not divide " + std::to_string(m));
  const auto& g = *u.group();
  const std::size_t n = g.order();
  const i64 k = m / u.modulus();
  std::vector<std::vector<i64>> bs(u.base(), std::vector<i64>((n - 1) * (n - 1)));
  for (std::size_t x = 0; x < u.base(); ++x) {
    std::size_t row = 0;
    for (Elem s = 1; s < n; ++s)
      for (Elem t = 1; t < n; ++t) bs[x][row++] = u.at(x, s, t) * k;
  }
  auto sols = zmod::solve_many(d1_matrix(g), bs, m);
  std::vector<std::optional<std::vector<i64>>> out(u.base());
  for (std::size_t x = 0; x < u.base(); ++x) {
    if (!sols[x]) continue;
    std::vector<i64> f(n, 0);
    for (Elem s = 1; s < n; ++s) f[s] = (*sols[x])[s - 1];
    for (Elem s = 0; s < n; ++s)
      for (Elem t = 0; t < n; ++t)
        if (reduce(f[s] + f[t] - f[g.mul(s, t)] - u.at(x, s, t) * k, m) != 0)
          throw Error(ErrorCode::Mismatch, "coboundary witness failed re-verification");
    out[x] = std::move(f);
  }
  return out;
}

std::optional<Cochain> is_coboundary_mod(const Cochain& u, i64 m) {
  auto w = coboundary_witnesses(u, m);
  Cochain f(u.group(), 1, u.base(), m);
  for (std::size_t x = 0; x < u.base(); ++x) {
    if (!w[x]) return std::nullopt;
    for (Elem s = 1; s < u.order(); ++s) f.set(x, s, (*w[x])[s]);
  }
  return f;
}

std::optional<Cochain> is_coboundary_circle(const Cochain& u) {
  return is_coboundary_mod(u, zmod::checked_mul(u.modulus(), static_cast<i64>(u.order())));
}

PointwiseResult pointwise_trivial(const Cochain& u) {
  const i64 m = zmod::checked_mul(u.modulus(), static_cast<i64>(u.order()));
  auto w = coboundary_witnesses(u, m);
  PointwiseResult r;
  Cochain f(u.group(), 1, u.base(), m);
  for (std::size_t x = 0; x < u.base(); ++x) {
    if (!w[x]) {
      r.failing.push_back(x);
      continue;
    }
    for (Elem s = 1; s < u.order(); ++s) f.set(x, s, (*w[x])[s]);
  }
  if (r.failing.empty()) r.witnesses = std::move(f);
  return r;
}

i64 hom_count(const GroupPtr& g, i64 m) {
  if (g->order() == 1) return 1;
  const auto k = zmod::kernel(d1_matrix(*g), m);
  i64 c = 1;
  for (i64 o : k.orders) c = zmod::checked_mul(c, o);
  return c;
}

// ---------------------------------------------------------------- H2Mod

H2Mod::H2Mod(GroupPtr g, i64 M) : g_(std::move(g)), M_(M) {
  if (M < 1) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  const auto& G = *g_;
  const std::size_t n = G.order();
  gens_ = grp::greedy_generators(G);
  const std::size_t k = gens_.size();
  P_ = (n - 1) * k;
  auto param = [&](Elem a, std::size_t gi) { return (static_cast<std::size_t>(a) - 1) * k + gi; };

  // Cayley BFS tree: w = parent_w * gens[parent_g].
  std::vector<Elem> order{0};
  std::vector<Elem> pw(n, 0);
  std::vector<std::size_t> pg(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t gi = 0; gi < k; ++gi) {
      const Elem w = G.mul(order[i], gens_[gi]);
      if (!seen[w]) {
        seen[w] = true;
        pw[w] = order[i];
        pg[w] = gi;
        order.push_back(w);
      }
    }

  // u(r, w' g) = u(r, w') + u(r w', g) - u(w', g).
  forms_.assign(n * n, std::vector<i64>(P_, 0));
  for (Elem r = 1; r < n; ++r)
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Elem w = order[i], wp = pw[w];
      const std::size_t gi = pg[w];
      auto& F = forms_[r * n + w];
      F = forms_[r * n + wp];
      const Elem rwp = G.mul(r, wp);
      if (rwp != 0) F[param(rwp, gi)] += 1;
      if (wp != 0) F[param(wp, gi)] -= 1;
    }

  // Cocycle identity for t in the generating set.
  zmod::RowSpace rs(P_, M_);
  std::vector<i64> row(P_);
  for (Elem r = 1; r < n; ++r)
    for (Elem s = 1; s < n; ++s)
      for (std::size_t gi = 0; gi < k; ++gi) {
        const Elem g0 = gens_[gi];
        const auto& a = forms_[r * n + s];
        const auto& b = forms_[G.mul(r, s) * n + g0];
        const auto& c = forms_[s * n + g0];
        const auto& d = forms_[r * n + G.mul(s, g0)];
        bool nz = false;
        for (std::size_t p = 0; p < P_; ++p) {
          row[p] = a[p] + b[p] - c[p] - d[p];
          nz = nz || zmod::reduce(row[p], M_) != 0;
        }
        if (nz) rs.add(row);
      }
  const zmod::Smith sm = zmod::smith(rs.rows(), M_, false);
  V_ = sm.V;
  Vinv_ = sm.Vinv;
  for (std::size_t i = 0; i < P_; ++i)
    if (sm.diag[i] > 1) {
      zpos_.push_back(i);
      zorder_.push_back(sm.diag[i]);
    }
  const std::size_t q = zpos_.size();

  auto z_of_params = [&](std::span<const i64> p) {
    std::vector<i64> z(q, 0);
    for (std::size_t i = 0, j = 0; i < P_; ++i) {
      i64 y = 0;
      for (std::size_t c = 0; c < P_; ++c)
        if (p[c] != 0) y = reduce(y + zmod::mulmod(Vinv_(i, c), p[c], M_), M_);
      const bool kept = j < q && zpos_[j] == i;
      const i64 gi = kept ? zorder_[j] : 1;
      const i64 step = M_ / gi;
      if (y % step != 0) throw Error(ErrorCode::NotACocycle, "parameters outside the cocycle lattice");
      if (kept) z[j++] = y / step;
    }
    return z;
  };

  zmod::Matrix rel(0, q);
  for (Elem s = 1; s < n; ++s) {
    std::vector<i64> p(P_, 0);
    for (Elem a = 1; a < n; ++a)
      for (std::size_t gi = 0; gi < k; ++gi) {
        i64 v = (a == s) + (gens_[gi] == s) - (G.mul(a, gens_[gi]) == s);
        p[param(a, gi)] = v;
      }
    rel.append_row(z_of_params(p));
  }
  for (std::size_t j = 0; j < q; ++j) {
    std::vector<i64> e(q, 0);
    e[j] = zorder_[j];
    rel.append_row(e);
  }
  quot_.emplace(rel, q, M_);
  inv_ = quot_->invariants();
  for (std::size_t j = 0; j < inv_.size(); ++j) {
    std::vector<i64> c(inv_.size(), 0);
    c[j] = 1;
    reps_.push_back(cocycle(c));
    if (!is_cocycle(reps_.back())) throw Error(ErrorCode::Mismatch, "H2 representative is not a cocycle");
  }
}

i64 H2Mod::order() const {
  i64 o = 1;
  for (i64 d : inv_) o = zmod::checked_mul(o, d);
  return o;
}

std::vector<i64> H2Mod::params_of(const Cochain& u) const {
  const std::size_t k = gens_.size();
  std::vector<i64> p(P_);
  for (Elem a = 1; a < g_->order(); ++a)
    for (std::size_t gi = 0; gi < k; ++gi) p[(a - 1) * k + gi] = u.at(0, a, gens_[gi]);
  return p;
}

Cochain H2Mod::from_params(std::span<const i64> p) const {
  const std::size_t n = g_->order();
  Cochain u(g_, 2, 1, M_);
  for (Elem r = 1; r < n; ++r)
    for (Elem w = 1; w < n; ++w) {
      i64 acc = 0;
      const auto& F = forms_[r * n + w];
      for (std::size_t i = 0; i < P_; ++i)
        if (F[i] != 0 && p[i] != 0) acc += zmod::mulmod(F[i], p[i], M_);
      u.set(0, r, w, acc);
    }
  return u;
}

std::vector<i64> H2Mod::coordinates(const Cochain& u0) const {
  if (u0.base() != 1) throw Error(ErrorCode::InvalidArgument, "coordinates need a single base point");
  if (!is_cocycle(u0)) throw Error(ErrorCode::NotACocycle, "coordinates of a non-cocycle");
  const Cochain u = u0.embedded(M_);
  const auto p = params_of(u);
  const std::size_t q = zpos_.size();
  std::vector<i64> z(q, 0);
  for (std::size_t j = 0; j < q; ++j) {
    const std::size_t i = zpos_[j];
    i64 y = 0;
    for (std::size_t c = 0; c < P_; ++c)
      if (p[c] != 0) y = reduce(y + zmod::mulmod(Vinv_(i, c), p[c], M_), M_);
    const i64 step = M_ / zorder_[j];
    if (y % step != 0) throw Error(ErrorCode::Mismatch, "cocycle outside the kernel lattice");
    z[j] = y / step;
  }
  return quot_->coords(z);
}

Cochain H2Mod::cocycle(std::span<const i64> coords) const {
  const std::size_t q = zpos_.size();
  std::vector<i64> z(q, 0);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] == 0) continue;
    const auto l = quot_->lift(j);
    for (std::size_t i = 0; i < q; ++i) z[i] = reduce(z[i] + zmod::mulmod(l[i], coords[j], M_), M_);
  }
  std::vector<i64> y(P_, 0);
  for (std::size_t j = 0; j < q; ++j) y[zpos_[j]] = zmod::mulmod(z[j], M_ / zorder_[j], M_);
  std::vector<i64> p(P_, 0);
  for (std::size_t r = 0; r < P_; ++r) {
    i64 acc = 0;
    for (std::size_t c = 0; c < P_; ++c)
      if (y[c] != 0) acc = reduce(acc + zmod::mulmod(V_(r, c), y[c], M_), M_);
    p[r] = acc;
  }
  return from_params(p);
}

// ---------------------------------------------------------------- H2Circle

H2Circle::H2Circle(GroupPtr g) : g_(g), h_(g, static_cast<i64>(g->order())) {
  const auto& G = *g_;
  const i64 m = static_cast<i64>(G.order());
  const auto ab = grp::abelianization(g_);
  const i64 e = ab.ab.exponent();
  const std::size_t hc = h_.invariants().size();
  zmod::Matrix rel(0, hc);
  for (std::size_t j = 0; j < ab.ab.rank(); ++j) {
    std::vector<i64> ej(ab.ab.rank(), 0);
    ej[j] = 1;
    const std::size_t gamma = ab.ab.index(ej);
    std::vector<i64> tilde(G.order());
    for (Elem s = 0; s < G.order(); ++s) tilde[s] = ab.ab.pairing(gamma, ab.q(s)) * (m / e);
    Cochain d(g_, 2, 1, m);
    for (Elem s = 1; s < G.order(); ++s)
      for (Elem t = 1; t < G.order(); ++t) {
        const i64 v = tilde[s] + tilde[t] - tilde[G.mul(s, t)];
        if (v % m != 0) throw Error(ErrorCode::Mismatch, "character lift is not a hom mod |G|");
        d.set(0, s, t, v / m);
      }
    rel.append_row(h_.coordinates(d));
  }
  for (std::size_t i = 0; i < hc; ++i) {
    std::vector<i64> r(hc, 0);
    r[i] = h_.invariants()[i];
    rel.append_row(r);
  }
  quot_.emplace(rel, hc, m);
  inv_ = quot_->invariants();
  for (std::size_t j = 0; j < inv_.size(); ++j) reps_.push_back(h_.cocycle(quot_->lift(j)));
}

i64 H2Circle::order() const {
  i64 o = 1;
  for (i64 d : inv_) o = zmod::checked_mul(o, d);
  return o;
}

std::vector<std::vector<i64>> H2Circle::class_of_each(const Cochain& u) const {
  if (u.degree() != 2) throw Error(ErrorCode::UnsupportedDegree, "class_of needs degree 2");
  const auto& G = *g_;
  const std::size_t n = G.order();
  const std::size_t r = inv_.size();
  const i64 m = static_cast<i64>(n);
  const i64 mm = zmod::checked_mul(zmod::lcm(u.modulus(), m), m);
  const zmod::Matrix D = d1_matrix(G);
  zmod::Matrix A((n - 1) * (n - 1), n - 1 + r);
  std::size_t row = 0;
  for (Elem s = 1; s < n; ++s)
    for (Elem t = 1; t < n; ++t, ++row) {
      for (std::size_t c = 0; c < n - 1; ++c) A(row, c) = D(row, c);
      for (std::size_t i = 0; i < r; ++i) A(row, n - 1 + i) = reps_[i].at(0, s, t) * (mm / m);
    }
  std::vector<std::vector<i64>> bs(u.base(), std::vector<i64>((n - 1) * (n - 1)));
  const i64 k = mm / u.modulus();
  for (std::size_t x = 0; x < u.base(); ++x) {
    std::size_t rr = 0;
    for (Elem s = 1; s < n; ++s)
      for (Elem t = 1; t < n; ++t) bs[x][rr++] = u.at(x, s, t) * k;
  }
  const auto sols = zmod::solve_many(A, bs, mm);
  std::vector<std::vector<i64>> out(u.base());
  for (std::size_t x = 0; x < u.base(); ++x) {
    if (!sols[x]) throw Error(ErrorCode::NoClassFound, "no class for base point " + std::to_string(x) + " (not a cocycle?)");
    out[x].resize(r);
    for (std::size_t i = 0; i < r; ++i) out[x][i] = (*sols[x])[n - 1 + i] % inv_[i];
  }
  return out;
}

std::vector<i64> H2Circle::class_of(const Cochain& u) const {
  if (u.base() != 1) throw Error(ErrorCode::InvalidArgument, "class_of needs a single base point");
  return class_of_each(u).front();
}

std::vector<i64> H2Circle::class_via_mod(const Cochain& u) const {
  return quot_->coords(h_.coordinates(u));
}

Cochain H2Circle::cocycle(std::span<const i64> coords) const {
  const i64 m = static_cast<i64>(g_->order());
  Cochain u(g_, 2, 1, m);
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0) u = multiply(u, power(reps_[j], coords[j]));
  return u;
}

std::size_t H2Circle::flat_index(std::span<const i64> coords) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < inv_.size(); ++i)
    idx = idx * static_cast<std::size_t>(inv_[i]) + static_cast<std::size_t>(reduce(coords[i], inv_[i]));
  return idx;
}

std::vector<i64> H2Circle::unflatten(std::size_t idx) const {
  std::vector<i64> c(inv_.size());
  for (std::size_t i = inv_.size(); i-- > 0;) {
    c[i] = static_cast<i64>(idx % static_cast<std::size_t>(inv_[i]));
    idx /= static_cast<std::size_t>(inv_[i]);
  }
  return c;
}

H2Mod h2_mod(const GroupPtr& g, i64 M) { return H2Mod(g, M); }
H2Circle h2_circle(const GroupPtr& g) { return H2Circle(g); }

bool CohClass::operator==(const CohClass& o) const {
  if (circle != o.circle) throw Error(ErrorCode::InvalidArgument, "comparing classes with different coefficients");
  const Cochain d = multiply(rep, invert(o.rep));
  if (circle) return is_coboundary_circle(d).has_value();
  return is_coboundary_mod(d, d.modulus()).has_value();
}

}  // namespace twistcoh::coh
