#include "twistcoh/grp.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>

#include "twistcoh/error.hpp"
#include "twistcoh/zmod.hpp"

namespace twistcoh::grp {

namespace {

std::atomic<std::size_t> g_max_order{512};

void check_order(std::size_t n) {
  if (n > g_max_order.load())
    throw Error(ErrorCode::OrderCap, "group order " + std::to_string(n) + " exceeds cap " +
                                         std::to_string(g_max_order.load()));
}

std::string coords_label(const std::vector<i64>& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

}  // namespace

std::size_t max_order() { return g_max_order.load(); }
void set_max_order(std::size_t n) { g_max_order.store(n); }

// ---------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(std::vector<i64> factors) : d_(std::move(factors)) {
  for (i64 d : d_)
    if (d < 2) throw Error(ErrorCode::InvalidInvariant, "factor " + std::to_string(d) + " < 2");
  for (i64 d : d_) {
    order_ = static_cast<std::size_t>(zmod::checked_mul(static_cast<i64>(order_), d));
    exp_ = zmod::lcm(exp_, d);
  }
}

std::vector<i64> AbelianGroup::invariant_factors() const {
  zmod::Matrix rel(0, d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) {
    std::vector<i64> r(d_.size(), 0);
    r[i] = d_[i];
    rel.append_row(r);
  }
  return zmod::AbelianQuotient(rel, d_.size(), exp_).invariants();
}

bool AbelianGroup::isomorphic(const AbelianGroup& other) const {
  return invariant_factors() == other.invariant_factors();
}

std::vector<i64> AbelianGroup::coords(std::size_t index) const {
  std::vector<i64> c(d_.size());
  for (std::size_t i = d_.size(); i-- > 0;) {
    c[i] = static_cast<i64>(index % static_cast<std::size_t>(d_[i]));
    index /= static_cast<std::size_t>(d_[i]);
  }
  return c;
}

std::size_t AbelianGroup::index(std::span<const i64> coords) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d_.size(); ++i)
    idx = idx * static_cast<std::size_t>(d_[i]) +
          static_cast<std::size_t>(zmod::reduce(coords[i], d_[i]));
  return idx;
}

std::size_t AbelianGroup::add(std::size_t a, std::size_t b) const {
  auto x = coords(a), y = coords(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return index(x);
}

std::size_t AbelianGroup::neg(std::size_t a) const {
  auto x = coords(a);
  for (auto& v : x) v = -v;
  return index(x);
}

std::size_t AbelianGroup::scale(std::size_t a, i64 k) const {
  auto x = coords(a);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = zmod::mulmod(x[i], zmod::reduce(k, d_[i]), d_[i]);
  return index(x);
}

i64 AbelianGroup::pairing(std::size_t chi, std::size_t a) const {
  auto x = coords(chi), y = coords(a);
  i64 acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    acc = zmod::reduce(acc + zmod::mulmod(x[i] * y[i] % d_[i], exp_ / d_[i], exp_), exp_);
  return acc;
}

// ---------------------------------------------------------------- FiniteGroup

void FiniteGroup::finish_inverses() {
  inv_.assign(n_, 0);
  for (Elem a = 0; a < n_; ++a) {
    bool found = false;
    for (Elem b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0)
          throw Error(ErrorCode::NoInverse, "element " + std::to_string(a) + " has only a one-sided inverse");
        inv_[a] = b;
        found = true;
        break;
      }
    if (!found) throw Error(ErrorCode::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }
}

FiniteGroup FiniteGroup::constructed(std::size_t n, std::vector<Elem> mul,
                                     std::vector<std::string> labels,
                                     std::optional<AbelianGroup> abelian) {
  check_order(n);
  FiniteGroup g;
  g.n_ = n;
  g.mul_ = std::move(mul);
  for (Elem a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw Error(ErrorCode::NoIdentity, "index 0 is not the identity");
  g.finish_inverses();
  g.original_.resize(n);
  std::iota(g.original_.begin(), g.original_.end(), 0);
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  g.labels_ = std::move(labels);
  g.abelian_ = std::move(abelian);
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty table");
  check_order(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorCode::InvalidArgument, "table is not square");
    for (Elem v : table[i])
      if (v >= n) throw Error(ErrorCode::InvalidArgument, "entry out of range in row " + std::to_string(i));
  }
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[c][a] == a && table[a][c] == a;
    if (ok) e = c;
  }
  if (e == n) throw Error(ErrorCode::NoIdentity, "no two-sided identity");
  // Swap labels 0 and e.
  std::vector<Elem> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[e]);
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mul[relabel[a] * n + relabel[b]] = relabel[table[a][b]];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = mul[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        const Elem bc = mul[b * n + c];
        if (mul[ab * n + c] != mul[a * n + bc]) {
          auto orig = [&](std::size_t x) { return std::to_string(relabel[x]); };
          throw Error(ErrorCode::NotAssociative,
                      "(a,b,c) = (" + orig(a) + "," + orig(b) + "," + orig(c) + ")");
        }
      }
    }
  FiniteGroup g = constructed(n, std::move(mul));
  for (std::size_t i = 0; i < n; ++i) g.original_[i] = relabel[i];
  return g;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = a + 1; b < n_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

i64 FiniteGroup::exponent() const {
  i64 e = 1;
  for (Elem a = 0; a < n_; ++a) e = zmod::lcm(e, static_cast<i64>(element_order(a)));
  return e;
}

std::vector<Elem> FiniteGroup::center() const {
  std::vector<Elem> z;
  for (Elem a = 0; a < n_; ++a) {
    bool c = true;
    for (Elem b = 0; b < n_ && c; ++b) c = commute(a, b);
    if (c) z.push_back(a);
  }
  return z;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> t(n_, std::vector<Elem>(n_));
  for (Elem a = 0; a < n_; ++a)
    for (Elem b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

FiniteGroup FiniteGroup::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != n_) throw Error(ErrorCode::InvalidArgument, "label count mismatch");
  FiniteGroup g = *this;
  g.labels_ = std::move(labels);
  return g;
}

// ---------------------------------------------------------------- constructors

GroupPtr make_abelian(const AbelianGroup& a) {
  const std::size_t n = a.order();
  check_order(n);
  std::vector<Elem> mul(n * n);
  std::vector<std::vector<i64>> co(n);
  for (std::size_t i = 0; i < n; ++i) co[i] = a.coords(i);
  std::vector<i64> tmp(a.rank());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < a.rank(); ++k) tmp[k] = co[x][k] + co[y][k];
      mul[x * n + y] = static_cast<Elem>(a.index(tmp));
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(coords_label(co[i]));
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::constructed(n, std::move(mul), std::move(labels), a));
}

GroupPtr make_abelian(const std::vector<i64>& factors) { return make_abelian(AbelianGroup(factors)); }

GroupPtr make_table(const std::vector<std::vector<Elem>>& table) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(table));
}

GroupPtr dihedral(std::size_t n) {
  // r^i s^j at index i + n j.
  const std::size_t N = 2 * n;
  std::vector<Elem> mul(N * N);
  std::vector<std::string> labels(N);
  for (std::size_t x = 0; x < N; ++x) {
    const std::size_t a = x % n, b = x / n;
    labels[x] = "r" + std::to_string(a) + (b ? "s" : "");
    for (std::size_t y = 0; y < N; ++y) {
      const std::size_t c = y % n, d = y / n;
      const std::size_t r = (b == 0 ? a + c : a + n - c) % n;
      mul[x * N + y] = static_cast<Elem>(r + n * ((b + d) % 2));
    }
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::constructed(N, std::move(mul), std::move(labels)));
}

GroupPtr heisenberg(i64 p) {
  // (a,b,c) at index (a p + b) p + c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b').
  const std::size_t P = static_cast<std::size_t>(p), N = P * P * P;
  std::vector<Elem> mul(N * N);
  std::vector<std::string> labels(N);
  for (std::size_t x = 0; x < N; ++x) {
    const std::size_t a = x / (P * P), b = (x / P) % P, c = x % P;
    labels[x] = coords_label({static_cast<i64>(a), static_cast<i64>(b), static_cast<i64>(c)});
    for (std::size_t y = 0; y < N; ++y) {
      const std::size_t a2 = y / (P * P), b2 = (y / P) % P, c2 = y % P;
      mul[x * N + y] = static_cast<Elem>((((a + a2) % P) * P + (b + b2) % P) * P + (c + c2 + a * b2) % P);
    }
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::constructed(N, std::move(mul), std::move(labels)));
}

GroupPtr symmetric3() { return dihedral(3); }

// ---------------------------------------------------------------- GroupHom

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> image)
    : src_(std::move(source)), tgt_(std::move(target)), image_(std::move(image)) {
  const auto& S = *src_;
  const auto& T = *tgt_;
  if (image_.size() != S.order()) throw Error(ErrorCode::InvalidArgument, "hom table has wrong length");
  for (Elem v : image_)
    if (v >= T.order()) throw Error(ErrorCode::InvalidArgument, "hom image out of range");
  if (image_[0] != 0) throw Error(ErrorCode::InvalidArgument, "hom does not fix the identity");
  for (Elem a = 0; a < S.order(); ++a)
    for (Elem b = 0; b < S.order(); ++b)
      if (image_[S.mul(a, b)] != T.mul(image_[a], image_[b]))
        throw Error(ErrorCode::InvalidArgument,
                    "not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<Elem> im(g->order());
  std::iota(im.begin(), im.end(), 0);
  return GroupHom(g, g, std::move(im));
}

GroupHom GroupHom::trivial(GroupPtr source, GroupPtr target) {
  std::vector<Elem> im(source->order(), 0);
  return GroupHom(std::move(source), std::move(target), std::move(im));
}

std::vector<Elem> GroupHom::kernel() const {
  std::vector<Elem> k;
  for (Elem a = 0; a < image_.size(); ++a)
    if (image_[a] == 0) k.push_back(a);
  return k;
}

bool GroupHom::injective() const { return kernel().size() == 1; }

bool GroupHom::surjective() const {
  std::vector<bool> hit(tgt_->order(), false);
  for (Elem v : image_) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GroupHom GroupHom::compose_after(const GroupHom& inner) const {
  if (inner.tgt_->order() != src_->order())
    throw Error(ErrorCode::InvalidArgument, "composition order mismatch");
  std::vector<Elem> im(inner.image_.size());
  for (std::size_t a = 0; a < im.size(); ++a) im[a] = image_[inner.image_[a]];
  return GroupHom(inner.src_, tgt_, std::move(im));
}

// ---------------------------------------------------------------- products

ProductGroup direct_product(const GroupPtr& g, const GroupPtr& h) {
  const std::size_t a = g->order(), b = h->order(), n = a * b;
  check_order(n);
  std::vector<Elem> mul(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      mul[x * n + y] = static_cast<Elem>(b * g->mul(static_cast<Elem>(x / b), static_cast<Elem>(y / b)) +
                                         h->mul(static_cast<Elem>(x % b), static_cast<Elem>(y % b)));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = "(" + g->labels()[x / b] + "," + h->labels()[x % b] + ")";
  std::optional<AbelianGroup> ab;
  if (g->abelian_structure() && h->abelian_structure()) {
    auto f = g->abelian_structure()->factors();
    const auto& f2 = h->abelian_structure()->factors();
    f.insert(f.end(), f2.begin(), f2.end());
    ab = AbelianGroup(f);
  }
  ProductGroup P;
  P.right_order = b;
  P.group = std::make_shared<const FiniteGroup>(
      FiniteGroup::constructed(n, std::move(mul), std::move(labels), std::move(ab)));
  std::vector<Elem> p1(n), p2(n), i1(a), i2(b);
  for (std::size_t x = 0; x < n; ++x) {
    p1[x] = static_cast<Elem>(x / b);
    p2[x] = static_cast<Elem>(x % b);
  }
  for (std::size_t x = 0; x < a; ++x) i1[x] = static_cast<Elem>(x * b);
  for (std::size_t y = 0; y < b; ++y) i2[y] = static_cast<Elem>(y);
  P.proj1 = GroupHom(P.group, g, std::move(p1));
  P.proj2 = GroupHom(P.group, h, std::move(p2));
  P.incl1 = GroupHom(g, P.group, std::move(i1));
  P.incl2 = GroupHom(h, P.group, std::move(i2));
  return P;
}

// ---------------------------------------------------------------- subgroups

std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> out{0}, frontier{0};
  in[0] = true;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem s : gens) {
        const Elem y = g.mul(x, s);
        if (!in[y]) {
          in[y] = true;
          out.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elems) {
  std::vector<bool> in(g.order(), false);
  for (Elem e : elems) {
    if (e >= g.order()) return false;
    in[e] = true;
  }
  if (elems.empty() || !in[0]) return false;
  for (Elem a : elems)
    for (Elem b : elems)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, std::span<const Elem> elems) {
  std::vector<bool> in(g.order(), false);
  for (Elem e : elems) in[e] = true;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem k : elems)
      if (!in[g.mul(g.mul(x, k), g.inv(x))]) return false;
  return true;
}

std::vector<Elem> commutator_subgroup(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> comms;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      const Elem c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return closure(g, comms);
}

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  for (Elem x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    for (Elem y : closure(g, gens)) in[y] = true;
  }
  return gens;
}

QuotientGroup quotient(const GroupPtr& gp, std::span<const Elem> kernel) {
  const FiniteGroup& g = *gp;
  if (!is_subgroup(g, kernel)) throw Error(ErrorCode::NotSubgroup, "kernel is not a subgroup");
  if (!is_normal(g, kernel)) throw Error(ErrorCode::NotNormal, "kernel is not normal");
  const std::size_t n = g.order();
  std::vector<Elem> coset(n, static_cast<Elem>(n));
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : kernel) coset[g.mul(x, k)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = coset[g.mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  for (Elem r : reps) labels.push_back(g.labels()[r] + "K");
  QuotientGroup Q;
  Q.group = std::make_shared<const FiniteGroup>(FiniteGroup::constructed(m, std::move(mul), std::move(labels)));
  Q.hom = GroupHom(gp, Q.group, std::move(coset));
  Q.representatives = std::move(reps);
  return Q;
}

Subgroup subgroup(const GroupPtr& gp, std::span<const Elem> elems) {
  const FiniteGroup& g = *gp;
  if (!is_subgroup(g, elems)) throw Error(ErrorCode::NotSubgroup, "not a subgroup");
  std::vector<Elem> sorted(elems.begin(), elems.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Elem> pos(g.order(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<Elem>(i);
  const std::size_t m = sorted.size();
  std::vector<Elem> mul(m * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(g.labels()[sorted[i]]);
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = pos[g.mul(sorted[i], sorted[j])];
  }
  Subgroup S;
  S.group = std::make_shared<const FiniteGroup>(FiniteGroup::constructed(m, std::move(mul), std::move(labels)));
  S.inclusion = GroupHom(S.group, gp, sorted);
  return S;
}

// ---------------------------------------------------------------- abelianization

Abelianization abelianization(const GroupPtr& gp) {
  const auto comm = commutator_subgroup(*gp);
  const QuotientGroup Q = quotient(gp, comm);
  const FiniteGroup& q = *Q.group;
  const std::size_t n = q.order();
  const auto gens = greedy_generators(q);
  const std::size_t k = gens.size();

  // Coordinates of each element in terms of gens, built generator by
  // generator; relations are triangular with determinant |Q|.
  std::map<Elem, std::vector<i64>> coord{{0, std::vector<i64>(k, 0)}};
  zmod::Matrix rel(0, k);
  for (std::size_t i = 0; i < k; ++i) {
    const Elem s = gens[i];
    i64 c = 1;
    Elem p = s;
    while (!coord.count(p)) {
      p = q.mul(p, s);
      ++c;
    }
    std::vector<i64> row = coord.at(p);
    for (auto& v : row) v = -v;
    row[i] += c;
    rel.append_row(row);
    std::map<Elem, std::vector<i64>> next;
    Elem power = 0;
    for (i64 j = 0; j < c; ++j) {
      for (const auto& [x, v] : coord) {
        auto w = v;
        w[i] = j;
        next.emplace(q.mul(x, power), std::move(w));
      }
      power = q.mul(power, s);
    }
    coord = std::move(next);
  }
  const zmod::AbelianQuotient aq(rel, k, static_cast<i64>(n));
  Abelianization A;
  A.ab = AbelianGroup(aq.invariants());
  A.group = make_abelian(A.ab);
  std::vector<Elem> to_ab(n);
  for (const auto& [x, v] : coord) to_ab[x] = static_cast<Elem>(A.ab.index(aq.coords(v)));
  std::vector<Elem> img(gp->order());
  for (Elem g = 0; g < gp->order(); ++g) img[g] = to_ab[Q.hom(g)];
  A.q = GroupHom(gp, A.group, std::move(img));
  A.section.assign(A.group->order(), static_cast<Elem>(gp->order()));
  for (Elem g = gp->order(); g-- > 0;) A.section[A.q(g)] = g;
  if (!A.q.surjective()) throw Error(ErrorCode::Mismatch, "abelianization map not surjective");
  return A;
}

// ---------------------------------------------------------------- duals

GroupPtr dual_group(const GroupPtr& a) {
  if (!a->abelian_structure()) throw Error(ErrorCode::InvalidArgument, "dual of a group without abelian structure");
  return make_abelian(*a->abelian_structure());
}

GroupHom dual_hom(const GroupHom& psi) {
  const auto& sa = psi.source()->abelian_structure();
  const auto& sb = psi.target()->abelian_structure();
  if (!sa || !sb) throw Error(ErrorCode::InvalidArgument, "dual_hom needs abelian source and target");
  const AbelianGroup& A = *sa;
  const AbelianGroup& B = *sb;
  // The value of the dual on chi is determined by a -> pairing(chi, psi(a))
  // rescaled into Z_exp(A); solve coordinatewise on the basis of A.
  const i64 eA = A.exponent(), eB = B.exponent();
  std::vector<Elem> img(B.order());
  for (std::size_t chi = 0; chi < B.order(); ++chi) {
    std::vector<i64> c(A.rank());
    for (std::size_t i = 0; i < A.rank(); ++i) {
      std::vector<i64> ei(A.rank(), 0);
      ei[i] = 1;
      const std::size_t a = A.index(ei);
      // pairing(chi, psi(e_i)) lies in Z_eB; as an element of Q/Z it must have
      // order dividing d_i. Its value chi'_i (exp(A)/d_i) mod exp(A).
      const i64 v = B.pairing(chi, psi(static_cast<Elem>(a)));
      const i64 num = v * eA;  // v/eB = num/(eA eB)
      if (num % eB != 0) throw Error(ErrorCode::Mismatch, "dual value not in the dual group");
      const i64 val = num / eB;  // in Z_eA
      const i64 w = eA / A.factors()[i];
      if (val % w != 0) throw Error(ErrorCode::Mismatch, "dual value has wrong order");
      c[i] = val / w;
    }
    img[chi] = static_cast<Elem>(A.index(c));
  }
  GroupHom d(dual_group(psi.target()), dual_group(psi.source()), std::move(img));
  for (std::size_t chi = 0; chi < B.order(); ++chi)
    for (std::size_t a = 0; a < A.order(); ++a) {
      const i64 lhs = A.pairing(d(static_cast<Elem>(chi)), a);
      const i64 rhs = B.pairing(chi, psi(static_cast<Elem>(a)));
      if (zmod::mulmod(lhs, eB, eA * eB) != zmod::mulmod(rhs, eA, eA * eB))
        throw Error(ErrorCode::Mismatch, "dual_hom pairing identity failed");
    }
  return d;
}

}  // namespace twistcoh::grp
