#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>

#include "twistcoh/alg.hpp"
#include "twistcoh/bundle.hpp"
#include "twistcoh/error.hpp"

namespace twistcoh::alg {

using zmod::reduce;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

std::size_t BlockProfile::dim() const {
  std::size_t d = 0;
  for (auto s : sizes) d += s * s;
  return d;
}

std::string BlockProfile::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out + "}";
}

BlockProfile merge(const std::vector<BlockProfile>& parts) {
  BlockProfile p;
  for (const auto& q : parts) p.sizes.insert(p.sizes.end(), q.sizes.begin(), q.sizes.end());
  std::sort(p.sizes.begin(), p.sizes.end());
  return p;
}

std::size_t omega_regular_classes(const GroupPtr& g, const Cochain& omega) {
  const auto& G = *g;
  const std::size_t n = G.order();
  std::vector<bool> seen(n, false);
  std::size_t count = 0;
  for (Elem s = 0; s < n; ++s) {
    if (seen[s]) continue;
    for (Elem t = 0; t < n; ++t) seen[G.mul(G.mul(t, s), G.inv(t))] = true;
    bool regular = true;
    for (Elem t = 0; t < n && regular; ++t)
      if (G.commute(s, t)) regular = omega.at(0, s, t) == omega.at(0, t, s);
    if (regular) ++count;
  }
  return count;
}

std::size_t exact_block_count(const MonomialStarAlgebra& A, std::size_t x) {
  const auto& c = A.components[x];
  if (!c) throw Error(ErrorCode::InvalidArgument, "fiber " + std::to_string(x) + " carries no group data");
  return omega_regular_classes(c->group, c->omega);
}

namespace {

double match_tol(double tol) { return std::max(1e-6, 100 * tol); }

struct Local {
  std::vector<std::size_t> basis;
  std::map<std::size_t, std::size_t> index;
};

Local local_of(const MonomialStarAlgebra& A, std::size_t x) {
  Local l{A.fiber_basis(x), {}};
  for (std::size_t k = 0; k < l.basis.size(); ++k) l.index[l.basis[k]] = k;
  return l;
}

// Matrix of left multiplication by δ_a on the fiber.
Mat left_matrix(const MonomialStarAlgebra& A, const Local& l, std::size_t a) {
  const std::size_t n = l.basis.size();
  Mat L = Mat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t t = A.target(a, l.basis[k]);
    if (t != kZero) L(static_cast<Eigen::Index>(l.index.at(t)), static_cast<Eigen::Index>(k)) = root_of_unity(A.exponent(a, l.basis[k]), A.modulus());
  }
  return L;
}

Vec product(const MonomialStarAlgebra& A, const Local& l, const Vec& x, const Vec& y) {
  Vec out = Vec::Zero(x.size());
  for (std::size_t i = 0; i < l.basis.size(); ++i) {
    if (x(static_cast<Eigen::Index>(i)) == 0.0) continue;
    for (std::size_t j = 0; j < l.basis.size(); ++j) {
      const std::size_t t = A.target(l.basis[i], l.basis[j]);
      if (t == kZero) continue;
      out(static_cast<Eigen::Index>(l.index.at(t))) +=
          x(static_cast<Eigen::Index>(i)) * y(static_cast<Eigen::Index>(j)) *
          root_of_unity(A.exponent(l.basis[i], l.basis[j]), A.modulus());
    }
  }
  return out;
}

Vec star(const MonomialStarAlgebra& A, const Local& l, const Vec& x) {
  Vec out = Vec::Zero(x.size());
  for (std::size_t i = 0; i < l.basis.size(); ++i) {
    const std::size_t s = A.star_target(l.basis[i]);
    out(static_cast<Eigen::Index>(l.index.at(s))) +=
        std::conj(x(static_cast<Eigen::Index>(i))) * root_of_unity(A.star_exponent(l.basis[i]), A.modulus());
  }
  return out;
}

// Orthonormal basis of the center: null space of Σ_a (L_a - R_a)^†(L_a - R_a).
Mat center_basis(const MonomialStarAlgebra& A, const Local& l, double tol) {
  const auto n = static_cast<Eigen::Index>(l.basis.size());
  Mat C = Mat::Zero(n, n);
  for (std::size_t a : l.basis) {
    // Column b: δ_b δ_a - δ_a δ_b.
    Mat D = Mat::Zero(n, n);
    for (Eigen::Index b = 0; b < n; ++b) {
      const std::size_t bb = l.basis[static_cast<std::size_t>(b)];
      const std::size_t ba = A.target(bb, a), ab = A.target(a, bb);
      if (ba != kZero) D(static_cast<Eigen::Index>(l.index.at(ba)), b) += root_of_unity(A.exponent(bb, a), A.modulus());
      if (ab != kZero) D(static_cast<Eigen::Index>(l.index.at(ab)), b) -= root_of_unity(A.exponent(a, bb), A.modulus());
    }
    C += D.adjoint() * D;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(C);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i)
    if (ev(i) <= tol * scale) keep.push_back(i);
  Mat Z(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) Z.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
  return Z;
}

std::optional<FiberBlocks> attempt(const MonomialStarAlgebra& A, const Local& l, std::size_t x, std::size_t exact,
                                   std::uint64_t seed, double tol) {
  const auto n = static_cast<Eigen::Index>(l.basis.size());
  const Mat Z = center_basis(A, l, tol);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(x >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss;
  Vec z = Vec::Zero(n);
  for (Eigen::Index j = 0; j < Z.cols(); ++j) z += Cx(gauss(rng), gauss(rng)) * Z.col(j);
  const Vec h = z + star(A, l, z);

  Mat Lh = Mat::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    if (std::abs(h(k)) > 0) Lh += h(k) * left_matrix(A, l, l.basis[static_cast<std::size_t>(k)]);
  Lh = (Lh + Lh.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(Lh);
  const auto& ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  if (!(scale > 0)) return std::nullopt;

  std::vector<std::vector<Eigen::Index>> clusters;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (clusters.empty() || (ev(i) - ev(clusters.back().back())) / scale > tol) clusters.emplace_back();
    clusters.back().push_back(i);
  }
  FiberBlocks fb;
  fb.exact_count = exact;
  fb.seed = seed;
  Vec unit = Vec::Zero(n);
  unit(static_cast<Eigen::Index>(l.index.at(A.unit(x)))) = 1.0;
  for (const auto& c : clusters) {
    const auto m = c.size();
    const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
    if (d * d != m) return std::nullopt;
    Mat V(n, static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j) V.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(c[j]);
    const Vec p = V * (V.adjoint() * unit);
    fb.block_size.push_back(d);
    fb.idempotents.emplace_back(p.data(), p.data() + p.size());
  }
  fb.profile.sizes = fb.block_size;
  std::sort(fb.profile.sizes.begin(), fb.profile.sizes.end());
  if (fb.profile.dim() != l.basis.size() || fb.profile.count() != exact) return std::nullopt;
  // The projections must be genuine central idempotents.
  const double check = match_tol(tol);
  for (const auto& pv : fb.idempotents) {
    const Vec p = Eigen::Map<const Vec>(pv.data(), n);
    if ((product(A, l, p, p) - p).cwiseAbs().maxCoeff() > check) return std::nullopt;
    if ((star(A, l, p) - p).cwiseAbs().maxCoeff() > check) return std::nullopt;
  }
  return fb;
}

}  // namespace

FiberBlocks analyze_fiber(const MonomialStarAlgebra& A, std::size_t x, const NumericOptions& opt) {
  const Local l = local_of(A, x);
  const std::size_t exact = exact_block_count(A, x);
  constexpr int kAttempts = 4;
  for (int k = 0; k < kAttempts; ++k)
    if (auto fb = attempt(A, l, x, exact, opt.seed + static_cast<std::uint64_t>(k) * 0x9e3779b97f4a7c15ULL, opt.tol))
      return *fb;
  throw Error(ErrorCode::ProfileInconsistent,
              "fiber " + std::to_string(x) + ": numerical blocks disagree with " + std::to_string(exact) +
                  " exact blocks after " + std::to_string(kAttempts) + " attempts");
}

BlockProfile block_profile(const MonomialStarAlgebra& A, const NumericOptions& opt) {
  std::vector<BlockProfile> parts;
  for (std::size_t x = 0; x < A.fibers(); ++x) parts.push_back(analyze_fiber(A, x, opt).profile);
  return merge(parts);
}

bool profile_stable(const MonomialStarAlgebra& A, std::size_t seeds, const NumericOptions& opt) {
  for (std::size_t x = 0; x < A.fibers(); ++x) {
    const Local l = local_of(A, x);
    const std::size_t exact = exact_block_count(A, x);
    std::optional<BlockProfile> first;
    for (std::size_t k = 0; k < seeds; ++k) {
      // No retries: every seed has to succeed on its own.
      const auto fb = attempt(A, l, x, exact, opt.seed + 1000003ULL * k, opt.tol);
      if (!fb) return false;
      if (!first) first = fb->profile;
      else if (!(*first == fb->profile)) return false;
    }
  }
  return true;
}

std::vector<std::size_t> block_permutation(const MonomialStarAlgebra& A, std::size_t x, const FiberBlocks& b,
                                           const MonomialAction& act, std::size_t gamma, double tol) {
  const Local l = local_of(A, x);
  const std::size_t n = l.basis.size();
  const i64 m = act.modulus;
  std::vector<std::size_t> out;
  std::set<std::size_t> used;
  for (const auto& p : b.idempotents) {
    std::vector<Cx> q(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const auto [t, e] = act.apply(gamma, l.basis[k]);
      q[l.index.at(t)] += p[k] * root_of_unity(e, m);
    }
    std::size_t best = kZero;
    double dist = 0;
    for (std::size_t j = 0; j < b.idempotents.size(); ++j) {
      double d = 0;
      for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(q[k] - b.idempotents[j][k]));
      if (best == kZero || d < dist) {
        best = j;
        dist = d;
      }
    }
    if (best == kZero || dist > match_tol(tol) || !used.insert(best).second)
      throw Error(ErrorCode::ProfileInconsistent, "action does not permute the blocks of fiber " + std::to_string(x));
    out.push_back(best);
  }
  return out;
}

std::vector<std::vector<std::size_t>> block_actions(const MonomialStarAlgebra& A, std::size_t x,
                                                    const FiberBlocks& b, const MonomialAction& act, double tol) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t g = 0; g < act.group.order(); ++g) out.push_back(block_permutation(A, x, b, act, g, tol));
  return out;
}

std::optional<std::vector<std::size_t>> equivariant_set_bijection(const std::vector<std::vector<std::size_t>>& left,
                                                                  const std::vector<std::vector<std::size_t>>& right) {
  if (left.size() != right.size() || left.empty()) return std::nullopt;
  const std::size_t K = left.size(), nl = left[0].size(), nr = right[0].size();
  if (nl != nr) return std::nullopt;
  struct Orbit {
    std::size_t rep;
    std::vector<std::size_t> stab;
  };
  auto orbits = [&](const std::vector<std::vector<std::size_t>>& act, std::size_t n) {
    std::vector<Orbit> out;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i]) continue;
      Orbit o{i, {}};
      for (std::size_t g = 0; g < K; ++g) {
        seen[act[g][i]] = true;
        if (act[g][i] == i) o.stab.push_back(g);
      }
      out.push_back(std::move(o));
    }
    return out;
  };
  const auto lo = orbits(left, nl), ro = orbits(right, nr);
  std::vector<bool> taken(ro.size(), false);
  std::vector<std::size_t> map(nl, kZero);
  for (const auto& o : lo) {
    std::size_t pick = kZero;
    for (std::size_t j = 0; j < ro.size() && pick == kZero; ++j)
      if (!taken[j] && ro[j].stab == o.stab) pick = j;
    if (pick == kZero) return std::nullopt;
    taken[pick] = true;
    for (std::size_t g = 0; g < K; ++g) map[left[g][o.rep]] = right[g][ro[pick].rep];
  }
  if (std::set<std::size_t>(map.begin(), map.end()).size() != nl || std::count(map.begin(), map.end(), kZero))
    return std::nullopt;
  for (std::size_t g = 0; g < K; ++g)
    for (std::size_t i = 0; i < nl; ++i)
      if (map[left[g][i]] != right[g][map[i]]) return std::nullopt;
  return map;
}

std::vector<Cochain> characters(const GroupPtr& g, const Cochain& omega) {
  if (omega.base() != 1 || omega.degree() != 2) throw Error(ErrorCode::InvalidArgument, "ω must be a single-point 2-cocycle");
  if (!twisted_group_algebra(g, omega).is_commutative())
    throw Error(ErrorCode::InvalidArgument, "characters need a commutative fiber");
  const auto B = bundle::build_Zu(omega);
  std::vector<Cochain> out;
  for (std::size_t p = 0; p < B.size(); ++p) out.push_back(B.points().evaluate_at(p));
  return out;
}

}  // namespace twistcoh::alg
