#pragma once
// Cochains G^n -> Z_M over a finite base X, coboundaries, coboundary tests
// with witnesses, and second cohomology over Z_M and over the circle.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "twistcoh/grp.hpp"
#include "twistcoh/zmod.hpp"

namespace twistcoh::coh {

using grp::Elem;
using grp::GroupPtr;
using i64 = std::int64_t;

// A value e at modulus M stands for exp(2 pi i e / M). Degrees 1 and 2 are
// normalized: an identity argument forces the value 0.
class Cochain {
 public:
  Cochain() = default;
  Cochain(GroupPtr g, int degree, std::size_t base, i64 modulus);

  const GroupPtr& group() const { return g_; }
  int degree() const { return deg_; }
  std::size_t base() const { return base_; }
  i64 modulus() const { return m_; }
  std::size_t order() const { return n_; }

  i64 at(std::size_t x) const { return v_[x]; }
  i64 at(std::size_t x, Elem s) const { return v_[x * n_ + s]; }
  i64 at(std::size_t x, Elem s, Elem t) const { return v_[(x * n_ + s) * n_ + t]; }
  i64 at(std::size_t x, Elem r, Elem s, Elem t) const { return v_[((x * n_ + r) * n_ + s) * n_ + t]; }

  void set(std::size_t x, i64 v);
  void set(std::size_t x, Elem s, i64 v);
  void set(std::size_t x, Elem s, Elem t, i64 v);

  const std::vector<i64>& values() const { return v_; }
  // Raw access for bulk construction; callers keep values reduced and normalized.
  std::vector<i64>& values_mut() { return v_; }
  std::size_t stride() const { return v_.size() / base_; }

  // Same circle values at modulus m, M | m.
  Cochain embedded(i64 m) const;
  Cochain evaluate_at(std::size_t x) const;
  // Base reindexing: result at i is this at xs[i] (repeats allowed).
  Cochain restrict_base(std::span<const std::size_t> xs) const;
  // Replicates a single-point cochain over `base` points.
  Cochain constant_over(std::size_t base) const;
  // Modulus made as small as possible without changing values.
  Cochain reduced() const;

  bool is_zero() const;
  bool normalized() const;
  bool operator==(const Cochain& o) const;

 private:
  GroupPtr g_;
  int deg_ = 0;
  std::size_t base_ = 1, n_ = 1;
  i64 m_ = 1;
  std::vector<i64> v_;
};

Cochain multiply(const Cochain& a, const Cochain& b);
Cochain invert(const Cochain& a);
Cochain power(const Cochain& a, i64 k);
Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& u);
// Whether the next coboundary of c vanishes; covers degree 3 without building
// degree-4 cochains.
bool coboundary_is_zero(const Cochain& c);
Cochain inflate(const Cochain& u, const grp::GroupHom& q);

// Per base point: a witness f over Z_m with ∂f = u(x) embedded, or nullopt.
std::vector<std::optional<std::vector<i64>>> coboundary_witnesses(const Cochain& u, i64 m);

std::optional<Cochain> is_coboundary_mod(const Cochain& u, i64 m);
std::optional<Cochain> is_coboundary_circle(const Cochain& u);

struct PointwiseResult {
  std::optional<Cochain> witnesses;  // degree 1 over Z_{M|G|}
  std::vector<std::size_t> failing;
};
PointwiseResult pointwise_trivial(const Cochain& u);

// Number of homomorphisms G -> Z_m.
i64 hom_count(const GroupPtr& g, i64 m);

// H^2(G, Z_M) via a generator parametrization of normalized cocycles.
class H2Mod {
 public:
  H2Mod(GroupPtr g, i64 M);

  const GroupPtr& group() const { return g_; }
  i64 modulus() const { return M_; }
  const std::vector<i64>& invariants() const { return inv_; }
  const std::vector<Cochain>& representatives() const { return reps_; }
  i64 order() const;
  // Coordinates of a cocycle whose modulus divides M.
  std::vector<i64> coordinates(const Cochain& u) const;
  Cochain cocycle(std::span<const i64> coords) const;

 private:
  std::vector<i64> params_of(const Cochain& u) const;
  Cochain from_params(std::span<const i64> p) const;

  GroupPtr g_;
  i64 M_;
  std::vector<Elem> gens_;
  std::size_t P_ = 0;
  std::vector<std::vector<i64>> forms_;  // (r * n + w) -> parameter vector
  zmod::Matrix V_, Vinv_;
  std::vector<i64> zorder_;             // g_i for kept kernel coordinates
  std::vector<std::size_t> zpos_;
  std::optional<zmod::AbelianQuotient> quot_;
  std::vector<i64> inv_;
  std::vector<Cochain> reps_;
};

// H^2(G, T) as H^2(G, Z_|G|) modulo the classes δ(γ), γ in Ĝ_ab.
class H2Circle {
 public:
  explicit H2Circle(GroupPtr g);

  const GroupPtr& group() const { return g_; }
  const std::vector<i64>& invariants() const { return inv_; }
  const std::vector<Cochain>& representatives() const { return reps_; }
  i64 order() const;
  const H2Mod& mod() const { return h_; }

  // Class coordinates for each base point of u (any modulus).
  std::vector<std::vector<i64>> class_of_each(const Cochain& u) const;
  std::vector<i64> class_of(const Cochain& u) const;  // base size 1
  // Same answer via H^2(G, Z_|G|) coordinates; requires M | |G|.
  std::vector<i64> class_via_mod(const Cochain& u) const;
  Cochain cocycle(std::span<const i64> coords) const;
  std::size_t flat_index(std::span<const i64> coords) const;
  std::vector<i64> unflatten(std::size_t idx) const;

 private:
  GroupPtr g_;
  H2Mod h_;
  std::optional<zmod::AbelianQuotient> quot_;
  std::vector<i64> inv_;
  std::vector<Cochain> reps_;
};

H2Mod h2_mod(const GroupPtr& g, i64 M);
H2Circle h2_circle(const GroupPtr& g);

struct CohClass {
  Cochain rep;
  bool circle = true;
  bool operator==(const CohClass& o) const;
};

}  // namespace twistcoh::coh
