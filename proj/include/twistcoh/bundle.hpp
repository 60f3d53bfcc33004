#pragma once
// The torsor bundle Z_u of a pointwise-trivial cocycle over a finite base,
// its products and trivializations, and the map onto the dual of E_ab for a
// pointwise-trivial central extension.

#include <optional>
#include <vector>

#include "twistcoh/coh.hpp"
#include "twistcoh/ext.hpp"
#include "twistcoh/grp.hpp"

namespace twistcoh::bundle {

using coh::Cochain;
using grp::Elem;
using grp::GroupPtr;
using i64 = std::int64_t;

// Points are indexed x * |F| + γ: the witness f_x shifted by the character γ
// of G_ab, read as a cochain G -> Z_{M'}.
class TorsorBundle {
 public:
  TorsorBundle(Cochain u, const Cochain& witnesses);

  const GroupPtr& group() const { return u_.group(); }
  const Cochain& cocycle() const { return u_; }
  const grp::Abelianization& ab() const { return ab_; }
  const grp::AbelianGroup& fiber_group() const { return ab_.ab; }
  std::size_t base() const { return u_.base(); }
  std::size_t fiber_size() const { return ab_.ab.order(); }
  std::size_t size() const { return points_.base(); }
  i64 modulus() const { return m_; }

  // Degree-1 cochain with one base slot per point.
  const Cochain& points() const { return points_; }
  std::size_t base_of(std::size_t point) const { return point / fiber_size(); }
  std::size_t act(std::size_t gamma, std::size_t point) const;
  // γ as a cochain G -> Z_{M'}.
  Cochain character(std::size_t gamma) const;
  // Point over x with the given values (modulus m), compared as circle values.
  std::optional<std::size_t> find(std::size_t x, const Cochain& f) const;

  struct Check {
    bool equations = false;    // ∂f = u(x) at every point
    bool free = false;
    bool transitive = false;   // per fiber, by comparing cochains
    bool complete = false;     // |Hom(G, Z_{M'})| = |F|
    bool ok() const { return equations && free && transitive && complete; }
  };
  Check verify() const;

 private:
  Cochain u_;
  grp::Abelianization ab_;
  i64 m_ = 1;
  Cochain points_;
};

TorsorBundle build_Zu(const Cochain& u);

struct ProductBundle {
  TorsorBundle product;  // build_Zu(u·v)
  // Orbit of (a, b) under the antidiagonal action, as an index of `product`.
  std::vector<std::size_t> orbit;  // a * |B| + b -> point of product
  bool well_defined = false;       // f_a + f_b is constant on each orbit
  bool bijective = false;
  bool equivariant = false;
  bool ok() const { return well_defined && bijective && equivariant; }
};
ProductBundle bundle_product(const TorsorBundle& a, const TorsorBundle& b);

struct Trivialization {
  std::vector<std::size_t> section;  // x -> point
  Cochain witness;                   // degree 1 over X with ∂g = u
  bool verified = false;
};
Trivialization trivialization(const TorsorBundle& b, const std::vector<std::size_t>& twist = {});

struct PsiIso {
  TorsorBundle bundle;          // Z_η over X = N̂
  grp::Abelianization eab;
  std::vector<std::size_t> map;  // point -> character of E_ab
  bool character = false;
  bool bijective = false;
  bool equivariant = false;
  bool fiber_preserving = false;
  bool ok() const { return character && bijective && equivariant && fiber_preserving; }
};
PsiIso psi_iso(const ext::CentralExtension& e);
// Values of Ψ(f, χ) on every element of E, at the bundle modulus.
std::vector<i64> psi_values(const ext::CentralExtension& e, const TorsorBundle& b, std::size_t point);

struct BundleIso {
  std::vector<std::size_t> map;  // point of the first bundle -> point of the second
  bool verified = false;         // bijective, base-preserving, equivariant
};
// With a witness g (degree 1 over X, v = ∂g·u) the map is (f, x) -> (f + g(x), x);
// otherwise a witness is searched for.
std::optional<BundleIso> equivariant_bundle_iso(const TorsorBundle& a, const TorsorBundle& b,
                                                const std::optional<Cochain>& witness = std::nullopt);

}  // namespace twistcoh::bundle
