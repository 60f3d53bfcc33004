#pragma once
// Central extensions and their cocycles, transgression, representation groups,
// the decomposition of H^2(G, C(X,T)) and the L' construction.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "twistcoh/coh.hpp"
#include "twistcoh/grp.hpp"

namespace twistcoh::ext {

using coh::Cochain;
using grp::AbelianGroup;
using grp::Elem;
using grp::GroupHom;
using grp::GroupPtr;
using i64 = std::int64_t;

// N-valued cochain stored as one scalar cochain per factor Z_{d_i} of N.
struct ValuedCochain {
  AbelianGroup N;
  std::vector<Cochain> parts;
  GroupPtr group;
  std::size_t base = 1;

  static ValuedCochain zero(GroupPtr g, AbelianGroup N, int degree = 2, std::size_t base = 1);
  std::size_t at(std::size_t x, Elem s, Elem t) const;  // index in N
  void set(std::size_t x, Elem s, Elem t, std::size_t n);
  bool is_cocycle() const;
  bool operator==(const ValuedCochain& o) const;
};

class CentralExtension {
 public:
  // Validates all structure; an empty section selects the least index in each
  // fiber of p.
  CentralExtension(AbelianGroup N, GroupPtr G, GroupPtr E, GroupHom iota, GroupHom p,
                   std::vector<Elem> section = {});

  const AbelianGroup& N() const { return N_; }
  const GroupPtr& N_group() const { return Ng_; }
  const GroupPtr& G() const { return G_; }
  const GroupPtr& E() const { return E_; }
  const GroupHom& iota() const { return iota_; }
  const GroupHom& p() const { return p_; }
  const std::vector<Elem>& section() const { return c_; }
  // ι^{-1} on ι(N).
  std::size_t n_of(Elem e) const;

 private:
  AbelianGroup N_;
  GroupPtr Ng_, G_, E_;
  GroupHom iota_, p_;
  std::vector<Elem> c_;
  std::vector<std::size_t> iota_inv_;
};

CentralExtension extension_from_cocycle(const ValuedCochain& eta);
ValuedCochain cocycle_from_extension(const CentralExtension& e);

// (χ∘η)(s,t) = pairing(χ, η(s,t)) at modulus exp(N).
Cochain pairing_cocycle(const ValuedCochain& eta, std::size_t chi);
// χ∘η for every χ in N̂, indexed by χ as the base point.
Cochain character_cocycle(const ValuedCochain& eta);

std::vector<i64> transgression(const CentralExtension& e, std::size_t chi, const coh::H2Circle& h2);

struct PointwiseExtension {
  bool pointwise_trivial = false;   // restriction Ê_ab -> N̂ surjective
  bool cocycle_route = false;       // every χ∘η trivial over T
  grp::Abelianization eab;
  std::vector<std::size_t> restriction;                // ψ in Ê_ab -> χ in N̂
  std::vector<std::optional<std::size_t>> extending;  // χ -> least ψ restricting to χ
};
PointwiseExtension is_pointwise_trivial_extension(const CentralExtension& e);

struct RepresentationGroup {
  std::shared_ptr<const CentralExtension> ext;
  ValuedCochain mu;
  std::shared_ptr<const coh::H2Circle> h2;
  std::vector<std::vector<i64>> tg;  // per ζ in Ẑ
  std::map<std::vector<i64>, std::size_t> inverse;

  const AbelianGroup& Z() const { return ext->N(); }
  std::size_t zeta_of(const std::vector<i64>& coords) const;
};

RepresentationGroup representation_group_abelian(const GroupPtr& G);
RepresentationGroup verify_representation_group(const CentralExtension& e);

std::vector<std::size_t> classify_cocycle(const Cochain& u, const RepresentationGroup& R);
Cochain build_u_phi(const std::vector<std::size_t>& phi, const RepresentationGroup& R);

struct Lift {
  grp::Abelianization ab;
  Cochain utilde;  // on G_ab over X
  Cochain g;       // ∂g · w = inf(utilde)
};
Lift lift_to_abelianization(const Cochain& w);

struct Decomposition {
  std::vector<std::size_t> phi;
  grp::Abelianization ab;
  Cochain v;      // on G_ab
  Cochain g;      // u = ∂g · inf(v) · u_phi
  Cochain u_phi;
};
Decomposition decompose(const Cochain& u, const RepresentationGroup& R);

struct InflatedExtension {
  CentralExtension ext;
  bool cocycle_identity = false;  // ∂_G d = inf(∂_{G_ab} c)
};
InflatedExtension inflate_extension(const CentralExtension& M, const grp::Abelianization& ab);

ValuedCochain pushforward_cocycle(const GroupHom& psi, const ValuedCochain& mu);

struct PrimeExtension {
  std::shared_ptr<const CentralExtension> ext;
  GroupHom phi;      // N̂ -> Ẑ
  GroupHom phi_hat;  // Z -> N
  bool central = false;
  bool cocycle_matches = false;     // η · (φ̂∘μ)^{-1} with section c×d
  bool product_identity = false;    // ∂(c×d)(s,t) = [η(s,t), μ(s,t)]
  bool pointwise_trivial = false;
};
PrimeExtension prime_extension(const CentralExtension& L, const RepresentationGroup& R);

struct H2GroupDecomposition {
  i64 h2_order = 0;      // |H^2(G, N)|
  i64 ab_order = 0;      // |H^2_ab(G_ab, N)|
  i64 hom_order = 0;     // |Hom(Z, N)|
  bool forward_injective = false;
  bool bijective = false;
  bool roundtrip = false;  // inverse then forward fixes each generator
};
H2GroupDecomposition decompose_h2_group(const GroupPtr& G, const AbelianGroup& N,
                                        const RepresentationGroup& R);

}  // namespace twistcoh::ext
