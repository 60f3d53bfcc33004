#pragma once
// Finite-dimensional *-algebras with monomial structure constants: twisted
// group algebras, central crossed products over a finite base, group algebras
// of central extensions, block decompositions, fibered constructions over
// torsor bundles and the comparison of both sides of the structure theorems.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistcoh/bundle.hpp"
#include "twistcoh/coh.hpp"
#include "twistcoh/ext.hpp"
#include "twistcoh/grp.hpp"

namespace twistcoh::alg {

using coh::Cochain;
using grp::AbelianGroup;
using grp::Elem;
using grp::GroupPtr;
using i64 = std::int64_t;
using Cx = std::complex<double>;

inline constexpr std::size_t kZero = static_cast<std::size_t>(-1);

// ζ^e with ζ = exp(2πi/m).
Cx root_of_unity(i64 e, i64 m);

// Twisted group algebra data for one fiber: basis[s] is the index of δ_s.
struct Component {
  GroupPtr group;
  Cochain omega;  // single base point
  std::vector<std::size_t> basis;
};

// δ_a δ_b = ζ^{e(a,b)} δ_{c(a,b)} or 0, δ_a* = ζ^{j(a)} δ_{i(a)}. The basis is
// partitioned into fibers; products across fibers vanish.
class MonomialStarAlgebra {
 public:
  MonomialStarAlgebra() = default;
  MonomialStarAlgebra(std::vector<std::size_t> fiber_of, std::size_t fibers, i64 modulus);

  std::size_t dim() const { return fiber_.size(); }
  std::size_t fibers() const { return units_.size(); }
  i64 modulus() const { return m_; }

  std::size_t target(std::size_t a, std::size_t b) const { return tgt_[a * dim() + b]; }
  i64 exponent(std::size_t a, std::size_t b) const { return exp_[a * dim() + b]; }
  void set_product(std::size_t a, std::size_t b, std::size_t target, i64 e);
  std::size_t star_target(std::size_t a) const { return star_tgt_[a]; }
  i64 star_exponent(std::size_t a) const { return star_exp_[a]; }
  void set_star(std::size_t a, std::size_t target, i64 e);
  // Every basis element unitary in its fiber: δ_a* = δ_a^{-1}.
  void derive_unitary_star();

  std::size_t fiber_of(std::size_t a) const { return fiber_[a]; }
  const std::vector<std::size_t>& fiber_basis(std::size_t x) const { return basis_[x]; }
  std::size_t unit(std::size_t x) const { return units_[x]; }
  void set_unit(std::size_t x, std::size_t a) { units_[x] = a; }

  std::vector<std::string> labels;
  std::vector<std::optional<Component>> components;  // per fiber

  bool is_commutative() const;
  struct Check {
    bool associative = false;
    bool involution = false;  // anti-multiplicative and of order 2
    bool unit = false;
    bool ok() const { return associative && involution && unit; }
  };
  Check verify() const;

  // Dense product of coefficient vectors (numerical path).
  std::vector<Cx> multiply(const std::vector<Cx>& x, const std::vector<Cx>& y) const;
  std::vector<Cx> star(const std::vector<Cx>& x) const;

 private:
  std::vector<std::size_t> fiber_;
  std::vector<std::vector<std::size_t>> basis_;
  std::vector<std::size_t> units_;
  i64 m_ = 1;
  std::vector<std::size_t> tgt_;
  std::vector<i64> exp_;
  std::vector<std::size_t> star_tgt_;
  std::vector<i64> star_exp_;
};

// Action of a finite abelian group by monomial *-automorphisms:
// γ(δ_a) = ζ^{twist} δ_{perm}.
struct MonomialAction {
  AbelianGroup group;
  i64 modulus = 1;
  std::vector<std::vector<std::size_t>> perm;  // [γ][a]
  std::vector<std::vector<i64>> twist;         // [γ][a]
  std::pair<std::size_t, i64> apply(std::size_t gamma, std::size_t a) const { return {perm[gamma][a], twist[gamma][a]}; }
  // Homomorphism property and compatibility with products and the involution.
  bool verify(const MonomialStarAlgebra& A) const;
};

struct FiberedAlgebra {
  MonomialStarAlgebra alg;
  MonomialAction action;
  std::size_t base() const { return alg.fibers(); }
};

// Monomial map a -> ζ^{exp[a]} δ_{target[a]} at modulus m.
struct MonomialMap {
  std::vector<std::size_t> target;
  std::vector<i64> exp;
  i64 modulus = 1;
};
struct MapCheck {
  bool bijective = false;
  bool multiplicative = false;
  bool star = false;
  bool ok() const { return bijective && multiplicative && star; }
};
MapCheck check_monomial_iso(const MonomialStarAlgebra& A, const MonomialStarAlgebra& B, const MonomialMap& f);
// f ∘ α_γ = β_γ ∘ f for every γ; both actions indexed by the same group.
bool check_equivariant(const MonomialAction& a, const MonomialAction& b, const MonomialMap& f);
MonomialMap identity_map(std::size_t n);

MonomialStarAlgebra twisted_group_algebra(const GroupPtr& g, const Cochain& omega);
// Dual action of the characters of G_ab: γ·δ_a = conj(γ(s)) δ_a, with s the
// group element labelling basis element a.
MonomialAction dual_action(const GroupPtr& g, const std::vector<Elem>& element_of);
// Value of γ in the dual of G_ab at s, as an exponent at modulus exp(G_ab).
i64 character_value(const grp::Abelianization& ab, std::size_t gamma, Elem s);
// The character γ∘h of H for h: H -> G, as an index in the dual of H_ab.
std::size_t restrict_character(const grp::Abelianization& g_ab, std::size_t gamma, const grp::GroupHom& h,
                               const grp::Abelianization& h_ab);
// ⊕_x C[G, u(x)] with basis (x, s) at index x|G| + s and the dual action.
FiberedAlgebra crossed_product(const Cochain& u);
// i_G(s) = Σ_x δ_(x,s): basis indices; i_A(ψ) is diagonal with coefficient ψ(x) at δ_(x,e).
std::vector<std::size_t> i_G(const FiberedAlgebra& A, Elem s);
std::vector<Cx> i_A(const FiberedAlgebra& A, const std::vector<Cx>& psi);

struct ExtensionAlgebra {
  MonomialStarAlgebra group_algebra;      // C[E]
  std::vector<std::vector<Cx>> idempotents;  // p_χ in C[E]
  FiberedAlgebra fibered;                 // corners δ_{c(s)} p_χ over N̂, with the dual action
  bool idempotents_ok = false;            // central, orthogonal, sum 1, δ_ι(n) p_χ = ζ^{χ(n)} p_χ
  bool corners_ok = false;                // corner products match, and ≅ C[G, χ∘η]
  bool dimension_ok = false;              // |E| = Σ_χ |G|
  bool ok() const { return idempotents_ok && corners_ok && dimension_ok; }
};
ExtensionAlgebra group_algebra_of_extension(const ext::CentralExtension& e, double tol = 1e-8);

// ------------------------------------------------------------ blocks

struct BlockProfile {
  std::vector<std::size_t> sizes;  // ascending
  std::size_t count() const { return sizes.size(); }
  std::size_t dim() const;
  std::string str() const;  // "{1,1,2}"
  bool operator==(const BlockProfile&) const = default;
};
BlockProfile merge(const std::vector<BlockProfile>& parts);

struct NumericOptions {
  std::uint64_t seed = 0;
  double tol = 1e-8;
};

std::size_t omega_regular_classes(const GroupPtr& g, const Cochain& omega);
std::size_t exact_block_count(const MonomialStarAlgebra& A, std::size_t x);

struct FiberBlocks {
  BlockProfile profile;
  std::vector<std::size_t> block_size;               // per block
  std::vector<std::vector<Cx>> idempotents;          // per block, fiber-local coordinates
  std::size_t exact_count = 0;
  std::uint64_t seed = 0;                            // seed that succeeded
};
// Numerical Artin-Wedderburn decomposition of one fiber: eigenspaces of the
// left-regular image of a random Hermitian central element. Cross-checked
// against the exact count and the dimension; retried, then ProfileInconsistent.
FiberBlocks analyze_fiber(const MonomialStarAlgebra& A, std::size_t x, const NumericOptions& opt = {});
BlockProfile block_profile(const MonomialStarAlgebra& A, const NumericOptions& opt = {});
// Profiles for `seeds` consecutive seeds agree.
bool profile_stable(const MonomialStarAlgebra& A, std::size_t seeds, const NumericOptions& opt = {});

// Permutation of the blocks of fiber x induced by γ.
std::vector<std::size_t> block_permutation(const MonomialStarAlgebra& A, std::size_t x, const FiberBlocks& b,
                                           const MonomialAction& act, std::size_t gamma, double tol = 1e-8);
std::vector<std::vector<std::size_t>> block_actions(const MonomialStarAlgebra& A, std::size_t x,
                                                    const FiberBlocks& b, const MonomialAction& act,
                                                    double tol = 1e-8);
// Equivariant bijection between two finite K-sets given by permutations per γ.
std::optional<std::vector<std::size_t>> equivariant_set_bijection(const std::vector<std::vector<std::size_t>>& left,
                                                                  const std::vector<std::vector<std::size_t>>& right);

// One-dimensional *-representations of a commutative C[G, ω], as degree-1
// cochains f with χ(δ_s) = ζ^{f(s)}; computed by the exact solver.
std::vector<Cochain> characters(const GroupPtr& g, const Cochain& omega);

// ------------------------------------------------------------ fibered constructions

FiberedAlgebra pull_back_algebra(const std::vector<std::size_t>& phi, const FiberedAlgebra& A);

// Z∗A over X. Elements are functions on points of Z with the constraint
// α_γ(F(z)) = F(γ⁻¹·z); basis E_(x,a) has E(z_x) = δ_a at the section point.
struct FiberedProduct {
  FiberedAlgebra algebra;
  std::vector<std::size_t> section;  // point z_x per base point
  // values[p][a]: E_a evaluated at point p, as (exponent, basis index of A).
  std::vector<std::vector<std::pair<i64, std::size_t>>> values;
  bool constraint_ok = false;
  bool product_ok = false;  // pointwise products of basis functions close up
  bool action_ok = false;   // F -> (z -> α_γ F(z)) preserves the constraint
  bool ok() const { return constraint_ok && product_ok && action_ok; }
};
FiberedProduct fibered_product_algebra(const bundle::TorsorBundle& Z, const FiberedAlgebra& A);
// Z ×_{Ĝ_ab} A for a single-fiber A: pull A back to X, then Z∗.
FiberedProduct induced_algebra(const bundle::TorsorBundle& Z, const FiberedAlgebra& A);

FiberedAlgebra tensor_product(const FiberedAlgebra& A, const FiberedAlgebra& B);

// ------------------------------------------------------------ checks

struct LemPointwiseReport {
  bool symmetric = false;
  bool commutative = false;
  bool characters_ok = false;  // every point of Z_v is a *-character
  bool bijective = false;      // and they exhaust the spectrum
  bool equivariant = false;    // τ_γ corresponds to γ̄·f
  std::size_t characters = 0;
  bool ok() const { return symmetric && commutative && characters_ok && bijective && equivariant; }
};
LemPointwiseReport verify_lem_pointwise(const Cochain& v);

struct DecomReport {
  bool twisted_action = false;  // β_l β_h = β_lh, w a cocycle, β fixes w
  bool algebra_ok = false;      // iterated crossed product is a *-algebra
  bool isomorphism = false;     // Φ exact on structure constants
  bool equivariant = false;
  bool ok() const { return twisted_action && algebra_ok && isomorphism && equivariant; }
};
// u lives on P.group = L × N.
DecomReport verify_prop_decom(const grp::ProductGroup& P, const Cochain& u);
// u on L, v on N over the same base.
DecomReport verify_prop_decom1(const grp::ProductGroup& P, const Cochain& u, const Cochain& v);

struct FiberComparison {
  std::size_t x = 0;
  BlockProfile left, right;
  std::size_t left_exact = 0, right_exact = 0;
  std::uint64_t left_seed = 0, right_seed = 0;  // seeds that produced the profiles
  bool count_match = false;
  bool profile_match = false;  // reported, not required
  bool bijection = false;      // equivariant bijection of block spaces
  std::vector<std::size_t> left_orbits, right_orbits;  // orbit sizes, ascending
};

struct TheoremReport {
  std::string name;
  std::vector<FiberComparison> fibers;
  std::vector<std::pair<std::string, bool>> checks;  // construction-level checks
  std::string failure;                               // first MismatchAt diagnostic
  bool ok() const;
};
// Throws MismatchAt with the report's diagnostic when it did not pass.
void enforce(const TheoremReport& r);

TheoremReport compare_systems(const std::string& name, const FiberedAlgebra& left, const FiberedAlgebra& right,
                              const NumericOptions& opt = {});
// u with constant class [ω]; v = u·ω̄ pointwise trivial.
TheoremReport verify_thm_pt(const Cochain& u, const Cochain& omega, const NumericOptions& opt = {});
TheoremReport verify_thm_general(const Cochain& u, const ext::RepresentationGroup& R, const NumericOptions& opt = {});
TheoremReport verify_cor_pt_group(const ext::CentralExtension& L, const NumericOptions& opt = {});
TheoremReport verify_thm_groupex(const ext::CentralExtension& L, const ext::RepresentationGroup& R,
                                 const NumericOptions& opt = {});

}  // namespace twistcoh::alg
