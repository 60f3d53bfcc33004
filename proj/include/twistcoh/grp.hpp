#pragma once
// Finite groups as dense multiplication tables. Identity is always index 0.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twistcoh::grp {

using Elem = std::uint32_t;
using i64 = std::int64_t;

std::size_t max_order();
void set_max_order(std::size_t n);

// Direct sum Z_{d_1} + ... + Z_{d_r}, elements indexed mixed-radix with the
// first coordinate most significant. Factors need not form a divisibility
// chain; invariant_factors() gives the canonical form.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<i64> factors);

  const std::vector<i64>& factors() const { return d_; }
  std::size_t rank() const { return d_.size(); }
  std::size_t order() const { return order_; }
  i64 exponent() const { return exp_; }
  std::vector<i64> invariant_factors() const;
  bool isomorphic(const AbelianGroup& other) const;

  std::vector<i64> coords(std::size_t index) const;
  std::size_t index(std::span<const i64> coords) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t neg(std::size_t a) const;
  std::size_t scale(std::size_t a, i64 k) const;

  // Bilinear nondegenerate pairing with the dual (same factors), valued in
  // Z_{exponent()}.
  i64 pairing(std::size_t chi, std::size_t a) const;

  bool operator==(const AbelianGroup& o) const { return d_ == o.d_; }

 private:
  std::vector<i64> d_;
  std::size_t order_ = 1;
  i64 exp_ = 1;
};

class FiniteGroup {
 public:
  // Validates the table. Relabels so that the identity sits at index 0; the
  // original index of each element is kept in original_index().
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table);

  std::size_t order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  static constexpr Elem identity() { return 0; }

  bool is_abelian() const;
  std::size_t element_order(Elem a) const;
  i64 exponent() const;
  std::vector<Elem> center() const;
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  const std::optional<AbelianGroup>& abelian_structure() const { return abelian_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Elem>& original_index() const { return original_; }
  std::vector<std::vector<Elem>> table() const;
  bool same_table(const FiniteGroup& other) const { return mul_ == other.mul_; }

  FiniteGroup with_labels(std::vector<std::string> labels) const;

  // For tables produced by a construction that is a group by design (products,
  // cosets, componentwise addition). Checks identity and inverses, skips the
  // cubic associativity scan.
  static FiniteGroup constructed(std::size_t n, std::vector<Elem> mul,
                                 std::vector<std::string> labels = {},
                                 std::optional<AbelianGroup> abelian = std::nullopt);

 private:
  FiniteGroup() = default;
  void finish_inverses();

  std::size_t n_ = 0;
  std::vector<Elem> mul_, inv_, original_;
  std::vector<std::string> labels_;
  std::optional<AbelianGroup> abelian_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_abelian(const std::vector<i64>& factors);
GroupPtr make_abelian(const AbelianGroup& a);
GroupPtr make_table(const std::vector<std::vector<Elem>>& table);
GroupPtr dihedral(std::size_t n);    // order 2n
GroupPtr heisenberg(i64 p);          // upper unitriangular 3x3 over Z_p
GroupPtr symmetric3();

class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> image);  // validates
  static GroupHom identity(GroupPtr g);
  static GroupHom trivial(GroupPtr source, GroupPtr target);

  Elem operator()(Elem a) const { return image_[a]; }
  const GroupPtr& source() const { return src_; }
  const GroupPtr& target() const { return tgt_; }
  const std::vector<Elem>& image() const { return image_; }
  std::vector<Elem> kernel() const;
  bool injective() const;
  bool surjective() const;
  GroupHom compose_after(const GroupHom& inner) const;  // this ∘ inner

 private:
  GroupPtr src_, tgt_;
  std::vector<Elem> image_;
};

struct ProductGroup {
  GroupPtr group;
  GroupHom proj1, proj2, incl1, incl2;
  std::size_t right_order = 1;
  Elem pair(Elem g, Elem h) const { return static_cast<Elem>(right_order * g + h); }
};

ProductGroup direct_product(const GroupPtr& g, const GroupPtr& h);

// Subgroup generated by `gens`, sorted ascending.
std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens);
bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elems);
bool is_normal(const FiniteGroup& g, std::span<const Elem> elems);
std::vector<Elem> commutator_subgroup(const FiniteGroup& g);
// Greedy generating set: repeatedly adds the least element outside the span.
std::vector<Elem> greedy_generators(const FiniteGroup& g);

struct QuotientGroup {
  GroupPtr group;
  GroupHom hom;
  std::vector<Elem> representatives;  // least index per coset
};

QuotientGroup quotient(const GroupPtr& g, std::span<const Elem> kernel);

// Subgroup as a group in its own right plus the inclusion.
struct Subgroup {
  GroupPtr group;
  GroupHom inclusion;
};
Subgroup subgroup(const GroupPtr& g, std::span<const Elem> elems);

struct Abelianization {
  AbelianGroup ab;                 // invariant-factor form
  GroupPtr group;                  // make_abelian(ab)
  GroupHom q;                      // G -> G_ab
  std::vector<Elem> section;       // least-index preimage per element of G_ab
};

Abelianization abelianization(const GroupPtr& g);

// ψ: A -> B between groups built by make_abelian; result B^ -> A^ on the
// dual groups (same index sets).
GroupHom dual_hom(const GroupHom& psi);
GroupPtr dual_group(const GroupPtr& a);

}  // namespace twistcoh::grp
