#include <algorithm>
#include <string>

#include "twistcoh/alg.hpp"
#include "twistcoh/error.hpp"

namespace twistcoh::alg {

bool TheoremReport::ok() const {
  for (const auto& [name, pass] : checks)
    if (!pass) return false;
  for (const auto& f : fibers)
    if (!f.count_match || !f.bijection) return false;
  return true;
}

void enforce(const TheoremReport& r) {
  if (!r.ok()) throw Error(ErrorCode::MismatchAt, r.name + ": " + r.failure);
}

namespace {

std::vector<std::size_t> orbit_sizes(const std::vector<std::vector<std::size_t>>& act) {
  std::vector<std::size_t> out;
  if (act.empty()) return out;
  std::vector<bool> seen(act[0].size(), false);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) continue;
    std::size_t k = 0;
    for (const auto& g : act)
      if (!seen[g[i]]) {
        seen[g[i]] = true;
        ++k;
      }
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void note(TheoremReport& r, const std::string& which, std::size_t x, const std::string& l, const std::string& rt) {
  if (r.failure.empty())
    r.failure = "MismatchAt(x=" + std::to_string(x) + ", " + which + "): left " + l + " right " + rt;
}

}  // namespace

TheoremReport compare_systems(const std::string& name, const FiberedAlgebra& left, const FiberedAlgebra& right,
                              const NumericOptions& opt) {
  TheoremReport r;
  r.name = name;
  const bool same_base = left.base() == right.base();
  const bool same_group = left.action.group == right.action.group;
  r.checks.emplace_back("same_base", same_base);
  r.checks.emplace_back("same_action_group", same_group);
  r.checks.emplace_back("left_algebra", left.alg.verify().ok() && left.action.verify(left.alg));
  r.checks.emplace_back("right_algebra", right.alg.verify().ok() && right.action.verify(right.alg));
  if (!same_base || !same_group) {
    r.failure = "MismatchAt(x=-, base): left " + std::to_string(left.base()) + " fibers right " +
                std::to_string(right.base()) + " fibers";
    return r;
  }
  for (std::size_t x = 0; x < left.base(); ++x) {
    FiberComparison f;
    f.x = x;
    const auto lb = analyze_fiber(left.alg, x, opt);
    const auto rb = analyze_fiber(right.alg, x, opt);
    f.left = lb.profile;
    f.right = rb.profile;
    f.left_exact = lb.exact_count;
    f.right_exact = rb.exact_count;
    f.left_seed = lb.seed;
    f.right_seed = rb.seed;
    f.count_match = f.left_exact == f.right_exact && f.left.count() == f.right.count();
    f.profile_match = f.left == f.right;
    const auto la = block_actions(left.alg, x, lb, left.action, opt.tol);
    const auto ra = block_actions(right.alg, x, rb, right.action, opt.tol);
    f.left_orbits = orbit_sizes(la);
    f.right_orbits = orbit_sizes(ra);
    f.bijection = f.count_match && equivariant_set_bijection(la, ra).has_value();
    if (!f.count_match) note(r, "block_count", x, f.left.str(), f.right.str());
    else if (!f.bijection) note(r, "block_space", x, f.left.str(), f.right.str());
    r.fibers.push_back(std::move(f));
  }
  return r;
}

TheoremReport verify_thm_pt(const Cochain& u, const Cochain& omega, const NumericOptions& opt) {
  if (omega.base() != 1 || !omega.group()->same_table(*u.group()))
    throw Error(ErrorCode::InvalidArgument, "ω must be a single-point cocycle on the group of u");
  const auto v = coh::multiply(u, coh::invert(omega.constant_over(u.base())));
  const auto Z = bundle::build_Zu(v);
  const auto P = induced_algebra(Z, crossed_product(omega));
  auto r = compare_systems("thm-pt", crossed_product(u), P.algebra, opt);
  r.checks.emplace_back("bundle", Z.verify().ok());
  r.checks.emplace_back("induced_algebra", P.ok());
  return r;
}

TheoremReport verify_thm_general(const Cochain& u, const ext::RepresentationGroup& R, const NumericOptions& opt) {
  if (!R.ext->G()->same_table(*u.group()))
    throw Error(ErrorCode::InvalidArgument, "representation group covers a different group");
  const auto phi = ext::classify_cocycle(u, R);
  const auto v = coh::multiply(u, coh::invert(ext::build_u_phi(phi, R)));
  const auto Z = bundle::build_Zu(v);
  const auto H = group_algebra_of_extension(*R.ext, opt.tol);
  const auto P = fibered_product_algebra(Z, pull_back_algebra(phi, H.fibered));
  auto r = compare_systems("thm-general", crossed_product(u), P.algebra, opt);
  r.checks.emplace_back("bundle", Z.verify().ok());
  r.checks.emplace_back("representation_group_algebra", H.ok());
  r.checks.emplace_back("fibered_product", P.ok());
  return r;
}

TheoremReport verify_cor_pt_group(const ext::CentralExtension& L, const NumericOptions& opt) {
  const auto psi = bundle::psi_iso(L);
  const auto CL = group_algebra_of_extension(L, opt.tol);
  const auto P = induced_algebra(psi.bundle, crossed_product(Cochain(L.G(), 2, 1, 1)));
  auto r = compare_systems("cor-pt-group", CL.fibered, P.algebra, opt);
  r.checks.emplace_back("psi_character", psi.character);
  r.checks.emplace_back("psi_bijective", psi.bijective);
  r.checks.emplace_back("psi_equivariant", psi.equivariant);
  r.checks.emplace_back("psi_fiber_preserving", psi.fiber_preserving);
  r.checks.emplace_back("extension_algebra", CL.ok());
  r.checks.emplace_back("induced_algebra", P.ok());
  return r;
}

TheoremReport verify_thm_groupex(const ext::CentralExtension& L, const ext::RepresentationGroup& R,
                                 const NumericOptions& opt) {
  if (!R.ext->G()->same_table(*L.G()))
    throw Error(ErrorCode::InvalidArgument, "representation group covers a different group");
  const auto prime = ext::prime_extension(L, R);
  const auto eta = ext::cocycle_from_extension(*prime.ext);
  const auto Z = bundle::build_Zu(ext::character_cocycle(eta));
  std::vector<std::size_t> phi(L.N().order());
  for (std::size_t chi = 0; chi < phi.size(); ++chi) phi[chi] = prime.phi(static_cast<grp::Elem>(chi));
  const auto H = group_algebra_of_extension(*R.ext, opt.tol);
  const auto CL = group_algebra_of_extension(L, opt.tol);
  const auto P = fibered_product_algebra(Z, pull_back_algebra(phi, H.fibered));
  auto r = compare_systems("thm-groupex", CL.fibered, P.algebra, opt);
  r.checks.emplace_back("prime_central", prime.central);
  r.checks.emplace_back("prime_cocycle", prime.cocycle_matches);
  r.checks.emplace_back("prime_product_identity", prime.product_identity);
  r.checks.emplace_back("prime_pointwise_trivial", prime.pointwise_trivial);
  r.checks.emplace_back("extension_algebra", CL.ok());
  r.checks.emplace_back("representation_group_algebra", H.ok());
  r.checks.emplace_back("fibered_product", P.ok());
  return r;
}

}  // namespace twistcoh::alg
