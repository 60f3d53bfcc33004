#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "twistcoh/alg.hpp"
#include "twistcoh/bundle.hpp"
#include "twistcoh/cli.hpp"
#include "twistcoh/coh.hpp"
#include "twistcoh/ext.hpp"

namespace twistcoh::cli {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPointwiseTrivial:
    case ErrorCode::Mismatch:
    case ErrorCode::MismatchAt:
    case ErrorCode::ProfileInconsistent:
    case ErrorCode::TransgressionNotBijective:
    case ErrorCode::NoClassFound:
    case ErrorCode::DeltaNotSubgroup:
    case ErrorCode::NotACocycle:
      return 1;
    default:
      return 2;
  }
}

namespace {

struct Outcome {
  json result;
  bool ok = true;
  int code = 0;  // nonzero when an entry failed with an error
};

json profile_json(const alg::BlockProfile& p) { return p.sizes; }

json checks_json(const std::vector<std::pair<std::string, bool>>& checks) {
  json j = json::object();
  for (const auto& [k, v] : checks) j[k] = v;
  return j;
}

bool all_true(const json& j) {
  for (const auto& [k, v] : j.items())
    if (v.is_boolean() && !v.get<bool>()) return false;
  return true;
}

json group_json(const grp::GroupPtr& g) {
  json j;
  j["order"] = g->order();
  j["abelian"] = g->is_abelian();
  j["exponent"] = g->exponent();
  j["center_order"] = g->center().size();
  j["abelianization"] = grp::abelianization(g).ab.invariant_factors();
  if (const auto& a = g->abelian_structure()) {
    j["factors"] = a->factors();
    j["invariant_factors"] = a->invariant_factors();
  }
  std::vector<std::size_t> orders;
  for (grp::Elem s = 0; s < g->order(); ++s) orders.push_back(g->element_order(s));
  j["element_orders"] = orders;
  if (!g->labels().empty()) j["labels"] = g->labels();
  return j;
}

json theorem_json(const alg::TheoremReport& r) {
  json j;
  j["checks"] = checks_json(r.checks);
  json fibers = json::array();
  for (const auto& f : r.fibers) {
    json e;
    e["x"] = f.x;
    e["left_profile"] = profile_json(f.left);
    e["right_profile"] = profile_json(f.right);
    e["left_blocks"] = f.left_exact;
    e["right_blocks"] = f.right_exact;
    e["left_seed"] = f.left_seed;
    e["right_seed"] = f.right_seed;
    e["count_match"] = f.count_match;
    e["profile_match"] = f.profile_match;
    e["bijection"] = f.bijection;
    e["left_orbits"] = f.left_orbits;
    e["right_orbits"] = f.right_orbits;
    fibers.push_back(std::move(e));
  }
  j["fiber_count"] = r.fibers.size();
  j["fibers"] = std::move(fibers);
  j["profiles_match"] = std::all_of(r.fibers.begin(), r.fibers.end(), [](const auto& f) { return f.profile_match; });
  if (!r.failure.empty()) j["failure"] = r.failure;
  return j;
}

json error_json(const Error& e) {
  json j;
  j["error"] = error_name(e.code());
  j["reason"] = e.what();
  if (const auto* ie = dynamic_cast<const InputError*>(&e)) j["pointer"] = ie->pointer();
  return j;
}

const std::map<std::string, std::vector<std::string>>& check_kinds() {
  static const std::map<std::string, std::vector<std::string>> k{
      {"lem-pointwise", {"cochain"}},
      {"prop-decom", {"cochain"}},
      {"prop-decom1", {"cochain", "cochain"}},
      {"thm-pt", {"cochain", "cochain"}},
      {"thm-general", {"cochain", "repgroup"}},
      {"thm-groupex", {"extension", "repgroup"}},
      {"cor-pt-group", {"extension"}},
  };
  return k;
}

// One verify entry; errors inside become part of the entry.
json verify_one(const Workspace& ws, const VerifyEntry& e, const alg::NumericOptions& opt, int& code) {
  json j;
  j["check"] = e.check;
  j["inputs"] = e.inputs;
  auto ptr = [&](std::size_t i) { return "/inputs/" + std::to_string(i); };
  try {
    const auto kinds = check_kinds().find(e.check);
    if (kinds == check_kinds().end())
      throw InputError(ErrorCode::InvalidArgument, "/check", "unknown check '" + e.check + "'");
    if (e.inputs.size() != kinds->second.size())
      throw InputError(ErrorCode::InvalidArgument, "/inputs",
                       e.check + " takes " + std::to_string(kinds->second.size()) + " inputs");
    json r;
    bool ok = false;
    if (e.check == "lem-pointwise") {
      const auto rep = alg::verify_lem_pointwise(ws.cochain(e.inputs[0], ptr(0)));
      r = {{"symmetric", rep.symmetric},     {"commutative", rep.commutative}, {"characters_ok", rep.characters_ok},
           {"bijective", rep.bijective},     {"equivariant", rep.equivariant}, {"characters", rep.characters}};
      ok = rep.ok();
    } else if (e.check == "prop-decom" || e.check == "prop-decom1") {
      alg::DecomReport rep;
      if (e.check == "prop-decom") {
        const auto g = ws.cochain_groups.find(e.inputs[0]);
        const auto P = g == ws.cochain_groups.end() ? ws.products.end() : ws.products.find(g->second);
        if (P == ws.products.end())
          throw InputError(ErrorCode::InvalidArgument, ptr(0), "cochain must live on a declared product group");
        rep = alg::verify_prop_decom(P->second, ws.cochain(e.inputs[0], ptr(0)));
      } else {
        const auto& u = ws.cochain(e.inputs[0], ptr(0));
        const auto& v = ws.cochain(e.inputs[1], ptr(1));
        rep = alg::verify_prop_decom1(grp::direct_product(u.group(), v.group()), u, v);
      }
      r = {{"twisted_action", rep.twisted_action},
           {"algebra_ok", rep.algebra_ok},
           {"isomorphism", rep.isomorphism},
           {"equivariant", rep.equivariant}};
      ok = rep.ok();
    } else {
      alg::TheoremReport rep;
      if (e.check == "thm-pt")
        rep = alg::verify_thm_pt(ws.cochain(e.inputs[0], ptr(0)), ws.cochain(e.inputs[1], ptr(1)), opt);
      else if (e.check == "thm-general")
        rep = alg::verify_thm_general(ws.cochain(e.inputs[0], ptr(0)), ws.repgroup(e.inputs[1], ptr(1)), opt);
      else if (e.check == "thm-groupex")
        rep = alg::verify_thm_groupex(ws.extension(e.inputs[0], ptr(0)), ws.repgroup(e.inputs[1], ptr(1)), opt);
      else
        rep = alg::verify_cor_pt_group(ws.extension(e.inputs[0], ptr(0)), opt);
      r = theorem_json(rep);
      ok = rep.ok();
    }
    j["result"] = std::move(r);
    j["status"] = ok ? "pass" : "mismatch";
    if (!ok) code = std::max(code, 1);
  } catch (const Error& err) {
    j["result"] = error_json(err);
    j["status"] = "error";
    code = std::max(code, exit_code(err.code()));
  }
  return j;
}

std::string entry_id(const VerifyEntry& e) {
  std::string id = e.check + "(";
  for (std::size_t i = 0; i < e.inputs.size(); ++i) id += (i ? "," : "") + e.inputs[i];
  return id + ")";
}

Outcome run_verify(const Workspace& ws, const std::string& check, const std::vector<std::string>& inputs,
                   const alg::NumericOptions& opt) {
  std::vector<VerifyEntry> entries;
  if (check == "all") {
    if (!inputs.empty()) throw Error(ErrorCode::InvalidArgument, "'verify all' takes no --inputs");
    entries = ws.verify;
  } else if (!inputs.empty()) {
    entries.push_back({check, inputs});
  } else {
    for (const auto& e : ws.verify)
      if (e.check == check) entries.push_back(e);
    if (entries.empty())
      throw Error(ErrorCode::InvalidArgument, "no --inputs given and the workspace lists no '" + check + "' entry");
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return entry_id(a) < entry_id(b); });
  Outcome o;
  json list = json::array();
  for (const auto& e : entries) {
    auto j = verify_one(ws, e, opt, o.code);
    j["id"] = entry_id(e);
    list.push_back(std::move(j));
  }
  o.ok = o.code == 0;
  o.result["checks"] = std::move(list);
  o.result["count"] = entries.size();
  return o;
}

Outcome fibers_report(const alg::FiberedAlgebra& A, const alg::NumericOptions& opt, bool orbits) {
  Outcome o;
  json fibers = json::array();
  std::vector<alg::BlockProfile> parts;
  bool consistent = true;
  for (std::size_t x = 0; x < A.base(); ++x) {
    const auto b = alg::analyze_fiber(A.alg, x, opt);
    json f;
    f["x"] = x;
    f["dim"] = A.alg.fiber_basis(x).size();
    f["profile"] = profile_json(b.profile);
    f["blocks"] = b.exact_count;
    f["seed"] = b.seed;
    const bool fine = b.profile.dim() == A.alg.fiber_basis(x).size() && b.profile.count() == b.exact_count;
    f["consistent"] = fine;
    consistent = consistent && fine;
    if (orbits) {
      const auto acts = alg::block_actions(A.alg, x, b, A.action, opt.tol);
      std::vector<std::size_t> perm0;
      std::vector<std::vector<std::size_t>> orbit_list;
      std::vector<bool> seen(b.profile.count(), false);
      for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orb;
        for (const auto& g : acts)
          if (!seen[g[i]]) {
            seen[g[i]] = true;
            orb.push_back(g[i]);
          }
        std::sort(orb.begin(), orb.end());
        orbit_list.push_back(orb);
      }
      f["block_sizes"] = b.block_size;
      f["orbits"] = orbit_list;
    }
    parts.push_back(b.profile);
    fibers.push_back(std::move(f));
  }
  o.result["fibers"] = std::move(fibers);
  o.result["fiber_count"] = A.base();
  o.result["dim"] = A.alg.dim();
  o.result["profile"] = profile_json(alg::merge(parts));
  o.result["consistent"] = consistent;
  o.ok = consistent;
  return o;
}

struct Args {
  std::string workspace;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::string output;
  std::size_t max_order = 512;
  bool timings = false;
  std::string group, cocycle, other, repgroup, extension, check;
  i64 modulus = 0;
  bool circle = false;
  std::vector<std::string> inputs;
};

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted group algebras, torsor bundles and central extensions over finite groups", "twistcoh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(TWISTCOH_VERSION));
  Args a;
  auto* seed_opt = app.add_option("--seed", a.seed, "RNG seed for numerical block decomposition")->default_val(0);
  auto* tol_opt = app.add_option("--tol", a.tol, "numerical tolerance")->default_val(1e-8);
  app.add_option("-w,--workspace", a.workspace, "workspace JSON file, '-' for stdin");
  app.add_option("-o,--output", a.output, "write the report here instead of stdout");
  app.add_option("--max-order", a.max_order, "largest group order accepted")->default_val(512);
  app.add_flag("--timings", a.timings, "add wall-clock timings to the report");

  std::string command;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
    auto* s = parent->add_subcommand(name, desc);
    s->callback([&command, s] {
      command = s->get_parent()->get_name() + " " + s->get_name();
    });
    return s;
  };
  auto* group = app.add_subcommand("group", "finite groups")->require_subcommand(1);
  auto* group_info = leaf(group, "info", "orders, centers and abelian invariants");
  group_info->add_option("--group,-g", a.group, "group name (all groups when omitted)");

  auto* coh = app.add_subcommand("coh", "cohomology")->require_subcommand(1);
  auto* coh_h2 = leaf(coh, "h2", "second cohomology");
  coh_h2->add_option("--group,-g", a.group)->required();
  auto* mod_opt = coh_h2->add_option("--modulus", a.modulus)->check(CLI::PositiveNumber);
  auto* circ_opt = coh_h2->add_flag("--circle", a.circle);
  mod_opt->excludes(circ_opt);
  auto* coh_classify = leaf(coh, "classify", "map each fiber class to the dual of the representation group");
  coh_classify->add_option("--cocycle,-u", a.cocycle)->required();
  coh_classify->add_option("--repgroup,-r", a.repgroup)->required();
  auto* coh_decompose = leaf(coh, "decompose", "u = ∂g · inf(v) · u_φ with a reconstruction check");
  coh_decompose->add_option("--cocycle,-u", a.cocycle)->required();
  coh_decompose->add_option("--repgroup,-r", a.repgroup)->required();

  auto* ext = app.add_subcommand("ext", "central extensions")->require_subcommand(1);
  auto* ext_build = leaf(ext, "build", "validate an extension and print its cocycle");
  ext_build->add_option("--extension,-e", a.extension)->required();
  auto* ext_tg = leaf(ext, "transgress", "transgression of every character of N");
  ext_tg->add_option("--extension,-e", a.extension)->required();
  auto* ext_prime = leaf(ext, "prime", "the pointwise-trivial extension built from L and R");
  ext_prime->add_option("--extension,-e", a.extension)->required();
  ext_prime->add_option("--repgroup,-r", a.repgroup)->required();
  auto* ext_rep = leaf(ext, "repgroup", "representation group and its transgression table");
  ext_rep->add_option("--repgroup,-r", a.repgroup)->required();

  auto* bun = app.add_subcommand("bundle", "torsor bundles")->require_subcommand(1);
  auto* bun_build = leaf(bun, "build", "the bundle of a pointwise-trivial cocycle");
  bun_build->add_option("--cocycle,-u", a.cocycle)->required();
  auto* bun_product = leaf(bun, "product", "bundle of a product cocycle against the product of bundles");
  bun_product->add_option("--cocycle,-u", a.cocycle)->required();
  bun_product->add_option("--with,-v", a.other)->required();
  auto* bun_psi = leaf(bun, "psi", "bundle of an extension against the dual of E_ab");
  bun_psi->add_option("--extension,-e", a.extension)->required();

  auto* alg_cmd = app.add_subcommand("alg", "algebras")->require_subcommand(1);
  auto* alg_profile = leaf(alg_cmd, "profile", "block profile of a crossed product or extension algebra");
  auto* alg_fibers = leaf(alg_cmd, "fibers", "per-fiber blocks and their orbits under the dual action");
  for (auto* s : {alg_profile, alg_fibers}) {
    auto* u = s->add_option("--cocycle,-u", a.cocycle);
    auto* e = s->add_option("--extension,-e", a.extension);
    u->excludes(e);
  }

  auto* verify = app.add_subcommand("verify", "check structure results")->require_subcommand(0);
  verify->add_option("check", a.check, "lem-pointwise, prop-decom, prop-decom1, thm-pt, thm-general, thm-groupex, "
                                       "cor-pt-group or all")
      ->required()
      ->check(CLI::IsMember({"all", "lem-pointwise", "prop-decom", "prop-decom1", "thm-pt", "thm-general",
                             "thm-groupex", "cor-pt-group"}));
  verify->add_option("--inputs,-i", a.inputs, "workspace names; defaults to the workspace's verify entries");
  verify->callback([&] { command = "verify " + a.check; });

  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  json report;
  report["report_version"] = 1;
  report["tool"] = "twistcoh";
  report["tool_version"] = TWISTCOH_VERSION;
  report["command"] = command;
  report["input_hash"] = nullptr;
  int rc = 0;
  try {
    grp::set_max_order(a.max_order);
    if (a.workspace.empty()) throw InputError(ErrorCode::InvalidArgument, "", "--workspace is required");
    const std::string text = read_input(a.workspace);
    report["input_hash"] = fnv1a_hex(text);
    const Workspace ws = parse_workspace(text);
    alg::NumericOptions opt;
    opt.seed = seed_opt->count() ? a.seed : ws.seed.value_or(0);
    opt.tol = tol_opt->count() ? a.tol : ws.tol.value_or(1e-8);
    report["seed"] = opt.seed;
    report["tol"] = opt.tol;

    Outcome o;
    if (command == "group info") {
      if (a.group.empty()) {
        json all = json::object();
        for (const auto& [n, g] : ws.groups) all[n] = group_json(g);
        o.result["groups"] = std::move(all);
      } else {
        o.result = group_json(ws.group(a.group, "--group"));
      }
    } else if (command == "coh h2") {
      const auto& g = ws.group(a.group, "--group");
      if (!a.circle && a.modulus == 0) throw Error(ErrorCode::InvalidArgument, "give --modulus M or --circle");
      if (a.circle) {
        const auto h = coh::h2_circle(g);
        o.result["coefficients"] = "circle";
        o.result["invariants"] = h.invariants();
        o.result["order"] = h.order();
      } else {
        const auto h = coh::h2_mod(g, a.modulus);
        o.result["coefficients"] = a.modulus;
        o.result["invariants"] = h.invariants();
        o.result["order"] = h.order();
      }
    } else if (command == "coh classify") {
      const auto& u = ws.cochain(a.cocycle, "--cocycle");
      const auto& R = ws.repgroup(a.repgroup, "--repgroup");
      if (!R.ext->G()->same_table(*u.group()))
        throw Error(ErrorCode::InvalidArgument, "representation group covers a different group");
      o.result["phi"] = ext::classify_cocycle(u, R);
      o.result["classes"] = R.h2->class_of_each(u);
    } else if (command == "coh decompose") {
      const auto& u = ws.cochain(a.cocycle, "--cocycle");
      const auto& R = ws.repgroup(a.repgroup, "--repgroup");
      if (!R.ext->G()->same_table(*u.group()))
        throw Error(ErrorCode::InvalidArgument, "representation group covers a different group");
      const auto d = ext::decompose(u, R);
      const auto rebuilt = coh::multiply(coh::multiply(coh::coboundary(d.g), coh::inflate(d.v, d.ab.q)), d.u_phi);
      const bool exact = coh::multiply(u, coh::invert(rebuilt)).is_zero();
      o.result["phi"] = d.phi;
      o.result["abelianization"] = d.ab.ab.factors();
      o.result["v"] = d.v.reduced().values();
      o.result["v_modulus"] = d.v.reduced().modulus();
      o.result["reconstructed"] = exact;
      o.ok = exact;
    } else if (command == "ext build") {
      const auto& L = ws.extension(a.extension, "--extension");
      const auto eta = ext::cocycle_from_extension(L);
      const auto pt = ext::is_pointwise_trivial_extension(L);
      o.result["N"] = L.N().factors();
      o.result["G_order"] = L.G()->order();
      o.result["E_order"] = L.E()->order();
      json parts = json::array();
      for (const auto& c : eta.parts) parts.push_back(c.values());
      o.result["cocycle"] = std::move(parts);
      o.result["section"] = L.section();
      o.result["pointwise_trivial"] = pt.pointwise_trivial;
      o.result["cocycle_route"] = pt.cocycle_route;
    } else if (command == "ext transgress") {
      const auto& L = ws.extension(a.extension, "--extension");
      const coh::H2Circle h(L.G());
      json tg = json::array();
      std::set<std::vector<i64>> seen;
      for (std::size_t chi = 0; chi < L.N().order(); ++chi) {
        auto c = ext::transgression(L, chi, h);
        seen.insert(c);
        tg.push_back(std::move(c));
      }
      o.result["invariants"] = h.invariants();
      o.result["transgression"] = std::move(tg);
      o.result["injective"] = seen.size() == L.N().order();
      o.result["surjective"] = static_cast<i64>(seen.size()) == h.order();
    } else if (command == "ext prime") {
      const auto& L = ws.extension(a.extension, "--extension");
      const auto& R = ws.repgroup(a.repgroup, "--repgroup");
      if (!R.ext->G()->same_table(*L.G()))
        throw Error(ErrorCode::InvalidArgument, "representation group covers a different group");
      const auto P = ext::prime_extension(L, R);
      json c = {{"central", P.central},
                {"cocycle_matches", P.cocycle_matches},
                {"product_identity", P.product_identity},
                {"pointwise_trivial", P.pointwise_trivial}};
      o.ok = all_true(c);
      o.result["checks"] = std::move(c);
      o.result["N"] = P.ext->N().factors();
      o.result["E_order"] = P.ext->E()->order();
      o.result["phi"] = P.phi.image();
    } else if (command == "ext repgroup") {
      const auto& R = ws.repgroup(a.repgroup, "--repgroup");
      o.result["Z"] = R.Z().factors();
      o.result["E_order"] = R.ext->E()->order();
      o.result["multiplier"] = R.h2->invariants();
      o.result["transgression"] = R.tg;
      o.result["bijective"] = R.inverse.size() == R.tg.size() && static_cast<i64>(R.tg.size()) == R.h2->order();
      o.ok = o.result["bijective"].get<bool>();
    } else if (command == "bundle build" || command == "bundle product") {
      const auto& u = ws.cochain(a.cocycle, "--cocycle");
      const auto Z = bundle::build_Zu(u);
      const auto c = Z.verify();
      json checks = {{"equations", c.equations}, {"free", c.free}, {"transitive", c.transitive}, {"complete", c.complete}};
      o.result["base"] = Z.base();
      o.result["fiber_size"] = Z.fiber_size();
      o.result["size"] = Z.size();
      o.result["modulus"] = Z.modulus();
      o.result["fiber_group"] = Z.fiber_group().factors();
      const auto triv = bundle::trivialization(Z);
      checks["trivialization"] = triv.verified;
      o.result["section"] = triv.section;
      if (command == "bundle product") {
        const auto& v = ws.cochain(a.other, "--with");
        const auto P = bundle::bundle_product(Z, bundle::build_Zu(v));
        checks["product_well_defined"] = P.well_defined;
        checks["product_bijective"] = P.bijective;
        checks["product_equivariant"] = P.equivariant;
        json orbit = json::array();  // null for pairs over different base points
        for (auto z : P.orbit) orbit.push_back(z == static_cast<std::size_t>(-1) ? json(nullptr) : json(z));
        o.result["orbit_map"] = std::move(orbit);
      }
      o.ok = all_true(checks);
      o.result["checks"] = std::move(checks);
    } else if (command == "bundle psi") {
      const auto& L = ws.extension(a.extension, "--extension");
      const auto P = bundle::psi_iso(L);
      json checks = {{"character", P.character},
                     {"bijective", P.bijective},
                     {"equivariant", P.equivariant},
                     {"fiber_preserving", P.fiber_preserving}};
      o.ok = all_true(checks);
      o.result["checks"] = std::move(checks);
      o.result["map"] = P.map;
      o.result["size"] = P.bundle.size();
    } else if (command == "alg profile" || command == "alg fibers") {
      if (a.cocycle.empty() == a.extension.empty())
        throw Error(ErrorCode::InvalidArgument, "give exactly one of --cocycle or --extension");
      alg::FiberedAlgebra A;
      json extra;
      if (!a.cocycle.empty()) {
        A = alg::crossed_product(ws.cochain(a.cocycle, "--cocycle"));
      } else {
        const auto H = alg::group_algebra_of_extension(ws.extension(a.extension, "--extension"), opt.tol);
        A = H.fibered;
        extra = {{"idempotents", H.idempotents_ok}, {"corners", H.corners_ok}, {"dimension", H.dimension_ok}};
      }
      o = fibers_report(A, opt, command == "alg fibers");
      if (!extra.is_null()) {
        o.ok = o.ok && all_true(extra);
        o.result["extension_checks"] = std::move(extra);
      }
    } else if (command.rfind("verify ", 0) == 0) {
      o = run_verify(ws, a.check, a.inputs, opt);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown command '" + command + "'");
    }
    report["result"] = std::move(o.result);
    rc = o.code ? o.code : (o.ok ? 0 : 1);
    report["status"] = rc == 0 ? "pass" : rc == 1 ? "mismatch" : "error";
  } catch (const Error& e) {
    rc = exit_code(e.code());
    report["status"] = "error";
    report["result"] = error_json(e);
    err << "twistcoh: " << e.what() << "\n";
  } catch (const std::exception& e) {
    rc = 2;
    report["status"] = "error";
    report["result"] = {{"error", "Internal"}, {"reason", e.what()}};
    err << "twistcoh: " << e.what() << "\n";
  }
  if (!report.contains("seed")) {
    report["seed"] = seed_opt->count() ? a.seed : 0;
    report["tol"] = tol_opt->count() ? a.tol : 1e-8;
  }
  if (a.timings) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report["timings"] = {{"total_ms", ms}};
  }
  const std::string text = report.dump(2) + "\n";
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) {
      err << "twistcoh: cannot write '" << a.output << "'\n";
      return 2;
    }
    f << text;
  }
  return rc;
}

}  // namespace twistcoh::cli
