#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "twistcoh/cli.hpp"
#include "twistcoh/coh.hpp"

namespace twistcoh::cli {

namespace {

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string at(const std::string& ptr, const std::string& key) { return ptr + "/" + escape(key); }
std::string at(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

[[noreturn]] void invalid(const std::string& ptr, const std::string& what) {
  throw InputError(ErrorCode::ValidationFailed, ptr, what);
}

const json& field(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) invalid(ptr, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) invalid(at(ptr, key), "missing field");
  return *it;
}

i64 as_int(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) invalid(ptr, "expected an integer");
  return j.get<i64>();
}

i64 as_positive(const json& j, const std::string& ptr) {
  const i64 v = as_int(j, ptr);
  if (v < 1) invalid(ptr, "expected a positive integer");
  return v;
}

std::string as_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) invalid(ptr, "expected a string");
  return j.get<std::string>();
}

std::vector<i64> int_list(const json& j, const std::string& ptr) {
  if (!j.is_array()) invalid(ptr, "expected an array");
  std::vector<i64> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], at(ptr, i)));
  return out;
}

std::vector<grp::Elem> elem_list(const json& j, const std::string& ptr) {
  std::vector<grp::Elem> out;
  const auto v = int_list(j, ptr);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) invalid(at(ptr, i), "negative element index");
    out.push_back(static_cast<grp::Elem>(v[i]));
  }
  return out;
}

std::vector<std::string> string_list(const json& j, const std::string& ptr) {
  if (!j.is_array()) invalid(ptr, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_string(j[i], at(ptr, i)));
  return out;
}

// Exactly one of the given keys, besides any of `extra`.
std::string kind_of(const json& j, const std::string& ptr, const std::vector<std::string>& kinds,
                    const std::set<std::string>& extra) {
  if (!j.is_object()) invalid(ptr, "expected an object");
  std::string found;
  for (const auto& [k, v] : j.items()) {
    if (extra.count(k)) continue;
    if (std::find(kinds.begin(), kinds.end(), k) == kinds.end()) invalid(at(ptr, k), "unknown field");
    if (!found.empty()) invalid(ptr, "fields '" + found + "' and '" + k + "' are exclusive");
    found = k;
  }
  return found;
}

// Runs a validator from another module, reporting its failure at `ptr`.
template <class F>
auto checked(const std::string& ptr, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    invalid(ptr, e.what());
  }
}

class Loader {
 public:
  Loader(const json& root, Workspace& ws) : root_(root), ws_(ws) {}

  void load() {
    static const std::set<std::string> top{"groups", "maps",  "cochains",   "extensions", "repgroups",
                                           "verify", "seed",  "tol",        "provenance", "description"};
    if (!root_.is_object()) invalid("", "workspace must be a JSON object");
    for (const auto& [k, v] : root_.items())
      if (!top.count(k)) invalid(at("", k), "unknown top-level field");
    if (root_.contains("seed")) {
      const auto& s = root_["seed"];
      if (!s.is_number_unsigned()) invalid("/seed", "expected a non-negative integer");
      ws_.seed = s.get<std::uint64_t>();
    }
    if (root_.contains("tol")) {
      const auto& t = root_["tol"];
      if (!t.is_number() || !(t.get<double>() > 0)) invalid("/tol", "expected a positive number");
      ws_.tol = t.get<double>();
    }
    if (root_.contains("provenance")) ws_.provenance = root_["provenance"];
    for (const auto* sec : {"groups", "maps", "cochains", "extensions", "repgroups"})
      if (root_.contains(sec) && !root_[sec].is_object()) invalid(at("", sec), "expected an object");
    for (const auto* sec : {"groups", "maps", "cochains", "extensions", "repgroups"})
      if (root_.contains(sec))
        for (const auto& [name, v] : root_[sec].items()) resolve(sec, name, at("", sec));
    if (root_.contains("verify")) load_verify(root_["verify"]);
  }

  // Resolves a reference of the given kind; `from` is the pointer of the referring field.
  void resolve(const std::string& sec, const std::string& name, const std::string& from) {
    if (done_.count({sec, name})) return;
    if (!root_.contains(sec) || !root_[sec].contains(name))
      throw InputError(ErrorCode::UnresolvedRef, from, "unresolved " + singular(sec) + " reference '" + name + "'");
    const std::string ptr = at(at("", sec), name);
    if (!active_.insert({sec, name}).second) invalid(ptr, "cyclic reference");
    const json& j = root_[sec][name];
    if (sec == "groups") load_group(name, j, ptr);
    else if (sec == "maps") load_map(name, j, ptr);
    else if (sec == "cochains") load_cochain(name, j, ptr);
    else if (sec == "extensions") load_extension(name, j, ptr);
    else load_repgroup(name, j, ptr);
    active_.erase({sec, name});
    done_.insert({sec, name});
  }

 private:
  static std::string singular(const std::string& sec) {
    if (sec == "groups") return "group";
    if (sec == "maps") return "map";
    if (sec == "cochains") return "cochain";
    if (sec == "extensions") return "extension";
    return "repgroup";
  }

  const grp::GroupPtr& group_ref(const json& j, const std::string& ptr) {
    const auto name = as_string(j, ptr);
    resolve("groups", name, ptr);
    return ws_.groups.at(name);
  }

  void load_group(const std::string& name, const json& j, const std::string& ptr) {
    const auto kind = kind_of(j, ptr, {"abelian", "dihedral", "heisenberg", "symmetric", "trivial", "table", "product"},
                              {"labels"});
    if (kind.empty()) invalid(ptr, "group needs one of abelian, dihedral, heisenberg, symmetric, trivial, table, product");
    const std::string p = at(ptr, kind);
    const json& v = j[kind];
    grp::GroupPtr g;
    if (kind == "abelian") {
      const auto f = int_list(v, p);
      for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] < 2) invalid(at(p, i), "cyclic factors must be at least 2");
      g = checked(p, [&] { return grp::make_abelian(f); });
    } else if (kind == "dihedral") {
      const i64 n = as_int(v, p);
      if (n < 2) invalid(p, "dihedral groups need n >= 2");
      g = checked(p, [&] { return grp::dihedral(static_cast<std::size_t>(n)); });
    } else if (kind == "heisenberg") {
      const i64 q = as_int(v, p);
      if (q < 2) invalid(p, "expected a prime");
      for (i64 d = 2; d * d <= q; ++d)
        if (q % d == 0) invalid(p, "expected a prime");
      g = checked(p, [&] { return grp::heisenberg(q); });
    } else if (kind == "symmetric") {
      if (as_int(v, p) != 3) invalid(p, "only the symmetric group on 3 letters is built in");
      g = grp::symmetric3();
    } else if (kind == "trivial") {
      if (!v.is_boolean() || !v.get<bool>()) invalid(p, "expected true");
      g = grp::make_abelian(std::vector<i64>{});
    } else if (kind == "table") {
      if (!v.is_array()) invalid(p, "expected an array of rows");
      std::vector<std::vector<grp::Elem>> t;
      for (std::size_t i = 0; i < v.size(); ++i) t.push_back(elem_list(v[i], at(p, i)));
      g = checked(p, [&] { return grp::make_table(t); });
    } else {
      const auto parts = string_list(v, p);
      if (parts.size() != 2) invalid(p, "a product names exactly two groups");
      const auto a = group_ref(v[0], at(p, 0));
      const auto b = group_ref(v[1], at(p, 1));
      const auto P = checked(p, [&] { return grp::direct_product(a, b); });
      ws_.products.emplace(name, P);
      g = P.group;
    }
    if (j.contains("labels")) {
      const auto labels = string_list(j["labels"], at(ptr, "labels"));
      if (labels.size() != g->order()) invalid(at(ptr, "labels"), "one label per element expected");
      g = std::make_shared<const grp::FiniteGroup>(g->with_labels(labels));
    }
    ws_.groups.emplace(name, g);
  }

  void load_map(const std::string& name, const json& j, const std::string& ptr) {
    const auto src = group_ref(field(j, "source", ptr), at(ptr, "source"));
    const auto tgt = group_ref(field(j, "target", ptr), at(ptr, "target"));
    const auto img = elem_list(field(j, "image", ptr), at(ptr, "image"));
    ws_.maps.emplace(name, checked(at(ptr, "image"), [&] { return grp::GroupHom(src, tgt, img); }));
  }

  const coh::Cochain& cochain_ref(const json& j, const std::string& ptr) {
    const auto name = as_string(j, ptr);
    resolve("cochains", name, ptr);
    return ws_.cochains.at(name);
  }

  void load_cochain(const std::string& name, const json& j, const std::string& ptr) {
    const auto kind = kind_of(j, ptr, {"values", "entries", "form", "product", "coboundary", "constant_over", "zero"},
                              {"group", "degree", "base", "modulus", "cocycle"});
    coh::Cochain c;
    if (kind == "product") {
      const auto names = string_list(j["product"], at(ptr, "product"));
      if (names.empty()) invalid(at(ptr, "product"), "empty product");
      c = cochain_ref(j["product"][0], at(at(ptr, "product"), 0));
      for (std::size_t i = 1; i < names.size(); ++i) {
        const auto& d = cochain_ref(j["product"][i], at(at(ptr, "product"), i));
        c = checked(at(at(ptr, "product"), i), [&] { return coh::multiply(c, d); });
      }
    } else if (kind == "coboundary") {
      const auto& b = cochain_ref(j["coboundary"], at(ptr, "coboundary"));
      c = checked(at(ptr, "coboundary"), [&] { return coh::coboundary(b); });
    } else if (kind == "constant_over") {
      const auto& o = j["constant_over"];
      const std::string p = at(ptr, "constant_over");
      const auto& w = cochain_ref(field(o, "cochain", p), at(p, "cochain"));
      const i64 base = as_positive(field(o, "base", p), at(p, "base"));
      if (w.base() != 1) invalid(at(p, "cochain"), "expected a single-point cochain");
      c = w.constant_over(static_cast<std::size_t>(base));
    } else {
      const auto& g = group_ref(field(j, "group", ptr), at(ptr, "group"));
      const i64 deg = j.contains("degree") ? as_int(j["degree"], at(ptr, "degree")) : 2;
      if (deg < 0 || deg > 3) invalid(at(ptr, "degree"), "degree must be between 0 and 3");
      const i64 base = j.contains("base") ? as_positive(j["base"], at(ptr, "base")) : 1;
      const i64 M = j.contains("modulus") ? as_positive(j["modulus"], at(ptr, "modulus")) : 1;
      c = checked(ptr, [&] { return coh::Cochain(g, static_cast<int>(deg), static_cast<std::size_t>(base), M); });
      const std::size_t n = g->order();
      std::size_t stride = 1;
      for (i64 k = 0; k < deg; ++k) stride *= n;
      auto put = [&](const std::string& p, std::size_t x, const std::vector<i64>& args, i64 v) {
        if (v < 0 || v >= M) invalid(p, "value outside [0, modulus)");
        for (auto a : args)
          if (a < 0 || static_cast<std::size_t>(a) >= n) invalid(p, "group element out of range");
        if (x >= static_cast<std::size_t>(base)) invalid(p, "base point out of range");
        const bool id = std::find(args.begin(), args.end(), 0) != args.end();
        if (id && (deg == 1 || deg == 2) && v != 0) invalid(p, "cochain is not normalized");
        std::size_t off = x;
        for (auto a : args) off = off * n + static_cast<std::size_t>(a);
        c.values_mut()[off] = v;
      };
      if (kind == "values") {
        const auto& v = j["values"];
        const std::string p = at(ptr, "values");
        if (!v.is_array() || v.size() != static_cast<std::size_t>(base)) invalid(p, "expected one array per base point");
        for (std::size_t x = 0; x < v.size(); ++x) {
          const auto row = int_list(v[x], at(p, x));
          if (row.size() != stride) invalid(at(p, x), "expected " + std::to_string(stride) + " values");
          for (std::size_t k = 0; k < stride; ++k) {
            std::vector<i64> args;
            std::size_t r = k;
            for (i64 d = 0; d < deg; ++d) {
              args.insert(args.begin(), static_cast<i64>(r % n));
              r /= n;
            }
            put(at(at(p, x), k), x, args, row[k]);
          }
        }
      } else if (kind == "entries") {
        const auto& v = j["entries"];
        const std::string p = at(ptr, "entries");
        if (!v.is_array()) invalid(p, "expected an array of [x, args..., value]");
        for (std::size_t i = 0; i < v.size(); ++i) {
          const auto e = int_list(v[i], at(p, i));
          if (e.size() != static_cast<std::size_t>(deg) + 2) invalid(at(p, i), "expected [x, args..., value]");
          if (e[0] < 0) invalid(at(p, i), "base point out of range");
          put(at(p, i), static_cast<std::size_t>(e[0]), std::vector<i64>(e.begin() + 1, e.end() - 1), e.back());
        }
      } else if (kind == "form") {
        const auto ij = int_list(j["form"], at(ptr, "form"));
        const auto& a = g->abelian_structure();
        if (!a) invalid(at(ptr, "form"), "forms need an abelian group");
        if (ij.size() != 2 || deg != 2) invalid(at(ptr, "form"), "expected [i, j] on a degree-2 cochain");
        for (std::size_t k = 0; k < 2; ++k)
          if (ij[k] < 0 || static_cast<std::size_t>(ij[k]) >= a->rank()) invalid(at(at(ptr, "form"), k), "no such factor");
        for (std::size_t x = 0; x < static_cast<std::size_t>(base); ++x)
          for (grp::Elem s = 1; s < n; ++s)
            for (grp::Elem t = 1; t < n; ++t)
              c.set(x, s, t, a->coords(s)[static_cast<std::size_t>(ij[0])] * a->coords(t)[static_cast<std::size_t>(ij[1])]);
      }
    }
    const bool want_cocycle = j.contains("cocycle") ? j["cocycle"].is_boolean() && j["cocycle"].get<bool>()
                                                     : c.degree() == 2;
    if (j.contains("cocycle") && !j["cocycle"].is_boolean()) invalid(at(ptr, "cocycle"), "expected a boolean");
    if (want_cocycle && !checked(ptr, [&] { return coh::is_cocycle(c); })) invalid(ptr, "not a cocycle");
    ws_.cochains.emplace(name, std::move(c));
    if (j.contains("group")) ws_.cochain_groups.emplace(name, j["group"].get<std::string>());
    else if (kind == "product" || kind == "coboundary" || kind == "constant_over") {
      const json& src = kind == "product" ? j["product"][0] : kind == "coboundary" ? j["coboundary"] : j["constant_over"]["cochain"];
      const auto it = ws_.cochain_groups.find(src.get<std::string>());
      if (it != ws_.cochain_groups.end()) ws_.cochain_groups.emplace(name, it->second);
    }
  }

  std::shared_ptr<const ext::CentralExtension> extension_ref(const json& j, const std::string& ptr) {
    const auto name = as_string(j, ptr);
    resolve("extensions", name, ptr);
    return ws_.extensions.at(name);
  }

  const ext::RepresentationGroup& repgroup_ref(const json& j, const std::string& ptr) {
    const auto name = as_string(j, ptr);
    resolve("repgroups", name, ptr);
    return ws_.repgroups.at(name);
  }

  void load_extension(const std::string& name, const json& j, const std::string& ptr) {
    const auto kind = kind_of(j, ptr, {"from_cocycle", "over_center", "repgroup", "prime", "split", "explicit"}, {});
    if (kind.empty()) invalid(ptr, "extension needs one of from_cocycle, over_center, repgroup, prime, split, explicit");
    const std::string p = at(ptr, kind);
    const json& v = j[kind];
    std::shared_ptr<const ext::CentralExtension> e;
    if (kind == "from_cocycle") {
      const auto N = int_list(field(v, "N", p), at(p, "N"));
      const auto names = string_list(field(v, "parts", p), at(p, "parts"));
      if (names.size() != N.size() || N.empty()) invalid(at(p, "parts"), "one cochain per factor of N expected");
      const auto& first = cochain_ref(v["parts"][0], at(at(p, "parts"), 0));
      auto eta = checked(at(p, "N"), [&] { return ext::ValuedCochain::zero(first.group(), grp::AbelianGroup(N)); });
      for (std::size_t i = 0; i < N.size(); ++i) {
        const std::string q = at(at(p, "parts"), i);
        const auto& c = cochain_ref(v["parts"][i], q);
        if (!c.group()->same_table(*first.group()) || c.base() != 1 || c.degree() != 2)
          invalid(q, "parts must be single-point 2-cocycles on one group");
        if (N[i] % c.modulus() != 0) invalid(q, "modulus must divide the factor of N");
        eta.parts[i] = c.embedded(N[i]);
      }
      e = std::make_shared<const ext::CentralExtension>(checked(p, [&] { return ext::extension_from_cocycle(eta); }));
    } else if (kind == "over_center") {
      const auto& E = group_ref(v, p);
      const auto z = E->center();
      grp::Elem gen = 0;
      for (auto a : z)
        if (E->element_order(a) == z.size()) gen = a;
      if (z.size() < 2 || E->element_order(gen) != z.size()) invalid(p, "center must be a nontrivial cyclic group");
      e = checked(p, [&] {
        auto Q = grp::quotient(E, z);
        const i64 k = static_cast<i64>(z.size());
        auto zg = grp::make_abelian({k});
        std::vector<grp::Elem> img{0};
        for (i64 i = 1; i < k; ++i) img.push_back(E->mul(img.back(), gen));
        return std::make_shared<const ext::CentralExtension>(grp::AbelianGroup({k}), Q.group, E,
                                                             grp::GroupHom(zg, E, img), Q.hom);
      });
    } else if (kind == "repgroup") {
      e = repgroup_ref(v, p).ext;
    } else if (kind == "prime") {
      const auto L = extension_ref(field(v, "extension", p), at(p, "extension"));
      const auto& R = repgroup_ref(field(v, "repgroup", p), at(p, "repgroup"));
      if (!R.ext->G()->same_table(*L->G())) invalid(p, "extension and representation group cover different groups");
      e = checked(p, [&] { return ext::prime_extension(*L, R).ext; });
    } else if (kind == "split") {
      const auto& G = group_ref(field(v, "G", p), at(p, "G"));
      const auto N = int_list(field(v, "N", p), at(p, "N"));
      e = checked(p, [&] {
        auto Ng = grp::make_abelian(N);
        const auto P = grp::direct_product(G, Ng);
        return std::make_shared<const ext::CentralExtension>(grp::AbelianGroup(N), G, P.group, P.incl2, P.proj1);
      });
    } else {
      const auto N = int_list(field(v, "N", p), at(p, "N"));
      const auto& G = group_ref(field(v, "G", p), at(p, "G"));
      const auto& E = group_ref(field(v, "E", p), at(p, "E"));
      const auto iota = elem_list(field(v, "iota", p), at(p, "iota"));
      const auto proj = elem_list(field(v, "p", p), at(p, "p"));
      std::vector<grp::Elem> section;
      if (v.contains("section")) section = elem_list(v["section"], at(p, "section"));
      e = checked(p, [&] {
        auto Ng = grp::make_abelian(N);
        return std::make_shared<const ext::CentralExtension>(grp::AbelianGroup(N), G, E, grp::GroupHom(Ng, E, iota),
                                                             grp::GroupHom(E, G, proj), section);
      });
    }
    ws_.extensions.emplace(name, e);
  }

  void load_repgroup(const std::string& name, const json& j, const std::string& ptr) {
    const auto kind = kind_of(j, ptr, {"abelian", "extension"}, {});
    if (kind.empty()) invalid(ptr, "representation group needs 'abelian' or 'extension'");
    const std::string p = at(ptr, kind);
    if (kind == "abelian") {
      const auto& G = group_ref(j[kind], p);
      if (!G->abelian_structure()) invalid(p, "group is not given as an abelian group");
      ws_.repgroups.emplace(name, checked(p, [&] { return ext::representation_group_abelian(G); }));
    } else {
      const auto L = extension_ref(j[kind], p);
      ws_.repgroups.emplace(name, checked(p, [&] { return ext::verify_representation_group(*L); }));
    }
  }

  void load_verify(const json& v) {
    static const std::map<std::string, std::vector<std::string>> kinds{
        {"lem-pointwise", {"cochains"}},
        {"prop-decom", {"cochains"}},
        {"prop-decom1", {"cochains", "cochains"}},
        {"thm-pt", {"cochains", "cochains"}},
        {"thm-general", {"cochains", "repgroups"}},
        {"thm-groupex", {"extensions", "repgroups"}},
        {"cor-pt-group", {"extensions"}},
    };
    if (!v.is_array()) invalid("/verify", "expected an array");
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string p = at("/verify", i);
      VerifyEntry e;
      e.check = as_string(field(v[i], "check", p), at(p, "check"));
      const auto it = kinds.find(e.check);
      if (it == kinds.end()) invalid(at(p, "check"), "unknown check '" + e.check + "'");
      e.inputs = string_list(field(v[i], "inputs", p), at(p, "inputs"));
      if (e.inputs.size() != it->second.size())
        invalid(at(p, "inputs"), e.check + " takes " + std::to_string(it->second.size()) + " inputs");
      for (std::size_t k = 0; k < e.inputs.size(); ++k) resolve(it->second[k], e.inputs[k], at(at(p, "inputs"), k));
      if (e.check == "prop-decom" && !ws_.products.count(ws_.cochain_groups[e.inputs[0]]))
        invalid(at(at(p, "inputs"), 0), "prop-decom needs a cochain on a declared product group");
      ws_.verify.push_back(std::move(e));
    }
  }

  const json& root_;
  Workspace& ws_;
  std::set<std::pair<std::string, std::string>> done_, active_;
};

}  // namespace

const grp::GroupPtr& Workspace::group(const std::string& name, const std::string& pointer) const {
  const auto it = groups.find(name);
  if (it == groups.end()) throw InputError(ErrorCode::UnresolvedRef, pointer, "unresolved group reference '" + name + "'");
  return it->second;
}

const coh::Cochain& Workspace::cochain(const std::string& name, const std::string& pointer) const {
  const auto it = cochains.find(name);
  if (it == cochains.end())
    throw InputError(ErrorCode::UnresolvedRef, pointer, "unresolved cochain reference '" + name + "'");
  return it->second;
}

const ext::CentralExtension& Workspace::extension(const std::string& name, const std::string& pointer) const {
  const auto it = extensions.find(name);
  if (it == extensions.end())
    throw InputError(ErrorCode::UnresolvedRef, pointer, "unresolved extension reference '" + name + "'");
  return *it->second;
}

const ext::RepresentationGroup& Workspace::repgroup(const std::string& name, const std::string& pointer) const {
  const auto it = repgroups.find(name);
  if (it == repgroups.end())
    throw InputError(ErrorCode::UnresolvedRef, pointer, "unresolved repgroup reference '" + name + "'");
  return it->second;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Workspace parse_workspace(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(ErrorCode::ParseError, "", e.what());
  }
  Workspace ws;
  ws.hash = fnv1a_hex(text);
  Loader(root, ws).load();
  return ws;
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(ErrorCode::ParseError, "", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Workspace load_workspace(const std::string& path) { return parse_workspace(read_input(path)); }

}  // namespace twistcoh::cli
