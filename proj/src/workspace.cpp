//  Copyright 2026 The lgroup Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "lgroup/workspace.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "lgroup/error.hpp"

namespace lgroup {

using json = nlohmann::json;

namespace {

std::string child(const std::string& path, std::string_view key) {
  std::string out = path + "/";
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string child(const std::string& path, std::size_t i) {
  return path + "/" + std::to_string(i);
}

// Re-raises a builder error with the document location prepended.
template <typename F>
auto located(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.code(), (path.empty() ? "/" : path) + ": " + e.what());
  }
}

const json& object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  return j;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

std::string string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

std::size_t count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() == 0)
    throw SchemaError(path, "expected a positive integer");
  return j.get<std::size_t>();
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path, std::string("missing key \"") + key + "\"");
  return *it;
}

void allow_keys(const json& obj, std::initializer_list<std::string_view> keys,
                const std::string& path) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
      throw SchemaError(child(path, it.key()), "unknown key");
}

std::vector<std::string> strings(const json& j, const std::string& path) {
  std::vector<std::string> out;
  const json& arr = array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(string(arr[i], child(path, i)));
  return out;
}

std::vector<std::pair<std::string, std::string>> string_pairs(const json& j,
                                                              const std::string& path) {
  std::vector<std::pair<std::string, std::string>> out;
  const json& arr = array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = child(path, i);
    if (!arr[i].is_array() || arr[i].size() != 2)
      throw SchemaError(p, "expected a pair [lower, upper]");
    out.emplace_back(string(arr[i][0], child(p, 0)), string(arr[i][1], child(p, 1)));
  }
  return out;
}

LatticePtr parse_lattice(const json& j, const std::string& path) {
  object(j, path);
  allow_keys(j, {"labels", "covers", "leq", "chain"}, path);
  LatticeSpec spec;
  if (j.contains("chain")) {
    if (j.contains("labels") || j.contains("covers") || j.contains("leq"))
      throw SchemaError(path, "\"chain\" excludes \"labels\", \"covers\" and \"leq\"");
    spec.kind = LatticeSpec::Kind::kChain;
    spec.labels = strings(j["chain"], child(path, "chain"));
  } else {
    spec.labels = strings(member(j, "labels", path), child(path, "labels"));
    const bool covers = j.contains("covers"), leq = j.contains("leq");
    if (covers == leq) throw SchemaError(path, "exactly one of \"covers\" or \"leq\" is required");
    spec.kind = covers ? LatticeSpec::Kind::kCovers : LatticeSpec::Kind::kOrder;
    const char* key = covers ? "covers" : "leq";
    spec.relations = string_pairs(j[key], child(path, key));
  }
  return located(path, [&] { return std::make_shared<const Lattice>(Lattice::build(spec)); });
}

GroupPtr parse_group(const json& j, const std::string& path) {
  object(j, path);
  const std::string kind = string(member(j, "kind", path), child(path, "kind"));
  GroupSpec spec;
  if (kind == "symmetric" || kind == "cyclic") {
    allow_keys(j, {"kind", "n"}, path);
    spec.kind = kind == "symmetric" ? GroupSpec::Kind::kSymmetric : GroupSpec::Kind::kCyclic;
    spec.n = count(member(j, "n", path), child(path, "n"));
  } else if (kind == "dihedral") {
    allow_keys(j, {"kind", "order"}, path);
    spec.kind = GroupSpec::Kind::kDihedral;
    spec.n = count(member(j, "order", path), child(path, "order"));
  } else if (kind == "quaternion") {
    allow_keys(j, {"kind"}, path);
    return std::make_shared<const FiniteGroup>(FiniteGroup::quaternion());
  } else if (kind == "permutation") {
    allow_keys(j, {"kind", "degree", "generators", "closure_cap"}, path);
    spec.kind = GroupSpec::Kind::kPermutation;
    spec.n = count(member(j, "degree", path), child(path, "degree"));
    spec.generators = strings(member(j, "generators", path), child(path, "generators"));
    if (j.contains("closure_cap"))
      spec.closure_cap = count(j["closure_cap"], child(path, "closure_cap"));
  } else if (kind == "table") {
    allow_keys(j, {"kind", "labels", "mul"}, path);
    spec.kind = GroupSpec::Kind::kTable;
    spec.labels = strings(member(j, "labels", path), child(path, "labels"));
    const std::string mpath = child(path, "mul");
    const json& rows = array(member(j, "mul", path), mpath);
    for (std::size_t i = 0; i < rows.size(); ++i) spec.mul.push_back(strings(rows[i], child(mpath, i)));
  } else {
    throw SchemaError(child(path, "kind"), "unknown group kind \"" + kind + "\"");
  }
  return located(path, [&] { return std::make_shared<const FiniteGroup>(FiniteGroup::build(spec)); });
}

template <typename T>
const T* find_named(const Named<T>& items, std::string_view name) {
  for (const auto& [n, v] : items)
    if (n == name) return &v;
  return nullptr;
}

class Parser {
 public:
  explicit Parser(Workspace& ws) : ws_(ws) {}

  // One set reference: a named set, a brace literal "{x, y}", or an element.
  ElementSet resolve(const std::string& item, const std::string& path) const {
    if (const ElementSet* s = ws_.find_set(item)) return *s;
    const FiniteGroup& grp = *ws_.group;
    ElementSet out(grp.order());
    if (item.size() >= 2 && item.front() == '{' && item.back() == '}') {
      std::string body = item.substr(1, item.size() - 2);
      std::size_t start = 0;
      while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string::npos) comma = body.size();
        std::string label = body.substr(start, comma - start);
        label.erase(0, label.find_first_not_of(' '));
        label.erase(label.find_last_not_of(' ') + 1);
        if (!label.empty()) out.insert(located(path, [&] { return grp.at(label); }));
        start = comma + 1;
      }
      return out;
    }
    out.insert(located(path, [&] { return grp.at(item); }));
    return out;
  }

  ElementSet union_of(const json& j, const std::string& path) const {
    ElementSet out(ws_.group->order());
    if (j.is_string()) return resolve(j.get<std::string>(), path);
    const json& arr = array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i)
      out |= resolve(string(arr[i], child(path, i)), child(path, i));
    return out;
  }

  void sets(const json& j, const std::string& path) {
    object(j, path);
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string p = child(path, it.key());
      ElementSet s(ws_.group->order());
      if (it->is_object()) {
        allow_keys(*it, {"generated_by"}, p);
        const std::string gp = child(p, "generated_by");
        s = ws_.group->generated(union_of(member(*it, "generated_by", p), gp));
      } else {
        s = union_of(*it, p);
      }
      ws_.sets.emplace_back(it.key(), std::move(s));
    }
  }

  LatticeElt value(const json& j, const std::string& path) const {
    const std::string label = string(j, path);
    return located(path, [&] { return ws_.lattice->at(label); });
  }

  ElementSet clause_elements(const json& clause, const std::string& path) const {
    const bool has_set = clause.contains("set"), has_minus = clause.contains("set_minus");
    if (has_set == has_minus)
      throw SchemaError(path, "exactly one of \"set\" or \"set_minus\" is required");
    if (has_set) return union_of(clause["set"], child(path, "set"));
    const std::string mp = child(path, "set_minus");
    const json& parts = array(clause["set_minus"], mp);
    if (parts.empty()) throw SchemaError(mp, "expected at least one set");
    ElementSet out = resolve(string(parts[0], child(mp, 0)), child(mp, 0));
    for (std::size_t i = 1; i < parts.size(); ++i)
      out = out - resolve(string(parts[i], child(mp, i)), child(mp, i));
    return out;
  }

  void lsubsets(const json& j, const std::string& path) {
    object(j, path);
    const FiniteGroup& grp = *ws_.group;
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string p = child(path, it.key());
      object(*it, p);
      allow_keys(*it, {"default", "assign", "l_subgroup", "l_subgroup_of", "normal_in"}, p);
      std::vector<std::optional<LatticeElt>> values(grp.order());
      ElementSet assigned(grp.order());
      if (it->contains("assign")) {
        const std::string ap = child(p, "assign");
        const json& clauses = array((*it)["assign"], ap);
        for (std::size_t i = 0; i < clauses.size(); ++i) {
          const std::string cp = child(ap, i);
          const json& clause = clauses[i];
          ElementSet elems(grp.order());
          LatticeElt v;
          if (clause.is_array()) {
            if (clause.size() != 2) throw SchemaError(cp, "expected [element, value]");
            elems = resolve(string(clause[0], child(cp, 0)), child(cp, 0));
            v = value(clause[1], child(cp, 1));
          } else {
            object(clause, cp);
            allow_keys(clause, {"set", "set_minus", "value"}, cp);
            elems = clause_elements(clause, cp);
            v = value(member(clause, "value", cp), child(cp, "value"));
          }
          const ElementSet overlap = elems & assigned;
          if (!overlap.empty())
            throw SchemaError(cp, "clause overlaps an earlier assignment at " +
                                      grp.label(overlap.elements().front()));
          for (GElt x : elems.elements()) values[x.index] = v;
          assigned |= elems;
        }
      }
      std::optional<LatticeElt> fallback;
      if (it->contains("default")) fallback = value((*it)["default"], child(p, "default"));
      std::vector<LatticeElt> out;
      for (GElt x : grp.elements()) {
        if (values[x.index]) out.push_back(*values[x.index]);
        else if (fallback) out.push_back(*fallback);
        else throw SchemaError(child(p, "default"),
                               "no default and no value for element " + grp.label(x));
      }
      ws_.lsubsets.emplace_back(it.key(), LSubset(ws_.group, ws_.lattice, std::move(out)));

      LSubsetFlags flags;
      if (it->contains("l_subgroup")) {
        if (!(*it)["l_subgroup"].is_boolean())
          throw SchemaError(child(p, "l_subgroup"), "expected a boolean");
        flags.l_subgroup = (*it)["l_subgroup"].get<bool>();
      }
      if (it->contains("l_subgroup_of"))
        flags.l_subgroup_of = string((*it)["l_subgroup_of"], child(p, "l_subgroup_of"));
      if (it->contains("normal_in"))
        flags.normal_in = string((*it)["normal_in"], child(p, "normal_in"));
      ws_.flags.emplace_back(it.key(), std::move(flags));
    }
    // Flag targets may name L-subsets declared later in the document.
    for (const auto& [name, flags] : ws_.flags) {
      const std::string p = child(path, name);
      if (flags.l_subgroup_of && !ws_.find_lsubset(*flags.l_subgroup_of))
        throw SchemaError(child(p, "l_subgroup_of"), "unknown L-subset " + *flags.l_subgroup_of);
      if (flags.normal_in && !ws_.find_lsubset(*flags.normal_in))
        throw SchemaError(child(p, "normal_in"), "unknown L-subset " + *flags.normal_in);
    }
  }

  void points(const json& j, const std::string& path) {
    object(j, path);
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string p = child(path, it.key());
      object(*it, p);
      allow_keys(*it, {"value", "at", "in"}, p);
      const LatticeElt v = value(member(*it, "value", p), child(p, "value"));
      const std::string at = string(member(*it, "at", p), child(p, "at"));
      const GElt x = located(child(p, "at"), [&] { return ws_.group->at(at); });
      const LPoint pt{v, x};
      if (it->contains("in")) {
        const std::string amb = string((*it)["in"], child(p, "in"));
        const LSubset* mu = ws_.find_lsubset(amb);
        if (!mu) throw SchemaError(child(p, "in"), "unknown L-subset " + amb);
        if (!point_membership(pt, *mu))
          throw Error(ErrorCode::kPointNotInAmbient, p + ": L-point is not in " + amb);
        ws_.point_ambients.emplace_back(it.key(), amb);
      }
      ws_.points.emplace_back(it.key(), pt);
    }
  }

  void hom(const json& j, const std::string& path) {
    object(j, path);
    allow_keys(j, {"target", "map", "generator_images"}, path);
    GroupPtr target = parse_group(member(j, "target", path), child(path, "target"));
    const bool has_map = j.contains("map"), has_gens = j.contains("generator_images");
    if (has_map == has_gens)
      throw SchemaError(path, "exactly one of \"map\" or \"generator_images\" is required");
    const char* key = has_map ? "map" : "generator_images";
    const std::string mp = child(path, key);
    HomSpec spec;
    spec.generators_only = has_gens;
    const json& m = object(j[key], mp);
    for (auto it = m.begin(); it != m.end(); ++it)
      spec.images.emplace_back(it.key(), string(*it, child(mp, it.key())));
    ws_.hom = located(path, [&] { return GroupHom::build(ws_.group, target, spec); });
  }

 private:
  Workspace& ws_;
};

}  // namespace

const ElementSet* Workspace::find_set(std::string_view name) const {
  return find_named(sets, name);
}
const LSubset* Workspace::find_lsubset(std::string_view name) const {
  return find_named(lsubsets, name);
}
const LPoint* Workspace::find_point(std::string_view name) const {
  return find_named(points, name);
}

const LSubset& Workspace::lsubset(std::string_view name) const {
  if (const LSubset* s = find_lsubset(name)) return *s;
  throw Error(ErrorCode::kUnknownName, "unknown L-subset " + std::string(name));
}

LPoint Workspace::point(std::string_view text) const {
  if (const LPoint* p = find_point(text)) return *p;
  const auto at = text.find('@');
  if (at == std::string_view::npos)
    throw Error(ErrorCode::kUnknownName,
                "unknown point " + std::string(text) + " (expected a name or value@element)");
  return LPoint{lattice->at(text.substr(0, at)), group->at(text.substr(at + 1))};
}

Workspace parse_workspace(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed JSON: ") + e.what());
  }
  object(doc, "");
  allow_keys(doc, {"lattice", "group", "sets", "lsubsets", "points", "hom"}, "");
  Workspace ws;
  ws.lattice = parse_lattice(member(doc, "lattice", "/"), "/lattice");
  ws.group = parse_group(member(doc, "group", "/"), "/group");
  Parser parser(ws);
  if (doc.contains("sets")) parser.sets(doc["sets"], "/sets");
  if (doc.contains("lsubsets")) parser.lsubsets(doc["lsubsets"], "/lsubsets");
  if (doc.contains("points")) parser.points(doc["points"], "/points");
  if (doc.contains("hom")) parser.hom(doc["hom"], "/hom");
  return ws;
}

std::string lsubset_pairs_json(const LSubset& s) {
  json pairs = json::array();
  for (GElt x : s.domain().elements()) pairs.push_back({s.domain().label(x), s.codomain().label(s(x))});
  return pairs.dump();
}

namespace verify {

Instance instance_from_workspace(const Workspace& ws, std::string_view mu,
                                 std::string_view eta, std::optional<std::string_view> nu) {
  const LSubset& m = ws.lsubset(mu);
  const LSubset& e = ws.lsubset(eta);
  if (!is_l_subgroup_of(e, m))
    throw Error(ErrorCode::kNotAnLSubgroup,
                std::string(eta) + " is not an L-subgroup of " + std::string(mu));
  std::optional<LSubset> n;
  if (nu) {
    n = ws.lsubset(*nu);
    if (!is_l_subgroup_of(*n, m))
      throw Error(ErrorCode::kNotAnLSubgroup,
                  std::string(*nu) + " is not an L-subgroup of " + std::string(mu));
  }
  std::vector<LPoint> points;
  for (const auto& [name, p] : ws.points)
    if (point_membership(p, m)) points.push_back(p);
  std::string descriptor = "workspace mu=" + std::string(mu) + " eta=" + std::string(eta);
  return Instance{0, std::move(descriptor), ws.lattice, ws.group, m, e, std::move(n),
                  std::move(points), ws.hom};
}

}  // namespace verify

}  // namespace lgroup
