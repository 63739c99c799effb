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

#include "lgroup/commands.hpp"

#include <algorithm>

#include "json.hpp"
#include "lgroup/conjugacy.hpp"
#include "lgroup/error.hpp"
#include "lgroup/normality.hpp"

namespace lgroup::commands {

using json = nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json pairs(const LSubset& s) {
  json out = json::array();
  for (GElt x : s.domain().elements()) out.push_back({s.domain().label(x), s.codomain().label(s(x))});
  return out;
}

json labels(const FiniteGroup& grp, const ElementSet& set) {
  json out = json::array();
  for (GElt x : set.elements()) out.push_back(grp.label(x));
  return out;
}

std::string join_labels(const FiniteGroup& grp, const std::vector<GElt>& elems) {
  std::string out;
  for (GElt x : elems) out += (out.empty() ? "" : ", ") + grp.label(x);
  return out;
}

// One line per value, values in order of first appearance, elements in
// index order.
std::string table(const LSubset& s) {
  std::vector<LatticeElt> order;
  std::vector<std::vector<GElt>> groups;
  for (GElt x : s.domain().elements()) {
    auto it = std::find(order.begin(), order.end(), s(x));
    if (it == order.end()) {
      order.push_back(s(x));
      groups.emplace_back();
      it = order.end() - 1;
    }
    groups[it - order.begin()].push_back(x);
  }
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i)
    out += s.codomain().label(order[i]) + ": " + join_labels(s.domain(), groups[i]) + "\n";
  return out;
}

Output lsubset_output(const LSubset& s, json meta, Format fmt) {
  if (fmt == Format::kTable) return {table(s), true};
  meta["pairs"] = pairs(s);
  return {dump(meta), true};
}

std::string point_text(const Workspace& ws, const LPoint& p) {
  return ws.lattice->label(p.value) + "@" + ws.group->label(p.at);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

Output validate(const Workspace& ws, Format fmt) {
  json checks = json::array();
  bool valid = true;
  auto record = [&](const std::string& subject, const std::string& check, bool holds) {
    checks.push_back({{"subject", subject}, {"check", check}, {"holds", holds}});
    valid = valid && holds;
  };
  for (const auto& [name, flags] : ws.flags) {
    const LSubset& s = ws.lsubset(name);
    if (flags.l_subgroup) record(name, "l_subgroup", is_l_subgroup(s));
    if (flags.l_subgroup_of)
      record(name, "l_subgroup_of " + *flags.l_subgroup_of,
             is_l_subgroup_of(s, ws.lsubset(*flags.l_subgroup_of)));
    if (flags.normal_in) {
      const LSubset& mu = ws.lsubset(*flags.normal_in);
      const bool sub = is_l_subgroup_of(s, mu);
      record(name, "normal_in " + *flags.normal_in, sub && is_normal_in(s, mu));
    }
  }
  for (const auto& [name, amb] : ws.point_ambients)
    record(name, "in " + amb, point_membership(*ws.find_point(name), ws.lsubset(amb)));

  if (fmt == Format::kJson) {
    json out{{"lattice",
              {{"size", ws.lattice->size()},
               {"distributive", ws.lattice->is_distributive()},
               {"chain", ws.lattice->is_chain()}}},
             {"group", {{"order", ws.group->order()}}},
             {"sets", ws.sets.size()},
             {"lsubsets", ws.lsubsets.size()},
             {"points", ws.points.size()},
             {"hom", ws.hom.has_value()},
             {"checks", checks},
             {"valid", valid}};
    return {dump(out), valid};
  }
  std::string text = "lattice: " + std::to_string(ws.lattice->size()) + " elements" +
                     (ws.lattice->is_chain() ? ", chain" : "") +
                     (ws.lattice->is_distributive() ? ", distributive" : ", not distributive") +
                     "\n";
  text += "group: order " + std::to_string(ws.group->order()) + "\n";
  text += "sets: " + std::to_string(ws.sets.size()) + ", lsubsets: " +
          std::to_string(ws.lsubsets.size()) + ", points: " + std::to_string(ws.points.size()) +
          (ws.hom ? ", hom" : "") + "\n";
  for (const json& c : checks)
    text += c["subject"].get<std::string>() + " " + c["check"].get<std::string>() + ": " +
            (c["holds"].get<bool>() ? "ok" : "FAILED") + "\n";
  text += valid ? "valid\n" : "invalid\n";
  return {text, valid};
}

Output eval(const Workspace& ws, const std::string& subject, const std::string& element,
            Format fmt) {
  const LSubset& s = ws.lsubset(subject);
  const GElt x = ws.group->at(element);
  const std::string v = ws.lattice->label(s(x));
  if (fmt == Format::kTable) return {v + "\n", true};
  return {dump({{"subject", subject}, {"element", ws.group->label(x)}, {"value", v}}), true};
}

Output level(const Workspace& ws, const std::string& subject, const std::string& value,
             Format fmt) {
  const LSubset& s = ws.lsubset(subject);
  const ElementSet set = level_set(s, ws.lattice->at(value));
  const bool sub = !set.empty() && ws.group->is_subgroup(set);
  if (fmt == Format::kTable)
    return {"{" + join_labels(*ws.group, set.elements()) + "}\nsubgroup: " + yes_no(sub) + "\n",
            true};
  return {dump({{"subject", subject},
                {"value", value},
                {"elements", labels(*ws.group, set)},
                {"subgroup", sub}}),
          true};
}

Output product(const Workspace& ws, const std::string& left, const std::string& right,
               Format fmt) {
  return lsubset_output(set_product(ws.lsubset(left), ws.lsubset(right)),
                        {{"left", left}, {"right", right}}, fmt);
}

Output conjugate(const Workspace& ws, const ConjugateRequest& req, Format fmt) {
  const LSubset& eta = ws.lsubset(req.subject);
  if (req.point.has_value() == req.by_subset.has_value())
    throw Error(ErrorCode::kInvalidArgument, "conjugate needs exactly one of --point or --by-subset");
  if (req.by_subset) {
    if (req.ambient)
      throw Error(ErrorCode::kInvalidArgument, "--ambient applies only to --point");
    return lsubset_output(conjugate_by_subset(ws.lsubset(*req.by_subset), eta),
                          {{"subject", req.subject}, {"by_subset", *req.by_subset}}, fmt);
  }
  const LPoint p = ws.point(*req.point);
  json meta{{"subject", req.subject}, {"point", point_text(ws, p)}};
  if (req.ambient) {
    meta["ambient"] = *req.ambient;
    return lsubset_output(conjugate_by_point(eta, p, ws.lsubset(*req.ambient)), meta, fmt);
  }
  return lsubset_output(conjugate_by_point(eta, p), meta, fmt);
}

Output generated(const Workspace& ws, const std::string& subject, const std::string& ambient,
                 Format fmt) {
  return lsubset_output(generated(ws.lsubset(subject), ws.lsubset(ambient)),
                        {{"subject", subject}, {"ambient", ambient}}, fmt);
}

Output is_normal(const Workspace& ws, const std::string& subject, const std::string& ambient,
                 Format fmt) {
  const LSubset& eta = ws.lsubset(subject);
  const LSubset& mu = ws.lsubset(ambient);
  const NormalityReport r = normality_via_conjugates(eta, mu);
  const bool normal = is_normal_in(eta, mu);
  if (normal != r.normal)
    throw Error(ErrorCode::kInternal, "normality tests disagree");
  if (fmt == Format::kTable) {
    std::string text = std::string(yes_no(normal)) + "\n";
    if (r.witness) text += "witness: conjugate by " + point_text(ws, *r.witness) + " escapes\n";
    return {text, normal};
  }
  json out{{"subject", subject}, {"ambient", ambient}, {"normal", normal}};
  if (r.witness) out["witness"] = point_text(ws, *r.witness);
  return {dump(out), normal};
}

Output normalizer(const Workspace& ws, const std::string& subject, const std::string& ambient,
                  NormalizerMethod method, Format fmt) {
  const LSubset& eta = ws.lsubset(subject);
  const LSubset& mu = ws.lsubset(ambient);
  json meta{{"subject", subject}, {"ambient", ambient}};
  switch (method) {
    case NormalizerMethod::kSetProduct:
      meta["method"] = "setproduct";
      return lsubset_output(normalizer_setproduct(eta, mu), meta, fmt);
    case NormalizerMethod::kConjugacy:
      meta["method"] = "conjugacy";
      return lsubset_output(normalizer_conjugacy(eta, mu), meta, fmt);
    case NormalizerMethod::kBoth:
      break;
  }
  const LSubset a = normalizer_setproduct(eta, mu);
  const LSubset b = normalizer_conjugacy(eta, mu);
  const bool equal = a == b;
  if (fmt == Format::kTable) {
    std::string text = "setproduct:\n" + table(a);
    if (!equal) text += "conjugacy:\n" + table(b);
    text += std::string("equal: ") + yes_no(equal) + "\n";
    return {text, equal};
  }
  meta["method"] = "both";
  meta["setproduct"] = pairs(a);
  meta["conjugacy"] = pairs(b);
  meta["equal"] = equal;
  return {dump(meta), equal};
}

Output is_maximal(const Workspace& ws, const std::string& subject, const std::string& ambient,
                  std::uint64_t cap, Format fmt) {
  const bool maximal = lgroup::is_maximal(ws.lsubset(subject), ws.lsubset(ambient), cap);
  if (fmt == Format::kTable) return {std::string(yes_no(maximal)) + "\n", maximal};
  return {dump({{"subject", subject}, {"ambient", ambient}, {"maximal", maximal}}), maximal};
}

Output run_verify(const VerifyRequest& req, Format fmt) {
  std::vector<std::string> suites;
  if (req.suite == "all") {
    suites = verify::suite_ids();
  } else {
    if (!verify::is_registered(req.suite))
      throw Error(ErrorCode::kUnknownSuite, "unknown suite: " + req.suite);
    suites.push_back(req.suite);
  }
  verify::check_bounds(req.bounds);
  std::vector<verify::Instance> instances;
  instances.reserve(req.seeds);
  for (std::uint64_t i = 0; i < req.seeds; ++i)
    instances.push_back(verify::gen_instance(req.seed_base + i, req.bounds));

  std::vector<verify::Report> reports;
  std::string text;
  for (const std::string& id : suites) {
    auto batch = verify::run_suite(id, instances, req.options);
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& r : batch) ++counts[static_cast<int>(r.verdict)];
    text += id + ": pass " + std::to_string(counts[0]) + ", fail " + std::to_string(counts[1]) +
            ", skip " + std::to_string(counts[2]) + "\n";
    for (const auto& r : batch) {
      if (r.verdict != verify::Verdict::kFail) continue;
      text += "  fail " + r.instance + ": " + r.detail + "\n";
      for (const auto& [k, v] : r.witness) text += "    " + k + " = " + v + "\n";
    }
    reports.insert(reports.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
  }
  const bool ok = !verify::any_failed(reports);
  if (fmt == Format::kJson) return {verify::reports_to_json(reports, req.include_timing) + "\n", ok};
  text += "instances: " + std::to_string(instances.size()) + ", result: " +
          (ok ? "pass" : "fail") + "\n";
  return {text, ok};
}

}  // namespace lgroup::commands
