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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "lgroup/commands.hpp"
#include "lgroup/workspace.hpp"

using namespace lgroup;
using fixtures::code_of;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string data(const std::string& name) {
  return read_file(std::string(LGROUP_TEST_DATA_DIR) + "/" + name);
}

std::string golden(const std::string& name) {
  return read_file(std::string(LGROUP_TEST_GOLDEN_DIR) + "/" + name);
}

std::string schema_path(const std::string& doc) {
  try {
    parse_workspace(doc);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<none>";
}

const char* kSmall = R"({
  "lattice": {"chain": ["0", "1", "2"]},
  "group": {"kind": "cyclic", "n": 4},
  "lsubsets": {
    "mu": {"default": "1", "assign": [{"set": ["e"], "value": "2"}], "l_subgroup": true},
    "eta": {"default": "0", "assign": [["e", "2"], ["g^2", "1"]], "l_subgroup_of": "mu"}
  },
  "points": {"p": {"value": "1", "at": "g", "in": "mu"}}
})";

}  // namespace

TEST_CASE("worked examples load into the same values as the fixtures") {
  const Workspace s4 = parse_workspace(data("s4.json"));
  fixtures::S4Example ex;
  CHECK(s4.lsubset("eta").values().size() == 24);
  for (GElt x : ex.grp->elements()) {
    const GElt y = s4.group->at(ex.grp->label(x));
    CHECK(s4.lattice->label(s4.lsubset("eta")(y)) == ex.lat->label(ex.eta(x)));
    CHECK(s4.lattice->label(s4.lsubset("mu")(y)) == ex.lat->label(ex.mu(x)));
  }
  CHECK(s4.point("p").value == s4.lattice->at("d"));
  CHECK(s4.point("u@(1 2)").value == s4.lattice->at("u"));

  const Workspace d16 = parse_workspace(data("d16.json"));
  CHECK(d16.find_set("H")->count() == 4);
  CHECK(d16.find_set("D8")->count() == 8);
  CHECK(d16.find_lsubset("nu") == nullptr);
  CHECK(code_of([&] { d16.lsubset("nu"); }) == ErrorCode::kUnknownName);
}

TEST_CASE("malformed documents") {
  CHECK(code_of([] { parse_workspace("{\"lattice\": "); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_workspace("[]"); }) == ErrorCode::kSchemaError);
  std::string doc = kSmall;
  doc.replace(doc.find("[\"g^2\", \"1\"]"), 12, "[\"e\", \"1\"]");
  CHECK(schema_path(doc) == "/lsubsets/eta/assign/1");
  std::string no_default = kSmall;
  no_default.replace(no_default.find("\"default\": \"0\", "), 16, "");
  CHECK(schema_path(no_default) == "/lsubsets/eta/default");
  std::string extra = kSmall;
  extra.replace(extra.find("\"points\""), 0, "\"colour\": 1, ");
  CHECK(schema_path(extra) == "/colour");
  std::string bad_kind = kSmall;
  bad_kind.replace(bad_kind.find("cyclic"), 6, "abelian");
  CHECK(schema_path(bad_kind) == "/group/kind");
  std::string outside = kSmall;
  outside.replace(outside.find("\"value\": \"1\", \"at\""), 12, "\"value\": \"2\"");
  CHECK(code_of([&] { parse_workspace(outside); }) == ErrorCode::kPointNotInAmbient);
}

TEST_CASE("builder errors keep their codes") {
  const char* not_lattice = R"({
    "lattice": {"labels": ["a", "b", "c"], "covers": [["a", "b"], ["a", "c"]]},
    "group": {"kind": "cyclic", "n": 2},
    "lsubsets": {}
  })";
  CHECK(code_of([&] { parse_workspace(not_lattice); }) == ErrorCode::kNotALattice);
  const char* bad_hom = R"({
    "lattice": {"chain": ["0", "1"]},
    "group": {"kind": "dihedral", "order": 8},
    "lsubsets": {},
    "hom": {"target": {"kind": "cyclic", "n": 4}, "generator_images": {"r": "g", "s": "g"}}
  })";
  CHECK(code_of([&] { parse_workspace(bad_hom); }) == ErrorCode::kNotAHomomorphism);
}

TEST_CASE("homomorphisms") {
  const char* doc = R"({
    "lattice": {"chain": ["0", "1"]},
    "group": {"kind": "dihedral", "order": 8},
    "lsubsets": {},
    "hom": {"target": {"kind": "cyclic", "n": 2}, "generator_images": {"r": "e", "s": "g"}}
  })";
  const Workspace ws = parse_workspace(doc);
  REQUIRE(ws.hom);
  CHECK(ws.hom->codomain()->order() == 2);
  CHECK((*ws.hom)(ws.group->at("sr")) == ws.hom->codomain()->at("g"));
  CHECK((*ws.hom)(ws.group->at("r^3")) == ws.hom->codomain()->identity());
}

TEST_CASE("pairs round-trip through JSON") {
  const Workspace ws = parse_workspace(kSmall);
  const std::string pairs = lsubset_pairs_json(ws.lsubset("eta"));
  CHECK(pairs.find("\"g^2\"") != std::string::npos);
  std::string doc = kSmall;
  const std::string marker = "\"eta\": {\"default\": \"0\", \"assign\": [[\"e\", \"2\"], [\"g^2\", \"1\"]]";
  doc.replace(doc.find(marker), marker.size(), "\"eta\": {\"assign\": " + pairs);
  const Workspace again = parse_workspace(doc);
  CHECK(std::ranges::equal(again.lsubset("eta").values(), ws.lsubset("eta").values()));
}

TEST_CASE("command outputs") {
  using namespace lgroup::commands;
  const Workspace s4 = parse_workspace(data("s4.json"));
  const Output conj = conjugate(s4, {"eta", "p", std::nullopt, "mu"}, Format::kTable);
  CHECK(conj.ok);
  CHECK(conj.text == golden("conjugate_s4.txt"));
  CHECK(validate(s4, Format::kTable).ok);
  CHECK_FALSE(is_normal(s4, "eta", "mu", Format::kTable).ok);
  CHECK(eval(s4, "eta", "(2 4)", Format::kTable).text.find('a') != std::string::npos);

  const Workspace d16 = parse_workspace(data("d16.json"));
  CHECK(normalizer(d16, "eta", "mu", NormalizerMethod::kSetProduct, Format::kTable).text ==
        golden("normalizer_d16.txt"));
  CHECK(normalizer(d16, "eta", "mu", NormalizerMethod::kBoth, Format::kTable).ok);
  const Output js = normalizer(d16, "eta", "mu", NormalizerMethod::kConjugacy, Format::kJson);
  CHECK(js.text.find("\"pairs\"") != std::string::npos);
  CHECK(code_of([&] { eval(d16, "zeta", "e", Format::kTable); }) == ErrorCode::kUnknownName);
  CHECK(code_of([&] {
          conjugate(d16, {"eta", "1@r", std::nullopt, "mu"}, Format::kTable);
        }) == ErrorCode::kPointNotInAmbient);

  VerifyRequest req;
  req.suite = "T3.2";
  req.seeds = 20;
  const Output v = run_verify(req, Format::kTable);
  CHECK(v.ok);
  CHECK(v.text.find("T3.2: pass 20, fail 0, skip 0") != std::string::npos);
  req.suite = "nope";
  CHECK(code_of([&] { run_verify(req, Format::kTable); }) == ErrorCode::kUnknownSuite);
}
