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
#include "lgroup/conjugacy.hpp"
#include "lgroup/verify.hpp"
#include "lgroup/workspace.hpp"
#include "oracle.hpp"

using namespace lgroup;
using namespace lgroup::verify;
using fixtures::code_of;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Instance> instances(std::uint64_t count, const Bounds& bounds = {}) {
  std::vector<Instance> out;
  for (std::uint64_t s = 0; s < count; ++s) out.push_back(gen_instance(s, bounds));
  return out;
}

int count(const std::vector<Report>& reports, Verdict v) {
  int n = 0;
  for (const Report& r : reports) n += r.verdict == v;
  return n;
}

}  // namespace

TEST_CASE("instance generation is deterministic") {
  for (std::uint64_t s : {0u, 1u, 77u, 4096u}) {
    const Instance a = gen_instance(s), b = gen_instance(s);
    CHECK(a.descriptor == b.descriptor);
    CHECK(std::ranges::equal(a.mu.values(), b.mu.values()));
    CHECK(std::ranges::equal(a.eta.values(), b.eta.values()));
    CHECK(a.points.size() == b.points.size());
  }
  const auto first = instances(40), second = instances(40);
  for (const std::string& id : suite_ids())
    CHECK(reports_to_json(run_suite(id, first)) == reports_to_json(run_suite(id, second)));
}

TEST_CASE("generated instances satisfy their invariants") {
  for (const Instance& in : instances(500)) {
    CHECK(oracle::is_l_subgroup(in.mu));
    CHECK(oracle::is_l_subgroup(in.eta));
    CHECK(oracle::leq_pointwise(in.eta, in.mu));
    if (in.nu) {
      CHECK(oracle::is_l_subgroup(*in.nu));
      CHECK(oracle::leq_pointwise(*in.nu, in.mu));
    }
    for (const LPoint& p : in.points) CHECK(in.lattice->leq(p.value, in.mu(p.at)));
    CHECK(in.group->order() <= 16);
    CHECK(in.lattice->size() <= 8);
  }
}

TEST_CASE("smallest bounds") {
  Bounds b;
  b.max_group_order = 1;
  b.max_lattice_size = 2;
  for (const Instance& in : instances(30, b)) {
    CHECK(in.group->order() == 1);
    CHECK(in.lattice->size() == 2);
  }
  const auto ins = instances(30, b);
  for (const std::string& id : suite_ids()) CHECK_FALSE(any_failed(run_suite(id, ins)));
}

TEST_CASE("bounds and suite names are validated") {
  Bounds b;
  b.max_group_order = 25;
  CHECK(code_of([&] { gen_instance(0, b); }) == ErrorCode::kBoundsExceeded);
  b.max_group_order = 8;
  b.max_lattice_size = 1;
  CHECK(code_of([&] { gen_instance(0, b); }) == ErrorCode::kBoundsExceeded);
  const Instance in = gen_instance(0);
  CHECK(code_of([&] { run_check("T9.9", in); }) == ErrorCode::kUnknownSuite);
  CHECK_FALSE(is_registered("T9.9"));
  CHECK(suite_ids().size() == 21);
  for (const std::string& id : suite_ids()) {
    CHECK(is_registered(id));
    CHECK_FALSE(suite_description(id).empty());
  }
}

TEST_CASE("every suite passes on the default sweep") {
  const auto ins = instances(200);
  for (const std::string& id : suite_ids()) {
    const auto reports = run_suite(id, ins);
    INFO(id);
    CHECK(count(reports, Verdict::kFail) == 0);
  }
  CHECK(count(run_suite("T3.2", instances(100)), Verdict::kPass) == 100);
}

TEST_CASE("parallel runs keep input order and results") {
  const auto ins = instances(80);
  RunOptions par;
  par.jobs = 6;
  for (const std::string& id : suite_ids())
    CHECK(reports_to_json(run_suite(id, ins)) == reports_to_json(run_suite(id, ins, par)));
}

TEST_CASE("maximality suite skips off chains") {
  Bounds b;
  const auto ins = instances(120, b);
  int chain_skips = 0;
  for (const Instance& in : ins) {
    const Report r = run_check("T3.10", in);
    if (!in.lattice->is_chain()) {
      CHECK(r.verdict == Verdict::kSkip);
      CHECK(r.detail == "requires chain");
      ++chain_skips;
    }
  }
  CHECK(chain_skips > 0);
}

TEST_CASE("normalizer equivalence on the dihedral workspace") {
  const Workspace ws =
      parse_workspace(read_file(std::string(LGROUP_TEST_DATA_DIR) + "/d16.json"));
  const Instance in = instance_from_workspace(ws, "mu", "eta");
  CHECK(in.points.size() == 1);
  for (const char* id : {"D4.10-equivalence", "P4.1", "D4.3-largest", "T4.4", "L4.8", "L4.9",
                         "T3.2", "P4.7"}) {
    INFO(id);
    CHECK(run_check(id, in).verdict == Verdict::kPass);
  }
}

TEST_CASE("reports serialize without timing by default") {
  const Instance in = gen_instance(3);
  Report r = run_check("T3.2", in);
  r.elapsed_ms = 12.5;
  const std::string plain = reports_to_json(std::span(&r, 1));
  CHECK(plain.find("elapsed_ms") == std::string::npos);
  CHECK(plain.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(reports_to_json(std::span(&r, 1), true).find("elapsed_ms") != std::string::npos);
}

TEST_CASE("a reported witness replays against direct computation") {
  // Without the distributivity hypothesis, conjugation need not distribute
  // over set products. This instance is over a non-distributive lattice.
  const Instance in = gen_instance(6);
  REQUIRE_FALSE(in.lattice->is_distributive());
  RunOptions loose;
  loose.enforce_hypotheses = false;
  const Report r = run_check("T3.4", in, loose);
  REQUIRE(r.verdict == Verdict::kFail);
  CHECK(run_check("T3.4", in).verdict == Verdict::kSkip);

  const std::string& point = r.witness.at("point");
  const auto at = point.find('@');
  const LatticeElt a = in.lattice->at(point.substr(0, at));
  const GElt z = in.group->at(point.substr(at + 1));
  const GElt x = in.group->at(r.witness.at("element"));
  const LSubset lhs = oracle::conjugate_by_point(oracle::set_product(in.eta, *in.nu), a, z);
  const LSubset rhs = oracle::set_product(oracle::conjugate_by_point(in.eta, a, z),
                                          oracle::conjugate_by_point(*in.nu, a, z));
  CHECK(in.lattice->label(lhs(x)) == r.witness.at("lhs"));
  CHECK(in.lattice->label(rhs(x)) == r.witness.at("rhs"));
  CHECK(lhs(x) != rhs(x));
}
