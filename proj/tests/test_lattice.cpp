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

#include <functional>
#include <memory>
#include <optional>

#include "doctest.h"
#include "lgroup/error.hpp"
#include "lgroup/lattice.hpp"

using namespace lgroup;

namespace {

Lattice lattice_m() {
  return Lattice::from_covers({"l", "f", "a", "b", "c", "d", "u"},
                              {{"l", "f"}, {"l", "a"}, {"l", "b"}, {"l", "c"}, {"f", "d"},
                               {"a", "d"}, {"b", "d"}, {"c", "d"}, {"d", "u"}});
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

// Greatest lower bound found by scanning the order relation.
LatticeElt scan_meet(const Lattice& lat, LatticeElt a, LatticeElt b) {
  std::optional<LatticeElt> best;
  for (LatticeElt c : lat.elements())
    if (lat.leq(c, a) && lat.leq(c, b) && (!best || lat.leq(*best, c))) best = c;
  return *best;
}

}  // namespace

TEST_CASE("two-element chain behaves as min and max") {
  const Lattice lat = Lattice::chain({"0", "1"});
  const LatticeElt zero = lat.at("0"), one = lat.at("1");
  CHECK(lat.size() == 2);
  CHECK(lat.bottom() == zero);
  CHECK(lat.top() == one);
  CHECK(lat.meet(zero, one) == zero);
  CHECK(lat.join(zero, one) == one);
  CHECK(lat.is_chain());
  CHECK(lat.is_distributive());
}

TEST_CASE("chain order follows list position, not numeric value") {
  const Lattice lat = Lattice::chain({"0", "1/32", "1/16", "1/12", "1/8", "1/4", "1/2", "1"});
  CHECK(lat.lt(lat.at("1/16"), lat.at("1/12")));
  CHECK(lat.meet(lat.at("1/12"), lat.at("1/2")) == lat.at("1/12"));
  CHECK(lat.join(lat.at("1/32"), lat.at("1/8")) == lat.at("1/8"));
}

TEST_CASE("lattice M from its covers") {
  const Lattice lat = lattice_m();
  CHECK(lat.size() == 7);
  const LatticeElt d = lat.at("d");
  for (const char* x : {"a", "b", "c", "l", "f"}) CHECK(lat.meet(d, lat.at(x)) == lat.at(x));
  CHECK(lat.meet(d, lat.at("u")) == d);
  CHECK(lat.join(lat.at("a"), lat.at("b")) == d);
  CHECK(lat.meet(lat.at("a"), lat.at("b")) == lat.at("l"));
  CHECK(lat.bottom() == lat.at("l"));
  CHECK(lat.top() == lat.at("u"));
  CHECK_FALSE(lat.is_chain());
  // Four atoms under one element contain M3, so M is not distributive.
  CHECK_FALSE(lat.is_distributive());
}

TEST_CASE("meet and join tables agree with a scan of the order") {
  const Lattice lat = lattice_m();
  for (LatticeElt a : lat.elements())
    for (LatticeElt b : lat.elements()) {
      CHECK(lat.meet(a, b) == scan_meet(lat, a, b));
      CHECK(lat.meet(a, b) == lat.meet(b, a));
      CHECK(lat.join(a, lat.meet(a, b)) == a);
    }
}

TEST_CASE("M3 and N5 are detected as non-distributive with a witness") {
  const Lattice m3 = Lattice::from_covers(
      {"0", "x", "y", "z", "1"},
      {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}});
  const auto r = m3.check_distributive();
  REQUIRE_FALSE(r.distributive);
  REQUIRE(r.witness.has_value());
  const auto [a, b, c] = *r.witness;
  CHECK(m3.meet(a, m3.join(b, c)) != m3.join(m3.meet(a, b), m3.meet(a, c)));

  const Lattice n5 = Lattice::from_covers(
      {"0", "x", "y", "z", "1"}, {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "z"}, {"z", "1"}});
  CHECK_FALSE(n5.is_distributive());

  const Lattice square = Lattice::from_covers(
      {"0", "p", "q", "1"}, {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}});
  CHECK(square.is_distributive());
  CHECK_FALSE(square.is_chain());
}

TEST_CASE("order given as a full relation") {
  LatticeSpec spec{LatticeSpec::Kind::kOrder, {"0", "p", "q", "1"},
                   {{"0", "p"}, {"0", "q"}, {"0", "1"}, {"p", "1"}, {"q", "1"}}};
  const Lattice lat = Lattice::build(spec);
  CHECK(lat.join(lat.at("p"), lat.at("q")) == lat.top());
}

TEST_CASE("sup and inf over empty sets") {
  const Lattice lat = lattice_m();
  CHECK(lat.sup_over({}) == lat.bottom());
  CHECK(lat.inf_over({}) == lat.top());
  const std::vector<LatticeElt> atoms{lat.at("a"), lat.at("f")};
  CHECK(lat.sup_over(atoms) == lat.at("d"));
  CHECK(lat.inf_over(atoms) == lat.at("l"));
}

TEST_CASE("down sets and covers") {
  const Lattice lat = lattice_m();
  CHECK(lat.down_set(lat.at("d")).size() == 6);
  CHECK(lat.down_set(lat.bottom()).size() == 1);
  CHECK(lat.covers().size() == 9);
}

TEST_CASE("invalid lattice specifications") {
  CHECK(code_of([] { Lattice::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) ==
        ErrorCode::kNotAPartialOrder);
  // Two maximal elements: no join.
  CHECK(code_of([] { Lattice::from_covers({"0", "p", "q"}, {{"0", "p"}, {"0", "q"}}); }) ==
        ErrorCode::kNotALattice);
  CHECK(code_of([] { Lattice::chain({"0", "0"}); }) == ErrorCode::kDuplicateLabel);
  CHECK(code_of([] { Lattice::chain({}); }) == ErrorCode::kNotALattice);
  CHECK(code_of([] { Lattice::chain({"0"}).at("7"); }) == ErrorCode::kUnknownName);
  // The message names the offending pair.
  try {
    Lattice::from_covers({"0", "p", "q"}, {{"0", "p"}, {"0", "q"}});
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("p") != std::string::npos);
    CHECK(msg.find("q") != std::string::npos);
  }
}
