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

#ifndef LGROUP_TESTS_FIXTURES_HPP_
#define LGROUP_TESTS_FIXTURES_HPP_

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lgroup/error.hpp"
#include "lgroup/lsubset.hpp"

namespace fixtures {

using namespace lgroup;

inline ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

inline LatticePtr lattice_m() {
  return std::make_shared<const Lattice>(Lattice::from_covers(
      {"l", "f", "a", "b", "c", "d", "u"},
      {{"l", "f"}, {"l", "a"}, {"l", "b"}, {"l", "c"}, {"f", "d"}, {"a", "d"}, {"b", "d"},
       {"c", "d"}, {"d", "u"}}));
}

inline LatticePtr chain_d16() {
  return std::make_shared<const Lattice>(
      Lattice::chain({"0", "1/32", "1/16", "1/12", "1/8", "1/4", "1/2", "1"}));
}

inline ElementSet gen(const FiniteGroup& grp, std::vector<std::string> labels) {
  std::vector<GElt> g;
  for (const auto& l : labels) g.push_back(grp.at(l));
  return grp.generated(g);
}

inline ElementSet set_of(const FiniteGroup& grp, std::vector<std::string> labels) {
  ElementSet out(grp.order());
  for (const auto& l : labels) out.insert(grp.at(l));
  return out;
}

// Symmetric group on four points with lattice M.
struct S4Example {
  GroupPtr grp = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(4));
  LatticePtr lat = lattice_m();
  ElementSet v4 = set_of(*grp, {"e", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});
  ElementSet d1 = gen(*grp, {"(2 4)", "(1 2 3 4)"});
  ElementSet d2 = gen(*grp, {"(1 2)", "(1 3 2 4)"});
  ElementSet d3 = gen(*grp, {"(2 3)", "(1 3 4 2)"});
  LSubset mu = LSubset::from_function(grp, lat, [this](GElt x) {
    return v4.contains(x) ? lat->at("u") : lat->at("d");
  });
  LSubset eta = LSubset::from_function(grp, lat, [this](GElt x) {
    if (x == grp->identity()) return lat->at("u");
    if (v4.contains(x)) return lat->at("d");
    if (d1.contains(x)) return lat->at("a");
    if (d2.contains(x)) return lat->at("b");
    if (d3.contains(x)) return lat->at("c");
    return lat->at("l");
  });
  LPoint point{lat->at("d"), grp->at("(1 2 3)")};
};

// Dihedral group of order 16 with an eight-element chain.
struct D16Example {
  GroupPtr grp = std::make_shared<const FiniteGroup>(FiniteGroup::dihedral(16));
  LatticePtr lat = chain_d16();
  ElementSet d8 = gen(*grp, {"r^2", "s"});
  ElementSet s = set_of(*grp, {"e", "s"});
  ElementSet h = set_of(*grp, {"e", "r^4", "s", "sr^4"});
  LSubset mu = LSubset::from_function(grp, lat, [this](GElt x) {
    return d8.contains(x) ? lat->at("1/2") : lat->at("1/8");
  });
  LSubset eta = LSubset::from_function(grp, lat, [this](GElt x) {
    if (s.contains(x)) return lat->at("1/4");
    if (d8.contains(x)) return lat->at("1/16");
    return lat->at("1/32");
  });
  LPoint point{lat->at("1/12"), grp->at("r")};
};

// Builds an L-subset from (value, set) clauses, later clauses overriding
// earlier ones, starting from a default value.
inline LSubset valued(const GroupPtr& grp, const LatticePtr& lat, const std::string& fallback,
                      std::vector<std::pair<std::string, ElementSet>> clauses) {
  return LSubset::from_function(grp, lat, [&](GElt x) {
    LatticeElt v = lat->at(fallback);
    for (const auto& [value, set] : clauses)
      if (set.contains(x)) v = lat->at(value);
    return v;
  });
}

// Uniformly random L-subset below `ceiling`.
inline LSubset random_below(const LSubset& ceiling, std::mt19937_64& rng) {
  return LSubset::from_function(ceiling.group(), ceiling.lattice(), [&](GElt x) {
    const auto below = ceiling.codomain().down_set(ceiling(x));
    return below[rng() % below.size()];
  });
}

}  // namespace fixtures

#endif  // LGROUP_TESTS_FIXTURES_HPP_
