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

#ifndef LGROUP_WORKSPACE_HPP_
#define LGROUP_WORKSPACE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgroup/lsubset.hpp"
#include "lgroup/verify.hpp"

namespace lgroup {

// Predicates a document asks `validate` to confirm for one L-subset.
struct LSubsetFlags {
  bool l_subgroup = false;
  std::optional<std::string> l_subgroup_of;
  std::optional<std::string> normal_in;
};

template <typename T>
using Named = std::vector<std::pair<std::string, T>>;

struct Workspace {
  LatticePtr lattice;
  GroupPtr group;
  Named<ElementSet> sets;
  Named<LSubset> lsubsets;
  Named<LSubsetFlags> flags;
  Named<LPoint> points;
  Named<std::string> point_ambients;  // points declared with "in"
  std::optional<GroupHom> hom;

  const ElementSet* find_set(std::string_view name) const;
  const LSubset* find_lsubset(std::string_view name) const;
  const LPoint* find_point(std::string_view name) const;

  const LSubset& lsubset(std::string_view name) const;  // throws kUnknownName
  // A named point, or a literal "value@element".
  LPoint point(std::string_view text) const;
};

// Parses and validates a workspace document. Failures carry a JSON-pointer
// path such as "/lsubsets/eta/assign/2" in their message; schema problems
// throw SchemaError, malformed JSON throws kParseError, and errors from the
// lattice, group or homomorphism builders keep their own code.
Workspace parse_workspace(std::string_view document);

// Serializes an L-subset as [[element, value], ...] in element order. The
// result is accepted as an "assign" array and reproduces the L-subset.
std::string lsubset_pairs_json(const LSubset& s);

namespace verify {

// Packs named workspace objects into a verification instance.
Instance instance_from_workspace(const Workspace& ws, std::string_view mu,
                                 std::string_view eta,
                                 std::optional<std::string_view> nu = std::nullopt);

}  // namespace verify

}  // namespace lgroup

#endif  // LGROUP_WORKSPACE_HPP_
