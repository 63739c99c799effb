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

#ifndef LGROUP_NORMALITY_HPP_
#define LGROUP_NORMALITY_HPP_

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "lgroup/conjugacy.hpp"
#include "lgroup/lsubset.hpp"

namespace lgroup {

enum class CosetSide { kLeft, kRight };

/// Left coset a_x ∘ η: z -> a ∧ η(x⁻¹z). Right coset η ∘ a_x: z -> a ∧ η(zx⁻¹).
LSubset coset(CosetSide side, const LPoint& p, const LSubset& eta);
/// Checked form: p ∈ mu (kPointNotInAmbient) and η ∈ L(mu) (kNotAnLSubgroup).
LSubset coset(CosetSide side, const LPoint& p, const LSubset& eta, const LSubset& mu);

/// N(η)(x) = sup{a <= mu(x) : a_x ∘ η = η ∘ a_x}.
LSubset normalizer_setproduct(const LSubset& eta, const LSubset& mu);
/// N(η)(x) = sup{a <= mu(x) : η^{a_x} ⊆ η}.
LSubset normalizer_conjugacy(const LSubset& eta, const LSubset& mu);

struct NormalityReport {
  bool normal = false;           // η^{a_x} ⊆ η for a = mu(x), every x
  std::optional<LPoint> witness;  // a point whose conjugate escapes η
  bool rider_holds = true;        // normal and equal tips force equality
  std::optional<LPoint> rider_witness;
};

/// Normality decided through conjugates by the points mu(x)_x. When normal,
/// also checks that every a_z ∈ mu with tip(η^{a_z}) = tip(η) gives
/// η^{a_z} = η.
NormalityReport normality_via_conjugates(const LSubset& eta, const LSubset& mu);

/// Compares N(η)^{a_z} with a ∧ N(η^{a_z}), the first by normalizing then
/// conjugating, the second by conjugating then normalizing. Throws
/// kNotDistributive on non-distributive lattices, kPointNotInAmbient,
/// kNotAnLSubgroup.
PointwiseCheck normalizer_conjugation_identity(const LSubset& eta, const LSubset& mu,
                                               const LPoint& p);

struct InverseContainment {
  bool forward = false;   // η^{a_z} ⊆ η
  bool backward = false;  // η^{a_{z⁻¹}} ⊆ η
  bool holds() const { return forward == backward; }
};

InverseContainment inverse_point_containment_check(const LSubset& eta, const LSubset& mu,
                                                   const LPoint& p);

/// Memoizes normalizer_setproduct per (η, mu) by carriers and values.
/// Safe to share between threads.
class NormalizerCache {
 public:
  LSubset setproduct(const LSubset& eta, const LSubset& mu);
  std::size_t size() const;

 private:
  using Key = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
  struct Entry {
    GroupPtr group;
    LatticePtr lattice;
    LSubset value;
  };
  mutable std::mutex mutex_;
  std::multimap<Key, Entry> entries_;
};

}  // namespace lgroup

#endif  // LGROUP_NORMALITY_HPP_
