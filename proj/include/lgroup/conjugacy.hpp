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

#ifndef LGROUP_CONJUGACY_HPP_
#define LGROUP_CONJUGACY_HPP_

#include <cstdint>
#include <optional>

#include "lgroup/lsubset.hpp"

namespace lgroup {

inline constexpr std::uint64_t kDefaultMaximalSearchCap = 20'000'000;

/// Outcome of comparing two independently computed L-subsets.
struct PointwiseCheck {
  bool holds = false;
  std::optional<GElt> witness;  // first element where the sides differ
  LSubset lhs;
  LSubset rhs;
};

PointwiseCheck compare_pointwise(LSubset lhs, LSubset rhs);

/// (θηθ⁻¹)(x) = sup over x = z y z⁻¹ of η(y) ∧ θ(z).
///
/// With θ = a_z only z contributes and y = z⁻¹ x z, so the result is
/// x -> a ∧ η(z⁻¹ x z), which is conjugate_by_point(η, a_{z⁻¹}).
LSubset conjugate_by_subset(const LSubset& theta, const LSubset& eta);

/// η^{a_z}(x) = a ∧ η(z x z⁻¹).
LSubset conjugate_by_point(const LSubset& eta, const LPoint& p);
/// As above, but first requires a_z ∈ ambient (kPointNotInAmbient), under
/// which the result is an L-subgroup of the ambient whenever η is.
LSubset conjugate_by_point(const LSubset& eta, const LPoint& p, const LSubset& ambient);

/// Compares (η ∘ ν)^{a_z} with η^{a_z} ∘ ν^{a_z}.
PointwiseCheck conjugate_setproduct_identity_check(const LSubset& eta, const LSubset& nu,
                                                   const LPoint& p, const LSubset& mu);

/// The smallest L-subgroup of mu containing eta:
/// x -> sup{a <= tip(eta) : x ∈ <eta_a>}. Throws kNotContained unless
/// eta ⊆ mu.
LSubset generated(const LSubset& eta, const LSubset& mu);

struct LevelConjugateResult {
  bool pointwise = false;  // nu == eta^{a_z}
  bool levels = false;     // nu_t == z⁻¹ eta_t z for every t <= tip(nu)
  bool agree() const { return pointwise == levels; }
};

/// Decides "nu is the conjugate of eta by p" both pointwise and through
/// level subsets. Throws kTipMismatch unless tip(nu) = a ∧ tip(eta).
LevelConjugateResult level_conjugate_equiv(const LSubset& eta, const LSubset& nu,
                                           const LPoint& p);

struct CrispBridgeResult {
  bool conjugate = false;             // K = z⁻¹ H z for some z
  std::optional<GElt> conjugator;
  bool lattice_conjugate = false;     // 1_K = (1_H)^{b_w} for some b_w ∈ 1_G
  std::optional<LPoint> point;        // over the two-element chain {0, 1}
  bool agree() const { return conjugate == lattice_conjugate; }
};

/// Classical conjugacy of subgroups H, K against conjugacy of their
/// characteristic functions inside 1_G. Throws kNotASubgroup.
CrispBridgeResult crisp_bridge(const GroupPtr& group, const ElementSet& h,
                               const ElementSet& k);

/// True iff no L-subgroup of mu lies strictly between eta and mu.
///
/// Enumerates every map with eta <= theta <= mu, one value per
/// {x, x⁻¹} class. Throws kNotAnLSubgroup, kNotProper, or
/// kSearchSpaceTooLarge when the candidate count exceeds `cap`.
bool is_maximal(const LSubset& eta, const LSubset& mu,
                std::uint64_t cap = kDefaultMaximalSearchCap);

struct MaximalConjugateReport {
  enum class Branch { kEqual, kMaximal, kNeither };
  Branch branch = Branch::kNeither;
  LSubset eta_conj;
  LSubset mu_conj;
  bool holds() const { return branch != Branch::kNeither; }
};

/// For a chain lattice and eta maximal in mu: either eta^{a_z} = mu^{a_z}
/// or eta^{a_z} is maximal in mu^{a_z}. Reports which one held. Throws
/// kNotAChain, kPointNotInAmbient, kNotMaximal.
MaximalConjugateReport maximal_conjugate_check(const LSubset& eta, const LSubset& mu,
                                               const LPoint& p,
                                               std::uint64_t cap = kDefaultMaximalSearchCap);

}  // namespace lgroup

#endif  // LGROUP_CONJUGACY_HPP_
