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

#ifndef LGROUP_LSUBSET_HPP_
#define LGROUP_LSUBSET_HPP_

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "lgroup/group.hpp"
#include "lgroup/lattice.hpp"

namespace lgroup {

using LatticePtr = std::shared_ptr<const Lattice>;

/// An L-point a_x: value a at x, bottom everywhere else.
struct LPoint {
  LatticeElt value;
  GElt at;
  friend bool operator==(const LPoint&, const LPoint&) = default;
};

/// A total map from the elements of a finite group into a finite lattice.
///
/// Values are immutable. Nothing about the map is validated beyond totality;
/// whether it is an L-subgroup is a separate question (is_l_subgroup).
/// Binary operations require both operands to share the same group and
/// lattice objects and throw kMixedCarriers otherwise.
class LSubset {
 public:
  LSubset(GroupPtr group, LatticePtr lattice, std::vector<LatticeElt> values);

  static LSubset constant(GroupPtr group, LatticePtr lattice, LatticeElt value);
  static LSubset from_function(GroupPtr group, LatticePtr lattice,
                               const std::function<LatticeElt(GElt)>& f);

  const GroupPtr& group() const noexcept { return group_; }
  const LatticePtr& lattice() const noexcept { return lattice_; }
  const FiniteGroup& domain() const { return *group_; }
  const Lattice& codomain() const { return *lattice_; }

  LatticeElt operator()(GElt x) const { return values_[x.index]; }
  std::span<const LatticeElt> values() const noexcept { return values_; }

  bool same_carriers(const LSubset& other) const noexcept {
    return group_ == other.group_ && lattice_ == other.lattice_;
  }

  friend bool operator==(const LSubset& a, const LSubset& b) {
    return a.same_carriers(b) && a.values_ == b.values_;
  }

 private:
  GroupPtr group_;
  LatticePtr lattice_;
  std::vector<LatticeElt> values_;
};

/// Throws kMixedCarriers unless every operand shares the first one's carriers.
void require_same_carriers(const LSubset& a, const LSubset& b);

LatticeElt eval(const LSubset& eta, GElt x);
LatticeElt tip(const LSubset& eta);
LatticeElt tail(const LSubset& eta);

/// {x : eta(x) >= a}.
ElementSet level_set(const LSubset& eta, LatticeElt a);

/// Pointwise nu >= eta, i.e. eta is contained in nu.
bool contains(const LSubset& nu, const LSubset& eta);
/// Containment through level subsets: eta_t ⊆ nu_t for every t <= tip(eta).
bool contains_via_levels(const LSubset& nu, const LSubset& eta);

/// Both closure conditions checked over all pairs.
bool is_l_subgroup(const LSubset& eta);
/// Every nonempty level subset is a subgroup.
bool is_l_subgroup_via_levels(const LSubset& eta);
/// eta is an L-subgroup contained in the L-subgroup mu.
bool is_l_subgroup_of(const LSubset& eta, const LSubset& mu);
/// Level form: every nonempty eta_a is a subgroup of mu_a.
bool is_l_subgroup_of_via_levels(const LSubset& eta, const LSubset& mu);

/// eta(y x y^-1) >= eta(x) ∧ mu(y) for all x, y. Throws kNotAnLSubgroup
/// unless eta is an L-subgroup of mu.
bool is_normal_in(const LSubset& eta, const LSubset& mu);
/// Level form: every nonempty eta_a is a normal subgroup of mu_a.
bool is_normal_in_via_levels(const LSubset& eta, const LSubset& mu);

/// (eta ∘ nu)(x) = sup over x = yz of eta(y) ∧ nu(z).
LSubset set_product(const LSubset& eta, const LSubset& nu);
/// Pointwise meet (intersection).
LSubset meet(const LSubset& eta, const LSubset& nu);
/// Pointwise join (union).
LSubset join(const LSubset& eta, const LSubset& nu);
/// x -> a ∧ eta(x).
LSubset meet_with(const LSubset& eta, LatticeElt a);

/// f(eta)(y) = sup of eta over the fibre of y; bottom on empty fibres.
LSubset image(const GroupHom& f, const LSubset& eta);
/// f^-1(nu)(x) = nu(f(x)).
LSubset preimage(const GroupHom& f, const LSubset& nu);

/// 1_A: top on A, bottom elsewhere.
LSubset characteristic(GroupPtr group, LatticePtr lattice, const ElementSet& a);
LPoint l_point(LatticeElt value, GElt at);
/// The L-point as an L-subset of the given carriers.
LSubset as_lsubset(const LPoint& p, GroupPtr group, LatticePtr lattice);
/// a_x ∈ mu, i.e. mu(x) >= a.
bool point_membership(const LPoint& p, const LSubset& mu);
/// e -> tip(eta), everything else -> tail(eta).
LSubset trivial_of(const LSubset& eta);

/// eta is non-constant and differs from mu.
bool is_proper_in(const LSubset& eta, const LSubset& mu);

}  // namespace lgroup

#endif  // LGROUP_LSUBSET_HPP_
