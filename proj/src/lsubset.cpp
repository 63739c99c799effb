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

#include "lgroup/lsubset.hpp"

#include "lgroup/error.hpp"

namespace lgroup {

LSubset::LSubset(GroupPtr group, LatticePtr lattice, std::vector<LatticeElt> values)
    : group_(std::move(group)), lattice_(std::move(lattice)), values_(std::move(values)) {
  if (!group_ || !lattice_)
    throw Error(ErrorCode::kInvalidArgument, "L-subset needs a group and a lattice");
  if (values_.size() != group_->order())
    throw Error(ErrorCode::kInvalidArgument, "L-subset is not total on the group");
  for (LatticeElt v : values_)
    if (v.index >= lattice_->size())
      throw Error(ErrorCode::kInvalidArgument, "L-subset value outside the lattice");
}

LSubset LSubset::constant(GroupPtr group, LatticePtr lattice, LatticeElt value) {
  std::vector<LatticeElt> values(group->order(), value);
  return LSubset(std::move(group), std::move(lattice), std::move(values));
}

LSubset LSubset::from_function(GroupPtr group, LatticePtr lattice,
                               const std::function<LatticeElt(GElt)>& f) {
  std::vector<LatticeElt> values;
  values.reserve(group->order());
  for (GElt x : group->elements()) values.push_back(f(x));
  return LSubset(std::move(group), std::move(lattice), std::move(values));
}

void require_same_carriers(const LSubset& a, const LSubset& b) {
  if (!a.same_carriers(b))
    throw Error(ErrorCode::kMixedCarriers, "L-subsets live on different groups or lattices");
}

LatticeElt eval(const LSubset& eta, GElt x) { return eta(x); }

LatticeElt tip(const LSubset& eta) { return eta.codomain().sup_over(eta.values()); }

LatticeElt tail(const LSubset& eta) { return eta.codomain().inf_over(eta.values()); }

ElementSet level_set(const LSubset& eta, LatticeElt a) {
  ElementSet out(eta.domain().order());
  for (GElt x : eta.domain().elements())
    if (eta.codomain().leq(a, eta(x))) out.insert(x);
  return out;
}

bool contains(const LSubset& nu, const LSubset& eta) {
  require_same_carriers(nu, eta);
  for (GElt x : eta.domain().elements())
    if (!eta.codomain().leq(eta(x), nu(x))) return false;
  return true;
}

bool contains_via_levels(const LSubset& nu, const LSubset& eta) {
  require_same_carriers(nu, eta);
  const Lattice& lat = eta.codomain();
  const LatticeElt t0 = tip(eta);
  for (LatticeElt t : lat.down_set(t0))
    if (!level_set(eta, t).is_subset_of(level_set(nu, t))) return false;
  return true;
}

bool is_l_subgroup(const LSubset& eta) {
  const FiniteGroup& grp = eta.domain();
  const Lattice& lat = eta.codomain();
  for (GElt x : grp.elements()) {
    if (eta(grp.inv(x)) != eta(x)) return false;
    for (GElt y : grp.elements())
      if (!lat.leq(lat.meet(eta(x), eta(y)), eta(grp.mul(x, y)))) return false;
  }
  return true;
}

bool is_l_subgroup_via_levels(const LSubset& eta) {
  for (LatticeElt a : eta.codomain().elements()) {
    const ElementSet level = level_set(eta, a);
    if (!level.empty() && !eta.domain().is_subgroup(level)) return false;
  }
  return true;
}

bool is_l_subgroup_of(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  return is_l_subgroup(mu) && is_l_subgroup(eta) && contains(mu, eta);
}

bool is_l_subgroup_of_via_levels(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  if (!is_l_subgroup_via_levels(mu)) return false;
  for (LatticeElt a : eta.codomain().elements()) {
    const ElementSet level = level_set(eta, a);
    if (level.empty()) continue;
    if (!eta.domain().is_subgroup(level) || !level.is_subset_of(level_set(mu, a))) return false;
  }
  return true;
}

bool is_normal_in(const LSubset& eta, const LSubset& mu) {
  if (!is_l_subgroup_of(eta, mu))
    throw Error(ErrorCode::kNotAnLSubgroup, "normality needs an L-subgroup of the ambient");
  const FiniteGroup& grp = eta.domain();
  const Lattice& lat = eta.codomain();
  for (GElt y : grp.elements())
    for (GElt x : grp.elements())
      if (!lat.leq(lat.meet(eta(x), mu(y)), eta(grp.conj(y, x)))) return false;
  return true;
}

bool is_normal_in_via_levels(const LSubset& eta, const LSubset& mu) {
  if (!is_l_subgroup_of(eta, mu))
    throw Error(ErrorCode::kNotAnLSubgroup, "normality needs an L-subgroup of the ambient");
  for (LatticeElt a : eta.codomain().elements()) {
    const ElementSet level = level_set(eta, a);
    if (level.empty()) continue;
    if (!eta.domain().is_normal_in(level, level_set(mu, a))) return false;
  }
  return true;
}

LSubset set_product(const LSubset& eta, const LSubset& nu) {
  require_same_carriers(eta, nu);
  const FiniteGroup& grp = eta.domain();
  const Lattice& lat = eta.codomain();
  // x = y z  <=>  z = y^-1 x, so one factor determines the other.
  return LSubset::from_function(eta.group(), eta.lattice(), [&](GElt x) {
    LatticeElt acc = lat.bottom();
    for (GElt y : grp.elements())
      acc = lat.join(acc, lat.meet(eta(y), nu(grp.mul(grp.inv(y), x))));
    return acc;
  });
}

LSubset meet(const LSubset& eta, const LSubset& nu) {
  require_same_carriers(eta, nu);
  return LSubset::from_function(eta.group(), eta.lattice(),
                                [&](GElt x) { return eta.codomain().meet(eta(x), nu(x)); });
}

LSubset join(const LSubset& eta, const LSubset& nu) {
  require_same_carriers(eta, nu);
  return LSubset::from_function(eta.group(), eta.lattice(),
                                [&](GElt x) { return eta.codomain().join(eta(x), nu(x)); });
}

LSubset meet_with(const LSubset& eta, LatticeElt a) {
  return LSubset::from_function(eta.group(), eta.lattice(),
                                [&](GElt x) { return eta.codomain().meet(a, eta(x)); });
}

LSubset image(const GroupHom& f, const LSubset& eta) {
  if (f.domain() != eta.group())
    throw Error(ErrorCode::kMixedCarriers, "L-subset does not live on the hom's domain");
  const Lattice& lat = eta.codomain();
  std::vector<LatticeElt> values(f.codomain()->order(), lat.bottom());
  for (GElt x : eta.domain().elements()) {
    auto& slot = values[f(x).index];
    slot = lat.join(slot, eta(x));
  }
  return LSubset(f.codomain(), eta.lattice(), std::move(values));
}

LSubset preimage(const GroupHom& f, const LSubset& nu) {
  if (f.codomain() != nu.group())
    throw Error(ErrorCode::kMixedCarriers, "L-subset does not live on the hom's codomain");
  return LSubset::from_function(f.domain(), nu.lattice(), [&](GElt x) { return nu(f(x)); });
}

LSubset characteristic(GroupPtr group, LatticePtr lattice, const ElementSet& a) {
  const LatticeElt top = lattice->top();
  const LatticeElt bottom = lattice->bottom();
  return LSubset::from_function(std::move(group), std::move(lattice),
                                [&](GElt x) { return a.contains(x) ? top : bottom; });
}

LPoint l_point(LatticeElt value, GElt at) { return LPoint{value, at}; }

LSubset as_lsubset(const LPoint& p, GroupPtr group, LatticePtr lattice) {
  const LatticeElt bottom = lattice->bottom();
  return LSubset::from_function(std::move(group), std::move(lattice),
                                [&](GElt x) { return x == p.at ? p.value : bottom; });
}

bool point_membership(const LPoint& p, const LSubset& mu) {
  return mu.codomain().leq(p.value, mu(p.at));
}

LSubset trivial_of(const LSubset& eta) {
  const LatticeElt hi = tip(eta);
  const LatticeElt lo = tail(eta);
  const GElt e = eta.domain().identity();
  return LSubset::from_function(eta.group(), eta.lattice(),
                                [&](GElt x) { return x == e ? hi : lo; });
}

bool is_proper_in(const LSubset& eta, const LSubset& mu) {
  require_same_carriers(eta, mu);
  return tip(eta) != tail(eta) && eta != mu;
}

}  // namespace lgroup
