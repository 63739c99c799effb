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

#include "lgroup/normality.hpp"

#include "lgroup/error.hpp"

namespace lgroup {

namespace {

void require_l_subgroup_of(const LSubset& eta, const LSubset& mu) {
  if (!is_l_subgroup_of(eta, mu))
    throw Error(ErrorCode::kNotAnLSubgroup, "expected an L-subgroup of the ambient");
}

}  // namespace

LSubset coset(CosetSide side, const LPoint& p, const LSubset& eta) {
  const FiniteGroup& grp = eta.domain();
  const Lattice& lat = eta.codomain();
  const GElt xinv = grp.inv(p.at);
  return LSubset::from_function(eta.group(), eta.lattice(), [&](GElt z) {
    const GElt shifted = side == CosetSide::kLeft ? grp.mul(xinv, z) : grp.mul(z, xinv);
    return lat.meet(p.value, eta(shifted));
  });
}

LSubset coset(CosetSide side, const LPoint& p, const LSubset& eta, const LSubset& mu) {
  require_l_subgroup_of(eta, mu);
  if (!point_membership(p, mu))
    throw Error(ErrorCode::kPointNotInAmbient, "L-point is not in the ambient L-subgroup");
  return coset(side, p, eta);
}

LSubset normalizer_setproduct(const LSubset& eta, const LSubset& mu) {
  require_l_subgroup_of(eta, mu);
  const Lattice& lat = eta.codomain();
  return LSubset::from_function(eta.group(), eta.lattice(), [&](GElt x) {
    LatticeElt acc = lat.bottom();
    for (LatticeElt a : lat.down_set(mu(x))) {
      const LPoint p{a, x};
      if (coset(CosetSide::kLeft, p, eta) == coset(CosetSide::kRight, p, eta))
        acc = lat.join(acc, a);
    }
    return acc;
  });
}

LSubset normalizer_conjugacy(const LSubset& eta, const LSubset& mu) {
  require_l_subgroup_of(eta, mu);
  const Lattice& lat = eta.codomain();
  return LSubset::from_function(eta.group(), eta.lattice(), [&](GElt x) {
    LatticeElt acc = lat.bottom();
    for (LatticeElt a : lat.down_set(mu(x)))
      if (contains(eta, conjugate_by_point(eta, LPoint{a, x}))) acc = lat.join(acc, a);
    return acc;
  });
}

NormalityReport normality_via_conjugates(const LSubset& eta, const LSubset& mu) {
  require_l_subgroup_of(eta, mu);
  const FiniteGroup& grp = eta.domain();
  const Lattice& lat = eta.codomain();
  NormalityReport r;
  r.normal = true;
  for (GElt x : grp.elements()) {
    const LPoint p{mu(x), x};
    if (!contains(eta, conjugate_by_point(eta, p))) {
      r.normal = false;
      r.witness = p;
      break;
    }
  }
  if (!r.normal) return r;

  const LatticeElt eta_tip = tip(eta);
  for (GElt z : grp.elements()) {
    for (LatticeElt a : lat.down_set(mu(z))) {
      const LSubset conj = conjugate_by_point(eta, LPoint{a, z});
      if (tip(conj) == eta_tip && conj != eta) {
        r.rider_holds = false;
        r.rider_witness = LPoint{a, z};
        return r;
      }
    }
  }
  return r;
}

PointwiseCheck normalizer_conjugation_identity(const LSubset& eta, const LSubset& mu,
                                               const LPoint& p) {
  if (!eta.codomain().is_distributive())
    throw Error(ErrorCode::kNotDistributive, "identity needs a distributive lattice");
  require_l_subgroup_of(eta, mu);
  // Normalize, then conjugate.
  LSubset lhs = conjugate_by_point(normalizer_setproduct(eta, mu), p, mu);
  // Conjugate, then normalize.
  LSubset rhs = meet_with(normalizer_setproduct(conjugate_by_point(eta, p, mu), mu), p.value);
  return compare_pointwise(std::move(lhs), std::move(rhs));
}

InverseContainment inverse_point_containment_check(const LSubset& eta, const LSubset& mu,
                                                   const LPoint& p) {
  require_l_subgroup_of(eta, mu);
  if (!point_membership(p, mu))
    throw Error(ErrorCode::kPointNotInAmbient, "L-point is not in the ambient L-subgroup");
  InverseContainment r;
  r.forward = contains(eta, conjugate_by_point(eta, p));
  r.backward = contains(eta, conjugate_by_point(eta, LPoint{p.value, eta.domain().inv(p.at)}));
  return r;
}

LSubset NormalizerCache::setproduct(const LSubset& eta, const LSubset& mu) {
  Key key;
  for (LatticeElt v : eta.values()) key.first.push_back(v.index);
  for (LatticeElt v : mu.values()) key.second.push_back(v.index);
  {
    std::lock_guard lock(mutex_);
    auto [lo, hi] = entries_.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (it->second.group == eta.group() && it->second.lattice == eta.lattice())
        return it->second.value;
  }
  LSubset value = normalizer_setproduct(eta, mu);
  std::lock_guard lock(mutex_);
  entries_.emplace(std::move(key), Entry{eta.group(), eta.lattice(), value});
  return value;
}

std::size_t NormalizerCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace lgroup
