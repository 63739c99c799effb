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

#include "lgroup/conjugacy.hpp"

#include "lgroup/error.hpp"

namespace lgroup {

PointwiseCheck compare_pointwise(LSubset lhs, LSubset rhs) {
  require_same_carriers(lhs, rhs);
  std::optional<GElt> witness;
  for (GElt g : lhs.domain().elements()) {
    if (lhs(g) != rhs(g)) {
      witness = g;
      break;
    }
  }
  return PointwiseCheck{!witness.has_value(), witness, std::move(lhs), std::move(rhs)};
}

LSubset conjugate_by_subset(const LSubset& theta, const LSubset& eta) {
  require_same_carriers(theta, eta);
  const FiniteGroup& grp = eta.domain();
  const Lattice& lat = eta.codomain();
  return LSubset::from_function(eta.group(), eta.lattice(), [&](GElt x) {
    LatticeElt acc = lat.bottom();
    for (GElt z : grp.elements())
      acc = lat.join(acc, lat.meet(eta(grp.conj_inverse(z, x)), theta(z)));
    return acc;
  });
}

LSubset conjugate_by_point(const LSubset& eta, const LPoint& p) {
  const FiniteGroup& grp = eta.domain();
  const Lattice& lat = eta.codomain();
  return LSubset::from_function(eta.group(), eta.lattice(), [&](GElt x) {
    return lat.meet(p.value, eta(grp.conj(p.at, x)));
  });
}

LSubset conjugate_by_point(const LSubset& eta, const LPoint& p, const LSubset& ambient) {
  require_same_carriers(eta, ambient);
  if (!point_membership(p, ambient))
    throw Error(ErrorCode::kPointNotInAmbient,
                "L-point " + eta.codomain().label(p.value) + "@" + eta.domain().label(p.at) +
                    " is not in the ambient L-subgroup");
  return conjugate_by_point(eta, p);
}

PointwiseCheck conjugate_setproduct_identity_check(const LSubset& eta, const LSubset& nu,
                                                   const LPoint& p, const LSubset& mu) {
  if (!is_l_subgroup_of(eta, mu) || !is_l_subgroup_of(nu, mu))
    throw Error(ErrorCode::kNotAnLSubgroup, "both factors must be L-subgroups of the ambient");
  LSubset lhs = conjugate_by_point(set_product(eta, nu), p, mu);
  LSubset rhs = set_product(conjugate_by_point(eta, p, mu), conjugate_by_point(nu, p, mu));
  return compare_pointwise(std::move(lhs), std::move(rhs));
}

LSubset generated(const LSubset& eta, const LSubset& mu) {
  if (!contains(mu, eta))
    throw Error(ErrorCode::kNotContained, "L-subset is not contained in the ambient");
  const Lattice& lat = eta.codomain();
  const FiniteGroup& grp = eta.domain();
  std::vector<LatticeElt> values(grp.order(), lat.bottom());
  for (LatticeElt a : lat.down_set(tip(eta))) {
    const ElementSet span = grp.generated(level_set(eta, a));
    for (GElt x : span.elements()) values[x.index] = lat.join(values[x.index], a);
  }
  return LSubset(eta.group(), eta.lattice(), std::move(values));
}

LevelConjugateResult level_conjugate_equiv(const LSubset& eta, const LSubset& nu,
                                           const LPoint& p) {
  require_same_carriers(eta, nu);
  const Lattice& lat = eta.codomain();
  const FiniteGroup& grp = eta.domain();
  const LatticeElt nu_tip = tip(nu);
  if (nu_tip != lat.meet(p.value, tip(eta)))
    throw Error(ErrorCode::kTipMismatch, "tip(nu) differs from a ∧ tip(eta)");

  LevelConjugateResult r;
  r.pointwise = nu == conjugate_by_point(eta, p);

  r.levels = true;
  for (LatticeElt t : lat.down_set(nu_tip)) {
    ElementSet moved(grp.order());
    for (GElt g : level_set(eta, t).elements()) moved.insert(grp.conj_inverse(p.at, g));
    if (!(level_set(nu, t) == moved)) {
      r.levels = false;
      break;
    }
  }
  return r;
}

CrispBridgeResult crisp_bridge(const GroupPtr& group, const ElementSet& h,
                               const ElementSet& k) {
  const FiniteGroup& grp = *group;
  if (!grp.is_subgroup(h) || !grp.is_subgroup(k))
    throw Error(ErrorCode::kNotASubgroup, "crisp bridge needs two subgroups");

  CrispBridgeResult r;
  for (GElt z : grp.elements()) {
    ElementSet moved(grp.order());
    for (GElt x : h.elements()) moved.insert(grp.conj_inverse(z, x));
    if (moved == k) {
      r.conjugate = true;
      r.conjugator = z;
      break;
    }
  }

  auto two = std::make_shared<const Lattice>(Lattice::chain({"0", "1"}));
  const LSubset one_h = characteristic(group, two, h);
  const LSubset one_k = characteristic(group, two, k);
  for (GElt w : grp.elements()) {
    for (LatticeElt b : {two->bottom(), two->top()}) {
      if (conjugate_by_point(one_h, LPoint{b, w}) == one_k) {
        r.lattice_conjugate = true;
        r.point = LPoint{b, w};
        return r;
      }
    }
  }
  return r;
}

namespace {

// Calls visit(theta) for every L-subgroup theta with lo <= theta <= hi,
// stopping early when visit returns false. lo and hi must be L-subgroups, so
// candidates take equal values on x and x⁻¹.
template <typename Visit>
void for_each_l_subgroup_between(const LSubset& lo, const LSubset& hi, std::uint64_t cap,
                                 Visit&& visit) {
  const FiniteGroup& grp = lo.domain();
  const Lattice& lat = lo.codomain();
  std::vector<GElt> reps;
  std::vector<std::vector<LatticeElt>> choices;
  std::uint64_t total = 1;
  for (GElt x : grp.elements()) {
    if (grp.inv(x).index < x.index) continue;
    std::vector<LatticeElt> range;
    for (LatticeElt v : lat.elements())
      if (lat.leq(lo(x), v) && lat.leq(v, hi(x))) range.push_back(v);
    if (range.empty())
      throw Error(ErrorCode::kNotContained, "lower bound exceeds upper bound");
    if (total > cap / range.size())
      throw Error(ErrorCode::kSearchSpaceTooLarge,
                  "more than " + std::to_string(cap) + " candidate L-subsets");
    total *= range.size();
    reps.push_back(x);
    choices.push_back(std::move(range));
  }

  std::vector<std::size_t> digit(reps.size(), 0);
  std::vector<LatticeElt> values(grp.order());
  while (true) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      values[reps[i].index] = choices[i][digit[i]];
      values[grp.inv(reps[i]).index] = choices[i][digit[i]];
    }
    bool closed = true;
    for (GElt x : grp.elements()) {
      for (GElt y : grp.elements()) {
        if (!lat.leq(lat.meet(values[x.index], values[y.index]), values[grp.mul(x, y).index])) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed && !visit(LSubset(lo.group(), lo.lattice(), values))) return;

    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == choices[i].size()) digit[i++] = 0;
    if (i == digit.size()) return;
  }
}

}  // namespace

bool is_maximal(const LSubset& eta, const LSubset& mu, std::uint64_t cap) {
  if (!is_l_subgroup_of(eta, mu))
    throw Error(ErrorCode::kNotAnLSubgroup, "maximality needs an L-subgroup of the ambient");
  if (!is_proper_in(eta, mu))
    throw Error(ErrorCode::kNotProper, "L-subgroup is constant or equal to the ambient");
  bool maximal = true;
  for_each_l_subgroup_between(eta, mu, cap, [&](const LSubset& theta) {
    if (theta != eta && theta != mu) maximal = false;
    return maximal;
  });
  return maximal;
}

MaximalConjugateReport maximal_conjugate_check(const LSubset& eta, const LSubset& mu,
                                               const LPoint& p, std::uint64_t cap) {
  require_same_carriers(eta, mu);
  if (!eta.codomain().is_chain())
    throw Error(ErrorCode::kNotAChain, "maximality under conjugation needs a chain lattice");
  if (!point_membership(p, mu))
    throw Error(ErrorCode::kPointNotInAmbient, "L-point is not in the ambient L-subgroup");
  if (!is_maximal(eta, mu, cap))
    throw Error(ErrorCode::kNotMaximal, "L-subgroup is not maximal in the ambient");

  MaximalConjugateReport r{MaximalConjugateReport::Branch::kNeither,
                           conjugate_by_point(eta, p), conjugate_by_point(mu, p)};
  if (r.eta_conj == r.mu_conj) {
    r.branch = MaximalConjugateReport::Branch::kEqual;
    return r;
  }
  try {
    if (is_maximal(r.eta_conj, r.mu_conj, cap))
      r.branch = MaximalConjugateReport::Branch::kMaximal;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotProper) throw;
  }
  return r;
}

}  // namespace lgroup
