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

// Brute-force reference implementations used only by the tests. They follow
// the definitions literally (double loops over factorizations, exhaustive
// enumeration of candidate functions) and share no code with the library
// beyond the group and lattice tables.

#ifndef LGROUP_TESTS_ORACLE_HPP_
#define LGROUP_TESTS_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lgroup/lsubset.hpp"

namespace oracle {

using lgroup::ElementSet;
using lgroup::FiniteGroup;
using lgroup::GElt;
using lgroup::Lattice;
using lgroup::LatticeElt;
using lgroup::LSubset;

// Permutations of {0..n-1} as image arrays; (p*q)(i) = p(q(i)).
using Perm = std::vector<int>;

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

// Cycle notation with one-based points, e.g. "(1 2 3)(4 5)"; "e" is the
// identity.
inline Perm cycles(const std::string& text, int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  std::vector<int> cycle;
  int number = -1;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      number = (number < 0 ? 0 : number * 10) + (c - '0');
      continue;
    }
    if (number >= 0) cycle.push_back(number - 1);
    number = -1;
    if (c == ')') {
      for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
      cycle.clear();
    }
  }
  return p;
}

inline std::set<Perm> closure(const std::vector<Perm>& gens, int degree) {
  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::set<Perm> out{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& a : frontier)
      for (const Perm& g : gens) {
        Perm b = compose(a, g);
        if (out.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return out;
}

inline bool is_l_subgroup(const LSubset& s) {
  const FiniteGroup& grp = s.domain();
  const Lattice& lat = s.codomain();
  for (GElt x : grp.elements())
    for (GElt y : grp.elements()) {
      const LatticeElt lo = lat.meet(s(x), s(y));
      if (!lat.leq(lo, s(grp.mul(x, grp.inv(y))))) return false;
    }
  return true;
}

inline bool leq_pointwise(const LSubset& a, const LSubset& b) {
  for (GElt x : a.domain().elements())
    if (!a.codomain().leq(a(x), b(x))) return false;
  return true;
}

// (eta o nu)(x) = sup over all pairs (y, z) with yz = x of eta(y) ∧ nu(z).
inline LSubset set_product(const LSubset& eta, const LSubset& nu) {
  const FiniteGroup& grp = eta.domain();
  const Lattice& lat = eta.codomain();
  std::vector<LatticeElt> v(grp.order(), lat.bottom());
  for (GElt y : grp.elements())
    for (GElt z : grp.elements()) {
      const GElt x = grp.mul(y, z);
      v[x.index] = lat.join(v[x.index], lat.meet(eta(y), nu(z)));
    }
  return LSubset(eta.group(), eta.lattice(), std::move(v));
}

// theta eta theta^-1 (x) = sup over pairs (z, y) with z y z^-1 = x.
inline LSubset conjugate_by_subset(const LSubset& theta, const LSubset& eta) {
  const FiniteGroup& grp = eta.domain();
  const Lattice& lat = eta.codomain();
  std::vector<LatticeElt> v(grp.order(), lat.bottom());
  for (GElt z : grp.elements())
    for (GElt y : grp.elements()) {
      const GElt x = grp.mul(grp.mul(z, y), grp.inv(z));
      v[x.index] = lat.join(v[x.index], lat.meet(eta(y), theta(z)));
    }
  return LSubset(eta.group(), eta.lattice(), std::move(v));
}

inline LSubset point(LatticeElt a, GElt x, const LSubset& like) {
  std::vector<LatticeElt> v(like.domain().order(), like.codomain().bottom());
  v[x.index] = a;
  return LSubset(like.group(), like.lattice(), std::move(v));
}

// x -> a ∧ eta(z x z^-1), by direct composition.
inline LSubset conjugate_by_point(const LSubset& eta, LatticeElt a, GElt z) {
  const FiniteGroup& grp = eta.domain();
  std::vector<LatticeElt> v;
  for (GElt x : grp.elements()) v.push_back(eta.codomain().meet(a, eta(grp.mul(grp.mul(z, x), grp.inv(z)))));
  return LSubset(eta.group(), eta.lattice(), std::move(v));
}

// Union of all L-points a_x of mu whose set products with eta commute.
inline LSubset normalizer(const LSubset& eta, const LSubset& mu) {
  const Lattice& lat = eta.codomain();
  std::vector<LatticeElt> v;
  for (GElt x : eta.domain().elements()) {
    LatticeElt acc = lat.bottom();
    for (LatticeElt a : lat.elements()) {
      if (!lat.leq(a, mu(x))) continue;
      const LSubset p = point(a, x, eta);
      if (oracle::set_product(p, eta) == oracle::set_product(eta, p)) acc = lat.join(acc, a);
    }
    v.push_back(acc);
  }
  return LSubset(eta.group(), eta.lattice(), std::move(v));
}

// Every L-subgroup theta with lo <= theta <= hi, by enumerating all
// functions in the box and filtering with the definition.
inline std::vector<LSubset> l_subgroups_between(const LSubset& lo, const LSubset& hi) {
  const FiniteGroup& grp = lo.domain();
  const Lattice& lat = lo.codomain();
  std::vector<std::vector<LatticeElt>> ranges;
  for (GElt x : grp.elements()) {
    auto& r = ranges.emplace_back();
    for (LatticeElt a : lat.elements())
      if (lat.leq(lo(x), a) && lat.leq(a, hi(x))) r.push_back(a);
  }
  std::vector<LSubset> out;
  std::vector<LatticeElt> v(grp.order());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == grp.order()) {
      LSubset s(lo.group(), lo.lattice(), v);
      if (oracle::is_l_subgroup(s)) out.push_back(std::move(s));
      return;
    }
    for (LatticeElt a : ranges[i]) {
      v[i] = a;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline LSubset meet_all(const std::vector<LSubset>& family, const LSubset& top) {
  std::vector<LatticeElt> v(top.values().begin(), top.values().end());
  for (const LSubset& s : family)
    for (GElt x : top.domain().elements()) v[x.index] = top.codomain().meet(v[x.index], s(x));
  return LSubset(top.group(), top.lattice(), std::move(v));
}

inline bool constant(const LSubset& s) {
  for (GElt x : s.domain().elements())
    if (s(x) != s(GElt{0})) return false;
  return true;
}

// Proper (not constant, not mu) and nothing strictly between eta and mu.
inline bool is_maximal(const LSubset& eta, const LSubset& mu) {
  if (oracle::constant(eta) || eta == mu) return false;
  for (const LSubset& t : oracle::l_subgroups_between(eta, mu))
    if (t != eta && t != mu) return false;
  return true;
}

}  // namespace oracle

#endif  // LGROUP_TESTS_ORACLE_HPP_
