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

// Seeded random instances. Only std::mt19937_64 raw output is used (never
// the std distributions, whose results vary between standard libraries), so
// a seed produces the same instance on every platform.

#include <algorithm>
#include <functional>
#include <random>

#include "lgroup/error.hpp"
#include "lgroup/verify.hpp"

namespace lgroup::verify {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed * 0x9E3779B97F4A7C15ull + 1) {}
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : engine_() % n; }
  bool chance(unsigned percent) { return below(100) < percent; }
  template <typename T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

struct Named {
  std::string name;
  LatticePtr lattice;
};

LatticePtr share(Lattice lat) { return std::make_shared<const Lattice>(std::move(lat)); }

Named make_chain(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return {"chain(" + std::to_string(k) + ")", share(Lattice::chain(std::move(labels)))};
}

Named make_product(std::size_t p, std::size_t q) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  auto name = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      labels.push_back(name(i, j));
      if (i + 1 < p) covers.emplace_back(name(i, j), name(i + 1, j));
      if (j + 1 < q) covers.emplace_back(name(i, j), name(i, j + 1));
    }
  return {std::to_string(p) + "x" + std::to_string(q),
          share(Lattice::from_covers(std::move(labels), std::move(covers)))};
}

Named make_m3() {
  return {"M3", share(Lattice::from_covers(
                    {"0", "a", "b", "c", "1"},
                    {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}))};
}

Named make_n5() {
  return {"N5", share(Lattice::from_covers(
                    {"0", "a", "b", "c", "1"},
                    {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}))};
}

Named make_m7() {
  return {"M7", share(Lattice::from_covers(
                    {"l", "f", "a", "b", "c", "d", "u"},
                    {{"l", "f"}, {"l", "a"}, {"l", "b"}, {"l", "c"},
                     {"f", "d"}, {"a", "d"}, {"b", "d"}, {"c", "d"}, {"d", "u"}}))};
}

// Random intersection-closed family of subsets of a small universe, ordered
// by inclusion. Such a family with the full set is always a lattice.
std::optional<Named> make_closure_system(Rng& rng, std::size_t max_size) {
  const unsigned universe = 3 + static_cast<unsigned>(rng.below(2));
  const unsigned full = (1u << universe) - 1;
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<unsigned> family{full};
    const std::size_t picks = 1 + rng.below(4);
    for (std::size_t i = 0; i < picks; ++i) {
      const unsigned m = static_cast<unsigned>(rng.below(full));
      if (std::find(family.begin(), family.end(), m) == family.end()) family.push_back(m);
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
          const unsigned m = family[i] & family[j];
          if (std::find(family.begin(), family.end(), m) == family.end()) {
            family.push_back(m);
            grew = true;
          }
        }
    }
    if (family.size() > max_size || family.size() < 2) continue;
    std::sort(family.begin(), family.end());
    auto name = [](unsigned m) {
      std::string s = "{";
      for (unsigned b = 0; b < 8; ++b)
        if (m & (1u << b)) s += (s.size() > 1 ? "," : "") + std::to_string(b + 1);
      return s + "}";
    };
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> order;
    for (unsigned a : family) {
      labels.push_back(name(a));
      for (unsigned b : family)
        if (a != b && (a & b) == a) order.emplace_back(name(a), name(b));
    }
    LatticeSpec spec{LatticeSpec::Kind::kOrder, std::move(labels), std::move(order)};
    return Named{"closure(" + std::to_string(family.size()) + ")", share(Lattice::build(spec))};
  }
  return std::nullopt;
}

Named pick_lattice(Rng& rng, const Bounds& b) {
  const std::size_t max = b.max_lattice_size;
  auto chain = [&] { return make_chain(max <= 2 ? max : 2 + rng.below(max - 1)); };
  if (b.lattice_kind == LatticeKind::kChain || max < 4) return chain();

  const std::uint64_t roll = rng.below(100);
  if (roll < 30) return chain();
  if (roll < 45) {
    if (max >= 6 && rng.chance(50)) return make_product(2, 3);
    return make_product(2, 2);
  }
  if (max >= 5 && roll < 60) return make_m3();
  if (max >= 5 && roll < 75) return make_n5();
  if (max >= 7 && roll < 85) return make_m7();
  if (auto closure = make_closure_system(rng, max)) return *closure;
  return chain();
}

struct GroupEntry {
  std::string name;
  std::size_t order;
  std::function<FiniteGroup()> make;
};

std::vector<GroupEntry> group_catalog() {
  std::vector<GroupEntry> out;
  for (std::size_t n : {1, 2, 3, 4, 5, 6, 8, 9, 10, 12})
    out.push_back({"C" + std::to_string(n), n, [n] { return FiniteGroup::cyclic(n); }});
  for (std::size_t n : {4, 6, 8, 10, 12, 16, 18, 24})
    out.push_back({"D" + std::to_string(n), n, [n] { return FiniteGroup::dihedral(n); }});
  out.push_back({"S3", 6, [] { return FiniteGroup::symmetric(3); }});
  out.push_back({"S4", 24, [] { return FiniteGroup::symmetric(4); }});
  out.push_back({"Q8", 8, [] { return FiniteGroup::quaternion(); }});
  return out;
}

GroupHom identity_hom(const GroupPtr& grp) { return GroupHom::from_map(grp, grp, grp->elements()); }

// A surjective homomorphism out of G appropriate to its family.
GroupHom pick_hom(const GroupPtr& grp, Rng& rng) {
  if (rng.chance(20)) return identity_hom(grp);
  const FiniteGroup& g = *grp;
  switch (g.kind()) {
    case FiniteGroup::Kind::kCyclic: {
      std::vector<std::size_t> divisors;
      for (std::size_t d = 1; d <= g.order(); ++d)
        if (g.order() % d == 0) divisors.push_back(d);
      const std::size_t d = rng.pick(divisors);
      auto target = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(d));
      std::pair<GElt, GElt> gen{g.at("g"), target->at("g")};
      return GroupHom::from_generator_images(grp, target, std::span(&gen, 1));
    }
    case FiniteGroup::Kind::kDihedral: {
      const std::size_t n = g.order() / 2;
      const GElt r = g.at("r"), s = g.at("s");
      if (rng.chance(40)) {
        auto target = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
        const std::pair<GElt, GElt> gens[] = {{r, target->identity()}, {s, target->at("g")}};
        return GroupHom::from_generator_images(grp, target, gens);
      }
      std::vector<std::size_t> divisors;
      for (std::size_t m = 1; m <= n; ++m)
        if (n % m == 0) divisors.push_back(m);
      const std::size_t m = rng.pick(divisors);
      auto target = std::make_shared<const FiniteGroup>(FiniteGroup::dihedral(2 * m));
      const std::pair<GElt, GElt> gens[] = {{r, target->at("r")}, {s, target->at("s")}};
      return GroupHom::from_generator_images(grp, target, gens);
    }
    case FiniteGroup::Kind::kSymmetric: {
      auto target = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
      std::vector<GElt> map;
      for (GElt x : g.elements())
        map.push_back(g.permutation(x)->sign() > 0 ? target->identity() : target->at("g"));
      return GroupHom::from_map(grp, target, std::move(map));
    }
    case FiniteGroup::Kind::kTable:
      if (g.order() == 8 && g.find("i")) {
        auto target = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
        const std::pair<GElt, GElt> gens[] = {{g.at("i"), target->at("g")}, {g.at("j"), target->identity()}};
        return GroupHom::from_generator_images(grp, target, gens);
      }
      [[fallthrough]];
    default:
      return identity_hom(grp);
  }
}

std::vector<ElementSet> subgroup_chain(const FiniteGroup& grp, Rng& rng) {
  const auto elems = grp.elements();
  std::vector<ElementSet> chain;
  ElementSet h = grp.generated(std::span<const GElt>{});
  if (rng.chance(50)) {
    const GElt g = rng.pick(elems);
    h = grp.generated(std::span(&g, 1));
  }
  chain.push_back(h);
  const std::size_t steps = rng.below(3);
  for (std::size_t i = 0; i < steps; ++i) {
    h.insert(rng.pick(elems));
    h = grp.generated(h);
    if (!(h == chain.back())) chain.push_back(h);
  }
  const ElementSet all = ElementSet::all(grp.order());
  if (!(chain.back() == all)) chain.push_back(all);
  return chain;
}

// A maximal chain of L listed from top to bottom.
std::vector<LatticeElt> random_maximal_chain(const Lattice& lat, Rng& rng) {
  const auto covers = lat.covers();
  std::vector<LatticeElt> out{lat.top()};
  while (out.back() != lat.bottom()) {
    std::vector<LatticeElt> below;
    for (const auto& [lo, hi] : covers)
      if (hi == out.back()) below.push_back(lo);
    out.push_back(rng.pick(below));
  }
  return out;
}

// Assigns a non-increasing run of values along an ascending subgroup chain,
// so every level subset is one of the chain's subgroups.
// With `reach_top`, the smallest subgroup usually takes the top value, so
// ambients are not squeezed toward the bottom of L.
LSubset chain_lsubset(const GroupPtr& grp, const LatticePtr& lat, Rng& rng, bool reach_top) {
  const auto subgroups = subgroup_chain(*grp, rng);
  const auto values = random_maximal_chain(*lat, rng);
  std::vector<std::size_t> picks;
  for (std::size_t i = 0; i < subgroups.size(); ++i) picks.push_back(rng.below(values.size()));
  std::sort(picks.begin(), picks.end());
  if (reach_top && rng.chance(75)) picks.front() = 0;
  return LSubset::from_function(grp, lat, [&](GElt x) {
    for (std::size_t i = 0; i < subgroups.size(); ++i)
      if (subgroups[i].contains(x)) return values[picks[i]];
    return lat->bottom();
  });
}

}  // namespace

void check_bounds(const Bounds& bounds) {
  if (bounds.max_group_order < 1 || bounds.max_group_order > 24)
    throw Error(ErrorCode::kBoundsExceeded, "max group order must be in 1..24");
  if (bounds.max_lattice_size < 2 || bounds.max_lattice_size > 10)
    throw Error(ErrorCode::kBoundsExceeded, "max lattice size must be in 2..10");
}

Instance gen_instance(std::uint64_t seed, const Bounds& bounds) {
  check_bounds(bounds);

  Rng rng(seed);
  std::vector<GroupEntry> groups;
  for (auto& entry : group_catalog())
    if (entry.order <= bounds.max_group_order) groups.push_back(std::move(entry));
  const GroupEntry& ge = rng.pick(groups);
  auto grp = std::make_shared<const FiniteGroup>(ge.make());
  Named named = pick_lattice(rng, bounds);
  const LatticePtr& lat = named.lattice;

  LSubset mu = chain_lsubset(grp, lat, rng, true);
  LSubset eta = meet(chain_lsubset(grp, lat, rng, true), mu);
  LSubset nu = meet(chain_lsubset(grp, lat, rng, false), mu);

  std::vector<LPoint> points;
  const auto elems = grp->elements();
  for (int i = 0; i < 4; ++i) {
    const GElt x = rng.pick(elems);
    const LatticeElt a = (i % 2 == 0) ? mu(x) : rng.pick(lat->down_set(mu(x)));
    points.push_back(LPoint{a, x});
  }
  GroupHom hom = pick_hom(grp, rng);

  if (!is_l_subgroup_of_via_levels(eta, mu) || !is_l_subgroup_of_via_levels(nu, mu))
    throw Error(ErrorCode::kInternal, "generated instance is not an L-subgroup pair");
  for (const LPoint& p : points)
    if (!point_membership(p, mu)) throw Error(ErrorCode::kInternal, "generated point not in mu");

  std::string descriptor = "seed=" + std::to_string(seed) + " group=" + ge.name +
                           " lattice=" + named.name;
  return Instance{seed,         std::move(descriptor), lat, grp, std::move(mu), std::move(eta),
                  std::move(nu), std::move(points),    std::move(hom)};
}

}  // namespace lgroup::verify
