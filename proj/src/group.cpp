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

#include "lgroup/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "lgroup/error.hpp"

namespace lgroup {

// ---------------------------------------------------------------------------
// ElementSet

ElementSet ElementSet::of(std::size_t universe, std::span<const GElt> elems) {
  ElementSet s(universe);
  for (GElt g : elems) s.insert(g);
  return s;
}

ElementSet ElementSet::all(std::size_t universe) {
  ElementSet s(universe);
  s.mask_.assign(universe, true);
  return s;
}

std::size_t ElementSet::count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<GElt> ElementSet::elements() const {
  std::vector<GElt> out;
  for (std::uint32_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(GElt{i});
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_[i]) return false;
  return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (other.mask_[i]) mask_[i] = true;
  return *this;
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  ElementSet out = *this;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (other.mask_[i]) out.mask_[i] = false;
  return out;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet out(mask_.size());
  for (std::size_t i = 0; i < mask_.size(); ++i)
    out.mask_[i] = mask_[i] && other.mask_[i];
  return out;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

std::string power_label(std::string_view base, std::size_t k) {
  if (k == 0) return base.empty() ? "e" : std::string(base);
  std::string out(base);
  out += 'r';
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

std::string cyclic_label(std::size_t k) {
  if (k == 0) return "e";
  if (k == 1) return "g";
  return "g^" + std::to_string(k);
}

}  // namespace

void FiniteGroup::finish() {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::kInvalidTable, "group has no elements");
  if (mul_.size() != n * n)
    throw Error(ErrorCode::kInvalidTable, "multiplication table is not square");
  for (std::uint32_t v : mul_)
    if (v >= n) throw Error(ErrorCode::kInvalidTable, "table entry out of range");

  index_.clear();
  for (std::uint32_t i = 0; i < n; ++i)
    if (!index_.emplace(labels_[i], i).second)
      throw Error(ErrorCode::kInvalidTable, "duplicate element label '" + labels_[i] + "'");

  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      ok = mul_[e * n + x] == x && mul_[x * n + e] == x;
    if (ok) {
      identity_ = GElt{e};
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::kInvalidTable, "no two-sided identity");

  inv_.assign(n, UINT32_MAX);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (mul_[x * n + y] == identity_.index && mul_[y * n + x] == identity_.index) {
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] == UINT32_MAX)
      throw Error(ErrorCode::kInvalidTable, "element '" + labels_[x] + "' has no inverse");
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> labels,
                                    std::vector<std::vector<std::uint32_t>> mul) {
  FiniteGroup grp;
  grp.kind_ = Kind::kTable;
  const std::size_t n = labels.size();
  grp.labels_ = std::move(labels);
  if (mul.size() != n)
    throw Error(ErrorCode::kInvalidTable, "multiplication table has wrong row count");
  for (const auto& row : mul) {
    if (row.size() != n)
      throw Error(ErrorCode::kInvalidTable, "multiplication table has wrong row length");
    grp.mul_.insert(grp.mul_.end(), row.begin(), row.end());
  }
  grp.finish();
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        const GElt A{a}, B{b}, C{c};
        if (grp.mul(grp.mul(A, B), C) != grp.mul(A, grp.mul(B, C)))
          throw Error(ErrorCode::kInvalidTable,
                      "not associative at (" + grp.labels_[a] + ", " + grp.labels_[b] +
                          ", " + grp.labels_[c] + ")");
      }
  return grp;
}

FiniteGroup FiniteGroup::from_permutations(std::uint32_t degree,
                                           std::span<const Permutation> generators,
                                           std::size_t cap) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(ErrorCode::kInvalidArgument, "generator degree mismatch");

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::map<Permutation, std::uint32_t> index{{elems.front(), 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = elems[head] * g;
      if (index.contains(next)) continue;
      if (elems.size() >= cap)
        throw Error(ErrorCode::kClosureTooLarge,
                    "generated group exceeds " + std::to_string(cap) + " elements");
      index.emplace(next, static_cast<std::uint32_t>(elems.size()));
      elems.push_back(std::move(next));
    }
  }

  FiniteGroup grp;
  grp.kind_ = Kind::kPermutation;
  grp.degree_ = degree;
  const std::size_t n = elems.size();
  grp.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      grp.mul_[a * n + b] = index.at(elems[a] * elems[b]);
  for (const auto& p : elems) grp.labels_.push_back(p.to_string());
  grp.perms_ = std::move(elems);
  grp.finish();
  return grp;
}

FiniteGroup FiniteGroup::symmetric(std::uint32_t n) {
  if (n < 1 || n > 7)
    throw Error(ErrorCode::kInvalidArgument, "symmetric group degree must be in 1..7");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> cycle(n);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    gens.push_back(Permutation::parse("(1 2)", n));
    gens.emplace_back(std::move(cycle));
  }
  FiniteGroup closure = from_permutations(n, gens, 5040);

  // Re-index in lexicographic order of image lists, identity first.
  std::vector<std::uint32_t> order(closure.order());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return closure.perms_[a].images() < closure.perms_[b].images();
  });
  std::vector<std::uint32_t> where(order.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) where[order[i]] = i;

  FiniteGroup grp;
  grp.kind_ = Kind::kSymmetric;
  grp.degree_ = n;
  const std::size_t m = order.size();
  grp.mul_.resize(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    grp.labels_.push_back(closure.labels_[order[a]]);
    grp.perms_.push_back(closure.perms_[order[a]]);
    for (std::size_t b = 0; b < m; ++b)
      grp.mul_[a * m + b] = where[closure.mul_[order[a] * m + order[b]]];
  }
  grp.finish();
  return grp;
}

FiniteGroup FiniteGroup::dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw Error(ErrorCode::kInvalidArgument, "dihedral group order must be even and >= 2");
  const std::size_t n = order / 2;
  FiniteGroup grp;
  grp.kind_ = Kind::kDihedral;
  grp.dihedral_n_ = n;
  // Index k is r^k, index n + k is s r^k.
  for (std::size_t k = 0; k < n; ++k) grp.labels_.push_back(power_label("", k));
  for (std::size_t k = 0; k < n; ++k) grp.labels_.push_back(k == 0 ? "s" : power_label("s", k));
  grp.mul_.resize(order * order);
  auto idx = [n](bool reflection, std::size_t k) {
    return static_cast<std::uint32_t>((reflection ? n : 0) + k % n);
  };
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const bool sa = a >= n, sb = b >= n;
      const std::size_t i = a % n, j = b % n;
      std::uint32_t c;
      if (!sa && !sb) c = idx(false, i + j);            // r^i r^j
      else if (!sa && sb) c = idx(true, j + n - i);     // r^i s r^j = s r^(j-i)
      else if (sa && !sb) c = idx(true, i + j);         // s r^i r^j
      else c = idx(false, j + n - i);                   // s r^i s r^j = r^(j-i)
      grp.mul_[a * order + b] = c;
    }
  }
  grp.finish();
  return grp;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "cyclic group order must be >= 1");
  FiniteGroup grp;
  grp.kind_ = Kind::kCyclic;
  for (std::size_t k = 0; k < n; ++k) grp.labels_.push_back(cyclic_label(k));
  grp.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      grp.mul_[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
  grp.finish();
  return grp;
}

FiniteGroup FiniteGroup::quaternion() {
  // Units 1, i, j, k with a sign; index = 2 * unit + (negative ? 1 : 0).
  static constexpr int kUnitMul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::string> labels = {"e", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::vector<std::uint32_t>> mul(8, std::vector<std::uint32_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      int sign = kSign[ua][ub] * ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1);
      mul[a][b] = static_cast<std::uint32_t>(2 * kUnitMul[ua][ub] + (sign < 0 ? 1 : 0));
    }
  return from_table(std::move(labels), std::move(mul));
}

FiniteGroup FiniteGroup::build(const GroupSpec& spec) {
  switch (spec.kind) {
    case Kind::kSymmetric:
      if (spec.n > 6)
        throw Error(ErrorCode::kInvalidArgument, "symmetric groups are limited to n <= 6");
      return symmetric(static_cast<std::uint32_t>(spec.n));
    case Kind::kDihedral:
      return dihedral(spec.n);
    case Kind::kCyclic:
      return cyclic(spec.n);
    case Kind::kPermutation: {
      const auto degree = static_cast<std::uint32_t>(spec.n);
      std::vector<Permutation> gens;
      for (const auto& g : spec.generators) gens.push_back(Permutation::parse(g, degree));
      return from_permutations(degree, gens, spec.closure_cap);
    }
    case Kind::kTable: {
      std::map<std::string, std::uint32_t> index;
      for (std::uint32_t i = 0; i < spec.labels.size(); ++i) index[spec.labels[i]] = i;
      std::vector<std::vector<std::uint32_t>> mul;
      for (const auto& row : spec.mul) {
        auto& out = mul.emplace_back();
        for (const auto& entry : row) {
          auto it = index.find(entry);
          if (it == index.end())
            throw Error(ErrorCode::kInvalidTable, "unknown label '" + entry + "' in table");
          out.push_back(it->second);
        }
      }
      return from_table(spec.labels, std::move(mul));
    }
  }
  throw Error(ErrorCode::kInternal, "unhandled group kind");
}

// ---------------------------------------------------------------------------
// Lookup

std::optional<GElt> FiniteGroup::parse_word(std::string_view label) const {
  std::string word;
  for (char c : label)
    if (!std::isspace(static_cast<unsigned char>(c))) word += c;
  if (word.empty()) return std::nullopt;

  GElt acc = identity_;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const char sym = word[pos++];
    long long exponent = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < word.size() && word[pos] == '-') {
        negative = true;
        ++pos;
      }
      if (pos == word.size() || !std::isdigit(static_cast<unsigned char>(word[pos])))
        return std::nullopt;
      exponent = 0;
      while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos])))
        exponent = exponent * 10 + (word[pos++] - '0');
      if (negative) exponent = -exponent;
    }
    GElt base;
    if (sym == 'e') {
      base = identity_;
    } else if (kind_ == Kind::kDihedral && sym == 'r') {
      base = GElt{dihedral_n_ > 1 ? 1u : 0u};
    } else if (kind_ == Kind::kDihedral && sym == 's') {
      base = GElt{static_cast<std::uint32_t>(dihedral_n_)};
    } else if (kind_ == Kind::kCyclic && sym == 'g') {
      base = GElt{order() > 1 ? 1u : 0u};
    } else {
      return std::nullopt;
    }
    const auto period = static_cast<long long>(element_order(base));
    long long k = ((exponent % period) + period) % period;
    for (long long i = 0; i < k; ++i) acc = mul(acc, base);
  }
  return acc;
}

std::optional<GElt> FiniteGroup::find(std::string_view label) const {
  if (auto it = index_.find(std::string(label)); it != index_.end()) return GElt{it->second};
  switch (kind_) {
    case Kind::kSymmetric:
    case Kind::kPermutation:
      try {
        const Permutation p = Permutation::parse(label, degree_);
        if (auto it = index_.find(p.to_string()); it != index_.end()) return GElt{it->second};
      } catch (const Error&) {
      }
      return std::nullopt;
    case Kind::kDihedral:
    case Kind::kCyclic:
      return parse_word(label);
    case Kind::kTable:
      return std::nullopt;
  }
  return std::nullopt;
}

GElt FiniteGroup::at(std::string_view label) const {
  if (auto g = find(label)) return *g;
  throw Error(ErrorCode::kUnknownName, "unknown group element '" + std::string(label) + "'");
}

// ---------------------------------------------------------------------------
// Structure

std::size_t FiniteGroup::element_order(GElt g) const {
  std::size_t k = 1;
  for (GElt x = g; x != identity_; x = mul(x, g)) ++k;
  return k;
}

std::vector<GElt> FiniteGroup::elements() const {
  std::vector<GElt> out(order());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = GElt{i};
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (GElt a : elements())
    for (GElt b : elements())
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<Permutation> FiniteGroup::permutation(GElt g) const {
  if (perms_.empty()) return std::nullopt;
  return perms_[g.index];
}

ElementSet FiniteGroup::generated(std::span<const GElt> gens) const {
  ElementSet h(order());
  std::deque<GElt> frontier{identity_};
  h.insert(identity_);
  while (!frontier.empty()) {
    const GElt x = frontier.front();
    frontier.pop_front();
    for (GElt g : gens) {
      const GElt y = mul(x, g);
      if (!h.contains(y)) {
        h.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return h;
}

ElementSet FiniteGroup::generated(const ElementSet& gens) const {
  const auto elems = gens.elements();
  return generated(std::span<const GElt>(elems));
}

bool FiniteGroup::is_subgroup(const ElementSet& h) const {
  if (h.universe() != order() || !h.contains(identity_)) return false;
  const auto elems = h.elements();
  for (GElt a : elems) {
    if (!h.contains(inv(a))) return false;
    for (GElt b : elems)
      if (!h.contains(mul(a, b))) return false;
  }
  return true;
}

bool FiniteGroup::is_normal_in(const ElementSet& h, const ElementSet& k) const {
  if (!is_subgroup(h) || !is_subgroup(k) || !h.is_subset_of(k)) return false;
  for (GElt y : k.elements())
    for (GElt x : h.elements())
      if (!h.contains(conj(y, x))) return false;
  return true;
}

ElementSet FiniteGroup::conjugate_set(GElt z, const ElementSet& h) const {
  ElementSet out(order());
  for (GElt x : h.elements()) out.insert(conj(z, x));
  return out;
}

ElementSet FiniteGroup::normalizer(const ElementSet& h) const {
  if (!is_subgroup(h)) throw Error(ErrorCode::kNotASubgroup, "normalizer of a non-subgroup");
  ElementSet out(order());
  for (GElt x : elements())
    if (conjugate_set(x, h) == h) out.insert(x);
  return out;
}

std::vector<ElementSet> FiniteGroup::subgroups() const {
  // Every subgroup is the join of its cyclic subgroups, so close the set of
  // cyclic subgroups under pairwise joins.
  std::vector<ElementSet> found;
  std::set<std::vector<GElt>> seen;
  auto add = [&](ElementSet s) {
    if (seen.insert(s.elements()).second) found.push_back(std::move(s));
  };
  for (GElt g : elements()) add(generated(std::span<const GElt>(&g, 1)));
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet u = found[i];
      u |= found[j];
      add(generated(u));
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.count() < b.count();
  });
  return found;
}

// ---------------------------------------------------------------------------
// Homomorphisms

GroupHom GroupHom::from_map(GroupPtr domain, GroupPtr codomain, std::vector<GElt> map) {
  if (map.size() != domain->order())
    throw Error(ErrorCode::kNotAHomomorphism, "map is not total on the domain");
  for (GElt a : domain->elements()) {
    for (GElt b : domain->elements()) {
      if (map[domain->mul(a, b).index] != codomain->mul(map[a.index], map[b.index]))
        throw Error(ErrorCode::kNotAHomomorphism,
                    "f(xy) != f(x)f(y) at x = " + domain->label(a) + ", y = " +
                        domain->label(b));
    }
  }
  GroupHom f;
  ElementSet hit(codomain->order());
  for (GElt y : map) hit.insert(y);
  f.surjective_ = hit.count() == codomain->order();
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  f.map_ = std::move(map);
  return f;
}

GroupHom GroupHom::from_generator_images(GroupPtr domain, GroupPtr codomain,
                                         std::span<const std::pair<GElt, GElt>> images) {
  std::map<GElt, GElt> gen;
  for (const auto& [x, y] : images) {
    auto [it, inserted] = gen.emplace(x, y);
    if (!inserted && it->second != y)
      throw Error(ErrorCode::kIllDefinedOnGenerators,
                  "generator " + domain->label(x) + " given two images");
  }
  std::vector<GElt> map(domain->order());
  std::vector<bool> assigned(domain->order(), false);
  std::deque<GElt> frontier{domain->identity()};
  map[domain->identity().index] = codomain->identity();
  assigned[domain->identity().index] = true;
  while (!frontier.empty()) {
    const GElt x = frontier.front();
    frontier.pop_front();
    for (const auto& [g, img] : gen) {
      const GElt y = domain->mul(x, g);
      if (assigned[y.index]) continue;
      assigned[y.index] = true;
      map[y.index] = codomain->mul(map[x.index], img);
      frontier.push_back(y);
    }
  }
  if (std::find(assigned.begin(), assigned.end(), false) != assigned.end())
    throw Error(ErrorCode::kIllDefinedOnGenerators,
                "listed generators do not generate the domain");
  return from_map(std::move(domain), std::move(codomain), std::move(map));
}

GroupHom GroupHom::build(GroupPtr domain, GroupPtr codomain, const HomSpec& spec) {
  std::vector<std::pair<GElt, GElt>> pairs;
  for (const auto& [x, y] : spec.images) pairs.emplace_back(domain->at(x), codomain->at(y));
  if (spec.generators_only) return from_generator_images(domain, codomain, pairs);

  std::vector<GElt> map(domain->order());
  std::vector<bool> assigned(domain->order(), false);
  for (const auto& [x, y] : pairs) {
    if (assigned[x.index] && map[x.index] != y)
      throw Error(ErrorCode::kNotAHomomorphism, "element " + domain->label(x) +
                                                    " given two images");
    map[x.index] = y;
    assigned[x.index] = true;
  }
  for (GElt x : domain->elements())
    if (!assigned[x.index])
      throw Error(ErrorCode::kNotAHomomorphism,
                  "map has no image for " + domain->label(x));
  return from_map(std::move(domain), std::move(codomain), std::move(map));
}

std::vector<GElt> GroupHom::fiber(GElt y) const {
  std::vector<GElt> out;
  for (std::uint32_t i = 0; i < map_.size(); ++i)
    if (map_[i] == y) out.push_back(GElt{i});
  return out;
}

}  // namespace lgroup
