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

#include "lgroup/lattice.hpp"


#include "lgroup/error.hpp"

namespace lgroup {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

// Greatest element of `candidates` w.r.t. `leq`, or kNone if it has no
// greatest element.
std::uint32_t greatest(const std::vector<std::uint32_t>& candidates,
                       const std::vector<std::uint8_t>& leq, std::size_t n) {
  for (std::uint32_t c : candidates) {
    bool above_all = true;
    for (std::uint32_t d : candidates) {
      if (!leq[d * n + c]) {
        above_all = false;
        break;
      }
    }
    if (above_all) return c;
  }
  return kNone;
}

std::uint32_t least(const std::vector<std::uint32_t>& candidates,
                    const std::vector<std::uint8_t>& leq, std::size_t n) {
  for (std::uint32_t c : candidates) {
    bool below_all = true;
    for (std::uint32_t d : candidates) {
      if (!leq[c * n + d]) {
        below_all = false;
        break;
      }
    }
    if (below_all) return c;
  }
  return kNone;
}

}  // namespace

Lattice Lattice::build(const LatticeSpec& spec) {
  Lattice lat;
  const std::size_t n = spec.labels.size();
  if (n == 0) throw Error(ErrorCode::kNotALattice, "lattice has no elements");

  lat.labels_ = spec.labels;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!lat.index_.emplace(lat.labels_[i], i).second)
      throw Error(ErrorCode::kDuplicateLabel,
                  "duplicate lattice label '" + lat.labels_[i] + "'");
  }

  auto& leq = lat.leq_;
  leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;

  if (spec.kind == LatticeSpec::Kind::kChain) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) leq[i * n + j] = 1;
  } else {
    for (const auto& [lo, hi] : spec.relations) {
      const LatticeElt a = lat.at(lo);
      const LatticeElt b = lat.at(hi);
      leq[a.index * n + b.index] = 1;
    }
    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k * n + j]) leq[i * n + j] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq[i * n + j] && leq[j * n + i])
          throw Error(ErrorCode::kNotAPartialOrder,
                      "order has a cycle through '" + lat.labels_[i] + "' and '" +
                          lat.labels_[j] + "'");
  }

  lat.meet_.assign(n * n, kNone);
  lat.join_.assign(n * n, kNone);
  std::vector<std::uint32_t> bounds;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a; b < n; ++b) {
      bounds.clear();
      for (std::uint32_t c = 0; c < n; ++c)
        if (leq[c * n + a] && leq[c * n + b]) bounds.push_back(c);
      const std::uint32_t m = greatest(bounds, leq, n);
      if (m == kNone)
        throw Error(ErrorCode::kNotALattice, "pair ('" + lat.labels_[a] + "', '" +
                                                 lat.labels_[b] +
                                                 "') has no unique meet");
      bounds.clear();
      for (std::uint32_t c = 0; c < n; ++c)
        if (leq[a * n + c] && leq[b * n + c]) bounds.push_back(c);
      const std::uint32_t j = least(bounds, leq, n);
      if (j == kNone)
        throw Error(ErrorCode::kNotALattice, "pair ('" + lat.labels_[a] + "', '" +
                                                 lat.labels_[b] +
                                                 "') has no unique join");
      lat.meet_[a * n + b] = lat.meet_[b * n + a] = m;
      lat.join_[a * n + b] = lat.join_[b * n + a] = j;
    }
  }

  LatticeElt lo{0};
  LatticeElt hi{0};
  for (std::uint32_t i = 1; i < n; ++i) {
    lo = lat.meet(lo, LatticeElt{i});
    hi = lat.join(hi, LatticeElt{i});
  }
  lat.bottom_ = lo;
  lat.top_ = hi;
  return lat;
}

Lattice Lattice::chain(std::vector<std::string> labels) {
  LatticeSpec spec;
  spec.kind = LatticeSpec::Kind::kChain;
  spec.labels = std::move(labels);
  return build(spec);
}

Lattice Lattice::from_covers(std::vector<std::string> labels,
                             std::vector<std::pair<std::string, std::string>> covers) {
  LatticeSpec spec;
  spec.kind = LatticeSpec::Kind::kCovers;
  spec.labels = std::move(labels);
  spec.relations = std::move(covers);
  return build(spec);
}

std::optional<LatticeElt> Lattice::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return LatticeElt{it->second};
}

LatticeElt Lattice::at(std::string_view label) const {
  if (auto a = find(label)) return *a;
  throw Error(ErrorCode::kUnknownName,
              "unknown lattice element '" + std::string(label) + "'");
}

LatticeElt Lattice::sup_over(std::span<const LatticeElt> elems) const {
  LatticeElt acc = bottom_;
  for (LatticeElt a : elems) acc = join(acc, a);
  return acc;
}

LatticeElt Lattice::inf_over(std::span<const LatticeElt> elems) const {
  LatticeElt acc = top_;
  for (LatticeElt a : elems) acc = meet(acc, a);
  return acc;
}

std::vector<LatticeElt> Lattice::elements() const {
  std::vector<LatticeElt> out;
  out.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) out.push_back(LatticeElt{i});
  return out;
}

std::vector<LatticeElt> Lattice::down_set(LatticeElt a) const {
  std::vector<LatticeElt> out;
  for (std::uint32_t i = 0; i < size(); ++i)
    if (leq(LatticeElt{i}, a)) out.push_back(LatticeElt{i});
  return out;
}

std::vector<std::pair<LatticeElt, LatticeElt>> Lattice::covers() const {
  std::vector<std::pair<LatticeElt, LatticeElt>> out;
  const auto n = static_cast<std::uint32_t>(size());
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (!lt(LatticeElt{a}, LatticeElt{b})) continue;
      bool covered = true;
      for (std::uint32_t c = 0; c < n && covered; ++c)
        if (lt(LatticeElt{a}, LatticeElt{c}) && lt(LatticeElt{c}, LatticeElt{b}))
          covered = false;
      if (covered) out.emplace_back(LatticeElt{a}, LatticeElt{b});
    }
  }
  return out;
}

DistributivityReport Lattice::check_distributive() const {
  const auto n = static_cast<std::uint32_t>(size());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      for (std::uint32_t z = 0; z < n; ++z) {
        const LatticeElt X{x}, Y{y}, Z{z};
        if (meet(X, join(Y, Z)) != join(meet(X, Y), meet(X, Z)))
          return {false, std::array<LatticeElt, 3>{X, Y, Z}};
      }
  return {};
}

bool Lattice::is_chain() const {
  const auto n = static_cast<std::uint32_t>(size());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (!leq(LatticeElt{a}, LatticeElt{b}) && !leq(LatticeElt{b}, LatticeElt{a}))
        return false;
  return true;
}

}  // namespace lgroup
