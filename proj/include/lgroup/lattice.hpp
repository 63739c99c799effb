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

#ifndef LGROUP_LATTICE_HPP_
#define LGROUP_LATTICE_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lgroup {

/// Index of an element inside a specific Lattice.
struct LatticeElt {
  std::uint32_t index = 0;
  friend auto operator<=>(const LatticeElt&, const LatticeElt&) = default;
};

/// How a lattice is described before validation.
struct LatticeSpec {
  enum class Kind { kCovers, kOrder, kChain };
  Kind kind = Kind::kChain;
  std::vector<std::string> labels;
  // (lower, upper) label pairs: cover relations for kCovers, arbitrary
  // order pairs for kOrder. Ignored for kChain, where labels run bottom-to-top.
  std::vector<std::pair<std::string, std::string>> relations;
};

struct DistributivityReport {
  bool distributive = true;
  // x, y, z with x∧(y∨z) != (x∧y)∨(x∧z).
  std::optional<std::array<LatticeElt, 3>> witness;
};

/// A finite bounded lattice with precomputed order, meet and join tables.
///
/// Instances are immutable once built. All operations take element indices
/// previously obtained from the same lattice; passing a foreign index is a
/// programming error and is only caught by debug assertions.
class Lattice {
 public:
  /// Validates the order and computes meet/join tables.
  ///
  /// Throws Error with kDuplicateLabel, kNotAPartialOrder (a cycle, reported
  /// with two mutually comparable labels) or kNotALattice (reported with the
  /// pair lacking a unique meet or join).
  static Lattice build(const LatticeSpec& spec);

  static Lattice chain(std::vector<std::string> labels);
  static Lattice from_covers(std::vector<std::string> labels,
                             std::vector<std::pair<std::string, std::string>> covers);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(LatticeElt a) const { return labels_[a.index]; }
  std::optional<LatticeElt> find(std::string_view label) const;
  /// Like find(), but throws kUnknownName.
  LatticeElt at(std::string_view label) const;

  LatticeElt bottom() const noexcept { return bottom_; }
  LatticeElt top() const noexcept { return top_; }

  bool leq(LatticeElt a, LatticeElt b) const {
    return leq_[a.index * size() + b.index] != 0;
  }
  bool lt(LatticeElt a, LatticeElt b) const { return a != b && leq(a, b); }
  LatticeElt meet(LatticeElt a, LatticeElt b) const {
    return LatticeElt{meet_[a.index * size() + b.index]};
  }
  LatticeElt join(LatticeElt a, LatticeElt b) const {
    return LatticeElt{join_[a.index * size() + b.index]};
  }

  /// Iterated join; bottom for the empty set.
  LatticeElt sup_over(std::span<const LatticeElt> elems) const;
  /// Iterated meet; top for the empty set.
  LatticeElt inf_over(std::span<const LatticeElt> elems) const;

  /// All elements, in index order.
  std::vector<LatticeElt> elements() const;
  /// Elements b with b <= a, in index order.
  std::vector<LatticeElt> down_set(LatticeElt a) const;
  /// Pairs (a, b) with a covered by b.
  std::vector<std::pair<LatticeElt, LatticeElt>> covers() const;

  DistributivityReport check_distributive() const;
  bool is_distributive() const { return check_distributive().distributive; }
  bool is_chain() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  Lattice() = default;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  LatticeElt bottom_;
  LatticeElt top_;
};

}  // namespace lgroup

#endif  // LGROUP_LATTICE_HPP_
