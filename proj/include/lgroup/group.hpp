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

#ifndef LGROUP_GROUP_HPP_
#define LGROUP_GROUP_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lgroup/permutation.hpp"

namespace lgroup {

/// Index of an element inside a specific FiniteGroup.
struct GElt {
  std::uint32_t index = 0;
  friend auto operator<=>(const GElt&, const GElt&) = default;
};

inline constexpr std::size_t kDefaultClosureCap = 10080;

/// A subset of a finite group's elements, as a membership mask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : mask_(universe, false) {}
  static ElementSet of(std::size_t universe, std::span<const GElt> elems);
  static ElementSet all(std::size_t universe);

  std::size_t universe() const noexcept { return mask_.size(); }
  bool contains(GElt g) const { return mask_[g.index]; }
  void insert(GElt g) { mask_[g.index] = true; }
  void erase(GElt g) { mask_[g.index] = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<GElt> elements() const;
  bool is_subset_of(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet operator-(const ElementSet& other) const;
  ElementSet operator&(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<bool> mask_;
};

struct GroupSpec {
  enum class Kind { kSymmetric, kDihedral, kCyclic, kTable, kPermutation };
  Kind kind = Kind::kCyclic;
  // Degree for kSymmetric/kPermutation, group order for kDihedral, n for kCyclic.
  std::size_t n = 1;
  std::vector<std::string> generators;          // kPermutation
  std::vector<std::string> labels;              // kTable
  std::vector<std::vector<std::string>> mul;    // kTable, by label
  std::size_t closure_cap = kDefaultClosureCap;
};

/// A finite group given by its multiplication table.
///
/// Element 0 is not necessarily the identity; use identity(). The
/// constructors fix these label conventions:
///   symmetric, permutation   cycle notation "(1 2 3)(4 5)", identity "e";
///                            products compose right-to-left.
///   dihedral of order 2n     "e", "r", "r^k", "s", "sr", "sr^k" with
///                            r^n = s^2 = e and rs = sr^-1.
///   cyclic                   "e", "g", "g^k".
class FiniteGroup {
 public:
  using Kind = GroupSpec::Kind;

  static FiniteGroup build(const GroupSpec& spec);
  static FiniteGroup symmetric(std::uint32_t n);
  static FiniteGroup dihedral(std::size_t order);
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup quaternion();
  static FiniteGroup from_permutations(std::uint32_t degree,
                                       std::span<const Permutation> generators,
                                       std::size_t cap = kDefaultClosureCap);
  /// Validates associativity, identity and inverses (kInvalidTable).
  static FiniteGroup from_table(std::vector<std::string> labels,
                                std::vector<std::vector<std::uint32_t>> mul);

  Kind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(GElt g) const { return labels_[g.index]; }
  /// Resolves a label; also accepts non-canonical spellings for permutation
  /// ("(2 3 1)", "(123)"), dihedral ("s r^3", "r^2 s") and cyclic ("g^9")
  /// elements.
  std::optional<GElt> find(std::string_view label) const;
  GElt at(std::string_view label) const;  // throws kUnknownName

  GElt identity() const noexcept { return identity_; }
  GElt mul(GElt a, GElt b) const {
    return GElt{mul_[a.index * order() + b.index]};
  }
  GElt inv(GElt a) const { return GElt{inv_[a.index]}; }
  /// z x z^-1.
  GElt conj(GElt z, GElt x) const { return mul(mul(z, x), inv(z)); }
  /// z^-1 x z.
  GElt conj_inverse(GElt z, GElt x) const { return mul(mul(inv(z), x), z); }
  std::size_t element_order(GElt g) const;
  std::vector<GElt> elements() const;
  bool is_abelian() const;

  /// The permutation behind an element of a symmetric/permutation group.
  std::optional<Permutation> permutation(GElt g) const;
  std::uint32_t degree() const noexcept { return degree_; }

  /// Smallest subgroup containing `gens`; {e} for an empty set.
  ElementSet generated(std::span<const GElt> gens) const;
  ElementSet generated(const ElementSet& gens) const;
  bool is_subgroup(const ElementSet& h) const;
  /// `h` is a subgroup of `k` and normal in it.
  bool is_normal_in(const ElementSet& h, const ElementSet& k) const;
  /// z H z^-1.
  ElementSet conjugate_set(GElt z, const ElementSet& h) const;
  /// {x : x H x^-1 = H}; throws kNotASubgroup.
  ElementSet normalizer(const ElementSet& h) const;
  /// Every subgroup, smallest first. Intended for small groups.
  std::vector<ElementSet> subgroups() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.labels_ == b.labels_ && a.mul_ == b.mul_;
  }

 private:
  FiniteGroup() = default;
  void finish();  // fills index, inverses, identity; validates the table
  std::optional<GElt> parse_word(std::string_view label) const;

  Kind kind_ = Kind::kTable;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  GElt identity_;
  std::uint32_t degree_ = 0;
  std::vector<Permutation> perms_;
  std::size_t dihedral_n_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// How a homomorphism is specified, by element labels.
struct HomSpec {
  std::vector<std::pair<std::string, std::string>> images;
  // True if `images` only covers a generating set; the rest is extended
  // along words in the generators and then validated.
  bool generators_only = false;
};

/// A validated group homomorphism.
class GroupHom {
 public:
  static GroupHom build(GroupPtr domain, GroupPtr codomain, const HomSpec& spec);
  /// Throws kNotAHomomorphism with a witness pair.
  static GroupHom from_map(GroupPtr domain, GroupPtr codomain,
                           std::vector<GElt> map);
  /// Extends generator images along a breadth-first word tree, then
  /// validates. Throws kIllDefinedOnGenerators when the generators do not
  /// generate the domain or a generator is given two images.
  static GroupHom from_generator_images(GroupPtr domain, GroupPtr codomain,
                                        std::span<const std::pair<GElt, GElt>> images);

  const GroupPtr& domain() const noexcept { return domain_; }
  const GroupPtr& codomain() const noexcept { return codomain_; }
  GElt operator()(GElt x) const { return map_[x.index]; }
  const std::vector<GElt>& map() const noexcept { return map_; }
  bool is_surjective() const noexcept { return surjective_; }
  std::vector<GElt> fiber(GElt y) const;

 private:
  GroupHom() = default;

  GroupPtr domain_;
  GroupPtr codomain_;
  std::vector<GElt> map_;
  bool surjective_ = false;
};

}  // namespace lgroup

#endif  // LGROUP_GROUP_HPP_
