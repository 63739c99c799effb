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

#ifndef LGROUP_PERMUTATION_HPP_
#define LGROUP_PERMUTATION_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lgroup {

/// A permutation of {1..n}, stored zero-based.
///
/// Products act right-to-left like function composition:
/// (p * q)(i) == p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t degree);

  /// Parses cycle notation such as "(1 2 3)(4 5)". "e" and "()" denote the
  /// identity. Cycles written without separators ("(123)") are read one
  /// digit per point. Throws Error(kParseError) on malformed input.
  static Permutation parse(std::string_view text, std::uint32_t degree);

  std::uint32_t degree() const noexcept {
    return static_cast<std::uint32_t>(images_.size());
  }
  /// Zero-based image of a zero-based point.
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// +1 for even, -1 for odd permutations.
  int sign() const;

  /// Canonical cycle notation: each cycle starts at its smallest point,
  /// cycles ordered by that point, fixed points omitted, identity "e".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace lgroup

#endif  // LGROUP_PERMUTATION_HPP_
