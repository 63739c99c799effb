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

#include "lgroup/permutation.hpp"

#include <cctype>
#include <numeric>

#include "lgroup/error.hpp"

namespace lgroup {

namespace {

[[noreturn]] void bad_literal(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::kParseError,
              "bad permutation '" + std::string(text) + "': " + why);
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::uint32_t degree) {
  Permutation result = identity(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_space();
  if (pos < text.size() && text[pos] == 'e') {
    ++pos;
    skip_space();
    if (pos != text.size()) bad_literal(text, "trailing characters after 'e'");
    return result;
  }
  if (pos == text.size()) bad_literal(text, "empty literal");

  std::vector<bool> seen(degree, false);
  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') bad_literal(text, "expected '('");
    ++pos;
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) bad_literal(text, "unbalanced '('");
    const std::string_view body = text.substr(pos, close - pos);
    pos = close + 1;

    std::vector<std::uint32_t> cycle;
    const bool packed = body.find_first_of(" ,") == std::string_view::npos;
    std::size_t i = 0;
    while (i < body.size()) {
      const char c = body[i];
      if (c == ' ' || c == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        bad_literal(text, "unexpected character");
      std::uint32_t value = 0;
      if (packed) {
        value = static_cast<std::uint32_t>(c - '0');
        ++i;
      } else {
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
          value = value * 10 + static_cast<std::uint32_t>(body[i++] - '0');
      }
      if (value < 1 || value > degree)
        bad_literal(text, "point " + std::to_string(value) + " outside 1.." +
                              std::to_string(degree));
      cycle.push_back(value - 1);
    }
    for (std::uint32_t p : cycle) {
      if (seen[p]) bad_literal(text, "point repeated across cycles");
      seen[p] = true;
    }
    // Cycles are disjoint, so applying them in order is the product.
    for (std::size_t k = 0; k < cycle.size(); ++k)
      result.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int s = 1;
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorCode::kInvalidArgument, "permutation degrees differ");
  std::vector<std::uint32_t> images(p.degree());
  for (std::uint32_t i = 0; i < images.size(); ++i) images[i] = p(q(i));
  return Permutation(std::move(images));
}

}  // namespace lgroup
