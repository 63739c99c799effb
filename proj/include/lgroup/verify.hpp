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

#ifndef LGROUP_VERIFY_HPP_
#define LGROUP_VERIFY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lgroup/group.hpp"
#include "lgroup/lsubset.hpp"

namespace lgroup::verify {

enum class LatticeKind { kChain, kAny };

struct Bounds {
  std::size_t max_group_order = 16;   // at most 24
  std::size_t max_lattice_size = 8;   // at most 10
  LatticeKind lattice_kind = LatticeKind::kAny;
};

/// A parent L-group mu with an L-subgroup eta of it and some L-points of mu.
struct Instance {
  std::uint64_t seed = 0;
  std::string descriptor;
  LatticePtr lattice;
  GroupPtr group;
  LSubset mu;
  LSubset eta;
  std::optional<LSubset> nu;
  std::vector<LPoint> points;
  std::optional<GroupHom> hom;  // from `group`
};

/// Deterministic in (seed, bounds). Throws kBoundsExceeded.
// Throws kBoundsExceeded when the bounds are outside the supported caps.
void check_bounds(const Bounds& bounds);

Instance gen_instance(std::uint64_t seed, const Bounds& bounds = {});

enum class Verdict { kPass, kFail, kSkip };

struct Report {
  std::string suite;
  std::string instance;
  Verdict verdict = Verdict::kPass;
  std::string detail;  // failure description or skip reason
  std::map<std::string, std::string> witness;
  double elapsed_ms = 0;
};

struct RunOptions {
  // When false, suites run even where their lattice hypotheses
  // (distributive, chain) fail instead of reporting a skip.
  bool enforce_hypotheses = true;
  unsigned jobs = 1;
  std::uint64_t maximal_search_cap = 200'000;
};

/// Registered suite ids, in registry order.
const std::vector<std::string>& suite_ids();
bool is_registered(std::string_view suite);
/// One line describing what the suite checks.
std::string_view suite_description(std::string_view suite);

/// Throws kUnknownSuite.
Report run_check(std::string_view suite, const Instance& instance,
                 const RunOptions& options = {});
/// Reports follow input order regardless of `options.jobs`.
std::vector<Report> run_suite(std::string_view suite, std::span<const Instance> instances,
                              const RunOptions& options = {});

bool any_failed(std::span<const Report> reports);
std::string_view verdict_name(Verdict v);
/// JSON array of report objects with sorted keys; timings only on request so
/// that identical runs produce identical bytes.
std::string reports_to_json(std::span<const Report> reports, bool include_timing = false);

}  // namespace lgroup::verify

#endif  // LGROUP_VERIFY_HPP_
