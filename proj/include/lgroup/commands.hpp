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

#ifndef LGROUP_COMMANDS_HPP_
#define LGROUP_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "lgroup/verify.hpp"
#include "lgroup/workspace.hpp"

namespace lgroup::commands {

enum class Format { kTable, kJson };

// Text for standard output plus whether the requested check held. Commands
// that only compute something always report ok.
struct Output {
  std::string text;
  bool ok = true;
};

Output validate(const Workspace& ws, Format fmt);
Output eval(const Workspace& ws, const std::string& subject, const std::string& element,
            Format fmt);
Output level(const Workspace& ws, const std::string& subject, const std::string& value,
             Format fmt);
Output product(const Workspace& ws, const std::string& left, const std::string& right,
               Format fmt);

struct ConjugateRequest {
  std::string subject;
  std::optional<std::string> point;      // name or value@element
  std::optional<std::string> by_subset;  // L-subset used as conjugator
  std::optional<std::string> ambient;    // checks the point lies in it
};
Output conjugate(const Workspace& ws, const ConjugateRequest& req, Format fmt);

Output generated(const Workspace& ws, const std::string& subject, const std::string& ambient,
                 Format fmt);
Output is_normal(const Workspace& ws, const std::string& subject, const std::string& ambient,
                 Format fmt);

enum class NormalizerMethod { kSetProduct, kConjugacy, kBoth };
Output normalizer(const Workspace& ws, const std::string& subject, const std::string& ambient,
                  NormalizerMethod method, Format fmt);

Output is_maximal(const Workspace& ws, const std::string& subject, const std::string& ambient,
                  std::uint64_t cap, Format fmt);

struct VerifyRequest {
  std::string suite = "all";
  std::uint64_t seeds = 100;
  std::uint64_t seed_base = 0;
  verify::Bounds bounds;
  verify::RunOptions options;
  bool include_timing = false;
};
Output run_verify(const VerifyRequest& req, Format fmt);

}  // namespace lgroup::commands

#endif  // LGROUP_COMMANDS_HPP_
