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

// Command-line front end. Talks to the engine only through the C interface.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lgroup/lgroup.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct WorkspaceDeleter {
  void operator()(lg_workspace* ws) const { lg_workspace_free(ws); }
};
using WorkspaceHandle = std::unique_ptr<lg_workspace, WorkspaceDeleter>;

int report_error(lg_status status) {
  std::cerr << "error: " << lg_status_name(status) << ": " << lg_last_error() << "\n";
  return kExitUsage;
}

// Prints a command's output and maps its status to an exit code.
int finish(lg_status status, char* out) {
  if (out) {
    std::fputs(out, stdout);
    lg_string_free(out);
  }
  if (status == LG_OK) return kExitOk;
  if (status == LG_CHECK_FAILED) {
    std::cerr << "check failed\n";
    return kExitCheckFailed;
  }
  return report_error(status);
}

const char* opt(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugates and normalizers of L-subgroups over finite lattices"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "table";
  std::string subject;
  std::string ambient = "mu";
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--in", input, "Workspace JSON file")->required()->check(CLI::ExistingFile);
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
  };
  auto add_subject = [&](CLI::App* cmd) {
    cmd->add_option("--subject", subject, "Name of the L-subset to act on")->required();
  };
  auto add_ambient = [&](CLI::App* cmd) {
    cmd->add_option("--ambient", ambient, "Name of the ambient L-subgroup")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Check a workspace and its flagged predicates");
  add_input(validate);
  add_format(validate);

  std::string element, value, left, right;
  auto* eval = app.add_subcommand("eval", "Value of an L-subset at an element");
  add_input(eval);
  add_format(eval);
  add_subject(eval);
  eval->add_option("--element", element, "Group element")->required();

  auto* level = app.add_subcommand("level", "Level subset at a lattice value");
  add_input(level);
  add_format(level);
  add_subject(level);
  level->add_option("--value", value, "Lattice value")->required();

  auto* product = app.add_subcommand("product", "Set product of two L-subsets");
  add_input(product);
  add_format(product);
  product->add_option("--left", left, "Left factor")->required();
  product->add_option("--right", right, "Right factor")->required();

  std::optional<std::string> point, by_subset, conj_ambient;
  auto* conjugate = app.add_subcommand("conjugate", "Conjugate by an L-point or an L-subset");
  add_input(conjugate);
  add_format(conjugate);
  add_subject(conjugate);
  auto* point_opt =
      conjugate->add_option("--point", point, "Named point or value@element, e.g. d@(1 2 3)");
  auto* subset_opt = conjugate->add_option("--by-subset", by_subset, "Conjugating L-subset");
  point_opt->excludes(subset_opt);
  conjugate->add_option("--ambient", conj_ambient, "Require the point to lie in this L-subgroup");

  auto* generated = app.add_subcommand("generated", "L-subgroup of the ambient generated by an L-subset");
  add_input(generated);
  add_format(generated);
  add_subject(generated);
  add_ambient(generated);

  auto* is_normal = app.add_subcommand("is-normal", "Whether the subject is normal in the ambient");
  add_input(is_normal);
  add_format(is_normal);
  add_subject(is_normal);
  add_ambient(is_normal);

  std::string method = "setproduct";
  auto* normalizer = app.add_subcommand("normalizer", "Normalizer of the subject in the ambient");
  add_input(normalizer);
  add_format(normalizer);
  add_subject(normalizer);
  add_ambient(normalizer);
  normalizer->add_option("--method", method, "setproduct, conjugacy, or both (compares them)")
      ->check(CLI::IsMember({"setproduct", "conjugacy", "both"}))
      ->capture_default_str();

  lg_verify_options vopts;
  lg_verify_options_init(&vopts);
  std::uint64_t search_cap = 20'000'000;
  auto* is_maximal = app.add_subcommand("is-maximal", "Whether the subject is maximal in the ambient");
  add_input(is_maximal);
  add_format(is_maximal);
  add_subject(is_maximal);
  add_ambient(is_maximal);
  is_maximal->add_option("--search-cap", search_cap, "Limit on enumerated candidates")
      ->capture_default_str();

  std::string suite = "all";
  std::string lattice_kind = "any";
  bool no_enforce = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run property suites on seeded random instances");
  add_format(verify);
  verify->add_option("--suite", suite, "Suite id or all")->capture_default_str();
  verify->add_option("--seeds", vopts.seeds, "Number of instances")->capture_default_str();
  verify->add_option("--seed-base", vopts.seed_base, "First seed")->capture_default_str();
  verify->add_option("--max-group-order", vopts.max_group_order, "At most 24")
      ->capture_default_str();
  verify->add_option("--max-lattice-size", vopts.max_lattice_size, "At most 10")
      ->capture_default_str();
  verify->add_option("--lattice-kind", lattice_kind, "chain or any")
      ->check(CLI::IsMember({"chain", "any"}))
      ->capture_default_str();
  verify->add_option("--jobs", vopts.jobs, "Worker threads")->capture_default_str();
  verify->add_option("--search-cap", vopts.maximal_search_cap,
                     "Limit on candidates enumerated by maximality checks")
      ->capture_default_str();
  verify->add_flag("--no-enforce-hypotheses", no_enforce,
                   "Run suites even when their lattice hypotheses do not hold");
  verify->add_flag("--timing", timing, "Include per-report timings in JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const lg_format fmt = format == "json" ? LG_FORMAT_JSON : LG_FORMAT_TABLE;
  char* out = nullptr;

  if (verify->parsed()) {
    vopts.suite = suite.c_str();
    vopts.chains_only = lattice_kind == "chain";
    vopts.enforce_hypotheses = no_enforce ? 0 : 1;
    vopts.include_timing = timing ? 1 : 0;
    const lg_status status = lg_verify(&vopts, fmt, &out);
    return finish(status, out);
  }

  lg_workspace* raw = nullptr;
  if (lg_status s = lg_workspace_load(input.c_str(), &raw); s != LG_OK) return report_error(s);
  WorkspaceHandle ws(raw);

  lg_status status = LG_INVALID_ARGUMENT;
  if (validate->parsed()) {
    status = lg_validate(ws.get(), fmt, &out);
  } else if (eval->parsed()) {
    status = lg_eval(ws.get(), subject.c_str(), element.c_str(), fmt, &out);
  } else if (level->parsed()) {
    status = lg_level(ws.get(), subject.c_str(), value.c_str(), fmt, &out);
  } else if (product->parsed()) {
    status = lg_product(ws.get(), left.c_str(), right.c_str(), fmt, &out);
  } else if (conjugate->parsed()) {
    status = lg_conjugate(ws.get(), subject.c_str(), opt(point), opt(by_subset), opt(conj_ambient),
                          fmt, &out);
  } else if (generated->parsed()) {
    status = lg_generated(ws.get(), subject.c_str(), ambient.c_str(), fmt, &out);
  } else if (is_normal->parsed()) {
    status = lg_is_normal(ws.get(), subject.c_str(), ambient.c_str(), fmt, &out);
  } else if (normalizer->parsed()) {
    const lg_normalizer_method m = method == "both"        ? LG_NORMALIZER_BOTH
                                   : method == "conjugacy" ? LG_NORMALIZER_CONJUGACY
                                                           : LG_NORMALIZER_SETPRODUCT;
    status = lg_normalizer(ws.get(), subject.c_str(), ambient.c_str(), m, fmt, &out);
  } else if (is_maximal->parsed()) {
    status = lg_is_maximal(ws.get(), subject.c_str(), ambient.c_str(), search_cap, fmt, &out);
  }
  return finish(status, out);
}
