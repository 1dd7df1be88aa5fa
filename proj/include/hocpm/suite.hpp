// Copyright 2026 The hocpm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hocpm/serialize.hpp"

namespace hocpm {

/** One law checked on one instance family (usually one action). */
struct SuiteEntry {
  std::string law;
  std::string instance;
  std::size_t checks = 0;
  bool pass = true;
  std::string lhs;  // first failure only
  std::string rhs;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t max_dim = 3;
  /** Labelled actions; empty means default_action_matrix(). */
  std::vector<std::pair<std::string, GroupAction>> actions;
  /** Extra labelled structures checked by env-axioms and cpm-invariance. */
  std::vector<std::pair<std::string, EnvStructure>> envs;
  /** Skip the built-in structures and check only envs. */
  bool only_given_envs = false;
  /** Random instances per law and action; 0 keeps each suite's default. */
  std::size_t samples = 0;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t max_dim = 0;
  std::vector<SuiteEntry> entries;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

/** smat-laws, fold-laws, env-axioms, cpm-invariance, monad-laws, theory-laws, all. */
std::vector<std::string> suite_names();

/** Throws ParseError for an unknown suite name. */
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

json suite_report_to_json(const SuiteReport& report);

}  // namespace hocpm
