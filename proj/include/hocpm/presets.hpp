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

#include <string>
#include <utility>
#include <vector>

#include "hocpm/cpm.hpp"

namespace hocpm {

/**
 * Named actions:
 *   z2-conj-gaussian          Z2 acting by conjugation on the Gaussian rationals
 *   z2xz2-double-dilation     Z2 x Z2, both factors by conjugation
 *   z2xz2-double-mixing       same action as above
 *   zk-frobenius-gf(p^k)      Z_k acting on GF(p^k) through Frobenius
 *   trivial-boolean           trivial group on the Boolean semiring
 * plus trivial-<semiring> for any semiring preset name.
 **/
GroupAction action_preset(const std::string& name);
std::vector<std::string> action_preset_names();

/** boolean, natural, rational, gaussian, split-complex, gf(p^k) (also gf(q) for q = p^k). */
SemiringDescriptor semiring_preset(const std::string& name);

/**
 * Named environment structures over an action: standard-trace, caps,
 * double-dilation, double-mixing, trivial.
 **/
EnvStructure env_preset(const std::string& name, const GroupAction& action);
/** Environment that goes with an action preset (double dilation/mixing or standard trace). */
std::string default_env_for(const std::string& action_preset);

/** The action used throughout the law suites, labelled. */
std::vector<std::pair<std::string, GroupAction>> default_action_matrix();

/** Commuting pairs from the preset list used for the algebra law. */
std::vector<std::pair<std::string, std::pair<GroupAction, GroupAction>>> preset_action_pairs();

}  // namespace hocpm
