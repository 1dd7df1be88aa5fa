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

#include "hocpm/presets.hpp"

#include <regex>

namespace hocpm {

namespace {

GroupAction z2_conj(SemiringDescriptor sr) { return GroupAction({2}, sr, {Automorphism::involution()}); }

GroupAction frobenius_action(std::uint32_t p, std::uint32_t k) {
  return GroupAction({k}, SemiringDescriptor::finite_field(p, k), {Automorphism::frobenius_power(1)});
}

}  // namespace

SemiringDescriptor semiring_preset(const std::string& name) {
  if (name == "boolean") return SemiringDescriptor::boolean();
  if (name == "natural") return SemiringDescriptor::natural();
  if (name == "rational") return SemiringDescriptor::rational();
  if (name == "gaussian" || name == "gaussian_rational" || name == "gaussian-rational") {
    return SemiringDescriptor::gaussian_rational();
  }
  if (name == "split-complex" || name == "split_complex_rational" || name == "split-complex-rational") {
    return SemiringDescriptor::split_complex_rational();
  }
  std::smatch m;
  static const std::regex power(R"(gf\((\d+)\^(\d+)\))");
  static const std::regex order(R"(gf\((\d+)\))");
  if (std::regex_match(name, m, power)) {
    return SemiringDescriptor::finite_field(static_cast<std::uint32_t>(std::stoul(m[1])),
                                            static_cast<std::uint32_t>(std::stoul(m[2])));
  }
  if (std::regex_match(name, m, order)) {
    const std::uint32_t q = static_cast<std::uint32_t>(std::stoul(m[1]));
    for (std::uint32_t p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      std::uint32_t k = 0, r = q;
      while (r % p == 0) {
        r /= p;
        ++k;
      }
      if (r != 1) break;
      return SemiringDescriptor::finite_field(p, k);
    }
    throw InvalidSemiringError(name + ": order is not a prime power");
  }
  throw ParseError("unknown semiring preset '" + name + "'");
}

GroupAction action_preset(const std::string& name) {
  const auto gaussian = SemiringDescriptor::gaussian_rational();
  if (name == "z2-conj-gaussian") return z2_conj(gaussian);
  if (name == "z2xz2-double-dilation" || name == "z2xz2-double-mixing") {
    return action_product(z2_conj(gaussian), z2_conj(gaussian));
  }
  if (name == "trivial-boolean") return GroupAction::trivial(SemiringDescriptor::boolean());
  std::smatch m;
  static const std::regex frob(R"(zk-frobenius-gf\((\d+)\^(\d+)\))");
  if (std::regex_match(name, m, frob)) {
    return frobenius_action(static_cast<std::uint32_t>(std::stoul(m[1])), static_cast<std::uint32_t>(std::stoul(m[2])));
  }
  if (name.rfind("trivial-", 0) == 0) return GroupAction::trivial(semiring_preset(name.substr(8)));
  throw ParseError("unknown action preset '" + name + "'");
}

std::vector<std::string> action_preset_names() {
  return {"z2-conj-gaussian", "z2xz2-double-dilation", "z2xz2-double-mixing", "zk-frobenius-gf(2^2)",
          "zk-frobenius-gf(2^3)", "zk-frobenius-gf(3^2)", "zk-frobenius-gf(2^4)", "trivial-boolean"};
}

std::string default_env_for(const std::string& action_preset) {
  if (action_preset == "z2xz2-double-dilation") return "double-dilation";
  if (action_preset == "z2xz2-double-mixing") return "double-mixing";
  return "standard-trace";
}

EnvStructure env_preset(const std::string& name, const GroupAction& action) {
  if (name == "standard-trace" || name == "standard_trace" || name == "trace") return EnvStructure::standard_trace(action);
  if (name == "caps") return EnvStructure::caps(action, action.group().rank());
  if (name == "trivial") return EnvStructure::trivial(action.semiring());
  if (name == "double-dilation" || name == "double-mixing") {
    const auto& orders = action.group().orders();
    if (orders != std::vector<std::uint32_t>{2, 2}) {
      throw InvalidEnvironmentError(name + " needs a Z2 x Z2 action, got " + action.to_string());
    }
    const GroupAction base = z2_conj(action.semiring());
    if (!(action_product(base, base) == action)) {
      throw InvalidEnvironmentError(name + " needs both factors acting by the involution");
    }
    if (name == "double-dilation") return env_product(EnvStructure::caps(base, 1), EnvStructure::caps(base, 1));
    return double_mixing(base, base);
  }
  throw ParseError("unknown environment preset '" + name + "'");
}

std::vector<std::pair<std::string, GroupAction>> default_action_matrix() {
  const auto B = SemiringDescriptor::boolean();
  const auto N = SemiringDescriptor::natural();
  const auto Q = SemiringDescriptor::rational();
  const auto C = SemiringDescriptor::gaussian_rational();
  const auto S = SemiringDescriptor::split_complex_rational();
  std::vector<std::pair<std::string, GroupAction>> out;
  out.emplace_back("trivial-boolean", GroupAction::trivial(B));
  out.emplace_back("trivial-natural", GroupAction::trivial(N));
  out.emplace_back("z2-identity-natural", GroupAction({2}, N, {Automorphism::identity()}));
  out.emplace_back("trivial-rational", GroupAction::trivial(Q));
  out.emplace_back("z3-identity-rational", GroupAction({3}, Q, {Automorphism::identity()}));
  out.emplace_back("z2-conj-gaussian", z2_conj(C));
  out.emplace_back("z2xz2-conj-gaussian", action_product(z2_conj(C), z2_conj(C)));
  out.emplace_back("z4-conj-gaussian", GroupAction({4}, C, {Automorphism::involution()}));
  out.emplace_back("z2-conj-split-complex", z2_conj(S));
  out.emplace_back("zk-frobenius-gf(2^2)", frobenius_action(2, 2));
  out.emplace_back("zk-frobenius-gf(2^3)", frobenius_action(2, 3));
  out.emplace_back("zk-frobenius-gf(2^4)", frobenius_action(2, 4));
  out.emplace_back("zk-frobenius-gf(3^2)", frobenius_action(3, 2));
  out.emplace_back("trivial-gf(5)", GroupAction::trivial(SemiringDescriptor::finite_field(5, 1)));
  return out;
}

std::vector<std::pair<std::string, std::pair<GroupAction, GroupAction>>> preset_action_pairs() {
  std::vector<std::pair<std::string, std::pair<GroupAction, GroupAction>>> out;
  auto add = [&out](const std::string& a, const std::string& b) {
    out.push_back({a + " ⊙ " + b, {action_preset(a), action_preset(b)}});
  };
  add("z2-conj-gaussian", "z2-conj-gaussian");
  add("z2-conj-gaussian", "z2xz2-double-dilation");
  add("z2xz2-double-dilation", "z2-conj-gaussian");
  add("zk-frobenius-gf(2^2)", "zk-frobenius-gf(2^2)");
  add("zk-frobenius-gf(3^2)", "zk-frobenius-gf(3^2)");
  add("zk-frobenius-gf(2^3)", "zk-frobenius-gf(2^3)");
  add("trivial-boolean", "trivial-boolean");
  out.push_back({"trivial-gaussian ⊙ z2-conj-gaussian",
                 {GroupAction::trivial(SemiringDescriptor::gaussian_rational()), action_preset("z2-conj-gaussian")}});
  return out;
}

}  // namespace hocpm
