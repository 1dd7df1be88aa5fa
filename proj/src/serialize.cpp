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

#include "hocpm/serialize.hpp"

namespace hocpm {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + what + "' has the wrong type");
  }
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json semiring_to_json(SemiringDescriptor sr) {
  json j;
  j["kind"] = sr.kind() == SemiringKind::FiniteField ? "finite_field" : sr.name();
  if (sr.kind() == SemiringKind::FiniteField) {
    j["p"] = sr.characteristic();
    j["k"] = sr.degree();
    j["modulus"] = sr.modulus();
  }
  return j;
}

SemiringDescriptor semiring_from_json(const json& j) {
  const auto kind = get_as<std::string>(field(j, "kind"), "kind");
  if (kind == "boolean") return SemiringDescriptor::boolean();
  if (kind == "natural") return SemiringDescriptor::natural();
  if (kind == "rational") return SemiringDescriptor::rational();
  if (kind == "gaussian_rational") return SemiringDescriptor::gaussian_rational();
  if (kind == "split_complex_rational") return SemiringDescriptor::split_complex_rational();
  if (kind == "finite_field") {
    const auto p = get_as<std::uint32_t>(field(j, "p"), "p");
    const auto k = get_as<std::uint32_t>(field(j, "k"), "k");
    if (j.contains("modulus")) {
      return SemiringDescriptor::finite_field(p, k, get_as<std::vector<std::uint32_t>>(j.at("modulus"), "modulus"));
    }
    return SemiringDescriptor::finite_field(p, k);
  }
  throw ParseError("unknown semiring kind '" + kind + "'");
}

json value_to_json(const SemiringValue& x) { return x.to_string(); }

SemiringValue value_from_json(SemiringDescriptor sr, const json& j) {
  if (j.is_string()) return SemiringValue::parse(sr, j.get<std::string>());
  if (j.is_boolean() && sr.kind() == SemiringKind::Boolean) return SemiringValue::boolean(sr, j.get<bool>());
  if (j.is_number_integer()) return SemiringValue::parse(sr, std::to_string(j.get<long>()));
  throw ParseError("semiring values must be strings");
}

json action_to_json(const GroupAction& action) {
  json j;
  j["orders"] = action.group().orders();
  json images = json::array();
  for (const auto& a : action.generator_images()) images.push_back(a.to_string());
  j["generator_images"] = images;
  j["semiring"] = semiring_to_json(action.semiring());
  return j;
}

GroupAction action_from_json(const json& j) {
  const auto orders = get_as<std::vector<std::uint32_t>>(field(j, "orders"), "orders");
  std::vector<Automorphism> images;
  for (const auto& s : field(j, "generator_images")) images.push_back(Automorphism::parse(get_as<std::string>(s, "generator_images")));
  return GroupAction(orders, semiring_from_json(field(j, "semiring")), images);
}

json matrix_to_json(const Matrix& m) {
  json j;
  j["semiring"] = semiring_to_json(m.semiring());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (const auto& v : m.entries()) entries.push_back(v.to_string());
  j["entries"] = entries;
  return j;
}

Matrix matrix_from_json(const json& j, const SemiringDescriptor* fallback) {
  SemiringDescriptor sr = (j.is_object() && j.contains("semiring")) || !fallback ? semiring_from_json(field(j, "semiring"))
                                                                                  : *fallback;
  const auto rows = get_as<std::size_t>(field(j, "rows"), "rows");
  const auto cols = get_as<std::size_t>(field(j, "cols"), "cols");
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw ParseError("matrix needs rows*cols = " + std::to_string(rows * cols) + " entries");
  }
  std::vector<SemiringValue> values;
  for (const auto& e : entries) values.push_back(value_from_json(sr, e));
  return Matrix(sr, rows, cols, std::move(values));
}

json env_to_json(const EnvStructure& env) {
  json j;
  j["rule"] = to_string(env.rule());
  switch (env.rule()) {
    case EnvRule::StandardTrace:
      j["action"] = action_to_json(env.action());
      break;
    case EnvRule::Caps:
      j["action"] = action_to_json(env.action());
      j["levels"] = env.levels();
      break;
    case EnvRule::Explicit: {
      j["action"] = action_to_json(env.action());
      json gens = json::object();
      for (const auto& [n, list] : env.explicit_map()) {
        json arr = json::array();
        for (const auto& xi : list) arr.push_back(matrix_to_json(xi));
        gens[std::to_string(n)] = arr;
      }
      j["generators"] = gens;
      break;
    }
    case EnvRule::Product:
    case EnvRule::Join:
      j["left"] = env_to_json(env.left());
      j["right"] = env_to_json(env.right());
      break;
  }
  return j;
}

EnvStructure env_from_json(const json& j) {
  const auto rule = get_as<std::string>(field(j, "rule"), "rule");
  if (rule == "standard_trace") return EnvStructure::standard_trace(action_from_json(field(j, "action")));
  if (rule == "caps") {
    const GroupAction action = action_from_json(field(j, "action"));
    const std::size_t levels = j.contains("levels") ? get_as<std::size_t>(j.at("levels"), "levels") : action.group().rank();
    return EnvStructure::caps(action, levels);
  }
  if (rule == "explicit") {
    const GroupAction action = action_from_json(field(j, "action"));
    const SemiringDescriptor sr = action.semiring();
    std::map<std::size_t, std::vector<Matrix>> gens;
    if (j.contains("generators")) {
      const json& g = j.at("generators");
      if (!g.is_object()) throw ParseError("'generators' must map objects to effect lists");
      for (const auto& [key, list] : g.items()) {
        std::size_t n;
        try {
          n = std::stoul(key);
        } catch (const std::exception&) {
          throw ParseError("generator key '" + key + "' is not an object");
        }
        for (const auto& m : list) gens[n].push_back(matrix_from_json(m, &sr));
      }
    }
    const bool check = !j.contains("check") || get_as<bool>(j.at("check"), "check");
    return check ? EnvStructure::explicit_generators(action, std::move(gens))
                 : EnvStructure::explicit_generators_unchecked(action, std::move(gens));
  }
  if (rule == "product") return env_product(env_from_json(field(j, "left")), env_from_json(field(j, "right")));
  if (rule == "join") return EnvStructure::join(env_from_json(field(j, "left")), env_from_json(field(j, "right")));
  if (rule == "trivial") return EnvStructure::trivial(semiring_from_json(field(j, "semiring")));
  throw ParseError("unknown environment rule '" + rule + "'");
}

json env_report_to_json(const std::vector<EnvReportEntry>& report) {
  json arr = json::array();
  for (const auto& e : report) {
    json j;
    j["condition"] = e.condition;
    j["object"] = e.object;
    j["gamma"] = e.gamma;
    j["pass"] = e.pass;
    if (!e.pass) {
      j["lhs"] = e.lhs;
      j["rhs"] = e.rhs;
    }
    arr.push_back(j);
  }
  return arr;
}

}  // namespace hocpm
