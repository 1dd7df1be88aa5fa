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


// cpm: command-line front end to the hocpm library.
//
// Exit codes: 0 when every reported law holds, 1 on a law failure,
// 2 on usage, parse or input errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hocpm/presets.hpp"
#include "hocpm/serialize.hpp"
#include "hocpm/suite.hpp"
#include "hocpm/theory.hpp"

using namespace hocpm;

namespace {

constexpr int kLawFailure = 1;
constexpr int kUsage = 2;

struct Globals {
  std::vector<std::string> actions;
  std::vector<std::string> envs;
  std::string semiring;
  std::size_t max_dim = 3;
  std::uint64_t seed = 7;
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// "[[a,b],[c,d]]" with entries in the exact string form of the semiring.
Matrix parse_literal(SemiringDescriptor sr, const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s += c;
  }
  if (s.size() < 4 || s.compare(0, 2, "[[") != 0 || s.compare(s.size() - 2, 2, "]]") != 0) {
    throw ParseError("matrix literal must look like [[a,b],[c,d]]: '" + text + "'");
  }
  const std::string inner = s.substr(2, s.size() - 4);
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  while (true) {
    const auto end = inner.find("],[", start);
    const std::string row = inner.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::vector<std::string> cells;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) cells.push_back(cell);
    if (!row.empty() && row.back() == ',') cells.push_back("");
    rows.push_back(cells);
    if (end == std::string::npos) break;
    start = end + 3;
  }
  const std::size_t cols = rows.front().size();
  std::vector<SemiringValue> values;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols || cols == 0) {
      throw ParseError("matrix literal row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      try {
        values.push_back(SemiringValue::parse(sr, rows[i][j]));
      } catch (const Error& e) {
        throw ParseError("matrix literal entry (" + std::to_string(i) + "," + std::to_string(j) + "): " + e.what());
      }
    }
  }
  return Matrix(sr, rows.size(), cols, std::move(values));
}

json load_json(const std::string& arg) {
  const std::string t = trim(arg);
  if (!t.empty() && t.front() == '{') return parse_json(t);
  try {
    return parse_json(read_file(arg));
  } catch (const ParseError& e) {
    throw ParseError(arg + ": " + e.what());
  }
}

// A file path, a JSON object, or a literal [[...]].
Matrix load_matrix(const std::string& arg, SemiringDescriptor sr) {
  const std::string t = trim(arg);
  if (!looks_like_file(arg) && !t.empty() && t.front() == '[') return parse_literal(sr, t);
  const json j = load_json(arg);
  if (j.is_array()) return parse_literal(sr, j.dump());
  return matrix_from_json(j, &sr);
}

// The verifier reports broken explicit generators instead of refusing them.
void mark_unchecked(json& j) {
  if (!j.is_object()) return;
  if (j.value("rule", "") == "explicit" && !j.contains("check")) j["check"] = false;
  for (const char* side : {"left", "right"}) {
    if (j.contains(side)) mark_unchecked(j[side]);
  }
}

struct Context {
  std::string action_label;
  GroupAction action;
  SemiringDescriptor semiring;
};

std::pair<std::string, GroupAction> resolve_one_action(const std::string& arg) {
  if (looks_like_file(arg) || trim(arg).rfind('{', 0) == 0) return {arg, action_from_json(load_json(arg))};
  return {arg, action_preset(arg)};
}

Context resolve_context(const Globals& g) {
  if (g.actions.size() > 1) throw ParseError("this command takes a single --action");
  std::optional<SemiringDescriptor> sr;
  if (!g.semiring.empty()) sr = semiring_preset(g.semiring);
  if (g.actions.empty()) {
    if (sr) return {"trivial-" + g.semiring, GroupAction::trivial(*sr), *sr};
    return {"z2-conj-gaussian", action_preset("z2-conj-gaussian"), SemiringDescriptor::gaussian_rational()};
  }
  auto [label, action] = resolve_one_action(g.actions.front());
  if (sr && !(*sr == action.semiring())) {
    throw ParseError("--semiring " + g.semiring + " does not match the action over " + action.semiring().name());
  }
  return {label, action, action.semiring()};
}

std::pair<std::string, EnvStructure> resolve_one_env(const std::string& arg, const GroupAction& action, bool unchecked) {
  if (looks_like_file(arg) || trim(arg).rfind('{', 0) == 0) {
    json j = load_json(arg);
    if (unchecked) mark_unchecked(j);
    return {arg, env_from_json(j)};
  }
  return {arg, env_preset(arg, action)};
}

EnvStructure resolve_env(const Globals& g, const Context& ctx, bool unchecked = false) {
  if (g.envs.size() > 1) throw ParseError("this command takes a single --env");
  if (g.envs.empty()) return env_preset(default_env_for(ctx.action_label), ctx.action);
  return resolve_one_env(g.envs.front(), ctx.action, unchecked).second;
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

std::string render_value_or_matrix(const Matrix& m) {
  if (m.rows() == 1 && m.cols() == 1) return m(0, 0).to_string();
  return m.compact();
}

std::size_t unfold_or_throw(const FoldContext& fc, std::size_t N, const char* what) {
  const auto n = unfold_object(fc, N);
  if (!n) {
    throw NotAFoldedShapeError(std::string(what) + " dimension " + std::to_string(N) + " is not an n^" +
                               std::to_string(fc.legs()));
  }
  return *n;
}

// ---------------------------------------------------------------------------

int cmd_describe(const Globals& g, std::size_t dim) {
  const Context c = resolve_context(g);
  const EnvStructure env = resolve_env(g, c);
  const FoldContext fc(c.action);
  json j;
  json a = action_to_json(c.action);
  a["group_order"] = c.action.group().size();
  json elements = json::array();
  for (const auto& gamma : fc.order()) {
    elements.push_back({{"gamma", gamma.to_string()},
                        {"automorphism", normalize(c.action.automorphism(gamma), c.semiring).to_string()}});
  }
  a["elements"] = elements;
  j["action"] = a;

  json e;
  e["rule"] = to_string(env.rule());
  e["summary"] = env.describe();
  json gens = json::array();
  for (const auto& xi : env.generators(dim)) gens.push_back(shape(xi));
  e["dim"] = dim;
  e["generator_shapes"] = gens;
  j["env"] = e;

  json objects = json::array();
  for (std::size_t n = 1; n <= g.max_dim; ++n) objects.push_back({{"n", n}, {"folded", fold_object(fc, n)}});
  j["fold"] = {{"legs", fc.legs()}, {"objects", objects}};

  std::ostringstream t;
  t << "action " << c.action_label << ": " << c.action.to_string() << "\n";
  t << "  semiring " << c.semiring.name() << ", group order " << c.action.group().size() << "\n";
  for (const auto& el : elements) {
    t << "  " << el["gamma"].get<std::string>() << " -> " << el["automorphism"].get<std::string>() << "\n";
  }
  t << "env " << env.describe() << "\n";
  t << "  generators at " << dim << ":";
  for (const auto& s : gens) t << " " << s.get<std::string>();
  t << "\nfold legs " << fc.legs() << ":";
  for (const auto& o : objects) t << " " << o["n"].get<std::size_t>() << "->" << o["folded"].get<std::size_t>();
  t << "\n";
  emit(g, j, t.str());
  return 0;
}

int cmd_suite(const Globals& g, const std::string& name, std::size_t samples, bool only_env) {
  SuiteOptions o;
  o.seed = g.seed;
  o.max_dim = g.max_dim;
  o.samples = samples;
  for (const auto& a : g.actions) o.actions.push_back(resolve_one_action(a));
  const GroupAction env_action =
      o.actions.empty() ? action_preset("z2-conj-gaussian") : o.actions.front().second;
  for (const auto& e : g.envs) o.envs.push_back(resolve_one_env(e, env_action, true));
  o.only_given_envs = only_env;
  const SuiteReport r = run_suite(name, o);

  std::ostringstream t;
  for (const auto& e : r.entries) {
    t << (e.pass ? "PASS " : "FAIL ") << e.law << " [" << e.instance << "] " << e.checks << " checks\n";
    if (!e.pass) t << "  lhs: " << e.lhs << "\n  rhs: " << e.rhs << "\n";
  }
  t << r.suite << " seed " << r.seed << " max-dim " << r.max_dim << ": " << r.passed() << " passed, " << r.failed()
    << " failed\n";
  emit(g, suite_report_to_json(r), t.str());
  return r.ok() ? 0 : kLawFailure;
}

struct ComputeInputs {
  std::string matrix;
  std::string state;
  std::string test = "sharp";
  std::string gamma;
  std::size_t dim = 0;
};

TestFamily load_test(const FoldContext& fc, const std::string& test, std::size_t n) {
  if (test == "sharp") return TestFamily::sharp(fc, n);
  const json j = load_json(test);
  const json& list = j.is_object() && j.contains("effects") ? j.at("effects") : j;
  if (!list.is_array()) throw ParseError("a test is a list of effect matrices");
  std::vector<Matrix> effects;
  const SemiringDescriptor sr = fc.semiring();
  for (const auto& m : list) effects.push_back(matrix_from_json(m, &sr));
  return TestFamily(fc, n, std::move(effects));
}

json born_json(const BornReport& r) {
  json p = json::array();
  for (const auto& x : r.probabilities) p.push_back(value_to_json(x));
  return {{"probabilities", p}, {"normalized", r.normalized}};
}

std::string born_text(const BornReport& r) {
  std::ostringstream t;
  for (std::size_t i = 0; i < r.probabilities.size(); ++i) t << "p" << i << " = " << r.probabilities[i].to_string() << "\n";
  t << "total " << r.total.to_string() << (r.normalized ? " (normalized)" : " (not normalized)") << "\n";
  return t.str();
}

std::size_t require_dim(const ComputeInputs& in) {
  if (in.dim == 0) throw ParseError("--dim is required");
  return in.dim;
}

int run_compute(const Globals& g, const std::string& op, const ComputeInputs& in, const Context& c) {
  const FoldContext fc(c.action);
  if (op == "fold" || op == "fold_morphism") {
    if (in.matrix.empty()) throw ParseError("fold needs --matrix");
    const Matrix F = fold_morphism(fc, load_matrix(in.matrix, c.semiring));
    emit(g, matrix_to_json(F), render_value_or_matrix(F) + "\n");
    return 0;
  }
  if (op == "fold-object" || op == "fold_object") {
    const std::size_t n = require_dim(in);
    const std::size_t N = fold_object(fc, n);
    emit(g, json{{"n", n}, {"folded", N}}, std::to_string(N) + "\n");
    return 0;
  }
  if (op == "discard" || op == "discard_effect") {
    const Matrix d = discard_effect(fc, require_dim(in));
    emit(g, matrix_to_json(d), render_value_or_matrix(d) + "\n");
    return 0;
  }
  if (op == "decoherence") {
    const Matrix d = decoherence(fc, require_dim(in)).matrix;
    emit(g, matrix_to_json(d), render_value_or_matrix(d) + "\n");
    return 0;
  }
  if (op == "tau") {
    const GroupElement gamma = c.action.group().parse_element(in.gamma);
    const Matrix t = tau(fc, require_dim(in), gamma);
    emit(g, matrix_to_json(t), render_value_or_matrix(t) + "\n");
    return 0;
  }
  if (op == "born") {
    if (in.state.empty()) throw ParseError("born needs --state");
    const Matrix psi = load_matrix(in.state, c.semiring);
    const BornReport r = born_report(fc, load_test(fc, in.test, psi.rows()), psi);
    emit(g, born_json(r), born_text(r));
    return 0;
  }
  throw ParseError("unknown compute op '" + op + "' (fold, fold-object, discard, decoherence, tau, born)");
}

int cmd_compute(const Globals& g, std::string op, ComputeInputs in, const std::string& request) {
  Context c = resolve_context(g);
  if (!request.empty()) {
    const json r = load_json(request);
    if (!r.is_object()) throw ParseError("a request is a JSON object");
    if (r.contains("op")) op = r.at("op").get<std::string>();
    if (r.contains("action")) {
      c.action = action_from_json(r.at("action"));
      c.semiring = c.action.semiring();
      c.action_label = "request";
    }
    if (r.contains("matrix")) in.matrix = r.at("matrix").dump();
    if (r.contains("state")) in.state = r.at("state").dump();
    if (r.contains("dim")) in.dim = r.at("dim").get<std::size_t>();
    if (r.contains("gamma")) in.gamma = r.at("gamma").get<std::string>();
    if (r.contains("test")) in.test = r.at("test").is_string() ? r.at("test").get<std::string>() : r.at("test").dump();
  }
  if (op.empty()) throw ParseError("compute needs an op");
  return run_compute(g, op, in, c);
}

int cmd_build_effect(const Globals& g, std::size_t dim) {
  const Context c = resolve_context(g);
  const EnvStructure env = resolve_env(g, c);
  json list = json::array();
  std::ostringstream t;
  t << env.describe() << " at " << dim << "\n";
  for (const auto& xi : env.effects(dim)) {
    list.push_back(matrix_to_json(xi));
    t << "  " << xi.compact() << "\n";
  }
  emit(g, json{{"env", env.describe()}, {"dim", dim}, {"folded", fold_object(env.context(), dim)}, {"effects", list}},
       t.str());
  return 0;
}

int cmd_verify_env(const Globals& g) {
  const Context c = resolve_context(g);
  const EnvStructure env = resolve_env(g, c, true);
  const auto report = verify_env_axioms(env, g.max_dim);
  bool ok = true;
  std::ostringstream t;
  for (const auto& e : report) {
    ok = ok && e.pass;
    t << (e.pass ? "PASS " : "FAIL ") << e.condition << " n=" << e.object << " gamma=" << e.gamma << "\n";
    if (!e.pass) t << "  lhs: " << e.lhs << "\n  rhs: " << e.rhs << "\n";
  }
  emit(g, env_report_to_json(report), t.str());
  return ok ? 0 : kLawFailure;
}

int cmd_check_invariance(const Globals& g, const std::string& matrix, std::size_t A, std::size_t B) {
  const Context c = resolve_context(g);
  const FoldContext fc(c.action);
  const Matrix M = load_matrix(matrix, c.semiring);
  if (A == 0) A = unfold_or_throw(fc, M.cols(), "input");
  if (B == 0) B = unfold_or_throw(fc, M.rows(), "output");
  const auto violation = g_invariance_violation(fc, M, A, B);
  json j{{"A", A}, {"B", B}, {"invariant", !violation}};
  j["violation"] = violation ? json(violation->to_string()) : json(nullptr);
  emit(g, j, violation ? "not invariant: fails at gamma " + violation->to_string() + "\n" : "invariant\n");
  return violation ? kLawFailure : 0;
}

int cmd_born(const Globals& g, const std::string& state, const std::string& test) {
  const Context c = resolve_context(g);
  const FoldContext fc(c.action);
  resolve_env(g, c);  // validates --env against the action
  const Matrix psi = load_matrix(state, c.semiring);
  const BornReport r = born_report(fc, load_test(fc, test, psi.rows()), psi);
  emit(g, born_json(r), born_text(r));
  return 0;
}

int cmd_round_trip(const Globals& g, const std::string& matrix, std::size_t bound) {
  const Context c = resolve_context(g);
  const EnvStructure env = resolve_env(g, c);
  const Matrix M = load_matrix(matrix, c.semiring);
  const CpmMorphism e = classical_embed(env, M, bound);
  const Matrix back = classical_extract(env.context(), e.realized, M.cols(), M.rows());
  const bool ok = back == M;
  json j{{"roundtrip", ok}, {"ancilla", e.E}, {"embedded", matrix_to_json(e.realized)}, {"extracted", matrix_to_json(back)}};
  std::ostringstream t;
  t << (ok ? "round-trip ok" : "round-trip FAILED") << ", ancilla " << e.E << "\n  extracted " << back.compact() << "\n";
  emit(g, j, t.str());
  return ok ? 0 : kLawFailure;
}

int cmd_extract(const Globals& g, const std::string& matrix) {
  const Context c = resolve_context(g);
  const FoldContext fc(c.action);
  const Matrix F = load_matrix(matrix, c.semiring);
  const std::size_t n = unfold_or_throw(fc, F.cols(), "input");
  const std::size_t m = unfold_or_throw(fc, F.rows(), "output");
  const Matrix M = classical_extract(fc, F, n, m);
  emit(g, matrix_to_json(M), M.compact() + "\n");
  return 0;
}

int cmd_scalars(const Globals& g, bool enumerate, const std::string& witness, std::size_t bound) {
  const Context c = resolve_context(g);
  const FoldContext fc(c.action);
  if (!witness.empty()) {
    const SemiringValue x = SemiringValue::parse(c.semiring, witness);
    const auto w = membership_witness(fc, x, bound);
    json j{{"value", x.to_string()}, {"found", w.has_value()}};
    std::ostringstream t;
    if (w) {
      json terms = json::array();
      t << x.to_string() << " =";
      for (std::size_t i = 0; i < w->size(); ++i) {
        terms.push_back((*w)[i].to_string());
        t << (i ? " + " : " ") << "||" << (*w)[i].to_string() << "||";
      }
      j["witness"] = terms;
      t << "\n";
    } else {
      j["witness"] = nullptr;
      t << "no witness found for " << x.to_string() << " with at most " << bound << " terms\n";
    }
    emit(g, j, t.str());
    return 0;
  }
  if (!enumerate) throw ParseError("scalars needs --enumerate or --witness");
  const auto scalars = enumerate_scalars(fc);
  json list = json::array();
  std::ostringstream t;
  t << c.semiring.name() << " under " << c.action.to_string() << ":";
  for (const auto& s : scalars) {
    list.push_back(s.to_string());
    t << " " << s.to_string();
  }
  t << "\n";
  emit(g, json{{"semiring", semiring_to_json(c.semiring)}, {"scalars", list}}, t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Higher-order CPM constructions over exact semirings"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--action", g.actions, "Action preset or JSON file (repeatable for suite)");
  app.add_option("--env", g.envs, "Environment preset or JSON file");
  app.add_option("--semiring", g.semiring, "Semiring preset for untagged inputs");
  app.add_option("--max-dim", g.max_dim, "Largest object checked")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized instances");
  app.add_flag("--json", g.json, "Machine-readable output");

  std::function<int()> run;

  std::size_t describe_dim = 2;
  auto* describe = app.add_subcommand("describe", "Render an action, environment and fold context");
  describe->add_option("--dim", describe_dim, "Object whose generators are listed")->check(CLI::PositiveNumber);
  describe->callback([&] { run = [&] { return cmd_describe(g, describe_dim); }; });

  std::string suite_name;
  std::size_t samples = 0;
  bool only_env = false;
  auto* suite = app.add_subcommand("suite", "Run a law suite");
  suite->add_option("name", suite_name, "smat-laws, fold-laws, env-axioms, cpm-invariance, monad-laws, theory-laws, all")
      ->required();
  suite->add_option("--samples", samples, "Random instances per law (0 keeps the defaults)");
  suite->add_flag("--only-env", only_env, "Check only the structures given with --env");
  suite->callback([&] { run = [&] { return cmd_suite(g, suite_name, samples, only_env); }; });

  std::string op, request;
  ComputeInputs in;
  auto* compute = app.add_subcommand("compute", "Evaluate one operation");
  compute->add_option("op", op, "fold, fold-object, discard, decoherence, tau, born");
  compute->add_option("--request", request, "JSON request file or object");
  compute->add_option("--matrix", in.matrix, "Matrix file, JSON object or literal [[...]]");
  compute->add_option("--state", in.state, "State (column matrix)");
  compute->add_option("--test", in.test, "sharp or a JSON list of effects");
  compute->add_option("--gamma", in.gamma, "Group element, e.g. (1)");
  compute->add_option("--dim", in.dim, "Object size");
  compute->callback([&] { run = [&] { return cmd_compute(g, op, in, request); }; });

  std::size_t effect_dim = 0;
  auto* build = app.add_subcommand("build-effect", "List the effects of an environment at one object");
  build->add_option("--dim", effect_dim, "Object size")->required()->check(CLI::PositiveNumber);
  build->callback([&] { run = [&] { return cmd_build_effect(g, effect_dim); }; });

  auto* verify = app.add_subcommand("verify-env", "Check the environment axioms up to --max-dim");
  verify->callback([&] { run = [&] { return cmd_verify_env(g); }; });

  std::string inv_matrix;
  std::size_t inv_a = 0, inv_b = 0;
  auto* inv = app.add_subcommand("check-invariance", "Check a matrix between folded objects for G-invariance");
  inv->add_option("--matrix", inv_matrix, "Matrix file, JSON object or literal")->required();
  inv->add_option("--from", inv_a, "Unfolded input object (inferred by default)");
  inv->add_option("--to", inv_b, "Unfolded output object (inferred by default)");
  inv->callback([&] { run = [&] { return cmd_check_invariance(g, inv_matrix, inv_a, inv_b); }; });

  std::string born_state, born_test = "sharp";
  auto* born = app.add_subcommand("born", "Born probabilities of a test on a state");
  born->add_option("--state", born_state, "State (column matrix)")->required();
  born->add_option("--test", born_test, "sharp or a JSON list of effects");
  born->callback([&] { run = [&] { return cmd_born(g, born_state, born_test); }; });

  std::string cl_matrix;
  std::size_t cl_bound = 4;
  auto* classical = app.add_subcommand("classical", "Classical (Karoubi) embedding");
  classical->require_subcommand(1);
  classical->fallthrough();
  auto* rt = classical->add_subcommand("round-trip", "Embed an R-matrix and extract it again");
  rt->add_option("--matrix", cl_matrix, "Matrix over the semiring")->required();
  rt->add_option("--bound", cl_bound, "Witness terms per entry");
  rt->callback([&] { run = [&] { return cmd_round_trip(g, cl_matrix, cl_bound); }; });
  auto* ex = classical->add_subcommand("extract", "Read the R-matrix off a classical folded morphism");
  ex->add_option("--matrix", cl_matrix, "Folded matrix")->required();
  ex->callback([&] { run = [&] { return cmd_extract(g, cl_matrix); }; });

  bool enumerate = false;
  std::string witness;
  std::size_t w_bound = 4;
  auto* scalars = app.add_subcommand("scalars", "The scalar sub-semiring of norms");
  scalars->add_flag("--enumerate", enumerate, "List every scalar (finite semirings)");
  scalars->add_option("--witness", witness, "Search x = sum of norms");
  scalars->add_option("--bound", w_bound, "Terms allowed in a witness");
  scalars->callback([&] { run = [&] { return cmd_scalars(g, enumerate, witness, w_bound); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    return run();
  } catch (const EnvAxiomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLawFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
