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

#include "hocpm/cpm.hpp"

#include <algorithm>
#include <mutex>

namespace hocpm {

std::string to_string(EnvRule rule) {
  switch (rule) {
    case EnvRule::StandardTrace: return "standard_trace";
    case EnvRule::Caps: return "caps";
    case EnvRule::Explicit: return "explicit";
    case EnvRule::Product: return "product";
    case EnvRule::Join: return "join";
  }
  return "?";
}

struct EnvStructure::Node {
  Node(EnvRule r, GroupAction a) : rule(r), action(a), ctx(std::move(a)) {}

  EnvRule rule;
  GroupAction action;
  FoldContext ctx;
  std::size_t levels = 0;
  std::map<std::size_t, std::vector<Matrix>> explicit_map;
  std::optional<EnvStructure> left;
  std::optional<EnvStructure> right;

  mutable std::recursive_mutex mutex;
  mutable std::map<std::size_t, std::vector<Matrix>> cache;
};

namespace {

void push_unique(std::vector<Matrix>& set, Matrix m) {
  if (std::find(set.begin(), set.end(), m) == set.end()) set.push_back(std::move(m));
}

GroupAction z2_involution(SemiringDescriptor sr) { return GroupAction({2}, sr, {Automorphism::involution()}); }

bool equivariant(const FoldContext& ctx, std::size_t n, const Matrix& xi, const GroupElement& gamma) {
  return entrywise_action(ctx.action(), gamma, xi) == compose(xi, transpose(tau(ctx, n, gamma)));
}

void check_effect_shape(const FoldContext& ctx, std::size_t n, const Matrix& xi) {
  if (xi.rows() != 1 || xi.cols() != fold_object(ctx, n)) {
    throw InvalidEnvironmentError(
        "effect at " + std::to_string(n) + " must be 1x" + std::to_string(fold_object(ctx, n)) + ", got " +
        std::to_string(xi.rows()) + "x" + std::to_string(xi.cols()));
  }
  if (!(xi.semiring() == ctx.semiring())) throw MixedSemiringError("effect over a different semiring");
}

}  // namespace

EnvStructure EnvStructure::standard_trace(const GroupAction& action) {
  return EnvStructure(std::make_shared<Node>(EnvRule::StandardTrace, action));
}

EnvStructure EnvStructure::caps(const GroupAction& action, std::size_t levels) {
  if (levels == 0) throw InvalidEnvironmentError("caps family needs at least one level");
  const auto& orders = action.group().orders();
  bool ok = orders.size() == levels;
  for (std::size_t i = 0; ok && i < orders.size(); ++i) {
    ok = orders[i] == 2 &&
         equivalent(action.generator_images()[i], Automorphism::involution(), action.semiring());
  }
  if (!ok) {
    throw InvalidEnvironmentError(
        "caps family with " + std::to_string(levels) + " levels needs Z2^" + std::to_string(levels) +
        " acting by the involution, got " + action.to_string());
  }
  auto node = std::make_shared<Node>(EnvRule::Caps, action);
  node->levels = levels;
  return EnvStructure(node);
}

EnvStructure EnvStructure::explicit_generators_unchecked(const GroupAction& action,
                                                          std::map<std::size_t, std::vector<Matrix>> generators) {
  auto node = std::make_shared<Node>(EnvRule::Explicit, action);
  for (const auto& [n, list] : generators) {
    for (const auto& xi : list) check_effect_shape(node->ctx, n, xi);
  }
  node->explicit_map = std::move(generators);
  return EnvStructure(node);
}

EnvStructure EnvStructure::explicit_generators(const GroupAction& action,
                                               std::map<std::size_t, std::vector<Matrix>> generators) {
  EnvStructure env = explicit_generators_unchecked(action, std::move(generators));
  const FoldContext& ctx = env.context();
  for (const auto& [n, list] : env.explicit_map()) {
    for (const auto& xi : list) {
      for (const auto& gamma : ctx.order()) {
        if (!equivariant(ctx, n, xi, gamma)) {
          throw EnvAxiomError(
              "generator at " + std::to_string(n) + " is not equivariant at gamma = " + gamma.to_string());
        }
      }
    }
  }
  return env;
}

EnvStructure EnvStructure::trivial(SemiringDescriptor sr) { return empty(GroupAction::trivial(sr)); }

EnvStructure EnvStructure::empty(const GroupAction& action) {
  return EnvStructure(std::make_shared<Node>(EnvRule::Explicit, action));
}

EnvStructure EnvStructure::join(const EnvStructure& a, const EnvStructure& b) {
  if (!(a.action() == b.action())) throw InvalidEnvironmentError("join of structures over different actions");
  auto node = std::make_shared<Node>(EnvRule::Join, a.action());
  node->left = a;
  node->right = b;
  return EnvStructure(node);
}

EnvRule EnvStructure::rule() const { return node_->rule; }
const GroupAction& EnvStructure::action() const { return node_->action; }
const FoldContext& EnvStructure::context() const { return node_->ctx; }
std::size_t EnvStructure::levels() const { return node_->levels; }
const std::map<std::size_t, std::vector<Matrix>>& EnvStructure::explicit_map() const { return node_->explicit_map; }

const EnvStructure& EnvStructure::left() const {
  if (!node_->left) throw InvalidEnvironmentError(describe() + " has no children");
  return *node_->left;
}

const EnvStructure& EnvStructure::right() const {
  if (!node_->right) throw InvalidEnvironmentError(describe() + " has no children");
  return *node_->right;
}

bool EnvStructure::is_trivial() const {
  return node_->rule == EnvRule::Explicit && node_->explicit_map.empty() && node_->action.group().is_trivial();
}

std::vector<Matrix> EnvStructure::generators(std::size_t n) const {
  const Node& node = *node_;
  const SemiringDescriptor sr = node.action.semiring();
  std::vector<Matrix> out;
  switch (node.rule) {
    case EnvRule::StandardTrace:
      out.push_back(discard_effect(node.ctx, n));
      break;
    case EnvRule::Caps:
      for (std::size_t i = 1; i <= node.levels; ++i) {
        push_unique(out, iterated_cap_effect(z2_involution(sr), node.levels, i, n));
      }
      break;
    case EnvRule::Explicit: {
      auto it = node.explicit_map.find(n);
      if (it != node.explicit_map.end()) {
        for (const auto& xi : it->second) push_unique(out, xi);
      }
      break;
    }
    case EnvRule::Product: {
      const EnvStructure& a = *node.left;
      const EnvStructure& b = *node.right;
      const FoldContext& outer_b = b.context();
      const FoldContext& outer_a = a.context();
      for (const auto& xi : a.effects(n)) push_unique(out, fold_morphism(outer_b, xi));
      if (!b.effects(n).empty()) {
        const Matrix swap = interchange(sr, outer_b.legs(), outer_a.legs(), n);
        for (const auto& xi : b.effects(n)) push_unique(out, compose(fold_morphism(outer_a, xi), swap));
      }
      break;
    }
    case EnvRule::Join:
      for (const auto& xi : node.left->generators(n)) push_unique(out, xi);
      for (const auto& xi : node.right->generators(n)) push_unique(out, xi);
      break;
  }
  if (n == 1 && out.empty()) out.push_back(Matrix::identity(sr, 1));
  return out;
}

const std::vector<Matrix>& EnvStructure::effects(std::size_t n) const {
  const Node& node = *node_;
  std::lock_guard<std::recursive_mutex> lock(node.mutex);
  auto it = node.cache.find(n);
  if (it != node.cache.end()) return it->second;
  std::vector<Matrix> out = generators(n);
  // trace_a ⊠ trace_b = trace_ab and cap_a ⊠ cap_b = cap_ab, so these two
  // rules are left unclosed and axiom (i) becomes a genuine check.
  const bool closed = node.rule == EnvRule::StandardTrace || (node.rule == EnvRule::Caps && node.levels == 1);
  if (!closed && n >= 4) {
    for (std::size_t a = 2; a * 2 <= n; ++a) {
      if (n % a != 0) continue;
      const std::size_t b = n / a;
      for (const auto& xa : effects(a)) {
        for (const auto& xb : effects(b)) push_unique(out, boxtimes(node.ctx, xa, xb, a, b, 1, 1));
      }
    }
  }
  return node.cache.emplace(n, std::move(out)).first->second;
}

bool EnvStructure::contains(std::size_t n, const Matrix& effect) const {
  const auto& set = effects(n);
  return std::find(set.begin(), set.end(), effect) != set.end();
}

std::string EnvStructure::describe() const {
  const Node& node = *node_;
  switch (node.rule) {
    case EnvRule::StandardTrace: return "standard_trace";
    case EnvRule::Caps: return "caps(" + std::to_string(node.levels) + ")";
    case EnvRule::Explicit: {
      if (is_trivial()) return "trivial";
      std::string out = "explicit{";
      bool first = true;
      for (const auto& [n, list] : node.explicit_map) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(n) + ":" + std::to_string(list.size());
      }
      return out + "}";
    }
    case EnvRule::Product: return "product(" + node.left->describe() + ", " + node.right->describe() + ")";
    case EnvRule::Join: return "join(" + node.left->describe() + ", " + node.right->describe() + ")";
  }
  return "?";
}

EnvStructure env_product(const EnvStructure& a, const EnvStructure& b) {
  if (!(a.action().semiring() == b.action().semiring())) {
    throw MixedSemiringError("env_product over different semirings");
  }
  if (b.is_trivial()) return a;
  if (a.is_trivial()) return b;
  auto node = std::make_shared<EnvStructure::Node>(EnvRule::Product, action_product(a.action(), b.action()));
  node->left = a;
  node->right = b;
  return EnvStructure(node);
}

EnvStructure double_mixing(const GroupAction& phi, const GroupAction& phi_prime) {
  const GroupAction combined = action_product(phi, phi_prime);
  return EnvStructure::join(EnvStructure::standard_trace(combined),
                            env_product(EnvStructure::empty(phi), EnvStructure::caps(phi_prime, 1)));
}

Matrix discard_effect(const FoldContext& ctx, std::size_t n) {
  Matrix out(ctx.semiring(), 1, fold_object(ctx, n));
  for (std::size_t j = 0; j < n; ++j) {
    out = mat_add(out, fold_morphism(ctx, Matrix::basis_effect(ctx.semiring(), n, j)));
  }
  return out;
}

Matrix iterated_cap_effect(const GroupAction& base, std::size_t n_levels, std::size_t i, std::size_t A) {
  const auto& orders = base.group().orders();
  if (orders.size() != 1 || orders[0] != 2) throw InvalidEnvironmentError("iterated caps need a Z2 base action");
  if (i < 1 || i > n_levels) {
    throw InvalidEnvironmentError("level " + std::to_string(i) + " out of range 1.." + std::to_string(n_levels));
  }
  std::size_t D = A;
  for (std::size_t l = 1; l < i; ++l) D *= D;
  const FoldContext outer(action_power(base, n_levels - i));
  return fold_morphism(outer, cap(base.semiring(), D));
}

// ---------------------------------------------------------------------------
// CPM morphisms

Matrix realize_normal_form(const FoldContext& ctx, const Matrix& f, std::size_t B, std::size_t E,
                           const Matrix& effect) {
  if (f.rows() != B * E) {
    throw ShapeMismatchError(
        "f has " + std::to_string(f.rows()) + " rows, expected B*E = " + std::to_string(B * E));
  }
  check_effect_shape(ctx, E, effect);
  const std::size_t fB = fold_object(ctx, B);
  const Matrix discard = boxtimes(ctx, Matrix::identity(ctx.semiring(), fB), effect, B, E, B, 1);
  return compose(discard, fold_morphism(ctx, f));
}

Matrix CpmMorphism::recompute() const { return realize_normal_form(env.context(), f, B, E, effect); }

bool CpmMorphism::consistent() const { return realized == recompute(); }

CpmMorphism make_cpm_morphism(const EnvStructure& env, const Matrix& f, std::size_t B, std::size_t E,
                              const Matrix& effect) {
  if (!(f.semiring() == env.action().semiring())) throw MixedSemiringError("f and env over different semirings");
  if (!env.contains(E, effect)) {
    throw EffectNotRegisteredError("effect is not generated by " + env.describe() + " at " + std::to_string(E));
  }
  Matrix realized = realize_normal_form(env.context(), f, B, E, effect);
  return CpmMorphism{env, f.cols(), B, E, f, effect, std::move(realized)};
}

CpmMorphism pure_cpm_morphism(const EnvStructure& env, const Matrix& f) {
  return make_cpm_morphism(env, f, f.rows(), 1, Matrix::identity(f.semiring(), 1));
}

CpmMorphism compose_cpm(const CpmMorphism& second, const CpmMorphism& first) {
  if (second.A != first.B) throw ComposeMismatchError("CPM composite: codomain and domain differ");
  const SemiringDescriptor sr = first.f.semiring();
  const std::size_t C = second.B, E1 = first.E, E2 = second.E;
  const Matrix step1 = kron(second.f, Matrix::identity(sr, E1));
  const Matrix step2 = kron(Matrix::identity(sr, C), symmetry(sr, E2, E1));
  const Matrix f = compose(step2, compose(step1, first.f));
  const Matrix effect = boxtimes(first.env.context(), first.effect, second.effect, E1, E2, 1, 1);
  return make_cpm_morphism(first.env, f, C, E1 * E2, effect);
}

CpmMorphism boxtimes_cpm(const CpmMorphism& m1, const CpmMorphism& m2) {
  const SemiringDescriptor sr = m1.f.semiring();
  const Matrix shuffle = kron(kron(Matrix::identity(sr, m1.B), symmetry(sr, m1.E, m2.B)), Matrix::identity(sr, m2.E));
  const Matrix f = compose(shuffle, kron(m1.f, m2.f));
  const Matrix effect = boxtimes(m1.env.context(), m1.effect, m2.effect, m1.E, m2.E, 1, 1);
  return make_cpm_morphism(m1.env, f, m1.B * m2.B, m1.E * m2.E, effect);
}

std::optional<GroupElement> g_invariance_violation(const FoldContext& ctx, const Matrix& M, std::size_t A,
                                                   std::size_t B) {
  if (M.cols() != fold_object(ctx, A) || M.rows() != fold_object(ctx, B)) {
    throw NotAFoldedShapeError(
        "matrix is " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + ", expected fold(" +
        std::to_string(B) + ") x fold(" + std::to_string(A) + ")");
  }
  for (std::size_t g = 0; g < ctx.legs(); ++g) {
    const GroupElement& gamma = ctx.order()[g];
    const Automorphism& phi = ctx.action().automorphism_at(g);
    const auto map_A = permutation_index_map(tau_permutation(ctx, gamma), std::vector<std::size_t>(ctx.legs(), A));
    const auto map_B = permutation_index_map(tau_permutation(ctx, gamma), std::vector<std::size_t>(ctx.legs(), B));
    // (tau_B^{-1} X tau_A)[r][c] = X[map_B[r]][map_A[c]]
    for (std::size_t r = 0; r < M.rows(); ++r) {
      for (std::size_t c = 0; c < M.cols(); ++c) {
        if (!(apply_automorphism(phi, M(map_B[r], map_A[c])) == M(r, c))) return gamma;
      }
    }
  }
  return std::nullopt;
}

bool check_g_invariance(const FoldContext& ctx, const Matrix& M, std::size_t A, std::size_t B) {
  return !g_invariance_violation(ctx, M, A, B).has_value();
}

bool fold_composition_check(const GroupAction& phi, const GroupAction& phi_prime, const Matrix& f) {
  const FoldContext both(action_product(phi, phi_prime));
  const FoldContext first(phi);
  const FoldContext second(phi_prime);
  return fold_morphism(both, f) == fold_morphism(second, fold_morphism(first, f));
}

// ---------------------------------------------------------------------------
// Axiom verification

std::vector<EnvReportEntry> verify_env_axioms(const EnvStructure& env, std::size_t max_dim) {
  const FoldContext& ctx = env.context();
  const SemiringDescriptor sr = ctx.semiring();
  std::vector<EnvReportEntry> report;

  {
    const auto& unit = env.effects(1);
    const bool pass = unit.size() == 1 && unit[0] == Matrix::identity(sr, 1);
    EnvReportEntry e{"unit", "1", "-", pass, "", ""};
    if (!pass) {
      e.lhs = std::to_string(unit.size()) + " effects at 1";
      e.rhs = "{[[1]]}";
    }
    report.push_back(e);
  }

  for (std::size_t a = 1; a <= max_dim; ++a) {
    for (std::size_t b = 1; a * b <= max_dim; ++b) {
      EnvReportEntry e{"closure", std::to_string(a) + "*" + std::to_string(b), "-", true, "", ""};
      for (const auto& xa : env.effects(a)) {
        for (const auto& xb : env.effects(b)) {
          const Matrix prod = boxtimes(ctx, xa, xb, a, b, 1, 1);
          if (e.pass && !env.contains(a * b, prod)) {
            e.pass = false;
            e.lhs = prod.compact();
            e.rhs = "not among the " + std::to_string(env.effects(a * b).size()) + " effects at " + std::to_string(a * b);
          }
        }
      }
      report.push_back(e);
    }
  }

  for (std::size_t n = 1; n <= max_dim; ++n) {
    for (const auto& gamma : ctx.order()) {
      EnvReportEntry e{"equivariance", std::to_string(n), gamma.to_string(), true, "", ""};
      const Matrix tau_inv = transpose(tau(ctx, n, gamma));
      for (const auto& xi : env.effects(n)) {
        const Matrix lhs = entrywise_action(ctx.action(), gamma, xi);
        const Matrix rhs = compose(xi, tau_inv);
        if (e.pass && !(lhs == rhs)) {
          e.pass = false;
          e.lhs = lhs.compact();
          e.rhs = rhs.compact();
        }
      }
      report.push_back(e);
    }
  }

  const auto& orders = ctx.action().group().orders();
  if (orders.size() == 1 && orders[0] == 2) {
    for (std::size_t n = 1; n <= max_dim; ++n) {
      EnvReportEntry sym{"conjugate_symmetry", std::to_string(n), "-", true, "", ""};
      EnvReportEntry clo{"conjugate_closure", std::to_string(n), "-", true, "", ""};
      const Matrix sigma_inv = transpose(symmetry(sr, n, n));
      for (const auto& xi : env.effects(n)) {
        const Matrix lhs = conjugate(xi);
        const Matrix rhs = compose(xi, sigma_inv);
        if (sym.pass && !(lhs == rhs)) {
          sym.pass = false;
          sym.lhs = lhs.compact();
          sym.rhs = rhs.compact();
        }
        if (clo.pass && !env.contains(n, lhs)) {
          clo.pass = false;
          clo.lhs = lhs.compact();
          clo.rhs = "not generated";
        }
      }
      report.push_back(sym);
      report.push_back(clo);
    }
  }
  return report;
}

}  // namespace hocpm
