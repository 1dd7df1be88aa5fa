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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hocpm/fold.hpp"

namespace hocpm {

enum class EnvRule { StandardTrace, Caps, Explicit, Product, Join };

std::string to_string(EnvRule rule);

/**
 * A finitely generated multi-environment structure. Generators are produced
 * by a rule; effects(n) adds the ⊠-closure over factorizations n = a*b.
 * Handles share their (immutable) node and its effect cache.
 **/
class EnvStructure {
 public:
  /** trace_n for every n. */
  static EnvStructure standard_trace(const GroupAction& action);
  /**
   * The iterated caps eps^(1..levels). The action must be Z_2^levels with
   * every generator mapped to the involution.
   **/
  static EnvStructure caps(const GroupAction& action, std::size_t levels);
  /** Explicit generators per object; equivariance is checked here. */
  static EnvStructure explicit_generators(const GroupAction& action, std::map<std::size_t, std::vector<Matrix>> generators);
  /** As explicit_generators without the equivariance check (for fixtures and verification). */
  static EnvStructure explicit_generators_unchecked(const GroupAction& action,
                                                     std::map<std::size_t, std::vector<Matrix>> generators);
  /** The empty structure over the trivial action: the unit of env_product. */
  static EnvStructure trivial(SemiringDescriptor sr);
  /** The empty structure over an action. */
  static EnvStructure empty(const GroupAction& action);
  /** Union of generators over a common action. */
  static EnvStructure join(const EnvStructure& a, const EnvStructure& b);

  EnvRule rule() const;
  const GroupAction& action() const;
  const FoldContext& context() const;
  std::size_t levels() const;
  const std::map<std::size_t, std::vector<Matrix>>& explicit_map() const;
  const EnvStructure& left() const;
  const EnvStructure& right() const;

  /** True for the empty structure over the trivial action. */
  bool is_trivial() const;

  /** Generators at n before ⊠-closure (Xi_1 defaults to {1}). */
  std::vector<Matrix> generators(std::size_t n) const;
  /** Generators at n closed under ⊠ with effects at proper factors of n. */
  const std::vector<Matrix>& effects(std::size_t n) const;
  bool contains(std::size_t n, const Matrix& effect) const;

  /** One-line summary, e.g. "product(caps(1), caps(1))". */
  std::string describe() const;

  struct Node;

 private:
  explicit EnvStructure(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend EnvStructure env_product(const EnvStructure& a, const EnvStructure& b);
};

/**
 * Xi ⊙ Xi': generated by the Phi'-foldings of Xi's effects and the
 * Phi-foldings of Xi''s effects (legs re-ordered by the grid interchange),
 * over action_product(Phi, Phi'). The trivial structure is a strict unit.
 **/
EnvStructure env_product(const EnvStructure& a, const EnvStructure& b);

/** Double mixing: trace_n of the combined action joined with the level-2 caps. */
EnvStructure double_mixing(const GroupAction& phi, const GroupAction& phi_prime);

/** Sum_j fold(<j|). */
Matrix discard_effect(const FoldContext& ctx, std::size_t n);

/**
 * eps_A^(i) for an n_levels-fold iteration of the Z_2 action base: the cap of
 * A^(2^(i-1)) folded along the remaining n_levels - i copies of base.
 **/
Matrix iterated_cap_effect(const GroupAction& base, std::size_t n_levels, std::size_t i, std::size_t A);

/** Normal form (id_{fold B} ⊠ xi_E) ∘ fold(f) with its witnesses. */
struct CpmMorphism {
  EnvStructure env;
  std::size_t A;
  std::size_t B;
  std::size_t E;
  Matrix f;
  Matrix effect;
  Matrix realized;

  /** Recomputes the normal form from (f, effect). */
  Matrix recompute() const;
  /** realized == recompute(). */
  bool consistent() const;
};

/** (id_{fold B} ⊠ xi) ∘ fold(f) for f: A -> B*E and xi an effect on fold(E). */
Matrix realize_normal_form(const FoldContext& ctx, const Matrix& f, std::size_t B, std::size_t E, const Matrix& effect);

CpmMorphism make_cpm_morphism(const EnvStructure& env, const Matrix& f, std::size_t B, std::size_t E,
                              const Matrix& effect);
/** f with the empty environment (E = 1). */
CpmMorphism pure_cpm_morphism(const EnvStructure& env, const Matrix& f);
/** second ∘ first, merging ancillas as E = E1*E2 with effect xi1 ⊠ xi2. */
CpmMorphism compose_cpm(const CpmMorphism& second, const CpmMorphism& first);
/** m1 ⊠ m2 on objects A1*A2 -> B1*B2. */
CpmMorphism boxtimes_cpm(const CpmMorphism& m1, const CpmMorphism& m2);

/** First gamma with tau_B(gamma)^{-1} ∘ Phi(gamma)[M] ∘ tau_A(gamma) != M, if any. */
std::optional<GroupElement> g_invariance_violation(const FoldContext& ctx, const Matrix& M, std::size_t A, std::size_t B);
bool check_g_invariance(const FoldContext& ctx, const Matrix& M, std::size_t A, std::size_t B);

/** fold_{Phi ⊙ Phi'}(f) == fold_{Phi'}(fold_Phi(f)). */
bool fold_composition_check(const GroupAction& phi, const GroupAction& phi_prime, const Matrix& f);

struct EnvReportEntry {
  std::string condition;  // closure, unit, equivariance, conjugate_symmetry, conjugate_closure
  std::string object;
  std::string gamma;
  bool pass;
  std::string lhs;  // failing instance only
  std::string rhs;
};

std::vector<EnvReportEntry> verify_env_axioms(const EnvStructure& env, std::size_t max_dim);

}  // namespace hocpm
