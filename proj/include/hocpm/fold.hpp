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

#include <optional>
#include <vector>

#include "hocpm/group.hpp"
#include "hocpm/smat.hpp"

namespace hocpm {

/** A group action together with its canonical enumeration. */
class FoldContext {
 public:
  explicit FoldContext(GroupAction action);

  const GroupAction& action() const { return action_; }
  SemiringDescriptor semiring() const { return action_.semiring(); }
  const std::vector<GroupElement>& order() const { return order_; }
  /** |G|, the number of folded legs. */
  std::size_t legs() const { return order_.size(); }

 private:
  GroupAction action_;
  std::vector<GroupElement> order_;
};

/** n^|G|. */
std::size_t fold_object(const FoldContext& ctx, std::size_t n);
/** The n with n^|G| = N, if any. */
std::optional<std::size_t> unfold_object(const FoldContext& ctx, std::size_t N);

/** Kronecker product over gamma, in canonical order, of Phi(gamma)[f]. */
Matrix fold_morphism(const FoldContext& ctx, const Matrix& f);

/**
 * Leg permutation underlying tau(gamma): the leg carrying Phi(delta)[n]
 * moves to the position of gamma^{-1} delta, so that position delta ends up
 * carrying Phi(gamma delta)[n].
 **/
Permutation tau_permutation(const FoldContext& ctx, const GroupElement& gamma);
Matrix tau(const FoldContext& ctx, std::size_t n, const GroupElement& gamma);

/**
 * Leg permutation underlying pi_{A,B}: source legs [A_0..A_{d-1}, B_0..B_{d-1}]
 * go to the interleaved positions A_g -> 2g, B_g -> 2g+1.
 **/
Permutation pi_permutation(const FoldContext& ctx);
std::vector<std::size_t> pi_index_map(const FoldContext& ctx, std::size_t m, std::size_t n);
Matrix pi(const FoldContext& ctx, std::size_t m, std::size_t n);

/**
 * F ⊠ G = pi_{C,D} ∘ (F ⊗ G) ∘ pi_{A,B}^{-1} for F: fold(A) -> fold(C)
 * and G: fold(B) -> fold(D).
 **/
Matrix boxtimes(const FoldContext& ctx, const Matrix& F, const Matrix& G, std::size_t A, std::size_t B,
                std::size_t C, std::size_t D);
/** As above, recovering A, B, C, D from the matrix shapes. */
Matrix boxtimes(const FoldContext& ctx, const Matrix& F, const Matrix& G);
/** Same value as boxtimes, computed from materialized pi matrices. */
Matrix boxtimes_via_pi(const FoldContext& ctx, const Matrix& F, const Matrix& G, std::size_t A,
                       std::size_t B, std::size_t C, std::size_t D);

/** Permutation matrix of the leg grid transpose (g, h) -> (h, g) on |G| x |H| legs of dimension n. */
Matrix interchange(SemiringDescriptor sr, std::size_t outer, std::size_t inner, std::size_t n);

}  // namespace hocpm
