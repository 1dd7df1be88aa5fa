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
#include <string>
#include <vector>

#include "hocpm/cpm.hpp"

namespace hocpm {

struct DecoherenceMap {
  std::size_t n;
  Matrix matrix;  // fold(n) -> fold(n)
};

/**
 * Sum_j fold(|j><j|), cross-checked against (id ⊠ trace_n) ∘ fold(copy_n).
 * Throws InternalError if the two disagree.
 **/
DecoherenceMap decoherence(const FoldContext& ctx, std::size_t n);

/** The standard-basis copy map n -> n*n, |j> -> |jj>. */
Matrix copy_map(SemiringDescriptor sr, std::size_t n);

/** A classically indexed family of effects on fold(n) summing to trace_n. */
class TestFamily {
 public:
  /** Throws InvalidTestError if the effects do not sum to discard_effect(ctx, n). */
  TestFamily(const FoldContext& ctx, std::size_t n, std::vector<Matrix> effects);
  /** fold(<j|) for j < n. */
  static TestFamily sharp(const FoldContext& ctx, std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t outcomes() const { return effects_.size(); }
  const std::vector<Matrix>& effects() const { return effects_; }

 private:
  std::size_t n_;
  std::vector<Matrix> effects_;
};

struct NormalizationReport {
  bool normalized;
  SemiringValue total;  // Sum_j ||psi_j||
};

/** Sum_j ||psi_j|| == 1, computed both as trace ∘ fold(psi) and as a direct sum. */
NormalizationReport normalize_check(const FoldContext& ctx, const Matrix& psi);

/** A_i ∘ fold(psi) for the i-th effect of the test. */
SemiringValue born_probability(const FoldContext& ctx, const TestFamily& test, const Matrix& psi, std::size_t i);

struct BornReport {
  std::vector<SemiringValue> probabilities;
  bool normalized;
  SemiringValue total;
};

BornReport born_report(const FoldContext& ctx, const TestFamily& test, const Matrix& psi);

/** Search for x = Sum_{j <= bound} ||x_j||; std::nullopt is inconclusive. */
std::optional<std::vector<SemiringValue>> membership_witness(const FoldContext& ctx, const SemiringValue& x,
                                                             std::size_t bound);
/** As membership_witness, throwing NoWitnessFoundError when nothing is found. */
std::vector<SemiringValue> require_witness(const FoldContext& ctx, const SemiringValue& x, std::size_t bound);

/** The additive closure of all norms, for a finite semiring, in index order. */
std::vector<SemiringValue> enumerate_scalars(const FoldContext& ctx);

/**
 * Embeds an m x n matrix over R as the CPM morphism Sum M_ij fold(|i><j|).
 * witnesses[i*n + j] lists x_t with M_ij = Sum_t ||x_t||; each witness term
 * becomes one ancilla basis state, discarded by trace_E of env.
 **/
CpmMorphism classical_embed(const EnvStructure& env, const Matrix& M,
                            const std::vector<std::vector<SemiringValue>>& witnesses);
/** As above, searching witnesses with the given bound. */
CpmMorphism classical_embed(const EnvStructure& env, const Matrix& M, std::size_t bound = 4);

/** Whether decoh_m ∘ F ∘ decoh_n == F. */
bool is_classical(const FoldContext& ctx, const Matrix& F, std::size_t n, std::size_t m);
/** Entry (i, j) = fold(<i|) ∘ F ∘ fold(|j>); throws NotClassicalError unless absorbed. */
Matrix classical_extract(const FoldContext& ctx, const Matrix& F, std::size_t n, std::size_t m);

}  // namespace hocpm
