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

#include "hocpm/fold.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace hocpm {

FoldContext::FoldContext(GroupAction action) : action_(std::move(action)), order_(action_.group().enumerate()) {}

std::size_t fold_object(const FoldContext& ctx, std::size_t n) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < ctx.legs(); ++i) out *= n;
  return out;
}

std::optional<std::size_t> unfold_object(const FoldContext& ctx, std::size_t N) {
  if (N <= 1) return N;
  for (std::size_t n = 2; n <= N; ++n) {
    const std::size_t p = fold_object(ctx, n);
    if (p == N) return n;
    if (p > N) break;
  }
  return std::nullopt;
}

Matrix fold_morphism(const FoldContext& ctx, const Matrix& f) {
  if (!(f.semiring() == ctx.semiring())) throw MixedSemiringError("fold_morphism over a different semiring");
  Matrix out = Matrix::identity(ctx.semiring(), 1);
  for (std::size_t i = 0; i < ctx.legs(); ++i) out = kron(out, apply_entrywise(ctx.action().automorphism_at(i), f));
  return out;
}

Permutation tau_permutation(const FoldContext& ctx, const GroupElement& gamma) {
  const auto& G = ctx.action().group();
  const GroupElement g_inv = G.inv(gamma);
  std::vector<std::size_t> images(ctx.legs());
  for (std::size_t i = 0; i < ctx.legs(); ++i) images[i] = G.index_of(G.op(g_inv, ctx.order()[i]));
  return Permutation(std::move(images));
}

Matrix tau(const FoldContext& ctx, std::size_t n, const GroupElement& gamma) {
  return permutation_matrix(ctx.semiring(), tau_permutation(ctx, gamma), std::vector<std::size_t>(ctx.legs(), n));
}

Permutation pi_permutation(const FoldContext& ctx) {
  const std::size_t d = ctx.legs();
  std::vector<std::size_t> images(2 * d);
  for (std::size_t g = 0; g < d; ++g) {
    images[g] = 2 * g;
    images[d + g] = 2 * g + 1;
  }
  return Permutation(std::move(images));
}

std::vector<std::size_t> pi_index_map(const FoldContext& ctx, std::size_t m, std::size_t n) {
  std::vector<std::size_t> dims(ctx.legs(), m);
  dims.insert(dims.end(), ctx.legs(), n);
  return permutation_index_map(pi_permutation(ctx), dims);
}

Matrix pi(const FoldContext& ctx, std::size_t m, std::size_t n) {
  std::vector<std::size_t> dims(ctx.legs(), m);
  dims.insert(dims.end(), ctx.legs(), n);
  return permutation_matrix(ctx.semiring(), pi_permutation(ctx), dims);
}

namespace {

/** pi (or its transpose) as a dense matrix, kept per action and shape. */
std::shared_ptr<const Matrix> materialized_pi(const FoldContext& ctx, std::size_t m, std::size_t n, bool transposed) {
  static std::mutex mutex;
  static std::map<std::tuple<std::string, std::size_t, std::size_t, bool>, std::shared_ptr<const Matrix>> cache;
  const auto key = std::make_tuple(ctx.action().to_string(), m, n, transposed);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const Matrix p = pi(ctx, m, n);
  auto out = std::make_shared<const Matrix>(transposed ? transpose(p) : p);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, out).first->second;
}

void check_folded(const FoldContext& ctx, const Matrix& M, std::size_t dom, std::size_t cod, const char* which) {
  if (M.cols() != fold_object(ctx, dom) || M.rows() != fold_object(ctx, cod)) {
    throw NotAFoldedShapeError(
        std::string(which) + " is " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()) +
        ", expected fold(" + std::to_string(cod) + ") x fold(" + std::to_string(dom) + ")");
  }
}

std::size_t root_of(const FoldContext& ctx, std::size_t N, const char* which) {
  auto n = unfold_object(ctx, N);
  if (!n) throw NotAFoldedShapeError(std::string(which) + " dimension " + std::to_string(N) + " is not a folded object");
  return *n;
}

}  // namespace

Matrix boxtimes(const FoldContext& ctx, const Matrix& F, const Matrix& G, std::size_t A, std::size_t B,
                std::size_t C, std::size_t D) {
  check_folded(ctx, F, A, C, "first argument");
  check_folded(ctx, G, B, D, "second argument");
  if (!(F.semiring() == G.semiring())) throw MixedSemiringError("boxtimes over different semirings");
  const auto in_map = pi_index_map(ctx, A, B);
  const auto out_map = pi_index_map(ctx, C, D);
  Matrix out(F.semiring(), out_map.size(), in_map.size());
  for (std::size_t i1 = 0; i1 < F.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < F.cols(); ++j1) {
      const SemiringValue& a = F(i1, j1);
      if (a.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < G.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < G.cols(); ++j2) {
          const SemiringValue& b = G(i2, j2);
          if (b.is_zero()) continue;
          out.set(out_map[i1 * G.rows() + i2], in_map[j1 * G.cols() + j2], a * b);
        }
      }
    }
  }
  return out;
}

Matrix boxtimes(const FoldContext& ctx, const Matrix& F, const Matrix& G) {
  return boxtimes(ctx, F, G, root_of(ctx, F.cols(), "first argument"), root_of(ctx, G.cols(), "second argument"),
                  root_of(ctx, F.rows(), "first argument"), root_of(ctx, G.rows(), "second argument"));
}

Matrix boxtimes_via_pi(const FoldContext& ctx, const Matrix& F, const Matrix& G, std::size_t A,
                       std::size_t B, std::size_t C, std::size_t D) {
  check_folded(ctx, F, A, C, "first argument");
  check_folded(ctx, G, B, D, "second argument");
  return compose(*materialized_pi(ctx, C, D, false), compose(kron(F, G), *materialized_pi(ctx, A, B, true)));
}

Matrix interchange(SemiringDescriptor sr, std::size_t outer, std::size_t inner, std::size_t n) {
  std::vector<std::size_t> images(outer * inner);
  for (std::size_t g = 0; g < outer; ++g) {
    for (std::size_t h = 0; h < inner; ++h) images[g * inner + h] = h * outer + g;
  }
  return permutation_matrix(sr, Permutation(std::move(images)), std::vector<std::size_t>(outer * inner, n));
}

}  // namespace hocpm
