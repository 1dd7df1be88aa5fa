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

#include <doctest.h>

#include "hocpm/fold.hpp"
#include "hocpm/presets.hpp"
#include "hocpm/random.hpp"
#include "oracles.hpp"

using namespace hocpm;

namespace {

const SemiringDescriptor C = SemiringDescriptor::gaussian_rational();
const GroupAction Z2 = GroupAction({2}, C, {Automorphism::involution()});

Matrix M(std::size_t r, std::size_t c, std::vector<std::string> e) { return Matrix::from_strings(C, r, c, e); }

Matrix id(std::size_t n) { return Matrix::identity(C, n); }

std::size_t pow_size(std::size_t base, std::size_t e) {
  std::size_t out = 1;
  while (e--) out *= base;
  return out;
}

}  // namespace

TEST_CASE("fold on objects") {
  CHECK(fold_object(FoldContext(GroupAction::trivial(C)), 5) == 5);
  CHECK(fold_object(FoldContext(Z2), 2) == 4);
  CHECK(fold_object(FoldContext(action_product(Z2, Z2)), 2) == 16);
  CHECK(unfold_object(FoldContext(Z2), 9) == 3);
  CHECK(!unfold_object(FoldContext(Z2), 8).has_value());
}

TEST_CASE("fold on morphisms") {
  const FoldContext ctx(Z2);
  CHECK(fold_morphism(ctx, M(1, 1, {"3+4i"})) == M(1, 1, {"25"}));
  CHECK(fold_morphism(ctx, id(3)) == id(9));
  CHECK(fold_morphism(ctx, M(2, 1, {"3/5", "4/5i"})) == M(4, 1, {"9/25", "-12/25i", "12/25i", "16/25"}));
}

TEST_CASE("fold on scalars is the norm") {
  for (const auto& [name, action] : default_action_matrix()) {
    const FoldContext ctx(action);
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
      const auto x = random_value(rng, action.semiring());
      REQUIRE(fold_morphism(ctx, Matrix::scalar(x)) == Matrix::scalar(scalar_norm(action, x)));
    }
  }
}

TEST_CASE("tau examples") {
  const FoldContext z2(Z2);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(tau(z2, n, GroupElement{{0}}) == id(n * n));
  CHECK(tau(z2, 2, GroupElement{{1}}) == symmetry(C, 2, 2));

  const FoldContext z3(GroupAction({3}, C, {Automorphism::identity()}));
  const auto sigma = symmetry(C, 2, 2);
  const auto composite = compose(kron(id(2), sigma), kron(sigma, id(2)));
  CHECK(tau(z3, 2, GroupElement{{1}}) == composite);
  // source leg delta lands where gamma^{-1} delta sits
  CHECK(tau(z3, 2, GroupElement{{1}}) == oracle::leg_permutation(C, {2, 0, 1}, {2, 2, 2}));
  CHECK(tau(z3, 2, GroupElement{{2}}) == oracle::leg_permutation(C, {1, 2, 0}, {2, 2, 2}));
}

TEST_CASE("tau is a regular action") {
  for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{2}, {3}, {4}, {2, 2}}) {
    std::vector<Automorphism> images(orders.size(), Automorphism::identity());
    const FoldContext ctx(GroupAction(orders, C, images));
    const auto& G = ctx.action().group();
    for (std::size_t n = 1; n <= 2; ++n) {
      for (const auto& g : ctx.order()) {
        for (const auto& h : ctx.order()) {
          REQUIRE(compose(tau(ctx, n, g), tau(ctx, n, h)) == tau(ctx, n, G.op(g, h)));
        }
      }
    }
  }
}

TEST_CASE("pi examples") {
  const FoldContext triv(GroupAction::trivial(C));
  CHECK(pi(triv, 2, 3) == id(6));

  const FoldContext z2(Z2);
  const auto middle = kron(kron(id(2), symmetry(C, 2, 2)), id(2));
  CHECK(pi(z2, 2, 2) == middle);
  CHECK(pi(z2, 2, 2) == oracle::leg_permutation(C, {0, 2, 1, 3}, {2, 2, 2, 2}));

  const FoldContext z3(GroupAction({3}, C, {Automorphism::identity()}));
  const auto s = symmetry(C, 2, 2);
  const auto step1 = kron(kron(id(4), s), id(4));
  const auto step2 = kron(kron(kron(id(2), s), s), id(2));
  CHECK(pi(z3, 2, 2) == compose(step2, step1));
  CHECK(pi(z3, 2, 2) == oracle::leg_permutation(C, {0, 2, 4, 1, 3, 5}, {2, 2, 2, 2, 2, 2}));
  CHECK(pi(z3, 2, 3) == oracle::leg_permutation(C, {0, 2, 4, 1, 3, 5}, {2, 2, 2, 3, 3, 3}));
}

TEST_CASE("pi coherence for three objects") {
  for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{2}, {3}, {2, 2}}) {
    std::vector<Automorphism> images(orders.size(), Automorphism::identity());
    const FoldContext ctx(GroupAction(orders, C, images));
    const std::size_t a = 2, b = 1, c = 2;
    const std::size_t fa = fold_object(ctx, a), fc = fold_object(ctx, c);
    const auto left = compose(pi(ctx, a * b, c), kron(pi(ctx, a, b), id(fc)));
    const auto right = compose(pi(ctx, a, b * c), kron(id(fa), pi(ctx, b, c)));
    CHECK(left == right);
  }
}

TEST_CASE("boxtimes examples") {
  const FoldContext ctx(Z2);
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const auto f = random_matrix(rng, C, 2, 2), g = random_matrix(rng, C, 2, 2);
    const auto lhs = boxtimes(ctx, fold_morphism(ctx, f), fold_morphism(ctx, g), 2, 2, 2, 2);
    REQUIRE(lhs == fold_morphism(ctx, kron(f, g)));
    REQUIRE(lhs == boxtimes_via_pi(ctx, fold_morphism(ctx, f), fold_morphism(ctx, g), 2, 2, 2, 2));
  }
  const auto F = random_matrix(rng, C, 9, 4);
  CHECK(boxtimes(ctx, F, id(1), 2, 1, 3, 1) == F);
  CHECK(boxtimes(ctx, id(1), F, 1, 2, 1, 3) == F);
  CHECK(boxtimes(ctx, F, id(1)) == F);
  CHECK_THROWS_AS(boxtimes(ctx, F, id(1), 3, 1, 2, 1), NotAFoldedShapeError);
  CHECK_THROWS_AS(boxtimes(ctx, random_matrix(rng, C, 3, 3), id(1)), NotAFoldedShapeError);
}

TEST_CASE("boxtimes is associative on arbitrary folded shapes") {
  for (const auto& action : {Z2, GroupAction({3}, C, {Automorphism::identity()})}) {
    const FoldContext ctx(action);
    Rng rng(17);
    for (int t = 0; t < 5; ++t) {
      const auto F = random_matrix(rng, C, fold_object(ctx, 2), fold_object(ctx, 1));
      const auto G = random_matrix(rng, C, fold_object(ctx, 1), fold_object(ctx, 2));
      const auto H = random_matrix(rng, C, fold_object(ctx, 2), fold_object(ctx, 2));
      const auto left = boxtimes(ctx, boxtimes(ctx, F, G, 1, 2, 2, 1), H, 2, 2, 2, 2);
      const auto right = boxtimes(ctx, F, boxtimes(ctx, G, H, 2, 2, 1, 2), 1, 4, 2, 2);
      REQUIRE(left == right);
    }
  }
}

TEST_CASE("folding laws over the default action matrix") {
  for (const auto& [name, action] : default_action_matrix()) {
    CAPTURE(name);
    const FoldContext ctx(action);
    const auto sr = action.semiring();
    const std::size_t d = ctx.legs();
    Rng rng(2024);
    for (int t = 0; t < 15; ++t) {
      auto dim = [&rng]() { return static_cast<std::size_t>(rng.range(1, 3)); };
      const std::size_t a = dim(), b = dim(), c = dim();
      const auto f = random_matrix(rng, sr, b, a), g = random_matrix(rng, sr, c, b);
      REQUIRE(fold_morphism(ctx, compose(g, f)) == compose(fold_morphism(ctx, g), fold_morphism(ctx, f)));
      REQUIRE(fold_morphism(ctx, Matrix::identity(sr, a)) == Matrix::identity(sr, fold_object(ctx, a)));
      // keep the folded tensor product at desk scale
      std::size_t x = dim(), y = dim();
      while (pow_size(a * b * x * y, d) > 65536) x = y = 1;
      if (pow_size(a * b * x * y, d) > 65536) continue;
      const auto h = random_matrix(rng, sr, y, x);
      REQUIRE(fold_morphism(ctx, kron(f, h)) == boxtimes(ctx, fold_morphism(ctx, f), fold_morphism(ctx, h), a, x, b, y));
    }
  }
}

TEST_CASE("folded morphisms are invariant under conjugation by tau") {
  for (const auto& [name, action] : default_action_matrix()) {
    CAPTURE(name);
    const FoldContext ctx(action);
    const auto sr = action.semiring();
    Rng rng(5);
    for (int t = 0; t < 5; ++t) {
      const std::size_t a = rng.range(1, 3), b = rng.range(1, 3);
      if (pow_size(a * b, ctx.legs()) > 6561) continue;
      const auto F = fold_morphism(ctx, random_matrix(rng, sr, b, a));
      for (const auto& g : ctx.order()) {
        const auto lhs = compose(transpose(tau(ctx, b, g)), compose(entrywise_action(action, g, F), tau(ctx, a, g)));
        REQUIRE(lhs == F);
      }
    }
  }
}

TEST_CASE("scalars of the folded category are fixed by the action") {
  for (const auto& [name, action] : default_action_matrix()) {
    const FoldContext ctx(action);
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
      const auto x = random_value(rng, action.semiring()), y = random_value(rng, action.semiring());
      const auto s = boxtimes(ctx, fold_morphism(ctx, Matrix::scalar(x)), fold_morphism(ctx, Matrix::scalar(y)), 1, 1, 1, 1);
      for (std::size_t g = 0; g < ctx.legs(); ++g) {
        REQUIRE(apply_automorphism(action.automorphism_at(g), s(0, 0)) == s(0, 0));
      }
    }
  }
}
