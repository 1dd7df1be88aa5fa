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

#include <set>

#include "hocpm/group.hpp"
#include "hocpm/random.hpp"

using namespace hocpm;

namespace {

GroupElement el(std::vector<std::uint32_t> r) { return GroupElement{std::move(r)}; }

}  // namespace

TEST_CASE("canonical enumeration") {
  CHECK(enumerate(FiniteAbelianGroup({2})) == std::vector<GroupElement>{el({0}), el({1})});
  CHECK(enumerate(FiniteAbelianGroup({2, 2})) ==
        std::vector<GroupElement>{el({0, 0}), el({0, 1}), el({1, 0}), el({1, 1})});
  CHECK(enumerate(FiniteAbelianGroup({3})) == std::vector<GroupElement>{el({0}), el({1}), el({2})});
  const FiniteAbelianGroup T = FiniteAbelianGroup::trivial();
  CHECK(T.orders() == std::vector<std::uint32_t>{1});
  CHECK(enumerate(T) == std::vector<GroupElement>{el({0})});
}

TEST_CASE("enumeration is a bijection onto residue tuples") {
  for (const auto& orders : std::vector<std::vector<std::uint32_t>>{{2, 3}, {4}, {2, 2, 2}, {3, 2}, {5}}) {
    const FiniteAbelianGroup G(orders);
    const auto all = enumerate(G);
    std::size_t size = 1;
    for (auto n : orders) size *= n;
    CHECK(all.size() == size);
    CHECK(std::set<GroupElement>(all.begin(), all.end()).size() == size);
    CHECK(all.front() == G.identity());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(G.index_of(all[i]) == i);
    // lexicographic order
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].residues < all[i].residues);
  }
}

TEST_CASE("unit factors are dropped") {
  CHECK(FiniteAbelianGroup({1, 2, 1}).orders() == std::vector<std::uint32_t>{2});
  CHECK(FiniteAbelianGroup({1, 1}).orders() == std::vector<std::uint32_t>{1});
  CHECK_THROWS_AS(FiniteAbelianGroup({0}), InvalidElementError);
}

TEST_CASE("group operation and inverse") {
  const FiniteAbelianGroup Z3({3});
  CHECK(group_op(Z3, el({1}), el({2})) == el({0}));
  CHECK(group_inv(Z3, el({1})) == el({2}));
  const FiniteAbelianGroup V({2, 2});
  CHECK(group_op(V, el({1, 0}), el({1, 1})) == el({0, 1}));
  CHECK_THROWS_AS(group_op(V, el({1}), el({1, 1})), InvalidElementError);
  CHECK_THROWS_AS(group_op(Z3, el({3}), el({0})), InvalidElementError);
}

TEST_CASE("action automorphism examples") {
  const auto C = SemiringDescriptor::gaussian_rational();
  const GroupAction conj({2}, C, {Automorphism::involution()});
  CHECK(action_automorphism(conj, el({1})) == Automorphism::involution());
  CHECK(action_automorphism(conj, el({0})) == Automorphism::identity());
  const GroupAction frob({4}, SemiringDescriptor::finite_field(2, 4), {Automorphism::frobenius_power(1)});
  CHECK(action_automorphism(frob, el({2})) == Automorphism::frobenius_power(2));
  CHECK(action_automorphism(frob, el({0})) == Automorphism::identity());
}

TEST_CASE("generator images must respect the cyclic order") {
  const auto C = SemiringDescriptor::gaussian_rational();
  CHECK_THROWS_AS(GroupAction({3}, C, {Automorphism::involution()}), InvalidActionError);
  CHECK_NOTHROW(GroupAction({4}, C, {Automorphism::involution()}));
  const auto F = SemiringDescriptor::finite_field(2, 3);
  CHECK_THROWS_AS(GroupAction({2}, F, {Automorphism::frobenius_power(1)}), InvalidActionError);
  CHECK_THROWS_AS(GroupAction({2}, C, {Automorphism::frobenius_power(1)}), InvalidActionError);
  CHECK_THROWS_AS(GroupAction({2, 2}, C, {Automorphism::involution()}), InvalidActionError);
}

TEST_CASE("the action is a homomorphism") {
  std::vector<GroupAction> actions{
      GroupAction({2, 2}, SemiringDescriptor::gaussian_rational(), {Automorphism::involution(), Automorphism::involution()}),
      GroupAction({4, 2}, SemiringDescriptor::finite_field(2, 4), {Automorphism::frobenius_power(1), Automorphism::frobenius_power(2)}),
      GroupAction({3}, SemiringDescriptor::finite_field(3, 3), {Automorphism::frobenius_power(1)}),
      GroupAction({2, 4}, SemiringDescriptor::split_complex_rational(), {Automorphism::identity(), Automorphism::involution()}),
  };
  for (const auto& action : actions) {
    const auto& G = action.group();
    REQUIRE(G.size() <= 8);
    Rng rng(3);
    for (const auto& g : enumerate(G)) {
      for (const auto& h : enumerate(G)) {
        const auto gh = action_automorphism(action, group_op(G, g, h));
        for (int t = 0; t < 20; ++t) {
          const auto x = random_value(rng, action.semiring());
          REQUIRE(apply_automorphism(gh, x) ==
                  apply_automorphism(action_automorphism(action, g), apply_automorphism(action_automorphism(action, h), x)));
        }
      }
    }
  }
}

TEST_CASE("action product") {
  const auto C = SemiringDescriptor::gaussian_rational();
  const GroupAction conj({2}, C, {Automorphism::involution()});
  const GroupAction triv = GroupAction::trivial(C);
  CHECK(action_product(conj, triv) == conj);
  CHECK(action_product(triv, conj) == conj);
  const GroupAction v = action_product(conj, conj);
  CHECK(v.group().orders() == std::vector<std::uint32_t>{2, 2});
  for (const auto& g : enumerate(v.group())) {
    const bool odd = (g.residues[0] ^ g.residues[1]) == 1;
    CHECK(equivalent(action_automorphism(v, g), odd ? Automorphism::involution() : Automorphism::identity(), C));
  }
  const auto F = SemiringDescriptor::finite_field(2, 2);
  const GroupAction frob({2}, F, {Automorphism::frobenius_power(1)});
  const GroupAction ff = action_product(frob, frob);
  for (const auto& g : enumerate(ff.group())) {
    const auto e = (g.residues[0] + g.residues[1]) % 2;
    CHECK(equivalent(action_automorphism(ff, g), Automorphism::frobenius_power(e), F));
  }
  CHECK_THROWS_AS(action_product(conj, frob), MixedSemiringError);
}

TEST_CASE("the product puts the second factor first") {
  const auto F = SemiringDescriptor::finite_field(2, 4);
  const GroupAction a({4}, F, {Automorphism::frobenius_power(1)});
  const GroupAction b({2}, F, {Automorphism::frobenius_power(2)});
  const GroupAction ab = action_product(a, b);
  CHECK(ab.group().orders() == std::vector<std::uint32_t>{2, 4});
  // element (gamma', gamma) acts as phi(gamma) then phi'(gamma')
  CHECK(equivalent(ab.automorphism(el({1, 1})), Automorphism::frobenius_power(3), F));
  CHECK(equivalent(ab.automorphism(el({0, 1})), Automorphism::frobenius_power(1), F));
}

TEST_CASE("action product is associative and unital") {
  const auto C = SemiringDescriptor::gaussian_rational();
  const GroupAction a({2}, C, {Automorphism::involution()});
  const GroupAction b({4}, C, {Automorphism::involution()});
  const GroupAction c({3}, C, {Automorphism::identity()});
  CHECK(action_product(action_product(a, b), c) == action_product(a, action_product(b, c)));
  const GroupAction t = GroupAction::trivial(C);
  for (const auto& x : {a, b, c}) {
    CHECK(action_product(x, t) == x);
    CHECK(action_product(t, x) == x);
  }
}
