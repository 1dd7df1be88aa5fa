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

#include "hocpm/random.hpp"
#include "hocpm/smat.hpp"
#include "oracles.hpp"

using namespace hocpm;

namespace {

const SemiringDescriptor C = SemiringDescriptor::gaussian_rational();

Matrix M(SemiringDescriptor sr, std::size_t r, std::size_t c, std::vector<std::string> e) {
  return Matrix::from_strings(sr, r, c, e);
}

std::vector<SemiringDescriptor> menu() {
  return {SemiringDescriptor::boolean(),      SemiringDescriptor::natural(),
          SemiringDescriptor::rational(),     SemiringDescriptor::gaussian_rational(),
          SemiringDescriptor::split_complex_rational(), SemiringDescriptor::finite_field(2, 2),
          SemiringDescriptor::finite_field(3, 2)};
}

}  // namespace

TEST_CASE("compose examples") {
  const auto f = M(C, 3, 2, {"1", "i", "2", "0", "1/2", "-1"});
  CHECK(compose(Matrix::identity(C, 3), f) == f);
  const auto B = SemiringDescriptor::boolean();
  CHECK(compose(M(B, 1, 2, {"1", "1"}), M(B, 2, 1, {"1", "0"})) == M(B, 1, 1, {"1"}));
  const auto psi = M(C, 2, 1, {"3/5", "4/5i"});
  CHECK(compose(Matrix::basis_effect(C, 2, 0), psi) == M(C, 1, 1, {"3/5"}));
  CHECK_THROWS_AS(compose(f, f), ComposeMismatchError);
}

TEST_CASE("kron examples and index convention") {
  const auto f = M(C, 2, 2, {"1", "i", "2", "0"});
  CHECK(kron(f, Matrix::identity(C, 1)) == f);
  CHECK(kron(Matrix::basis_state(C, 2, 0), Matrix::basis_state(C, 2, 1)) == Matrix::basis_state(C, 4, 1));
  const auto X = M(C, 2, 2, {"0", "1", "1", "0"});
  const auto expect = M(C, 4, 4, {"0", "0", "1", "0",  //
                                  "0", "0", "0", "1",  //
                                  "1", "0", "0", "0",  //
                                  "0", "1", "0", "0"});
  CHECK(kron(X, Matrix::identity(C, 2)) == expect);
}

TEST_CASE("compose and kron agree with the reference formulas") {
  for (const auto& sr : menu()) {
    Rng rng(8);
    for (int t = 0; t < 40; ++t) {
      const auto f = random_matrix(rng, sr, rng.range(1, 3), rng.range(1, 3));
      const auto g = random_matrix(rng, sr, rng.range(1, 3), rng.range(1, 3));
      REQUIRE(kron(f, g) == oracle::kron(f, g));
      const auto h = random_matrix(rng, sr, rng.range(1, 3), f.rows());
      REQUIRE(compose(h, f) == oracle::compose(h, f));
    }
  }
}

TEST_CASE("dagger and conjugate") {
  CHECK(dagger(M(C, 1, 1, {"i"})) == M(C, 1, 1, {"-i"}));
  const auto Q = SemiringDescriptor::rational();
  const auto r = M(Q, 2, 2, {"1/2", "3", "-1", "0"});
  CHECK(conjugate(r) == r);
  CHECK(dagger(M(C, 2, 1, {"3/5", "4/5i"})) == M(C, 1, 2, {"3/5", "-4/5i"}));
}

TEST_CASE("cups and caps") {
  CHECK(cap(C, 1) == M(C, 1, 1, {"1"}));
  CHECK(cap(C, 2) == M(C, 1, 4, {"1", "0", "0", "1"}));
  for (const auto& sr : menu()) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto id = Matrix::identity(sr, n);
      REQUIRE(compose(kron(cap(sr, n), id), kron(id, cup(sr, n))) == id);
      REQUIRE(compose(kron(id, cap(sr, n)), kron(cup(sr, n), id)) == id);
    }
  }
}

TEST_CASE("symmetries and permutation matrices") {
  const auto sw = symmetry(C, 2, 2);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      CHECK(compose(sw, Matrix::basis_state(C, 4, a * 2 + b)) == Matrix::basis_state(C, 4, b * 2 + a));
    }
  }
  CHECK(symmetry(C, 3, 1) == Matrix::identity(C, 3));
  const Permutation cycle({1, 2, 0});
  const auto P = permutation_matrix(C, cycle, {2, 2, 2});
  CHECK(compose(P, Matrix::basis_state(C, 8, 0b011)) == Matrix::basis_state(C, 8, 0b101));
  CHECK(P == oracle::leg_permutation(C, {1, 2, 0}, {2, 2, 2}));
  CHECK_THROWS_AS(permutation_matrix(C, cycle, {2, 2}), InvalidPermutationError);
  CHECK_THROWS_AS(Permutation({0, 0}), InvalidPermutationError);
}

TEST_CASE("permutation matrices match the tuple oracle") {
  Rng rng(21);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = rng.range(1, 4);
    std::vector<std::size_t> dims, dest(r);
    for (std::size_t i = 0; i < r; ++i) {
      dims.push_back(rng.range(1, 3));
      dest[i] = i;
    }
    for (std::size_t i = r; i-- > 1;) std::swap(dest[i], dest[rng.below(i + 1)]);
    const auto P = permutation_matrix(C, Permutation(dest), dims);
    REQUIRE(P == oracle::leg_permutation(C, dest, dims));
    REQUIRE(compose(dagger(P), P) == Matrix::identity(C, P.rows()));
  }
}

TEST_CASE("symmetric monoidal and dagger laws") {
  for (const auto& sr : menu()) {
    Rng rng(77);
    for (int t = 0; t < 30; ++t) {
      auto d = [&rng]() { return static_cast<std::size_t>(rng.range(1, 3)); };
      const std::size_t a = d(), b = d(), c = d(), e = d(), x = d(), y = d();
      const auto f1 = random_matrix(rng, sr, b, a), g1 = random_matrix(rng, sr, c, b), h1 = random_matrix(rng, sr, e, c);
      const auto f2 = random_matrix(rng, sr, y, x), g2 = random_matrix(rng, sr, x, y);
      REQUIRE(compose(h1, compose(g1, f1)) == compose(compose(h1, g1), f1));
      REQUIRE(compose(Matrix::identity(sr, b), f1) == f1);
      REQUIRE(compose(f1, Matrix::identity(sr, a)) == f1);
      REQUIRE(kron(compose(g1, f1), compose(g2, f2)) == compose(kron(g1, g2), kron(f1, f2)));
      REQUIRE(dagger(compose(g1, f1)) == compose(dagger(f1), dagger(g1)));
      REQUIRE(dagger(kron(f1, f2)) == kron(dagger(f1), dagger(f2)));
      REQUIRE(dagger(dagger(f1)) == f1);
      REQUIRE(conjugate(conjugate(f1)) == f1);
      // naturality of the symmetry
      REQUIRE(compose(symmetry(sr, b, y), kron(f1, f2)) == compose(kron(f2, f1), symmetry(sr, a, x)));
      // linearity
      const auto f1b = random_matrix(rng, sr, b, a);
      REQUIRE(compose(g1, mat_add(f1, f1b)) == mat_add(compose(g1, f1), compose(g1, f1b)));
      REQUIRE(kron(mat_add(f1, f1b), f2) == mat_add(kron(f1, f2), kron(f1b, f2)));
      const auto s = random_value(rng, sr);
      REQUIRE(compose(g1, scalar_mul(s, f1)) == scalar_mul(s, compose(g1, f1)));
    }
  }
}

TEST_CASE("addition and scalars") {
  const auto N = SemiringDescriptor::natural();
  CHECK(mat_add(M(N, 1, 1, {"1"}), M(N, 1, 1, {"1"})) == M(N, 1, 1, {"2"}));
  const auto f = M(C, 2, 2, {"1", "i", "2", "0"});
  CHECK(mat_add(f, Matrix(C, 2, 2)) == f);
  CHECK(scalar_mul(SemiringValue::one(C), f) == f);
  CHECK_THROWS_AS(mat_add(f, Matrix(C, 2, 1)), ShapeMismatchError);
}

TEST_CASE("entrywise action examples") {
  const GroupAction conj({2}, C, {Automorphism::involution()});
  const auto f = M(C, 2, 2, {"i", "0", "0", "1"});
  CHECK(entrywise_action(conj, GroupElement{{0}}, f) == f);
  CHECK(entrywise_action(conj, GroupElement{{1}}, f) == M(C, 2, 2, {"-i", "0", "0", "1"}));
  const auto F = SemiringDescriptor::finite_field(2, 2);
  const GroupAction frob({2}, F, {Automorphism::frobenius_power(1)});
  CHECK(entrywise_action(frob, GroupElement{{1}}, M(F, 1, 1, {"w"})) == M(F, 1, 1, {"w+1"}));
}

TEST_CASE("entrywise action is a monoidal dagger functor") {
  std::vector<GroupAction> actions{
      GroupAction({2}, C, {Automorphism::involution()}),
      GroupAction({4}, C, {Automorphism::involution()}),
      GroupAction({2, 2}, C, {Automorphism::involution(), Automorphism::involution()}),
      GroupAction({2}, SemiringDescriptor::finite_field(2, 2), {Automorphism::frobenius_power(1)}),
      GroupAction({3}, SemiringDescriptor::finite_field(2, 3), {Automorphism::frobenius_power(1)}),
      GroupAction({4}, SemiringDescriptor::finite_field(2, 4), {Automorphism::frobenius_power(1)}),
      GroupAction({2}, SemiringDescriptor::split_complex_rational(), {Automorphism::involution()}),
  };
  for (const auto& action : actions) {
    const auto sr = action.semiring();
    Rng rng(13);
    for (const auto& g : action.group().enumerate()) {
      for (std::size_t a = 1; a <= 3; ++a) {
        for (std::size_t b = 1; b <= 3; ++b) {
          const auto f = random_matrix(rng, sr, b, a), h = random_matrix(rng, sr, a, rng.range(1, 3));
          const auto k = random_matrix(rng, sr, rng.range(1, 3), rng.range(1, 3));
          auto act = [&](const Matrix& m) { return entrywise_action(action, g, m); };
          REQUIRE(act(compose(f, h)) == compose(act(f), act(h)));
          REQUIRE(act(kron(f, k)) == kron(act(f), act(k)));
          REQUIRE(act(dagger(f)) == dagger(act(f)));
          REQUIRE(act(Matrix::identity(sr, a)) == Matrix::identity(sr, a));
        }
      }
    }
  }
}
