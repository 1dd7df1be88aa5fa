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

#include <cstdint>
#include <string>
#include <vector>

#include "hocpm/semiring.hpp"

namespace hocpm {

/** Element of a product of cyclic groups, as a tuple of residues. */
struct GroupElement {
  std::vector<std::uint32_t> residues;

  bool operator==(const GroupElement& other) const = default;
  auto operator<=>(const GroupElement& other) const = default;

  /** "(1,0)" style rendering. */
  std::string to_string() const;
};

/**
 * Z_{n_1} x ... x Z_{n_r}. Factors of order 1 are dropped on construction;
 * the trivial group is kept as orders = (1).
 **/
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::uint32_t> orders);
  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup({1}); }

  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::size_t size() const { return size_; }
  bool is_trivial() const { return size_ == 1; }

  GroupElement identity() const;
  /** Canonical enumeration: lexicographic on residues, first factor most significant. */
  std::vector<GroupElement> enumerate() const;
  /** Position of x in enumerate(). */
  std::size_t index_of(const GroupElement& x) const;
  GroupElement element_at(std::size_t index) const;

  GroupElement op(const GroupElement& x, const GroupElement& y) const;
  GroupElement inv(const GroupElement& x) const;
  /** Throws InvalidElementError on arity mismatch or out-of-range residues. */
  void validate(const GroupElement& x) const;

  /** Parses "(1,0)", "1,0" or "1". */
  GroupElement parse_element(const std::string& text) const;

  bool operator==(const FiniteAbelianGroup& other) const { return orders_ == other.orders_; }

 private:
  std::vector<std::uint32_t> orders_;
  std::size_t size_;
};

std::vector<GroupElement> enumerate(const FiniteAbelianGroup& G);
GroupElement group_op(const FiniteAbelianGroup& G, const GroupElement& x, const GroupElement& y);
GroupElement group_inv(const FiniteAbelianGroup& G, const GroupElement& x);

/**
 * A homomorphism phi: G -> Aut(S), given by the images of the cyclic
 * generators. The image of generator i must have order dividing n_i.
 **/
class GroupAction {
 public:
  GroupAction(std::vector<std::uint32_t> orders, SemiringDescriptor semiring,
              std::vector<Automorphism> generator_images);
  static GroupAction trivial(SemiringDescriptor semiring);

  const FiniteAbelianGroup& group() const { return group_; }
  SemiringDescriptor semiring() const { return semiring_; }
  const std::vector<Automorphism>& generator_images() const { return images_; }

  /** phi(gamma), normalized. */
  const Automorphism& automorphism(const GroupElement& gamma) const;
  /** phi of the element at position i of the canonical enumeration. */
  const Automorphism& automorphism_at(std::size_t index) const { return by_index_[index]; }

  bool operator==(const GroupAction& other) const;

  std::string to_string() const;

 private:
  FiniteAbelianGroup group_;
  SemiringDescriptor semiring_;
  std::vector<Automorphism> images_;
  std::vector<Automorphism> by_index_;
};

Automorphism action_automorphism(const GroupAction& action, const GroupElement& gamma);

/**
 * Phi ⊙ Phi' on G x G'. Elements are labelled (gamma', gamma): the cyclic
 * factors of Phi' come first, so that folding along the product equals
 * folding along Phi and then along Phi'.
 **/
GroupAction action_product(const GroupAction& phi, const GroupAction& phi_prime);

/** Phi ⊙ ... ⊙ Phi (copies times); copies = 0 gives the trivial action. */
GroupAction action_power(const GroupAction& phi, std::size_t copies);

/** Norm of x: product over gamma of phi(gamma)(x). */
SemiringValue scalar_norm(const GroupAction& action, const SemiringValue& x);

}  // namespace hocpm
