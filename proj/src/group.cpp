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

#include "hocpm/group.hpp"

#include <sstream>

namespace hocpm {

namespace {

std::vector<std::uint32_t> drop_units(std::vector<std::uint32_t> orders) {
  std::vector<std::uint32_t> out;
  for (auto n : orders) {
    if (n == 0) throw InvalidElementError("cyclic orders must be >= 1");
    if (n > 1) out.push_back(n);
  }
  if (out.empty()) out.push_back(1);
  return out;
}

/** A few deterministic probe values used to double check homomorphism laws. */
std::vector<SemiringValue> probe_values(SemiringDescriptor sr) {
  std::vector<SemiringValue> out{SemiringValue::zero(sr), SemiringValue::one(sr)};
  switch (sr.kind()) {
    case SemiringKind::Boolean:
      break;
    case SemiringKind::Natural:
    case SemiringKind::Rational:
      out.push_back(SemiringValue::from_integer(sr, 7));
      break;
    case SemiringKind::GaussianRational:
    case SemiringKind::SplitComplexRational:
      out.push_back(SemiringValue::quadratic(sr, mpq_class(3, 5), mpq_class(4, 5)));
      out.push_back(SemiringValue::quadratic(sr, mpq_class(-2), mpq_class(7, 3)));
      break;
    case SemiringKind::FiniteField: {
      const std::uint64_t q = sr.cardinality();
      for (std::uint64_t i = 2; i < q && i < 64; ++i) {
        out.push_back(SemiringValue::field_index(sr, static_cast<std::uint32_t>(i)));
      }
      if (q > 64) out.push_back(SemiringValue::field_index(sr, static_cast<std::uint32_t>(q - 1)));
      break;
    }
  }
  return out;
}

}  // namespace

std::string GroupElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(residues[i]);
  }
  return out + ")";
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint32_t> orders)
    : orders_(drop_units(std::move(orders))), size_(1) {
  for (auto n : orders_) size_ *= n;
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement{std::vector<std::uint32_t>(orders_.size(), 0)};
}

std::vector<GroupElement> FiniteAbelianGroup::enumerate() const {
  std::vector<GroupElement> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(element_at(i));
  return out;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
  validate(x);
  std::size_t index = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) index = index * orders_[i] + x.residues[i];
  return index;
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const {
  if (index >= size_) throw InvalidElementError("element index out of range");
  GroupElement x{std::vector<std::uint32_t>(orders_.size(), 0)};
  for (std::size_t i = orders_.size(); i-- > 0;) {
    x.residues[i] = static_cast<std::uint32_t>(index % orders_[i]);
    index /= orders_[i];
  }
  return x;
}

void FiniteAbelianGroup::validate(const GroupElement& x) const {
  if (x.residues.size() != orders_.size()) {
    throw InvalidElementError(
        "element " + x.to_string() + " has arity " + std::to_string(x.residues.size()) +
        ", expected " + std::to_string(orders_.size()));
  }
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (x.residues[i] >= orders_[i]) {
      throw InvalidElementError("residue out of range in " + x.to_string());
    }
  }
}

GroupElement FiniteAbelianGroup::op(const GroupElement& x, const GroupElement& y) const {
  validate(x);
  validate(y);
  GroupElement out = x;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out.residues[i] = (x.residues[i] + y.residues[i]) % orders_[i];
  }
  return out;
}

GroupElement FiniteAbelianGroup::inv(const GroupElement& x) const {
  validate(x);
  GroupElement out = x;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out.residues[i] = (orders_[i] - x.residues[i]) % orders_[i];
  }
  return out;
}

GroupElement FiniteAbelianGroup::parse_element(const std::string& text) const {
  std::string body;
  for (char c : text) {
    if (c != '(' && c != ')' && c != ' ') body.push_back(c);
  }
  GroupElement x;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      x.residues.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    } catch (const std::exception&) {
      throw ParseError("malformed group element '" + text + "'");
    }
  }
  validate(x);
  return x;
}

std::vector<GroupElement> enumerate(const FiniteAbelianGroup& G) { return G.enumerate(); }

GroupElement group_op(const FiniteAbelianGroup& G, const GroupElement& x, const GroupElement& y) {
  return G.op(x, y);
}

GroupElement group_inv(const FiniteAbelianGroup& G, const GroupElement& x) { return G.inv(x); }

// ---------------------------------------------------------------------------

GroupAction::GroupAction(std::vector<std::uint32_t> orders, SemiringDescriptor semiring,
                         std::vector<Automorphism> generator_images)
    : group_(FiniteAbelianGroup::trivial()), semiring_(semiring) {
  if (orders.size() != generator_images.size()) {
    throw InvalidActionError("need exactly one generator image per cyclic factor");
  }
  const auto probes = probe_values(semiring);
  std::vector<std::uint32_t> kept_orders;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) throw InvalidActionError("cyclic orders must be >= 1");
    const Automorphism& a = generator_images[i];
    try {
      validate_automorphism(a, semiring);
    } catch (const InvalidAutomorphismError& e) {
      throw InvalidActionError(std::string("generator image invalid: ") + e.what());
    }
    if (!equivalent(automorphism_power(a, orders[i], semiring), Automorphism::identity(), semiring)) {
      throw InvalidActionError(
          "generator image " + a.to_string() + " does not have order dividing " +
          std::to_string(orders[i]) + " on " + semiring.name());
    }
    for (const auto& x : probes) {
      SemiringValue y = x;
      for (std::uint32_t r = 0; r < orders[i]; ++r) y = apply_automorphism(a, y);
      if (!(y == x)) throw InvalidActionError("generator image fails the order law on " + x.to_string());
    }
    if (orders[i] > 1) {
      kept_orders.push_back(orders[i]);
      images_.push_back(normalize(a, semiring));
    }
  }
  if (kept_orders.empty()) images_.push_back(Automorphism::identity());
  group_ = FiniteAbelianGroup(kept_orders);
  by_index_.reserve(group_.size());
  for (const auto& gamma : group_.enumerate()) {
    Automorphism acc = Automorphism::identity();
    for (std::size_t i = 0; i < group_.rank(); ++i) {
      acc = automorphism_then(acc, automorphism_power(images_[i], gamma.residues[i], semiring), semiring);
    }
    by_index_.push_back(acc);
  }
}

GroupAction GroupAction::trivial(SemiringDescriptor semiring) {
  return GroupAction({1}, semiring, {Automorphism::identity()});
}

const Automorphism& GroupAction::automorphism(const GroupElement& gamma) const {
  return by_index_[group_.index_of(gamma)];
}

bool GroupAction::operator==(const GroupAction& other) const {
  if (!(semiring_ == other.semiring_) || !(group_ == other.group_)) return false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!equivalent(images_[i], other.images_[i], semiring_)) return false;
  }
  return true;
}

std::string GroupAction::to_string() const {
  std::string out = "Z";
  for (std::size_t i = 0; i < group_.rank(); ++i) {
    if (i) out += "xZ";
    out += std::to_string(group_.orders()[i]);
  }
  out += " on " + semiring_.name() + " [";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ",";
    out += images_[i].to_string();
  }
  return out + "]";
}

Automorphism action_automorphism(const GroupAction& action, const GroupElement& gamma) {
  return action.automorphism(gamma);
}

GroupAction action_product(const GroupAction& phi, const GroupAction& phi_prime) {
  if (!(phi.semiring() == phi_prime.semiring())) {
    throw MixedSemiringError("action_product over different semirings");
  }
  const SemiringDescriptor sr = phi.semiring();
  for (const auto& a : phi.generator_images()) {
    for (const auto& b : phi_prime.generator_images()) {
      if (!equivalent(automorphism_then(a, b, sr), automorphism_then(b, a, sr), sr)) {
        throw NonCommutingActionsError(a.to_string() + " and " + b.to_string() + " do not commute");
      }
    }
  }
  std::vector<std::uint32_t> orders;
  std::vector<Automorphism> images;
  for (const GroupAction* part : {&phi_prime, &phi}) {
    if (part->group().is_trivial()) continue;
    for (std::size_t i = 0; i < part->group().rank(); ++i) {
      orders.push_back(part->group().orders()[i]);
      images.push_back(part->generator_images()[i]);
    }
  }
  if (orders.empty()) return GroupAction::trivial(sr);
  return GroupAction(orders, sr, images);
}

GroupAction action_power(const GroupAction& phi, std::size_t copies) {
  GroupAction out = GroupAction::trivial(phi.semiring());
  for (std::size_t i = 0; i < copies; ++i) out = action_product(out, phi);
  return out;
}

SemiringValue scalar_norm(const GroupAction& action, const SemiringValue& x) {
  if (!(x.descriptor() == action.semiring())) {
    throw MixedSemiringError("scalar_norm: value and action over different semirings");
  }
  SemiringValue out = SemiringValue::one(x.descriptor());
  for (std::size_t i = 0; i < action.group().size(); ++i) {
    out *= apply_automorphism(action.automorphism_at(i), x);
  }
  return out;
}

}  // namespace hocpm
