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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hocpm/errors.hpp"

/**
 * Exact arithmetic over a closed menu of commutative involutive semirings:
 *
 *   Boolean                 ({0,1}, or, and), trivial involution
 *   Natural                 arbitrary-precision naturals, trivial involution
 *   Rational                reduced fractions, trivial involution
 *   GaussianRational        a+bi, i^2 = -1, involution i -> -i
 *   SplitComplexRational    a+bj, j^2 = +1, involution j -> -j
 *   FiniteField(p, k)       GF(p^k) = Z/p[w]/(modulus), trivial involution,
 *                           Frobenius automorphisms x -> x^(p^e)
 **/
namespace hocpm {

enum class SemiringKind {
  Boolean,
  Natural,
  Rational,
  GaussianRational,
  SplitComplexRational,
  FiniteField
};

namespace detail {
struct SemiringData;
}

/**
 * Handle to an interned semiring descriptor. Copies are cheap; two handles
 * are equal iff they describe the same semiring (same kind and, for finite
 * fields, the same p, k and modulus).
 **/
class SemiringDescriptor {
 public:
  static SemiringDescriptor boolean();
  static SemiringDescriptor natural();
  static SemiringDescriptor rational();
  static SemiringDescriptor gaussian_rational();
  static SemiringDescriptor split_complex_rational();
  /** GF(p^k) with the built-in modulus for p <= 7, k <= 4. */
  static SemiringDescriptor finite_field(std::uint32_t p, std::uint32_t k);
  /**
   * GF(p^k) with an explicit monic modulus, coefficients listed from the
   * constant term up (length k+1). Irreducibility is verified.
   **/
  static SemiringDescriptor finite_field(
      std::uint32_t p, std::uint32_t k, const std::vector<std::uint32_t>& modulus);

  SemiringKind kind() const;
  std::uint32_t characteristic() const;  // p, finite fields only (0 otherwise)
  std::uint32_t degree() const;          // k, finite fields only (0 otherwise)
  const std::vector<std::uint32_t>& modulus() const;
  bool is_finite() const;
  /** Number of elements; throws NotFiniteError for infinite semirings. */
  std::uint64_t cardinality() const;
  /** Human-readable tag, e.g. "gaussian_rational" or "gf(2^2)". */
  std::string name() const;

  bool operator==(const SemiringDescriptor& other) const { return data_ == other.data_; }

  const detail::SemiringData& data() const { return *data_; }

 private:
  explicit SemiringDescriptor(const detail::SemiringData* data) : data_(data) {}
  const detail::SemiringData* data_;

  friend class SemiringValue;
};

/** Built-in moduli table, low coefficient first; std::nullopt if absent. */
std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, std::uint32_t k);

/** Element a+bu of Q[u] with u one of i (u^2=-1) or j (u^2=+1). */
struct QuadraticRational {
  mpq_class re;
  mpq_class im;
  bool operator==(const QuadraticRational& other) const {
    return re == other.re && im == other.im;
  }
};

/**
 * An exact element of one semiring of the menu. Values carry their
 * descriptor; combining values with different descriptors throws
 * MixedSemiringError.
 **/
class SemiringValue {
 public:
  /** monostate is an unallocated zero of the number-like kinds. */
  using Payload = std::variant<std::monostate, bool, mpz_class, mpq_class, QuadraticRational, std::uint32_t>;

  static SemiringValue zero(SemiringDescriptor sr);
  static SemiringValue one(SemiringDescriptor sr);
  /**
   * Image of an integer under the unique semiring map from the naturals
   * (extended to negatives where the semiring has additive inverses).
   **/
  static SemiringValue from_integer(SemiringDescriptor sr, long value);
  static SemiringValue boolean(SemiringDescriptor sr, bool value);
  static SemiringValue natural(SemiringDescriptor sr, const mpz_class& value);
  static SemiringValue rational(SemiringDescriptor sr, const mpq_class& value);
  /** a + b·u for Gaussian (u = i) and split-complex (u = j) rationals. */
  static SemiringValue quadratic(SemiringDescriptor sr, const mpq_class& re, const mpq_class& im);
  /** Field element from coefficients c_0 + c_1 w + ... (reduced mod p). */
  static SemiringValue field_element(SemiringDescriptor sr, const std::vector<std::uint32_t>& coeffs);
  /** Field element from its index sum_i c_i p^i. */
  static SemiringValue field_index(SemiringDescriptor sr, std::uint32_t index);
  /** Parses the exact string form produced by to_string(). */
  static SemiringValue parse(SemiringDescriptor sr, std::string_view text);

  SemiringDescriptor descriptor() const { return SemiringDescriptor(sr_); }
  const Payload& payload() const { return payload_; }

  bool is_zero() const;
  bool is_one() const;

  bool as_bool() const;
  const mpz_class& as_natural() const;
  const mpq_class& as_rational() const;
  const QuadraticRational& as_quadratic() const;
  std::uint32_t field_index() const;
  std::vector<std::uint32_t> field_coefficients() const;

  /** Exact string form: "true", "42", "-3/5", "3/5+4/5i", "2w^2+w+1". */
  std::string to_string() const;

  SemiringValue& operator+=(const SemiringValue& other);
  SemiringValue& operator*=(const SemiringValue& other);
  /** *this += a * b without building the product separately. */
  void add_product(const SemiringValue& a, const SemiringValue& b);

  friend SemiringValue operator+(SemiringValue x, const SemiringValue& y) { return x += y; }
  friend SemiringValue operator*(SemiringValue x, const SemiringValue& y) { return x *= y; }
  /** Values over different semirings compare unequal. */
  bool operator==(const SemiringValue& other) const;

 private:
  SemiringValue(const detail::SemiringData* sr, Payload payload)
      : sr_(sr), payload_(std::move(payload)) {}
  void require_same(const SemiringValue& other) const;
  /** Replaces an unallocated zero by the concrete zero of its kind. */
  void materialize();

  const detail::SemiringData* sr_;
  Payload payload_;
};

enum class ArithOp { Add, Mul };

/** (S, +, 0, ×, 1) dispatch. */
SemiringValue sr_arith(ArithOp op, const SemiringValue& x, const SemiringValue& y);

/** All elements of a finite semiring in canonical order (index order). */
std::vector<SemiringValue> enumerate_elements(SemiringDescriptor sr);

// ---------------------------------------------------------------------------
// Automorphisms

/**
 * A semiring automorphism, as a word in the generators of the menu's
 * automorphism groups. Validity depends on the semiring it is applied to:
 * Involution acts as conjugation u -> -u on Gaussian and split-complex
 * rationals and as the identity elsewhere; FrobeniusPower(e) is x -> x^(p^e)
 * and is only defined on finite fields.
 **/
class Automorphism {
 public:
  enum class Kind { Identity, Involution, FrobeniusPower, Composite };

  static Automorphism identity();
  static Automorphism involution();
  static Automorphism frobenius_power(std::uint32_t exponent);
  /** Applies parts left to right: composite({a, b})(x) = b(a(x)). */
  static Automorphism composite(std::vector<Automorphism> parts);

  Kind kind() const { return kind_; }
  std::uint32_t exponent() const { return exponent_; }
  const std::vector<Automorphism>& parts() const { return parts_; }

  /** "identity", "involution", "frobenius:e", or "composite(a,b,...)". */
  std::string to_string() const;
  static Automorphism parse(std::string_view text);

  /** Structural equality; use equivalent() for equality as maps. */
  bool operator==(const Automorphism& other) const = default;

 private:
  Automorphism(Kind kind, std::uint32_t exponent, std::vector<Automorphism> parts)
      : kind_(kind), exponent_(exponent), parts_(std::move(parts)) {}

  Kind kind_;
  std::uint32_t exponent_;
  std::vector<Automorphism> parts_;
};

/** Throws InvalidAutomorphismError unless a is defined on sr. */
void validate_automorphism(const Automorphism& a, SemiringDescriptor sr);

/**
 * Canonical equivalent of a on sr: Identity, Involution (only on the
 * quadratic semirings) or FrobeniusPower(e) with 0 < e < k.
 **/
Automorphism normalize(const Automorphism& a, SemiringDescriptor sr);

bool equivalent(const Automorphism& a, const Automorphism& b, SemiringDescriptor sr);

/** Order of a in Aut(sr). */
std::uint32_t automorphism_order(const Automorphism& a, SemiringDescriptor sr);

/** a^n as a canonical automorphism on sr. */
Automorphism automorphism_power(const Automorphism& a, std::uint32_t n, SemiringDescriptor sr);

/** first then second, normalized on sr. */
Automorphism automorphism_then(
    const Automorphism& first, const Automorphism& second, SemiringDescriptor sr);

SemiringValue apply_automorphism(const Automorphism& a, const SemiringValue& x);

/** The descriptor's own involution (used by dagger and conjugate). */
SemiringValue conjugate(const SemiringValue& x);

}  // namespace hocpm
