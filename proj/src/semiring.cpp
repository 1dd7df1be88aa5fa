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

#include "hocpm/semiring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace hocpm {

namespace detail {

struct SemiringData {
  SemiringKind kind;
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<std::uint32_t> modulus;
  // Finite fields only.
  std::uint32_t q = 0;
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, i < q-1
  std::vector<std::uint32_t> log;  // log[exp[i]] = i
  std::vector<std::uint32_t> p_powers_mod;  // p^e mod (q-1), e < k
};

}  // namespace detail

namespace {

using detail::SemiringData;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/** Coefficient vectors (low first) of the field element with given index. */
std::vector<std::uint32_t> digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> out(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = index % p;
    index /= p;
  }
  return out;
}

std::uint32_t index_of(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint32_t index = 0;
  for (std::size_t i = digits.size(); i-- > 0;) index = index * p + digits[i];
  return index;
}

/** Remainder of a modulo the monic polynomial m, over Z/p. */
std::vector<std::uint32_t> poly_mod(
    std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm && !a.empty()) {
    const std::uint32_t lead = a.back() % p;
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

std::uint32_t slow_field_mul(std::uint32_t x, std::uint32_t y, const SemiringData& d) {
  const auto a = digits_of(x, d.p, d.k);
  const auto b = digits_of(y, d.p, d.k);
  std::vector<std::uint32_t> prod(2 * d.k, 0);
  for (std::uint32_t i = 0; i < d.k; ++i) {
    for (std::uint32_t j = 0; j < d.k; ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % d.p;
    }
  }
  auto r = poly_mod(prod, d.modulus, d.p);
  r.resize(d.k, 0);
  return index_of(r, d.p);
}

bool is_irreducible(const std::vector<std::uint32_t>& m, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(m.size() - 1);
  // Every reducible polynomial of degree k has a monic factor of degree <= k/2.
  for (std::uint32_t deg = 1; deg <= k / 2; ++deg) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      auto divisor = digits_of(c, p, deg);
      divisor.push_back(1);
      const auto r = poly_mod(m, divisor, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t v) { return v == 0; })) return false;
    }
  }
  return true;
}

std::unique_ptr<SemiringData> make_field(
    std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InvalidSemiringError("finite field characteristic must be prime");
  if (k < 1 || k > 4) throw InvalidSemiringError("finite field degree must be in [1, 4]");
  if (modulus.size() != k + 1) {
    throw InvalidSemiringError("modulus must have k+1 coefficients");
  }
  for (auto c : modulus) {
    if (c >= p) throw InvalidSemiringError("modulus coefficients must lie in [0, p)");
  }
  if (modulus.back() != 1) throw InvalidSemiringError("modulus must be monic");
  if (!is_irreducible(modulus, p)) throw InvalidSemiringError("modulus is reducible");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q > 65536) throw InvalidSemiringError("finite field too large (p^k > 65536)");

  auto d = std::make_unique<SemiringData>();
  d->kind = SemiringKind::FiniteField;
  d->p = p;
  d->k = k;
  d->modulus = std::move(modulus);
  d->q = static_cast<std::uint32_t>(q);
  const std::uint32_t units = d->q - 1;
  d->log.assign(d->q, 0);
  for (std::uint32_t g = 1; g < d->q; ++g) {
    std::vector<std::uint32_t> powers;
    powers.reserve(units);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < units; ++i) {
      powers.push_back(x);
      x = slow_field_mul(x, g, *d);
      if (x == 1 && i + 1 < units) break;
    }
    if (powers.size() == units) {
      d->exp = std::move(powers);
      break;
    }
  }
  if (d->exp.size() != units) throw InternalError("no primitive element found");
  for (std::uint32_t i = 0; i < units; ++i) d->log[d->exp[i]] = i;
  std::uint64_t pe = 1;
  for (std::uint32_t e = 0; e < k; ++e) {
    d->p_powers_mod.push_back(static_cast<std::uint32_t>(pe % units));
    pe = (pe * p) % units;
  }
  return d;
}

SemiringData basic_data(SemiringKind kind) {
  SemiringData d;
  d.kind = kind;
  return d;
}

const SemiringData* intern_basic(SemiringKind kind) {
  static const SemiringData boolean = basic_data(SemiringKind::Boolean);
  static const SemiringData natural = basic_data(SemiringKind::Natural);
  static const SemiringData rational = basic_data(SemiringKind::Rational);
  static const SemiringData gaussian = basic_data(SemiringKind::GaussianRational);
  static const SemiringData split = basic_data(SemiringKind::SplitComplexRational);
  switch (kind) {
    case SemiringKind::Boolean: return &boolean;
    case SemiringKind::Natural: return &natural;
    case SemiringKind::Rational: return &rational;
    case SemiringKind::GaussianRational: return &gaussian;
    case SemiringKind::SplitComplexRational: return &split;
    default: throw InternalError("intern_basic on finite field");
  }
}

const SemiringData* intern_field(
    std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  using Key = std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<SemiringData>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  Key key{p, k, modulus};
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto data = make_field(p, k, std::move(modulus));
  const SemiringData* raw = data.get();
  registry.emplace(std::move(key), std::move(data));
  return raw;
}

bool is_quadratic(SemiringKind kind) {
  return kind == SemiringKind::GaussianRational || kind == SemiringKind::SplitComplexRational;
}

std::string trim(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool slash = false;
  bool digit_before = false, digit_after = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      (slash ? digit_after : digit_before) = true;
    } else if (s[i] == '/' && !slash) {
      slash = true;
    } else {
      throw ParseError("malformed rational '" + s + "'");
    }
  }
  if (!digit_before || (slash && !digit_after)) throw ParseError("malformed rational '" + s + "'");
  std::string body = s[0] == '+' ? s.substr(1) : s;
  mpq_class q;
  if (q.set_str(body, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

struct Canon {
  bool flip = false;
  std::uint32_t frob = 0;
};

Canon canon_of(const Automorphism& a, const SemiringData& d) {
  Canon c;
  switch (a.kind()) {
    case Automorphism::Kind::Identity:
      break;
    case Automorphism::Kind::Involution:
      c.flip = is_quadratic(d.kind);
      break;
    case Automorphism::Kind::FrobeniusPower:
      if (d.kind != SemiringKind::FiniteField) {
        throw InvalidAutomorphismError("FrobeniusPower is only defined on finite fields");
      }
      c.frob = a.exponent() % d.k;
      break;
    case Automorphism::Kind::Composite:
      for (const auto& part : a.parts()) {
        const Canon pc = canon_of(part, d);
        c.flip = c.flip != pc.flip;
        c.frob = d.k == 0 ? 0 : (c.frob + pc.frob) % d.k;
      }
      break;
  }
  return c;
}

Automorphism from_canon(const Canon& c) {
  if (c.flip) return Automorphism::involution();
  if (c.frob != 0) return Automorphism::frobenius_power(c.frob);
  return Automorphism::identity();
}

SemiringValue apply_canon(const Canon& c, const SemiringValue& x) {
  const SemiringData& d = x.descriptor().data();
  if (c.flip && is_quadratic(d.kind)) {
    const auto& v = x.as_quadratic();
    return SemiringValue::quadratic(x.descriptor(), v.re, -v.im);
  }
  if (c.frob != 0 && d.kind == SemiringKind::FiniteField) {
    const std::uint32_t idx = x.field_index();
    if (idx == 0) return x;
    const std::uint64_t units = d.q - 1;
    const std::uint64_t l = (static_cast<std::uint64_t>(d.log[idx]) * d.p_powers_mod[c.frob]) % units;
    return SemiringValue::field_index(x.descriptor(), d.exp[l]);
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// SemiringDescriptor

SemiringDescriptor SemiringDescriptor::boolean() {
  return SemiringDescriptor(intern_basic(SemiringKind::Boolean));
}
SemiringDescriptor SemiringDescriptor::natural() {
  return SemiringDescriptor(intern_basic(SemiringKind::Natural));
}
SemiringDescriptor SemiringDescriptor::rational() {
  return SemiringDescriptor(intern_basic(SemiringKind::Rational));
}
SemiringDescriptor SemiringDescriptor::gaussian_rational() {
  return SemiringDescriptor(intern_basic(SemiringKind::GaussianRational));
}
SemiringDescriptor SemiringDescriptor::split_complex_rational() {
  return SemiringDescriptor(intern_basic(SemiringKind::SplitComplexRational));
}

std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, std::uint32_t k) {
  // Conway polynomials, constant term first.
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table{
      {{2, 1}, {1, 1}},       {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},                      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}}, {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},       {{5, 2}, {2, 4, 1}},    {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},                      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},    {{7, 3}, {4, 0, 6, 1}}, {{7, 4}, {3, 4, 5, 0, 1}},
  };
  auto it = table.find({p, k});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

SemiringDescriptor SemiringDescriptor::finite_field(std::uint32_t p, std::uint32_t k) {
  auto modulus = builtin_modulus(p, k);
  if (!modulus) {
    throw InvalidSemiringError(
        "no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(k) +
        "); pass one explicitly");
  }
  return SemiringDescriptor(intern_field(p, k, *modulus));
}

SemiringDescriptor SemiringDescriptor::finite_field(
    std::uint32_t p, std::uint32_t k, const std::vector<std::uint32_t>& modulus) {
  return SemiringDescriptor(intern_field(p, k, modulus));
}

SemiringKind SemiringDescriptor::kind() const { return data_->kind; }
std::uint32_t SemiringDescriptor::characteristic() const { return data_->p; }
std::uint32_t SemiringDescriptor::degree() const { return data_->k; }
const std::vector<std::uint32_t>& SemiringDescriptor::modulus() const { return data_->modulus; }

bool SemiringDescriptor::is_finite() const {
  return data_->kind == SemiringKind::Boolean || data_->kind == SemiringKind::FiniteField;
}

std::uint64_t SemiringDescriptor::cardinality() const {
  if (data_->kind == SemiringKind::Boolean) return 2;
  if (data_->kind == SemiringKind::FiniteField) return data_->q;
  throw NotFiniteError(name() + " is infinite");
}

std::string SemiringDescriptor::name() const {
  switch (data_->kind) {
    case SemiringKind::Boolean: return "boolean";
    case SemiringKind::Natural: return "natural";
    case SemiringKind::Rational: return "rational";
    case SemiringKind::GaussianRational: return "gaussian_rational";
    case SemiringKind::SplitComplexRational: return "split_complex_rational";
    case SemiringKind::FiniteField:
      return "gf(" + std::to_string(data_->p) + "^" + std::to_string(data_->k) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// SemiringValue

SemiringValue SemiringValue::zero(SemiringDescriptor sr) {
  switch (sr.data_->kind) {
    case SemiringKind::Natural:
    case SemiringKind::Rational:
    case SemiringKind::GaussianRational:
    case SemiringKind::SplitComplexRational:
      return SemiringValue(sr.data_, std::monostate{});
    default:
      return from_integer(sr, 0);
  }
}
SemiringValue SemiringValue::one(SemiringDescriptor sr) { return from_integer(sr, 1); }

SemiringValue SemiringValue::from_integer(SemiringDescriptor sr, long value) {
  const SemiringData* d = sr.data_;
  switch (d->kind) {
    case SemiringKind::Boolean:
      if (value < 0) throw ParseError("negative integer in the boolean semiring");
      return SemiringValue(d, value != 0);
    case SemiringKind::Natural:
      if (value < 0) throw ParseError("negative integer in the natural semiring");
      return SemiringValue(d, mpz_class(value));
    case SemiringKind::Rational:
      return SemiringValue(d, mpq_class(value));
    case SemiringKind::GaussianRational:
    case SemiringKind::SplitComplexRational:
      return SemiringValue(d, QuadraticRational{mpq_class(value), mpq_class(0)});
    case SemiringKind::FiniteField: {
      long r = value % static_cast<long>(d->p);
      if (r < 0) r += d->p;
      return SemiringValue(d, static_cast<std::uint32_t>(r));
    }
  }
  throw InternalError("unknown semiring kind");
}

SemiringValue SemiringValue::boolean(SemiringDescriptor sr, bool value) {
  if (sr.kind() != SemiringKind::Boolean) throw MixedSemiringError("boolean value for " + sr.name());
  return SemiringValue(sr.data_, value);
}

SemiringValue SemiringValue::natural(SemiringDescriptor sr, const mpz_class& value) {
  if (sr.kind() != SemiringKind::Natural) throw MixedSemiringError("natural value for " + sr.name());
  if (value < 0) throw ParseError("negative natural");
  return SemiringValue(sr.data_, value);
}

SemiringValue SemiringValue::rational(SemiringDescriptor sr, const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  if (sr.kind() == SemiringKind::Rational) return SemiringValue(sr.data_, v);
  if (is_quadratic(sr.kind())) return SemiringValue(sr.data_, QuadraticRational{v, 0});
  throw MixedSemiringError("rational value for " + sr.name());
}

SemiringValue SemiringValue::quadratic(SemiringDescriptor sr, const mpq_class& re, const mpq_class& im) {
  if (!is_quadratic(sr.kind())) throw MixedSemiringError("quadratic value for " + sr.name());
  QuadraticRational v{re, im};
  v.re.canonicalize();
  v.im.canonicalize();
  return SemiringValue(sr.data_, std::move(v));
}

SemiringValue SemiringValue::field_element(
    SemiringDescriptor sr, const std::vector<std::uint32_t>& coeffs) {
  if (sr.kind() != SemiringKind::FiniteField) throw MixedSemiringError("field value for " + sr.name());
  const SemiringData& d = *sr.data_;
  if (coeffs.size() > d.k) throw ParseError("too many coefficients for " + sr.name());
  std::vector<std::uint32_t> digits(d.k, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) digits[i] = coeffs[i] % d.p;
  return SemiringValue(sr.data_, index_of(digits, d.p));
}

SemiringValue SemiringValue::field_index(SemiringDescriptor sr, std::uint32_t index) {
  if (sr.kind() != SemiringKind::FiniteField) throw MixedSemiringError("field value for " + sr.name());
  if (index >= sr.data_->q) throw ParseError("field index out of range");
  return SemiringValue(sr.data_, index);
}

SemiringValue SemiringValue::parse(SemiringDescriptor sr, std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty value");
  const SemiringData* d = sr.data_;
  switch (d->kind) {
    case SemiringKind::Boolean:
      if (s == "true" || s == "1") return SemiringValue(d, true);
      if (s == "false" || s == "0") return SemiringValue(d, false);
      throw ParseError("malformed boolean '" + s + "'");
    case SemiringKind::Natural: {
      if (!std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("malformed natural '" + s + "'");
      }
      return SemiringValue(d, mpz_class(s, 10));
    }
    case SemiringKind::Rational:
      return SemiringValue(d, parse_rational(s));
    case SemiringKind::GaussianRational:
    case SemiringKind::SplitComplexRational: {
      const char unit = d->kind == SemiringKind::GaussianRational ? 'i' : 'j';
      if (s.back() != unit) return SemiringValue(d, QuadraticRational{parse_rational(s), 0});
      std::string body = s.substr(0, s.size() - 1);
      if (!body.empty() && body.back() == '*') body.pop_back();
      std::size_t split = std::string::npos;
      for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') {
          split = i;
          break;
        }
      }
      std::string re_text = split == std::string::npos ? "0" : body.substr(0, split);
      std::string im_text = split == std::string::npos ? body : body.substr(split);
      mpq_class im;
      if (im_text.empty() || im_text == "+") {
        im = 1;
      } else if (im_text == "-") {
        im = -1;
      } else {
        im = parse_rational(im_text);
      }
      return SemiringValue(d, QuadraticRational{parse_rational(re_text), im});
    }
    case SemiringKind::FiniteField: {
      std::vector<std::uint32_t> coeffs(d->k, 0);
      std::size_t start = 0;
      while (start <= s.size()) {
        std::size_t end = s.find('+', start);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(start, end - start);
        if (term.empty()) throw ParseError("malformed field element '" + s + "'");
        std::uint32_t exponent = 0;
        std::string coef = term;
        const auto w = term.find('w');
        if (w != std::string::npos) {
          coef = term.substr(0, w);
          if (!coef.empty() && coef.back() == '*') coef.pop_back();
          std::string rest = term.substr(w + 1);
          exponent = 1;
          if (!rest.empty()) {
            if (rest[0] != '^' || rest.size() < 2) throw ParseError("malformed field term '" + term + "'");
            exponent = static_cast<std::uint32_t>(std::stoul(rest.substr(1)));
          }
        }
        std::uint32_t c = 1;
        if (!coef.empty()) {
          if (!std::all_of(coef.begin(), coef.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            throw ParseError("malformed field coefficient '" + coef + "'");
          }
          c = static_cast<std::uint32_t>(std::stoul(coef) % d->p);
        } else if (w == std::string::npos) {
          throw ParseError("malformed field term '" + term + "'");
        }
        if (exponent >= d->k) throw ParseError("field term degree exceeds k-1 in '" + s + "'");
        coeffs[exponent] = (coeffs[exponent] + c) % d->p;
        start = end + 1;
      }
      return SemiringValue(d, index_of(coeffs, d->p));
    }
  }
  throw InternalError("unknown semiring kind");
}

bool SemiringValue::is_zero() const {
  if (std::holds_alternative<std::monostate>(payload_)) return true;
  switch (sr_->kind) {
    case SemiringKind::Boolean: return !as_bool();
    case SemiringKind::Natural: return as_natural() == 0;
    case SemiringKind::Rational: return as_rational() == 0;
    case SemiringKind::FiniteField: return field_index() == 0;
    default: return as_quadratic().re == 0 && as_quadratic().im == 0;
  }
}

bool SemiringValue::is_one() const { return *this == one(descriptor()); }

bool SemiringValue::as_bool() const { return std::get<bool>(payload_); }
const mpz_class& SemiringValue::as_natural() const {
  static const mpz_class zero_value(0);
  if (std::holds_alternative<std::monostate>(payload_)) return zero_value;
  return std::get<mpz_class>(payload_);
}
const mpq_class& SemiringValue::as_rational() const {
  static const mpq_class zero_value(0);
  if (std::holds_alternative<std::monostate>(payload_)) return zero_value;
  return std::get<mpq_class>(payload_);
}
const QuadraticRational& SemiringValue::as_quadratic() const {
  static const QuadraticRational zero_value{mpq_class(0), mpq_class(0)};
  if (std::holds_alternative<std::monostate>(payload_)) return zero_value;
  return std::get<QuadraticRational>(payload_);
}

bool SemiringValue::operator==(const SemiringValue& other) const {
  if (sr_ != other.sr_) return false;
  if (std::holds_alternative<std::monostate>(payload_) || std::holds_alternative<std::monostate>(other.payload_)) {
    return is_zero() && other.is_zero();
  }
  return payload_ == other.payload_;
}

void SemiringValue::materialize() {
  if (!std::holds_alternative<std::monostate>(payload_)) return;
  switch (sr_->kind) {
    case SemiringKind::Natural: payload_ = mpz_class(0); break;
    case SemiringKind::Rational: payload_ = mpq_class(0); break;
    default: payload_ = QuadraticRational{mpq_class(0), mpq_class(0)}; break;
  }
}
std::uint32_t SemiringValue::field_index() const { return std::get<std::uint32_t>(payload_); }
std::vector<std::uint32_t> SemiringValue::field_coefficients() const {
  return digits_of(field_index(), sr_->p, sr_->k);
}

std::string SemiringValue::to_string() const {
  switch (sr_->kind) {
    case SemiringKind::Boolean:
      return as_bool() ? "true" : "false";
    case SemiringKind::Natural:
      return as_natural().get_str();
    case SemiringKind::Rational:
      return as_rational().get_str();
    case SemiringKind::GaussianRational:
    case SemiringKind::SplitComplexRational: {
      const char unit = sr_->kind == SemiringKind::GaussianRational ? 'i' : 'j';
      const auto& v = as_quadratic();
      if (v.im == 0) return v.re.get_str();
      std::string imag;
      if (v.im == 1) {
        imag = std::string(1, unit);
      } else if (v.im == -1) {
        imag = std::string("-") + unit;
      } else {
        imag = v.im.get_str() + unit;
      }
      if (v.re == 0) return imag;
      return v.re.get_str() + (imag[0] == '-' ? "" : "+") + imag;
    }
    case SemiringKind::FiniteField: {
      const auto c = field_coefficients();
      std::string out;
      for (std::size_t e = c.size(); e-- > 0;) {
        if (c[e] == 0) continue;
        if (!out.empty()) out += "+";
        if (e == 0) {
          out += std::to_string(c[e]);
        } else {
          if (c[e] != 1) out += std::to_string(c[e]);
          out += "w";
          if (e > 1) out += "^" + std::to_string(e);
        }
      }
      return out.empty() ? "0" : out;
    }
  }
  return "?";
}

void SemiringValue::require_same(const SemiringValue& other) const {
  if (sr_ != other.sr_) {
    throw MixedSemiringError(
        "cannot combine " + descriptor().name() + " with " + other.descriptor().name());
  }
}

SemiringValue& SemiringValue::operator+=(const SemiringValue& other) {
  require_same(other);
  if (std::holds_alternative<std::monostate>(other.payload_)) return *this;
  if (std::holds_alternative<std::monostate>(payload_)) {
    payload_ = other.payload_;
    return *this;
  }
  switch (sr_->kind) {
    case SemiringKind::Boolean:
      payload_ = as_bool() || other.as_bool();
      break;
    case SemiringKind::Natural:
      std::get<mpz_class>(payload_) += other.as_natural();
      break;
    case SemiringKind::Rational:
      std::get<mpq_class>(payload_) += other.as_rational();
      break;
    case SemiringKind::GaussianRational:
    case SemiringKind::SplitComplexRational: {
      auto& v = std::get<QuadraticRational>(payload_);
      v.re += other.as_quadratic().re;
      v.im += other.as_quadratic().im;
      break;
    }
    case SemiringKind::FiniteField: {
      std::uint32_t a = field_index(), b = other.field_index(), r = 0, scale = 1;
      for (std::uint32_t i = 0; i < sr_->k; ++i) {
        r += ((a % sr_->p + b % sr_->p) % sr_->p) * scale;
        a /= sr_->p;
        b /= sr_->p;
        scale *= sr_->p;
      }
      payload_ = r;
      break;
    }
  }
  return *this;
}

SemiringValue& SemiringValue::operator*=(const SemiringValue& other) {
  require_same(other);
  if (std::holds_alternative<std::monostate>(payload_)) return *this;
  if (std::holds_alternative<std::monostate>(other.payload_)) {
    payload_ = std::monostate{};
    return *this;
  }
  switch (sr_->kind) {
    case SemiringKind::Boolean:
      payload_ = as_bool() && other.as_bool();
      break;
    case SemiringKind::Natural:
      std::get<mpz_class>(payload_) *= other.as_natural();
      break;
    case SemiringKind::Rational:
      std::get<mpq_class>(payload_) *= other.as_rational();
      break;
    case SemiringKind::GaussianRational:
    case SemiringKind::SplitComplexRational: {
      auto& x = std::get<QuadraticRational>(payload_);
      const auto& y = other.as_quadratic();
      if (sgn(y.im) == 0) {
        x.re *= y.re;
        x.im *= y.re;
      } else if (sgn(x.im) == 0) {
        x.im = x.re * y.im;
        x.re *= y.re;
      } else {
        const int sign = sr_->kind == SemiringKind::GaussianRational ? -1 : 1;
        mpq_class re = x.re * y.re + sign * (x.im * y.im);
        mpq_class im = x.re * y.im + x.im * y.re;
        x.re = std::move(re);
        x.im = std::move(im);
      }
      break;
    }
    case SemiringKind::FiniteField: {
      const std::uint32_t a = field_index(), b = other.field_index();
      if (a == 0 || b == 0) {
        payload_ = std::uint32_t{0};
      } else {
        const std::uint32_t units = sr_->q - 1;
        payload_ = sr_->exp[(sr_->log[a] + sr_->log[b]) % units];
      }
      break;
    }
  }
  return *this;
}

void SemiringValue::add_product(const SemiringValue& a, const SemiringValue& b) {
  require_same(a);
  require_same(b);
  if (std::holds_alternative<std::monostate>(a.payload_) || std::holds_alternative<std::monostate>(b.payload_)) return;
  switch (sr_->kind) {
    case SemiringKind::Natural:
      materialize();
      mpz_addmul(std::get<mpz_class>(payload_).get_mpz_t(), a.as_natural().get_mpz_t(), b.as_natural().get_mpz_t());
      return;
    case SemiringKind::Rational: {
      thread_local mpq_class t;
      mpq_mul(t.get_mpq_t(), a.as_rational().get_mpq_t(), b.as_rational().get_mpq_t());
      materialize();
      std::get<mpq_class>(payload_) += t;
      return;
    }
    case SemiringKind::GaussianRational:
    case SemiringKind::SplitComplexRational: {
      thread_local mpq_class t;
      materialize();
      auto& acc = std::get<QuadraticRational>(payload_);
      const auto& x = a.as_quadratic();
      const auto& y = b.as_quadratic();
      auto addmul = [](mpq_class& target, const mpq_class& u, const mpq_class& v, bool negate) {
        if (sgn(u) == 0 || sgn(v) == 0) return;
        mpq_mul(t.get_mpq_t(), u.get_mpq_t(), v.get_mpq_t());
        if (negate) {
          target -= t;
        } else {
          target += t;
        }
      };
      addmul(acc.re, x.re, y.re, false);
      addmul(acc.re, x.im, y.im, sr_->kind == SemiringKind::GaussianRational);
      addmul(acc.im, x.re, y.im, false);
      addmul(acc.im, x.im, y.re, false);
      return;
    }
    default:
      *this += a * b;
  }
}

SemiringValue sr_arith(ArithOp op, const SemiringValue& x, const SemiringValue& y) {
  return op == ArithOp::Add ? x + y : x * y;
}

std::vector<SemiringValue> enumerate_elements(SemiringDescriptor sr) {
  std::vector<SemiringValue> out;
  if (sr.kind() == SemiringKind::Boolean) {
    out.push_back(SemiringValue::boolean(sr, false));
    out.push_back(SemiringValue::boolean(sr, true));
    return out;
  }
  if (sr.kind() != SemiringKind::FiniteField) throw NotFiniteError(sr.name() + " is infinite");
  for (std::uint32_t i = 0; i < sr.data().q; ++i) out.push_back(SemiringValue::field_index(sr, i));
  return out;
}

// ---------------------------------------------------------------------------
// Automorphism

Automorphism Automorphism::identity() { return Automorphism(Kind::Identity, 0, {}); }
Automorphism Automorphism::involution() { return Automorphism(Kind::Involution, 0, {}); }
Automorphism Automorphism::frobenius_power(std::uint32_t exponent) {
  return Automorphism(Kind::FrobeniusPower, exponent, {});
}
Automorphism Automorphism::composite(std::vector<Automorphism> parts) {
  return Automorphism(Kind::Composite, 0, std::move(parts));
}

std::string Automorphism::to_string() const {
  switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::Involution: return "involution";
    case Kind::FrobeniusPower: return "frobenius:" + std::to_string(exponent_);
    case Kind::Composite: {
      std::string out = "composite(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += parts_[i].to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

Automorphism Automorphism::parse(std::string_view text) {
  const std::string s = trim(text);
  if (s == "identity" || s == "id") return identity();
  if (s == "involution" || s == "conj") return involution();
  if (s.rfind("frobenius", 0) == 0) {
    if (s == "frobenius") return frobenius_power(1);
    if (s.size() > 10 && (s[9] == ':' || s[9] == '^')) {
      const std::string e = s.substr(10);
      if (std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        return frobenius_power(static_cast<std::uint32_t>(std::stoul(e)));
      }
    }
    throw ParseError("malformed frobenius automorphism '" + s + "'");
  }
  if (s.rfind("composite(", 0) == 0 && s.back() == ')') {
    std::vector<Automorphism> parts;
    const std::string body = s.substr(10, s.size() - 11);
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        if (i > start) parts.push_back(parse(body.substr(start, i - start)));
        start = i + 1;
      } else if (body[i] == '(') {
        ++depth;
      } else if (body[i] == ')') {
        --depth;
      }
    }
    return composite(std::move(parts));
  }
  throw ParseError("unknown automorphism '" + s + "'");
}

void validate_automorphism(const Automorphism& a, SemiringDescriptor sr) {
  (void)canon_of(a, sr.data());
}

Automorphism normalize(const Automorphism& a, SemiringDescriptor sr) {
  return from_canon(canon_of(a, sr.data()));
}

bool equivalent(const Automorphism& a, const Automorphism& b, SemiringDescriptor sr) {
  const Canon ca = canon_of(a, sr.data());
  const Canon cb = canon_of(b, sr.data());
  return ca.flip == cb.flip && ca.frob == cb.frob;
}

std::uint32_t automorphism_order(const Automorphism& a, SemiringDescriptor sr) {
  const Canon c = canon_of(a, sr.data());
  if (c.flip) return 2;
  if (c.frob != 0) return sr.degree() / std::gcd(c.frob, sr.degree());
  return 1;
}

Automorphism automorphism_power(const Automorphism& a, std::uint32_t n, SemiringDescriptor sr) {
  Canon c = canon_of(a, sr.data());
  Canon out;
  out.flip = c.flip && (n % 2 == 1);
  out.frob = sr.degree() == 0 ? 0
                              : static_cast<std::uint32_t>((static_cast<std::uint64_t>(c.frob) * n) % sr.degree());
  return from_canon(out);
}

Automorphism automorphism_then(
    const Automorphism& first, const Automorphism& second, SemiringDescriptor sr) {
  return normalize(Automorphism::composite({first, second}), sr);
}

SemiringValue apply_automorphism(const Automorphism& a, const SemiringValue& x) {
  return apply_canon(canon_of(a, x.descriptor().data()), x);
}

SemiringValue conjugate(const SemiringValue& x) {
  Canon c;
  c.flip = true;
  return apply_canon(c, x);
}

}  // namespace hocpm
