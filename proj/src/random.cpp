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

#include "hocpm/random.hpp"

namespace hocpm {

namespace {

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream), engine_(seeded(seed, stream)) {}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  // Rejection sampling keeps the result independent of the standard library.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

long Rng::range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

Rng Rng::split(std::uint64_t stream) const { return Rng(seed_, stream_ * 0x9E3779B97F4A7C15ULL + stream + 1); }

SemiringValue random_value(Rng& rng, SemiringDescriptor sr) {
  auto rational = [&rng]() {
    if (rng.below(4) == 0) return mpq_class(0);
    const long num = rng.range(-4, 4);
    const long den = rng.range(1, 3);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  };
  switch (sr.kind()) {
    case SemiringKind::Boolean:
      return SemiringValue::boolean(sr, rng.below(2) == 1);
    case SemiringKind::Natural:
      return SemiringValue::natural(sr, mpz_class(static_cast<unsigned long>(rng.below(5))));
    case SemiringKind::Rational:
      return SemiringValue::rational(sr, rational());
    case SemiringKind::GaussianRational:
    case SemiringKind::SplitComplexRational: {
      mpq_class re = rational();
      mpq_class im = rational();
      return SemiringValue::quadratic(sr, re, im);
    }
    case SemiringKind::FiniteField:
      return SemiringValue::field_index(sr, static_cast<std::uint32_t>(rng.below(sr.cardinality())));
  }
  throw InternalError("unknown semiring kind");
}

Matrix random_matrix(Rng& rng, SemiringDescriptor sr, std::size_t rows, std::size_t cols) {
  std::vector<SemiringValue> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(random_value(rng, sr));
  return Matrix(sr, rows, cols, std::move(entries));
}

}  // namespace hocpm
