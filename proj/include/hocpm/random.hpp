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
#include <random>

#include "hocpm/smat.hpp"

namespace hocpm {

/**
 * Deterministic generator. split(k) derives an independent stream, so that
 * each law or instance can draw from its own sequence regardless of how many
 * values other laws consumed.
 **/
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /** Uniform in [0, n). */
  std::uint64_t below(std::uint64_t n);
  /** Uniform in [lo, hi]. */
  long range(long lo, long hi);
  Rng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/** Small random element; numerators and denominators stay in single digits. */
SemiringValue random_value(Rng& rng, SemiringDescriptor sr);
Matrix random_matrix(Rng& rng, SemiringDescriptor sr, std::size_t rows, std::size_t cols);

}  // namespace hocpm
