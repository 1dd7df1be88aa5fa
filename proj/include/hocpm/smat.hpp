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

#include <cstddef>
#include <string>
#include <vector>

#include "hocpm/group.hpp"
#include "hocpm/semiring.hpp"

namespace hocpm {

/**
 * Dense rows x cols matrix over one semiring, i.e. a morphism cols -> rows
 * of S-Mat. Entries are stored row-major. Composite indices of tensor
 * products are big-endian: the leftmost factor is most significant.
 **/
class Matrix {
 public:
  /** The zero matrix. */
  Matrix(SemiringDescriptor sr, std::size_t rows, std::size_t cols);
  Matrix(SemiringDescriptor sr, std::size_t rows, std::size_t cols, std::vector<SemiringValue> entries);

  static Matrix identity(SemiringDescriptor sr, std::size_t n);
  static Matrix scalar(const SemiringValue& value);
  /** |j> as an n x 1 matrix. */
  static Matrix basis_state(SemiringDescriptor sr, std::size_t n, std::size_t j);
  /** <j| as a 1 x n matrix. */
  static Matrix basis_effect(SemiringDescriptor sr, std::size_t n, std::size_t j);
  /** Builds a matrix from exact strings, row-major. */
  static Matrix from_strings(SemiringDescriptor sr, std::size_t rows, std::size_t cols,
                             const std::vector<std::string>& entries);

  SemiringDescriptor semiring() const { return sr_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<SemiringValue>& entries() const { return entries_; }

  const SemiringValue& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, SemiringValue value);
  /** entry(i, j) += value */
  void accumulate(std::size_t i, std::size_t j, const SemiringValue& value);

  bool is_zero() const;
  std::size_t nonzeros() const;

  bool operator==(const Matrix& other) const;

  /** Multi-line rendering for diagnostics. */
  std::string to_string() const;
  /** One line, rows nested: "[[1,-i],[0,1]]". */
  std::string compact() const;

 private:
  SemiringDescriptor sr_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SemiringValue> entries_;

  friend Matrix compose(const Matrix& g, const Matrix& f);
};

/** images[i] is the destination position of source leg i. */
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  const std::vector<std::size_t>& images() const { return images_; }
  std::size_t operator[](std::size_t i) const { return images_[i]; }

  Permutation inverse() const;
  /** this after first: leg i goes to (*this)[first[i]]. */
  Permutation after(const Permutation& first) const;
  /** Moves the entries of a tuple: out[images[i]] = in[i]. */
  template <typename T>
  std::vector<T> apply(const std::vector<T>& tuple) const {
    std::vector<T> out(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) out[images_[i]] = tuple[i];
    return out;
  }

  bool operator==(const Permutation& other) const = default;

 private:
  std::vector<std::size_t> images_;
};

/** Big-endian mixed-radix decoding/encoding of composite indices. */
std::vector<std::size_t> unflatten(std::size_t index, const std::vector<std::size_t>& dims);
std::size_t flatten(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims);

/**
 * For each source basis index, the index of its image under the leg
 * permutation p on legs of dimensions dims.
 **/
std::vector<std::size_t> permutation_index_map(const Permutation& p, const std::vector<std::size_t>& dims);

Matrix compose(const Matrix& g, const Matrix& f);
Matrix kron(const Matrix& f, const Matrix& g);
Matrix kron_all(const std::vector<Matrix>& factors, SemiringDescriptor sr);
Matrix transpose(const Matrix& f);
Matrix dagger(const Matrix& f);
Matrix conjugate(const Matrix& f);
Matrix mat_add(const Matrix& f, const Matrix& g);
Matrix scalar_mul(const SemiringValue& s, const Matrix& f);

/** Sum_j |j>|j>, n^2 x 1. */
Matrix cup(SemiringDescriptor sr, std::size_t n);
/** Sum_j <j|<j|, 1 x n^2. */
Matrix cap(SemiringDescriptor sr, std::size_t n);
/** sigma_{m,n}: m*n -> n*m. */
Matrix symmetry(SemiringDescriptor sr, std::size_t m, std::size_t n);
/** Reorders tensor legs of dimensions dims (before the permutation). */
Matrix permutation_matrix(SemiringDescriptor sr, const Permutation& p, const std::vector<std::size_t>& dims);

/** Entrywise application of an automorphism. */
Matrix apply_entrywise(const Automorphism& a, const Matrix& f);
/** Phi(gamma)[f]. */
Matrix entrywise_action(const GroupAction& action, const GroupElement& gamma, const Matrix& f);

}  // namespace hocpm
