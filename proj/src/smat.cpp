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

#include "hocpm/smat.hpp"

#include <sstream>

namespace hocpm {

namespace {

void require_same(const Matrix& f, const Matrix& g, const char* op) {
  if (!(f.semiring() == g.semiring())) {
    throw MixedSemiringError(std::string(op) + ": " + f.semiring().name() + " vs " + g.semiring().name());
  }
}

}  // namespace

Matrix::Matrix(SemiringDescriptor sr, std::size_t rows, std::size_t cols)
    : sr_(sr), rows_(rows), cols_(cols), entries_(rows * cols, SemiringValue::zero(sr)) {}

Matrix::Matrix(SemiringDescriptor sr, std::size_t rows, std::size_t cols, std::vector<SemiringValue> entries)
    : sr_(sr), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw ShapeMismatchError(
        "expected " + std::to_string(rows * cols) + " entries, got " + std::to_string(entries_.size()));
  }
  for (const auto& v : entries_) {
    if (!(v.descriptor() == sr)) throw MixedSemiringError("matrix entry over " + v.descriptor().name());
  }
}

Matrix Matrix::identity(SemiringDescriptor sr, std::size_t n) {
  Matrix m(sr, n, n);
  const auto one = SemiringValue::one(sr);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = one;
  return m;
}

Matrix Matrix::scalar(const SemiringValue& value) { return Matrix(value.descriptor(), 1, 1, {value}); }

Matrix Matrix::basis_state(SemiringDescriptor sr, std::size_t n, std::size_t j) {
  if (j >= n) throw ShapeMismatchError("basis index out of range");
  Matrix m(sr, n, 1);
  m.entries_[j] = SemiringValue::one(sr);
  return m;
}

Matrix Matrix::basis_effect(SemiringDescriptor sr, std::size_t n, std::size_t j) {
  if (j >= n) throw ShapeMismatchError("basis index out of range");
  Matrix m(sr, 1, n);
  m.entries_[j] = SemiringValue::one(sr);
  return m;
}

Matrix Matrix::from_strings(SemiringDescriptor sr, std::size_t rows, std::size_t cols,
                            const std::vector<std::string>& entries) {
  std::vector<SemiringValue> values;
  values.reserve(entries.size());
  for (const auto& s : entries) values.push_back(SemiringValue::parse(sr, s));
  return Matrix(sr, rows, cols, std::move(values));
}

void Matrix::set(std::size_t i, std::size_t j, SemiringValue value) {
  if (!(value.descriptor() == sr_)) throw MixedSemiringError("matrix entry over " + value.descriptor().name());
  entries_.at(i * cols_ + j) = std::move(value);
}

void Matrix::accumulate(std::size_t i, std::size_t j, const SemiringValue& value) {
  entries_.at(i * cols_ + j) += value;
}

bool Matrix::is_zero() const {
  for (const auto& v : entries_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& v : entries_) n += v.is_zero() ? 0 : 1;
  return n;
}

bool Matrix::operator==(const Matrix& other) const {
  return sr_ == other.sr_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << rows_ << "x" << cols_ << " over " << sr_.name();
  for (std::size_t i = 0; i < rows_; ++i) {
    out << "\n  [";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << (*this)(i, j).to_string();
    }
    out << "]";
  }
  return out.str();
}

std::string Matrix::compact() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto d : images_) {
    if (d >= images_.size() || seen[d]) throw InvalidPermutationError("images do not form a bijection");
    seen[d] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = i;
  return Permutation(std::move(out));
}

Permutation Permutation::after(const Permutation& first) const {
  if (first.size() != size()) throw InvalidPermutationError("composing permutations of different sizes");
  std::vector<std::size_t> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = images_[first.images_[i]];
  return Permutation(std::move(out));
}

std::vector<std::size_t> unflatten(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> digits(dims.size(), 0);
  for (std::size_t i = dims.size(); i-- > 0;) {
    digits[i] = index % dims[i];
    index /= dims[i];
  }
  return digits;
}

std::size_t flatten(const std::vector<std::size_t>& digits, const std::vector<std::size_t>& dims) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) index = index * dims[i] + digits[i];
  return index;
}

std::vector<std::size_t> permutation_index_map(const Permutation& p, const std::vector<std::size_t>& dims) {
  if (p.size() != dims.size()) {
    throw InvalidPermutationError(
        "permutation on " + std::to_string(p.size()) + " legs applied to " + std::to_string(dims.size()));
  }
  const std::size_t r = dims.size();
  std::vector<std::size_t> dest_dims(r);
  for (std::size_t i = 0; i < r; ++i) dest_dims[p[i]] = dims[i];
  std::vector<std::size_t> dest_stride(r, 1);
  for (std::size_t j = r; j-- > 1;) dest_stride[j - 1] = dest_stride[j] * dest_dims[j];
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> out(total, 0);
  if (total == 0) return out;
  std::vector<std::size_t> digits(r, 0);
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t y = 0;
    for (std::size_t i = 0; i < r; ++i) y += digits[i] * dest_stride[p[i]];
    out[x] = y;
    for (std::size_t i = r; i-- > 0;) {
      if (++digits[i] < dims[i]) break;
      digits[i] = 0;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Category structure

Matrix compose(const Matrix& g, const Matrix& f) {
  require_same(g, f, "compose");
  if (g.cols() != f.rows()) {
    throw ComposeMismatchError(
        "cannot compose " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " after " +
        std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
  }
  const SemiringDescriptor sr = f.semiring();
  // Nonzero pattern of f, row by row.
  std::vector<std::vector<std::size_t>> f_nz(f.rows());
  for (std::size_t k = 0; k < f.rows(); ++k) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (!f(k, j).is_zero()) f_nz[k].push_back(j);
    }
  }
  Matrix out(sr, g.rows(), f.cols());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t k = 0; k < g.cols(); ++k) {
      const SemiringValue& a = g(i, k);
      if (a.is_zero() || f_nz[k].empty()) continue;
      for (std::size_t j : f_nz[k]) out.entries_[i * out.cols_ + j].add_product(a, f(k, j));
    }
  }
  return out;
}

Matrix kron(const Matrix& f, const Matrix& g) {
  require_same(f, g, "kron");
  const SemiringDescriptor sr = f.semiring();
  const std::size_t rows = f.rows() * g.rows(), cols = f.cols() * g.cols();
  Matrix out(sr, rows, cols);
  for (std::size_t i1 = 0; i1 < f.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < f.cols(); ++j1) {
      const SemiringValue& a = f(i1, j1);
      if (a.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < g.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < g.cols(); ++j2) {
          const SemiringValue& b = g(i2, j2);
          if (b.is_zero()) continue;
          out.set(i1 * g.rows() + i2, j1 * g.cols() + j2, a * b);
        }
      }
    }
  }
  return out;
}

Matrix kron_all(const std::vector<Matrix>& factors, SemiringDescriptor sr) {
  Matrix out = Matrix::identity(sr, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

Matrix transpose(const Matrix& f) {
  std::vector<SemiringValue> entries;
  entries.reserve(f.rows() * f.cols());
  for (std::size_t j = 0; j < f.cols(); ++j) {
    for (std::size_t i = 0; i < f.rows(); ++i) entries.push_back(f(i, j));
  }
  return Matrix(f.semiring(), f.cols(), f.rows(), std::move(entries));
}

Matrix conjugate(const Matrix& f) {
  std::vector<SemiringValue> entries;
  entries.reserve(f.entries().size());
  for (const auto& v : f.entries()) entries.push_back(conjugate(v));
  return Matrix(f.semiring(), f.rows(), f.cols(), std::move(entries));
}

Matrix dagger(const Matrix& f) { return conjugate(transpose(f)); }

Matrix mat_add(const Matrix& f, const Matrix& g) {
  require_same(f, g, "mat_add");
  if (f.rows() != g.rows() || f.cols() != g.cols()) throw ShapeMismatchError("mat_add of different shapes");
  std::vector<SemiringValue> entries = f.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += g.entries()[i];
  return Matrix(f.semiring(), f.rows(), f.cols(), std::move(entries));
}

Matrix scalar_mul(const SemiringValue& s, const Matrix& f) {
  if (!(s.descriptor() == f.semiring())) throw MixedSemiringError("scalar_mul over different semirings");
  std::vector<SemiringValue> entries;
  entries.reserve(f.entries().size());
  for (const auto& v : f.entries()) entries.push_back(s * v);
  return Matrix(f.semiring(), f.rows(), f.cols(), std::move(entries));
}

Matrix cup(SemiringDescriptor sr, std::size_t n) {
  Matrix out(sr, n * n, 1);
  for (std::size_t j = 0; j < n; ++j) out.set(j * n + j, 0, SemiringValue::one(sr));
  return out;
}

Matrix cap(SemiringDescriptor sr, std::size_t n) { return transpose(cup(sr, n)); }

Matrix symmetry(SemiringDescriptor sr, std::size_t m, std::size_t n) {
  return permutation_matrix(sr, Permutation({1, 0}), {m, n});
}

Matrix permutation_matrix(SemiringDescriptor sr, const Permutation& p, const std::vector<std::size_t>& dims) {
  const auto map = permutation_index_map(p, dims);
  Matrix out(sr, map.size(), map.size());
  const auto one = SemiringValue::one(sr);
  for (std::size_t x = 0; x < map.size(); ++x) out.set(map[x], x, one);
  return out;
}

Matrix apply_entrywise(const Automorphism& a, const Matrix& f) {
  validate_automorphism(a, f.semiring());
  if (normalize(a, f.semiring()).kind() == Automorphism::Kind::Identity) return f;
  std::vector<SemiringValue> entries;
  entries.reserve(f.entries().size());
  for (const auto& v : f.entries()) entries.push_back(apply_automorphism(a, v));
  return Matrix(f.semiring(), f.rows(), f.cols(), std::move(entries));
}

Matrix entrywise_action(const GroupAction& action, const GroupElement& gamma, const Matrix& f) {
  if (!(action.semiring() == f.semiring())) throw MixedSemiringError("entrywise_action over different semirings");
  return apply_entrywise(action.automorphism(gamma), f);
}

}  // namespace hocpm
