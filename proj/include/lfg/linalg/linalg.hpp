// Copyright 2026 The lfgraph Authors
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
#include <span>
#include <vector>

#include "lfg/common/rng.hpp"
#include "lfg/gf/field.hpp"

namespace lfg::linalg {

using gf::Felt;
using gf::Field;
using gf::FieldPtr;

// Column vector in F_q^n.
class Vector {
 public:
  Vector() = default;
  Vector(FieldPtr field, std::vector<Felt> coords)
      : field_(std::move(field)), coords_(std::move(coords)) {}

  static Vector zero(FieldPtr field, unsigned n);
  // e_i with 0-based i.
  static Vector basis(FieldPtr field, unsigned n, unsigned i);
  // Inverse of index(): digits in base q, first coordinate most significant.
  static Vector from_index(FieldPtr field, unsigned n, std::uint64_t index);

  std::uint64_t index() const;

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  unsigned size() const { return static_cast<unsigned>(coords_.size()); }
  Felt operator[](unsigned i) const { return coords_[i]; }
  Felt& operator[](unsigned i) { return coords_[i]; }
  std::span<const Felt> coords() const { return coords_; }
  bool is_zero() const;

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.coords_ == b.coords_;
  }

 private:
  FieldPtr field_;
  std::vector<Felt> coords_;
};

// Sum of u_i v_i. Throws std::invalid_argument on length or field mismatch.
Felt dot(const Vector& u, const Vector& v);
Vector add(const Vector& u, const Vector& v);
Vector scale(Felt r, const Vector& v);
// Applies a field map coordinatewise.
Vector frobenius(const Vector& v, unsigned j);

// r v where r inverts the first nonzero coordinate; throws
// std::invalid_argument for the zero vector.
Vector monic_rep(const Vector& v);
bool is_monic(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  // Row-major entries; throws std::invalid_argument if the count is wrong.
  Matrix(FieldPtr field, unsigned rows, unsigned cols, std::vector<Felt> entries);

  static Matrix identity(FieldPtr field, unsigned n);
  static Matrix diagonal(FieldPtr field, std::span<const Felt> diag);
  static Matrix from_columns(std::span<const Vector> columns);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  Felt at(unsigned r, unsigned c) const { return entries_[r * cols_ + c]; }
  void set(unsigned r, unsigned c, Felt v) { entries_[r * cols_ + c] = v; }
  std::span<const Felt> entries() const { return entries_; }
  Vector column(unsigned c) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  FieldPtr field_;
  unsigned rows_ = 0;
  unsigned cols_ = 0;
  std::vector<Felt> entries_;
};

Vector mat_vec(const Matrix& m, const Vector& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
unsigned rank(const Matrix& m);
bool is_invertible(const Matrix& m);
// Gauss-Jordan inverse; throws std::domain_error for a singular matrix.
Matrix mat_inv(const Matrix& m);

struct Rref {
  std::vector<Vector> basis;  // nonzero rows of the reduced echelon form
  std::vector<unsigned> pivots;
  unsigned rank = 0;
};

Rref rref(std::span<const Vector> rows);

// Reduced echelon basis of ker(f_u) = {x : u.x = 0}, n-1 vectors. Throws
// std::invalid_argument for u = 0.
std::vector<Vector> kernel_basis(const Vector& u);

// Uniform invertible n x n matrix by rejection sampling.
Matrix random_invertible(const FieldPtr& field, unsigned n, Rng& rng);

}  // namespace lfg::linalg
