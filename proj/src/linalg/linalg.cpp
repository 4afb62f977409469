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

#include "lfg/linalg/linalg.hpp"

#include <stdexcept>

namespace lfg::linalg {
namespace {

void require_compatible(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("vector dimension mismatch");
  }
  if (!(u.field() == v.field())) {
    throw std::invalid_argument("vectors over different fields");
  }
}

}  // namespace

Vector Vector::zero(FieldPtr field, unsigned n) {
  return Vector(std::move(field), std::vector<Felt>(n));
}

Vector Vector::basis(FieldPtr field, unsigned n, unsigned i) {
  if (i >= n) throw std::out_of_range("basis index out of range");
  std::vector<Felt> c(n);
  c[i] = field->one();
  return Vector(std::move(field), std::move(c));
}

Vector Vector::from_index(FieldPtr field, unsigned n, std::uint64_t index) {
  const unsigned q = field->q();
  std::vector<Felt> c(n);
  for (unsigned i = n; i-- > 0;) {
    c[i] = gf::felt(static_cast<unsigned>(index % q));
    index /= q;
  }
  if (index != 0) throw std::out_of_range("vector index out of range");
  return Vector(std::move(field), std::move(c));
}

std::uint64_t Vector::index() const {
  const unsigned q = field_->q();
  std::uint64_t idx = 0;
  for (Felt c : coords_) idx = idx * q + c.value;
  return idx;
}

bool Vector::is_zero() const {
  for (Felt c : coords_) {
    if (c.value != 0) return false;
  }
  return true;
}

Felt dot(const Vector& u, const Vector& v) {
  require_compatible(u, v);
  const Field& f = u.field();
  Felt acc = f.zero();
  for (unsigned i = 0; i < u.size(); ++i) acc = f.add(acc, f.mul(u[i], v[i]));
  return acc;
}

Vector add(const Vector& u, const Vector& v) {
  require_compatible(u, v);
  std::vector<Felt> c(u.size());
  for (unsigned i = 0; i < u.size(); ++i) c[i] = u.field().add(u[i], v[i]);
  return Vector(u.field_ptr(), std::move(c));
}

Vector scale(Felt r, const Vector& v) {
  std::vector<Felt> c(v.size());
  for (unsigned i = 0; i < v.size(); ++i) c[i] = v.field().mul(r, v[i]);
  return Vector(v.field_ptr(), std::move(c));
}

Vector frobenius(const Vector& v, unsigned j) {
  std::vector<Felt> c(v.size());
  for (unsigned i = 0; i < v.size(); ++i) c[i] = v.field().frobenius(v[i], j);
  return Vector(v.field_ptr(), std::move(c));
}

Vector monic_rep(const Vector& v) {
  for (unsigned i = 0; i < v.size(); ++i) {
    if (v[i].value != 0) return scale(v.field().inv(v[i]), v);
  }
  throw std::invalid_argument("monic_rep of the zero vector");
}

bool is_monic(const Vector& v) {
  for (unsigned i = 0; i < v.size(); ++i) {
    if (v[i].value != 0) return v[i].value == 1;
  }
  return false;
}

Matrix::Matrix(FieldPtr field, unsigned rows, unsigned cols,
               std::vector<Felt> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(rows_) * cols_) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
}

Matrix Matrix::identity(FieldPtr field, unsigned n) {
  std::vector<Felt> e(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i) e[i * n + i] = field->one();
  return Matrix(std::move(field), n, n, std::move(e));
}

Matrix Matrix::diagonal(FieldPtr field, std::span<const Felt> diag) {
  const auto n = static_cast<unsigned>(diag.size());
  std::vector<Felt> e(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return Matrix(std::move(field), n, n, std::move(e));
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) throw std::invalid_argument("no columns");
  const unsigned rows = columns[0].size();
  const auto cols = static_cast<unsigned>(columns.size());
  std::vector<Felt> e(static_cast<std::size_t>(rows) * cols);
  for (unsigned c = 0; c < cols; ++c) {
    if (columns[c].size() != rows) {
      throw std::invalid_argument("column length mismatch");
    }
    for (unsigned r = 0; r < rows; ++r) e[r * cols + c] = columns[c][r];
  }
  return Matrix(columns[0].field_ptr(), rows, cols, std::move(e));
}

Vector Matrix::column(unsigned c) const {
  std::vector<Felt> v(rows_);
  for (unsigned r = 0; r < rows_; ++r) v[r] = at(r, c);
  return Vector(field_, std::move(v));
}

Vector mat_vec(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("shape mismatch");
  const Field& f = m.field();
  std::vector<Felt> out(m.rows());
  for (unsigned r = 0; r < m.rows(); ++r) {
    Felt acc = f.zero();
    for (unsigned c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m.at(r, c), v[c]));
    out[r] = acc;
  }
  return Vector(m.field_ptr(), std::move(out));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  const Field& f = a.field();
  std::vector<Felt> e(static_cast<std::size_t>(a.rows()) * b.cols());
  for (unsigned r = 0; r < a.rows(); ++r) {
    for (unsigned c = 0; c < b.cols(); ++c) {
      Felt acc = f.zero();
      for (unsigned i = 0; i < a.cols(); ++i) acc = f.add(acc, f.mul(a.at(r, i), b.at(i, c)));
      e[r * b.cols() + c] = acc;
    }
  }
  return Matrix(a.field_ptr(), a.rows(), b.cols(), std::move(e));
}

Matrix transpose(const Matrix& m) {
  std::vector<Felt> e(m.entries().size());
  for (unsigned r = 0; r < m.rows(); ++r) {
    for (unsigned c = 0; c < m.cols(); ++c) e[c * m.rows() + r] = m.at(r, c);
  }
  return Matrix(m.field_ptr(), m.cols(), m.rows(), std::move(e));
}

Rref rref(std::span<const Vector> rows) {
  Rref out;
  if (rows.empty()) return out;
  const Field& f = rows[0].field();
  const unsigned width = rows[0].size();
  std::vector<Vector> work(rows.begin(), rows.end());
  unsigned lead = 0;
  for (unsigned col = 0; col < width && lead < work.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < work.size() && work[pivot][col].value == 0) ++pivot;
    if (pivot == work.size()) continue;
    std::swap(work[lead], work[pivot]);
    work[lead] = scale(f.inv(work[lead][col]), work[lead]);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == lead || work[r][col].value == 0) continue;
      work[r] = add(work[r], scale(f.neg(work[r][col]), work[lead]));
    }
    out.pivots.push_back(col);
    ++lead;
  }
  work.resize(lead);
  out.basis = std::move(work);
  out.rank = lead;
  return out;
}

unsigned rank(const Matrix& m) {
  std::vector<Vector> rows;
  for (unsigned r = 0; r < m.rows(); ++r) {
    std::vector<Felt> v(m.cols());
    for (unsigned c = 0; c < m.cols(); ++c) v[c] = m.at(r, c);
    rows.emplace_back(m.field_ptr(), std::move(v));
  }
  return rref(rows).rank;
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Matrix mat_inv(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("non-square matrix");
  const unsigned n = m.rows();
  const Field& f = m.field();
  // Augmented [m | I], reduced in place.
  std::vector<Vector> rows;
  for (unsigned r = 0; r < n; ++r) {
    std::vector<Felt> v(2 * n);
    for (unsigned c = 0; c < n; ++c) v[c] = m.at(r, c);
    v[n + r] = f.one();
    rows.emplace_back(m.field_ptr(), std::move(v));
  }
  const Rref reduced = rref(rows);
  if (reduced.rank < n || reduced.pivots[n - 1] != n - 1) {
    throw std::domain_error("matrix is singular");
  }
  std::vector<Felt> e(static_cast<std::size_t>(n) * n);
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned c = 0; c < n; ++c) e[r * n + c] = reduced.basis[r][n + c];
  }
  return Matrix(m.field_ptr(), n, n, std::move(e));
}

std::vector<Vector> kernel_basis(const Vector& u) {
  const Field& f = u.field();
  unsigned pivot = u.size();
  for (unsigned i = 0; i < u.size(); ++i) {
    if (u[i].value != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == u.size()) {
    throw std::invalid_argument("kernel_basis of the zero functional");
  }
  const Felt pivot_inv = f.inv(u[pivot]);
  std::vector<Vector> basis;
  for (unsigned j = 0; j < u.size(); ++j) {
    if (j == pivot) continue;
    Vector x = Vector::zero(u.field_ptr(), u.size());
    x[j] = f.one();
    x[pivot] = f.neg(f.mul(u[j], pivot_inv));
    basis.push_back(std::move(x));
  }
  return rref(basis).basis;
}

Matrix random_invertible(const FieldPtr& field, unsigned n, Rng& rng) {
  const unsigned q = field->q();
  while (true) {
    std::vector<Felt> e(static_cast<std::size_t>(n) * n);
    for (auto& x : e) x = gf::felt(static_cast<unsigned>(rng.below(q)));
    Matrix m(field, n, n, std::move(e));
    if (is_invertible(m)) return m;
  }
}

}  // namespace lfg::linalg
