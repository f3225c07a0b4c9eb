// Copyright 2026 The qequiv authors
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

#include "qequiv/tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qequiv {

namespace {

void check_dims(const Dims& dims) {
  if (dims.empty()) {
    throw std::invalid_argument("Tensor: order must be at least 1");
  }
  for (Index d : dims) {
    if (d < 1) {
      throw std::invalid_argument("Tensor: every dimension must be >= 1");
    }
  }
}

void check_mode(Index mode, Index order) {
  if (mode < 1 || mode > order) {
    throw std::invalid_argument("mode " + std::to_string(mode) +
                                " out of range for order " +
                                std::to_string(order));
  }
}

Index flat_offset(std::span<const Index> multi, const Dims& dims) {
  if (static_cast<Index>(multi.size()) != static_cast<Index>(dims.size())) {
    throw std::invalid_argument("multi-index length does not match order");
  }
  Index off = 0;
  Index stride = 1;
  for (size_t k = 0; k < dims.size(); ++k) {
    if (multi[k] < 0 || multi[k] >= dims[k]) {
      throw std::invalid_argument("tensor index out of range");
    }
    off += multi[k] * stride;
    stride *= dims[k];
  }
  return off;
}

}  // namespace

Tensor::Tensor(Dims dims) : dims_(std::move(dims)) {
  check_dims(dims_);
  entries_ = Vector::Zero(product(dims_));
}

Tensor::Tensor(Dims dims, Vector entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  check_dims(dims_);
  if (entries_.size() != product(dims_)) {
    throw std::invalid_argument("Tensor: entry count does not match dims");
  }
}

Complex Tensor::at(std::span<const Index> multi) const {
  return entries_[flat_offset(multi, dims_)];
}

void Tensor::set(std::span<const Index> multi, Complex value) {
  entries_[flat_offset(multi, dims_)] = value;
}

Index linear_index(std::span<const Index> multi_index, const Dims& dims,
                   std::optional<Index> excluded_mode) {
  const Index order = static_cast<Index>(dims.size());
  check_dims(dims);
  Index n = 0;  // 0 = no excluded mode
  if (excluded_mode) {
    n = *excluded_mode;
    check_mode(n, order);
  }
  const Index expected = excluded_mode ? order - 1 : order;
  if (static_cast<Index>(multi_index.size()) != expected) {
    throw std::invalid_argument("linear_index: expected " +
                                std::to_string(expected) + " indices, got " +
                                std::to_string(multi_index.size()));
  }

  Index j = 1;
  Index beta = 1;
  size_t pos = 0;
  for (Index k = 1; k <= order; ++k) {
    if (k == n) continue;
    const Index ik = multi_index[pos++];
    if (ik < 1 || ik > dims[static_cast<size_t>(k - 1)]) {
      throw std::invalid_argument("linear_index: index " + std::to_string(ik) +
                                  " out of range for mode " +
                                  std::to_string(k));
    }
    j += (ik - 1) * beta;
    beta *= dims[static_cast<size_t>(k - 1)];
  }
  return j;
}

Matrix unfold(const Tensor& t, Index mode) {
  check_mode(mode, t.order());
  const Dims& dims = t.dims();
  const Index dn = dims[static_cast<size_t>(mode - 1)];
  const Index cols = t.size() / dn;
  Matrix m(dn, cols);

  // Stride of the mode index in the canonical linearization, and the ordered
  // strides of the remaining modes (which together enumerate the columns).
  Index mode_stride = 1;
  for (Index k = 1; k < mode; ++k) mode_stride *= dims[static_cast<size_t>(k - 1)];

  Dims rest_dims;
  std::vector<Index> rest_strides;
  Index stride = 1;
  for (Index k = 1; k <= t.order(); ++k) {
    if (k != mode) {
      rest_dims.push_back(dims[static_cast<size_t>(k - 1)]);
      rest_strides.push_back(stride);
    }
    stride *= dims[static_cast<size_t>(k - 1)];
  }

  std::vector<Index> counter(rest_dims.size(), 0);
  const Vector& e = t.entries();
  for (Index j = 0; j < cols; ++j) {
    Index base = 0;
    for (size_t k = 0; k < counter.size(); ++k) base += counter[k] * rest_strides[k];
    for (Index i = 0; i < dn; ++i) m(i, j) = e[base + i * mode_stride];
    for (size_t k = 0; k < counter.size(); ++k) {
      if (++counter[k] < rest_dims[k]) break;
      counter[k] = 0;
    }
  }
  return m;
}

Tensor fold(const Matrix& m, Index mode, const Dims& dims) {
  check_dims(dims);
  check_mode(mode, static_cast<Index>(dims.size()));
  const Index dn = dims[static_cast<size_t>(mode - 1)];
  const Index total = product(dims);
  if (m.rows() != dn || m.cols() != total / dn) {
    throw std::invalid_argument("fold: matrix shape does not match dims/mode");
  }

  Tensor t(dims);
  Index mode_stride = 1;
  for (Index k = 1; k < mode; ++k) mode_stride *= dims[static_cast<size_t>(k - 1)];

  Dims rest_dims;
  std::vector<Index> rest_strides;
  Index stride = 1;
  for (Index k = 1; k <= static_cast<Index>(dims.size()); ++k) {
    if (k != mode) {
      rest_dims.push_back(dims[static_cast<size_t>(k - 1)]);
      rest_strides.push_back(stride);
    }
    stride *= dims[static_cast<size_t>(k - 1)];
  }

  std::vector<Index> counter(rest_dims.size(), 0);
  Vector& e = t.entries();
  for (Index j = 0; j < m.cols(); ++j) {
    Index base = 0;
    for (size_t k = 0; k < counter.size(); ++k) base += counter[k] * rest_strides[k];
    for (Index i = 0; i < dn; ++i) e[base + i * mode_stride] = m(i, j);
    for (size_t k = 0; k < counter.size(); ++k) {
      if (++counter[k] < rest_dims[k]) break;
      counter[k] = 0;
    }
  }
  return t;
}

Tensor apply_local(const Tensor& t, std::span<const Matrix> ops) {
  if (static_cast<Index>(ops.size()) != t.order()) {
    throw std::invalid_argument("apply_local: need one operator per mode");
  }
  Tensor result = t;
  Dims dims = t.dims();
  for (Index k = 1; k <= t.order(); ++k) {
    const Matrix& a = ops[static_cast<size_t>(k - 1)];
    if (a.cols() != dims[static_cast<size_t>(k - 1)]) {
      throw std::invalid_argument("apply_local: operator " + std::to_string(k) +
                                  " has wrong column count");
    }
    Matrix unf = unfold(result, k);
    dims[static_cast<size_t>(k - 1)] = a.rows();
    result = fold(a * unf, k, dims);
  }
  return result;
}

Tensor outer(std::span<const Vector> vectors) {
  if (vectors.empty()) {
    throw std::invalid_argument("outer: need at least one vector");
  }
  Dims dims;
  dims.reserve(vectors.size());
  for (const Vector& v : vectors) dims.push_back(v.size());
  Tensor t(dims);

  std::vector<Index> counter(dims.size(), 0);
  Vector& e = t.entries();
  for (Index off = 0; off < t.size(); ++off) {
    Complex prod(1.0, 0.0);
    for (size_t k = 0; k < dims.size(); ++k) prod *= vectors[k][counter[k]];
    e[off] = prod;
    for (size_t k = 0; k < dims.size(); ++k) {
      if (++counter[k] < dims[k]) break;
      counter[k] = 0;
    }
  }
  return t;
}

double frobenius_norm(const Tensor& t) { return t.entries().norm(); }

}  // namespace qequiv
