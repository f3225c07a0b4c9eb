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

#ifndef QEQUIV_TENSOR_HPP
#define QEQUIV_TENSOR_HPP

#include <optional>
#include <span>

#include "qequiv/types.hpp"

namespace qequiv {

/// Dense complex tensor of order N >= 1 with explicit dimensions.
///
/// Entries are stored in the canonical linearization: the first index runs
/// fastest, so the flat offset of the (0-based) multi-index (i_1,...,i_N) is
/// i_1 + i_2*d_1 + i_3*d_1*d_2 + ... . Mode-n unfoldings then have
/// contiguous-stride columns and match the usual worked examples entry for
/// entry.
class Tensor {
 public:
  Tensor() = default;

  /// Zero tensor with the given dimensions.
  explicit Tensor(Dims dims);

  /// Tensor from dimensions plus a flat entry vector in canonical order.
  Tensor(Dims dims, Vector entries);

  const Dims& dims() const { return dims_; }
  Index order() const { return static_cast<Index>(dims_.size()); }
  Index size() const { return entries_.size(); }

  const Vector& entries() const { return entries_; }
  Vector& entries() { return entries_; }

  /// Element access by 0-based multi-index.
  Complex at(std::span<const Index> multi) const;
  void set(std::span<const Index> multi, Complex value);

  bool same_dims(const Tensor& other) const { return dims_ == other.dims_; }

 private:
  Dims dims_;
  Vector entries_;
};

/// 1-based index map of the mode-n matricization: the tensor element at the
/// 1-based multi-index maps to column j = 1 + sum_{k != n} (i_k - 1) * beta_k
/// with beta_k the product of the preceding dimensions, skipping mode n.
///
/// With `excluded_mode` set, `multi_index` holds the N-1 indices of the
/// non-excluded modes in ascending mode order. Without it, `multi_index`
/// holds all N indices and the result is the canonical full linearization
/// (also 1-based).
Index linear_index(std::span<const Index> multi_index, const Dims& dims,
                   std::optional<Index> excluded_mode = std::nullopt);

/// Mode-n matricization: the d_n x (prod d_k / d_n) matrix whose columns are
/// the mode-n fibers, ordered by linear_index. Modes are 1-based.
Matrix unfold(const Tensor& t, Index mode);

/// Inverse of unfold: rebuilds the tensor with the given dimensions from its
/// mode-n matricization.
Tensor fold(const Matrix& m, Index mode, const Dims& dims);

/// Multilinear action (A_1 (x) ... (x) A_N) X. ops[k] must have column count
/// d_{k+1}; the result dimensions are the row counts.
Tensor apply_local(const Tensor& t, std::span<const Matrix> ops);

/// Rank-one tensor with entries prod_k vectors[k][i_k].
Tensor outer(std::span<const Vector> vectors);

double frobenius_norm(const Tensor& t);

}  // namespace qequiv

#endif  // QEQUIV_TENSOR_HPP
