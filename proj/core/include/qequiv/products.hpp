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

#ifndef QEQUIV_PRODUCTS_HPP
#define QEQUIV_PRODUCTS_HPP

#include <span>

#include "qequiv/types.hpp"

namespace qequiv {

Matrix kronecker(const Matrix& a, const Matrix& b);

/// Kronecker product of a whole list, first factor outermost.
Matrix kron_all(std::span<const Matrix> ops);

/// Columnwise Kronecker product; both factors must have equal column counts.
Matrix khatri_rao(const Matrix& a, const Matrix& b);

Matrix hadamard(const Matrix& a, const Matrix& b);

/// Column-stacking vec: [y_11..y_m1, y_12..y_m2, ...]^t.
Vector vec(const Matrix& y);

/// Realignment of an (mn)x(mn) matrix viewed as m x m blocks of size n x n:
/// the m^2 x n^2 matrix whose rows are vec(Z_ij)^t with the block index pair
/// (i,j) enumerated column-major, i.e. [Z_11, ..., Z_m1, Z_12, ..., Z_mm].
/// For a Kronecker product, realign(A (x) B) = vec(A) vec(B)^t.
Matrix realign(const Matrix& z, Index outer_dim, Index inner_dim);

/// Permutes a multiparty operator so that the requested party (1-based
/// position in `dims`) indexes the outer block structure while the remaining
/// parties keep their relative order inside the blocks. Composing with
/// realign(outer = d_i, inner = prod/d_i) realizes the i|i-hat realignment.
Matrix bipartite_block(const Matrix& m, const Dims& dims, Index party);

/// Number of singular values above tol * sigma_1 (0 for the zero matrix).
Index numerical_rank(const Matrix& m, double tol = kDefaultRankTol);

/// Full SVD m = u * diag(singular_values) * v.adjoint(), values descending.
struct Svd {
  Matrix u;
  RealVector singular_values;
  Matrix v;
};
Svd svd(const Matrix& m);

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending,
/// eigenvectors unitary: h = q * diag(eigenvalues) * q.adjoint(). The input
/// is symmetrized first; deviation from Hermitian beyond 1e-10 (relative) is
/// a domain error.
struct HermitianEig {
  RealVector eigenvalues;
  Matrix eigenvectors;
};
HermitianEig eig_hermitian(const Matrix& h);

}  // namespace qequiv

#endif  // QEQUIV_PRODUCTS_HPP
