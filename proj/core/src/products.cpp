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

#include "qequiv/products.hpp"

#include <stdexcept>
#include <string>

namespace qequiv {

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return c;
}

Matrix kron_all(std::span<const Matrix> ops) {
  if (ops.empty()) throw std::invalid_argument("kron_all: empty list");
  Matrix acc = ops[0];
  for (size_t k = 1; k < ops.size(); ++k) acc = kronecker(acc, ops[k]);
  return acc;
}

Matrix khatri_rao(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("khatri_rao: column counts differ");
  }
  Matrix c(a.rows() * b.rows(), a.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      c.block(i * b.rows(), j, b.rows(), 1) = a(i, j) * b.col(j);
    }
  }
  return c;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hadamard: shapes differ");
  }
  return a.cwiseProduct(b);
}

Vector vec(const Matrix& y) {
  Vector v(y.size());
  Index pos = 0;
  for (Index j = 0; j < y.cols(); ++j) {
    for (Index i = 0; i < y.rows(); ++i) v[pos++] = y(i, j);
  }
  return v;
}

Matrix realign(const Matrix& z, Index outer_dim, Index inner_dim) {
  const Index m = outer_dim, n = inner_dim;
  if (m < 1 || n < 1 || z.rows() != m * n || z.cols() != m * n) {
    throw std::invalid_argument("realign: matrix is not (mn)x(mn)");
  }
  Matrix r(m * m, n * n);
  for (Index bj = 0; bj < m; ++bj) {
    for (Index bi = 0; bi < m; ++bi) {
      const Index row = bi + bj * m;
      r.row(row) = vec(z.block(bi * n, bj * n, n, n)).transpose();
    }
  }
  return r;
}

Matrix bipartite_block(const Matrix& m, const Dims& dims, Index party) {
  const Index n = static_cast<Index>(dims.size());
  if (party < 1 || party > n) {
    throw std::invalid_argument("bipartite_block: party out of range");
  }
  const Index total = product(dims);
  if (m.rows() != total || m.cols() != total) {
    throw std::invalid_argument("bipartite_block: matrix size does not match dims");
  }
  if (n == 1) return m;

  // Basis ordering is the Kronecker convention: party 1 outermost (slowest).
  // perm[p] = index of basis vector p after moving `party` to the front.
  const size_t pi = static_cast<size_t>(party - 1);
  Index rest_total = total / dims[pi];
  std::vector<Index> perm(static_cast<size_t>(total));
  std::vector<Index> idx(static_cast<size_t>(n), 0);
  for (Index p = 0; p < total; ++p) {
    // Decompose p (last party fastest).
    Index rem = p;
    for (size_t k = dims.size(); k-- > 0;) {
      idx[k] = rem % dims[k];
      rem /= dims[k];
    }
    Index rest = 0;
    for (size_t k = 0; k < dims.size(); ++k) {
      if (k == pi) continue;
      rest = rest * dims[k] + idx[k];
    }
    perm[static_cast<size_t>(p)] = idx[pi] * rest_total + rest;
  }

  Matrix out(total, total);
  for (Index r = 0; r < total; ++r) {
    for (Index c = 0; c < total; ++c) {
      out(perm[static_cast<size_t>(r)], perm[static_cast<size_t>(c)]) = m(r, c);
    }
  }
  return out;
}

Index numerical_rank(const Matrix& m, double tol) {
  if (tol <= 0) throw std::invalid_argument("numerical_rank: tol must be > 0");
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> dec(m);
  const auto& s = dec.singularValues();
  if (s.size() == 0 || s[0] <= 0.0) return 0;
  Index rank = 0;
  for (Index k = 0; k < s.size(); ++k) {
    if (s[k] > tol * s[0]) ++rank;
  }
  return rank;
}

Svd svd(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> dec(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return Svd{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

HermitianEig eig_hermitian(const Matrix& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("eig_hermitian: matrix not square");
  }
  const double scale = std::max(1.0, h.norm());
  if ((h - h.adjoint()).norm() > 1e-10 * scale) {
    throw std::invalid_argument("eig_hermitian: matrix not Hermitian within tolerance");
  }
  Matrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig_hermitian: eigensolver failed to converge");
  }
  return HermitianEig{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace qequiv
