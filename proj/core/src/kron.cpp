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

#include "qequiv/kron.hpp"

#include <cmath>
#include <stdexcept>

#include "qequiv/products.hpp"

namespace qequiv {

namespace {

// Phase that makes the largest-modulus entry (first in column-major order on
// ties) real positive.
Complex canonical_phase(const Matrix& m) {
  Index bi = 0, bj = 0;
  double best = -1.0;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (std::abs(m(i, j)) > best + 1e-15) {
        best = std::abs(m(i, j));
        bi = i;
        bj = j;
      }
    }
  }
  const Complex e = m(bi, bj);
  if (std::abs(e) == 0.0) return Complex(1.0, 0.0);
  return std::conj(e) / std::abs(e);
}

Matrix unvec(const Vector& v, Index rows, Index cols) {
  Matrix m(rows, cols);
  Index pos = 0;
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = v[pos++];
  }
  return m;
}

}  // namespace

KronCheck is_kron(const Matrix& m, const Dims& dims, double tol) {
  const Index total = product(dims);
  if (m.rows() != total || m.cols() != total) {
    throw std::invalid_argument("is_kron: matrix size does not match dims");
  }
  KronCheck check;
  Eigen::JacobiSVD<Matrix> inv_dec(m);
  check.smallest_singular_value =
      inv_dec.singularValues().size() > 0
          ? inv_dec.singularValues()[inv_dec.singularValues().size() - 1]
          : 0.0;
  check.is_product = true;
  for (Index party = 1; party <= static_cast<Index>(dims.size()); ++party) {
    const Index d = dims[static_cast<size_t>(party - 1)];
    Matrix r = realign(bipartite_block(m, dims, party), d, total / d);
    Eigen::JacobiSVD<Matrix> dec(r);
    const auto& s = dec.singularValues();
    double gap = 1.0;
    if (s.size() > 0 && s[0] > 0.0) {
      gap = s.size() > 1 ? s[1] / s[0] : 0.0;
    }
    check.rank_gaps.push_back(gap);
    if (gap > tol) check.is_product = false;
  }
  return check;
}

BipartiteFactors factorize_bipartite(const Matrix& m, Index d1, Index d2) {
  if (m.rows() != d1 * d2 || m.cols() != d1 * d2) {
    throw std::invalid_argument("factorize_bipartite: matrix is not (d1 d2)x(d1 d2)");
  }
  const double norm = m.norm();
  if (norm == 0.0) {
    throw std::invalid_argument("factorize_bipartite: zero matrix");
  }
  Matrix r = realign(m, d1, d2);
  Eigen::JacobiSVD<Matrix> dec(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double s1 = dec.singularValues()[0];
  const double root = std::sqrt(s1);
  BipartiteFactors out;
  out.left = unvec(root * dec.matrixU().col(0), d1, d1);
  out.right = unvec(root * dec.matrixV().col(0).conjugate(), d2, d2);
  out.residual = (m - kronecker(out.left, out.right)).norm() / norm;
  return out;
}

KronFactorResult factorize_multiparty(const Matrix& m, const Dims& dims, double tol) {
  KronFactorResult result;
  KronCheck check = is_kron(m, dims, tol);
  result.rank_gaps = check.rank_gaps;
  if (!check.is_product) {
    for (size_t i = 0; i < check.rank_gaps.size(); ++i) {
      if (check.rank_gaps[i] > tol) {
        result.failed_party = static_cast<Index>(i + 1);
        result.failed_gap = check.rank_gaps[i];
        break;
      }
    }
    return result;
  }

  KronFactorization f;
  f.rank_gaps = check.rank_gaps;
  Matrix rest = m;
  Dims rest_dims = dims;
  while (rest_dims.size() > 1) {
    const Index d1 = rest_dims.front();
    const Index d2 = product(rest_dims) / d1;
    BipartiteFactors split = factorize_bipartite(rest, d1, d2);
    // Gauge: unit-scaled, phase-canonical factor; scalar flows into the rest.
    const double fn = split.left.norm();
    if (fn == 0.0) {
      result.failed_party = static_cast<Index>(dims.size() - rest_dims.size() + 1);
      result.failed_gap = 1.0;
      return result;
    }
    const Complex phase = canonical_phase(split.left);
    const Complex scale = phase * std::sqrt(static_cast<double>(d1)) / fn;
    f.factors.push_back(scale * split.left);
    rest = split.right / scale;
    rest_dims.erase(rest_dims.begin());
  }
  f.factors.push_back(rest);

  std::vector<Matrix> fs(f.factors.begin(), f.factors.end());
  f.residual = (m - kron_all(fs)).norm() / m.norm();
  result.factorization = std::move(f);
  return result;
}

std::vector<Matrix> unitarize_factors(const KronFactorization& f, double tol) {
  std::vector<Matrix> out;
  out.reserve(f.factors.size());
  for (const Matrix& m : f.factors) {
    const Index d = m.rows();
    Matrix gram = m * m.adjoint();
    const double c = gram.real().trace() / static_cast<double>(d);
    if (c <= 0.0 ||
        (gram - c * Matrix::Identity(d, d)).norm() > tol * c * std::sqrt(static_cast<double>(d))) {
      throw std::invalid_argument("unitarize_factors: factor gram matrix is not scalar");
    }
    out.push_back(m / std::sqrt(c));
  }
  // Align the residual phase of the reconstruction on the last factor.
  if (!out.empty()) {
    Matrix rebuilt = kron_all(out);
    std::vector<Matrix> orig(f.factors.begin(), f.factors.end());
    Matrix target = kron_all(orig);
    const Complex inner = (rebuilt.adjoint() * target).trace();
    if (std::abs(inner) > 0.0) {
      out.back() *= inner / std::abs(inner);
    }
  }
  return out;
}

}  // namespace qequiv
