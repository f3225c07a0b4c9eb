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

#ifndef QEQUIV_KRON_HPP
#define QEQUIV_KRON_HPP

#include <optional>
#include <vector>

#include "qequiv/types.hpp"

namespace qequiv {

/// Tensor-product factorization of a square multiparty operator.
///
/// Gauge convention: every factor except the last has Frobenius norm
/// sqrt(d_i) and its largest-modulus entry real positive; the accumulated
/// scalar sits on the last factor.
struct KronFactorization {
  std::vector<Matrix> factors;
  double residual = 0.0;               // relative reconstruction error
  std::vector<double> rank_gaps;       // per-party sigma_2/sigma_1 of realignments
};

struct KronCheck {
  bool is_product = false;
  std::vector<double> rank_gaps;
  double smallest_singular_value = 0.0;  // invertibility evidence, reported separately
};

/// Tests rank(realign(M_{i|i-hat})) == 1 for every party at the given
/// relative tolerance, reporting the per-party sigma_2/sigma_1 gaps.
KronCheck is_kron(const Matrix& m, const Dims& dims, double tol = kDefaultRankTol);

struct BipartiteFactors {
  Matrix left;
  Matrix right;
  double residual = 0.0;
};

/// Nearest-Kronecker split of a (d1*d2)x(d1*d2) matrix from the leading
/// singular triplet of its realignment: vec(left) = sqrt(s1) u1,
/// vec(right) = sqrt(s1) conj(v1).
BipartiteFactors factorize_bipartite(const Matrix& m, Index d1, Index d2);

struct KronFactorResult {
  std::optional<KronFactorization> factorization;
  std::vector<double> rank_gaps;       // always populated
  Index failed_party = 0;              // 1-based, set when factorization absent
  double failed_gap = 0.0;
  bool ok() const { return factorization.has_value(); }
};

/// Peels factors recursively (party 1 outward) when every realignment is
/// rank 1 at tol; otherwise reports the first party where the rank-1 test
/// failed together with its gap.
KronFactorResult factorize_multiparty(const Matrix& m, const Dims& dims,
                                      double tol = kDefaultRankTol);

/// Rescales the factors of a factorization whose product is unitary so that
/// each factor is itself unitary, pushing the residual phase onto the last
/// factor. Throws if some factor gram matrix is not scalar within tol.
std::vector<Matrix> unitarize_factors(const KronFactorization& f, double tol = 1e-8);

}  // namespace qequiv

#endif  // QEQUIV_KRON_HPP
