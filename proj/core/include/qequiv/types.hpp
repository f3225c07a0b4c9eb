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

#ifndef QEQUIV_TYPES_HPP
#define QEQUIV_TYPES_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qequiv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;
using Dims = std::vector<Index>;

/// Relative singular-value cutoff used by every numerical rank test.
inline constexpr double kDefaultRankTol = 1e-8;

inline Index product(const Dims& dims) {
  Index p = 1;
  for (Index d : dims) p *= d;
  return p;
}

}  // namespace qequiv

#endif  // QEQUIV_TYPES_HPP
