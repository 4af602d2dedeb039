// Copyright 2026 The fiveq Authors
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


#ifndef FIVEQ_TOMOGRAPHY_H_
#define FIVEQ_TOMOGRAPHY_H_

// Single-qubit process tomography in the operator basis (E, X, -iY, Z).

#include <array>
#include <functional>
#include <stdexcept>
#include <string_view>

#include "fiveq/circuits.h"
#include "fiveq/qcore.h"
#include "fiveq/recovery.h"

namespace fiveq {

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::array<std::string_view, 4> kChiBasisLabels = {"E", "X", "-iY", "Z"};

/// e_1..e_4 = E, X, -iY, Z.
const std::array<Matrix, 4>& chi_basis();

/// 4x4 process matrix: rho -> sum_kl chi(k,l) e_k rho e_l^dagger.
/// Indices here are 0-based, so chi(2,2) is the -iY diagonal entry.
class ChiMatrix {
 public:
  explicit ChiMatrix(Matrix chi);

  const Matrix& mat() const { return chi_; }
  Complex operator()(Eigen::Index k, Eigen::Index l) const { return chi_(k, l); }

  /// Applies the process to a 2x2 operator.
  Matrix apply(const Matrix& rho) const;

 private:
  Matrix chi_;
};

/// Outputs of the process for the inputs E, X, Y, Z (in that order).
struct OperatorResponses {
  std::array<Matrix, 4> responses;
};

using LinearProcess = std::function<Matrix(const Matrix&)>;

/// Feeds X, Y, Z (and E when include_identity) through the process. With
/// include_identity cleared the E response is taken to be E.
OperatorResponses measure_responses(const LinearProcess& process, bool include_identity = true);
OperatorResponses measure_responses(const Pipeline& pipeline, bool include_identity = true);

/// Same responses assembled from the pure inputs |0>, |1>, |+>, |+i>.
OperatorResponses measure_responses_from_states(const LinearProcess& process);

/// Exact inversion of the 16x16 transfer system. Throws SingularSystem.
ChiMatrix chi_from_responses(const OperatorResponses& r);

/// Closed-form chi of each logical gate's ideal single-qubit action.
ChiMatrix ideal_chi(LogicalGate gate);

/// |Tr(a b^dagger)| / sqrt(Tr(a a^dagger) Tr(b b^dagger)). Throws ZeroMatrix.
double process_fidelity(const ChiMatrix& a, const ChiMatrix& b);

}  // namespace fiveq

#endif  // FIVEQ_TOMOGRAPHY_H_
