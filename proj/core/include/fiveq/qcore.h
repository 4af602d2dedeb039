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


#ifndef FIVEQ_QCORE_H_
#define FIVEQ_QCORE_H_

// Dense complex linear algebra over small qubit registers.
//
// Basis ordering: qubit 1 is the most significant bit of a basis index, so
// the ket |b1 b2 b3 b4 b5> has index b1*16 + b2*8 + b3*4 + b4*2 + b5.

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace fiveq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kNumQubits = 5;
inline constexpr Eigen::Index kDim = 32;
inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-9;

enum class Pauli { I, X, Y, Z };

Matrix pauli_matrix(Pauli p);
char pauli_label(Pauli p);

/// exp(-i theta Y / 2).
Matrix ry(double theta);

double max_abs(const Matrix& m);
bool is_unitary(const Matrix& m, double tol = kDefaultTolerance);
bool is_hermitian(const Matrix& m, double tol = kDefaultTolerance);

/// Number of qubits n with 2^n == dim; throws std::invalid_argument otherwise.
int qubits_for_dimension(Eigen::Index dim);

class DensityOperator;

/// Unit-norm pure state over 2^n amplitudes.
class StateVector {
 public:
  explicit StateVector(Vector amps, double tol = kDefaultTolerance);

  static StateVector basis(int num_qubits, std::size_t index);

  const Vector& amps() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }
  int num_qubits() const { return qubits_for_dimension(dim()); }
  Complex operator[](Eigen::Index i) const { return amps_(i); }

  /// <this|other>
  Complex inner(const StateVector& other) const;
  DensityOperator projector() const;

 private:
  Vector amps_;
};

enum class OperatorKind {
  kPhysical,   // Hermitian, PSD, unit trace.
  kDeviation,  // Hermitian only; linear tomography input such as X (x) |0000><0000|.
};

class DensityOperator {
 public:
  static DensityOperator physical(Matrix m, double tol = kDefaultTolerance);
  static DensityOperator deviation(Matrix m, double tol = kDefaultTolerance);

  const Matrix& mat() const { return mat_; }
  OperatorKind kind() const { return kind_; }
  bool is_physical() const { return kind_ == OperatorKind::kPhysical; }
  Eigen::Index dim() const { return mat_.rows(); }
  int num_qubits() const { return qubits_for_dimension(dim()); }

  /// Re-wraps a matrix with the same kind as this operator.
  DensityOperator with_matrix(Matrix m, double tol = kDefaultTolerance) const;

 private:
  DensityOperator(Matrix m, OperatorKind kind) : mat_(std::move(m)), kind_(kind) {}

  Matrix mat_;
  OperatorKind kind_;
};

class UnitaryOperator {
 public:
  explicit UnitaryOperator(Matrix m, double tol = kDefaultTolerance);

  static UnitaryOperator identity(Eigen::Index dim);

  const Matrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

  UnitaryOperator adjoint() const;
  UnitaryOperator operator*(const UnitaryOperator& rhs) const;

 private:
  struct Unchecked {};
  UnitaryOperator(Matrix m, Unchecked) : mat_(std::move(m)) {}

  Matrix mat_;
};

/// Trace-preserving channel rho -> sum_k K_k rho K_k^dagger.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> kraus_ops, double tol = kDefaultTolerance);

  static KrausChannel identity(Eigen::Index dim);
  static KrausChannel from_unitary(const UnitaryOperator& u);

  const std::vector<Matrix>& kraus_ops() const { return ops_; }
  Eigen::Index dim() const { return ops_.front().rows(); }

  /// The channel "this, then next".
  KrausChannel then(const KrausChannel& next) const;

 private:
  std::vector<Matrix> ops_;
};

/// Kronecker product, a's indices most significant. Works for vectors too.
Matrix tensor(const Matrix& a, const Matrix& b);
StateVector tensor(const StateVector& a, const StateVector& b);
UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b);

/// I (x) ... (x) op (x) ... (x) I with op at 1-based position `qubit`.
/// op need not be unitary. Throws std::out_of_range for a bad qubit index.
Matrix embed_operator(const Matrix& op, int qubit, int num_qubits = kNumQubits);
UnitaryOperator embed(const Matrix& op, int qubit, int num_qubits = kNumQubits);

StateVector apply_unitary(const UnitaryOperator& u, const StateVector& s);
DensityOperator apply_unitary(const UnitaryOperator& u, const DensityOperator& rho);
DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho);

/// Raw-matrix forms used on hot paths; no invariant checks.
Matrix conjugate(const Matrix& u, const Matrix& rho);
Matrix apply_kraus(const std::vector<Matrix>& ops, const Matrix& rho);

/// Traces out every qubit not in `keep` (1-based). Kept qubits stay in
/// ascending order. Throws for an empty, duplicated or out-of-range set.
Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep);
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);

}  // namespace fiveq

#endif  // FIVEQ_QCORE_H_
