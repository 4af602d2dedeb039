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


#include "fiveq/qcore.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fiveq {

namespace {

void require_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
  }
}

void require_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Matrix pauli_matrix(Pauli p) {
  const Complex i(0.0, 1.0);
  Matrix m(2, 2);
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -i, i, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

char pauli_label(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    case Pauli::Z:
      return 'Z';
  }
  return '?';
}

Matrix ry(double theta) {
  Matrix m(2, 2);
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  m << c, -s, s, c;
  return m;
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  return m.cwiseAbs().maxCoeff();
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    return false;
  }
  return max_abs(m * m.adjoint() - Matrix::Identity(m.rows(), m.cols())) <= tol;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    return false;
  }
  return max_abs(m - m.adjoint()) <= tol;
}

int qubits_for_dimension(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) {
    ++n;
  }
  return n;
}

// StateVector

StateVector::StateVector(Vector amps, double tol) : amps_(std::move(amps)) {
  qubits_for_dimension(amps_.size());
  const double norm2 = amps_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol) {
    throw std::invalid_argument("StateVector: squared norm " + std::to_string(norm2) +
                                " differs from 1");
  }
}

StateVector StateVector::basis(int num_qubits, std::size_t index) {
  const auto dim = Eigen::Index{1} << num_qubits;
  if (num_qubits < 1 || static_cast<Eigen::Index>(index) >= dim) {
    throw std::out_of_range("StateVector::basis: index out of range");
  }
  Vector v = Vector::Zero(dim);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(std::move(v));
}

Complex StateVector::inner(const StateVector& other) const {
  require_same_dim(dim(), other.dim(), "StateVector::inner");
  return amps_.dot(other.amps_);
}

DensityOperator StateVector::projector() const {
  return DensityOperator::physical(amps_ * amps_.adjoint());
}

// DensityOperator

DensityOperator DensityOperator::physical(Matrix m, double tol) {
  require_square(m, "DensityOperator");
  qubits_for_dimension(m.rows());
  if (!is_hermitian(m, tol)) {
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    throw std::invalid_argument("DensityOperator: trace " + std::to_string(tr) + " differs from 1");
  }
  const Matrix herm = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kPsdTolerance) {
    throw std::invalid_argument("DensityOperator: matrix is not positive semidefinite");
  }
  return DensityOperator(std::move(m), OperatorKind::kPhysical);
}

DensityOperator DensityOperator::deviation(Matrix m, double tol) {
  require_square(m, "DensityOperator");
  qubits_for_dimension(m.rows());
  if (!is_hermitian(m, tol)) {
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  }
  return DensityOperator(std::move(m), OperatorKind::kDeviation);
}

DensityOperator DensityOperator::with_matrix(Matrix m, double tol) const {
  return is_physical() ? physical(std::move(m), tol) : deviation(std::move(m), tol);
}

// UnitaryOperator

UnitaryOperator::UnitaryOperator(Matrix m, double tol) : mat_(std::move(m)) {
  require_square(mat_, "UnitaryOperator");
  qubits_for_dimension(mat_.rows());
  if (!is_unitary(mat_, tol)) {
    throw std::invalid_argument("UnitaryOperator: U U^dagger deviates from identity by " +
                                std::to_string(max_abs(mat_ * mat_.adjoint() -
                                                       Matrix::Identity(dim(), dim()))));
  }
}

UnitaryOperator UnitaryOperator::identity(Eigen::Index dim) {
  return UnitaryOperator(Matrix::Identity(dim, dim));
}

UnitaryOperator UnitaryOperator::adjoint() const {
  return UnitaryOperator(mat_.adjoint(), Unchecked{});
}

UnitaryOperator UnitaryOperator::operator*(const UnitaryOperator& rhs) const {
  require_same_dim(dim(), rhs.dim(), "UnitaryOperator::operator*");
  return UnitaryOperator(mat_ * rhs.mat_, Unchecked{});
}

// KrausChannel

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops, double tol) : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) {
    throw std::invalid_argument("KrausChannel: no Kraus operators");
  }
  const Eigen::Index d = ops_.front().rows();
  qubits_for_dimension(d);
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& k : ops_) {
    require_square(k, "KrausChannel");
    require_same_dim(k.rows(), d, "KrausChannel");
    sum += k.adjoint() * k;
  }
  if (max_abs(sum - Matrix::Identity(d, d)) > tol) {
    throw std::invalid_argument("KrausChannel: operators are not trace preserving");
  }
}

KrausChannel KrausChannel::identity(Eigen::Index dim) {
  return KrausChannel({Matrix::Identity(dim, dim)});
}

KrausChannel KrausChannel::from_unitary(const UnitaryOperator& u) {
  return KrausChannel({u.mat()});
}

KrausChannel KrausChannel::then(const KrausChannel& next) const {
  require_same_dim(dim(), next.dim(), "KrausChannel::then");
  std::vector<Matrix> ops;
  ops.reserve(ops_.size() * next.ops_.size());
  for (const auto& b : next.ops_) {
    for (const auto& a : ops_) {
      ops.push_back(b * a);
    }
  }
  return KrausChannel(std::move(ops), 1e-9);
}

// Operations

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  Vector v = tensor(Matrix(a.amps()), Matrix(b.amps())).col(0);
  return StateVector(std::move(v));
}

UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b) {
  return UnitaryOperator(tensor(a.mat(), b.mat()));
}

Matrix embed_operator(const Matrix& op, int qubit, int num_qubits) {
  if (op.rows() != 2 || op.cols() != 2) {
    throw std::invalid_argument("embed: operator must be 2x2");
  }
  if (qubit < 1 || qubit > num_qubits) {
    throw std::out_of_range("embed: qubit " + std::to_string(qubit) + " outside 1.." +
                            std::to_string(num_qubits));
  }
  const auto left = Eigen::Index{1} << (qubit - 1);
  const auto right = Eigen::Index{1} << (num_qubits - qubit);
  return tensor(tensor(Matrix::Identity(left, left), op), Matrix::Identity(right, right));
}

UnitaryOperator embed(const Matrix& op, int qubit, int num_qubits) {
  if (op.rows() == 2 && op.cols() == 2 && !is_unitary(op)) {
    throw std::invalid_argument("embed: operator is not unitary");
  }
  return UnitaryOperator(embed_operator(op, qubit, num_qubits));
}

StateVector apply_unitary(const UnitaryOperator& u, const StateVector& s) {
  require_same_dim(u.dim(), s.dim(), "apply_unitary");
  return StateVector(u.mat() * s.amps());
}

Matrix conjugate(const Matrix& u, const Matrix& rho) {
  return u * rho * u.adjoint();
}

Matrix apply_kraus(const std::vector<Matrix>& ops, const Matrix& rho) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : ops) {
    out.noalias() += k * rho * k.adjoint();
  }
  return out;
}

DensityOperator apply_unitary(const UnitaryOperator& u, const DensityOperator& rho) {
  require_same_dim(u.dim(), rho.dim(), "apply_unitary");
  return rho.with_matrix(conjugate(u.mat(), rho.mat()));
}

DensityOperator apply_channel(const KrausChannel& ch, const DensityOperator& rho) {
  require_same_dim(ch.dim(), rho.dim(), "apply_channel");
  return rho.with_matrix(apply_kraus(ch.kraus_ops(), rho.mat()));
}

Matrix partial_trace(const Matrix& rho, const std::vector<int>& keep) {
  require_square(rho, "partial_trace");
  const int n = qubits_for_dimension(rho.rows());
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate qubit in keep set");
  }
  if (kept.front() < 1 || kept.back() > n) {
    throw std::out_of_range("partial_trace: qubit outside register");
  }
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) {
      traced.push_back(q);
    }
  }

  // Bit position of 1-based qubit q inside an n-bit index.
  auto bit = [n](int q) { return n - q; };
  auto scatter = [&](const std::vector<int>& qubits, Eigen::Index value) {
    Eigen::Index idx = 0;
    const auto m = static_cast<int>(qubits.size());
    for (int j = 0; j < m; ++j) {
      if ((value >> (m - 1 - j)) & 1) {
        idx |= Eigen::Index{1} << bit(qubits[j]);
      }
    }
    return idx;
  };

  const auto kdim = Eigen::Index{1} << kept.size();
  const auto tdim = Eigen::Index{1} << traced.size();
  Matrix out = Matrix::Zero(kdim, kdim);
  for (Eigen::Index r = 0; r < kdim; ++r) {
    const auto row_base = scatter(kept, r);
    for (Eigen::Index c = 0; c < kdim; ++c) {
      const auto col_base = scatter(kept, c);
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < tdim; ++t) {
        const auto off = scatter(traced, t);
        acc += rho(row_base | off, col_base | off);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep) {
  return rho.with_matrix(partial_trace(rho.mat(), keep), 1e-9);
}

}  // namespace fiveq
