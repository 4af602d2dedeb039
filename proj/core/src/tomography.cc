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


#include "fiveq/tomography.h"

#include <cmath>
#include <string>
#include <utility>

namespace fiveq {

namespace {

// Index of the unknown chi(k, l) and of the equation (input m, output
// Pauli component n) in the flattened 16x16 system.
constexpr Eigen::Index flat(Eigen::Index a, Eigen::Index b) { return 4 * a + b; }

const std::array<Matrix, 4>& pauli_inputs() {
  static const std::array<Matrix, 4> inputs = {pauli_matrix(Pauli::I), pauli_matrix(Pauli::X),
                                               pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Z)};
  return inputs;
}

struct TransferSystem {
  Eigen::FullPivLU<Matrix> lu;
  Eigen::Index rank;
};

const TransferSystem& transfer_system() {
  static const TransferSystem system = [] {
    const auto& e = chi_basis();
    const auto& sigma = pauli_inputs();
    Matrix b(16, 16);
    for (Eigen::Index m = 0; m < 4; ++m) {
      for (Eigen::Index n = 0; n < 4; ++n) {
        for (Eigen::Index k = 0; k < 4; ++k) {
          for (Eigen::Index l = 0; l < 4; ++l) {
            const Matrix term = e[static_cast<std::size_t>(k)] * sigma[static_cast<std::size_t>(m)] *
                                e[static_cast<std::size_t>(l)].adjoint();
            b(flat(m, n), flat(k, l)) = (sigma[static_cast<std::size_t>(n)] * term).trace() / 2.0;
          }
        }
      }
    }
    Eigen::FullPivLU<Matrix> lu(b);
    const Eigen::Index rank = lu.rank();
    return TransferSystem{std::move(lu), rank};
  }();
  return system;
}

}  // namespace

const std::array<Matrix, 4>& chi_basis() {
  static const std::array<Matrix, 4> basis = {
      pauli_matrix(Pauli::I), pauli_matrix(Pauli::X),
      Complex(0.0, -1.0) * pauli_matrix(Pauli::Y), pauli_matrix(Pauli::Z)};
  return basis;
}

ChiMatrix::ChiMatrix(Matrix chi) : chi_(std::move(chi)) {
  if (chi_.rows() != 4 || chi_.cols() != 4) {
    throw std::invalid_argument("ChiMatrix must be 4x4");
  }
}

Matrix ChiMatrix::apply(const Matrix& rho) const {
  const auto& e = chi_basis();
  Matrix out = Matrix::Zero(2, 2);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t l = 0; l < 4; ++l) {
      out += chi_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) * e[k] * rho *
             e[l].adjoint();
    }
  }
  return out;
}

OperatorResponses measure_responses(const LinearProcess& process, bool include_identity) {
  const auto& sigma = pauli_inputs();
  OperatorResponses r;
  r.responses[0] = include_identity ? process(sigma[0]) : sigma[0];
  for (std::size_t m = 1; m < 4; ++m) {
    r.responses[m] = process(sigma[m]);
  }
  return r;
}

OperatorResponses measure_responses(const Pipeline& pipeline, bool include_identity) {
  return measure_responses([&pipeline](const Matrix& in) { return pipeline.apply(in); },
                           include_identity);
}

OperatorResponses measure_responses_from_states(const LinearProcess& process) {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  Vector zero(2), one(2), plus(2), plus_i(2);
  zero << 1.0, 0.0;
  one << 0.0, 1.0;
  plus << h, h;
  plus_i << h, i * h;
  auto out = [&](const Vector& v) { return process(Matrix(v * v.adjoint())); };
  const Matrix r0 = out(zero);
  const Matrix r1 = out(one);
  const Matrix rp = out(plus);
  const Matrix rpi = out(plus_i);
  OperatorResponses r;
  r.responses[0] = r0 + r1;
  r.responses[1] = 2.0 * rp - r.responses[0];
  r.responses[2] = 2.0 * rpi - r.responses[0];
  r.responses[3] = r0 - r1;
  return r;
}

ChiMatrix chi_from_responses(const OperatorResponses& r) {
  const auto& system = transfer_system();
  if (system.rank != 16) {
    throw SingularSystem("chi transfer system has rank " + std::to_string(system.rank));
  }
  const auto& sigma = pauli_inputs();
  Vector lambda(16);
  for (Eigen::Index m = 0; m < 4; ++m) {
    const Matrix& out = r.responses[static_cast<std::size_t>(m)];
    if (out.rows() != 2 || out.cols() != 2) {
      throw std::invalid_argument("chi_from_responses: responses must be 2x2");
    }
    for (Eigen::Index n = 0; n < 4; ++n) {
      lambda(flat(m, n)) = (sigma[static_cast<std::size_t>(n)] * out).trace() / 2.0;
    }
  }
  const Vector x = system.lu.solve(lambda);
  if (!x.allFinite()) {
    throw SingularSystem("chi reconstruction produced non-finite entries");
  }
  Matrix chi(4, 4);
  for (Eigen::Index k = 0; k < 4; ++k) {
    for (Eigen::Index l = 0; l < 4; ++l) {
      chi(k, l) = x(flat(k, l));
    }
  }
  return ChiMatrix(std::move(chi));
}

ChiMatrix ideal_chi(LogicalGate gate) {
  Matrix chi = Matrix::Zero(4, 4);
  switch (gate) {
    case LogicalGate::kIdentity:
      chi(0, 0) = 1.0;
      break;
    case LogicalGate::kNot:
      chi(2, 2) = 1.0;
      break;
    case LogicalGate::kHadamard:
      chi(1, 1) = chi(3, 3) = chi(1, 3) = chi(3, 1) = 0.5;
      break;
  }
  return ChiMatrix(std::move(chi));
}

double process_fidelity(const ChiMatrix& a, const ChiMatrix& b) {
  const double aa = (a.mat() * a.mat().adjoint()).trace().real();
  const double bb = (b.mat() * b.mat().adjoint()).trace().real();
  const double denom = std::sqrt(aa * bb);
  if (!(denom > 0.0)) {
    throw ZeroMatrix("process_fidelity: zero chi matrix");
  }
  return std::abs((a.mat() * b.mat().adjoint()).trace()) / denom;
}

}  // namespace fiveq
