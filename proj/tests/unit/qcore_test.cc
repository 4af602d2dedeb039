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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fiveq/circuits.h"
#include "fiveq/noise.h"
#include "test_util.h"

using namespace fiveq;
using fiveq::testing::ancilla_projector;
using fiveq::testing::random_density;
using fiveq::testing::random_state;
using fiveq::testing::random_unitary;

TEST(qcore, tensor_of_identities_is_identity) {
  const Matrix i2 = Matrix::Identity(2, 2);
  EXPECT_LT(max_abs(tensor(i2, i2) - Matrix::Identity(4, 4)), 1e-15);
}

TEST(qcore, tensor_of_basis_kets_orders_first_factor_most_significant) {
  const auto zero = StateVector::basis(1, 0);
  const auto one = StateVector::basis(1, 1);
  const auto s00 = tensor(zero, zero);
  ASSERT_EQ(s00.dim(), 4);
  EXPECT_EQ(s00[0], Complex(1.0));
  EXPECT_EQ(s00[1], Complex(0.0));
  // |1>|0> is index 2.
  const auto s10 = tensor(one, zero);
  EXPECT_EQ(s10[2], Complex(1.0));
}

TEST(qcore, tensor_of_ry_pi_matches_hand_expansion) {
  // Ry(pi) = [[0, -1], [1, 0]], so (a (x) b)[2i+k][2j+l] = a[i][j] b[k][l].
  const Matrix r = ry(std::numbers::pi);
  const Matrix t = tensor(r, r);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 3) = 1.0;   // a[0][1] b[0][1] = (-1)(-1)
  expected(1, 2) = -1.0;  // a[0][1] b[1][0] = (-1)(1)
  expected(2, 1) = -1.0;  // a[1][0] b[0][1] = (1)(-1)
  expected(3, 0) = 1.0;   // a[1][0] b[1][0] = (1)(1)
  EXPECT_LT(max_abs(t - expected), 1e-15);
  const Matrix minus_iy = Complex(0, -1) * pauli_matrix(Pauli::Y);
  EXPECT_LT(max_abs(t - tensor(minus_iy, minus_iy)), 1e-15);
}

TEST(qcore, tensor_is_associative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = fiveq::testing::ginibre(rng, 2, 2);
    const Matrix b = fiveq::testing::ginibre(rng, 4, 4);
    const Matrix c = fiveq::testing::ginibre(rng, 2, 2);
    EXPECT_LT(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))), 1e-12);
  }
}

TEST(qcore, embed_identity_is_identity) {
  EXPECT_LT(max_abs(embed(Matrix::Identity(2, 2), 3).mat() - Matrix::Identity(32, 32)), 1e-15);
}

TEST(qcore, embed_x_on_qubit_one_flips_msb) {
  const auto out = apply_unitary(embed(pauli_matrix(Pauli::X), 1), StateVector::basis(5, 0));
  EXPECT_EQ(out[0b10000], Complex(1.0));
}

TEST(qcore, embed_z_on_qubit_five_flips_sign_of_odd_kets) {
  const auto& zero_l = codewords().zero_l;
  const auto out = apply_unitary(embed(pauli_matrix(Pauli::Z), 5), zero_l);
  const double a = 1.0 / std::sqrt(8.0);
  // |10111> carries -1/sqrt(8) in |0_L> and b5 = 1.
  EXPECT_NEAR(out[0b10111].real(), a, 1e-15);
  for (Eigen::Index i = 0; i < 32; ++i) {
    const double sign = (i & 1) ? -1.0 : 1.0;
    EXPECT_NEAR(std::abs(out[i] - sign * zero_l[i]), 0.0, 1e-15) << i;
  }
}

TEST(qcore, embed_matches_explicit_identity_products_on_every_basis_vector) {
  std::mt19937_64 rng(5);
  const Matrix op = random_unitary(rng, 2);
  for (int q = 1; q <= 5; ++q) {
    const Matrix e = embed(op, q).mat();
    for (std::size_t b = 0; b < 32; ++b) {
      // Acting on |b>: only bit (5 - q) changes, with amplitudes from op's column.
      const int bit = (static_cast<int>(b) >> (5 - q)) & 1;
      Vector expected = Vector::Zero(32);
      for (int out_bit = 0; out_bit < 2; ++out_bit) {
        const std::size_t idx = (b & ~(std::size_t{1} << (5 - q))) | (std::size_t(out_bit) << (5 - q));
        expected(static_cast<Eigen::Index>(idx)) = op(out_bit, bit);
      }
      EXPECT_LT((e.col(static_cast<Eigen::Index>(b)) - expected).cwiseAbs().maxCoeff(), 1e-15);
    }
  }
}

TEST(qcore, embed_rejects_bad_qubit) {
  EXPECT_THROW(embed(pauli_matrix(Pauli::X), 0), std::out_of_range);
  EXPECT_THROW(embed(pauli_matrix(Pauli::X), 6), std::out_of_range);
  EXPECT_THROW(embed(Matrix::Identity(4, 4), 1), std::invalid_argument);
}

TEST(qcore, apply_unitary_identity_is_noop) {
  std::mt19937_64 rng(3);
  const StateVector s(random_state(rng, 32));
  const auto out = apply_unitary(UnitaryOperator::identity(32), s);
  EXPECT_LT((out.amps() - s.amps()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(qcore, apply_unitary_x_commutes_with_x_deviation) {
  const Matrix x1 = tensor(pauli_matrix(Pauli::X), ancilla_projector());
  const auto rho = DensityOperator::deviation(x1);
  const auto out = apply_unitary(embed(pauli_matrix(Pauli::X), 1), rho);
  EXPECT_EQ(out.kind(), OperatorKind::kDeviation);
  EXPECT_LT(max_abs(out.mat() - x1), 1e-15);
}

TEST(qcore, apply_unitary_preserves_norm_and_trace) {
  std::mt19937_64 rng(7);
  const UnitaryOperator u(random_unitary(rng, 32));
  const StateVector s(random_state(rng, 32));
  EXPECT_NEAR(apply_unitary(u, s).amps().norm(), 1.0, 1e-12);
  const auto rho = DensityOperator::physical(random_density(rng, 32));
  EXPECT_NEAR(apply_unitary(u, rho).mat().trace().real(), 1.0, 1e-12);
}

TEST(qcore, apply_unitary_rejects_dimension_mismatch) {
  EXPECT_THROW(apply_unitary(UnitaryOperator::identity(4), StateVector::basis(5, 0)),
               std::invalid_argument);
}

TEST(qcore, identity_channel_leaves_state_unchanged) {
  std::mt19937_64 rng(9);
  const auto rho = DensityOperator::physical(random_density(rng, 32));
  EXPECT_LT(max_abs(apply_channel(KrausChannel::identity(32), rho).mat() - rho.mat()), 1e-15);
}

TEST(qcore, full_dephasing_removes_transverse_deviation) {
  const Matrix x1 = tensor(pauli_matrix(Pauli::X), ancilla_projector());
  const auto out = apply_channel(dephasing_channel(0.5, 1), DensityOperator::deviation(x1));
  EXPECT_LT(max_abs(out.mat()), 1e-15);
}

TEST(qcore, depolarizing_contracts_by_pauli_twirl_factor) {
  const Matrix x = pauli_matrix(Pauli::X);
  const Matrix y = pauli_matrix(Pauli::Y);
  const Matrix z = pauli_matrix(Pauli::Z);
  for (double p : {0.0, 0.1, 0.3, 0.75, 1.0}) {
    // Four Kraus terms written out on the register qubit alone.
    const Matrix reg = (1 - p) * x + (p / 3) * (x * x * x + y * x * y + z * x * z);
    const Matrix oracle = tensor(reg, ancilla_projector());
    const Matrix x1 = tensor(x, ancilla_projector());
    const auto out = apply_channel(depolarizing_channel(p, 1), DensityOperator::deviation(x1));
    EXPECT_LT(max_abs(out.mat() - oracle), 1e-14) << p;
    EXPECT_LT(max_abs(out.mat() - (1 - 4 * p / 3) * x1), 1e-14) << p;
  }
}

TEST(qcore, single_unitary_channel_equals_conjugation) {
  std::mt19937_64 rng(13);
  const UnitaryOperator u(random_unitary(rng, 32));
  const auto rho = DensityOperator::physical(random_density(rng, 32));
  EXPECT_LT(max_abs(apply_channel(KrausChannel::from_unitary(u), rho).mat() -
                    apply_unitary(u, rho).mat()),
            1e-12);
}

TEST(qcore, kraus_channel_rejects_incomplete_set) {
  EXPECT_THROW(KrausChannel({0.5 * Matrix::Identity(2, 2)}), std::invalid_argument);
  EXPECT_THROW(KrausChannel(std::vector<Matrix>{}), std::invalid_argument);
}

TEST(qcore, partial_trace_of_basis_state) {
  const auto rho = StateVector::basis(5, 0).projector();
  const auto reduced = partial_trace(rho, {1});
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  EXPECT_LT(max_abs(reduced.mat() - expected), 1e-15);
  EXPECT_TRUE(reduced.is_physical());
}

TEST(qcore, partial_trace_of_bell_pair_is_maximally_mixed) {
  const double h = 1.0 / std::sqrt(2.0);
  Vector bell = Vector::Zero(4);
  bell(0) = h;
  bell(3) = h;
  const StateVector full = tensor(StateVector(bell), StateVector::basis(3, 0));
  const auto reduced = partial_trace(full.projector(), {1});
  EXPECT_LT(max_abs(reduced.mat() - Matrix::Identity(2, 2) / 2.0), 1e-15);
}

TEST(qcore, partial_trace_of_product_recovers_factor) {
  std::mt19937_64 rng(17);
  const Matrix g = random_unitary(rng, 2);
  const Vector psi = g * random_state(rng, 2);
  const Matrix rho = psi * psi.adjoint();
  const Vector s = random_state(rng, 16);
  const Matrix full = tensor(rho, Matrix(s * s.adjoint()));
  EXPECT_LT(max_abs(partial_trace(full, {1}) - rho), 1e-14);
}

TEST(qcore, partial_trace_left_block_scales_by_trace_of_right) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix rho = fiveq::testing::ginibre(rng, 4, 4);
    const Matrix sigma = fiveq::testing::ginibre(rng, 8, 8);
    EXPECT_LT(max_abs(partial_trace(tensor(rho, sigma), {1, 2}) - sigma.trace() * rho), 1e-12);
  }
}

TEST(qcore, partial_trace_keeps_non_adjacent_qubits_in_order) {
  // |1> on qubit 2, |0> elsewhere, then keep {2, 4}: expect |10>.
  const auto rho = StateVector::basis(5, 0b01000).projector();
  const auto reduced = partial_trace(rho, {4, 2});
  EXPECT_NEAR(reduced.mat()(2, 2).real(), 1.0, 1e-15);
}

TEST(qcore, partial_trace_preserves_trace) {
  std::mt19937_64 rng(23);
  const auto rho = DensityOperator::physical(random_density(rng, 32));
  EXPECT_NEAR(partial_trace(rho, {1, 3}).mat().trace().real(), 1.0, 1e-12);
}

TEST(qcore, partial_trace_rejects_bad_keep_sets) {
  const Matrix rho = Matrix::Identity(32, 32) / 32.0;
  EXPECT_THROW(partial_trace(rho, {}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, {1, 1}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, {6}), std::out_of_range);
}

TEST(qcore, product_of_random_unitaries_is_unitary) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitaryOperator u(random_unitary(rng, 32));
    const UnitaryOperator v(random_unitary(rng, 32));
    EXPECT_TRUE(is_unitary((u * v).mat(), 1e-10));
  }
}

TEST(qcore, state_vector_rejects_unnormalized_amplitudes) {
  EXPECT_THROW(StateVector(Vector::Ones(4)), std::invalid_argument);
  EXPECT_THROW(StateVector(Vector::Ones(3) / std::sqrt(3.0)), std::invalid_argument);
}

TEST(qcore, density_operator_invariants) {
  Matrix not_psd = Matrix::Zero(2, 2);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  EXPECT_THROW(DensityOperator::physical(not_psd), std::invalid_argument);
  EXPECT_NO_THROW(DensityOperator::deviation(not_psd));
  EXPECT_THROW(DensityOperator::physical(Matrix::Identity(2, 2)), std::invalid_argument);
  Matrix non_hermitian = Matrix::Zero(2, 2);
  non_hermitian(0, 1) = 1.0;
  EXPECT_THROW(DensityOperator::deviation(non_hermitian), std::invalid_argument);
}

TEST(qcore, unitary_operator_rejects_non_unitary) {
  EXPECT_THROW(UnitaryOperator(2.0 * Matrix::Identity(2, 2)), std::invalid_argument);
  EXPECT_THROW(UnitaryOperator(Matrix::Identity(3, 3)), std::invalid_argument);
}
