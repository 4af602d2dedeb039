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


#include "fiveq/circuits.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "test_util.h"

using namespace fiveq;
using fiveq::testing::random_state;

namespace {

const double kAmp = 1.0 / std::sqrt(8.0);

// Signed kets of the two codewords, transcribed independently of the library.
const std::vector<std::pair<const char*, int>> kZero = {
    {"00000", +1}, {"10111", -1}, {"01011", -1}, {"11100", +1},
    {"10010", +1}, {"00101", +1}, {"11001", +1}, {"01110", +1}};
const std::vector<std::pair<const char*, int>> kOne = {
    {"11111", +1}, {"01000", -1}, {"10100", +1}, {"00011", -1},
    {"01101", +1}, {"11010", +1}, {"00110", -1}, {"10001", -1}};

Eigen::Index idx(const char* bits) { return std::stoi(bits, nullptr, 2); }

Vector oracle_codeword(const std::vector<std::pair<const char*, int>>& kets) {
  Vector v = Vector::Zero(32);
  for (auto [bits, sign] : kets) {
    v(idx(bits)) = sign * kAmp;
  }
  return v;
}

Vector ancilla_ket(int s) {
  Vector v = Vector::Zero(16);
  v(s) = 1.0;
  return v;
}

Matrix codespace_basis() {
  Matrix b(32, 2);
  b.col(0) = codewords().zero_l.amps();
  b.col(1) = codewords().one_l.amps();
  return b;
}

}  // namespace

TEST(circuits, codeword_amplitudes_match_table) {
  const auto& cw = codewords();
  EXPECT_NEAR(cw.zero_l[idx("00000")].real(), kAmp, 1e-15);
  EXPECT_NEAR(cw.zero_l[idx("10111")].real(), -kAmp, 1e-15);
  EXPECT_NEAR(cw.one_l[idx("00110")].real(), -kAmp, 1e-15);
  EXPECT_LT((cw.zero_l.amps() - oracle_codeword(kZero)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((cw.one_l.amps() - oracle_codeword(kOne)).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ((cw.zero_l.amps().array().abs() > 1e-12).count(), 8);
  EXPECT_EQ((cw.one_l.amps().array().abs() > 1e-12).count(), 8);
  EXPECT_LT(std::abs(cw.zero_l.inner(cw.one_l)), 1e-12);
}

TEST(circuits, canonical_frame_layout) {
  const auto frame = EncoderFrame::canonical();
  EXPECT_EQ(frame.entry(ErrorCondition::none()).syndrome, 0);
  EXPECT_EQ(frame.entry(ErrorCondition::bit_flip(1)).syndrome, 0b0001);
  EXPECT_EQ(frame.entry(ErrorCondition::bit_flip(5)).syndrome, 0b0101);
  EXPECT_EQ(frame.entry(ErrorCondition::phase_flip(1)).syndrome, 0b0110);
  EXPECT_EQ(frame.entry(ErrorCondition::bit_phase_flip(1)).syndrome, 0b1011);
  EXPECT_EQ(frame.entry(ErrorCondition::bit_phase_flip(5)).syndrome, 0b1111);
  EXPECT_EQ(frame.entry(ErrorCondition::bit_flip(1)).register_frame, Pauli::X);
  EXPECT_EQ(frame.entry(ErrorCondition::phase_flip(1)).register_frame, Pauli::Z);
  EXPECT_EQ(frame.entry(ErrorCondition::bit_phase_flip(1)).register_frame, Pauli::Y);
  EXPECT_EQ(frame.entry(ErrorCondition::bit_flip(3)).register_frame, Pauli::I);
}

TEST(circuits, frame_rejects_invalid_layouts) {
  auto entries = EncoderFrame::canonical().entries();
  auto dup = entries;
  dup[2].syndrome = dup[3].syndrome;
  EXPECT_THROW(EncoderFrame{dup}, std::invalid_argument);
  auto moved_e = entries;
  std::swap(moved_e[0].syndrome, moved_e[1].syndrome);
  EXPECT_THROW(EncoderFrame{moved_e}, std::invalid_argument);
  auto framed_e = entries;
  framed_e[0].register_frame = Pauli::X;
  EXPECT_THROW(EncoderFrame{framed_e}, std::invalid_argument);
  auto repeated = entries;
  repeated[4].condition = repeated[5].condition;
  EXPECT_THROW(EncoderFrame{repeated}, std::invalid_argument);
}

TEST(circuits, syndrome_labels) {
  EXPECT_EQ(syndrome_label(0), "0000");
  EXPECT_EQ(syndrome_label(0b0101), "0101");
  EXPECT_EQ(parse_syndrome("1011"), Syndrome{0b1011});
  EXPECT_FALSE(parse_syndrome("102"));
  EXPECT_FALSE(parse_syndrome("10110"));
}

TEST(circuits, encoder_maps_register_onto_codewords) {
  const auto enc = build_encoder();
  const auto& cw = codewords();
  const Vector zero_in = tensor(Matrix(fiveq::testing::ket({1, 0})), Matrix(ancilla_ket(0))).col(0);
  const Vector one_in = tensor(Matrix(fiveq::testing::ket({0, 1})), Matrix(ancilla_ket(0))).col(0);
  EXPECT_LT((enc.mat() * zero_in - cw.zero_l.amps()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((enc.mat() * one_in - cw.one_l.amps()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(circuits, encoder_columns_are_orthonormal) {
  const Matrix u = build_encoder().mat();
  for (Eigen::Index a = 0; a < 32; ++a) {
    for (Eigen::Index b = 0; b < 32; ++b) {
      const Complex g = u.col(a).dot(u.col(b));
      EXPECT_NEAR(std::abs(g - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-10);
    }
  }
}

TEST(circuits, encoder_is_linear_on_register_input) {
  std::mt19937_64 rng(31);
  const auto enc = build_encoder();
  const auto& cw = codewords();
  for (int trial = 0; trial < 100; ++trial) {
    const Vector psi = random_state(rng, 2);
    const Vector in = tensor(Matrix(psi), Matrix(ancilla_ket(0))).col(0);
    const Vector expected = psi(0) * cw.zero_l.amps() + psi(1) * cw.one_l.amps();
    EXPECT_LT((enc.mat() * in - expected).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(circuits, decoder_is_adjoint) {
  const auto id = UnitaryOperator::identity(32);
  EXPECT_LT(max_abs(build_decoder(id).mat() - id.mat()), 1e-15);
  const auto enc = build_encoder();
  const auto dec = build_decoder(enc);
  EXPECT_LT(max_abs(dec.mat() * enc.mat() - Matrix::Identity(32, 32)), 1e-10);
}

TEST(circuits, decoding_displaced_codewords_gives_frame_times_syndrome) {
  const auto frame = EncoderFrame::canonical();
  const Matrix dec = build_decoder(build_encoder(frame)).mat();
  const auto& cw = codewords();
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<Vector> inputs = {fiveq::testing::ket({1, 0}), fiveq::testing::ket({0, 1}),
                                      fiveq::testing::ket({h, h})};
  for (const auto& c : all_conditions()) {
    const auto& entry = frame.entry(c);
    const Matrix err = error_unitary(c).mat();
    for (const auto& psi : inputs) {
      const Vector logical = psi(0) * cw.zero_l.amps() + psi(1) * cw.one_l.amps();
      const Vector decoded = dec * err * logical;
      const Vector expected = tensor(Matrix(pauli_matrix(entry.register_frame) * psi),
                                     Matrix(ancilla_ket(entry.syndrome))).col(0);
      EXPECT_LT((decoded - expected).cwiseAbs().maxCoeff(), 1e-10) << label(c);
    }
  }
}

TEST(circuits, codewords_are_frame_independent) {
  std::mt19937_64 rng(37);
  const auto& cw = codewords();
  const Pauli paulis[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  for (int trial = 0; trial < 20; ++trial) {
    auto entries = EncoderFrame::canonical().entries();
    std::vector<Syndrome> syndromes;
    for (Syndrome s = 1; s < 16; ++s) {
      syndromes.push_back(s);
    }
    std::shuffle(syndromes.begin(), syndromes.end(), rng);
    for (std::size_t i = 1; i < entries.size(); ++i) {
      entries[i].syndrome = syndromes[i - 1];
      entries[i].register_frame = paulis[rng() % 4];
    }
    const Matrix u = build_encoder(EncoderFrame(entries)).mat();
    EXPECT_TRUE(is_unitary(u, 1e-10));
    // Columns |0>|0000> and |1>|0000> are indices 0 and 16.
    EXPECT_LT((u.col(0) - cw.zero_l.amps()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((u.col(16) - cw.one_l.amps()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(circuits, logical_identity_acts_trivially) {
  const auto& cw = codewords();
  const auto id = logical_identity();
  EXPECT_LT((apply_unitary(id, cw.zero_l).amps() - cw.zero_l.amps()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((apply_unitary(id, cw.one_l).amps() - cw.one_l.amps()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(max_abs((id * id).mat() - Matrix::Identity(32, 32)), 1e-15);
}

TEST(circuits, logical_not_matrix_elements) {
  const auto& cw = codewords();
  const Matrix n = logical_not().mat();
  const Vector& z = cw.zero_l.amps();
  const Vector& o = cw.one_l.amps();
  const Complex i(0.0, 1.0);
  EXPECT_LT(std::abs(o.dot(n * z) - i), 1e-10);
  EXPECT_LT(std::abs(z.dot(n * o) + i), 1e-10);
  EXPECT_LT(std::abs(z.dot(n * z)), 1e-10);
  EXPECT_LT(std::abs(o.dot(n * o)), 1e-10);
}

TEST(circuits, logical_not_is_transversal_ry_up_to_global_phase) {
  const Matrix ry5 = transversal_ry_pi().mat();
  Matrix expected = ry(std::numbers::pi);
  for (int q = 1; q < 5; ++q) {
    expected = tensor(expected, ry(std::numbers::pi));
  }
  EXPECT_LT(max_abs(ry5 - expected), 1e-15);
  EXPECT_LT(max_abs(logical_not().mat() - Complex(0, 1) * ry5), 1e-15);
  // The phase-free transversal product has the real block -iY.
  const Matrix block = logical_block(ry5);
  EXPECT_LT(max_abs(block - Complex(0, -1) * pauli_matrix(Pauli::Y)), 1e-10);
}

TEST(circuits, logical_hadamard_structure) {
  const auto& cw = codewords();
  const Matrix h = logical_hadamard().mat();
  const double s = 1.0 / std::sqrt(2.0);
  const Vector expected = s * (cw.zero_l.amps() + cw.one_l.amps());
  EXPECT_LT((h * cw.zero_l.amps() - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_TRUE(is_unitary(h, 1e-10));
  EXPECT_TRUE(is_hermitian(h, 1e-10));
  EXPECT_LT(max_abs(h * h - Matrix::Identity(32, 32)), 1e-10);
}

TEST(circuits, logical_hadamard_fixes_the_orthogonal_complement) {
  // Gram-Schmidt completion of {|0_L>, |1_L>} seeded by the standard basis.
  std::vector<Vector> basis = {codewords().zero_l.amps(), codewords().one_l.amps()};
  for (Eigen::Index k = 0; k < 32 && basis.size() < 32; ++k) {
    Vector v = Vector::Zero(32);
    v(k) = 1.0;
    for (const auto& b : basis) {
      v -= b.dot(v) * b;
    }
    if (v.norm() > 1e-6) {
      basis.push_back(v / v.norm());
    }
  }
  ASSERT_EQ(basis.size(), 32u);
  const Matrix h = logical_hadamard().mat();
  for (std::size_t k = 2; k < basis.size(); ++k) {
    EXPECT_LT((h * basis[k] - basis[k]).cwiseAbs().maxCoeff(), 1e-10) << k;
  }
}

TEST(circuits, logical_gates_preserve_the_code_space) {
  const Matrix p = code_projector();
  for (LogicalGate g : kAllGates) {
    const Matrix gm = logical_gate(g).mat();
    EXPECT_LT(max_abs(p * gm * p - gm * p), 1e-10) << gate_label(g);
  }
}

TEST(circuits, logical_blocks_match_single_qubit_gates) {
  const Matrix b = codespace_basis();
  for (LogicalGate g : kAllGates) {
    const Matrix block = b.adjoint() * logical_gate(g).mat() * b;
    EXPECT_LT(max_abs(block - ideal_gate_matrix(g)), 1e-10) << gate_label(g);
  }
  Matrix y(2, 2);
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  EXPECT_LT(max_abs(logical_block(logical_not().mat()) - y), 1e-10);
}

TEST(circuits, gate_labels) {
  EXPECT_EQ(parse_gate("id"), LogicalGate::kIdentity);
  EXPECT_EQ(parse_gate("not"), LogicalGate::kNot);
  EXPECT_EQ(parse_gate("had"), LogicalGate::kHadamard);
  EXPECT_FALSE(parse_gate("H"));
}

TEST(circuits, encoder_rejects_codewords_without_perfect_code_structure) {
  // A repetition code cannot separate all 16 single-qubit conditions.
  CodewordPair repetition{StateVector::basis(5, 0), StateVector::basis(5, 31)};
  try {
    build_encoder(EncoderFrame::canonical(), repetition);
    FAIL() << "expected EncoderConstructionError";
  } catch (const EncoderConstructionError& e) {
    EXPECT_NE(std::string(e.what()).find("not orthonormal"), std::string::npos);
  }
}
