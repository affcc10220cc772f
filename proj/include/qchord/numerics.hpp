/*
 * Copyright 2026 The qchord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QCHORD_NUMERICS_HPP
#define QCHORD_NUMERICS_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace qchord {

using Complex = std::complex<double>;
using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector2cd;
using Eigen::Vector4cd;

/// Tensor product with qubit A as the slow index: basis order
/// |00>, |01>, |10>, |11> where the first label is qubit A.
Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b);
Vector4cd kron(const Vector2cd& a, const Vector2cd& b);

bool is_unitary(const Matrix4cd& u, double tol = 1e-10);

/// Throws std::invalid_argument if U†U deviates from identity by more
/// than tol in any entry.
void require_unitary(const Matrix4cd& u, double tol = 1e-10);

/// Eigenvalues (l1 >= l2) of the reduced density matrix of qubit A.
/// The state must be normalized.
std::array<double, 2> schmidt_spectrum(const Vector4cd& state);

/// Linear entropy 1 - Tr(rho_A^2) of a pure two-qubit state.
/// Ranges over [0, 1/2]; 0 for product states.
double state_linear_entropy(const Vector4cd& state);

/// Reshuffling R[(a_out,a_in),(b_out,b_in)] = U[(a_out,b_out),(a_in,b_in)].
Matrix4cd reshuffle(const Matrix4cd& u);

/// Singular values s1 >= ... >= s4 of the reshuffled matrix.
/// For unitary input sum s_i^2 = 4.
std::array<double, 4> operator_schmidt_values(const Matrix4cd& u);

}  // namespace qchord

#endif  // QCHORD_NUMERICS_HPP
