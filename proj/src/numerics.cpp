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

#include "qchord/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qchord {

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b) {
  return Eigen::kroneckerProduct(a, b);
}

Vector4cd kron(const Vector2cd& a, const Vector2cd& b) {
  return Eigen::kroneckerProduct(a, b);
}

bool is_unitary(const Matrix4cd& u, double tol) {
  const Matrix4cd d = u.adjoint() * u - Matrix4cd::Identity();
  return d.cwiseAbs().maxCoeff() <= tol;
}

void require_unitary(const Matrix4cd& u, double tol) {
  if (!is_unitary(u, tol)) {
    throw std::invalid_argument("matrix is not unitary within tolerance");
  }
}

std::array<double, 2> schmidt_spectrum(const Vector4cd& state) {
  if (std::abs(state.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("state is not normalized");
  }
  // psi as a 2x2 matrix with row = qubit A, col = qubit B.
  Eigen::Map<const Eigen::Matrix<Complex, 2, 2, Eigen::RowMajor>> psi(
      state.data());
  const Matrix2cd rho_a = psi * psi.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix2cd> es(rho_a);
  double l1 = es.eigenvalues()(1);
  double l2 = es.eigenvalues()(0);
  l1 = std::clamp(l1, 0.0, 1.0);
  l2 = std::clamp(l2, 0.0, 1.0);
  return {l1, l2};
}

double state_linear_entropy(const Vector4cd& state) {
  Eigen::Map<const Eigen::Matrix<Complex, 2, 2, Eigen::RowMajor>> psi(
      state.data());
  const Matrix2cd rho_a = psi * psi.adjoint();
  return 1.0 - (rho_a * rho_a).trace().real();
}

Matrix4cd reshuffle(const Matrix4cd& u) {
  Matrix4cd r;
  for (int a_out = 0; a_out < 2; ++a_out) {
    for (int a_in = 0; a_in < 2; ++a_in) {
      for (int b_out = 0; b_out < 2; ++b_out) {
        for (int b_in = 0; b_in < 2; ++b_in) {
          r(2 * a_out + a_in, 2 * b_out + b_in) =
              u(2 * a_out + b_out, 2 * a_in + b_in);
        }
      }
    }
  }
  return r;
}

std::array<double, 4> operator_schmidt_values(const Matrix4cd& u) {
  require_unitary(u);
  Eigen::JacobiSVD<Matrix4cd> svd(reshuffle(u));
  const Eigen::Vector4d s = svd.singularValues();
  return {s(0), s(1), s(2), s(3)};
}

}  // namespace qchord
