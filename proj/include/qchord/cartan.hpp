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

#ifndef QCHORD_CARTAN_HPP
#define QCHORD_CARTAN_HPP

#include <array>

#include "qchord/numerics.hpp"

namespace qchord {

/// Coordinates (c1, c2, c3) of a local-equivalence class. Canonical
/// triples satisfy pi/2 >= c1 >= c2 >= |c3| >= 0, with the triples
/// (pi/2, c2, c3) and (pi/2, c2, -c3) identified.
struct CartanCoord {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// Phases h_j of the squared eigenvalues of the nonlocal part:
///   h1 = c1 - c2 + c3,  h2 = c1 + c2 - c3,
///   h3 = -c1 - c2 - c3, h4 = -c1 + c2 + c3.
/// h4 is computed as -(h1 + h2 + h3) so the sum is exactly zero.
using EigenPhases = std::array<double, 4>;

EigenPhases eigenphases(const CartanCoord& c);

/// The four points e^{i h_j} on the unit circle.
Vector4cd squared_eigenvalues(const CartanCoord& c);

/// Change-of-basis matrix whose columns are the magic (Bell-like)
/// states in the computational basis:
///   Psi1 = (|00> + |11>)/sqrt(2),  Psi2 = i(|01> + |10>)/sqrt(2),
///   Psi3 = (|01> - |10>)/sqrt(2),  Psi4 = i(|00> - |11>)/sqrt(2).
const Matrix4cd& magic_basis();

/// Nonlocal part sum_j e^{i h_j / 2} |Psi_j><Psi_j| in the
/// computational basis. Unitary with determinant 1.
Matrix4cd build_nonlocal(const CartanCoord& c);

/// Maps an arbitrary triple of angles to the canonical representative
/// of its local-equivalence class. Idempotent. With c1 within tol of
/// pi/2 the sign of c3 is fixed nonnegative.
CartanCoord canonicalize(double r1, double r2, double r3, double tol = 1e-9);
inline CartanCoord canonicalize(const CartanCoord& c, double tol = 1e-9) {
  return canonicalize(c.c1, c.c2, c.c3, tol);
}

bool in_weyl_chamber(const CartanCoord& c, double tol = 1e-9);

/// Canonical coordinates of the local-equivalence class of U. Any
/// global phase is accepted; U must be unitary within tol entrywise.
CartanCoord extract_coords(const Matrix4cd& u, double tol = 1e-10);

/// State with magic-basis amplitudes alpha, in the computational basis.
Vector4cd magic_to_computational(const Vector4cd& alpha);

/// Magic-basis amplitudes of a computational-basis state.
Vector4cd computational_to_magic(const Vector4cd& state);

}  // namespace qchord

#endif  // QCHORD_CARTAN_HPP
