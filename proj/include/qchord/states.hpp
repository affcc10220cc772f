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

#ifndef QCHORD_STATES_HPP
#define QCHORD_STATES_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "qchord/cartan.hpp"
#include "qchord/regions.hpp"

namespace qchord {

/// A two-qubit state held as magic-basis amplitudes.
using MagicState = Vector4cd;

/// |sum_j alpha_j^2| of a normalized magic-amplitude vector. 0 for
/// product states, 1 for maximally entangled ones. Throws on
/// non-normalized input.
double concurrence_magic(const MagicState& alpha);

/// Convex weights expressing the origin in a simplex of the z_j.
struct BarycentricWeights {
  /// (1-based eigenvalue index, weight); weights are nonnegative and
  /// sum to 1, and sum of weight * z_index vanishes.
  std::vector<std::pair<int, double>> weights;
};

/// Weights of the origin in the triangle of z values at the given
/// ordered indices (1-based), by ratios of signed subtriangle areas.
/// A degenerate triangle falls back to segment weights when the two
/// distinct endpoints are diametral; otherwise throws. Throws if the
/// origin lies outside.
BarycentricWeights barycentric_weights(const Vector4cd& z,
                                       const std::array<int, 3>& triangle,
                                       double tol = 1e-9);

enum class PairKind { Diametral, Face, Quadrilateral };

/// A pair of orthonormal product states mapped to maximally entangled
/// states by the nonlocal part. `phase_integers*` are the integer
/// multiples of pi in the amplitude phases, aligned with magic index;
/// `p` is the mixing parameter of the face construction.
struct ProductStatePair {
  PairKind kind = PairKind::Diametral;
  MagicState phi1;
  MagicState phi2;
  std::array<int, 4> phase_integers1{};
  std::array<int, 4> phase_integers2{};
  std::optional<double> p;
  bool orthogonal = false;
  double overlap = 0.0;
  /// Magic indices carrying amplitude in each state.
  std::vector<int> indices1;
  std::vector<int> indices2;
};

/// Pair (Psi_j +- i Psi_k)/sqrt(2) for a diametral chord (j, k).
/// Rejects non-diametral pairs.
ProductStatePair construct_pair_diametral(const CartanCoord& c,
                                          std::pair<int, int> pair,
                                          double tol = 1e-9);

/// Triangle construction with mixing parameter p for a perfect
/// entangler on a chamber face (c1 = c2 or c2 = +-c3) with no
/// diametral chord.
ProductStatePair construct_pair_face(const CartanCoord& c, double tol = 1e-9);

/// Two-triangle construction for a tetrahedral-region perfect
/// entangler (quadrilateral hull, no diametral chord). The orthogonal
/// flag reflects the actual overlap; both states reach maximal output
/// entanglement regardless.
ProductStatePair construct_pair_quadrilateral(const CartanCoord& c,
                                              double tol = 1e-9);

/// Dispatch over the region taxonomy: every diametral pair first, else
/// the face construction, else the quadrilateral construction. Throws
/// std::invalid_argument for non-perfect entanglers.
std::vector<ProductStatePair> construct_pairs(const CartanCoord& c,
                                              double tol = 1e-9);

struct PairVerification {
  double in_concurrence1 = 0.0;
  double in_concurrence2 = 0.0;
  double out_concurrence1 = 0.0;
  double out_concurrence2 = 0.0;
  double overlap = 0.0;
  double norm1 = 0.0;
  double norm2 = 0.0;
  double tol = 0.0;
  bool pass_product = false;
  bool pass_mes = false;
  bool pass_norm = false;

  bool pass() const { return pass_product && pass_mes && pass_norm; }
};

/// Checks a pair against the concurrence oracle: inputs product and
/// normalized, outputs under the nonlocal part maximally entangled.
PairVerification verify_pair(const CartanCoord& c,
                             const ProductStatePair& pair, double tol = 1e-9);

}  // namespace qchord

#endif  // QCHORD_STATES_HPP
