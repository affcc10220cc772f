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

#ifndef QCHORD_MEASURES_HPP
#define QCHORD_MEASURES_HPP

#include <array>
#include <utility>

#include "qchord/cartan.hpp"
#include "qchord/numerics.hpp"

namespace qchord {

/// Squared lengths of the six direct chords |z_j - z_k|^2 and the six
/// conjugate chords |z_j - conj(z_k)|^2, j < k, stored in pair order
/// (1,2), (1,3), (1,4), (2,3), (2,4), (3,4) with 1-based indices.
struct ChordSet {
  std::array<double, 6> direct{};
  std::array<double, 6> conjugate{};

  static constexpr std::array<std::pair<int, int>, 6> kPairs = {
      {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  static int pair_index(int j, int k);
};

ChordSet chords(const Vector4cd& z);

/// e_p = (1/72) * sum of squared direct chord lengths. In [0, 2/9].
double entangling_power(const ChordSet& ch);

/// g_t from the conjugate chords, (1/12) * sum of squared lengths.
/// Cross-checked against the three-chord anchor route for every anchor
/// and against the Cartan-coordinate cosine form; disagreement beyond
/// 1e-10 throws std::logic_error.
double gate_typicality(const ChordSet& ch, const CartanCoord& c);

/// (1/6) * sum over k != anchor of |z_anchor - conj(z_k)|^2.
double gate_typicality_anchor(const ChordSet& ch, int anchor);

/// 1 - [cos(2c1) + cos(2c2) + cos(2c3)] / 3.
double gate_typicality_cartan(const CartanCoord& c);

/// L = (3/8) (3 e_p + g_t).
double linear_entropy(double e_p, double g_t);

/// Chord route: L = (1/64) * sum [direct + 2 * conjugate].
double linear_entropy(const ChordSet& ch);

struct NonlocalMeasures {
  double e_p = 0.0;
  double g_t = 0.0;
  double L = 0.0;
};

/// All three measures from the chord set of c; route agreement enforced.
NonlocalMeasures measures_from_coords(const CartanCoord& c);

/// Linear entropy of a gate via its operator Schmidt values,
/// L(U) = 1 - sum (s_i^2 / 4)^2.
double gate_linear_entropy(const Matrix4cd& u);

/// Measures from explicit matrices:
///   e_p(U) = (4/9) (L(U) + [L(US) - L(S)])
///   g_t(U) = (4/3) (L(U) - [L(US) - L(S)])
/// The result is checked against the chord route of the equivalence
/// class of U within 1e-9; disagreement throws std::logic_error.
NonlocalMeasures measures_from_matrix(const Matrix4cd& u);

enum class ChordKind { Direct, Conjugate };

/// Magic-basis amplitudes of the state attached to chord (j, k):
///   direct:    [U_d |Psi_j> + s i U_d |Psi_k>] / sqrt(2)
///   conjugate: [U_d |Psi_j> + s i U_d^dag |Psi_k>] / sqrt(2)
/// with s = +-1. Its concurrence is half the chord length. j and k are
/// 1-based and must differ.
Vector4cd chord_state(const CartanCoord& c, int j, int k, ChordKind kind,
                      int sign = +1);

}  // namespace qchord

#endif  // QCHORD_MEASURES_HPP
