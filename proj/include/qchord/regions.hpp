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

#ifndef QCHORD_REGIONS_HPP
#define QCHORD_REGIONS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qchord/cartan.hpp"

namespace qchord {

enum class RegionKind {
  NonPE,
  DiametralPlane,
  FaceTriangle,
  T1,
  T2,
  T3,
  Special,
};

enum class SpecialClass { None, CNOT, ISWAP, SqrtSWAP, SqrtSWAPDag, SPE };

enum class Face { None, C1EqC2, C2EqC3, C2EqMinusC3 };

/// Full classification of a canonical coordinate triple. `planes`
/// holds every diametral-chord plane the class sits on, as the h-index
/// pair (j, k) with |h_j - h_k| = pi; special classes keep their plane
/// memberships alongside the special tag.
struct RegionLabel {
  RegionKind kind = RegionKind::NonPE;
  SpecialClass special = SpecialClass::None;
  Face face = Face::None;
  std::vector<std::pair<int, int>> planes;
};

std::string to_string(RegionKind k);
std::string to_string(SpecialClass s);
std::string to_string(Face f);
std::string region_string(const RegionLabel& label);

/// c1 + c2 >= pi/2 and c2 +- c3 <= pi/2, boundaries inclusive
/// within tol.
bool is_perfect_entangler(const CartanCoord& c, double tol = 1e-9);

/// All pairs (j, k), j < k, with z_j = -z_k within tol, i.e. the chord
/// z_j -> z_k passes through the origin.
std::vector<std::pair<int, int>> diametral_chords(const CartanCoord& c,
                                                  double tol = 1e-9);

enum class HullKind { Point, Segment, Triangle, Quadrilateral };

struct ZeroSimplexReport {
  HullKind hull_kind = HullKind::Point;
  /// Ordered index triples (vertex order around the hull) whose
  /// triangle contains the origin.
  std::vector<std::array<int, 3>> containing_triangles;
  std::vector<std::pair<int, int>> diametral_pairs;

  bool contains_zero() const {
    return !containing_triangles.empty() || !diametral_pairs.empty();
  }
};

/// Simplex analysis of the four points z_j. The candidate triangles are
/// the four triples of the cyclically ordered quadrilateral (3,4,1,2);
/// containment uses signed areas with boundary counted as inside.
ZeroSimplexReport zero_simplices(const Vector4cd& z, double tol = 1e-9);

/// Taxonomy classification; priority Special > diametral plane > face
/// triangle > tetrahedron. c must be canonical.
RegionLabel classify(const CartanCoord& c, double tol = 1e-9);

enum class TetRegion { T1, T2, T3 };

/// Residual of the tetrahedral orthogonality condition in
/// cross-multiplied form:
///   T1: sin[2(c2-c3)] sin[2(c1-c3)] - sin[2(c2+c3)] sin[2(c1+c3)]
///   T2: sin[2(c1-c2)] sin[2(c1-c3)] - sin[2(c1+c2)] sin[2(c1+c3)]
///   T3: sin[2(c1-c2)] sin[2(c1+c3)] - sin[2(c1+c2)] sin[2(c1-c3)]
struct OrthogonalityReport {
  TetRegion region;
  double residual = 0.0;
  bool satisfied = false;
};

std::string to_string(TetRegion r);

/// Requires c canonical, a perfect entangler, off every diametral plane
/// and face; throws std::invalid_argument otherwise.
OrthogonalityReport orthogonality_condition(const CartanCoord& c,
                                            double tol = 1e-9);

}  // namespace qchord

#endif  // QCHORD_REGIONS_HPP
