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

#include "qchord/regions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qchord {
namespace {

constexpr double kPi = std::numbers::pi;

double cross(const Complex& a, const Complex& b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool near_triple(const CartanCoord& c, double a, double b, double d,
                 double tol) {
  return near(c.c1, a, tol) && near(c.c2, b, tol) && near(c.c3, d, tol);
}

}  // namespace

std::string to_string(RegionKind k) {
  switch (k) {
    case RegionKind::NonPE: return "NonPE";
    case RegionKind::DiametralPlane: return "DiametralPlane";
    case RegionKind::FaceTriangle: return "FaceTriangle";
    case RegionKind::T1: return "T1";
    case RegionKind::T2: return "T2";
    case RegionKind::T3: return "T3";
    case RegionKind::Special: return "Special";
  }
  return "?";
}

std::string to_string(SpecialClass s) {
  switch (s) {
    case SpecialClass::None: return "None";
    case SpecialClass::CNOT: return "CNOT";
    case SpecialClass::ISWAP: return "iSWAP";
    case SpecialClass::SqrtSWAP: return "SqrtSWAP";
    case SpecialClass::SqrtSWAPDag: return "SqrtSWAPDag";
    case SpecialClass::SPE: return "SPE";
  }
  return "?";
}

std::string to_string(Face f) {
  switch (f) {
    case Face::None: return "None";
    case Face::C1EqC2: return "c1=c2";
    case Face::C2EqC3: return "c2=c3";
    case Face::C2EqMinusC3: return "c2=-c3";
  }
  return "?";
}

std::string to_string(TetRegion r) {
  switch (r) {
    case TetRegion::T1: return "T1";
    case TetRegion::T2: return "T2";
    case TetRegion::T3: return "T3";
  }
  return "?";
}

std::string region_string(const RegionLabel& label) {
  switch (label.kind) {
    case RegionKind::Special:
      return "Special(" + to_string(label.special) + ")";
    case RegionKind::FaceTriangle:
      return "FaceTriangle(" + to_string(label.face) + ")";
    default:
      return to_string(label.kind);
  }
}

bool is_perfect_entangler(const CartanCoord& c, double tol) {
  return c.c1 + c.c2 >= kPi / 2.0 - tol && c.c2 + c.c3 <= kPi / 2.0 + tol &&
         c.c2 - c.c3 <= kPi / 2.0 + tol;
}

std::vector<std::pair<int, int>> diametral_chords(const CartanCoord& c,
                                                  double tol) {
  const EigenPhases h = eigenphases(c);
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k) {
      const double gap = std::abs(std::remainder(h[j] - h[k], 2.0 * kPi));
      if (std::abs(gap - kPi) <= tol) out.emplace_back(j + 1, k + 1);
    }
  }
  return out;
}

ZeroSimplexReport zero_simplices(const Vector4cd& z, double tol) {
  ZeroSimplexReport rep;

  // Coincidence structure: greedy clustering of the four points.
  int clusters = 0;
  int cluster_of[4];
  for (int j = 0; j < 4; ++j) {
    cluster_of[j] = -1;
    for (int k = 0; k < j; ++k) {
      if (std::abs(z(j) - z(k)) <= tol) {
        cluster_of[j] = cluster_of[k];
        break;
      }
    }
    if (cluster_of[j] < 0) cluster_of[j] = clusters++;
  }
  switch (clusters) {
    case 1: rep.hull_kind = HullKind::Point; break;
    case 2: rep.hull_kind = HullKind::Segment; break;
    case 3: rep.hull_kind = HullKind::Triangle; break;
    default: rep.hull_kind = HullKind::Quadrilateral; break;
  }

  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k) {
      if (std::abs(z(j) + z(k)) <= tol) {
        rep.diametral_pairs.emplace_back(j + 1, k + 1);
      }
    }
  }

  // The points in cyclic order are (z3, z4, z1, z2); test the four
  // triangles of that quadrilateral, skipping degenerate ones.
  static constexpr std::array<std::array<int, 3>, 4> kTriangles = {
      {{3, 4, 1}, {3, 4, 2}, {3, 1, 2}, {4, 1, 2}}};
  for (const auto& tri : kTriangles) {
    const Complex v1 = z(tri[0] - 1);
    const Complex v2 = z(tri[1] - 1);
    const Complex v3 = z(tri[2] - 1);
    const double area2 = cross(v2 - v1, v3 - v1);
    if (std::abs(area2) <= tol) continue;
    const double sgn = area2 > 0.0 ? 1.0 : -1.0;
    const double w1 = sgn * cross(v2, v3);
    const double w2 = sgn * cross(v3, v1);
    const double w3 = sgn * cross(v1, v2);
    if (w1 >= -tol && w2 >= -tol && w3 >= -tol) {
      rep.containing_triangles.push_back(tri);
    }
  }
  return rep;
}

RegionLabel classify(const CartanCoord& c, double tol) {
  RegionLabel label;
  label.planes = diametral_chords(c, tol);

  if (!is_perfect_entangler(c, tol)) {
    label.kind = RegionKind::NonPE;
    return label;
  }

  if (near_triple(c, kPi / 2, 0, 0, tol)) {
    label.special = SpecialClass::CNOT;
  } else if (near_triple(c, kPi / 2, kPi / 2, 0, tol)) {
    label.special = SpecialClass::ISWAP;
  } else if (near_triple(c, kPi / 4, kPi / 4, kPi / 4, tol)) {
    label.special = SpecialClass::SqrtSWAP;
  } else if (near_triple(c, kPi / 4, kPi / 4, -kPi / 4, tol)) {
    label.special = SpecialClass::SqrtSWAPDag;
  } else if (near(c.c1, kPi / 2, tol) && std::abs(c.c3) <= tol) {
    label.special = SpecialClass::SPE;
  }
  if (label.special != SpecialClass::None) {
    label.kind = RegionKind::Special;
    return label;
  }

  if (!label.planes.empty()) {
    label.kind = RegionKind::DiametralPlane;
    return label;
  }

  if (near(c.c1, c.c2, tol)) {
    label.face = Face::C1EqC2;
  } else if (near(c.c2, c.c3, tol)) {
    label.face = Face::C2EqC3;
  } else if (near(c.c2, -c.c3, tol)) {
    label.face = Face::C2EqMinusC3;
  }
  if (label.face != Face::None) {
    label.kind = RegionKind::FaceTriangle;
    return label;
  }

  const double lo = c.c1 + c.c3;
  const double hi = c.c1 - c.c3;
  if (lo < kPi / 2 && hi < kPi / 2) {
    label.kind = RegionKind::T1;
  } else if (lo > kPi / 2) {
    label.kind = RegionKind::T2;
  } else {
    label.kind = RegionKind::T3;
  }
  return label;
}

OrthogonalityReport orthogonality_condition(const CartanCoord& c, double tol) {
  const RegionLabel label = classify(c, tol);
  OrthogonalityReport rep;
  switch (label.kind) {
    case RegionKind::T1: rep.region = TetRegion::T1; break;
    case RegionKind::T2: rep.region = TetRegion::T2; break;
    case RegionKind::T3: rep.region = TetRegion::T3; break;
    default:
      throw std::invalid_argument(
          "orthogonality condition applies only to tetrahedral regions");
  }
  const double sp = std::sin(2.0 * (c.c1 + c.c3));
  const double sm = std::sin(2.0 * (c.c1 - c.c3));
  switch (rep.region) {
    case TetRegion::T1:
      rep.residual = std::sin(2.0 * (c.c2 - c.c3)) * sm -
                     std::sin(2.0 * (c.c2 + c.c3)) * sp;
      break;
    case TetRegion::T2:
      rep.residual = std::sin(2.0 * (c.c1 - c.c2)) * sm -
                     std::sin(2.0 * (c.c1 + c.c2)) * sp;
      break;
    case TetRegion::T3:
      rep.residual = std::sin(2.0 * (c.c1 - c.c2)) * sp -
                     std::sin(2.0 * (c.c1 + c.c2)) * sm;
      break;
  }
  rep.satisfied = std::abs(rep.residual) <= tol;
  return rep;
}

}  // namespace qchord
