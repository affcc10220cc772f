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

#include "qchord/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qchord {
namespace {

constexpr Complex kI{0.0, 1.0};

double cross(const Complex& a, const Complex& b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

Complex unit_phase(double angle) { return std::exp(kI * angle); }

// Squared-amplitude sum magnitude without the normalization gate.
double concurrence_raw(const MagicState& alpha) {
  Complex s = 0.0;
  for (int j = 0; j < 4; ++j) s += alpha(j) * alpha(j);
  return std::abs(s);
}

Vector4cd apply_nonlocal_magic(const CartanCoord& c, const MagicState& alpha) {
  const EigenPhases h = eigenphases(c);
  Vector4cd out;
  for (int j = 0; j < 4; ++j) out(j) = unit_phase(h[j] / 2.0) * alpha(j);
  return out;
}

struct FaceIndices {
  int doubled_a;  // pair of coinciding squared eigenvalues
  int doubled_b;
  int other_lo;
  int other_hi;
};

FaceIndices face_indices(Face face) {
  switch (face) {
    case Face::C1EqC2: return {1, 4, 2, 3};
    case Face::C2EqC3: return {1, 2, 3, 4};
    case Face::C2EqMinusC3: return {3, 4, 1, 2};
    default: throw std::invalid_argument("not a face coordinate");
  }
}

Face detect_face(const CartanCoord& c, double tol) {
  if (std::abs(c.c1 - c.c2) <= tol) return Face::C1EqC2;
  if (std::abs(c.c2 - c.c3) <= tol) return Face::C2EqC3;
  if (std::abs(c.c2 + c.c3) <= tol) return Face::C2EqMinusC3;
  return Face::None;
}

}  // namespace

double concurrence_magic(const MagicState& alpha) {
  if (std::abs(alpha.squaredNorm() - 1.0) > 1e-10) {
    throw std::invalid_argument("magic state is not normalized");
  }
  return std::min(concurrence_raw(alpha), 1.0);
}

BarycentricWeights barycentric_weights(const Vector4cd& z,
                                       const std::array<int, 3>& triangle,
                                       double tol) {
  const Complex v1 = z(triangle[0] - 1);
  const Complex v2 = z(triangle[1] - 1);
  const Complex v3 = z(triangle[2] - 1);
  const double area2 = cross(v2 - v1, v3 - v1);

  if (std::abs(area2) <= tol) {
    // Degenerate triangle: the origin can only sit on a diametral
    // segment. Split the weight over the distinct endpoints.
    BarycentricWeights bw;
    std::vector<std::pair<int, Complex>> distinct;
    for (int i = 0; i < 3; ++i) {
      const Complex v = z(triangle[i] - 1);
      bool seen = false;
      for (const auto& [idx, w] : distinct) seen = seen || std::abs(w - v) <= tol;
      if (!seen) distinct.emplace_back(triangle[i], v);
    }
    if (distinct.size() != 2 ||
        std::abs(distinct[0].second + distinct[1].second) > tol) {
      throw std::invalid_argument(
          "degenerate triangle without a diametral segment through zero");
    }
    bw.weights.emplace_back(distinct[0].first, 0.5);
    bw.weights.emplace_back(distinct[1].first, 0.5);
    return bw;
  }

  const double sgn = area2 > 0.0 ? 1.0 : -1.0;
  double w[3] = {sgn * cross(v2, v3), sgn * cross(v3, v1),
                 sgn * cross(v1, v2)};
  const double total = sgn * area2;
  for (double& wi : w) {
    if (wi < -tol) {
      throw std::invalid_argument("origin lies outside the triangle");
    }
    wi = std::max(wi, 0.0) / total;
  }
  const double sum = w[0] + w[1] + w[2];
  BarycentricWeights bw;
  for (int i = 0; i < 3; ++i) {
    bw.weights.emplace_back(triangle[i], w[i] / sum);
  }
  return bw;
}

ProductStatePair construct_pair_diametral(const CartanCoord& c,
                                          std::pair<int, int> pair,
                                          double tol) {
  const auto diametral = diametral_chords(c, tol);
  const auto norm_pair = std::minmax(pair.first, pair.second);
  const bool found =
      std::find(diametral.begin(), diametral.end(),
                std::make_pair(norm_pair.first, norm_pair.second)) !=
      diametral.end();
  if (!found) {
    throw std::invalid_argument("pair is not a diametral chord of the gate");
  }

  const double s = 1.0 / std::sqrt(2.0);
  ProductStatePair out;
  out.kind = PairKind::Diametral;
  out.phi1 = MagicState::Zero();
  out.phi2 = MagicState::Zero();
  out.phi1(norm_pair.first - 1) = s;
  out.phi1(norm_pair.second - 1) = s * kI;
  out.phi2(norm_pair.first - 1) = s;
  out.phi2(norm_pair.second - 1) = -s * kI;
  out.indices1 = {norm_pair.first, norm_pair.second};
  out.indices2 = out.indices1;
  out.overlap = std::abs(out.phi1.dot(out.phi2));
  out.orthogonal = out.overlap <= tol;
  return out;
}

ProductStatePair construct_pair_face(const CartanCoord& c, double tol) {
  if (!is_perfect_entangler(c, tol)) {
    throw std::invalid_argument("not a perfect entangler");
  }
  if (!diametral_chords(c, tol).empty()) {
    throw std::invalid_argument(
        "face construction requires no diametral chord");
  }
  const Face face = detect_face(c, tol);
  const FaceIndices fi = face_indices(face);

  const Vector4cd z = squared_eigenvalues(c);
  const EigenPhases h = eigenphases(c);
  const BarycentricWeights bw = barycentric_weights(
      z, {fi.doubled_a, fi.other_lo, fi.other_hi}, tol);

  double w_r = 0.0, w_lo = 0.0, w_hi = 0.0;
  for (const auto& [idx, w] : bw.weights) {
    if (idx == fi.doubled_a) w_r = w;
    if (idx == fi.other_lo) w_lo = w;
    if (idx == fi.other_hi) w_hi = w;
  }

  // Orthogonality: overlap = w_hi - w_lo + p * w_r must vanish; the
  // odd phase integer sits on the lower non-doubled index. With the
  // doubled weight degenerate any p works; take 0.
  double p = 0.0;
  if (w_r > 1e-12) {
    p = (w_lo - w_hi) / w_r;
    if (std::abs(p) > 1.0 + 1e-12) {
      throw std::logic_error(
          "face mixing parameter out of range; construction defect");
    }
    p = std::clamp(p, -1.0, 1.0);
  }

  const double hr = h[fi.doubled_a - 1];
  ProductStatePair out;
  out.kind = PairKind::Face;
  out.p = p;
  out.phi1 = MagicState::Zero();
  out.phi2 = MagicState::Zero();

  out.phi1(fi.doubled_a - 1) = std::sqrt(w_r) * unit_phase(-hr / 2.0);
  out.phi1(fi.other_lo - 1) =
      std::sqrt(w_lo) * unit_phase(-h[fi.other_lo - 1] / 2.0);
  out.phi1(fi.other_hi - 1) =
      std::sqrt(w_hi) * unit_phase(-h[fi.other_hi - 1] / 2.0);

  out.phi2(fi.doubled_a - 1) = p * std::sqrt(w_r) * unit_phase(-hr / 2.0);
  out.phi2(fi.doubled_b - 1) =
      std::sqrt(1.0 - p * p) * std::sqrt(w_r) * unit_phase(-hr / 2.0);
  out.phi2(fi.other_lo - 1) =
      std::sqrt(w_lo) *
      unit_phase(-(std::numbers::pi + h[fi.other_lo - 1] / 2.0));
  out.phi2(fi.other_hi - 1) =
      std::sqrt(w_hi) * unit_phase(-h[fi.other_hi - 1] / 2.0);
  out.phase_integers2[fi.other_lo - 1] = 1;

  out.indices1 = {fi.doubled_a, fi.other_lo, fi.other_hi};
  out.indices2 = {fi.doubled_a, fi.doubled_b, fi.other_lo, fi.other_hi};
  std::sort(out.indices1.begin(), out.indices1.end());
  std::sort(out.indices2.begin(), out.indices2.end());

  out.overlap = std::abs(out.phi1.dot(out.phi2));
  out.orthogonal = out.overlap <= tol;
  return out;
}

ProductStatePair construct_pair_quadrilateral(const CartanCoord& c,
                                              double tol) {
  if (!is_perfect_entangler(c, tol)) {
    throw std::invalid_argument("not a perfect entangler");
  }
  if (!diametral_chords(c, tol).empty()) {
    throw std::invalid_argument(
        "quadrilateral construction requires no diametral chord");
  }
  if (detect_face(c, tol) != Face::None) {
    throw std::invalid_argument(
        "quadrilateral construction does not apply on a face");
  }

  const Vector4cd z = squared_eigenvalues(c);
  const EigenPhases h = eigenphases(c);
  const ZeroSimplexReport rep = zero_simplices(z, tol);
  if (rep.hull_kind != HullKind::Quadrilateral ||
      rep.containing_triangles.size() != 2) {
    throw std::invalid_argument(
        "expected a quadrilateral hull with two zero-containing triangles");
  }

  const auto& tri_a = rep.containing_triangles[0];
  const auto& tri_b = rep.containing_triangles[1];
  const BarycentricWeights wa = barycentric_weights(z, tri_a, tol);
  const BarycentricWeights wb = barycentric_weights(z, tri_b, tol);

  std::vector<int> shared;
  for (int ia : tri_a) {
    if (std::find(tri_b.begin(), tri_b.end(), ia) != tri_b.end()) {
      shared.push_back(ia);
    }
  }
  const int odd_index = *std::min_element(shared.begin(), shared.end());

  ProductStatePair out;
  out.kind = PairKind::Quadrilateral;
  out.phi1 = MagicState::Zero();
  out.phi2 = MagicState::Zero();
  for (const auto& [idx, w] : wa.weights) {
    out.phi1(idx - 1) = std::sqrt(w) * unit_phase(-h[idx - 1] / 2.0);
    out.indices1.push_back(idx);
  }
  for (const auto& [idx, w] : wb.weights) {
    double phase = -h[idx - 1] / 2.0;
    if (idx == odd_index) {
      phase -= std::numbers::pi;
      out.phase_integers2[idx - 1] = 1;
    }
    out.phi2(idx - 1) = std::sqrt(w) * unit_phase(phase);
    out.indices2.push_back(idx);
  }
  std::sort(out.indices1.begin(), out.indices1.end());
  std::sort(out.indices2.begin(), out.indices2.end());

  out.overlap = std::abs(out.phi1.dot(out.phi2));
  out.orthogonal = out.overlap <= tol;
  return out;
}

std::vector<ProductStatePair> construct_pairs(const CartanCoord& c,
                                              double tol) {
  if (!is_perfect_entangler(c, tol)) {
    throw std::invalid_argument("not a perfect entangler");
  }
  std::vector<ProductStatePair> pairs;
  const auto diametral = diametral_chords(c, tol);
  if (!diametral.empty()) {
    pairs.reserve(diametral.size());
    for (const auto& jk : diametral) {
      pairs.push_back(construct_pair_diametral(c, jk, tol));
    }
  } else if (detect_face(c, tol) != Face::None) {
    pairs.push_back(construct_pair_face(c, tol));
  } else {
    pairs.push_back(construct_pair_quadrilateral(c, tol));
  }
  return pairs;
}

PairVerification verify_pair(const CartanCoord& c,
                             const ProductStatePair& pair, double tol) {
  PairVerification v;
  v.tol = tol;
  v.norm1 = pair.phi1.norm();
  v.norm2 = pair.phi2.norm();
  v.in_concurrence1 = concurrence_raw(pair.phi1);
  v.in_concurrence2 = concurrence_raw(pair.phi2);
  v.out_concurrence1 = concurrence_raw(apply_nonlocal_magic(c, pair.phi1));
  v.out_concurrence2 = concurrence_raw(apply_nonlocal_magic(c, pair.phi2));
  v.overlap = std::abs(pair.phi1.dot(pair.phi2));
  v.pass_product = v.in_concurrence1 <= tol && v.in_concurrence2 <= tol;
  v.pass_mes =
      v.out_concurrence1 >= 1.0 - tol && v.out_concurrence2 >= 1.0 - tol;
  v.pass_norm =
      std::abs(v.norm1 - 1.0) <= tol && std::abs(v.norm2 - 1.0) <= tol;
  return v;
}

}  // namespace qchord
