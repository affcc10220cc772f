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

#include "qchord/cartan.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace qchord {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Reduces x into [0, pi).
double mod_pi(double x) {
  double y = std::fmod(x, kPi);
  if (y < 0.0) y += kPi;
  if (y >= kPi) y = 0.0;  // fmod may round up to pi
  return y;
}

// How far (a, b, d) sits outside the canonical chamber.
double chamber_violation(double a, double b, double d) {
  double v = 0.0;
  v = std::max(v, a - kPi / 2.0);
  v = std::max(v, -a);
  v = std::max(v, b - a);
  v = std::max(v, std::abs(d) - b);
  return v;
}

}  // namespace

EigenPhases eigenphases(const CartanCoord& c) {
  const double h1 = c.c1 - c.c2 + c.c3;
  const double h2 = c.c1 + c.c2 - c.c3;
  const double h3 = -c.c1 - c.c2 - c.c3;
  const double h4 = -(h1 + h2 + h3);
  return {h1, h2, h3, h4};
}

Vector4cd squared_eigenvalues(const CartanCoord& c) {
  const EigenPhases h = eigenphases(c);
  Vector4cd z;
  for (int j = 0; j < 4; ++j) z(j) = std::exp(kI * h[j]);
  return z;
}

const Matrix4cd& magic_basis() {
  static const Matrix4cd m = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix4cd b;
    b << s, 0, 0, s * kI,
        0, s * kI, s, 0,
        0, s * kI, -s, 0,
        s, 0, 0, -s * kI;
    return b;
  }();
  return m;
}

Matrix4cd build_nonlocal(const CartanCoord& c) {
  const EigenPhases h = eigenphases(c);
  Vector4cd d;
  for (int j = 0; j < 4; ++j) d(j) = std::exp(kI * (h[j] / 2.0));
  const Matrix4cd& m = magic_basis();
  return m * d.asDiagonal() * m.adjoint();
}

bool in_weyl_chamber(const CartanCoord& c, double tol) {
  return chamber_violation(c.c1, c.c2, c.c3) <= tol;
}

CartanCoord canonicalize(double r1, double r2, double r3, double tol) {
  // The local-equivalence orbit of a triple is generated by coordinate
  // permutations, simultaneous sign flips of two coordinates, and
  // shifts of a single coordinate by pi. The canonical chamber is a
  // fundamental domain, so exactly one orbit element lands in it (up
  // to the c1 = pi/2 identification).
  static constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                      {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static constexpr int kSign[4][3] = {
      {1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};

  const double raw[3] = {r1, r2, r3};
  double best[3] = {0, 0, 0};
  double best_violation = std::numeric_limits<double>::infinity();
  bool found = false;

  for (const auto& perm : kPerm) {
    for (const auto& sign : kSign) {
      double reps[3][2];
      for (int i = 0; i < 3; ++i) {
        const double m = mod_pi(sign[i] * raw[perm[i]]);
        reps[i][0] = m;
        reps[i][1] = m - kPi;
      }
      for (int ia = 0; ia < 2; ++ia) {
        for (int ib = 0; ib < 2; ++ib) {
          for (int id = 0; id < 2; ++id) {
            const double a = reps[0][ia];
            const double b = reps[1][ib];
            const double d = reps[2][id];
            const double v = chamber_violation(a, b, d);
            if (v > tol) continue;
            bool better = false;
            if (!found || v < best_violation - tol) {
              better = true;
            } else if (v <= best_violation + tol) {
              // Near-degenerate candidates: with c1 at pi/2 the triples
              // (pi/2, c2, +-c3) coincide as classes; keep c3 >= 0.
              if (std::abs(a - kPi / 2.0) <= tol && d > best[2] + tol) {
                better = true;
              }
            }
            if (better) {
              best[0] = a;
              best[1] = b;
              best[2] = d;
              best_violation = v;
              found = true;
            }
          }
        }
      }
    }
  }
  if (!found) {
    throw std::logic_error("canonicalize: no chamber representative found");
  }
  // Snap coordinates sitting within rounding error of the chamber
  // landmarks, so equivalent inputs map to identical bytes.
  for (double& v : best) {
    if (std::abs(v) < 1e-12) v = 0.0;
    if (std::abs(v - kPi / 2) < 1e-12) v = kPi / 2;
    if (std::abs(v + kPi / 2) < 1e-12) v = -kPi / 2;
  }
  return {best[0], best[1], best[2]};
}

CartanCoord extract_coords(const Matrix4cd& u, double tol) {
  require_unitary(u, tol);
  // Normalize the determinant to 1 (principal fourth root).
  const Complex det = u.determinant();
  const Matrix4cd v = u * std::pow(det, -0.25);

  const Matrix4cd& mb = magic_basis();
  const Matrix4cd up = mb.adjoint() * v * mb;
  const Matrix4cd m = up.transpose() * up;

  // m is unitary symmetric with eigenvalues e^{i h_j}; det m = 1 lets
  // the fourth phase be fixed so the phases sum to zero exactly.
  Eigen::ComplexEigenSolver<Matrix4cd> es(m, /*computeEigenvectors=*/false);
  const Vector4cd ev = es.eigenvalues();
  const double h1 = std::arg(ev(0));
  const double h2 = std::arg(ev(1));
  const double h3 = std::arg(ev(2));
  const double h4 = -(h1 + h2 + h3);

  return canonicalize((h1 + h2) / 2.0, (h2 + h4) / 2.0, (h1 + h4) / 2.0);
}

Vector4cd magic_to_computational(const Vector4cd& alpha) {
  return magic_basis() * alpha;
}

Vector4cd computational_to_magic(const Vector4cd& state) {
  return magic_basis().adjoint() * state;
}

}  // namespace qchord
