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

#include "qchord/measures.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qchord {
namespace {

constexpr Complex kI{0.0, 1.0};

[[noreturn]] void route_mismatch(const char* what, double a, double b) {
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " routes disagree: " << a << " vs " << b;
  throw std::logic_error(msg.str());
}

}  // namespace

int ChordSet::pair_index(int j, int k) {
  for (int i = 0; i < 6; ++i) {
    if (kPairs[i].first == j && kPairs[i].second == k) return i;
    if (kPairs[i].first == k && kPairs[i].second == j) return i;
  }
  throw std::invalid_argument("invalid chord pair");
}

ChordSet chords(const Vector4cd& z) {
  ChordSet ch;
  for (int i = 0; i < 6; ++i) {
    const auto [j, k] = ChordSet::kPairs[i];
    ch.direct[i] = std::norm(z(j - 1) - z(k - 1));
    ch.conjugate[i] = std::norm(z(j - 1) - std::conj(z(k - 1)));
  }
  return ch;
}

double entangling_power(const ChordSet& ch) {
  double sum = 0.0;
  for (double d : ch.direct) sum += d;
  return sum / 72.0;
}

double gate_typicality_anchor(const ChordSet& ch, int anchor) {
  double sum = 0.0;
  for (int k = 1; k <= 4; ++k) {
    if (k == anchor) continue;
    sum += ch.conjugate[ChordSet::pair_index(anchor, k)];
  }
  return sum / 6.0;
}

double gate_typicality_cartan(const CartanCoord& c) {
  return 1.0 - (std::cos(2.0 * c.c1) + std::cos(2.0 * c.c2) +
                std::cos(2.0 * c.c3)) /
                   3.0;
}

double gate_typicality(const ChordSet& ch, const CartanCoord& c) {
  double sum = 0.0;
  for (double v : ch.conjugate) sum += v;
  const double gt = sum / 12.0;

  for (int anchor = 1; anchor <= 4; ++anchor) {
    const double ga = gate_typicality_anchor(ch, anchor);
    if (std::abs(ga - gt) > 1e-10) route_mismatch("gate typicality", gt, ga);
  }
  const double gc = gate_typicality_cartan(c);
  if (std::abs(gc - gt) > 1e-10) route_mismatch("gate typicality", gt, gc);
  return gt;
}

double linear_entropy(double e_p, double g_t) {
  return 3.0 / 8.0 * (3.0 * e_p + g_t);
}

double linear_entropy(const ChordSet& ch) {
  double sum = 0.0;
  for (int i = 0; i < 6; ++i) sum += ch.direct[i] + 2.0 * ch.conjugate[i];
  return sum / 64.0;
}

NonlocalMeasures measures_from_coords(const CartanCoord& c) {
  const ChordSet ch = chords(squared_eigenvalues(c));
  NonlocalMeasures m;
  m.e_p = entangling_power(ch);
  m.g_t = gate_typicality(ch, c);
  m.L = linear_entropy(m.e_p, m.g_t);
  const double l_chord = linear_entropy(ch);
  if (std::abs(l_chord - m.L) > 1e-12) {
    route_mismatch("linear entropy", m.L, l_chord);
  }
  return m;
}

double gate_linear_entropy(const Matrix4cd& u) {
  const std::array<double, 4> s = operator_schmidt_values(u);
  double sum = 0.0;
  for (double v : s) {
    const double lambda = v * v / 4.0;
    sum += lambda * lambda;
  }
  return 1.0 - sum;
}

NonlocalMeasures measures_from_matrix(const Matrix4cd& u) {
  require_unitary(u);
  const Matrix4cd swap = build_nonlocal({M_PI / 2, M_PI / 2, M_PI / 2});

  const double l_u = gate_linear_entropy(u);
  const double l_us = gate_linear_entropy(u * swap);
  const double l_s = gate_linear_entropy(swap);
  const double mirror = l_us - l_s;

  NonlocalMeasures m;
  m.e_p = 4.0 / 9.0 * (l_u + mirror);
  m.g_t = 4.0 / 3.0 * (l_u - mirror);
  m.L = l_u;

  const NonlocalMeasures chord = measures_from_coords(extract_coords(u));
  if (std::abs(chord.e_p - m.e_p) > 1e-9) {
    route_mismatch("entangling power", m.e_p, chord.e_p);
  }
  if (std::abs(chord.g_t - m.g_t) > 1e-9) {
    route_mismatch("gate typicality", m.g_t, chord.g_t);
  }
  if (std::abs(chord.L - m.L) > 1e-9) {
    route_mismatch("linear entropy", m.L, chord.L);
  }
  return m;
}

Vector4cd chord_state(const CartanCoord& c, int j, int k, ChordKind kind,
                      int sign) {
  if (j == k) throw std::invalid_argument("chord state needs j != k");
  if (j < 1 || j > 4 || k < 1 || k > 4) {
    throw std::invalid_argument("chord indices must be in 1..4");
  }
  const EigenPhases h = eigenphases(c);
  const double s = sign >= 0 ? 1.0 : -1.0;
  Vector4cd alpha = Vector4cd::Zero();
  alpha(j - 1) = std::exp(kI * (h[j - 1] / 2.0)) / std::sqrt(2.0);
  const double hk = kind == ChordKind::Direct ? h[k - 1] : -h[k - 1];
  alpha(k - 1) = s * kI * std::exp(kI * (hk / 2.0)) / std::sqrt(2.0);
  return alpha;
}

}  // namespace qchord
