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

#include "qchord/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qchord/cartan.hpp"
#include "qchord/regions.hpp"

namespace qchord {
namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Serial accumulator; std_error = sample standard deviation / sqrt(N).
class MeanAccumulator {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }

  Estimate estimate() const {
    Estimate e;
    e.mean = mean_;
    if (n_ > 1) {
      const double var = m2_ / static_cast<double>(n_ - 1);
      e.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(n_));
    }
    return e;
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(
      splitmix64(splitmix64(seed) ^ splitmix64(index + 1)));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex complex_normal(std::mt19937_64& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
}

Vector2cd haar_qubit_state(std::mt19937_64& rng) {
  Vector2cd v;
  v(0) = complex_normal(rng);
  v(1) = complex_normal(rng);
  return v / v.norm();
}

Vector4cd haar_product_state(std::mt19937_64& rng) {
  const Vector2cd a = haar_qubit_state(rng);
  const Vector2cd b = haar_qubit_state(rng);
  return kron(a, b);
}

Matrix4cd haar_random_su4(std::mt19937_64& rng) {
  Matrix4cd g;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) g(i, j) = complex_normal(rng);
  }
  const Eigen::HouseholderQR<Matrix4cd> qr(g);
  Matrix4cd q = qr.householderQ();
  const Matrix4cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 4; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q * std::pow(q.determinant(), -0.25);
}

Estimate mc_entangling_power(const Matrix4cd& u, const SampleConfig& cfg) {
  require_unitary(u);
  MeanAccumulator acc;
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
    std::mt19937_64 rng = sample_rng(cfg.seed, i);
    const Vector4cd out = u * haar_product_state(rng);
    acc.add(state_linear_entropy(out));
  }
  return acc.estimate();
}

Estimate pe_volume_fraction(const SampleConfig& cfg) {
  MeanAccumulator acc;
  for (std::uint64_t i = 0; i < cfg.sample_count; ++i) {
    std::mt19937_64 rng = sample_rng(cfg.seed, i);
    const CartanCoord c = extract_coords(haar_random_su4(rng));
    acc.add(is_perfect_entangler(c) ? 1.0 : 0.0);
  }
  return acc.estimate();
}

double grid_pe_fraction(double step) {
  if (step <= 0.0) throw std::invalid_argument("step must be positive");
  const double eps = step * 1e-9;
  std::uint64_t total = 0;
  std::uint64_t pe = 0;
  for (double c1 = 0.0; c1 <= kPi / 2.0 + eps; c1 += step) {
    for (double c2 = 0.0; c2 <= c1 + eps; c2 += step) {
      for (double c3 = -c2; c3 <= c2 + eps; c3 += step) {
        ++total;
        if (is_perfect_entangler({c1, c2, c3})) ++pe;
      }
    }
  }
  return static_cast<double>(pe) / static_cast<double>(total);
}

}  // namespace qchord
