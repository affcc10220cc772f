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

#ifndef QCHORD_ORACLE_HPP
#define QCHORD_ORACLE_HPP

#include <cstdint>
#include <random>

#include "qchord/numerics.hpp"

namespace qchord {

struct SampleConfig {
  std::uint64_t sample_count = 1;
  std::uint64_t seed = 0;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Substream generator for sample `index` of stream `seed`: an
/// mt19937_64 seeded with a splitmix64 hash of (seed, index). Serial
/// and parallel evaluation orders draw identical samples.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Uniform draw in [0, 1) from the top 53 bits of the generator.
double uniform01(std::mt19937_64& rng);

/// Standard complex normal (components iid N(0,1)) via Box-Muller.
Complex complex_normal(std::mt19937_64& rng);

/// Haar-random single-qubit state.
Vector2cd haar_qubit_state(std::mt19937_64& rng);

/// Tensor product of two independent Haar-random single-qubit states.
Vector4cd haar_product_state(std::mt19937_64& rng);

/// Haar-distributed SU(4) matrix: QR of a complex Ginibre matrix with
/// the R-diagonal phase correction, then determinant normalization.
Matrix4cd haar_random_su4(std::mt19937_64& rng);

/// Monte Carlo mean of the output-state linear entropy 1 - Tr(rho_A^2)
/// of U applied to Haar-random product states.
Estimate mc_entangling_power(const Matrix4cd& u, const SampleConfig& cfg);

/// Fraction of Haar-random SU(4) draws whose canonical coordinates
/// satisfy the perfect-entangler condition.
Estimate pe_volume_fraction(const SampleConfig& cfg);

/// Perfect-entangler fraction over a uniform Euclidean grid of the
/// canonical chamber with the given step.
double grid_pe_fraction(double step);

}  // namespace qchord

#endif  // QCHORD_ORACLE_HPP
