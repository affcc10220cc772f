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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qchord/states.hpp"
#include "test_support.hpp"

using namespace qchord;
using namespace qchord::testing;

namespace {

void check_full_pair(const CartanCoord& c, const ProductStatePair& pair) {
  const PairVerification v = verify_pair(c, pair);
  CHECK(v.in_concurrence1 < 1e-9);
  CHECK(v.in_concurrence2 < 1e-9);
  CHECK(v.out_concurrence1 > 1 - 1e-9);
  CHECK(v.out_concurrence2 > 1 - 1e-9);
  CHECK(std::abs(v.overlap) < 1e-9);
  CHECK(v.pass());
}

}  // namespace

TEST_CASE("concurrence in the magic basis") {
  MagicState bell = MagicState::Zero();
  bell(0) = 1;  // a magic basis vector is maximally entangled
  CHECK(concurrence_magic(bell) == doctest::Approx(1.0).epsilon(1e-12));

  // |00> is a product state
  const MagicState prod = computational_to_magic(Vector4cd::Unit(0));
  CHECK(std::abs(concurrence_magic(prod)) < 1e-12);
}

TEST_CASE("barycentric weights reproduce the origin") {
  std::mt19937_64 rng(301);
  for (int i = 0; i < 100; ++i) {
    const CartanCoord c = tet_interior(rng, TetRegion::T1);
    const Vector4cd z = squared_eigenvalues(c);
    const auto rep = zero_simplices(z);
    REQUIRE(rep.containing_triangles.size() == 2);
    for (const auto& tri : rep.containing_triangles) {
      const BarycentricWeights w = barycentric_weights(z, tri);
      Complex sum = 0;
      double total = 0;
      for (const auto& [idx, weight] : w.weights) {
        CHECK(weight >= -1e-12);
        sum += weight * z(idx - 1);
        total += weight;
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(std::abs(sum) < 1e-10);
    }
  }
}

TEST_CASE("barycentric weights reject triangles missing the origin") {
  const Vector4cd z = squared_eigenvalues({kPi / 8, kPi / 16, 0});
  CHECK_THROWS_AS(barycentric_weights(z, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("pair counts at the reference gates") {
  CHECK(construct_pairs({kPi / 4, kPi / 4, kPi / 4}).size() == 3);
  CHECK(construct_pairs({kPi / 2, 0, 0}).size() == 4);
  CHECK(construct_pairs({kPi / 2, kPi / 2, 0}).size() == 4);
}

TEST_CASE("construction refuses non-perfect entanglers") {
  CHECK_THROWS_AS(construct_pairs({0.1, 0.05, 0}), std::invalid_argument);
  CHECK_THROWS_AS(construct_pairs({kPi / 2, kPi / 2, kPi / 2}),
                  std::invalid_argument);
}

TEST_CASE("diametral construction on every plane stratum") {
  std::mt19937_64 rng(307);
  using Sampler = CartanCoord (*)(std::mt19937_64&);
  const Sampler samplers[] = {plane_sum12, plane_sum23, plane_diff23,
                              plane_sum13, plane_diff13};
  for (Sampler s : samplers) {
    for (int i = 0; i < 100; ++i) {
      const CartanCoord c = s(rng);
      const auto pairs = construct_pairs(c);
      REQUIRE(!pairs.empty());
      for (const auto& pair : pairs) {
        CHECK(pair.kind == PairKind::Diametral);
        CHECK(pair.orthogonal);
        check_full_pair(c, pair);
      }
    }
  }
}

TEST_CASE("face construction on the three chamber faces") {
  std::mt19937_64 rng(311);
  using Sampler = CartanCoord (*)(std::mt19937_64&);
  const Sampler samplers[] = {face_c1_eq_c2, face_c2_eq_c3,
                              face_c2_eq_minus_c3};
  for (Sampler s : samplers) {
    for (int i = 0; i < 100; ++i) {
      const CartanCoord c = s(rng);
      const auto pairs = construct_pairs(c);
      REQUIRE(pairs.size() == 1);
      CHECK(pairs[0].kind == PairKind::Face);
      CHECK(pairs[0].p.has_value());
      CHECK(std::abs(*pairs[0].p) <= 1.0 + 1e-12);
      check_full_pair(c, pairs[0]);
    }
  }
}

TEST_CASE("face mixing parameter at a reference point") {
  const auto pairs = construct_pairs({3 * kPi / 8, 3 * kPi / 8, kPi / 16});
  REQUIRE(pairs.size() == 1);
  REQUIRE(pairs[0].p.has_value());
  CHECK(*pairs[0].p == doctest::Approx(-0.5412).epsilon(1e-3));
}

TEST_CASE("quadrilateral construction is orthogonal on the c3=0 plane") {
  std::mt19937_64 rng(313);
  for (int i = 0; i < 100; ++i) {
    const CartanCoord c = plane_c3_zero(rng);
    const auto pairs = construct_pairs(c);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].kind == PairKind::Quadrilateral);
    check_full_pair(c, pairs[0]);
  }
}

TEST_CASE("quadrilateral construction is orthogonal on the c1=pi/2 plane") {
  std::mt19937_64 rng(317);
  for (int i = 0; i < 100; ++i) {
    const CartanCoord c = plane_c1_half(rng);
    const auto pairs = construct_pairs(c);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].kind == PairKind::Quadrilateral);
    check_full_pair(c, pairs[0]);
  }
}

TEST_CASE("tetrahedral gates reach maximal output entanglement") {
  std::mt19937_64 rng(331);
  for (auto region : {TetRegion::T1, TetRegion::T2, TetRegion::T3}) {
    for (int i = 0; i < 100; ++i) {
      const CartanCoord c = tet_interior(rng, region);
      const auto pairs = construct_pairs(c);
      REQUIRE(pairs.size() == 1);
      const auto& pair = pairs[0];
      CHECK(pair.kind == PairKind::Quadrilateral);
      const PairVerification v = verify_pair(c, pair);
      CHECK(v.in_concurrence1 < 1e-9);
      CHECK(v.in_concurrence2 < 1e-9);
      CHECK(v.out_concurrence1 > 1 - 1e-9);
      CHECK(v.out_concurrence2 > 1 - 1e-9);
      // the orthogonality flag must agree with the residual condition
      const OrthogonalityReport rep = orthogonality_condition(c);
      CHECK(pair.orthogonal == rep.satisfied);
      if (std::abs(pair.overlap) <= 1e-9) CHECK(rep.satisfied);
    }
  }
}

TEST_CASE("verification catches corrupted pairs") {
  const CartanCoord c{kPi / 2, 0, 0};
  auto pairs = construct_pairs(c);
  REQUIRE(!pairs.empty());
  auto bad = pairs[0];
  bad.phi1(0) *= Complex(0, 1);  // rotate one amplitude: no longer product
  const PairVerification v = verify_pair(c, bad);
  CHECK(!v.pass());
}
