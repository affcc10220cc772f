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

#include <algorithm>
#include <cmath>

#include "qchord/regions.hpp"
#include "test_support.hpp"

using namespace qchord;
using namespace qchord::testing;

namespace {
bool has_pair(const std::vector<std::pair<int, int>>& v, int j, int k) {
  return std::find(v.begin(), v.end(), std::make_pair(j, k)) != v.end();
}
}  // namespace

TEST_CASE("perfect entangler inequality on reference gates") {
  CHECK(is_perfect_entangler({kPi / 2, 0, 0}));           // CNOT
  CHECK(is_perfect_entangler({kPi / 2, kPi / 2, 0}));     // iSWAP
  CHECK(is_perfect_entangler({kPi / 4, kPi / 4, kPi / 4}));
  CHECK(!is_perfect_entangler({0, 0, 0}));
  CHECK(!is_perfect_entangler({kPi / 2, kPi / 2, kPi / 2}));  // SWAP
  CHECK(!is_perfect_entangler({kPi / 8, kPi / 8, 0}));
}

TEST_CASE("perfect entangler inequality equals zero-in-hull on a dense grid") {
  // > 1e5 canonical points
  const int n = 72;
  const double step = (kPi / 2) / n;
  long long total = 0;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= i; ++j) {
      for (int k = -j; k <= j; ++k) {
        const CartanCoord c{i * step, j * step, k * step};
        ++total;
        const bool pe = is_perfect_entangler(c);
        const bool hull = zero_simplices(squared_eigenvalues(c)).contains_zero();
        REQUIRE(pe == hull);
      }
    }
  }
  CHECK(total >= 100000);
}

TEST_CASE("diametral chords map onto the stated coordinate planes") {
  std::mt19937_64 rng(211);
  const auto expect_plane = [](const CartanCoord& c, int j, int k) {
    const auto d = diametral_chords(c);
    CHECK(has_pair(d, j, k));
  };
  for (int i = 0; i < 200; ++i) {
    expect_plane(plane_diff23(rng), 1, 2);  // c2 - c3 = pi/2
    expect_plane(plane_sum12(rng), 2, 3);   // c1 + c2 = pi/2
    expect_plane(plane_sum23(rng), 3, 4);   // c2 + c3 = pi/2
    expect_plane(plane_sum13(rng), 1, 3);   // c1 + c3 = pi/2
    expect_plane(plane_diff13(rng), 2, 4);  // c1 - c3 = pi/2
  }
  // and conversely: random off-plane points have no diametral chord
  for (int i = 0; i < 200; ++i) {
    for (auto r : {TetRegion::T1, TetRegion::T2, TetRegion::T3}) {
      CHECK(diametral_chords(tet_interior(rng, r)).empty());
    }
  }
}

TEST_CASE("the (1,4) chord is diametral only at the CNOT class") {
  // h1 - h4 = 2(c1 - c2): within the chamber the plane c1 - c2 = pi/2
  // collapses to the single point (pi/2, 0, 0).
  CHECK(has_pair(diametral_chords({kPi / 2, 0, 0}), 1, 4));
  std::mt19937_64 rng(223);
  for (int i = 0; i < 500; ++i) {
    const CartanCoord c = random_canonical(rng);
    if (has_pair(diametral_chords(c), 1, 4)) {
      CHECK(c.c1 == doctest::Approx(kPi / 2).epsilon(1e-9));
      CHECK(std::abs(c.c2) < 1e-6);
      CHECK(std::abs(c.c3) < 1e-6);
    }
  }
}

TEST_CASE("zero-simplex hulls on reference gates") {
  CHECK(zero_simplices(squared_eigenvalues({0, 0, 0})).hull_kind ==
        HullKind::Point);
  CHECK(zero_simplices(squared_eigenvalues({kPi / 2, 0, 0})).hull_kind ==
        HullKind::Segment);
  // triple point at e^{i pi/4} plus its antipode: a diametral segment
  const auto sqswap =
      zero_simplices(squared_eigenvalues({kPi / 4, kPi / 4, kPi / 4}));
  CHECK(sqswap.hull_kind == HullKind::Segment);
  CHECK(sqswap.diametral_pairs.size() == 3);
  CHECK(sqswap.contains_zero());
  // a face-triangle gate doubles one point: three distinct vertices
  const auto face =
      zero_simplices(squared_eigenvalues({3 * kPi / 8, 3 * kPi / 8, kPi / 16}));
  CHECK(face.hull_kind == HullKind::Triangle);
  CHECK(face.contains_zero());
  std::mt19937_64 rng(227);
  const auto quad = zero_simplices(squared_eigenvalues(
      tet_interior(rng, TetRegion::T1)));
  CHECK(quad.hull_kind == HullKind::Quadrilateral);
  CHECK(quad.containing_triangles.size() == 2);
}

TEST_CASE("special class labels") {
  CHECK(classify({kPi / 2, 0, 0}).special == SpecialClass::CNOT);
  CHECK(classify({kPi / 2, kPi / 2, 0}).special == SpecialClass::ISWAP);
  CHECK(classify({kPi / 4, kPi / 4, kPi / 4}).special ==
        SpecialClass::SqrtSWAP);
  CHECK(classify({kPi / 4, kPi / 4, -kPi / 4}).special ==
        SpecialClass::SqrtSWAPDag);
  CHECK(classify({kPi / 2, 0.3, 0}).special == SpecialClass::SPE);
  CHECK(classify({kPi / 2, kPi / 2, kPi / 2}).kind == RegionKind::NonPE);
}

TEST_CASE("stratum classification of sampled loci") {
  std::mt19937_64 rng(229);
  for (int i = 0; i < 100; ++i) {
    CHECK(classify(plane_sum12(rng)).kind == RegionKind::DiametralPlane);
    CHECK(classify(face_c1_eq_c2(rng)).kind == RegionKind::FaceTriangle);
    CHECK(classify(face_c1_eq_c2(rng)).face == Face::C1EqC2);
    CHECK(classify(face_c2_eq_c3(rng)).face == Face::C2EqC3);
    CHECK(classify(face_c2_eq_minus_c3(rng)).face == Face::C2EqMinusC3);
    CHECK(classify(tet_interior(rng, TetRegion::T1)).kind == RegionKind::T1);
    CHECK(classify(tet_interior(rng, TetRegion::T2)).kind == RegionKind::T2);
    CHECK(classify(tet_interior(rng, TetRegion::T3)).kind == RegionKind::T3);
  }
}

TEST_CASE("region label strings") {
  CHECK(region_string(classify({kPi / 2, 0, 0})) == "Special(CNOT)");
  CHECK(region_string(classify({0, 0, 0})) == "NonPE");
}

TEST_CASE("orthogonality residual vanishes on its closure planes") {
  std::mt19937_64 rng(233);
  for (int i = 0; i < 100; ++i) {
    // residual for the first region extends continuously to c3 = 0
    const CartanCoord a = plane_c3_zero(rng);
    const double r1 = std::sin(2 * (a.c2 - a.c3)) * std::sin(2 * (a.c1 - a.c3)) -
                      std::sin(2 * (a.c2 + a.c3)) * std::sin(2 * (a.c1 + a.c3));
    CHECK(std::abs(r1) < 1e-12);
    // and for the others to c1 = pi/2
    const CartanCoord b = plane_c1_half(rng);
    const double r2 = std::sin(2 * (b.c1 - b.c2)) * std::sin(2 * (b.c1 - b.c3)) -
                      std::sin(2 * (b.c1 + b.c2)) * std::sin(2 * (b.c1 + b.c3));
    CHECK(std::abs(r2) < 1e-9);
  }
}

TEST_CASE("orthogonality condition rejects non-tetrahedral input") {
  CHECK_THROWS_AS(orthogonality_condition({kPi / 2, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(orthogonality_condition({0.1, 0.05, 0}),
                  std::invalid_argument);
}

TEST_CASE("orthogonality condition region assignment") {
  std::mt19937_64 rng(239);
  for (int i = 0; i < 50; ++i) {
    CHECK(orthogonality_condition(tet_interior(rng, TetRegion::T1)).region ==
          TetRegion::T1);
    CHECK(orthogonality_condition(tet_interior(rng, TetRegion::T2)).region ==
          TetRegion::T2);
    CHECK(orthogonality_condition(tet_interior(rng, TetRegion::T3)).region ==
          TetRegion::T3);
  }
}
