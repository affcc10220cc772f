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

#include "qchord/cartan.hpp"
#include "test_support.hpp"

using namespace qchord;
using namespace qchord::testing;

namespace {
double coord_dist(const CartanCoord& a, const CartanCoord& b) {
  return std::max({std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2),
                   std::abs(a.c3 - b.c3)});
}
}  // namespace

TEST_CASE("eigenphases sum to zero and match the linear map") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const CartanCoord c = random_canonical(rng);
    const EigenPhases h = eigenphases(c);
    CHECK(h[0] + h[1] + h[2] + h[3] == 0.0);
    CHECK(h[0] == doctest::Approx(c.c1 - c.c2 + c.c3).epsilon(1e-12));
    CHECK(h[1] == doctest::Approx(c.c1 + c.c2 - c.c3).epsilon(1e-12));
    CHECK(h[2] == doctest::Approx(-c.c1 - c.c2 - c.c3).epsilon(1e-12));
    // inverse map
    CHECK(c.c1 == doctest::Approx((h[0] + h[1]) / 2).epsilon(1e-12));
    CHECK(c.c2 == doctest::Approx((h[1] + h[3]) / 2).epsilon(1e-12));
    CHECK(c.c3 == doctest::Approx((h[0] + h[3]) / 2).epsilon(1e-12));
  }
}

TEST_CASE("magic basis is unitary with Bell-like columns") {
  const Matrix4cd& m = magic_basis();
  CHECK(is_unitary(m));
  const double r = 1 / std::sqrt(2.0);
  CHECK(std::abs(m(0, 0) - r) < 1e-15);
  CHECK(std::abs(m(3, 0) - r) < 1e-15);
  CHECK(std::abs(m(1, 1) - Complex(0, r)) < 1e-15);
  CHECK(std::abs(m(2, 1) - Complex(0, r)) < 1e-15);
  CHECK(std::abs(m(1, 2) - r) < 1e-15);
  CHECK(std::abs(m(2, 2) + r) < 1e-15);
  CHECK(std::abs(m(0, 3) - Complex(0, r)) < 1e-15);
  CHECK(std::abs(m(3, 3) + Complex(0, r)) < 1e-15);
}

TEST_CASE("nonlocal part is special unitary and diagonal in magic basis") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const CartanCoord c = random_canonical(rng);
    const Matrix4cd u = build_nonlocal(c);
    CHECK(is_unitary(u));
    CHECK(std::abs(u.determinant() - Complex(1, 0)) < 1e-10);
    const Matrix4cd d =
        magic_basis().adjoint() * u * magic_basis();
    const EigenPhases h = eigenphases(c);
    for (int j = 0; j < 4; ++j) {
      CHECK(std::abs(d(j, j) - std::polar(1.0, h[j] / 2)) < 1e-12);
      for (int k = 0; k < 4; ++k) {
        if (j != k) CHECK(std::abs(d(j, k)) < 1e-12);
      }
    }
  }
}

TEST_CASE("known gates build to their standard matrices up to phase") {
  // CNOT in the computational basis, rephased to SU(4).
  Matrix4cd cnot = Matrix4cd::Zero();
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
  const CartanCoord c = extract_coords(cnot);
  CHECK(c.c1 == doctest::Approx(kPi / 2).epsilon(1e-10));
  CHECK(std::abs(c.c2) < 1e-9);
  CHECK(std::abs(c.c3) < 1e-9);

  Matrix4cd swap = Matrix4cd::Zero();
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1;
  const CartanCoord cs = extract_coords(swap);
  CHECK(cs.c1 == doctest::Approx(kPi / 2).epsilon(1e-10));
  CHECK(cs.c2 == doctest::Approx(kPi / 2).epsilon(1e-10));
  CHECK(std::abs(cs.c3) == doctest::Approx(kPi / 2).epsilon(1e-10));

  Matrix4cd iswap = Matrix4cd::Zero();
  iswap(0, 0) = iswap(3, 3) = 1;
  iswap(1, 2) = iswap(2, 1) = Complex(0, 1);
  const CartanCoord ci = extract_coords(iswap);
  CHECK(ci.c1 == doctest::Approx(kPi / 2).epsilon(1e-10));
  CHECK(ci.c2 == doctest::Approx(kPi / 2).epsilon(1e-10));
  CHECK(std::abs(ci.c3) < 1e-9);
}

TEST_CASE("canonicalize is idempotent and respects the symmetry orbit") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const CartanCoord c = random_canonical(rng);
    CHECK(in_weyl_chamber(c));
    CHECK(coord_dist(canonicalize(c), c) < 1e-12);
    // permuting and double sign-flipping leaves the class unchanged
    CHECK(coord_dist(canonicalize(c.c2, c.c1, c.c3), c) < 1e-9);
    CHECK(coord_dist(canonicalize(c.c3, c.c2, c.c1), c) < 1e-9);
    CHECK(coord_dist(canonicalize(-c.c1, -c.c2, c.c3), c) < 1e-9);
    CHECK(coord_dist(canonicalize(c.c1, -c.c2, -c.c3), c) < 1e-9);
    // a pi-shift of a single coordinate is a local operation
    CHECK(coord_dist(canonicalize(c.c1 + kPi, c.c2, c.c3), c) < 1e-9);
    CHECK(coord_dist(canonicalize(c.c1, c.c2, c.c3 - kPi), c) < 1e-9);
  }
}

TEST_CASE("c1 = pi/2 identification folds the c3 sign") {
  const CartanCoord a = canonicalize(kPi / 2, 0.3, 0.2);
  const CartanCoord b = canonicalize(kPi / 2, 0.3, -0.2);
  CHECK(coord_dist(a, b) < 1e-12);
  CHECK(a.c3 >= 0.0);
}

TEST_CASE("coordinate extraction inverts construction") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 100; ++i) {
    const CartanCoord c = random_canonical(rng);
    const CartanCoord r = extract_coords(build_nonlocal(c));
    CHECK(coord_dist(r, c) < 1e-8);
  }
}

TEST_CASE("extraction ignores local factors and global phase") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const CartanCoord c = random_canonical(rng);
    const Matrix4cd u =
        random_local(rng) * build_nonlocal(c) * random_local(rng);
    CHECK(coord_dist(extract_coords(u), c) < 1e-8);
  }
}

TEST_CASE("magic/computational basis conversions are mutually inverse") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 10; ++i) {
    Vector4cd v;
    for (int j = 0; j < 4; ++j) {
      v(j) = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
    }
    v.normalize();
    CHECK((computational_to_magic(magic_to_computational(v)) - v).norm() <
          1e-12);
  }
}
