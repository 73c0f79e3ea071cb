// Copyright 2026 The latpoly Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <array>
#include <random>

#include "latpoly/classify.hpp"
#include "latpoly/lattice_core.hpp"
#include "oracles.hpp"

using namespace latpoly;
using latpoly::testing::brute_counts;
using latpoly::testing::fan_area2;
using latpoly::testing::to_vector;

namespace {

const std::vector<Point> kUnitTriangle = {{0, 0}, {1, 0}, {0, 1}};
const std::vector<Point> kSquare = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
const std::vector<Point> kDiamond = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
const std::vector<Point> kBigTriangle = {{-1, -1}, {2, -1}, {-1, 2}};

ErrorCode code_of(const std::vector<Point>& v) {
  try {
    Polygon p(v);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParse;
}

}  // namespace

TEST_SUITE("lattice_core") {

TEST_CASE("area2") {
  CHECK(area2(Polygon(kUnitTriangle)) == 1);
  CHECK(area2(Polygon(kSquare)) == 8);
  CHECK(area2(Polygon(kBigTriangle)) == 9);
  for (const auto& v : {kUnitTriangle, kSquare, kBigTriangle, kDiamond}) {
    CHECK(area2(Polygon(v)) == fan_area2(v));
  }
}

TEST_CASE("area2 traps overflow") {
  const Int big = 4'000'000'000'000'000'000;
  try {
    area2(Polygon({{0, 0}, {big, 0}, {0, big}}));
    FAIL("no overflow raised");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOverflow);
  }
}

TEST_CASE("boundary and interior counts") {
  SUBCASE("gcd formula") {
    CHECK(boundary_count(Polygon(kSquare)) == 8);
    CHECK(boundary_count(Polygon(kDiamond)) == 4);
    CHECK(boundary_count(Polygon(kBigTriangle)) == 9);
  }
  SUBCASE("scan oracle") {
    CHECK(boundary_count_oracle(Polygon(kSquare)) == 8);
    CHECK(boundary_count_oracle(Polygon(kUnitTriangle)) == 3);
    CHECK(boundary_count_oracle(Polygon(kDiamond)) == 4);
  }
  SUBCASE("Pick") {
    CHECK(interior_count(Polygon(kSquare)) == 1);
    CHECK(interior_count(Polygon(kUnitTriangle)) == 0);
    CHECK(interior_count(Polygon(kBigTriangle)) == 1);
  }
  SUBCASE("interior scan oracle") {
    CHECK(interior_count_oracle(Polygon(kSquare)) == 1);
    CHECK(interior_count_oracle(Polygon(kDiamond)) == 1);
    CHECK(interior_count_oracle(Polygon(kUnitTriangle)) == 0);
  }
  SUBCASE("independent brute force agrees") {
    for (const auto& v : {kUnitTriangle, kSquare, kBigTriangle, kDiamond}) {
      const auto c = brute_counts(v);
      CHECK(boundary_count(Polygon(v)) == c.boundary);
      CHECK(interior_count(Polygon(v)) == c.interior);
    }
  }
}

TEST_CASE("subdivide and strict_form") {
  const Polygon sub = subdivide(Polygon(kSquare));
  REQUIRE(sub.size() == 8);
  const auto v = to_vector(sub.vertices());
  for (const Point p : {Point{0, 1}, Point{0, -1}, Point{1, 0}, Point{-1, 0}}) {
    CHECK(std::find(v.begin(), v.end(), p) != v.end());
  }
  CHECK(sub[0] == Point{1, 1});
  CHECK(sub[1] == Point{0, 1});

  CHECK(subdivide(Polygon(kDiamond)) == Polygon(kDiamond));
  CHECK(subdivide(Polygon(kBigTriangle)).size() == 9);

  CHECK(strict_form(sub) == Polygon(kSquare));
  CHECK(strict_form(Polygon(kDiamond)) == Polygon(kDiamond));
  // B, C, D collinear with C in the middle.
  CHECK(strict_form(Polygon({{0, 0}, {2, 0}, {2, 1}, {2, 2}})) ==
        Polygon({{0, 0}, {2, 0}, {2, 2}}));
}

TEST_CASE("is_strictly_convex") {
  CHECK(is_strictly_convex(kDiamond));
  CHECK_FALSE(is_strictly_convex(subdivide(Polygon(kSquare)).vertices()));
  CHECK_FALSE(is_strictly_convex(std::vector<Point>{{0, 0}, {1, 1}, {1, 0}, {0, 1}}));
  // Clockwise input is not counterclockwise-convex.
  CHECK_FALSE(is_strictly_convex(std::vector<Point>{{0, 0}, {0, 1}, {1, 0}}));
  // A pentagram turns left everywhere but winds twice.
  CHECK_FALSE(is_strictly_convex(std::vector<Point>{{2, 0}, {-1, 1}, {1, -2}, {1, 2}, {-1, -1}}));
}

TEST_CASE("polygon construction errors have distinct codes") {
  CHECK(code_of({{0, 0}, {1, 0}}) == ErrorCode::kTooFewVertices);
  CHECK(code_of({{0, 0}, {1, 0}, {1, 0}, {0, 1}}) == ErrorCode::kRepeatedVertex);
  CHECK(code_of({{0, 0}, {1, 0}, {0, 1}, {0, 0}}) == ErrorCode::kRepeatedVertex);
  CHECK(code_of({{0, 0}, {1, 1}, {2, 2}}) == ErrorCode::kCollinear);
  CHECK(code_of({{0, 0}, {1, 1}, {1, 0}, {0, 1}}) == ErrorCode::kNotConvex);
  CHECK(code_of({{0, 0}, {2, 0}, {1, 0}, {1, 1}}) == ErrorCode::kNotConvex);
  CHECK(code_of({{2, 0}, {-1, 1}, {1, -2}, {1, 2}, {-1, -1}}) == ErrorCode::kNotConvex);
}

TEST_CASE("clockwise input is reversed keeping the first vertex") {
  const Polygon p({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}});
  CHECK(to_vector(p.vertices()) == kSquare);
}

TEST_CASE("validate_reflexive") {
  SUBCASE("square already centred") {
    const ReflexivePolygon r = validate_reflexive(kSquare);
    CHECK(to_vector(r.vertices()) == kSquare);
    CHECK(boundary_count(r.polygon()) == 8);
    CHECK(strictly_inside(r.polygon(), {0, 0}));
  }
  SUBCASE("square is moved by (-1,-1)") {
    const ReflexivePolygon r = validate_reflexive(std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(to_vector(r.vertices()) == std::vector<Point>{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  }
  SUBCASE("straight angles are stripped") {
    const ReflexivePolygon r = validate_reflexive(subdivide(Polygon(kSquare)).vertices());
    CHECK(r.polygon() == Polygon(kSquare));
  }
  SUBCASE("side three square has four interior points") {
    try {
      validate_reflexive(std::vector<Point>{{0, 0}, {3, 0}, {3, 3}, {0, 3}});
      FAIL("accepted a non-reflexive polygon");
    } catch (const NotReflexiveError& e) {
      CHECK(e.interior_points() == 4);
      CHECK(e.code() == ErrorCode::kNotReflexive);
    }
  }
  SUBCASE("non-convex input") {
    CHECK_THROWS_AS(validate_reflexive(std::vector<Point>{{0, 0}, {1, 1}, {1, 0}, {0, 1}}), Error);
  }
  SUBCASE("at_origin rejects an off-centre polygon") {
    try {
      ReflexivePolygon::at_origin(Polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotReflexive);
    }
  }
}

TEST_CASE("property: counts agree with oracles on random convex polygons") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 400; ++trial) {
    const std::vector<Point> v = latpoly::testing::random_convex(rng, 6);
    const Polygon p(v);
    const auto brute = brute_counts(v);
    REQUIRE(boundary_count(p) == brute.boundary);
    REQUIRE(boundary_count_oracle(p) == brute.boundary);
    REQUIRE(interior_count(p) == brute.interior);
    REQUIRE(interior_count_oracle(p) == brute.interior);
    REQUIRE(area2(p) == fan_area2(v));

    const Polygon sub = subdivide(p);
    REQUIRE(static_cast<Int>(sub.size()) == boundary_count(sub));
    REQUIRE(strict_form(sub) == p);
    REQUIRE(subdivide(strict_form(sub)) == sub);

    const Point shift{static_cast<Int>(rng() % 11) - 5, static_cast<Int>(rng() % 11) - 5};
    const Polygon moved = p.translated(shift);
    REQUIRE(area2(moved) == area2(p));
    REQUIRE(boundary_count(moved) == boundary_count(p));
    REQUIRE(interior_count(moved) == interior_count(p));
  }
}

TEST_CASE("property: counts are unimodular invariants") {
  const std::array<UnimodularMap, 4> generators = {
      UnimodularMap(1, 1, 0, 1), UnimodularMap(1, 0, -1, 1), UnimodularMap(0, 1, 1, 0),
      UnimodularMap(-1, 0, 0, 1)};
  std::mt19937_64 rng(7);
  for (const auto& cls : enumerate_reflexive(2)) {
    const Polygon& p = cls.representative.polygon();
    for (int k = 0; k < 10; ++k) {
      UnimodularMap u(1, 0, 0, 1, {static_cast<Int>(rng() % 7) - 3, static_cast<Int>(rng() % 7) - 3});
      for (int s = 0; s < 6; ++s) u = generators[rng() % generators.size()] * u;
      const ReflexivePolygon mapped = apply_unimodular(u, cls.representative);
      REQUIRE(area2(mapped.polygon()) == area2(p));
      REQUIRE(boundary_count(mapped.polygon()) == boundary_count(p));
      REQUIRE(interior_count(mapped.polygon()) == 1);
      const auto brute = brute_counts(to_vector(mapped.vertices()));
      REQUIRE(brute.boundary == boundary_count(p));
      REQUIRE(brute.interior == 1);
    }
  }
}

}  // TEST_SUITE
