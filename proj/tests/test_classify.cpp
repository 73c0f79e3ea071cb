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

#include <cmath>

#include "latpoly/classify.hpp"
#include "latpoly/duality.hpp"
#include "oracles.hpp"

using namespace latpoly;
using latpoly::testing::to_vector;

namespace {

const std::vector<Point> kSquare = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
const std::vector<Point> kDiamond = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
const std::vector<Point> kSmallTriangle = {{-1, -1}, {1, 0}, {0, 1}};

ReflexivePolygon reflected(const ReflexivePolygon& m) {
  return apply_unimodular(UnimodularMap(-1, 0, 0, -1), m);
}

// Classes among all convex subsets of the eight non-zero points of
// [-1,1]^2, grouped with are_equivalent.
std::size_t box_one_class_count() {
  std::vector<Point> ring;
  for (Int y = -1; y <= 1; ++y) {
    for (Int x = -1; x <= 1; ++x) {
      if (x != 0 || y != 0) ring.push_back({x, y});
    }
  }
  std::vector<ReflexivePolygon> reps;
  for (unsigned mask = 0; mask < (1u << ring.size()); ++mask) {
    std::vector<Point> subset;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (mask & (1u << i)) subset.push_back(ring[i]);
    }
    if (subset.size() < 3) continue;
    std::sort(subset.begin(), subset.end(), [](Point a, Point b) {
      return std::atan2(double(a.y), double(a.x)) < std::atan2(double(b.y), double(b.x));
    });
    if (latpoly::testing::hull(subset).size() != subset.size()) continue;
    if (latpoly::testing::brute_counts(subset).interior != 1) continue;
    const ReflexivePolygon r = validate_reflexive(subset);
    if (std::none_of(reps.begin(), reps.end(), [&](const auto& q) { return are_equivalent(q, r); })) {
      reps.push_back(r);
    }
  }
  return reps.size();
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("UnimodularMap") {
  CHECK_NOTHROW(UnimodularMap(0, 1, 1, 0));
  try {
    UnimodularMap(2, 0, 0, 1);
    FAIL("accepted determinant 2");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidMap);
  }
  const UnimodularMap f(1, 1, 0, 1, {1, 2});
  const UnimodularMap g(0, -1, 1, 0, {-3, 0});
  const Point p{4, -7};
  CHECK((f * g)(p) == f(g(p)));
}

TEST_CASE("apply_unimodular") {
  const ReflexivePolygon sq = validate_reflexive(kSquare);
  CHECK(apply_unimodular(UnimodularMap::identity(), sq) == sq);

  const ReflexivePolygon diamond = validate_reflexive(kDiamond);
  const ReflexivePolygon sheared = apply_unimodular(UnimodularMap(1, 1, 0, 1), diamond);
  CHECK(to_vector(sheared.vertices()) == std::vector<Point>{{1, 0}, {1, 1}, {-1, 0}, {-1, -1}});
  CHECK(apply_unimodular(UnimodularMap(1, 1, 0, 1, {5, -3}), diamond) == sheared);

  // Orientation-reversing maps come back counterclockwise.
  const ReflexivePolygon swapped = apply_unimodular(UnimodularMap(0, 1, 1, 0),
                                                    validate_reflexive(kSmallTriangle));
  CHECK(to_vector(swapped.vertices()) == std::vector<Point>{{-1, -1}, {1, 0}, {0, 1}});

  for (const auto& cls : enumerate_reflexive(4)) {
    CHECK(verify_twelve(apply_unimodular(UnimodularMap(3, 2, 1, 1, {1, 1}), cls.representative)).sum ==
          12);
  }
}

TEST_CASE("are_equivalent") {
  const ReflexivePolygon sq = validate_reflexive(kSquare);
  const ReflexivePolygon sheared = apply_unimodular(UnimodularMap(1, 2, 0, 1), sq);
  CHECK(are_equivalent(sq, sheared));
  CHECK(are_equivalent(sheared, sq));
  CHECK_FALSE(are_equivalent(sq, validate_reflexive(kDiamond)));
  CHECK(are_equivalent(sq, reflected(sq)));
  for (const auto& cls : enumerate_reflexive(4)) {
    CHECK(are_equivalent(cls.representative, cls.representative));
    CHECK(are_equivalent(cls.representative, reflected(cls.representative)));
  }
  // Same m, m* and area but different shapes.
  const ReflexivePolygon tri = validate_reflexive(std::vector<Point>{{-2, -1}, {1, 0}, {0, 1}});
  const ReflexivePolygon quad = validate_reflexive(std::vector<Point>{{-1, -1}, {0, -1}, {1, 0}, {0, 1}});
  CHECK_FALSE(are_equivalent(tri, quad));
}

TEST_CASE("normal_form") {
  const ReflexivePolygon sq = validate_reflexive(kSquare);
  const ReflexivePolygon nf = normal_form(sq);
  CHECK(normal_form(nf) == nf);
  CHECK(normal_form(apply_unimodular(UnimodularMap(1, 2, 0, 1), sq)) == nf);
  CHECK(normal_form(validate_reflexive(kDiamond)) != nf);
  CHECK(are_equivalent(nf, sq));
}

TEST_CASE("normal_form equality matches are_equivalent on every pair at box 3") {
  const std::vector<ReflexivePolygon> all = enumerate_reflexive_polygons(3);
  REQUIRE(all.size() > 100);
  std::vector<ReflexivePolygon> forms;
  for (const auto& p : all) forms.push_back(normal_form(p));
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      if ((forms[i] == forms[j]) != are_equivalent(all[i], all[j])) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("are_equivalent is transitive on a corpus") {
  std::vector<ReflexivePolygon> corpus;
  for (std::uint64_t seed = 0; seed < 40; ++seed) corpus.push_back(random_reflexive(seed, 6));
  for (const auto& a : corpus) {
    for (const auto& b : corpus) {
      if (!are_equivalent(a, b)) continue;
      for (const auto& c : corpus) {
        if (are_equivalent(b, c)) CHECK(are_equivalent(a, c));
      }
    }
  }
}

TEST_CASE("enumerate_reflexive") {
  SUBCASE("box 1") {
    const auto classes = enumerate_reflexive(1);
    const auto has = [&](const std::vector<Point>& v) {
      const ReflexivePolygon target = validate_reflexive(v);
      return std::any_of(classes.begin(), classes.end(),
                         [&](const auto& c) { return are_equivalent(c.representative, target); });
    };
    CHECK(has(kDiamond));
    CHECK(has(kSquare));
    CHECK(classes.size() == box_one_class_count());
    CHECK(classes.size() == 11);
  }
  SUBCASE("box 4") {
    const auto classes = enumerate_reflexive(4);
    CHECK(classes.size() == 16);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      CHECK(c.m + c.m_star == 12);
      CHECK(normal_form(c.representative) == c.representative);
      CHECK(c.area2 == area2(c.representative.polygon()));
      if (i > 0) CHECK(std::tie(classes[i - 1].m, classes[i - 1].area2) <= std::tie(c.m, c.area2));
      for (std::size_t j = 0; j < i; ++j) {
        CHECK_FALSE(are_equivalent(classes[j].representative, c.representative));
      }
    }
    // m ranges over 3..9 and the largest doubled area is 9.
    CHECK(classes.front().m == 3);
    CHECK(classes.back().m == 9);
    CHECK(classes.back().area2 == 9);
  }
  SUBCASE("too small") {
    CHECK(enumerate_reflexive(0).empty());
  }
}

TEST_CASE("random_reflexive") {
  CHECK(random_reflexive(42, 12) == random_reflexive(42, 12));
  bool escaped_box = false;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ReflexivePolygon p = random_reflexive(seed, 20);
    CHECK(verify_twelve(p).ok);
    for (const Point& v : p.vertices()) {
      if (std::abs(v.x) > 4 || std::abs(v.y) > 4) escaped_box = true;
    }
    const auto& classes = reference_classes();
    const auto source = std::find_if(classes.begin(), classes.end(), [&](const auto& c) {
      return are_equivalent(c.representative, p);
    });
    REQUIRE(source != classes.end());
    CHECK(boundary_count(p.polygon()) == source->m);
    CHECK(verify_twelve(p).m_star == source->m_star);
  }
  CHECK(escaped_box);
}

}  // TEST_SUITE
