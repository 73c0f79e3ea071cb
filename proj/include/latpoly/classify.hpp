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

#pragma once

#include <cstdint>
#include <vector>

#include "latpoly/lattice_core.hpp"

namespace latpoly {

/// x -> [[a, b], [c, d]] x + t with determinant +-1.
class UnimodularMap {
 public:
  /// Throws kInvalidMap unless a*d - b*c is +1 or -1.
  UnimodularMap(Int a, Int b, Int c, Int d, Point t = {});

  static UnimodularMap identity() { return {1, 0, 0, 1}; }

  Int a() const { return a_; }
  Int b() const { return b_; }
  Int c() const { return c_; }
  Int d() const { return d_; }
  Point translation() const { return t_; }
  Int determinant() const;

  Point operator()(Point p) const;

  /// (f * g)(p) == f(g(p)).
  friend UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g);

 private:
  Int a_, b_, c_, d_;
  Point t_;
};

/// Image of m, moved back so the interior point is the origin and oriented
/// counterclockwise. Keeps the form (strict or subdivided) of m.
ReflexivePolygon apply_unimodular(const UnimodularMap& u, const ReflexivePolygon& m);

/// Solves for a linear map taking a fixed adjacent vertex pair of m1 onto
/// each adjacent pair of m2 and checks the whole cycle.
bool are_equivalent(const ReflexivePolygon& m1, const ReflexivePolygon& m2);

/// Canonical representative of the unimodular class of m (strict form).
///
/// For every vertex v and direction s, the unique unimodular map sending v
/// to (1,0) and the neighbour in direction s to (x, y) with 0 <= x < y is
/// applied; the image cycle is rotated to start at its lexicographically
/// smallest vertex and the smallest such list wins.
ReflexivePolygon normal_form(const ReflexivePolygon& m);

struct EquivalenceClass {
  ReflexivePolygon representative;
  Int m = 0;
  Int m_star = 0;
  Int area2 = 0;
};

/// Every distinct origin-centred reflexive polygon (strict form, rotated to
/// start at its smallest vertex) that has a translate with all vertices in
/// [-box, box]^2.
std::vector<ReflexivePolygon> enumerate_reflexive_polygons(Int box);

/// All unimodular classes of reflexive polygons having a representative
/// with every vertex in [-box, box]^2 (any position of the interior point),
/// sorted by (m, area2, representative vertices).
std::vector<EquivalenceClass> enumerate_reflexive(Int box);

/// A random unimodular image of one of the classes found at box 4: `steps`
/// elementary shears and sign flips drawn from std::mt19937_64 seeded with
/// `seed`. Deterministic for a given (seed, steps).
ReflexivePolygon random_reflexive(std::uint64_t seed, int steps);

/// The cached box-4 census used by random_reflexive.
const std::vector<EquivalenceClass>& reference_classes();

}  // namespace latpoly
