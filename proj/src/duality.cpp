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

#include "latpoly/duality.hpp"

#include <vector>

namespace latpoly {

Point primitive_vector(Point v) {
  if (v == Point{}) {
    throw Error(ErrorCode::kZeroVector, "primitive vector of the zero vector");
  }
  const Int g = gcd_abs(v.x, v.y);
  return {v.x / g, v.y / g};
}

DualResult dual_polygon(const ReflexivePolygon& m) {
  const Polygon& source = m.polygon();
  std::vector<Point> directions;
  directions.reserve(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    const Point d = primitive_vector(source.edge(i));
    if (directions.empty() || directions.back() != d) directions.push_back(d);
  }
  while (directions.size() > 1 && directions.back() == directions.front()) {
    directions.pop_back();
  }
  Polygon dual = strict_form(Polygon(std::move(directions)));
  const Int m_star = boundary_count(dual);
  return DualResult{std::move(dual), boundary_count(source), m_star};
}

ReflexivePolygon dual_reflexive(const ReflexivePolygon& m) {
  return ReflexivePolygon::at_origin(dual_polygon(m).dual);
}

TwelveReport verify_twelve(const ReflexivePolygon& m) {
  const DualResult d = dual_polygon(m);
  const Int sum = checked_add(d.m, d.m_star);
  return TwelveReport{d.m, d.m_star, sum, sum == 12};
}

}  // namespace latpoly
