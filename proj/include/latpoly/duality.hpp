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

#include "latpoly/lattice_core.hpp"

namespace latpoly {

/// The lattice point nearest the origin on the ray through v.
Point primitive_vector(Point v);

struct DualResult {
  Polygon dual;  // strict form, counterclockwise
  Int m = 0;       // boundary points of the source
  Int m_star = 0;  // boundary points of the dual
};

/// Places each edge vector of m at the origin and keeps its primitive part.
/// Straight-angle vertices in the source produce repeated primitive vectors,
/// which are merged, so the result does not depend on the form of m.
DualResult dual_polygon(const ReflexivePolygon& m);

/// The dual as a reflexive polygon; throws if it is not one.
ReflexivePolygon dual_reflexive(const ReflexivePolygon& m);

struct TwelveReport {
  Int m = 0;
  Int m_star = 0;
  Int sum = 0;
  bool ok = false;
};

TwelveReport verify_twelve(const ReflexivePolygon& m);

}  // namespace latpoly
