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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latpoly/lattice_core.hpp"

namespace latpoly {

/// |area2| == 1: no lattice points besides the three vertices.
bool is_simple_triangle(Point a, Point b, Point c);

enum class OpKind { kRemove, kInsert };

/// One ear removal or insertion. `index` is the position of `point` in the
/// subdivided cycle: before the removal for kRemove, after the insertion
/// for kInsert.
struct ElementaryOp {
  OpKind kind = OpKind::kRemove;
  std::size_t index = 0;
  Point point;

  friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

enum class EarStatus {
  kRemovable,
  kNotSimple,         // (V[i-1], V[i], V[i+1]) is not a simple ccw triangle
  kTooFewVertices,    // fewer than 3 non-collinear vertices would remain
  kNotConvex,
  kOriginNotInterior, // origin would leave the interior
};

std::string_view to_string(EarStatus status);

/// Classifies vertex i of m.subdivided() as an ear. Throws kIndexOutOfRange.
EarStatus ear_status(const ReflexivePolygon& m, std::size_t i);

bool ear_removable(const ReflexivePolygon& m, std::size_t i);

/// Removes vertex i of m.subdivided(). The result is in subdivided form.
ReflexivePolygon remove_ear(const ReflexivePolygon& m, std::size_t i);

/// Inserts p so that it becomes vertex i of the subdivided cycle, i.e.
/// between V[i-1] and V[i] of m.subdivided(); i may equal the vertex count.
/// remove_ear and insert_vertex with the same index are mutual inverses.
ReflexivePolygon insert_vertex(const ReflexivePolygon& m, std::size_t i, Point p);

/// Effect of one ear removal on the dual polygon.
///
/// With A1, A2, A3 the ear (A2 removed), An before A1 and A4 after A3, and
/// Akl the point with O->Akl equal to Ak->Al: the dual loses A12 and A23,
/// gains A13, and the old vertices must lie on the new edges
/// [An1, A13] and [A13, A34].
struct DualTransitionReport {
  Int m_before = 0;
  Int m_after = 0;
  Int m_star_before = 0;
  Int m_star_after = 0;
  std::array<Point, 3> added_dual_triangle{};  // A12, A13, A23
  bool collinearity_ok = false;
  bool simple_ok = false;
  // Triangles A1-O-A3, A2-O-A3, A4-O-A3 all have area 1/2.
  bool fan_simple_ok = false;

  bool ok() const;
};

DualTransitionReport check_dual_transition(const ReflexivePolygon& m, std::size_t i);

/// Smallest removable index in m.subdivided(). When there is none, checks
/// that no diagonal avoids the origin and throws kProofContractViolation if
/// one does.
std::optional<std::size_t> find_removable_ear(const ReflexivePolygon& m);

/// How the reduction finished once no ear was removable.
enum class TerminalCase {
  kParallelogram,  // four boundary points, diagonals meet at the origin
  kStraightAngle,  // four boundary points, one 180 degree vertex
  kTriangle,       // three boundary points
};

char to_letter(TerminalCase c);

struct TraceStep {
  ElementaryOp op;
  Int m_after = 0;
  Int m_star_after = 0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ReductionTrace {
  ReflexivePolygon initial;
  TerminalCase terminal = TerminalCase::kParallelogram;
  std::vector<TraceStep> steps;
  ReflexivePolygon final_polygon;

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Strict quadrilateral, four boundary points, opposite edges antiparallel
/// and equal, diagonals bisecting each other at the origin.
bool is_centered_parallelogram(const Polygon& p);

/// Greedy ear removal followed by the fixed insertion/removal series for
/// the terminal shape. Every step is checked to keep m + m* == 12.
ReductionTrace reduce_to_parallelogram(const ReflexivePolygon& m);

struct ReplayReport {
  bool consistent = false;
  std::size_t steps_checked = 0;
  std::string message;
};

/// Re-executes a trace using only lattice_core primitives and the
/// box-scanning oracles, comparing every recorded count.
ReplayReport replay_trace(const ReductionTrace& trace);

}  // namespace latpoly
