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

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "latpoly/checked.hpp"

namespace latpoly {

/// A point of Z^2. Also used for lattice vectors (edge vectors, directions).
struct Point {
  Int x = 0;
  Int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) {
  return {checked_add(a.x, b.x), checked_add(a.y, b.y)};
}
inline Point operator-(Point a, Point b) {
  return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
}
inline Point operator-(Point a) { return {checked_neg(a.x), checked_neg(a.y)}; }
inline Point operator*(Int k, Point a) {
  return {checked_mul(k, a.x), checked_mul(k, a.y)};
}

inline Int cross(Point a, Point b) {
  return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
}
inline Int dot(Point a, Point b) {
  return checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y));
}

/// Twice the signed area of triangle abc; positive when counterclockwise.
inline Int area2(Point a, Point b, Point c) { return cross(b - a, c - a); }

/// True iff p lies on the closed segment [a, b].
bool on_segment(Point a, Point b, Point p);

/// A convex lattice polygon stored as a counterclockwise vertex cycle.
///
/// Straight (180 degree) vertices are allowed, so both the strict form and
/// the subdivided form are representable. The constructor rejects fewer
/// than three vertices, repeated consecutive vertices, all-collinear input
/// and non-convex cycles; clockwise input is reversed in place (keeping the
/// first vertex first), never reordered otherwise.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  /// Vertex with cyclic indexing; negative indices wrap.
  const Point& cyclic(std::ptrdiff_t i) const;

  /// Edge vector from vertex i to vertex i+1 (cyclic).
  Point edge(std::size_t i) const;

  Polygon translated(Point offset) const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> vertices_;
};

Int area2(const Polygon& p);

/// Lattice points on the boundary, by the gcd-per-edge formula.
Int boundary_count(const Polygon& p);

/// Same quantity as boundary_count, by scanning the bounding box.
Int boundary_count_oracle(const Polygon& p);

/// Interior lattice points via Pick's formula.
Int interior_count(const Polygon& p);

/// Interior lattice points by scanning the bounding box.
Int interior_count_oracle(const Polygon& p);

bool strictly_inside(const Polygon& p, Point q);
bool on_boundary(const Polygon& p, Point q);

/// Every boundary lattice point becomes a vertex.
Polygon subdivide(const Polygon& p);

/// Drops every straight-angle vertex.
Polygon strict_form(const Polygon& p);

bool is_strictly_convex(std::span<const Point> vertices);

/// Counterclockwise, every turn >= 0, no backtracking, winding number one.
bool is_weakly_convex(std::span<const Point> vertices);

/// A convex lattice polygon whose only interior lattice point is the origin.
///
/// The stored vertex list keeps whichever form it was built from:
/// validate_reflexive produces the strict form, while the elementary
/// operations in reduction.hpp produce the subdivided form.
class ReflexivePolygon {
 public:
  /// Checks the invariant without moving anything. Throws NotReflexiveError
  /// when the interior count is not one and kNotReflexive when the single
  /// interior point is not the origin.
  static ReflexivePolygon at_origin(Polygon p);

  const Polygon& polygon() const { return polygon_; }
  std::span<const Point> vertices() const { return polygon_.vertices(); }

  Polygon strict() const { return strict_form(polygon_); }
  Polygon subdivided() const { return subdivide(polygon_); }

  friend bool operator==(const ReflexivePolygon&,
                         const ReflexivePolygon&) = default;

 private:
  explicit ReflexivePolygon(Polygon p) : polygon_(std::move(p)) {}

  Polygon polygon_;
};

/// Validates a vertex list, moves the unique interior lattice point to the
/// origin and returns the strict form.
ReflexivePolygon validate_reflexive(std::span<const Point> vertices);
ReflexivePolygon validate_reflexive(const Polygon& p);

/// Same as validate_reflexive but keeps straight-angle vertices.
ReflexivePolygon recenter_reflexive(const Polygon& p);

}  // namespace latpoly
