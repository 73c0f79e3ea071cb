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

#include "latpoly/lattice_core.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace latpoly {
namespace {

// Angular order of nonzero vectors, starting at the positive x axis.
bool upper_half(Point v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

bool angle_less(Point a, Point b) {
  const bool ha = upper_half(a);
  const bool hb = upper_half(b);
  if (ha != hb) return ha;
  return cross(a, b) > 0;
}

// Turn test shared by the two convexity predicates. `strict` forbids
// straight angles.
bool convex_cycle(std::span<const Point> v, bool strict) {
  const std::size_t n = v.size();
  if (n < 3) return false;
  std::vector<Point> edges(n);
  for (std::size_t i = 0; i < n; ++i) {
    edges[i] = v[(i + 1) % n] - v[i];
    if (edges[i] == Point{}) return false;
  }
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = edges[i];
    const Point b = edges[(i + 1) % n];
    const Int turn = cross(a, b);
    if (turn < 0) return false;
    if (turn == 0 && (strict || dot(a, b) <= 0)) return false;
    if (angle_less(b, a)) ++wraps;
  }
  return wraps == 1;
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct Box {
  Int xmin, xmax, ymin, ymax;
};

Box bounding_box(const Polygon& p) {
  Box b{p[0].x, p[0].x, p[0].y, p[0].y};
  for (const Point& v : p.vertices()) {
    b.xmin = std::min(b.xmin, v.x);
    b.xmax = std::max(b.xmax, v.x);
    b.ymin = std::min(b.ymin, v.y);
    b.ymax = std::max(b.ymax, v.y);
  }
  return b;
}

// First interior lattice point found by intersecting each row with the open
// polygon. Costs O(height * edges) instead of a full box scan.
std::optional<Point> find_interior_point(const Polygon& p) {
  const Box box = bounding_box(p);
  for (Int y = box.ymin + 1; y < box.ymax; ++y) {
    Int lo = box.xmin;
    Int hi = box.xmax;
    bool empty = false;
    for (std::size_t i = 0; i < p.size() && !empty; ++i) {
      const Point e = p.edge(i);
      const Point v = p[i];
      // Inside iff e.y * (x - v.x) < e.x * (y - v.y).
      const Int r = checked_mul(e.x, checked_sub(y, v.y));
      if (e.y == 0) {
        empty = r <= 0;
      } else if (e.y > 0) {
        hi = std::min(hi, checked_add(v.x, floor_div(checked_sub(r, 1), e.y)));
      } else {
        lo = std::max(lo, checked_add(v.x, floor_div(r, e.y) + 1));
      }
    }
    if (!empty && lo <= hi) return Point{lo, y};
  }
  return std::nullopt;
}

}  // namespace

bool on_segment(Point a, Point b, Point p) {
  if (area2(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw Error(ErrorCode::kTooFewVertices,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw Error(ErrorCode::kRepeatedVertex,
                  "repeated consecutive vertex at index " + std::to_string(i));
    }
  }
  Int twice_area = 0;
  bool collinear = true;
  for (std::size_t i = 0; i < n; ++i) {
    twice_area = checked_add(twice_area, cross(vertices_[i], vertices_[(i + 1) % n]));
    if (area2(vertices_[0], vertices_[1], vertices_[i]) != 0) collinear = false;
  }
  if (collinear) {
    throw Error(ErrorCode::kCollinear, "all vertices are collinear");
  }
  if (twice_area < 0) std::reverse(vertices_.begin() + 1, vertices_.end());
  if (!is_weakly_convex(vertices_)) {
    throw Error(ErrorCode::kNotConvex, "vertex cycle is not convex");
  }
}

const Point& Polygon::cyclic(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Point Polygon::edge(std::size_t i) const {
  return cyclic(static_cast<std::ptrdiff_t>(i) + 1) - vertices_[i];
}

Polygon Polygon::translated(Point offset) const {
  std::vector<Point> moved;
  moved.reserve(vertices_.size());
  for (const Point& v : vertices_) moved.push_back(v + offset);
  return Polygon(std::move(moved));
}

Int area2(const Polygon& p) {
  Int sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum = checked_add(sum, cross(p[i], p.cyclic(static_cast<std::ptrdiff_t>(i) + 1)));
  }
  return sum;
}

Int boundary_count(const Polygon& p) {
  Int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point e = p.edge(i);
    count = checked_add(count, gcd_abs(e.x, e.y));
  }
  return count;
}

Int boundary_count_oracle(const Polygon& p) {
  const Box box = bounding_box(p);
  Int count = 0;
  for (Int y = box.ymin; y <= box.ymax; ++y) {
    for (Int x = box.xmin; x <= box.xmax; ++x) {
      if (on_boundary(p, {x, y})) ++count;
    }
  }
  return count;
}

Int interior_count(const Polygon& p) {
  const Int twice = checked_add(checked_sub(area2(p), boundary_count(p)), 2);
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorCode::kInternalInconsistency,
                "Pick's formula gives a non-integral interior count");
  }
  return twice / 2;
}

Int interior_count_oracle(const Polygon& p) {
  const Box box = bounding_box(p);
  Int count = 0;
  for (Int y = box.ymin; y <= box.ymax; ++y) {
    for (Int x = box.xmin; x <= box.xmax; ++x) {
      if (strictly_inside(p, {x, y})) ++count;
    }
  }
  return count;
}

bool strictly_inside(const Polygon& p, Point q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (cross(p.edge(i), q - p[i]) <= 0) return false;
  }
  return true;
}

bool on_boundary(const Polygon& p, Point q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (on_segment(p[i], p.cyclic(static_cast<std::ptrdiff_t>(i) + 1), q)) return true;
  }
  return false;
}

Polygon subdivide(const Polygon& p) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point e = p.edge(i);
    const Int g = gcd_abs(e.x, e.y);
    const Point step{e.x / g, e.y / g};
    for (Int k = 0; k < g; ++k) out.push_back(p[i] + k * step);
  }
  return Polygon(std::move(out));
}

Polygon strict_form(const Polygon& p) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    if (cross(p[i] - p.cyclic(k - 1), p.cyclic(k + 1) - p[i]) != 0) {
      out.push_back(p[i]);
    }
  }
  if (out.size() < 3) {
    throw Error(ErrorCode::kTooFewVertices,
                "strict form would have fewer than 3 vertices");
  }
  return Polygon(std::move(out));
}

bool is_strictly_convex(std::span<const Point> vertices) {
  return convex_cycle(vertices, true);
}

bool is_weakly_convex(std::span<const Point> vertices) {
  return convex_cycle(vertices, false);
}

ReflexivePolygon ReflexivePolygon::at_origin(Polygon p) {
  const Int interior = interior_count(p);
  if (interior != 1) throw NotReflexiveError(interior);
  if (!strictly_inside(p, Point{})) {
    throw Error(ErrorCode::kNotReflexive,
                "the unique interior lattice point is not the origin");
  }
  return ReflexivePolygon(std::move(p));
}

ReflexivePolygon recenter_reflexive(const Polygon& p) {
  const Int interior = interior_count(p);
  if (interior != 1) throw NotReflexiveError(interior);
  const std::optional<Point> center = find_interior_point(p);
  if (!center) {
    throw Error(ErrorCode::kInternalInconsistency,
                "Pick's formula reports an interior point but none was found");
  }
  return ReflexivePolygon::at_origin(p.translated(-*center));
}

ReflexivePolygon validate_reflexive(const Polygon& p) {
  return recenter_reflexive(strict_form(p));
}

ReflexivePolygon validate_reflexive(std::span<const Point> vertices) {
  return validate_reflexive(Polygon(std::vector<Point>(vertices.begin(), vertices.end())));
}

}  // namespace latpoly
