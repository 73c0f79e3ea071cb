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

#include "latpoly/classify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>

#include "latpoly/duality.hpp"

namespace latpoly {
namespace {

using Cycle = std::vector<Point>;

// Linear part only.
struct Matrix {
  Int a, b, c, d;

  Point operator()(Point p) const {
    return {checked_add(checked_mul(a, p.x), checked_mul(b, p.y)),
            checked_add(checked_mul(c, p.x), checked_mul(d, p.y))};
  }
  Matrix operator*(const Matrix& o) const {
    return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)),
            checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
            checked_add(checked_mul(c, o.a), checked_mul(d, o.c)),
            checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
  }
  Int det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }
};

Cycle image(const Matrix& mat, std::span<const Point> vertices) {
  Cycle out;
  out.reserve(vertices.size());
  for (const Point& v : vertices) out.push_back(mat(v));
  return out;
}

// Counterclockwise, rotated to start at the smallest vertex.
Cycle canonical_rotation(Cycle c) {
  Polygon oriented(std::move(c));
  Cycle out(oriented.vertices().begin(), oriented.vertices().end());
  std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
  return out;
}

// Coefficients (p, q) with p*x + q*y == gcd(x, y) for gcd == 1.
std::pair<Int, Int> bezout(Int x, Int y) {
  Int old_r = x, r = y;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_s, -old_t};
  return {old_s, old_t};
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool upper_half(Point v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

bool angle_less(Point a, Point b) {
  const bool ha = upper_half(a);
  const bool hb = upper_half(b);
  if (ha != hb) return ha;
  return cross(a, b) > 0;
}

// Reflexive polygons around the origin with vertices among `candidates`
// (primitive vectors in angular order). Consecutive vertices u, v must have
// an empty fan triangle O-u-v, which by Pick means cross(u, v) equals the
// number of lattice steps along v - u.
class FanSearch {
 public:
  explicit FanSearch(std::vector<Point> candidates) : pts_(std::move(candidates)) {}

  template <typename Sink>
  void run(Sink&& sink) {
    for (std::size_t s = 0; s < pts_.size(); ++s) {
      path_.assign(1, s);
      extend(sink);
    }
  }

 private:
  bool fan_empty(Point u, Point v) const {
    const Int c = cross(u, v);
    const Point e = v - u;
    return c > 0 && c == gcd_abs(e.x, e.y);
  }

  bool left_turn(Point a, Point b, Point c) const { return area2(a, b, c) > 0; }

  template <typename Sink>
  void extend(Sink& sink) {
    const Point first = pts_[path_.front()];
    const Point last = pts_[path_.back()];
    if (path_.size() >= 3) {
      const Point prev = pts_[path_[path_.size() - 2]];
      const Point second = pts_[path_[1]];
      if (fan_empty(last, first) && left_turn(prev, last, first) &&
          left_turn(last, first, second)) {
        Cycle poly;
        for (std::size_t i : path_) poly.push_back(pts_[i]);
        sink(std::move(poly));
      }
    }
    for (std::size_t j = path_.back() + 1; j < pts_.size(); ++j) {
      const Point next = pts_[j];
      if (!fan_empty(last, next)) continue;
      if (path_.size() >= 2 && !left_turn(pts_[path_[path_.size() - 2]], last, next)) continue;
      path_.push_back(j);
      extend(sink);
      path_.pop_back();
    }
  }

  std::vector<Point> pts_;
  std::vector<std::size_t> path_;
};

}  // namespace

UnimodularMap::UnimodularMap(Int a, Int b, Int c, Int d, Point t)
    : a_(a), b_(b), c_(c), d_(d), t_(t) {
  const Int det = determinant();
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::kInvalidMap,
                "map determinant is " + std::to_string(det) + ", expected +-1");
  }
}

Int UnimodularMap::determinant() const { return Matrix{a_, b_, c_, d_}.det(); }

Point UnimodularMap::operator()(Point p) const {
  return Matrix{a_, b_, c_, d_}(p) + t_;
}

UnimodularMap operator*(const UnimodularMap& f, const UnimodularMap& g) {
  const Matrix fm{f.a_, f.b_, f.c_, f.d_};
  const Matrix m = fm * Matrix{g.a_, g.b_, g.c_, g.d_};
  return UnimodularMap(m.a, m.b, m.c, m.d, fm(g.t_) + f.t_);
}

ReflexivePolygon apply_unimodular(const UnimodularMap& u, const ReflexivePolygon& m) {
  Cycle moved;
  moved.reserve(m.vertices().size());
  for (const Point& v : m.vertices()) moved.push_back(u(v));
  // The origin is carried to the translation vector.
  return ReflexivePolygon::at_origin(Polygon(std::move(moved)).translated(-u.translation()));
}

bool are_equivalent(const ReflexivePolygon& m1, const ReflexivePolygon& m2) {
  const Polygon s1 = m1.strict();
  const Polygon s2 = m2.strict();
  if (s1.size() != s2.size() || boundary_count(s1) != boundary_count(s2) ||
      area2(s1) != area2(s2)) {
    return false;
  }
  const auto n = static_cast<std::ptrdiff_t>(s1.size());
  const Point v0 = s1[0];
  const Point v1 = s1[1];
  const Int det_p = cross(v0, v1);
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    for (const std::ptrdiff_t dir : {1, -1}) {
      const Point w0 = s2.cyclic(j);
      const Point w1 = s2.cyclic(j + dir);
      // M = [w0 w1] * adj([v0 v1]) / det.
      const std::array<Int, 4> num = {
          checked_sub(checked_mul(w0.x, v1.y), checked_mul(w1.x, v0.y)),
          checked_sub(checked_mul(w1.x, v0.x), checked_mul(w0.x, v1.x)),
          checked_sub(checked_mul(w0.y, v1.y), checked_mul(w1.y, v0.y)),
          checked_sub(checked_mul(w1.y, v0.x), checked_mul(w0.y, v1.x)),
      };
      if (std::any_of(num.begin(), num.end(), [&](Int e) { return e % det_p != 0; })) {
        continue;
      }
      const Matrix mat{num[0] / det_p, num[1] / det_p, num[2] / det_p, num[3] / det_p};
      const Int det = mat.det();
      if (det != 1 && det != -1) continue;
      bool match = true;
      for (std::ptrdiff_t k = 0; k < n && match; ++k) {
        match = mat(s1.cyclic(k)) == s2.cyclic(j + dir * k);
      }
      if (match) return true;
    }
  }
  return false;
}

ReflexivePolygon normal_form(const ReflexivePolygon& m) {
  const Polygon s = m.strict();
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  std::optional<Cycle> best;
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    const Point v = s.cyclic(j);
    if (gcd_abs(v.x, v.y) != 1) {
      throw Error(ErrorCode::kInternalInconsistency, "vertex of a reflexive polygon is not primitive");
    }
    const auto [p, q] = bezout(v.x, v.y);
    const Matrix to_axis{p, q, -v.y, v.x};
    for (const std::ptrdiff_t dir : {1, -1}) {
      Matrix mat = to_axis;
      Point w = mat(s.cyclic(j + dir));
      if (w.y < 0) {
        mat = Matrix{1, 0, 0, -1} * mat;
        w = mat(s.cyclic(j + dir));
      }
      const Int shift = -floor_div(w.x, w.y);
      mat = Matrix{1, shift, 0, 1} * mat;
      Cycle candidate = canonical_rotation(image(mat, s.vertices()));
      if (!best || candidate < *best) best = std::move(candidate);
    }
  }
  return ReflexivePolygon::at_origin(Polygon(std::move(*best)));
}

std::vector<ReflexivePolygon> enumerate_reflexive_polygons(Int box) {
  std::set<Cycle> seen;
  std::vector<ReflexivePolygon> out;
  for (Int cy = -box + 1; cy <= box - 1; ++cy) {
    for (Int cx = -box + 1; cx <= box - 1; ++cx) {
      std::vector<Point> candidates;
      for (Int y = -box - cy; y <= box - cy; ++y) {
        for (Int x = -box - cx; x <= box - cx; ++x) {
          if (gcd_abs(x, y) == 1) candidates.push_back({x, y});
        }
      }
      std::sort(candidates.begin(), candidates.end(), angle_less);
      FanSearch(std::move(candidates)).run([&](Cycle poly) {
        Cycle key = canonical_rotation(std::move(poly));
        if (!seen.insert(key).second) return;
        out.push_back(ReflexivePolygon::at_origin(Polygon(std::move(key))));
      });
    }
  }
  return out;
}

std::vector<EquivalenceClass> enumerate_reflexive(Int box) {
  std::map<Cycle, EquivalenceClass> classes;
  for (const ReflexivePolygon& r : enumerate_reflexive_polygons(box)) {
    ReflexivePolygon nf = normal_form(r);
    Cycle key(nf.vertices().begin(), nf.vertices().end());
    if (classes.contains(key)) continue;
    const TwelveReport t = verify_twelve(nf);
    const Int a2 = area2(nf.polygon());
    classes.emplace(std::move(key), EquivalenceClass{std::move(nf), t.m, t.m_star, a2});
  }
  std::vector<EquivalenceClass> out;
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const EquivalenceClass& l, const EquivalenceClass& r) {
    const auto lv = l.representative.vertices();
    const auto rv = r.representative.vertices();
    return std::tie(l.m, l.area2) < std::tie(r.m, r.area2) ||
           (std::tie(l.m, l.area2) == std::tie(r.m, r.area2) &&
            std::lexicographical_compare(lv.begin(), lv.end(), rv.begin(), rv.end()));
  });
  return out;
}

const std::vector<EquivalenceClass>& reference_classes() {
  static const std::vector<EquivalenceClass> classes = enumerate_reflexive(4);
  return classes;
}

ReflexivePolygon random_reflexive(std::uint64_t seed, int steps) {
  static const std::array<UnimodularMap, 6> generators = {
      UnimodularMap(1, 1, 0, 1),  UnimodularMap(1, -1, 0, 1), UnimodularMap(1, 0, 1, 1),
      UnimodularMap(1, 0, -1, 1), UnimodularMap(-1, 0, 0, 1), UnimodularMap(1, 0, 0, -1),
  };
  const auto& classes = reference_classes();
  std::mt19937_64 rng(seed);
  const ReflexivePolygon& source = classes[rng() % classes.size()].representative;
  UnimodularMap u = UnimodularMap::identity();
  for (int i = 0; i < steps; ++i) u = generators[rng() % generators.size()] * u;
  return apply_unimodular(u, source);
}

}  // namespace latpoly
