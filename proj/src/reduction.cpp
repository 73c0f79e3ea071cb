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

#include "latpoly/reduction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "latpoly/duality.hpp"

namespace latpoly {
namespace {

using Cycle = std::vector<Point>;

Cycle subdivided_cycle(const ReflexivePolygon& m) {
  const Polygon s = m.subdivided();
  return Cycle(s.vertices().begin(), s.vertices().end());
}

const Point& at(const Cycle& c, std::ptrdiff_t i) {
  const auto n = static_cast<std::ptrdiff_t>(c.size());
  return c[static_cast<std::size_t>(((i % n) + n) % n)];
}

bool all_collinear(const Cycle& c) {
  for (const Point& p : c) {
    if (area2(c[0], c[1], p) != 0) return false;
  }
  return true;
}

Error invalid_op(const std::string& what) {
  return Error(ErrorCode::kInvalidOperation, what);
}

Error contract_violation(const std::string& what) {
  return Error(ErrorCode::kProofContractViolation, what);
}

std::string show(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

bool is_simple_triangle(Point a, Point b, Point c) {
  return checked_abs(area2(a, b, c)) == 1;
}

std::string_view to_string(EarStatus status) {
  switch (status) {
    case EarStatus::kRemovable: return "removable";
    case EarStatus::kNotSimple: return "ear triangle is not simple";
    case EarStatus::kTooFewVertices: return "fewer than 3 non-collinear vertices would remain";
    case EarStatus::kNotConvex: return "result would not be convex";
    case EarStatus::kOriginNotInterior: return "origin would not stay strictly interior";
  }
  return "unknown";
}

EarStatus ear_status(const ReflexivePolygon& m, std::size_t i) {
  Cycle c = subdivided_cycle(m);
  if (i >= c.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "ear index " + std::to_string(i) + " out of range for " +
                    std::to_string(c.size()) + " vertices");
  }
  const auto k = static_cast<std::ptrdiff_t>(i);
  if (area2(at(c, k - 1), c[i], at(c, k + 1)) != 1) return EarStatus::kNotSimple;
  c.erase(c.begin() + k);
  if (c.size() < 3 || all_collinear(c)) return EarStatus::kTooFewVertices;
  if (!is_weakly_convex(c)) return EarStatus::kNotConvex;
  if (!strictly_inside(Polygon(std::move(c)), Point{})) {
    return EarStatus::kOriginNotInterior;
  }
  return EarStatus::kRemovable;
}

bool ear_removable(const ReflexivePolygon& m, std::size_t i) {
  return ear_status(m, i) == EarStatus::kRemovable;
}

ReflexivePolygon remove_ear(const ReflexivePolygon& m, std::size_t i) {
  const EarStatus status = ear_status(m, i);
  if (status != EarStatus::kRemovable) {
    throw invalid_op("cannot remove vertex " + std::to_string(i) + ": " +
                     std::string(to_string(status)));
  }
  Cycle c = subdivided_cycle(m);
  c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
  return ReflexivePolygon::at_origin(Polygon(std::move(c)));
}

ReflexivePolygon insert_vertex(const ReflexivePolygon& m, std::size_t i, Point p) {
  Cycle c = subdivided_cycle(m);
  if (i > c.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "insert position " + std::to_string(i) + " out of range for " +
                    std::to_string(c.size()) + " vertices");
  }
  if (on_boundary(m.polygon(), p) || strictly_inside(m.polygon(), p)) {
    throw invalid_op("cannot insert " + show(p) + ": point is not outside the polygon");
  }
  const auto k = static_cast<std::ptrdiff_t>(i);
  const Point prev = at(c, k - 1);
  const Point next = at(c, k);
  if (area2(prev, p, next) != 1) {
    throw invalid_op("cannot insert " + show(p) + ": triangle " + show(prev) + " " +
                     show(p) + " " + show(next) + " is not simple");
  }
  c.insert(c.begin() + k, p);
  if (!is_weakly_convex(c)) {
    throw invalid_op("cannot insert " + show(p) + ": result would not be convex");
  }
  try {
    return ReflexivePolygon::at_origin(Polygon(std::move(c)));
  } catch (const Error& e) {
    throw invalid_op("cannot insert " + show(p) + ": " + e.what());
  }
}

bool DualTransitionReport::ok() const {
  return m_after == m_before - 1 && m_star_after == m_star_before + 1 &&
         collinearity_ok && simple_ok && fan_simple_ok;
}

DualTransitionReport check_dual_transition(const ReflexivePolygon& m, std::size_t i) {
  const EarStatus status = ear_status(m, i);
  if (status != EarStatus::kRemovable) {
    throw invalid_op("no dual transition at vertex " + std::to_string(i) + ": " +
                     std::string(to_string(status)));
  }
  const Cycle c = subdivided_cycle(m);
  const auto k = static_cast<std::ptrdiff_t>(i);
  const Point a_n = at(c, k - 2);
  const Point a1 = at(c, k - 1);
  const Point a2 = at(c, k);
  const Point a3 = at(c, k + 1);
  const Point a4 = at(c, k + 2);

  const ReflexivePolygon before = ReflexivePolygon::at_origin(m.subdivided());
  const ReflexivePolygon after = remove_ear(m, i);
  const DualResult dual_before = dual_polygon(before);
  const DualResult dual_after = dual_polygon(after);

  DualTransitionReport r;
  r.m_before = dual_before.m;
  r.m_star_before = dual_before.m_star;
  r.m_after = dual_after.m;
  r.m_star_after = dual_after.m_star;

  const Point a12 = a2 - a1;
  const Point a23 = a3 - a2;
  const Point a13 = a3 - a1;
  const Point a_n1 = a1 - a_n;
  const Point a34 = a4 - a3;
  r.added_dual_triangle = {a12, a13, a23};
  r.simple_ok = is_simple_triangle(a12, a13, a23);
  r.collinearity_ok = on_segment(a_n1, a13, a12) && on_segment(a13, a34, a23) &&
                      on_boundary(dual_after.dual, a12) &&
                      on_boundary(dual_after.dual, a23);
  const Point origin{};
  r.fan_simple_ok = is_simple_triangle(a1, origin, a3) &&
                    is_simple_triangle(a2, origin, a3) &&
                    is_simple_triangle(a4, origin, a3);
  return r;
}

std::optional<std::size_t> find_removable_ear(const ReflexivePolygon& m) {
  const Polygon s = m.subdivided();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (ear_removable(m, i)) return i;
  }
  // No ear: every proper diagonal must pass through the origin.
  const std::size_t n = s.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 2; k < n; ++k) {
      if (j == 0 && k == n - 1) continue;
      const Point mid2 = s[j] + s[k];
      bool proper = true;
      for (std::size_t e = 0; e < n && proper; ++e) {
        proper = cross(s.edge(e), mid2 - 2 * s[e]) > 0;
      }
      if (proper && !on_segment(s[j], s[k], Point{})) {
        throw contract_violation("no removable ear although diagonal " + show(s[j]) +
                                 " " + show(s[k]) + " avoids the origin");
      }
    }
  }
  return std::nullopt;
}

char to_letter(TerminalCase c) {
  switch (c) {
    case TerminalCase::kParallelogram: return 'A';
    case TerminalCase::kStraightAngle: return 'B';
    case TerminalCase::kTriangle: return 'C';
  }
  return '?';
}

bool is_centered_parallelogram(const Polygon& p) {
  if (p.size() != 4 || !is_strictly_convex(p.vertices())) return false;
  if (boundary_count(p) != 4) return false;
  if (p[0] + p[2] != Point{} || p[1] + p[3] != Point{}) return false;
  return p.edge(0) == -p.edge(2) && p.edge(1) == -p.edge(3);
}

namespace {

// Applies elementary operations addressed by neighbouring points rather
// than indices, recording each step.
class SeriesRunner {
 public:
  SeriesRunner(ReflexivePolygon start, std::vector<TraceStep>& steps)
      : current_(std::move(start)), steps_(steps) {}

  const ReflexivePolygon& current() const { return current_; }

  void insert_between(Point a, Point b, Point p) {
    const Cycle c = subdivided_cycle(current_);
    const std::size_t ia = index_of(c, a);
    const std::size_t ib = index_of(c, b);
    std::size_t pos;
    if ((ia + 1) % c.size() == ib) {
      pos = ia + 1;
    } else if ((ib + 1) % c.size() == ia) {
      pos = ib + 1;
    } else {
      throw invalid_op(show(a) + " and " + show(b) + " are not adjacent");
    }
    current_ = insert_vertex(current_, pos, p);
    record({OpKind::kInsert, pos, p});
  }

  void remove(Point p) {
    const std::size_t i = index_of(subdivided_cycle(current_), p);
    current_ = remove_ear(current_, i);
    record({OpKind::kRemove, i, p});
  }

  void remove_at(std::size_t i) {
    const Point p = subdivided_cycle(current_).at(i);
    current_ = remove_ear(current_, i);
    record({OpKind::kRemove, i, p});
  }

 private:
  static std::size_t index_of(const Cycle& c, Point p) {
    const auto it = std::find(c.begin(), c.end(), p);
    if (it == c.end()) throw invalid_op(show(p) + " is not a vertex");
    return static_cast<std::size_t>(it - c.begin());
  }

  void record(const ElementaryOp& op) {
    const TwelveReport r = verify_twelve(current_);
    if (!r.ok) {
      throw contract_violation("m + m* = " + std::to_string(r.sum) + " after step " +
                               std::to_string(steps_.size() + 1));
    }
    steps_.push_back({op, r.m, r.m_star});
  }

  ReflexivePolygon current_;
  std::vector<TraceStep>& steps_;
};

// Runs `series` on a scratch copy for each labelling in turn; the first one
// whose every operation is admissible is committed.
template <typename Labelling>
bool try_labellings(const std::vector<Labelling>& labellings,
                    const std::function<void(SeriesRunner&, const Labelling&)>& series,
                    ReflexivePolygon& current, std::vector<TraceStep>& steps,
                    std::string& failures) {
  for (const Labelling& l : labellings) {
    std::vector<TraceStep> scratch;
    SeriesRunner runner(current, scratch);
    try {
      series(runner, l);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidOperation) throw;
      failures += std::string(failures.empty() ? "" : "; ") + e.what();
      continue;
    }
    steps.insert(steps.end(), scratch.begin(), scratch.end());
    current = runner.current();
    return true;
  }
  return false;
}

}  // namespace

ReductionTrace reduce_to_parallelogram(const ReflexivePolygon& m) {
  std::vector<TraceStep> steps;
  SeriesRunner greedy(ReflexivePolygon::at_origin(m.subdivided()), steps);
  while (const std::optional<std::size_t> ear = find_removable_ear(greedy.current())) {
    greedy.remove_at(*ear);
  }
  ReflexivePolygon current = greedy.current();
  const Cycle c = subdivided_cycle(current);
  const auto n = static_cast<std::ptrdiff_t>(c.size());
  TerminalCase terminal;
  std::string failures;

  if (n == 4 && is_strictly_convex(c)) {
    terminal = TerminalCase::kParallelogram;
  } else if (n == 4 && strict_form(current.polygon()).size() == 3) {
    terminal = TerminalCase::kStraightAngle;
    std::ptrdiff_t straight = 0;
    while (area2(at(c, straight - 1), at(c, straight), at(c, straight + 1)) != 0) {
      ++straight;
    }
    struct Labels {
      Point a, b, cc, d;
    };
    const Point opposite = at(c, straight + 2);
    const std::vector<Labels> labellings = {
        {opposite, at(c, straight - 1), at(c, straight), at(c, straight + 1)},
        {opposite, at(c, straight + 1), at(c, straight), at(c, straight - 1)},
    };
    // ABCD -> AEBCD -> AD'EBCD -> AD'ECD -> AD'CD, D' = -D, E = (D' + B) / 2.
    const auto series = [](SeriesRunner& r, const Labels& l) {
      const Point d_reflected = -l.d;
      const Point sum = d_reflected + l.b;
      if (sum.x % 2 != 0 || sum.y % 2 != 0) {
        throw contract_violation("midpoint of " + show(d_reflected) + " and " +
                                 show(l.b) + " is not a lattice point");
      }
      const Point e{sum.x / 2, sum.y / 2};
      r.insert_between(l.a, l.b, e);
      r.insert_between(l.a, e, d_reflected);
      r.remove(l.b);
      r.remove(e);
    };
    if (!try_labellings<Labels>(labellings, series, current, steps, failures)) {
      throw contract_violation("straight-angle series failed: " + failures);
    }
  } else if (n == 3) {
    terminal = TerminalCase::kTriangle;
    struct Labels {
      Point a, b, cc;
    };
    const std::vector<Labels> labellings = {
        {c[0], c[1], c[2]}, {c[1], c[2], c[0]}, {c[2], c[0], c[1]},
        {c[0], c[2], c[1]}, {c[1], c[0], c[2]}, {c[2], c[1], c[0]},
    };
    // ABC -> AC'BC -> AC'BA'C -> AC'A'C, A' = -A, C' = -C.
    const auto series = [](SeriesRunner& r, const Labels& l) {
      r.insert_between(l.a, l.b, -l.cc);
      r.insert_between(l.b, l.cc, -l.a);
      r.remove(l.b);
    };
    if (!try_labellings<Labels>(labellings, series, current, steps, failures)) {
      throw contract_violation("triangle series failed: " + failures);
    }
  } else {
    throw contract_violation("no removable ear and no terminal case matches a polygon with " +
                             std::to_string(n) + " boundary points");
  }

  if (!is_centered_parallelogram(current.polygon())) {
    throw contract_violation(std::string("terminal case ") + to_letter(terminal) +
                             " did not end at a parallelogram centred at the origin");
  }
  return ReductionTrace{m, terminal, std::move(steps), std::move(current)};
}

namespace {

bool oracle_simple(Point a, Point b, Point c) {
  if (area2(a, b, c) <= 0) return false;
  const Polygon t({a, b, c});
  return boundary_count_oracle(t) == 3 && interior_count_oracle(t) == 0;
}

ReplayReport fail(std::size_t step, const std::string& why) {
  return ReplayReport{false, step, "step " + std::to_string(step) + ": " + why};
}

}  // namespace

ReplayReport replay_trace(const ReductionTrace& trace) {
  const Polygon start = subdivide(trace.initial.polygon());
  Cycle c(start.vertices().begin(), start.vertices().end());
  std::size_t step_no = 0;
  try {
    for (const TraceStep& step : trace.steps) {
      ++step_no;
      const std::size_t n = c.size();
      const std::size_t i = step.op.index;
      const auto k = static_cast<std::ptrdiff_t>(i);
      if (step.op.kind == OpKind::kRemove) {
        if (i >= n || c[i] != step.op.point) return fail(step_no, "removed point mismatch");
        if (!oracle_simple(at(c, k - 1), c[i], at(c, k + 1))) {
          return fail(step_no, "removed triangle is not simple");
        }
        c.erase(c.begin() + k);
      } else {
        if (i > n) return fail(step_no, "insert position out of range");
        if (!oracle_simple(at(c, k - 1), step.op.point, at(c, k))) {
          return fail(step_no, "inserted triangle is not simple");
        }
        c.insert(c.begin() + k, step.op.point);
      }
      const Polygon p(c);
      if (!std::equal(c.begin(), c.end(), p.vertices().begin()) ||
          interior_count_oracle(p) != 1 || !strictly_inside(p, Point{})) {
        return fail(step_no, "polygon is not reflexive around the origin");
      }
      const Int m = boundary_count_oracle(p);
      if (m != static_cast<Int>(c.size())) return fail(step_no, "polygon is not subdivided");
      // Subdivided edges are primitive, so the edge vectors are the dual's
      // vertices directly.
      Cycle dual;
      for (std::size_t e = 0; e < c.size(); ++e) {
        const Point v = p.edge(e);
        if (dual.empty() || dual.back() != v) dual.push_back(v);
      }
      if (dual.size() > 1 && dual.back() == dual.front()) dual.pop_back();
      const Int m_star = boundary_count_oracle(Polygon(dual));
      if (m != step.m_after || m_star != step.m_star_after) {
        return fail(step_no, "recorded counts differ from recomputed m=" +
                                 std::to_string(m) + " m*=" + std::to_string(m_star));
      }
      if (m + m_star != 12) return fail(step_no, "m + m* != 12");
    }
  } catch (const Error& e) {
    return fail(step_no, e.what());
  }
  const auto final_vertices = trace.final_polygon.vertices();
  if (!std::equal(c.begin(), c.end(), final_vertices.begin(), final_vertices.end())) {
    return ReplayReport{false, step_no, "replayed polygon differs from the recorded final polygon"};
  }
  const Polygon final_polygon(c);
  if (boundary_count_oracle(final_polygon) != 4 || c.size() != 4 || c[0] + c[2] != Point{} ||
      c[1] + c[3] != Point{} || !is_strictly_convex(c)) {
    return ReplayReport{false, step_no, "final polygon is not a parallelogram centred at the origin"};
  }
  return ReplayReport{true, step_no, "CONSISTENT"};
}

}  // namespace latpoly
