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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latpoly/classify.hpp"
#include "latpoly/duality.hpp"
#include "latpoly/reduction.hpp"
#include "latpoly/text_format.hpp"

namespace py = pybind11;
using namespace latpoly;

namespace {

using PyPoint = std::pair<Int, Int>;
using PyVertices = std::vector<PyPoint>;

Point to_point(const PyPoint& p) { return {p.first, p.second}; }
PyPoint from_point(Point p) { return {p.x, p.y}; }

std::vector<Point> to_points(const PyVertices& v) {
  std::vector<Point> out;
  out.reserve(v.size());
  for (const PyPoint& p : v) out.push_back(to_point(p));
  return out;
}

PyVertices from_points(std::span<const Point> v) {
  PyVertices out;
  out.reserve(v.size());
  for (const Point& p : v) out.push_back(from_point(p));
  return out;
}

Polygon polygon(const PyVertices& v) { return Polygon(to_points(v)); }

// Reflexive-polygon arguments must already be centred at the origin.
ReflexivePolygon centred(const PyVertices& v) { return ReflexivePolygon::at_origin(polygon(v)); }

py::dict trace_dict(const ReductionTrace& t) {
  py::list steps;
  for (const TraceStep& s : t.steps) {
    py::dict d;
    d["op"] = s.op.kind == OpKind::kRemove ? "REMOVE" : "INSERT";
    d["index"] = s.op.index;
    d["point"] = from_point(s.op.point);
    d["m"] = s.m_after;
    d["m_star"] = s.m_star_after;
    steps.append(d);
  }
  py::dict d;
  d["initial"] = from_points(t.initial.vertices());
  d["case"] = std::string(1, to_letter(t.terminal));
  d["steps"] = steps;
  d["final"] = from_points(t.final_polygon.vertices());
  d["text"] = format_trace(t);
  return d;
}

}  // namespace

PYBIND11_MODULE(latpoly, m) {
  m.doc() = "Exact-integer toolkit for reflexive lattice polygons";

  py::register_exception<Error>(m, "LatticeError");

  // lattice core
  m.def("area2", [](const PyVertices& v) { return area2(polygon(v)); });
  m.def("boundary_count", [](const PyVertices& v) { return boundary_count(polygon(v)); });
  m.def("boundary_count_oracle",
        [](const PyVertices& v) { return boundary_count_oracle(polygon(v)); });
  m.def("interior_count", [](const PyVertices& v) { return interior_count(polygon(v)); });
  m.def("interior_count_oracle",
        [](const PyVertices& v) { return interior_count_oracle(polygon(v)); });
  m.def("subdivide",
        [](const PyVertices& v) { return from_points(subdivide(polygon(v)).vertices()); });
  m.def("strict_form",
        [](const PyVertices& v) { return from_points(strict_form(polygon(v)).vertices()); });
  m.def("is_strictly_convex",
        [](const PyVertices& v) { return is_strictly_convex(to_points(v)); });
  m.def("validate_reflexive", [](const PyVertices& v) {
    return from_points(validate_reflexive(to_points(v)).vertices());
  });

  // duality
  m.def("primitive_vector",
        [](const PyPoint& p) { return from_point(primitive_vector(to_point(p))); });
  m.def("dual_polygon", [](const PyVertices& v) {
    const DualResult d = dual_polygon(centred(v));
    py::dict out;
    out["dual"] = from_points(d.dual.vertices());
    out["m"] = d.m;
    out["m_star"] = d.m_star;
    return out;
  });
  m.def("verify_twelve", [](const PyVertices& v) {
    const TwelveReport r = verify_twelve(centred(v));
    py::dict out;
    out["m"] = r.m;
    out["m_star"] = r.m_star;
    out["sum"] = r.sum;
    out["ok"] = r.ok;
    return out;
  });

  // reduction
  m.def("is_simple_triangle", [](const PyPoint& a, const PyPoint& b, const PyPoint& c) {
    return is_simple_triangle(to_point(a), to_point(b), to_point(c));
  });
  m.def("ear_removable",
        [](const PyVertices& v, std::size_t i) { return ear_removable(centred(v), i); });
  m.def("remove_ear", [](const PyVertices& v, std::size_t i) {
    return from_points(remove_ear(centred(v), i).vertices());
  });
  m.def("insert_vertex", [](const PyVertices& v, std::size_t i, const PyPoint& p) {
    return from_points(insert_vertex(centred(v), i, to_point(p)).vertices());
  });
  m.def("find_removable_ear",
        [](const PyVertices& v) { return find_removable_ear(centred(v)); });
  m.def("check_dual_transition", [](const PyVertices& v, std::size_t i) {
    const DualTransitionReport r = check_dual_transition(centred(v), i);
    py::dict out;
    out["m_before"] = r.m_before;
    out["m_after"] = r.m_after;
    out["m_star_before"] = r.m_star_before;
    out["m_star_after"] = r.m_star_after;
    out["added_dual_triangle"] = from_points(r.added_dual_triangle);
    out["collinearity_ok"] = r.collinearity_ok;
    out["simple_ok"] = r.simple_ok;
    out["fan_simple_ok"] = r.fan_simple_ok;
    out["ok"] = r.ok();
    return out;
  });
  m.def("reduce_to_parallelogram",
        [](const PyVertices& v) { return trace_dict(reduce_to_parallelogram(centred(v))); });
  m.def("replay_trace", [](const std::string& text) {
    const ReplayReport r = replay_trace(parse_trace(text));
    py::dict out;
    out["consistent"] = r.consistent;
    out["steps_checked"] = r.steps_checked;
    out["message"] = r.message;
    return out;
  });

  // classify
  m.def(
      "apply_unimodular",
      [](Int a, Int b, Int c, Int d, const PyVertices& v, const PyPoint& t) {
        return from_points(apply_unimodular(UnimodularMap(a, b, c, d, to_point(t)), centred(v))
                               .vertices());
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("vertices"),
      py::arg("t") = PyPoint{0, 0});
  m.def("are_equivalent", [](const PyVertices& a, const PyVertices& b) {
    return are_equivalent(centred(a), centred(b));
  });
  m.def("normal_form",
        [](const PyVertices& v) { return from_points(normal_form(centred(v)).vertices()); });
  m.def("enumerate_reflexive", [](Int box) {
    py::list out;
    for (const EquivalenceClass& c : enumerate_reflexive(box)) {
      py::dict d;
      d["vertices"] = from_points(c.representative.vertices());
      d["m"] = c.m;
      d["m_star"] = c.m_star;
      d["area2"] = c.area2;
      out.append(d);
    }
    return out;
  });
  m.def("random_reflexive", [](std::uint64_t seed, int steps) {
    return from_points(random_reflexive(seed, steps).vertices());
  });

  // text formats
  m.def("parse_polygon_text",
        [](const std::string& s) { return from_points(parse_polygon_text(s)); });
  m.def("format_polygon_text",
        [](const PyVertices& v) { return format_polygon_text(to_points(v)); });
}
