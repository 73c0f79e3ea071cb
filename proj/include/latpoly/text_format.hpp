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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latpoly/classify.hpp"
#include "latpoly/reduction.hpp"

namespace latpoly {

// Polygon text: one vertex per line, "x y" in base 10. Lines starting with
// '#' are comments and blank lines are skipped. Throws ParseError naming the
// 1-based line.
std::vector<Point> parse_polygon_text(std::string_view text);
std::string format_polygon_text(std::span<const Point> vertices);

// Trace text:
//
//   # reduction trace
//   initial <n>
//   <n polygon lines>
//   case <A|B|C>
//   steps <k>
//   REMOVE <i> (<x>,<y>) m=<m> m*=<m*> sum=<m+m*>      (or INSERT)
//   final <n>
//   <n polygon lines>
std::string format_trace(const ReductionTrace& trace);
ReductionTrace parse_trace(std::string_view text);

/// True if the first non-comment line opens a trace.
bool looks_like_trace(std::string_view text);

// Census text: a header comment, then per class a comment line
// "# class <k>: m=<m> m*=<m*> area2=<a>" followed by the representative in
// polygon text and a blank line.
std::string format_census(const std::vector<EquivalenceClass>& classes, Int box);
std::vector<EquivalenceClass> parse_census(std::string_view text);

}  // namespace latpoly
