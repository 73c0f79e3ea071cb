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

#include "latpoly/text_format.hpp"

#include <charconv>
#include <sstream>

#include "latpoly/duality.hpp"

namespace latpoly {
namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({++number, line});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool is_skippable(std::string_view s) {
  const auto t = tokens(s);
  return t.empty() || s.find_first_not_of(" \t") == s.find('#');
}

Int parse_int(std::string_view s, int line) {
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, "integer out of range: '" + std::string(s) + "'");
  }
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

Point parse_vertex_line(const Line& l) {
  const auto t = tokens(l.text);
  if (t.size() != 2) {
    throw ParseError(l.number, "expected two integers, got " + std::to_string(t.size()) +
                                   " field(s)");
  }
  return {parse_int(t[0], l.number), parse_int(t[1], l.number)};
}

// Sequential reader over non-skippable lines.
class Reader {
 public:
  explicit Reader(std::string_view text) {
    for (const Line& l : split_lines(text)) {
      if (!is_skippable(l.text)) lines_.push_back(l);
    }
  }

  bool done() const { return pos_ >= lines_.size(); }

  const Line& next(std::string_view expecting) {
    if (done()) {
      throw ParseError(last_line() + 1, "unexpected end of input, expected " +
                                            std::string(expecting));
    }
    return lines_[pos_++];
  }

  // "<keyword> <value>" header line.
  std::string_view keyword_value(std::string_view keyword) {
    const Line& l = next(keyword);
    const auto t = tokens(l.text);
    if (t.size() != 2 || t[0] != keyword) {
      throw ParseError(l.number, "expected '" + std::string(keyword) + " <value>'");
    }
    current_line_ = l.number;
    return t[1];
  }

  std::vector<Point> vertices(std::size_t count) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(parse_vertex_line(next("vertex")));
    return out;
  }

  int current_line() const { return current_line_; }

 private:
  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  int current_line_ = 0;
};

std::size_t parse_count(std::string_view s, int line) {
  const Int v = parse_int(s, line);
  if (v < 0) throw ParseError(line, "negative count");
  return static_cast<std::size_t>(v);
}

ReflexivePolygon reflexive_from(std::vector<Point> vertices, int line) {
  try {
    return ReflexivePolygon::at_origin(Polygon(std::move(vertices)));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line, std::string("invalid polygon: ") + e.what());
  }
}

// "REMOVE 3 (1,-1) m=7 m*=5 sum=12"
TraceStep parse_step(const Line& l) {
  const auto t = tokens(l.text);
  if (t.size() != 6) throw ParseError(l.number, "malformed step line");
  TraceStep step;
  if (t[0] == "REMOVE") {
    step.op.kind = OpKind::kRemove;
  } else if (t[0] == "INSERT") {
    step.op.kind = OpKind::kInsert;
  } else {
    throw ParseError(l.number, "expected REMOVE or INSERT, got '" + std::string(t[0]) + "'");
  }
  step.op.index = parse_count(t[1], l.number);
  std::string_view pt = t[2];
  const std::size_t comma = pt.find(',');
  if (pt.size() < 5 || pt.front() != '(' || pt.back() != ')' || comma == std::string_view::npos) {
    throw ParseError(l.number, "malformed point '" + std::string(pt) + "'");
  }
  step.op.point = {parse_int(pt.substr(1, comma - 1), l.number),
                   parse_int(pt.substr(comma + 1, pt.size() - comma - 2), l.number)};
  const auto field = [&](std::string_view tok, std::string_view key) {
    if (tok.substr(0, key.size()) != key) {
      throw ParseError(l.number, "expected '" + std::string(key) + "'");
    }
    return parse_int(tok.substr(key.size()), l.number);
  };
  step.m_after = field(t[3], "m=");
  step.m_star_after = field(t[4], "m*=");
  if (field(t[5], "sum=") != step.m_after + step.m_star_after) {
    throw ParseError(l.number, "sum does not match m + m*");
  }
  return step;
}

}  // namespace

std::vector<Point> parse_polygon_text(std::string_view text) {
  std::vector<Point> out;
  for (const Line& l : split_lines(text)) {
    if (is_skippable(l.text)) continue;
    out.push_back(parse_vertex_line(l));
  }
  return out;
}

std::string format_polygon_text(std::span<const Point> vertices) {
  std::ostringstream os;
  for (const Point& v : vertices) os << v.x << ' ' << v.y << '\n';
  return os.str();
}

std::string format_trace(const ReductionTrace& trace) {
  std::ostringstream os;
  os << "# reduction trace\n";
  os << "initial " << trace.initial.vertices().size() << '\n'
     << format_polygon_text(trace.initial.vertices());
  os << "case " << to_letter(trace.terminal) << '\n';
  os << "steps " << trace.steps.size() << '\n';
  for (const TraceStep& s : trace.steps) {
    os << (s.op.kind == OpKind::kRemove ? "REMOVE " : "INSERT ") << s.op.index << " ("
       << s.op.point.x << ',' << s.op.point.y << ") m=" << s.m_after << " m*=" << s.m_star_after
       << " sum=" << s.m_after + s.m_star_after << '\n';
  }
  os << "final " << trace.final_polygon.vertices().size() << '\n'
     << format_polygon_text(trace.final_polygon.vertices());
  return os.str();
}

bool looks_like_trace(std::string_view text) {
  for (const Line& l : split_lines(text)) {
    if (is_skippable(l.text)) continue;
    const auto t = tokens(l.text);
    return !t.empty() && t[0] == "initial";
  }
  return false;
}

ReductionTrace parse_trace(std::string_view text) {
  Reader r(text);
  const std::size_t n_initial = parse_count(r.keyword_value("initial"), r.current_line());
  const int initial_line = r.current_line();
  ReflexivePolygon initial = reflexive_from(r.vertices(n_initial), initial_line);

  const std::string_view letter = r.keyword_value("case");
  TerminalCase terminal;
  if (letter == "A") {
    terminal = TerminalCase::kParallelogram;
  } else if (letter == "B") {
    terminal = TerminalCase::kStraightAngle;
  } else if (letter == "C") {
    terminal = TerminalCase::kTriangle;
  } else {
    throw ParseError(r.current_line(), "unknown terminal case '" + std::string(letter) + "'");
  }

  const std::size_t n_steps = parse_count(r.keyword_value("steps"), r.current_line());
  std::vector<TraceStep> steps;
  for (std::size_t i = 0; i < n_steps; ++i) steps.push_back(parse_step(r.next("step")));

  const std::size_t n_final = parse_count(r.keyword_value("final"), r.current_line());
  const int final_line = r.current_line();
  ReflexivePolygon final_polygon = reflexive_from(r.vertices(n_final), final_line);
  if (!r.done()) {
    throw ParseError(r.next("").number, "trailing content after final polygon");
  }
  return ReductionTrace{std::move(initial), terminal, std::move(steps), std::move(final_polygon)};
}

std::string format_census(const std::vector<EquivalenceClass>& classes, Int box) {
  std::ostringstream os;
  os << "# census box=" << box << ": " << classes.size() << " classes\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const EquivalenceClass& c = classes[i];
    os << "\n# class " << i + 1 << ": m=" << c.m << " m*=" << c.m_star << " area2=" << c.area2
       << '\n'
       << format_polygon_text(c.representative.vertices());
  }
  return os.str();
}

std::vector<EquivalenceClass> parse_census(std::string_view text) {
  std::vector<EquivalenceClass> out;
  std::vector<Point> block;
  int header_line = 0;
  Int m = 0, m_star = 0, a2 = 0;
  const auto flush = [&] {
    if (header_line == 0) return;
    ReflexivePolygon rep = reflexive_from(std::move(block), header_line);
    out.push_back(EquivalenceClass{std::move(rep), m, m_star, a2});
    block.clear();
  };
  for (const Line& l : split_lines(text)) {
    const auto t = tokens(l.text);
    if (t.size() == 6 && t[0] == "#" && t[1] == "class") {
      flush();
      header_line = l.number;
      const auto field = [&](std::string_view tok, std::string_view key) {
        if (tok.substr(0, key.size()) != key) {
          throw ParseError(l.number, "expected '" + std::string(key) + "'");
        }
        return parse_int(tok.substr(key.size()), l.number);
      };
      m = field(t[3], "m=");
      m_star = field(t[4], "m*=");
      a2 = field(t[5], "area2=");
      continue;
    }
    if (is_skippable(l.text)) continue;
    if (header_line == 0) throw ParseError(l.number, "vertex before the first class header");
    block.push_back(parse_vertex_line(l));
  }
  flush();
  return out;
}

}  // namespace latpoly
