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

#include "latpoly/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "latpoly/classify.hpp"
#include "latpoly/duality.hpp"
#include "latpoly/reduction.hpp"
#include "latpoly/text_format.hpp"

namespace latpoly {
namespace {

using nlohmann::json;

json to_json(Point p) { return json::array({p.x, p.y}); }

json to_json(std::span<const Point> vertices) {
  json out = json::array();
  for (const Point& v : vertices) out.push_back(to_json(v));
  return out;
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const TraceStep& s : t.steps) {
    steps.push_back({{"op", s.op.kind == OpKind::kRemove ? "REMOVE" : "INSERT"},
                     {"index", s.op.index},
                     {"point", to_json(s.op.point)},
                     {"m", s.m_after},
                     {"m_star", s.m_star_after},
                     {"sum", s.m_after + s.m_star_after}});
  }
  return {{"initial", to_json(t.initial.vertices())},
          {"case", std::string(1, to_letter(t.terminal))},
          {"steps", steps},
          {"final", to_json(t.final_polygon.vertices())}};
}

std::string show(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidOperation:
    case ErrorCode::kIndexOutOfRange:
      return kExitUsage;
    case ErrorCode::kProofContractViolation:
    case ErrorCode::kInternalInconsistency:
      return kExitContract;
    default:
      return kExitNotReflexive;
  }
}

struct Options {
  std::string input;
  bool json = false;
  bool replay = false;
  bool check = false;
  Int box = 4;
  std::uint64_t seed = 0;
  int steps = 10;
  std::size_t index = 0;
};

class Commands {
 public:
  Commands(const Options& opt, std::istream& in, std::ostream& out)
      : opt_(opt), in_(in), out_(out) {}

  int verify() {
    const ReflexivePolygon m = validate_reflexive(read_polygon());
    const TwelveReport r = verify_twelve(m);
    if (opt_.json) {
      out_ << json{{"m", r.m}, {"m_star", r.m_star}, {"sum", r.sum}, {"ok", r.ok}}.dump() << '\n';
    } else {
      out_ << "m=" << r.m << " m*=" << r.m_star << " sum=" << r.sum << (r.ok ? " PASS" : " FAIL")
           << '\n';
    }
    return r.ok ? kExitOk : kExitContract;
  }

  int dual() {
    const ReflexivePolygon m = validate_reflexive(read_polygon());
    const DualResult d = dual_polygon(m);
    if (opt_.json) {
      out_ << json{{"dual", to_json(d.dual.vertices())}, {"m", d.m}, {"m_star", d.m_star}}.dump()
           << '\n';
    } else {
      out_ << "# dual polygon: m=" << d.m << " m*=" << d.m_star << '\n'
           << format_polygon_text(d.dual.vertices());
    }
    return kExitOk;
  }

  int reduce() {
    const std::string text = read_input();
    if (opt_.replay && looks_like_trace(text)) return report_replay(parse_trace(text), false);
    const ReflexivePolygon m = validate_reflexive(parse_polygon_text(text));
    const ReductionTrace trace = reduce_to_parallelogram(m);
    if (!opt_.replay) {
      if (opt_.json) {
        out_ << to_json(trace).dump() << '\n';
      } else {
        out_ << format_trace(trace);
      }
      return kExitOk;
    }
    // Replay what a reader of the output would see, not the in-memory trace.
    return report_replay(parse_trace(format_trace(trace)), true);
  }

  int enumerate() {
    if (opt_.box < 1) throw CLI::ValidationError("--box", "box must be at least 1");
    const std::vector<EquivalenceClass> classes = enumerate_reflexive(opt_.box);
    std::size_t verified = 0;
    std::size_t reduced = 0;
    if (opt_.check) {
      for (const EquivalenceClass& c : classes) {
        if (verify_twelve(c.representative).ok) ++verified;
        try {
          if (replay_trace(reduce_to_parallelogram(c.representative)).consistent) ++reduced;
        } catch (const Error&) {
        }
      }
    }
    const bool pass = verified == classes.size() && reduced == classes.size();
    if (opt_.json) {
      json list = json::array();
      for (const EquivalenceClass& c : classes) {
        list.push_back({{"m", c.m},
                        {"m_star", c.m_star},
                        {"area2", c.area2},
                        {"vertices", to_json(c.representative.vertices())}});
      }
      json doc{{"box", opt_.box}, {"count", classes.size()}, {"classes", list}};
      if (opt_.check) {
        doc["check"] = {{"verify_pass", verified}, {"reduce_pass", reduced}, {"ok", pass}};
      }
      out_ << doc.dump() << '\n';
    } else {
      out_ << format_census(classes, opt_.box);
      if (opt_.check) {
        out_ << "\n# check: " << verified << '/' << classes.size() << " verify PASS, " << reduced
             << '/' << classes.size() << " reduce PASS\n"
             << (pass ? "# PASS\n" : "# FAIL\n");
      }
    }
    return !opt_.check || pass ? kExitOk : kExitContract;
  }

  int random() {
    const ReflexivePolygon m = random_reflexive(opt_.seed, opt_.steps);
    if (opt_.json) {
      out_ << json{{"seed", opt_.seed}, {"steps", opt_.steps}, {"vertices", to_json(m.vertices())}}
                  .dump()
           << '\n';
    } else {
      out_ << "# random seed=" << opt_.seed << " steps=" << opt_.steps << '\n'
           << format_polygon_text(m.vertices());
    }
    return kExitOk;
  }

  int transition() {
    const ReflexivePolygon m = validate_reflexive(read_polygon());
    const DualTransitionReport r = check_dual_transition(m, opt_.index);
    const auto& tri = r.added_dual_triangle;
    if (opt_.json) {
      out_ << json{{"m_before", r.m_before},
                   {"m_after", r.m_after},
                   {"m_star_before", r.m_star_before},
                   {"m_star_after", r.m_star_after},
                   {"added_dual_triangle", json::array({to_json(tri[0]), to_json(tri[1]),
                                                        to_json(tri[2])})},
                   {"collinearity_ok", r.collinearity_ok},
                   {"simple_ok", r.simple_ok},
                   {"fan_simple_ok", r.fan_simple_ok},
                   {"ok", r.ok()}}
                  .dump()
           << '\n';
    } else {
      const auto flag = [](bool b) { return b ? "ok" : "FAILED"; };
      out_ << "m: " << r.m_before << " -> " << r.m_after << '\n'
           << "m*: " << r.m_star_before << " -> " << r.m_star_after << '\n'
           << "added dual triangle: " << show(tri[0]) << ' ' << show(tri[1]) << ' '
           << show(tri[2]) << '\n'
           << "collinearity: " << flag(r.collinearity_ok) << '\n'
           << "simple: " << flag(r.simple_ok) << '\n'
           << "fan: " << flag(r.fan_simple_ok) << '\n'
           << (r.ok() ? "PASS" : "FAIL") << '\n';
    }
    return r.ok() ? kExitOk : kExitContract;
  }

 private:
  std::string read_input() {
    std::ostringstream buf;
    if (opt_.input.empty() || opt_.input == "-") {
      buf << in_.rdbuf();
    } else {
      std::ifstream file(opt_.input);
      if (!file) throw CLI::ValidationError("input", "cannot open '" + opt_.input + "'");
      buf << file.rdbuf();
    }
    return buf.str();
  }

  std::vector<Point> read_polygon() { return parse_polygon_text(read_input()); }

  int report_replay(const ReductionTrace& trace, bool print_trace) {
    const ReplayReport r = replay_trace(trace);
    const char* verdict = r.consistent ? "CONSISTENT" : "INCONSISTENT";
    if (opt_.json) {
      json doc = to_json(trace);
      doc["replay"] = verdict;
      if (!r.consistent) doc["replay_message"] = r.message;
      out_ << doc.dump() << '\n';
    } else {
      if (print_trace) out_ << format_trace(trace);
      out_ << "# replay: " << verdict << " (" << r.steps_checked << " steps)";
      if (!r.consistent) out_ << ": " << r.message;
      out_ << '\n';
    }
    return r.consistent ? kExitOk : kExitContract;
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact lattice-polygon toolkit for reflexive polygons", "latpoly"};
  app.require_subcommand(1);
  Options opt;

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Polygon file (default: stdin)");
    sub->add_flag("--json", opt.json, "Structured output");
  };
  CLI::App* verify = app.add_subcommand("verify", "Check m + m* == 12");
  add_input(verify);
  CLI::App* dual = app.add_subcommand("dual", "Print the dual polygon");
  add_input(dual);
  CLI::App* reduce = app.add_subcommand("reduce", "Reduce to a parallelogram and print the trace");
  add_input(reduce);
  reduce->add_flag("--replay", opt.replay,
                   "Re-verify the trace independently (input may also be a trace)");
  CLI::App* enumerate = app.add_subcommand("enumerate", "Census of reflexive polygons");
  enumerate->add_option("--box", opt.box, "Vertices lie in [-box, box]^2")->capture_default_str();
  enumerate->add_flag("--check", opt.check, "Verify and reduce every class");
  enumerate->add_flag("--json", opt.json, "Structured output");
  CLI::App* random = app.add_subcommand("random", "Random unimodular image of a reflexive polygon");
  random->add_option("--seed", opt.seed, "Generator seed")->required();
  random->add_option("--steps", opt.steps, "Number of elementary maps")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  random->add_flag("--json", opt.json, "Structured output");
  CLI::App* transition =
      app.add_subcommand("transition", "Check the dual transition for one ear removal");
  add_input(transition);
  transition->add_option("--index", opt.index, "Vertex index in the subdivided cycle")->required();

  std::vector<std::string> argv_storage{"latpoly"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    Commands commands(opt, in, out);
    if (verify->parsed()) return commands.verify();
    if (dual->parsed()) return commands.dual();
    if (reduce->parsed()) return commands.reduce();
    if (enumerate->parsed()) return commands.enumerate();
    if (random->parsed()) return commands.random();
    return commands.transition();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const NotReflexiveError& e) {
    err << e.what() << '\n';
    return kExitNotReflexive;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace latpoly
