// stybe: command-line front end.
//
// Every command prints one JSON report on stdout (enumerations print one
// JSON object per line followed by the report). Exit status: 0 when every
// check passes, 1 when a check fails, 2 on bad input, unmet hypotheses or
// usage errors.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "stybe/errors.hpp"
#include "stybe/json_io.hpp"

namespace {

using namespace stybe;

constexpr const char* kVersion = "0.3.1";

struct Options {
  std::string input;
  std::string output;
  std::string mode;
  std::string level;
  std::string rule;
  std::string filter = "all";
  std::string series;
  std::string k0;
  std::string kmatrix;
  std::string theta;
  std::vector<int> map;
  int depth = 1;
  int max_order = 3;
  int bound = 0;
  bool canonical = false;
  bool involutive = false;
  bool non_degenerate = false;
  unsigned jobs = 0;
};

struct Outcome {
  Json verdicts;
  bool pass = true;
};

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

class Runner {
 public:
  explicit Runner(Options& o) : opt_(o) {}

  Json read(const std::string& path, const char* role) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StructuralError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    digests_[role] = fnv1a(buf.str());
    try {
      return Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
      throw StructuralError("invalid JSON in " + path + ": " + e.what());
    }
  }

  const Json& input() {
    if (!input_) {
      if (opt_.input.empty()) throw StructuralError("--input is required");
      input_ = read(opt_.input, "input");
    }
    return *input_;
  }

  bool input_is_structure() { return input().contains("add"); }

  std::optional<NearBrace> structure() {
    if (!input_is_structure()) return std::nullopt;
    return near_brace_from_json(input());
  }

  SolutionRule rule_for(const NearBrace& nb) {
    if (!opt_.rule.empty()) return parse_solution_rule(opt_.rule);
    switch (nb.kind) {
      case StructureKind::left_brace: return SolutionRule::rump;
      case StructureKind::left_skew_brace:
      case StructureKind::skew_brace: return SolutionRule::gv;
      default: return SolutionRule::near;
    }
  }

  // Solution file, or a structure turned into a solution by --rule.
  SetSolution solution() {
    if (auto nb = structure()) return solution_from_structure(*nb, rule_for(*nb));
    return solution_from_json(input());
  }

  // The o group: the structure's own, or a "mul" table next to the solution.
  std::optional<GroupTable> mul_group(int n) {
    if (auto nb = structure()) {
      auto g = GroupTable::from_table(nb->mul);
      if (!g) throw StructuralError("multiplication table is not a group");
      return g;
    }
    if (input().contains("mul")) return group_from_json(input().at("mul"), n);
    return std::nullopt;
  }

  unsigned jobs() const {
    if (opt_.jobs > 0) return opt_.jobs;
    if (const char* env = std::getenv("STYBE_JOBS")) {
      const int v = std::atoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
  }

  std::optional<Rational> theta() const {
    if (opt_.theta.empty()) return std::nullopt;
    return parse_rational(opt_.theta);
  }

  // Enumeration results are written as they arrive.
  void emit_line(const Json& j) {
    sink() << j.dump() << '\n';
    streamed_ = true;
  }

  int finish(const std::string& command, const Outcome& outcome,
             std::chrono::steady_clock::time_point start) {
    Json report;
    report["command"] = command;
    report["version"] = kVersion;
    Json inputs = Json::object();
    for (const auto& [k, v] : digests_) inputs[k] = v;
    report["inputs"] = inputs;
    report["pass"] = outcome.pass;
    report["verdicts"] = outcome.verdicts;
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    sink() << report.dump(streamed_ ? -1 : 2) << '\n';
    sink().flush();
    return outcome.pass ? 0 : 1;
  }

  Options& opt_;

 private:
  std::optional<Json> input_;
  std::map<std::string, std::string> digests_;
  std::unique_ptr<std::ofstream> file_;
  bool streamed_ = false;

  std::ostream& sink() {
    if (opt_.output.empty()) return std::cout;
    if (!file_) {
      file_ = std::make_unique<std::ofstream>(opt_.output, std::ios::binary);
      if (!*file_) throw StructuralError("cannot write " + opt_.output);
    }
    return *file_;
  }
};

PolyMatrix k_from_options(Runner& run, const LinearSolution& lin) {
  const Options& o = run.opt_;
  if (!o.kmatrix.empty()) return matrix_from_json(run.read(o.kmatrix, "k"));
  if (!o.map.empty()) {
    if (static_cast<int>(o.map.size()) != lin.n)
      throw StructuralError("--map needs " + std::to_string(lin.n) + " entries");
    return reflection_matrix(o.map);
  }
  if (run.input().contains("k")) return reflection_matrix(reflection_from_json(run.input()).table);
  DressParams p{PolyMatrix::identity({lin.n}), run.theta()};
  return dress_reflection(lin, p).lambda_form;
}

Outcome dispatch(const std::string& cmd, Runner& run) {
  Options& o = run.opt_;
  Outcome out;
  if (cmd == "verify-structure") {
    const NearBrace nb = near_brace_from_json(run.input());
    const StructureKind level = o.level.empty() ? nb.kind : parse_structure_kind(o.level);
    const auto report = verify_structure(nb, level);
    out.verdicts = to_json(report);
    out.verdicts["level"] = std::string(to_string(level));
    out.pass = report.valid;
  } else if (cmd == "from-radical-ring") {
    const RingTable ring = ring_from_json(run.input());
    try {
      const NearBrace nb = brace_from_radical_ring(ring);
      out.verdicts = {{"brace", to_json(nb)},
                      {"verify", to_json(verify_structure(nb, StructureKind::left_brace))}};
    } catch (const NotRadicalRing& e) {
      out.verdicts = {{"brace", nullptr}, {"error", e.what()}, {"element", e.element()}};
      out.pass = false;
    }
  } else if (cmd == "enumerate-braces") {
    EnumerationOptions eo;
    eo.canonical = o.canonical;
    eo.jobs = run.jobs();
    const StructureKind level =
        o.level.empty() ? StructureKind::left_brace : parse_structure_kind(o.level);
    long count = 0;
    for_each_near_brace(o.bound, level, eo, [&](const NearBrace& nb) {
      NearBrace tagged = nb;
      tagged.kind = level;
      run.emit_line(to_json(tagged));
      ++count;
    });
    out.verdicts = {{"size", o.bound}, {"level", std::string(to_string(level))},
                    {"canonical", o.canonical}, {"count", count}};
  } else if (cmd == "make-solution") {
    const auto nb = run.structure();
    if (!nb) throw StructuralError("make-solution needs a structure file (add/mul tables)");
    const SolutionRule rule = run.rule_for(*nb);
    out.verdicts = {{"rule", std::string(to_string(rule))},
                    {"solution", to_json(solution_from_structure(*nb, rule))}};
  } else if (cmd == "verify-braid") {
    const auto report = verify_braid(run.solution());
    out.verdicts = to_json(report);
    out.pass = report.pass();
  } else if (cmd == "diagnose") {
    const SetSolution sol = run.solution();
    const auto mul = run.mul_group(sol.size());
    out.verdicts = to_json(diagnostics(sol, mul ? &*mul : nullptr));
  } else if (cmd == "reconstruct-add") {
    const SetSolution sol = run.solution();
    const auto mul = run.mul_group(sol.size());
    if (!mul) throw StructuralError("reconstruct-add needs a o table (structure input or \"mul\")");
    const auto report = reconstruct_addition(sol, *mul);
    out.verdicts = to_json(report);
    out.pass = report.group && report.distributivity_ok && report.round_trip;
  } else if (cmd == "enumerate-solutions") {
    const std::string mode = o.mode.empty() ? "exhaustive" : o.mode;
    long count = 0;
    if (mode == "exhaustive") {
      SolutionSearch s;
      s.involutive = o.involutive;
      s.non_degenerate = o.non_degenerate;
      s.canonical = o.canonical;
      s.jobs = run.jobs();
      for_each_solution(o.bound, s, [&](const SetSolution& sol) {
        run.emit_line(to_json(sol));
        ++count;
      });
    } else if (mode == "brace") {
      for (const auto& sol : enumerate_brace_solutions(o.bound, o.canonical, run.jobs())) {
        run.emit_line(to_json(sol));
        ++count;
      }
    } else {
      throw StructuralError("unknown mode '" + mode + "' (exhaustive, brace)");
    }
    out.verdicts = {{"size", o.bound}, {"mode", mode}, {"involutive", o.involutive},
                    {"non_degenerate", o.non_degenerate || mode == "brace"},
                    {"canonical", o.canonical}, {"count", count}};
  } else if (cmd == "verify-reflection") {
    const SetSolution sol = run.solution();
    ReflectionMap k = !o.map.empty() ? ReflectionMap::from_table(o.map)
                      : run.input().contains("k")
                          ? reflection_from_json(run.input())
                          : throw StructuralError("no reflection map (--map or \"k\")");
    if (k.size() != sol.size()) throw StructuralError("reflection map has the wrong size");
    const auto mode = o.mode.empty() ? ReflectionMode::direct : parse_reflection_mode(o.mode);
    const auto report = verify_reflection(sol, k, mode);
    out.verdicts = to_json(report);
    out.verdicts["k"] = to_json(k);
    out.pass = report.pass;
  } else if (cmd == "enumerate-reflections") {
    const SetSolution sol = run.solution();
    ReflectionSearch search;
    search.filter = parse_reflection_filter(o.filter);
    const auto nb = run.structure();
    const auto maps = enumerate_reflections(sol, search, nb ? &*nb : nullptr);
    for (const auto& k : maps) run.emit_line(to_json(k));
    out.verdicts = {{"filter", o.filter}, {"count", maps.size()}};
  } else if (cmd == "linearize") {
    const LinearSolution lin = linearize(run.solution());
    const Baxterization bax = baxterize(lin);
    const PolyMatrix id = PolyMatrix::identity({lin.n, lin.n});
    out.verdicts = {{"n", lin.n},
                    {"involutive", lin.involutive},
                    {"r_check_squared_is_identity", lin.r_check * lin.r_check == id},
                    {"r_check", to_json(lin.r_check)},
                    {"r", to_json(lin.r)},
                    {"baxterized_r_check", to_json(bax.r_check)},
                    {"baxterized_r", to_json(bax.r)}};
  } else if (cmd == "check-r") {
    const auto report = check_basic_properties(linearize(run.solution()));
    out.verdicts = to_json(report);
    out.pass = report.pass();
  } else if (cmd == "twist") {
    const auto report = build_and_check_twist(linearize(run.solution()));
    out.verdicts = to_json(report);
    out.pass = report.pass();
  } else if (cmd == "check-rtt") {
    const LinearSolution lin = linearize(run.solution());
    const SeriesOperator l = o.series.empty() ? fundamental_series(lin, o.depth)
                                              : series_from_json(run.read(o.series, "series"));
    const auto report = check_rtt_series(lin, l, o.max_order);
    out.verdicts = to_json(report);
    out.pass = report.pass();
    if (o.mode == "coproduct") {
      const auto co = check_rtt_series(lin, coproduct_series(l), o.max_order);
      out.verdicts["coproduct"] = to_json(co);
      out.pass = out.pass && co.pass();
    }
  } else if (cmd == "dress-k") {
    const LinearSolution lin = linearize(run.solution());
    DressParams p{PolyMatrix::identity({lin.n}), run.theta()};
    if (!o.k0.empty()) p.k0 = matrix_from_json(run.read(o.k0, "k0"));
    out.verdicts = to_json(dress_reflection(lin, p));
  } else if (cmd == "check-re") {
    const LinearSolution lin = linearize(run.solution());
    const PolyMatrix k = k_from_options(run, lin);
    const ReMode mode = o.mode == "constant"   ? ReMode::constant
                        : o.mode == "spectral" ? ReMode::spectral
                        : o.mode.empty() || o.mode == "auto"
                            ? ReMode::automatic
                            : throw StructuralError("unknown mode '" + o.mode + "'");
    const auto report = check_reflection_equation(lin, k, mode);
    out.verdicts = to_json(report);
    out.pass = report.pass;
  } else if (cmd == "check-ra") {
    const LinearSolution lin = linearize(run.solution());
    SeriesOperator k;
    if (!o.series.empty()) {
      k = series_from_json(run.read(o.series, "series"));
    } else {
      DressParams p{PolyMatrix::identity({lin.n}), run.theta() ? run.theta() : Rational(0)};
      k = dress_reflection(lin, p).series();
    }
    const auto report = check_reflection_algebra(lin, k);
    out.verdicts = to_json(report);
    out.pass = report.pass();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Set-theoretic Yang-Baxter and reflection equation workbench"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  struct Spec {
    const char* name;
    const char* help;
    std::vector<const char*> flags;
  };
  const std::vector<Spec> specs = {
      {"verify-structure", "check the axioms of a (near/skew) brace", {"level"}},
      {"from-radical-ring", "build the brace a o b = ab + a + b of a radical ring", {}},
      {"enumerate-braces", "enumerate structures of one size", {"bound", "level", "canonical", "jobs"}},
      {"make-solution", "solution attached to a structure", {"rule"}},
      {"verify-braid", "braid relation, directly and by constraints", {"rule"}},
      {"diagnose", "degeneracy, involutivity and inverse maps", {"rule"}},
      {"reconstruct-add", "rebuild + from a solution and o", {"rule"}},
      {"enumerate-solutions", "exhaustive or brace-generated search",
       {"bound", "mode", "canonical", "involutive", "non-degenerate", "jobs"}},
      {"verify-reflection", "check a reflection map", {"rule", "mode", "map"}},
      {"enumerate-reflections", "list reflections of a solution", {"rule", "filter"}},
      {"linearize", "matrix form and Baxterization", {"rule"}},
      {"check-r", "braid, unitarity, crossing and transpose identities", {"rule"}},
      {"twist", "twist matrices F, G and their identities", {"rule"}},
      {"check-rtt", "series relations of the RTT algebra",
       {"rule", "depth", "max-order", "series", "mode"}},
      {"dress-k", "dressed boundary operator", {"rule", "theta", "k0"}},
      {"check-re", "reflection equation in braid form", {"rule", "mode", "map", "k", "theta"}},
      {"check-ra", "reflection algebra exchange relations", {"rule", "series", "theta"}},
  };

  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("--input", o.input, "input JSON file");
    sub->add_option("--output", o.output, "write the report here instead of stdout");
    for (std::string f : spec.flags) {
      if (f == "level") sub->add_option("--level", o.level, "structure level");
      if (f == "rule") sub->add_option("--rule", o.rule, "rump, gv or near");
      if (f == "mode") sub->add_option("--mode", o.mode, "check or search mode");
      if (f == "bound") sub->add_option("--bound", o.bound, "size n")->required();
      if (f == "canonical") sub->add_flag("--canonical", o.canonical, "one per isomorphism class");
      if (f == "involutive") sub->add_flag("--involutive", o.involutive, "involutive only");
      if (f == "non-degenerate")
        sub->add_flag("--non-degenerate", o.non_degenerate, "non-degenerate only");
      if (f == "jobs") sub->add_option("--jobs", o.jobs, "worker threads (default STYBE_JOBS or 1)");
      if (f == "filter") sub->add_option("--filter", o.filter, "all, tau_equivariant or central");
      if (f == "depth") sub->add_option("--depth", o.depth, "series depth");
      if (f == "max-order") sub->add_option("--max-order", o.max_order, "largest n, m checked");
      if (f == "series") sub->add_option("--series", o.series, "series operator JSON");
      if (f == "theta") sub->add_option("--theta", o.theta, "rational inhomogeneity (symbolic if absent)");
      if (f == "k0") sub->add_option("--k0", o.k0, "boundary matrix JSON");
      if (f == "k") sub->add_option("--k", o.kmatrix, "K matrix JSON");
      if (f == "map") sub->add_option("--map", o.map, "reflection map k(0) k(1) ...")->delimiter(',');
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Runner run(o);
    const Outcome outcome = dispatch(cmd, run);
    return run.finish(cmd, outcome, start);
  } catch (const StructuralError& e) {
    std::cerr << "stybe " << cmd << ": input error: " << e.what() << '\n';
  } catch (const Refusal& e) {
    std::cerr << "stybe " << cmd << ": refused: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "stybe " << cmd << ": " << e.what() << '\n';
  }
  return 2;
}
