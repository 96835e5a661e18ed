// ijtool: command-line front end for the island Johnson graph library.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "ij/errors.hpp"
#include "ij/io.hpp"
#include "ij/random.hpp"
#include "ij/suites.hpp"

namespace {

using namespace ij;

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kCheckFailed = 3, kResourceCap = 4 };

struct Options {
  std::string in = "-";
  std::string out = "-";
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::uint64_t seed = 1;
  std::string shape = "random-disk";
  std::string method = "shrink";
  std::string suite;
  std::string format;
  std::string from, to;
  std::string route = "constructive";
  bool clique = false;
  bool count_only = false;
  bool no_diameter = false;
  std::size_t clique_budget = 10'000'000;
  std::size_t samples = 0;
  ResourceCaps caps;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ValidationError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

PointSet load(const Options& o) {
  if (o.in == "-") return PointSet(parse_points(std::cin));
  return PointSet(read_points_file(o.in));
}

Json header(const Options& o, std::string_view command) {
  return {{"command", command}, {"provenance", provenance(o.seed)}};
}

int cmd_gen(const Options& o) {
  const Shape shape = parse_shape(o.shape);
  const auto pts = generate_points(shape, o.n, o.seed);
  Output out(o.out);
  out.stream() << "# " << tool_name << ' ' << tool_version << " shape=" << to_string(shape)
               << " n=" << o.n << " seed=" << o.seed << " generator=" << SplitMix64::name << '\n';
  write_points(out.stream(), pts);
  return kOk;
}

int cmd_islands(const Options& o) {
  const PointSet pts = load(o);
  const IslandList list = enumerate_islands(pts, o.k, o.caps);
  Output out(o.out);
  if (o.format == "json") {
    Json j = header(o, "islands");
    j["k"] = o.k;
    j["n"] = pts.size();
    j["count"] = list.islands.size();
    if (!o.count_only) {
      Json all = Json::array();
      for (const Island& s : list.islands) all.push_back(to_json(s));
      j["islands"] = all;
    }
    out.stream() << dump(j);
  } else if (o.count_only) {
    out.stream() << list.islands.size() << '\n';
  } else {
    write_islands(out.stream(), list.islands);
  }
  return kOk;
}

int cmd_graph(const Options& o) {
  const PointSet pts = load(o);
  const IslandGraph g = build_island_graph(pts, o.k, o.l, o.caps);
  Output out(o.out);
  if (o.format == "json") {
    Json j = header(o, "graph");
    j["graph"] = graph_to_json(g);
    out.stream() << dump(j);
  } else if (o.format == "edgelist") {
    write_edge_list(out.stream(), g);
  } else {
    write_dot(out.stream(), g);
  }
  return kOk;
}

int cmd_analyze(const Options& o) {
  const PointSet pts = load(o);
  const IslandGraph g = build_island_graph(pts, o.k, o.l, o.caps);
  ReportOptions ro;
  ro.with_clique = o.clique;
  ro.with_diameter = !o.no_diameter;
  ro.clique_budget = o.clique_budget;
  Json j = header(o, "analyze");
  j["n"] = pts.size();
  j["k"] = o.k;
  j["l"] = o.l;
  j["report"] = to_json(analyze_graph(g, ro));
  Output out(o.out);
  out.stream() << dump(j);
  return kOk;
}

int cmd_path(const Options& o) {
  const PointSet pts = load(o);
  const Island from = parse_island(o.from);
  const Island to = parse_island(o.to);
  if (o.l >= o.k) throw ParameterError("path: need l < k");
  for (const Island* s : {&from, &to}) {
    if (s->k() != o.k) throw ValidationError("path: island {" + format_island(*s) + "} does not have k members");
    if (s->members.back() >= static_cast<Index>(pts.size()))
      throw ValidationError("path: island {" + format_island(*s) + "} indexes past the point set");
    if (!is_island(pts, *s)) throw NotAnIsland("path: {" + format_island(*s) + "} is not an island");
  }

  PathTrace trace;
  if (o.method == "bfs") {
    const IslandGraph g = build_island_graph(pts, o.k, o.l, o.caps);
    for (int v : shortest_path(g, g.find(from), g.find(to)))
      trace.vertices.push_back(g.vertices[static_cast<std::size_t>(v)]);
    trace.moves.assign(trace.length(), MoveKind::Bfs);
  } else if (o.method == "shrink") {
    trace = theorem1_path(pts, from, to, o.l,
                          o.route == "shortest" ? ProjectableRoute::Shortest
                                                : ProjectableRoute::Constructive);
  } else if (o.method == "logdc") {
    trace = log_path(pts, from, to, o.l);
  } else {
    throw ParameterError("unknown method '" + o.method + "'");
  }

  const PathValidation v = validate_path(pts, trace, o.k, o.l);
  Json j = header(o, "path");
  j["method"] = o.method;
  j["n"] = pts.size();
  j["k"] = o.k;
  j["l"] = o.l;
  j["trace"] = to_json(trace, v, step_flags(pts, trace, o.k, o.l));
  if (o.method == "shrink") j["length_bound"] = theorem1_length_bound(pts.size(), o.k, o.l);
  if (o.method == "logdc") j["halving_round_bound"] = halving_round_bound(pts.size(), o.k, o.l);
  Output out(o.out);
  out.stream() << dump(j);
  return v.ok && trace.log.divergences.empty() ? kOk : kCheckFailed;
}

int cmd_horton_gen(const Options& o) {
  const HortonSet h = generate_horton(o.n);
  Output out(o.out);
  out.stream() << "# " << tool_name << ' ' << tool_version << " shape=horton n=" << o.n << '\n';
  write_points(out.stream(), h.points.points());
  return kOk;
}

int cmd_horton_verify(const Options& o) {
  std::vector<Point> pts;
  if (o.n > 0) {
    const HortonSet h = generate_horton(o.n);
    pts.assign(h.points.points().begin(), h.points.points().end());
  } else {
    pts = o.in == "-" ? parse_points(std::cin) : read_points_file(o.in);
  }
  const bool ok = verify_horton(pts);
  Json j = header(o, "horton-verify");
  j["n"] = pts.size();
  j["horton"] = ok;
  Output out(o.out);
  out.stream() << dump(j);
  return ok ? kOk : kCheckFailed;
}

int cmd_horton_depth(const Options& o) {
  const HortonSet h = generate_horton(o.n);
  Json depths = Json::array();
  for (std::size_t lab = 1; lab <= o.n; ++lab) depths.push_back(point_depth(lab));
  Json lifts = Json::array();
  for (const auto& level : h.lifts) lifts.push_back(level);
  Json j = header(o, "horton-depth");
  j["n"] = o.n;
  j["depths"] = depths;
  j["lifts"] = lifts;
  if (!o.from.empty()) {
    const Island s = parse_island(o.from);
    if (s.members.back() >= static_cast<Index>(o.n)) throw ValidationError("horton depth: island indexes past n");
    j["island"] = {{"members", to_json(s)}, {"depth", island_depth(s)},
                   {"is_island", is_island(h.points, s)}};
  }
  Output out(o.out);
  out.stream() << dump(j);
  return kOk;
}

int cmd_verify(const Options& o, const std::vector<std::string>& flags_set) {
  SuiteOptions so;
  so.seed = o.seed;
  so.samples = o.samples;
  so.caps = o.caps;
  auto given = [&](const char* name) {
    return std::find(flags_set.begin(), flags_set.end(), name) != flags_set.end();
  };
  if (given("n")) so.n = o.n;
  if (given("k")) so.k = o.k;
  if (given("l")) so.l = o.l;

  std::vector<std::string_view> names;
  if (o.suite == "all") names.assign(suite_names().begin(), suite_names().end());
  else names.push_back(o.suite);

  Json reports = Json::array();
  bool ok = true;
  for (std::string_view name : names) {
    SuiteResult r = run_suite(name, so);
    ok = ok && r.passed && r.divergences == 0;
    reports.push_back(std::move(r.report));
  }
  Json j = header(o, "verify");
  j["suites"] = reports;
  j["passed"] = ok;
  Output out(o.out);
  out.stream() << dump(j);
  return ok ? kOk : kCheckFailed;
}

void add_caps(CLI::App* app, Options& o) {
  app->add_option("--cap-vertices", o.caps.max_vertices, "Refuse graphs with more vertices");
  app->add_option("--cap-pairs", o.caps.max_pairs, "Refuse builds needing more pair or subset tests");
}

int run(int argc, char** argv) {
  Options o;
  CLI::App app{"Generalized island Johnson graphs of planar point sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version));

  auto in_opt = [&](CLI::App* c) { c->add_option("--in", o.in, "Point file ('-' for stdin)"); };
  auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "Output file ('-' for stdout)"); };
  auto kl_opt = [&](CLI::App* c, bool with_l) {
    c->add_option("--k", o.k, "Island size")->required();
    if (with_l) c->add_option("--l", o.l, "Exact intersection size")->required();
  };

  auto* gen = app.add_subcommand("gen", "Generate a point set");
  gen->add_option("--shape", o.shape, "random-disk, convex or horton")
      ->check(CLI::IsMember({"random-disk", "convex", "horton"}));
  gen->add_option("--n", o.n, "Number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Seed");
  out_opt(gen);

  auto* islands = app.add_subcommand("islands", "Enumerate or count the k-islands");
  in_opt(islands);
  out_opt(islands);
  kl_opt(islands, false);
  islands->add_flag("--count", o.count_only, "Print only the number of islands");
  islands->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_caps(islands, o);

  auto* graph = app.add_subcommand("graph", "Build IJ(P,k,l) and export it");
  in_opt(graph);
  out_opt(graph);
  kl_opt(graph, true);
  graph->add_option("--format", o.format, "dot, edgelist or json")
      ->check(CLI::IsMember({"dot", "edgelist", "json"}));
  add_caps(graph, o);

  auto* analyze = app.add_subcommand("analyze", "Components, degrees, diameter and clique number");
  in_opt(analyze);
  out_opt(analyze);
  kl_opt(analyze, true);
  analyze->add_flag("--clique", o.clique, "Compute the clique number");
  analyze->add_option("--clique-budget", o.clique_budget, "Search-node budget for the clique solver");
  analyze->add_flag("--no-diameter", o.no_diameter, "Skip the all-pairs BFS");
  analyze->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));
  add_caps(analyze, o);

  auto* path = app.add_subcommand("path", "Path between two k-islands");
  in_opt(path);
  out_opt(path);
  kl_opt(path, true);
  path->add_option("--from", o.from, "Source island, e.g. 0,1,3")->required();
  path->add_option("--to", o.to, "Target island")->required();
  path->add_option("--method", o.method, "bfs, shrink or logdc")
      ->check(CLI::IsMember({"bfs", "shrink", "logdc"}));
  path->add_option("--route", o.route, "Projectable segment for shrink: constructive or shortest")
      ->check(CLI::IsMember({"constructive", "shortest"}));
  path->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));
  add_caps(path, o);

  auto* horton = app.add_subcommand("horton", "Horton sets");
  horton->require_subcommand(1);
  auto* hgen = horton->add_subcommand("gen", "Generate a Horton set");
  hgen->add_option("--n", o.n, "Number of points")->required()->check(CLI::PositiveNumber);
  out_opt(hgen);
  auto* hverify = horton->add_subcommand("verify", "Check the recursive high-above property");
  hverify->add_option("--n", o.n, "Verify the generated set of this size")->check(CLI::PositiveNumber);
  in_opt(hverify);
  out_opt(hverify);
  auto* hdepth = horton->add_subcommand("depth", "Depth profile of a generated Horton set");
  hdepth->add_option("--n", o.n, "Number of points")->required()->check(CLI::PositiveNumber);
  hdepth->add_option("--island", o.from, "Also report the depth of this island");
  out_opt(hdepth);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites{"all"};
  for (auto s : suite_names()) suites.emplace_back(s);
  verify->add_option("--suite", o.suite, "Suite name or 'all'")->required()->check(CLI::IsMember(suites));
  verify->add_option("--seed", o.seed, "Base seed");
  verify->add_option("--n", o.n, "Restrict to this n");
  verify->add_option("--k", o.k, "Restrict to this k");
  verify->add_option("--l", o.l, "Restrict to this l");
  verify->add_option("--samples", o.samples, "Point sets per cell");
  out_opt(verify);
  add_caps(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if ((graph->parsed() || analyze->parsed() || path->parsed()) && o.l >= o.k) {
    std::cerr << "error: need l < k\n";
    return kUsage;
  }
  if (*gen) return cmd_gen(o);
  if (*islands) return cmd_islands(o);
  if (*graph) return cmd_graph(o);
  if (*analyze) return cmd_analyze(o);
  if (*path) return cmd_path(o);
  if (*hgen) return cmd_horton_gen(o);
  if (*hverify) {
    if (o.n == 0 && hverify->count("--in") == 0) {
      std::cerr << "error: horton verify needs --n or --in\n";
      return kUsage;
    }
    return cmd_horton_verify(o);
  }
  if (*hdepth) return cmd_horton_depth(o);
  if (*verify) {
    std::vector<std::string> given;
    for (const char* name : {"n", "k", "l"})
      if (verify->count(std::string("--") + name)) given.emplace_back(name);
    return cmd_verify(o, given);
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ij::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ij::ResourceCapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ij::BudgetExceeded& e) {
    std::cerr << "resource cap: " << e.what() << " (best so far " << e.lower_bound() << ")\n";
    return kResourceCap;
  } catch (const ij::Unreachable& e) {
    std::cerr << "unreachable: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const ij::VerificationFailure& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const ij::Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  }
}
