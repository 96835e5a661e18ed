#include "ij/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "ij/errors.hpp"
#include "ij/random.hpp"

namespace ij {

namespace {

std::string_view strip(std::string_view s) {
  const auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::map<Point, std::size_t> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = strip(line);
    if (body.empty()) continue;
    std::istringstream fields{std::string(body)};
    std::string xs, ys, extra;
    Point p;
    if (!(fields >> xs >> ys) || (fields >> extra) || !parse_number(xs, p.x) ||
        !parse_number(ys, p.y))
      throw ValidationError("line " + std::to_string(lineno) + ": expected two integers");
    const auto [it, fresh] = seen.emplace(p, lineno);
    if (!fresh)
      throw ValidationError("line " + std::to_string(lineno) + ": duplicate of the point on line " +
                            std::to_string(it->second));
    pts.push_back(p);
  }
  return pts;
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return parse_points(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_points(std::ostream& out, std::span<const Point> pts) {
  for (const Point& p : pts) out << p.x << ' ' << p.y << '\n';
}

Island parse_island(std::string_view text) {
  std::vector<Index> members;
  text = strip(text);
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view field = strip(text.substr(0, comma));
    Index v = 0;
    if (!parse_number(field, v) || v < 0)
      throw ValidationError("bad island member '" + std::string(field) + "'");
    members.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (members.empty()) throw ValidationError("empty island");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw ValidationError("island lists a member twice");
  return Island(std::move(members));
}

std::string format_island(const Island& island) {
  std::string s;
  for (std::size_t i = 0; i < island.members.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(island.members[i]);
  }
  return s;
}

std::vector<Island> parse_islands(std::istream& in) {
  std::vector<Island> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty()) continue;
    try {
      out.push_back(parse_island(line));
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_islands(std::ostream& out, std::span<const Island> islands) {
  for (const Island& s : islands) out << format_island(s) << '\n';
}

void write_dot(std::ostream& out, const IslandGraph& g) {
  out << "graph IJ {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << "  " << v << " [label=\"{" << format_island(g.vertices[v]) << "}\"];\n";
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (int w : g.adjacency[u])
      if (static_cast<std::size_t>(w) > u) out << "  " << u << " -- " << w << ";\n";
  out << "}\n";
}

void write_edge_list(std::ostream& out, const IslandGraph& g) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (int w : g.adjacency[u])
      if (static_cast<std::size_t>(w) > u) out << u << ' ' << w << '\n';
}

Json provenance(std::uint64_t seed) {
  return {{"tool", tool_name}, {"version", tool_version}, {"seed", seed},
          {"generator", SplitMix64::name}};
}

Json to_json(const Island& island) { return island.members; }

Json to_json(const GraphReport& r) {
  Json j{{"vertices", r.vertices},
         {"edges", r.edges},
         {"components", r.component_sizes.size()},
         {"component_sizes", r.component_sizes},
         {"connected", r.component_sizes.size() <= 1},
         {"min_degree", r.min_degree},
         {"max_degree", r.max_degree},
         {"mean_degree", r.mean_degree}};
  if (r.diameter) j["diameter"] = *r.diameter;
  if (!r.component_diameters.empty()) j["component_diameters"] = r.component_diameters;
  if (r.clique) j["clique_number"] = *r.clique;
  if (r.clique_lower_bound) j["clique_lower_bound"] = *r.clique_lower_bound;
  return j;
}

Json graph_to_json(const IslandGraph& g) {
  Json vertices = Json::array();
  for (const Island& s : g.vertices) vertices.push_back(to_json(s));
  Json edges = Json::array();
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (int w : g.adjacency[u])
      if (static_cast<std::size_t>(w) > u) edges.push_back({u, w});
  return {{"k", g.k}, {"l", g.l}, {"vertices", vertices}, {"edges", edges}};
}

Json to_json(const PathTrace& t, const PathValidation& v, const std::vector<bool>& step_ok) {
  Json vertices = Json::array();
  for (const Island& s : t.vertices) vertices.push_back(to_json(s));
  Json moves = Json::array();
  for (MoveKind m : t.moves) moves.push_back(to_string(m));
  Json divergences = Json::array();
  for (const auto& d : t.log.divergences)
    divergences.push_back({{"stage", d.stage}, {"detail", d.detail}, {"at", to_json(d.at)}});
  Json j{{"length", t.length()},
         {"vertices", vertices},
         {"moves", moves},
         {"step_valid", step_ok},
         {"valid", v.ok},
         {"halving_rounds", t.halving_rounds},
         {"recipe_retries", t.log.recipe_retries},
         {"divergences", divergences}};
  if (!v.ok) {
    j["failure"] = {{"reason", v.reason}};
    if (v.failed_at) j["failure"]["index"] = *v.failed_at;
  }
  return j;
}

Json to_json(const LowerBoundReport& r) {
  Json j{{"vertices", r.vertices},
         {"max_depth", r.max_depth},
         {"predicted_max_depth", r.predicted_max_depth},
         {"alternative_max_depth", r.alternative_max_depth},
         {"depth_flag", r.depth_flag},
         {"gap_bound", r.gap_bound},
         {"certified_floor", r.certified_floor},
         {"deep", to_json(r.deep)},
         {"shallow_islands", r.shallow_islands},
         {"unreachable_shallow", r.unreachable_shallow},
         {"holds", r.holds}};
  if (r.distance) {
    j["distance"] = *r.distance;
    j["shallow"] = to_json(r.shallow);
  }
  return j;
}

Json to_json(const DepthGapReport& r) {
  return {{"vertices", r.vertices}, {"edges", r.edges},       {"max_gap", r.max_gap},
          {"bound", r.bound},       {"violations", r.violations}, {"holds", r.violations == 0}};
}

std::vector<bool> step_flags(const PointSet& pts, const PathTrace& trace, std::size_t k,
                             std::size_t l) {
  std::vector<bool> ok(trace.vertices.size());
  for (std::size_t i = 0; i < trace.vertices.size(); ++i) {
    const Island& v = trace.vertices[i];
    bool good = v.k() == k && std::all_of(v.members.begin(), v.members.end(), [&](Index m) {
                  return m >= 0 && static_cast<std::size_t>(m) < pts.size();
                }) && is_island(pts, v);
    if (good && i > 0) good = intersection_size(trace.vertices[i - 1], v) == l;
    ok[i] = good;
  }
  return ok;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ij
