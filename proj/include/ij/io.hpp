#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ij/horton.hpp"
#include "ij/paths.hpp"

namespace ij {

inline constexpr std::string_view tool_name = "ijtool";
inline constexpr std::string_view tool_version = "1.0.0";

using Json = nlohmann::json;

// Two integers per line; blank lines and '#' comments are skipped. Throws
// ValidationError naming the line for malformed input and repeated points.
std::vector<Point> parse_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);
void write_points(std::ostream& out, std::span<const Point> pts);

// "0,1,3" -> {0,1,3}; members are sorted, repeats rejected.
Island parse_island(std::string_view text);
std::string format_island(const Island& island);

// One island per line in the format above.
std::vector<Island> parse_islands(std::istream& in);
void write_islands(std::ostream& out, std::span<const Island> islands);

void write_dot(std::ostream& out, const IslandGraph& g);
void write_edge_list(std::ostream& out, const IslandGraph& g);

Json provenance(std::uint64_t seed);

Json to_json(const Island& island);
Json to_json(const GraphReport& report);
Json graph_to_json(const IslandGraph& g);
Json to_json(const PathTrace& trace, const PathValidation& validation,
             const std::vector<bool>& step_ok);
Json to_json(const LowerBoundReport& report);
Json to_json(const DepthGapReport& report);

// Per-vertex validity of a trace: vertex i is a k-island and, for i > 0,
// meets vertex i-1 in exactly l points.
std::vector<bool> step_flags(const PointSet& pts, const PathTrace& trace, std::size_t k,
                             std::size_t l);

// Deterministic serialisation used for every report: sorted keys, two-space
// indent, trailing newline.
std::string dump(const Json& j);

}  // namespace ij
