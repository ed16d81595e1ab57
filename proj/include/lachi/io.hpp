#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "lachi/harness.hpp"

namespace lachi {

using Json = nlohmann::ordered_json;

/// Labeling files larger than this are rejected.
inline constexpr std::size_t kMaxFileEdges = 10000;

// Edge list: one "u v" pair per line, 0-based, '#' starts a comment.
Graph read_edge_list(std::istream& in, std::string name = {});
Graph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Labeling: one "edge_index label" pair per line. The writer appends a
// "# colors:" comment block with one "# v=c" line per vertex; readers skip it.
EdgeLabeling read_labeling(std::istream& in, std::size_t edge_count);
EdgeLabeling read_labeling_file(const std::filesystem::path& path, std::size_t edge_count);
void write_labeling(std::ostream& out, const Graph& g, const EdgeLabeling& f);

Json to_json(const ColorProfile& p);
/// Accepts the to_json layout; members are optional. Validates the result.
ColorProfile profile_from_json(const Json& j);
Json to_json(const PredictedBounds& b);
Json to_json(const EdgeLabeling& f);
/// wall_time is in microseconds.
Json to_json(const SolverResult& r, std::int64_t wall_time_us);
Json to_json(const ExperimentReport& r);

/// FNV-1a 64 of the canonical edge list plus an operation tag, as 16 hex
/// digits. Edge-order sensitive because labelings are.
std::string instance_hash(const Graph& g, const std::string& operation);

}  // namespace lachi
