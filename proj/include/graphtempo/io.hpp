#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphtempo/temporal_graph.hpp"

namespace graphtempo {

/// Input files for load_temporal_graph.
///
///   edges:     `source,target,time`, one row per (edge, time point)
///   static:    `id,<attr>,...`
///   varying:   one file per attribute, `id,<time label>,...`; "-" is MISSING
///   presence:  `id,<time label>,...` with 0/1 cells
struct LoadOptions {
  std::filesystem::path edges;
  std::optional<std::filesystem::path> static_attributes;
  std::vector<std::pair<std::string, std::filesystem::path>> varying;
  std::optional<std::filesystem::path> node_presence;
  bool directed = true;
};

/// Time order comes from the presence header, else the first varying file's
/// header, else the distinct edge labels (numeric when all are integers,
/// lexicographic otherwise). Without a presence file a node is present
/// exactly where it has an incident edge.
TemporalGraph load_temporal_graph(const LoadOptions& options);

/// Writes edges.csv, presence.csv, static.csv (when there are static
/// attributes) and <attr>.csv per time-varying attribute into `directory`,
/// and returns the options that load them back.
LoadOptions export_temporal_graph(const TemporalGraph& graph, const std::filesystem::path& directory);

}  // namespace graphtempo
