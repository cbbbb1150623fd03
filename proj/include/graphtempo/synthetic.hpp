#pragma once

#include <cstddef>
#include <cstdint>

#include "graphtempo/temporal_graph.hpp"

namespace graphtempo {

/// Community-structured random graph for benchmarks. Edges are drawn inside
/// communities so that triangles occur; each edge exists at every time point
/// with probability `presence` (and at least once). Nodes carry a static
/// `gender` (f/m), a static `group` (a/b/c) and a time-varying `level` (1..3).
struct SyntheticOptions {
  std::size_t nodes = 4000;
  std::size_t communities = 200;
  std::size_t edges = 10000;
  std::size_t points = 8;
  double presence = 0.4;
  std::uint64_t seed = 42;
  bool directed = true;
};

TemporalGraph make_synthetic_graph(const SyntheticOptions& options);

}  // namespace graphtempo
