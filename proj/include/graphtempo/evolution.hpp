#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "graphtempo/aggregate.hpp"
#include "graphtempo/temporal_graph.hpp"

namespace graphtempo {

/// Evolution labels: stability (S), growth (G) and shrinkage (R).
enum EvolutionLabel : std::uint8_t { kStable = 1, kGrown = 2, kShrunk = 4 };

struct EvolutionGraph {
  TemporalGraph stable;  // intersection(Told, Tnew)
  TemporalGraph shrink;  // difference(Told, Tnew)
  TemporalGraph grow;    // difference(Tnew, Told)
  /// Bitwise-or of EvolutionLabel values per node id / (source, target) id pair.
  std::map<std::string, std::uint8_t> node_labels;
  std::map<std::pair<std::string, std::string>, std::uint8_t> edge_labels;
};

EvolutionGraph evolution_graph(const TemporalGraph& graph, const IntervalSet& t_old, const IntervalSet& t_new);

struct EventWeights {
  std::uint64_t stability = 0;
  std::uint64_t growth = 0;
  std::uint64_t shrinkage = 0;

  std::uint64_t total() const noexcept { return stability + growth + shrinkage; }
  friend bool operator==(const EventWeights&, const EventWeights&) = default;
};

struct AggregateEvolutionGraph {
  std::vector<std::string> attrs;
  AggMode mode = AggMode::kDist;
  bool directed = true;
  std::size_t members = 1;
  std::map<AttrTuple, EventWeights> nodes;
  std::map<EdgeKey, EventWeights> edges;

  EventWeights node(const AttrTuple& key) const;
  EventWeights edge(const AttrTuple& source, const AttrTuple& target) const;
};

enum class EvolutionPattern { kNone, kTriangle };

/// Aggregated evolution with one weight triple per key:
///   S  entities existing on both sides, counted for a key only when the
///      entity carries that key on both sides (ALL: each appearance of such
///      a key in Told or Tnew)
///   G  nodes that appear only in Tnew, edges of difference(Tnew, Told)
///   R  nodes that exist only in Told, edges of difference(Told, Tnew)
/// Nodes that a difference graph keeps only as endpoints of changed edges
/// carry no node event of their own. With kTriangle the tri-graph of G over
/// Told and Tnew is built first and evolution is computed on it.
AggregateEvolutionGraph aggregate_evolution(const TemporalGraph& graph, const IntervalSet& t_old,
                                            const IntervalSet& t_new, const std::vector<std::string>& attrs,
                                            AggMode mode, EvolutionPattern pattern = EvolutionPattern::kNone);

}  // namespace graphtempo
