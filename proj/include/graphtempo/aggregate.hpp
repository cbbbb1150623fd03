#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphtempo/temporal_graph.hpp"
#include "graphtempo/time_domain.hpp"

namespace graphtempo {

/// DIST counts each entity once per attribute tuple; ALL counts every
/// (entity, time point) appearance.
enum class AggMode { kDist, kAll };

std::string_view to_string(AggMode mode);
/// Accepts "dist" / "all" (any case); throws UsageError otherwise.
AggMode parse_agg_mode(std::string_view text);

/// Attribute values aligned with the aggregation attribute list. For pattern
/// aggregates the tuple holds `members` consecutive per-member tuples, sorted.
using AttrTuple = std::vector<std::string>;
using EdgeKey = std::pair<AttrTuple, AttrTuple>;

struct AggregateGraph {
  std::vector<std::string> attrs;
  AggMode mode = AggMode::kDist;
  /// Time points the aggregate was computed over; informational only.
  IntervalSet interval;
  bool directed = true;
  std::size_t members = 1;
  std::map<AttrTuple, std::uint64_t> nodes;
  std::map<EdgeKey, std::uint64_t> edges;

  std::uint64_t node_weight(const AttrTuple& key) const;
  std::uint64_t edge_weight(const AttrTuple& source, const AttrTuple& target) const;
  bool empty() const noexcept { return nodes.empty() && edges.empty(); }

  friend bool operator==(const AggregateGraph& a, const AggregateGraph& b) {
    return a.attrs == b.attrs && a.mode == b.mode && a.directed == b.directed && a.members == b.members &&
           a.nodes == b.nodes && a.edges == b.edges;
  }
};

/// Groups the nodes and edges present in `interval` by attribute tuple.
/// (u, t) pairs with a MISSING value in any attribute are not counted.
/// Edge keys of undirected graphs are ordered pairs with the smaller tuple
/// first. Throws UsageError for an empty or repeated attribute list,
/// LookupError for unknown attributes and IntervalError for an empty or
/// out-of-range interval.
AggregateGraph aggregate(const TemporalGraph& graph, const IntervalSet& interval,
                         const std::vector<std::string>& attrs, AggMode mode);

/// Same result as aggregate() for static attributes, computed from the
/// presence rows directly. Throws UsageError if any attribute varies with time.
AggregateGraph aggregate_static_fast(const TemporalGraph& graph, const IntervalSet& interval,
                                     const std::vector<std::string>& attrs, AggMode mode);

/// Splits "f|f|m", "f,f,m" or, for single-character values, "ffm" into a
/// key of `width` values. Throws UsageError when no reading fits.
AttrTuple parse_key(std::string_view text, std::size_t width);

/// Renders a key as values joined by ',' with members separated by '|'.
std::string render_key(const AttrTuple& key, std::size_t members);

}  // namespace graphtempo
