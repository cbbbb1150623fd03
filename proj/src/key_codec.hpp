#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphtempo/aggregate.hpp"
#include "graphtempo/temporal_graph.hpp"

namespace graphtempo::detail {

using Key = std::vector<std::int32_t>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::int32_t v : key) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using KeyCounts = std::unordered_map<Key, std::uint64_t, KeyHash>;

/// Reads dictionary-coded attribute tuples of nodes and edges. Pattern
/// members are sorted so that member order never matters.
class KeyReader {
 public:
  KeyReader(const TemporalGraph& graph, const std::vector<std::string>& attrs);

  const TemporalGraph& graph() const noexcept { return *graph_; }
  std::size_t width() const noexcept { return columns_.size() * arity_; }
  bool all_static() const noexcept { return all_static_; }

  /// False when some value is MISSING at (u, t).
  bool read(std::uint32_t u, std::size_t t, Key& out) const;
  /// Concatenated endpoint keys, canonically ordered for undirected graphs.
  bool read_edge(EdgeEnds ends, std::size_t t, Key& out) const;

  AttrTuple decode(const Key& key, std::size_t offset) const;
  AggregateGraph finish(const KeyCounts& nodes, const KeyCounts& edges, const std::vector<std::string>& attrs,
                        AggMode mode, IntervalSet interval) const;

 private:
  const TemporalGraph* graph_;
  std::vector<const AttributeColumn*> columns_;
  std::size_t arity_;
  bool all_static_;
  mutable Key scratch_;
};

/// Rejects empty or repeated attribute lists.
void check_attrs(const std::vector<std::string>& attrs);

}  // namespace graphtempo::detail
