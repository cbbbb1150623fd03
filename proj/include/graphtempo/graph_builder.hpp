#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphtempo/temporal_graph.hpp"

namespace graphtempo {

/// Mutable staging area for assembling a TemporalGraph from individual facts.
/// Node order follows first insertion; edges of undirected graphs are
/// canonicalized to (min, max) node index.
class GraphBuilder {
 public:
  GraphBuilder(TimeDomain time, bool directed);

  const TimeDomain& time() const noexcept { return time_; }

  /// Returns the index of `id`, adding the node if it is new.
  std::uint32_t add_node(std::string_view id);
  std::optional<std::uint32_t> find_node(std::string_view id) const;
  std::size_t node_count() const noexcept { return ids_.size(); }

  void set_present(std::uint32_t node, std::size_t t);
  /// Records that edge (source, target) exists at `t`; repeated calls are fine.
  void add_edge(std::uint32_t source, std::uint32_t target, std::size_t t);

  void declare_attribute(const std::string& name, AttributeKind kind);
  void set_static(const std::string& name, std::uint32_t node, std::string value);
  void set_varying(const std::string& name, std::uint32_t node, std::size_t t, std::string value);

  /// With `infer_node_presence`, every edge occurrence also marks its
  /// endpoints present. Throws ConsistencyError on invariant violations.
  TemporalGraph build(bool infer_node_presence = false) const;

 private:
  struct PendingAttribute {
    AttributeKind kind;
    std::map<std::pair<std::uint32_t, std::size_t>, std::string> values;
  };

  TimeDomain time_;
  bool directed_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<TimeMask> node_bits_;
  std::vector<EdgeEnds> edges_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> edge_index_;
  std::vector<TimeMask> edge_bits_;
  std::vector<std::string> attribute_order_;
  std::map<std::string, PendingAttribute> attributes_;
};

}  // namespace graphtempo
