#include "graphtempo/graph_builder.hpp"

#include "graphtempo/errors.hpp"

namespace graphtempo {

GraphBuilder::GraphBuilder(TimeDomain time, bool directed) : time_(std::move(time)), directed_(directed) {
  if (time_.size() == 0) throw UsageError("time domain must contain at least one time point");
}

std::uint32_t GraphBuilder::add_node(std::string_view id) {
  const auto [it, inserted] = index_.emplace(std::string(id), static_cast<std::uint32_t>(ids_.size()));
  if (inserted) {
    ids_.emplace_back(id);
    node_bits_.emplace_back(time_.size());
  }
  return it->second;
}

std::optional<std::uint32_t> GraphBuilder::find_node(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void GraphBuilder::set_present(std::uint32_t node, std::size_t t) {
  node_bits_.at(node).set(t);
}

void GraphBuilder::add_edge(std::uint32_t source, std::uint32_t target, std::size_t t) {
  if (source >= ids_.size() || target >= ids_.size()) throw UsageError("edge endpoint is not a node");
  if (t >= time_.size()) throw IntervalError("time index outside the time domain");
  if (!directed_ && source > target) std::swap(source, target);
  const auto [it, inserted] =
      edge_index_.emplace(std::make_pair(source, target), static_cast<std::uint32_t>(edges_.size()));
  if (inserted) {
    edges_.push_back({source, target});
    edge_bits_.emplace_back(time_.size());
  }
  edge_bits_[it->second].set(t);
}

void GraphBuilder::declare_attribute(const std::string& name, AttributeKind kind) {
  const auto [it, inserted] = attributes_.emplace(name, PendingAttribute{kind, {}});
  if (inserted) {
    attribute_order_.push_back(name);
  } else if (it->second.kind != kind) {
    throw ConsistencyError("attribute '" + name + "' declared both static and time-varying");
  }
}

void GraphBuilder::set_static(const std::string& name, std::uint32_t node, std::string value) {
  declare_attribute(name, AttributeKind::kStatic);
  attributes_.at(name).values[{node, 0}] = std::move(value);
}

void GraphBuilder::set_varying(const std::string& name, std::uint32_t node, std::size_t t, std::string value) {
  declare_attribute(name, AttributeKind::kVarying);
  attributes_.at(name).values[{node, t}] = std::move(value);
}

TemporalGraph GraphBuilder::build(bool infer_node_presence) const {
  const std::size_t n = time_.size();
  std::vector<TimeMask> node_bits = node_bits_;
  if (infer_node_presence) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      node_bits[edges_[e].source] |= edge_bits_[e];
      node_bits[edges_[e].target] |= edge_bits_[e];
    }
  }
  PresenceMatrix nodes(n);
  for (const auto& bits : node_bits) nodes.append_row(bits);
  PresenceMatrix edges(n);
  for (const auto& bits : edge_bits_) edges.append_row(bits);

  AttributeCatalog catalog;
  for (const auto& name : attribute_order_) {
    const PendingAttribute& pending = attributes_.at(name);
    const bool is_static = pending.kind == AttributeKind::kStatic;
    std::vector<std::optional<std::string>> cells(is_static ? ids_.size() : ids_.size() * n);
    for (const auto& [where, value] : pending.values) {
      const auto [node, t] = where;
      if (is_static) {
        cells[node] = value;
        continue;
      }
      if (!node_bits[node].test(t)) {
        throw ConsistencyError("attribute '" + name + "' has a value for node '" + ids_[node] + "' at '" +
                               time_.label(t) + "' where the node is absent");
      }
      cells[node * n + t] = value;
    }
    catalog.add(AttributeColumn::from_values(name, pending.kind, cells, ids_.size(), n));
  }
  return TemporalGraph(time_, ids_, std::move(nodes), edges_, std::move(edges), std::move(catalog), directed_);
}

}  // namespace graphtempo
