#include "graphtempo/temporal_ops.hpp"

#include "graphtempo/errors.hpp"

namespace graphtempo {

Side any_of(const IntervalSet& points, std::size_t n) { return {points.mask(n), Quantifier::kAny}; }

Side all_of(const IntervalSet& points, std::size_t n) { return {points.mask(n), Quantifier::kAll}; }

TimeMask retained_points(SetOp op, const Side& a, const Side& b) {
  if (op == SetOp::kDifference) return a.points;
  return a.points | b.points;
}

TemporalGraph combine(const TemporalGraph& graph, SetOp op, const Side& a, const Side& b) {
  const std::size_t n = graph.time_points();
  if (a.points.size() != n || b.points.size() != n) {
    throw IntervalError("operator sides do not match the time domain");
  }
  auto keep = [&](BitRow presence) {
    const bool in_a = a.holds(presence);
    switch (op) {
      case SetOp::kUnion: return in_a || b.holds(presence);
      case SetOp::kIntersection: return in_a && b.holds(presence);
      case SetOp::kDifference: return in_a && !b.holds(presence);
    }
    return false;
  };
  const TimeMask retained = retained_points(op, a, b);

  std::vector<char> node_kept(graph.node_count(), 0);
  for (std::size_t u = 0; u < graph.node_count(); ++u) node_kept[u] = keep(graph.node_presence(u)) ? 1 : 0;

  std::vector<std::uint32_t> kept_edges;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const BitRow bits = graph.edge_presence(e);
    if (!keep(bits) || !bits.intersects(retained)) continue;
    kept_edges.push_back(static_cast<std::uint32_t>(e));
    if (op == SetOp::kDifference) {
      node_kept[graph.edge(e).source] = 1;
      node_kept[graph.edge(e).target] = 1;
    }
  }

  std::vector<std::uint32_t> kept_nodes;
  std::vector<std::uint32_t> remap(graph.node_count(), 0);
  std::vector<std::string> ids;
  PresenceMatrix nodes(n);
  for (std::size_t u = 0; u < graph.node_count(); ++u) {
    if (!node_kept[u] || !graph.node_presence(u).intersects(retained)) continue;
    remap[u] = static_cast<std::uint32_t>(kept_nodes.size());
    kept_nodes.push_back(static_cast<std::uint32_t>(u));
    ids.push_back(graph.node_id(u));
    nodes.append_masked(graph.node_presence(u), retained);
  }

  std::vector<EdgeEnds> ends;
  PresenceMatrix edges(n);
  for (std::uint32_t e : kept_edges) {
    const EdgeEnds original = graph.edge(e);
    ends.push_back({remap[original.source], remap[original.target]});
    edges.append_masked(graph.edge_presence(e), retained);
  }

  AttributeCatalog attributes;
  for (const auto& column : graph.attributes().columns()) {
    attributes.add(column.restrict_rows(kept_nodes, nodes));
  }
  return TemporalGraph(graph.time(), std::move(ids), std::move(nodes), std::move(ends), std::move(edges),
                       std::move(attributes), graph.directed(), graph.arity());
}

TemporalGraph project(const TemporalGraph& graph, const Interval& interval) {
  const std::size_t n = graph.time_points();
  const Side side = all_of(IntervalSet{interval}, n);
  return combine(graph, SetOp::kUnion, side, Side{TimeMask(n), Quantifier::kAny});
}

TemporalGraph apply(const TemporalGraph& graph, SetOp op, const IntervalSet& t1, const IntervalSet& t2) {
  const std::size_t n = graph.time_points();
  return combine(graph, op, any_of(t1, n), any_of(t2, n));
}

TemporalGraph temporal_union(const TemporalGraph& graph, const IntervalSet& t1, const IntervalSet& t2) {
  return apply(graph, SetOp::kUnion, t1, t2);
}

TemporalGraph temporal_intersection(const TemporalGraph& graph, const IntervalSet& t1, const IntervalSet& t2) {
  return apply(graph, SetOp::kIntersection, t1, t2);
}

TemporalGraph temporal_difference(const TemporalGraph& graph, const IntervalSet& t1, const IntervalSet& t2) {
  return apply(graph, SetOp::kDifference, t1, t2);
}

}  // namespace graphtempo
