#include "oracles.hpp"

#include <algorithm>
#include <tuple>

namespace graphtempo::testing {

Points points_of(const IntervalSet& set) {
  Points out;
  for (const Interval& i : set.intervals()) {
    for (std::size_t t = i.start; t <= i.end; ++t) out.insert(t);
  }
  return out;
}

Points node_times(const TemporalGraph& graph, std::size_t u) {
  Points out;
  for (std::size_t t = 0; t < graph.time_points(); ++t) {
    if (graph.node_presence(u).test(t)) out.insert(t);
  }
  return out;
}

Points edge_times(const TemporalGraph& graph, std::size_t e) {
  Points out;
  for (std::size_t t = 0; t < graph.time_points(); ++t) {
    if (graph.edge_presence(e).test(t)) out.insert(t);
  }
  return out;
}

Entities entities_of(const TemporalGraph& graph) {
  Entities out;
  for (const auto& id : graph.node_ids()) out.nodes.insert(id);
  for (const EdgeEnds& e : graph.edge_list()) out.edges.insert({graph.node_id(e.source), graph.node_id(e.target)});
  return out;
}

namespace {

bool meets(const Points& times, const Points& side) {
  return std::any_of(side.begin(), side.end(), [&](std::size_t t) { return times.count(t) > 0; });
}

}  // namespace

Entities oracle_operator(const TemporalGraph& graph, OracleOp op, const Points& t1, const Points& t2) {
  Entities out;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Points times = edge_times(graph, e);
    const bool in1 = meets(times, t1);
    const bool in2 = meets(times, t2);
    const bool keep = op == OracleOp::kUnion ? (in1 || in2) : op == OracleOp::kIntersection ? (in1 && in2)
                                                                                              : (in1 && !in2);
    if (keep) out.edges.insert({graph.node_id(graph.edge(e).source), graph.node_id(graph.edge(e).target)});
  }
  for (std::size_t u = 0; u < graph.node_count(); ++u) {
    const Points times = node_times(graph, u);
    const bool in1 = meets(times, t1);
    const bool in2 = meets(times, t2);
    bool keep = op == OracleOp::kUnion ? (in1 || in2) : op == OracleOp::kIntersection ? (in1 && in2)
                                                                                       : (in1 && !in2);
    if (op == OracleOp::kDifference && in1) {
      for (const auto& [s, t] : out.edges) keep = keep || s == graph.node_id(u) || t == graph.node_id(u);
    }
    if (keep) out.nodes.insert(graph.node_id(u));
  }
  return out;
}

Entities oracle_project(const TemporalGraph& graph, std::size_t start, std::size_t end) {
  auto covers = [&](const Points& times) {
    for (std::size_t t = start; t <= end; ++t) {
      if (times.count(t) == 0) return false;
    }
    return true;
  };
  Entities out;
  for (std::size_t u = 0; u < graph.node_count(); ++u) {
    if (covers(node_times(graph, u))) out.nodes.insert(graph.node_id(u));
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (covers(edge_times(graph, e))) {
      out.edges.insert({graph.node_id(graph.edge(e).source), graph.node_id(graph.edge(e).target)});
    }
  }
  return out;
}

std::vector<IntervalSet> all_interval_sets(std::size_t n) {
  std::vector<IntervalSet> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Interval> points;
    for (std::size_t t = 0; t < n; ++t) {
      if (mask & (std::size_t{1} << t)) points.push_back({t, t});
    }
    out.emplace_back(std::move(points));
  }
  return out;
}

std::map<std::string, Points> oracle_triangles(const TemporalGraph& graph, const Points& interval) {
  const std::size_t n = graph.node_count();
  // Undirected adjacency per time point, from the raw edge rows.
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> links;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const EdgeEnds ends = graph.edge(e);
    for (std::size_t t : edge_times(graph, e)) {
      links.insert({std::min<std::size_t>(ends.source, ends.target), std::max<std::size_t>(ends.source, ends.target), t});
    }
  }
  auto linked = [&](std::size_t a, std::size_t b, std::size_t t) { return links.count({a, b, t}) > 0; };
  std::map<std::string, Points> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t t : interval) {
          if (!linked(a, b, t) || !linked(a, c, t) || !linked(b, c, t)) continue;
          std::vector<std::string> ids{graph.node_id(a), graph.node_id(b), graph.node_id(c)};
          std::sort(ids.begin(), ids.end());
          out[ids[0] + "|" + ids[1] + "|" + ids[2]].insert(t);
        }
      }
    }
  }
  return out;
}

namespace {

// Counts kept entities over the given points; `keep_node` / `keep_edge`
// select the entities of an operator result.
template <class KeepNode, class KeepEdge>
OracleAggregate count_entities(const TemporalGraph& graph, const Points& interval,
                               const std::vector<std::string>& attrs, AggMode mode, KeepNode&& keep_node,
                               KeepEdge&& keep_edge) {
  auto tuple_at = [&](std::size_t u, std::size_t t, AttrTuple& out) {
    out.clear();
    for (const auto& name : attrs) {
      const auto value = lookup_attribute(graph, graph.node_id(u), name, t);
      if (!value) return false;
      out.push_back(*value);
    }
    return true;
  };
  OracleAggregate out;
  std::set<std::pair<std::size_t, AttrTuple>> seen_nodes;
  for (std::size_t u = 0; u < graph.node_count(); ++u) {
    if (!keep_node(u)) continue;
    for (std::size_t t : node_times(graph, u)) {
      AttrTuple key;
      if (interval.count(t) == 0 || !tuple_at(u, t, key)) continue;
      if (mode == AggMode::kAll || seen_nodes.insert({u, key}).second) ++out.nodes[key];
    }
  }
  std::set<std::pair<std::size_t, EdgeKey>> seen_edges;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (!keep_edge(e)) continue;
    const EdgeEnds ends = graph.edge(e);
    for (std::size_t t : edge_times(graph, e)) {
      AttrTuple a;
      AttrTuple b;
      if (interval.count(t) == 0 || !tuple_at(ends.source, t, a) || !tuple_at(ends.target, t, b)) continue;
      if (!graph.directed() && b < a) std::swap(a, b);
      EdgeKey key{a, b};
      if (mode == AggMode::kAll || seen_edges.insert({e, key}).second) ++out.edges[key];
    }
  }
  return out;
}

bool side_holds(const Points& times, const OracleSide& side) {
  if (side.points.empty()) return false;
  if (!side.every) return meets(times, side.points);
  return std::all_of(side.points.begin(), side.points.end(), [&](std::size_t t) { return times.count(t) > 0; });
}

}  // namespace

OracleAggregate oracle_aggregate(const TemporalGraph& graph, const Points& interval,
                                 const std::vector<std::string>& attrs, AggMode mode) {
  auto all = [](std::size_t) { return true; };
  return count_entities(graph, interval, attrs, mode, all, all);
}

OracleAggregate oracle_event_aggregate(const TemporalGraph& graph, Event event, const OracleSide& old_side,
                                       const OracleSide& new_side, const std::vector<std::string>& attrs,
                                       AggMode mode) {
  // Stability intersects both sides; growth keeps what is new and not old,
  // shrinkage what is old and not new.
  const bool difference = event != Event::kStability;
  const OracleSide& a = event == Event::kGrowth ? new_side : old_side;
  const OracleSide& b = event == Event::kGrowth ? old_side : new_side;
  Points retained = a.points;
  if (!difference) retained.insert(b.points.begin(), b.points.end());

  auto keep = [&](const Points& times) {
    const bool in_a = side_holds(times, a);
    const bool in_b = side_holds(times, b);
    return (difference ? in_a && !in_b : in_a && in_b) && meets(times, retained);
  };
  std::set<std::size_t> kept_edges;
  std::set<std::size_t> endpoints;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    if (!keep(edge_times(graph, e))) continue;
    kept_edges.insert(e);
    endpoints.insert(graph.edge(e).source);
    endpoints.insert(graph.edge(e).target);
  }
  auto keep_node = [&](std::size_t u) {
    const Points times = node_times(graph, u);
    return keep(times) || (difference && endpoints.count(u) > 0 && meets(times, retained));
  };
  auto keep_edge = [&](std::size_t e) { return kept_edges.count(e) > 0; };
  return count_entities(graph, retained, attrs, mode, keep_node, keep_edge);
}

std::uint64_t oracle_target_weight(const OracleAggregate& agg, const Target& target, bool directed) {
  if (target.kind == Target::Kind::kNode) {
    const auto it = agg.nodes.find(target.node);
    return it == agg.nodes.end() ? 0 : it->second;
  }
  EdgeKey key = target.edge;
  if (!directed && key.second < key.first) std::swap(key.first, key.second);
  const auto it = agg.edges.find(key);
  return it == agg.edges.end() ? 0 : it->second;
}

std::vector<OraclePair> oracle_explore(const TemporalGraph& graph, const ExplorationQuery& query) {
  const std::size_t n = graph.time_points();
  const bool old_fixed = query.reference == Reference::kOldFixed;
  const bool every = query.extremal == Extremal::kMaximal;
  std::vector<OraclePair> qualifying;
  for (std::size_t ref = old_fixed ? 0 : 1; ref < (old_fixed ? n - 1 : n); ++ref) {
    const std::size_t longest = old_fixed ? n - 1 - ref : ref;
    for (std::size_t length = 1; length <= longest; ++length) {
      const Interval run = old_fixed ? Interval{ref + 1, ref + length} : Interval{ref - length, ref - 1};
      Points moving;
      for (std::size_t t = run.start; t <= run.end; ++t) moving.insert(t);
      const OracleSide fixed{{ref}, false};
      const OracleSide extended{moving, every};
      const auto agg = oracle_event_aggregate(graph, query.event, old_fixed ? fixed : extended,
                                              old_fixed ? extended : fixed, query.target.attrs, query.target.mode);
      const std::uint64_t w = oracle_target_weight(agg, query.target, graph.directed());
      if (w >= query.k) qualifying.push_back({ref, run, w});
    }
  }
  // Minimal: no qualifying run of the same reference strictly inside it.
  // Maximal: no qualifying run of the same reference strictly containing it.
  auto inside = [](const Interval& inner, const Interval& outer) {
    return outer.start <= inner.start && inner.end <= outer.end && inner != outer;
  };
  std::vector<OraclePair> out;
  for (const auto& p : qualifying) {
    const bool dominated = std::any_of(qualifying.begin(), qualifying.end(), [&](const OraclePair& q) {
      return q.reference == p.reference && (every ? inside(p.run, q.run) : inside(q.run, p.run));
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

bool same_weights(const OracleAggregate& expected, const AggregateGraph& actual) {
  return expected.nodes == actual.nodes && expected.edges == actual.edges;
}

}  // namespace graphtempo::testing
