#include "graphtempo/export.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "graphtempo/errors.hpp"

namespace graphtempo {

using nlohmann::json;

Format parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "dot") return Format::kDot;
  if (text == "csv") return Format::kCsv;
  throw UsageError("output format must be json, dot or csv, got '" + std::string(text) + "'");
}

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dot_quote(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

double percent(std::uint64_t part, std::uint64_t total) {
  if (total == 0) return 0.0;
  return std::round(10000.0 * 100.0 * static_cast<double>(part) / static_cast<double>(total)) / 10000.0;
}

std::string fixed4(double value) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(4);
  out << value;
  return out.str();
}

json interval_json(const IntervalSet& interval) {
  json out = json::array();
  for (const Interval& i : interval.intervals()) out.push_back({i.start, i.end});
  return out;
}

}  // namespace

std::string aggregate_to_json(const AggregateGraph& aggregate) {
  if (aggregate.empty()) return "{}";
  json out;
  out["attrs"] = aggregate.attrs;
  out["mode"] = std::string(to_string(aggregate.mode));
  out["directed"] = aggregate.directed;
  out["members"] = aggregate.members;
  out["interval"] = interval_json(aggregate.interval);
  out["nodes"] = json::array();
  for (const auto& [key, weight] : aggregate.nodes) out["nodes"].push_back({{"key", key}, {"weight", weight}});
  out["edges"] = json::array();
  for (const auto& [key, weight] : aggregate.edges) {
    out["edges"].push_back({{"source", key.first}, {"target", key.second}, {"weight", weight}});
  }
  return out.dump(2);
}

AggregateGraph aggregate_from_json(std::string_view text) {
  AggregateGraph out;
  try {
    const json in = json::parse(text);
    if (in.empty()) return out;
    out.attrs = in.at("attrs").get<std::vector<std::string>>();
    out.mode = parse_agg_mode(in.at("mode").get<std::string>());
    out.directed = in.at("directed").get<bool>();
    out.members = in.at("members").get<std::size_t>();
    std::vector<Interval> intervals;
    for (const auto& i : in.at("interval")) intervals.push_back({i.at(0).get<std::size_t>(), i.at(1).get<std::size_t>()});
    out.interval = IntervalSet(std::move(intervals));
    for (const auto& node : in.at("nodes")) {
      out.nodes.emplace(node.at("key").get<AttrTuple>(), node.at("weight").get<std::uint64_t>());
    }
    for (const auto& edge : in.at("edges")) {
      out.edges.emplace(EdgeKey{edge.at("source").get<AttrTuple>(), edge.at("target").get<AttrTuple>()},
                        edge.at("weight").get<std::uint64_t>());
    }
  } catch (const json::exception& e) {
    throw ParseError("<aggregate json>", 1, e.what());
  }
  return out;
}

std::string aggregate_to_dot(const AggregateGraph& aggregate) {
  const char* arrow = aggregate.directed ? " -> " : " -- ";
  std::ostringstream out;
  out << (aggregate.directed ? "digraph" : "graph") << " aggregate {\n";
  for (const auto& [key, weight] : aggregate.nodes) {
    const std::string name = render_key(key, aggregate.members);
    out << "  " << dot_quote(name) << " [label=" << dot_quote(name + "\n" + std::to_string(weight))
        << ", weight=" << weight << "];\n";
  }
  for (const auto& [key, weight] : aggregate.edges) {
    out << "  " << dot_quote(render_key(key.first, aggregate.members)) << arrow
        << dot_quote(render_key(key.second, aggregate.members)) << " [label=" << weight << ", weight=" << weight
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string aggregate_to_csv(const AggregateGraph& aggregate) {
  std::ostringstream out;
  out << "kind,source,target,weight\n";
  for (const auto& [key, weight] : aggregate.nodes) {
    out << "node," << csv_field(render_key(key, aggregate.members)) << ",," << weight << '\n';
  }
  for (const auto& [key, weight] : aggregate.edges) {
    out << "edge," << csv_field(render_key(key.first, aggregate.members)) << ','
        << csv_field(render_key(key.second, aggregate.members)) << ',' << weight << '\n';
  }
  return out.str();
}

std::string render(const AggregateGraph& aggregate, Format format) {
  switch (format) {
    case Format::kJson: return aggregate_to_json(aggregate) + "\n";
    case Format::kDot: return aggregate_to_dot(aggregate);
    case Format::kCsv: return aggregate_to_csv(aggregate);
  }
  return {};
}

namespace {

json weights_json(const EventWeights& w) {
  const std::uint64_t total = w.total();
  return {{"S", w.stability},
          {"G", w.growth},
          {"R", w.shrinkage},
          {"total", total},
          {"percent_S", percent(w.stability, total)},
          {"percent_G", percent(w.growth, total)},
          {"percent_R", percent(w.shrinkage, total)}};
}

}  // namespace

std::string evolution_to_json(const AggregateEvolutionGraph& evolution) {
  if (evolution.nodes.empty() && evolution.edges.empty()) return "{}";
  json out;
  out["attrs"] = evolution.attrs;
  out["mode"] = std::string(to_string(evolution.mode));
  out["nodes"] = json::array();
  for (const auto& [key, w] : evolution.nodes) {
    json row = weights_json(w);
    row["key"] = key;
    out["nodes"].push_back(std::move(row));
  }
  out["edges"] = json::array();
  for (const auto& [key, w] : evolution.edges) {
    json row = weights_json(w);
    row["key"] = {key.first, key.second};
    out["edges"].push_back(std::move(row));
  }
  return out.dump(2);
}

std::string evolution_to_dot(const AggregateEvolutionGraph& evolution) {
  const char* arrow = evolution.directed ? " -> " : " -- ";
  auto label = [](const std::string& head, const EventWeights& w) {
    return head + "\nS=" + std::to_string(w.stability) + " G=" + std::to_string(w.growth) +
           " R=" + std::to_string(w.shrinkage);
  };
  // Colour by the dominant event: stability blue, growth green, shrinkage red.
  auto colour = [](const EventWeights& w) {
    if (w.stability >= w.growth && w.stability >= w.shrinkage) return "blue";
    return w.growth >= w.shrinkage ? "darkgreen" : "red";
  };
  std::ostringstream out;
  out << (evolution.directed ? "digraph" : "graph") << " evolution {\n";
  for (const auto& [key, w] : evolution.nodes) {
    const std::string name = render_key(key, evolution.members);
    out << "  " << dot_quote(name) << " [label=" << dot_quote(label(name, w)) << ", color=" << colour(w)
        << "];\n";
  }
  for (const auto& [key, w] : evolution.edges) {
    out << "  " << dot_quote(render_key(key.first, evolution.members)) << arrow
        << dot_quote(render_key(key.second, evolution.members)) << " [label=" << dot_quote(label("", w).substr(1))
        << ", color=" << colour(w) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string evolution_to_csv(const AggregateEvolutionGraph& evolution) {
  std::ostringstream out;
  out << "kind,source,target,S,G,R,total,percent_S,percent_G,percent_R\n";
  auto row = [&](const std::string& kind, const std::string& source, const std::string& target,
                 const EventWeights& w) {
    const std::uint64_t total = w.total();
    out << kind << ',' << csv_field(source) << ',' << csv_field(target) << ',' << w.stability << ',' << w.growth
        << ',' << w.shrinkage << ',' << total << ',' << fixed4(percent(w.stability, total)) << ','
        << fixed4(percent(w.growth, total)) << ',' << fixed4(percent(w.shrinkage, total)) << '\n';
  };
  for (const auto& [key, w] : evolution.nodes) row("node", render_key(key, evolution.members), "", w);
  for (const auto& [key, w] : evolution.edges) {
    row("edge", render_key(key.first, evolution.members), render_key(key.second, evolution.members), w);
  }
  return out.str();
}

std::string render(const AggregateEvolutionGraph& evolution, Format format) {
  switch (format) {
    case Format::kJson: return evolution_to_json(evolution) + "\n";
    case Format::kDot: return evolution_to_dot(evolution);
    case Format::kCsv: return evolution_to_csv(evolution);
  }
  return {};
}

namespace {

std::string interval_label(const Interval& interval, const TimeDomain& time) {
  return IntervalSet{interval}.to_string(time);
}

json target_json(const Target& target) {
  json out;
  out["attrs"] = target.attrs;
  out["mode"] = std::string(to_string(target.mode));
  if (target.kind == Target::Kind::kEdge) {
    out["edge"] = {target.edge.first, target.edge.second};
  } else {
    out[target.triangle ? "pattern" : "node"] = target.node;
  }
  return out;
}

}  // namespace

std::string exploration_to_json(const ExplorationResult& result, const TimeDomain& time) {
  const ExplorationQuery& q = result.query;
  json out;
  out["event"] = std::string(to_string(q.event));
  out["extremal"] = std::string(to_string(q.extremal));
  out["fixed"] = std::string(to_string(q.reference));
  out["extended"] = q.reference == Reference::kOldFixed ? "new" : "old";
  out["k"] = q.k;
  out["target"] = target_json(q.target);
  out["evaluations"] = result.evaluations;
  out["pairs"] = json::array();
  for (const ScoredPair& p : result.pairs) {
    out["pairs"].push_back({{"reference", time.label(p.pair.reference)},
                            {"old", interval_label(p.pair.old_side(q.reference), time)},
                            {"new", interval_label(p.pair.new_side(q.reference), time)},
                            {"weight", p.weight}});
  }
  return out.dump(2);
}

std::string exploration_heatmap_csv(const ExplorationResult& result, const TimeDomain& time) {
  const std::size_t n = time.size();
  const std::size_t longest = n > 0 ? n - 1 : 0;
  std::map<std::size_t, std::vector<std::string>> grid;
  const bool old_fixed = result.query.reference == Reference::kOldFixed;
  const std::size_t first = old_fixed ? 0 : 1;
  const std::size_t last = old_fixed ? (n >= 2 ? n - 2 : 0) : longest;
  for (std::size_t r = first; n >= 2 && r <= last; ++r) grid[r].assign(longest, "");
  for (const ScoredPair& p : result.evaluated) {
    grid[p.pair.reference].resize(longest);
    grid[p.pair.reference][p.pair.extended.length() - 1] = std::to_string(p.weight);
  }
  std::ostringstream out;
  out << "reference";
  for (std::size_t l = 1; l <= longest; ++l) out << ',' << l;
  out << '\n';
  for (const auto& [ref, cells] : grid) {
    out << csv_field(time.label(ref));
    for (const auto& cell : cells) out << ',' << cell;
    out << '\n';
  }
  return out.str();
}

std::string graph_to_json(const TemporalGraph& graph) {
  json out;
  out["time"] = graph.time().labels();
  out["directed"] = graph.directed();
  out["nodes"] = json::array();
  for (std::size_t u = 0; u < graph.node_count(); ++u) {
    json node;
    node["id"] = graph.node_id(u);
    std::vector<std::string> present;
    graph.node_presence(u).for_each_set([&](std::size_t t) { present.push_back(graph.time().label(t)); });
    node["present"] = present;
    json attrs = json::object();
    for (const auto& column : graph.attributes().columns()) {
      if (column.is_static()) {
        const auto value = lookup_attribute(graph, graph.node_id(u), column.name(), 0);
        attrs[column.name()] = value ? json(*value) : json(nullptr);
      } else {
        json values = json::object();
        graph.node_presence(u).for_each_set([&](std::size_t t) {
          const auto value = lookup_attribute(graph, graph.node_id(u), column.name(), t);
          values[graph.time().label(t)] = value ? json(*value) : json(nullptr);
        });
        attrs[column.name()] = std::move(values);
      }
    }
    node["attributes"] = std::move(attrs);
    out["nodes"].push_back(std::move(node));
  }
  out["edges"] = json::array();
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    std::vector<std::string> present;
    graph.edge_presence(e).for_each_set([&](std::size_t t) { present.push_back(graph.time().label(t)); });
    out["edges"].push_back({{"source", graph.node_id(graph.edge(e).source)},
                            {"target", graph.node_id(graph.edge(e).target)},
                            {"present", present}});
  }
  return out.dump(2);
}

std::string graph_to_dot(const TemporalGraph& graph) {
  const char* arrow = graph.directed() ? " -> " : " -- ";
  auto times = [&](BitRow bits) {
    std::string out;
    bits.for_each_set([&](std::size_t t) {
      if (!out.empty()) out += ',';
      out += graph.time().label(t);
    });
    return out;
  };
  std::ostringstream out;
  out << (graph.directed() ? "digraph" : "graph") << " temporal {\n";
  for (std::size_t u = 0; u < graph.node_count(); ++u) {
    out << "  " << dot_quote(graph.node_id(u)) << " [label="
        << dot_quote(graph.node_id(u) + "\n" + times(graph.node_presence(u))) << "];\n";
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    out << "  " << dot_quote(graph.node_id(graph.edge(e).source)) << arrow
        << dot_quote(graph.node_id(graph.edge(e).target)) << " [label=" << dot_quote(times(graph.edge_presence(e)))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace graphtempo
