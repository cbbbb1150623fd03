#include "graphtempo/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphtempo/aggregate.hpp"
#include "graphtempo/bench.hpp"
#include "graphtempo/errors.hpp"
#include "graphtempo/evolution.hpp"
#include "graphtempo/exploration.hpp"
#include "graphtempo/export.hpp"
#include "graphtempo/fixture.hpp"
#include "graphtempo/io.hpp"
#include "graphtempo/materialization.hpp"
#include "graphtempo/pattern.hpp"
#include "graphtempo/synthetic.hpp"
#include "graphtempo/temporal_ops.hpp"

namespace graphtempo::cli {

namespace {

constexpr const char* kDefaultCacheDir = ".graphtempo-cache";

struct GraphArgs {
  bool fixture = false;
  std::string edges;
  std::string statics;
  std::string presence;
  std::vector<std::string> varying;
  bool undirected = false;
};

struct Options {
  GraphArgs graph;
  std::string interval;
  std::string t1;
  std::string t2;
  std::string told;
  std::string tnew;
  std::string attrs;
  std::string mode = "dist";
  std::string out = "json";
  std::string op_name;
  std::string strategy;
  std::string pattern = "triangle";
  std::string evolution_pattern = "none";
  bool fast = false;
  bool tri_graph = false;
  bool labels = false;
  std::string export_dir;
  std::string ingest_out = "summary";
  std::string lookup;
  // exploration
  std::string event = "stability";
  std::string extremal = "min";
  std::string extended;
  std::string fixed;
  std::uint64_t k = 1;
  std::string target_node;
  std::string target_edge;
  std::string target_pattern;
  std::string method = "auto";
  bool weight_only = false;
  // cache
  std::string cache_dir;
  std::string subset;
  bool fallback = false;
  // bench
  std::size_t points = 8;
  std::size_t edges = 10000;
  std::size_t nodes = 4000;
  std::size_t communities = 200;
  std::size_t repeats = 3;
  std::uint64_t seed = 42;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void add_graph_options(CLI::App* cmd, GraphArgs& g) {
  cmd->add_flag("--fixture", g.fixture, "Use the built-in five-author example graph");
  cmd->add_option("--edges", g.edges, "Edge file (source,target,time)");
  cmd->add_option("--static", g.statics, "Static attribute file (id,<attr>,...)");
  cmd->add_option("--varying", g.varying, "Time-varying attribute file as name=path (repeatable)");
  cmd->add_option("--presence", g.presence, "Node presence file (id,<time>,...)");
  cmd->add_flag("--undirected", g.undirected, "Treat edges as undirected");
}

TemporalGraph load_graph(const GraphArgs& g) {
  if (g.fixture) {
    if (!g.edges.empty()) throw UsageError("--fixture and --edges are mutually exclusive");
    return build_fixture_authors();
  }
  if (g.edges.empty()) throw UsageError("a graph is required: pass --fixture or --edges");
  LoadOptions options;
  options.edges = g.edges;
  if (!g.statics.empty()) options.static_attributes = g.statics;
  if (!g.presence.empty()) options.node_presence = g.presence;
  for (const auto& spec : g.varying) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw UsageError("--varying expects name=path, got '" + spec + "'");
    }
    options.varying.emplace_back(spec.substr(0, eq), spec.substr(eq + 1));
  }
  options.directed = !g.undirected;
  return load_temporal_graph(options);
}

IntervalSet interval_or_all(const std::string& text, const TemporalGraph& graph) {
  if (text.empty()) return IntervalSet::all(graph.time_points());
  return IntervalSet::parse(text, graph.time());
}

IntervalSet required_interval(const std::string& text, const char* flag, const TemporalGraph& graph) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return IntervalSet::parse(text, graph.time());
}

std::vector<std::string> required_attrs(const Options& o) {
  auto attrs = split_list(o.attrs);
  if (attrs.empty()) throw UsageError("--attrs is required");
  return attrs;
}

SetOp parse_op(const std::string& name) {
  if (name == "union") return SetOp::kUnion;
  if (name == "intersection") return SetOp::kIntersection;
  if (name == "difference") return SetOp::kDifference;
  throw UsageError("operator must be union, intersection or difference, got '" + name + "'");
}

std::string render_graph(const TemporalGraph& graph, const std::string& format) {
  if (format == "json") return graph_to_json(graph) + "\n";
  if (format == "dot") return graph_to_dot(graph);
  throw UsageError("graphs can be written as json or dot");
}

std::string summary(const TemporalGraph& graph) {
  nlohmann::json out;
  out["time"] = graph.time().labels();
  out["directed"] = graph.directed();
  out["nodes"] = graph.node_count();
  out["edges"] = graph.edge_count();
  std::vector<std::size_t> nodes_at;
  std::vector<std::size_t> edges_at;
  for (std::size_t t = 0; t < graph.time_points(); ++t) {
    nodes_at.push_back(graph.nodes_at(t));
    edges_at.push_back(graph.edges_at(t));
  }
  out["nodes_per_point"] = nodes_at;
  out["edges_per_point"] = edges_at;
  nlohmann::json attrs = nlohmann::json::object();
  for (const auto& column : graph.attributes().columns()) {
    attrs[column.name()] = column.is_static() ? "static" : "varying";
  }
  out["attributes"] = attrs;
  return out.dump(2) + "\n";
}

int cmd_ingest(const Options& o, std::ostream& out) {
  const TemporalGraph graph = load_graph(o.graph);
  if (!o.export_dir.empty()) export_temporal_graph(graph, o.export_dir);
  if (!o.lookup.empty()) {
    const auto parts = split_list(o.lookup);
    if (parts.size() != 3) throw UsageError("--lookup expects node,attribute,time");
    const auto value = lookup_attribute(graph, parts[0], parts[1], graph.time().index_of(parts[2]));
    out << (value ? *value : std::string("MISSING")) << '\n';
    return 0;
  }
  out << (o.ingest_out == "summary" ? summary(graph) : render_graph(graph, o.ingest_out));
  return 0;
}

int cmd_op(const Options& o, std::ostream& out) {
  const TemporalGraph graph = load_graph(o.graph);
  if (o.op_name == "project") {
    const IntervalSet set = required_interval(o.interval, "--interval", graph);
    if (set.intervals().size() != 1) throw UsageError("project takes a single contiguous interval");
    out << render_graph(project(graph, set.intervals().front()), o.out);
    return 0;
  }
  const SetOp op = parse_op(o.op_name);
  const TemporalGraph result =
      apply(graph, op, required_interval(o.t1, "--t1", graph), required_interval(o.t2, "--t2", graph));
  out << render_graph(result, o.out);
  return 0;
}

int cmd_aggregate(const Options& o, std::ostream& out) {
  const TemporalGraph graph = load_graph(o.graph);
  const auto attrs = required_attrs(o);
  const AggMode mode = parse_agg_mode(o.mode);
  const Format format = parse_format(o.out);
  if (!o.op_name.empty()) {
    const TemporalGraph reduced =
        apply(graph, parse_op(o.op_name), required_interval(o.t1, "--t1", graph), required_interval(o.t2, "--t2", graph));
    const IntervalSet all = IntervalSet::all(graph.time_points());
    out << render(o.fast ? aggregate_static_fast(reduced, all, attrs, mode) : aggregate(reduced, all, attrs, mode),
                  format);
    return 0;
  }
  const IntervalSet interval = interval_or_all(o.interval, graph);
  out << render(o.fast ? aggregate_static_fast(graph, interval, attrs, mode) : aggregate(graph, interval, attrs, mode),
                format);
  return 0;
}

int cmd_tri(const Options& o, std::ostream& out) {
  const Pattern pattern = parse_pattern(o.pattern);
  const TemporalGraph graph = load_graph(o.graph);
  const IntervalSet interval = interval_or_all(o.interval, graph);
  if (o.tri_graph) {
    out << render_graph(build_tri_graph(graph, interval), o.out);
    return 0;
  }
  const auto attrs = required_attrs(o);
  std::optional<PatternOp> op;
  PatternStrategy strategy = PatternStrategy::kTriFirst;
  if (!o.op_name.empty()) {
    op = PatternOp{parse_op(o.op_name), required_interval(o.t1, "--t1", graph), required_interval(o.t2, "--t2", graph)};
    strategy = o.strategy.empty() ? default_strategy(op->op) : parse_strategy(o.strategy);
  }
  out << render(aggregate_pattern(graph, op, interval, attrs, parse_agg_mode(o.mode), strategy, pattern),
                parse_format(o.out));
  return 0;
}

int cmd_evolve(const Options& o, std::ostream& out) {
  const TemporalGraph graph = load_graph(o.graph);
  const IntervalSet told = required_interval(o.told, "--told", graph);
  const IntervalSet tnew = required_interval(o.tnew, "--tnew", graph);
  if (o.labels) {
    const EvolutionGraph evo = evolution_graph(graph, told, tnew);
    auto text = [](std::uint8_t flags) {
      std::string s;
      if (flags & kStable) s += 'S';
      if (flags & kGrown) s += 'G';
      if (flags & kShrunk) s += 'R';
      return s;
    };
    nlohmann::json j;
    j["nodes"] = nlohmann::json::object();
    for (const auto& [id, flags] : evo.node_labels) j["nodes"][id] = text(flags);
    j["edges"] = nlohmann::json::array();
    for (const auto& [ends, flags] : evo.edge_labels) {
      j["edges"].push_back({{"source", ends.first}, {"target", ends.second}, {"labels", text(flags)}});
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  EvolutionPattern pattern = EvolutionPattern::kNone;
  if (o.evolution_pattern == "triangle") {
    pattern = EvolutionPattern::kTriangle;
  } else if (o.evolution_pattern != "none") {
    parse_pattern(o.evolution_pattern);  // raises the unsupported-pattern error
  }
  out << render(aggregate_evolution(graph, told, tnew, required_attrs(o), parse_agg_mode(o.mode), pattern),
                parse_format(o.out));
  return 0;
}

// `--reference old` names the case whose old side is extended, so the
// fixed reference point is on the new side.
Reference reference_of(const Options& o) {
  if (!o.extended.empty() && !o.fixed.empty()) throw UsageError("pass only one of --reference and --fixed");
  if (!o.fixed.empty()) return parse_reference(o.fixed);
  if (o.extended.empty() || o.extended == "new") return Reference::kOldFixed;
  if (o.extended == "old") return Reference::kNewFixed;
  throw UsageError("--reference must be old or new, got '" + o.extended + "'");
}

Target build_target(const Options& o) {
  const auto attrs = required_attrs(o);
  const AggMode mode = parse_agg_mode(o.mode);
  const int given = !o.target_node.empty() + !o.target_edge.empty() + !o.target_pattern.empty();
  if (given != 1) throw UsageError("exactly one of --target-node, --target-edge, --target-pattern is required");
  if (!o.target_node.empty()) return Target::node_key(parse_key(o.target_node, attrs.size()), attrs, mode);
  if (!o.target_pattern.empty()) {
    return Target::pattern_key(parse_key(o.target_pattern, 3 * attrs.size()), attrs, mode);
  }
  const AttrTuple both = parse_key(o.target_edge, 2 * attrs.size());
  return Target::edge_key(AttrTuple(both.begin(), both.begin() + static_cast<std::ptrdiff_t>(attrs.size())),
                          AttrTuple(both.begin() + static_cast<std::ptrdiff_t>(attrs.size()), both.end()), attrs, mode);
}

int cmd_explore(const Options& o, std::ostream& out) {
  const TemporalGraph graph = load_graph(o.graph);
  const Target target = build_target(o);
  const Event event = parse_event(o.event);
  if (o.weight_only) {
    const std::uint64_t w = event_weight(graph, event, required_interval(o.told, "--told", graph),
                                         required_interval(o.tnew, "--tnew", graph), target);
    out << w << '\n';
    return 0;
  }
  ExplorationQuery query{event, parse_extremal(o.extremal), reference_of(o), o.k, target};
  ExplorationResult result;
  if (o.method == "auto") {
    result = explore(graph, query);
  } else if (o.method == "u") {
    result = u_explore(graph, query);
  } else if (o.method == "i") {
    result = i_explore(graph, query);
  } else if (o.method == "brute") {
    result = brute_force_explore(graph, query);
  } else {
    throw UsageError("--method must be auto, u, i or brute");
  }
  if (o.out == "json") {
    out << exploration_to_json(result, graph.time()) << '\n';
  } else if (o.out == "csv") {
    out << exploration_heatmap_csv(result, graph.time());
  } else {
    throw UsageError("exploration results can be written as json or csv");
  }
  return 0;
}

int cmd_init_k(const Options& o, std::ostream& out) {
  const TemporalGraph graph = load_graph(o.graph);
  const ThresholdHint hint = init_threshold(graph, parse_event(o.event), parse_extremal(o.extremal),
                                            reference_of(o), build_target(o));
  nlohmann::json j{{"w_min", hint.w_min}, {"w_max", hint.w_max}, {"start", hint.start},
                   {"consecutive", hint.consecutive}};
  out << j.dump(2) << '\n';
  return 0;
}

std::filesystem::path cache_root(const Options& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv("GRAPHTEMPO_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return kDefaultCacheDir;
}

int cmd_cache_build(const Options& o, std::ostream& out) {
  const TemporalGraph graph = load_graph(o.graph);
  const auto attrs = required_attrs(o);
  AggregateCache cache(graph.time(), cache_root(o));
  precompute_timepoint_aggregates(cache, graph, attrs);
  nlohmann::json j{{"root", cache_root(o).string()},
                   {"attrs", AggregateCache::attrs_key(attrs)},
                   {"entries", cache.size()}};
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_cache_rollup(const Options& o, std::ostream& out) {
  const TemporalGraph graph = load_graph(o.graph);
  const auto attrs = required_attrs(o);
  AggregateCache cache(graph.time(), cache_root(o));
  const IntervalSet t1 = required_interval(o.t1, "--t1", graph);
  const IntervalSet t2 = o.t2.empty() ? t1 : IntervalSet::parse(o.t2, graph.time());
  AggregateGraph result = o.fallback ? union_all_cached(cache, graph, t1, t2, attrs)
                                     : rollup_time_union_all(cache, t1, t2, attrs, parse_agg_mode(o.mode));
  if (!o.subset.empty()) result = rollup_attributes(result, split_list(o.subset));
  out << render(result, parse_format(o.out));
  return 0;
}

int cmd_bench(const Options& o, const std::string& which, std::ostream& out) {
  SyntheticOptions options;
  options.points = o.points;
  options.edges = o.edges;
  options.nodes = o.nodes;
  options.communities = o.communities;
  options.seed = o.seed;
  const TemporalGraph graph = make_synthetic_graph(options);
  const auto attrs = o.attrs.empty() ? std::vector<std::string>{"gender"} : split_list(o.attrs);
  if (which == "rollup") {
    out << bench_csv(bench_rollup(graph, attrs, o.repeats));
  } else {
    const SetOp op = o.op_name.empty() ? SetOp::kIntersection : parse_op(o.op_name);
    out << bench_csv(bench_pattern(graph, op, attrs, o.repeats));
  }
  return 0;
}

void add_output(CLI::App* cmd, Options& o, const std::string& help) {
  cmd->add_option("--out", o.out, help)->capture_default_str();
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table = {
      {"ingest", {"load_temporal_graph", "build_fixture_authors", "lookup_attribute", "export_temporal_graph"}},
      {"op project", {"project"}},
      {"op union", {"union"}},
      {"op intersection", {"intersection"}},
      {"op difference", {"difference"}},
      {"aggregate", {"aggregate", "aggregate_static_fast", "export"}},
      {"tri", {"build_tri_graph", "aggregate_pattern"}},
      {"evolve", {"evolution_graph", "aggregate_evolution"}},
      {"explore", {"event_weight", "u_explore", "i_explore", "explore", "brute_force_explore"}},
      {"init-k", {"init_threshold"}},
      {"cache build", {"precompute_timepoint_aggregates"}},
      {"cache rollup", {"rollup_time_union_all", "rollup_attributes"}},
      {"bench rollup", {"rollup_time_union_all"}},
      {"bench pattern", {"aggregate_pattern"}},
  };
  return table;
}

std::vector<std::string> core_operations() {
  return {"load_temporal_graph", "build_fixture_authors", "lookup_attribute", "project", "union", "intersection",
          "difference", "aggregate", "aggregate_static_fast", "build_tri_graph", "aggregate_pattern",
          "evolution_graph", "aggregate_evolution", "event_weight", "u_explore", "i_explore", "explore",
          "brute_force_explore", "init_threshold", "precompute_timepoint_aggregates", "rollup_time_union_all",
          "rollup_attributes", "export"};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Temporal attributed graph analytics"};
  app.name("graphtempo");
  app.require_subcommand(1);

  auto* ingest = app.add_subcommand("ingest", "Load a graph; print a summary, render it or re-export it");
  add_graph_options(ingest, o.graph);
  ingest->add_option("--export", o.export_dir, "Write the graph in the ingestion format into this directory");
  ingest->add_option("--lookup", o.lookup, "Print one attribute value: node,attribute,time");
  ingest->add_option("--out", o.ingest_out, "summary|json|dot")->capture_default_str();

  auto* op = app.add_subcommand("op", "Apply a temporal operator");
  op->add_option("operator", o.op_name, "union|intersection|difference|project")
      ->required()
      ->check(CLI::IsMember({"union", "intersection", "difference", "project"}));
  add_graph_options(op, o.graph);
  op->add_option("--t1", o.t1, "First interval set, e.g. t0..t2,t4");
  op->add_option("--t2", o.t2, "Second interval set");
  op->add_option("--interval", o.interval, "Interval for project");
  add_output(op, o, "json|dot");

  auto* agg = app.add_subcommand("aggregate", "Attribute aggregation");
  add_graph_options(agg, o.graph);
  agg->add_option("--attrs", o.attrs, "Comma-separated attribute names");
  agg->add_option("--interval", o.interval, "Interval set (default: whole domain)");
  agg->add_option("--mode", o.mode, "dist|all")->capture_default_str();
  agg->add_option("--op", o.op_name, "Aggregate an operator result instead: union|intersection|difference");
  agg->add_option("--t1", o.t1, "First operator interval");
  agg->add_option("--t2", o.t2, "Second operator interval");
  agg->add_flag("--fast", o.fast, "Use the static-attribute fast path");
  add_output(agg, o, "json|dot|csv");

  auto* tri = app.add_subcommand("tri", "Triangle pattern aggregation");
  add_graph_options(tri, o.graph);
  tri->add_option("--attrs", o.attrs, "Comma-separated attribute names");
  tri->add_option("--interval", o.interval, "Interval set when no operator is given");
  tri->add_option("--mode", o.mode, "dist|all")->capture_default_str();
  tri->add_option("--op", o.op_name, "union|intersection|difference");
  tri->add_option("--t1", o.t1, "First operator interval");
  tri->add_option("--t2", o.t2, "Second operator interval");
  tri->add_option("--strategy", o.strategy, "tri-first|op-first (default depends on the operator)");
  tri->add_option("--pattern", o.pattern, "Pattern name")->capture_default_str();
  tri->add_flag("--graph", o.tri_graph, "Print the tri-graph itself");
  add_output(tri, o, "json|dot|csv");

  auto* evolve = app.add_subcommand("evolve", "Evolution graph between two interval sets");
  add_graph_options(evolve, o.graph);
  evolve->add_option("--told", o.told, "Old interval set");
  evolve->add_option("--tnew", o.tnew, "New interval set");
  evolve->add_option("--attrs", o.attrs, "Comma-separated attribute names");
  evolve->add_option("--mode", o.mode, "dist|all")->capture_default_str();
  evolve->add_option("--pattern", o.evolution_pattern, "none|triangle")->capture_default_str();
  evolve->add_flag("--labels", o.labels, "Print S/G/R labels of the evolution graph");
  add_output(evolve, o, "json|dot|csv");

  auto add_target = [&](CLI::App* cmd) {
    add_graph_options(cmd, o.graph);
    cmd->add_option("--event", o.event, "stability|growth|shrinkage")->capture_default_str();
    cmd->add_option("--extremal", o.extremal, "min|max")->capture_default_str();
    cmd->add_option("--reference", o.extended,
                    "old|new: the side extended from the reference point (default new)");
    cmd->add_option("--fixed", o.fixed, "old|new: the side kept as a single reference point");
    cmd->add_option("--attrs", o.attrs, "Comma-separated attribute names");
    cmd->add_option("--mode", o.mode, "dist|all")->capture_default_str();
    cmd->add_option("--target-node", o.target_node, "Node key, e.g. f or f,1");
    cmd->add_option("--target-edge", o.target_edge, "Edge key, e.g. f,f");
    cmd->add_option("--target-pattern", o.target_pattern, "Triangle key, e.g. ffm or f|f|m");
  };
  auto* explore_cmd = app.add_subcommand("explore", "Find minimal/maximal interval pairs with at least k events");
  add_target(explore_cmd);
  explore_cmd->add_option("--k", o.k, "Threshold")->capture_default_str();
  explore_cmd->add_option("--method", o.method, "auto|u|i|brute")->capture_default_str();
  explore_cmd->add_flag("--weight-only", o.weight_only, "Print the event weight for --told/--tnew");
  explore_cmd->add_option("--told", o.told, "Old interval set (with --weight-only)");
  explore_cmd->add_option("--tnew", o.tnew, "New interval set (with --weight-only)");
  add_output(explore_cmd, o, "json|csv (csv = heatmap)");

  auto* init_k = app.add_subcommand("init-k", "Suggest a starting threshold from consecutive pairs");
  add_target(init_k);

  auto* cache = app.add_subcommand("cache", "Materialized aggregates");
  cache->require_subcommand(1);
  auto* cache_build = cache->add_subcommand("build", "Precompute per-point ALL aggregates");
  auto* cache_rollup = cache->add_subcommand("rollup", "Answer a union ALL aggregate from the cache");
  for (auto* cmd : {cache_build, cache_rollup}) {
    add_graph_options(cmd, o.graph);
    cmd->add_option("--attrs", o.attrs, "Comma-separated attribute names");
    cmd->add_option("--dir", o.cache_dir, "Cache root (default: $GRAPHTEMPO_CACHE_DIR or .graphtempo-cache)");
  }
  cache_rollup->add_option("--t1", o.t1, "First interval set");
  cache_rollup->add_option("--t2", o.t2, "Second interval set (default: same as --t1)");
  cache_rollup->add_option("--mode", o.mode, "Only all is supported")->default_str("all");
  cache_rollup->add_option("--subset", o.subset, "Roll up further to these attributes");
  cache_rollup->add_flag("--fallback", o.fallback, "Compute and cache missing points instead of failing");
  add_output(cache_rollup, o, "json|dot|csv");

  auto* bench = app.add_subcommand("bench", "Micro-benchmarks on a synthetic graph");
  bench->require_subcommand(1);
  auto* bench_rollup_cmd = bench->add_subcommand("rollup", "Direct union ALL aggregation vs cached rollup");
  auto* bench_pattern_cmd = bench->add_subcommand("pattern", "Tri-graph first vs operator first");
  for (auto* cmd : {bench_rollup_cmd, bench_pattern_cmd}) {
    cmd->add_option("--points", o.points, "Time points")->capture_default_str();
    cmd->add_option("--edges", o.edges, "Distinct edges")->capture_default_str();
    cmd->add_option("--nodes", o.nodes, "Nodes")->capture_default_str();
    cmd->add_option("--communities", o.communities, "Communities")->capture_default_str();
    cmd->add_option("--repeats", o.repeats, "Repetitions per measurement")->capture_default_str();
    cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    cmd->add_option("--attrs", o.attrs, "Aggregation attributes (default gender)");
  }
  bench_pattern_cmd->add_option("--op", o.op_name, "union|intersection (default intersection)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  // Options are shared between subcommands; cache rollup defaults to ALL.
  if (cache_rollup->parsed() && cache_rollup->count("--mode") == 0) o.mode = "all";

  try {
    if (ingest->parsed()) return cmd_ingest(o, out);
    if (op->parsed()) return cmd_op(o, out);
    if (agg->parsed()) return cmd_aggregate(o, out);
    if (tri->parsed()) return cmd_tri(o, out);
    if (evolve->parsed()) return cmd_evolve(o, out);
    if (explore_cmd->parsed()) return cmd_explore(o, out);
    if (init_k->parsed()) return cmd_init_k(o, out);
    if (cache_build->parsed()) return cmd_cache_build(o, out);
    if (cache_rollup->parsed()) return cmd_cache_rollup(o, out);
    if (bench_rollup_cmd->parsed()) return cmd_bench(o, "rollup", out);
    if (bench_pattern_cmd->parsed()) return cmd_bench(o, "pattern", out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"graphtempo"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace graphtempo::cli
