#include "graphtempo/aggregate.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "graphtempo/errors.hpp"
#include "key_codec.hpp"

namespace graphtempo {

namespace detail {

void check_attrs(const std::vector<std::string>& attrs) {
  if (attrs.empty()) throw UsageError("at least one aggregation attribute is required");
  std::set<std::string> unique(attrs.begin(), attrs.end());
  if (unique.size() != attrs.size()) throw UsageError("aggregation attributes must be distinct");
}

KeyReader::KeyReader(const TemporalGraph& graph, const std::vector<std::string>& attrs)
    : graph_(&graph), arity_(graph.arity()), all_static_(true) {
  check_attrs(attrs);
  for (const auto& name : attrs) {
    const AttributeColumn& column = graph.attributes().at(name);
    columns_.push_back(&column);
    all_static_ = all_static_ && column.is_static();
  }
}

namespace {

void sort_members(std::int32_t* data, std::size_t members, std::size_t n) {
  // Insertion sort over member blocks; members is tiny (3 for triangles).
  for (std::size_t i = 1; i < members; ++i) {
    for (std::size_t j = i; j > 0; --j) {
      std::int32_t* left = data + (j - 1) * n;
      std::int32_t* right = data + j * n;
      if (!std::lexicographical_compare(right, right + n, left, left + n)) break;
      std::swap_ranges(left, left + n, right);
    }
  }
}

}  // namespace

bool KeyReader::read(std::uint32_t u, std::size_t t, Key& out) const {
  const std::size_t n = columns_.size();
  out.resize(n * arity_);
  for (std::size_t a = 0; a < n; ++a) {
    const auto cell = columns_[a]->cell(u, t);
    for (std::size_t m = 0; m < arity_; ++m) {
      if (cell[m] == kMissing) return false;
      out[m * n + a] = cell[m];
    }
  }
  if (arity_ > 1) sort_members(out.data(), arity_, n);
  return true;
}

bool KeyReader::read_edge(EdgeEnds ends, std::size_t t, Key& out) const {
  Key& second = scratch_;
  if (!read(ends.source, t, out) || !read(ends.target, t, second)) return false;
  const std::size_t w = width();
  if (!graph_->directed() && std::lexicographical_compare(second.begin(), second.end(), out.begin(), out.end())) {
    out.insert(out.begin(), second.begin(), second.end());
  } else {
    out.insert(out.end(), second.begin(), second.end());
  }
  out.resize(2 * w);
  return true;
}

AttrTuple KeyReader::decode(const Key& key, std::size_t offset) const {
  const std::size_t n = columns_.size();
  AttrTuple out;
  out.reserve(width());
  for (std::size_t i = 0; i < width(); ++i) out.push_back(columns_[i % n]->decode(key[offset + i]));
  return out;
}

AggregateGraph KeyReader::finish(const KeyCounts& nodes, const KeyCounts& edges,
                                 const std::vector<std::string>& attrs, AggMode mode,
                                 IntervalSet interval) const {
  AggregateGraph out;
  out.attrs = attrs;
  out.mode = mode;
  out.interval = std::move(interval);
  out.directed = graph_->directed();
  out.members = arity_;
  for (const auto& [key, weight] : nodes) out.nodes.emplace(decode(key, 0), weight);
  for (const auto& [key, weight] : edges) out.edges.emplace(EdgeKey{decode(key, 0), decode(key, width())}, weight);
  return out;
}

}  // namespace detail

std::string_view to_string(AggMode mode) { return mode == AggMode::kDist ? "dist" : "all"; }

AggMode parse_agg_mode(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "dist") return AggMode::kDist;
  if (lower == "all") return AggMode::kAll;
  throw UsageError("aggregation mode must be 'dist' or 'all', got '" + std::string(text) + "'");
}

std::uint64_t AggregateGraph::node_weight(const AttrTuple& key) const {
  const auto it = nodes.find(key);
  return it == nodes.end() ? 0 : it->second;
}

std::uint64_t AggregateGraph::edge_weight(const AttrTuple& source, const AttrTuple& target) const {
  auto it = edges.find({source, target});
  if (it == edges.end() && !directed) it = edges.find({target, source});
  return it == edges.end() ? 0 : it->second;
}

namespace {

TimeMask checked_mask(const TemporalGraph& graph, const IntervalSet& interval) {
  if (interval.empty()) throw IntervalError("aggregation interval is empty");
  return interval.mask(graph.time_points());
}

// Adds `key` to `seen` and returns true when it was not there yet.
bool first_sighting(std::vector<detail::Key>& seen, const detail::Key& key) {
  if (std::find(seen.begin(), seen.end(), key) != seen.end()) return false;
  seen.push_back(key);
  return true;
}

}  // namespace

AggregateGraph aggregate(const TemporalGraph& graph, const IntervalSet& interval,
                         const std::vector<std::string>& attrs, AggMode mode) {
  const detail::KeyReader reader(graph, attrs);
  const TimeMask mask = checked_mask(graph, interval);
  const bool dist = mode == AggMode::kDist;
  detail::KeyCounts nodes;
  detail::KeyCounts edges;
  detail::Key key;
  std::vector<detail::Key> seen;

  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    seen.clear();
    const TimeMask live = mask & graph.node_presence(u);
    live.for_each_set([&](std::size_t t) {
      if (!reader.read(u, t, key)) return;
      if (!dist || first_sighting(seen, key)) ++nodes[key];
    });
  }
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    seen.clear();
    const EdgeEnds ends = graph.edge(e);
    const TimeMask live = mask & graph.edge_presence(e);
    live.for_each_set([&](std::size_t t) {
      if (!reader.read_edge(ends, t, key)) return;
      if (!dist || first_sighting(seen, key)) ++edges[key];
    });
  }
  return reader.finish(nodes, edges, attrs, mode, interval);
}

AggregateGraph aggregate_static_fast(const TemporalGraph& graph, const IntervalSet& interval,
                                     const std::vector<std::string>& attrs, AggMode mode) {
  const detail::KeyReader reader(graph, attrs);
  if (!reader.all_static()) throw UsageError("the static fast path needs static attributes only");
  const TimeMask mask = checked_mask(graph, interval);
  const bool dist = mode == AggMode::kDist;

  // Static keys do not depend on time: read each node once.
  std::vector<detail::Key> node_keys(graph.node_count());
  std::vector<char> complete(graph.node_count(), 0);
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) complete[u] = reader.read(u, 0, node_keys[u]) ? 1 : 0;

  detail::KeyCounts nodes;
  detail::KeyCounts edges;
  for (std::uint32_t u = 0; u < graph.node_count(); ++u) {
    if (!complete[u]) continue;
    const std::size_t appearances = graph.node_presence(u).count_and(mask);
    if (appearances == 0) continue;
    nodes[node_keys[u]] += dist ? 1 : appearances;
  }
  detail::Key key;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const EdgeEnds ends = graph.edge(e);
    if (!complete[ends.source] || !complete[ends.target]) continue;
    const std::size_t appearances = graph.edge_presence(e).count_and(mask);
    if (appearances == 0) continue;
    const detail::Key& a = node_keys[ends.source];
    const detail::Key& b = node_keys[ends.target];
    const bool swap = !graph.directed() && std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    key = swap ? b : a;
    const detail::Key& rest = swap ? a : b;
    key.insert(key.end(), rest.begin(), rest.end());
    edges[key] += dist ? 1 : appearances;
  }
  return reader.finish(nodes, edges, attrs, mode, interval);
}

AttrTuple parse_key(std::string_view text, std::size_t width) {
  auto split_on = [](std::string_view s, char sep) {
    AttrTuple out;
    std::size_t pos = 0;
    while (true) {
      const std::size_t next = s.find(sep, pos);
      out.emplace_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    return out;
  };
  AttrTuple values;
  for (const auto& member : split_on(text, '|')) {
    for (auto& value : split_on(member, ',')) values.push_back(std::move(value));
  }
  if (values.size() == width) return values;
  if (values.size() == 1 && text.size() == width) {
    AttrTuple chars;
    for (char c : text) chars.emplace_back(1, c);
    return chars;
  }
  throw UsageError("key '" + std::string(text) + "' does not have " + std::to_string(width) + " values");
}

std::string render_key(const AttrTuple& key, std::size_t members) {
  const std::size_t per_member = members == 0 ? key.size() : key.size() / members;
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += (per_member > 0 && i % per_member == 0) ? '|' : ',';
    out += key[i];
  }
  return out;
}

}  // namespace graphtempo
