#include "graphtempo/materialization.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "graphtempo/errors.hpp"
#include "graphtempo/export.hpp"
#include "graphtempo/temporal_ops.hpp"

namespace graphtempo {

namespace {

std::vector<std::string> sorted_copy(std::vector<std::string> attrs) {
  std::sort(attrs.begin(), attrs.end());
  return attrs;
}

std::string timepoint_leaf(const TimeDomain& time, std::size_t t) { return time.label(t); }

std::string interval_leaf(const TimeDomain& time, const IntervalSet& interval, AggMode mode) {
  return interval.to_string(time) + "." + std::string(to_string(mode));
}

// Reorders member blocks so a pattern key is canonical again.
void sort_member_blocks(AttrTuple& key, std::size_t members) {
  if (members <= 1 || key.empty()) return;
  const std::size_t n = key.size() / members;
  std::vector<AttrTuple> blocks;
  for (std::size_t m = 0; m < members; ++m) {
    blocks.emplace_back(key.begin() + static_cast<std::ptrdiff_t>(m * n),
                        key.begin() + static_cast<std::ptrdiff_t>((m + 1) * n));
  }
  std::sort(blocks.begin(), blocks.end());
  key.clear();
  for (auto& block : blocks) key.insert(key.end(), block.begin(), block.end());
}

}  // namespace

AggregateCache::AggregateCache(TimeDomain time, std::optional<std::filesystem::path> root)
    : time_(std::move(time)), root_(std::move(root)) {}

std::string AggregateCache::attrs_key(const std::vector<std::string>& attrs) {
  std::string out;
  for (const auto& name : sorted_copy(attrs)) {
    if (!out.empty()) out += '+';
    out += name;
  }
  return out;
}

std::string AggregateCache::entry_name(const std::vector<std::string>& sorted, const std::string& leaf) const {
  return attrs_key(sorted) + "/" + leaf;
}

std::shared_ptr<const AggregateGraph> AggregateCache::lookup(const std::vector<std::string>& attrs,
                                                             const std::string& leaf) const {
  const std::string name = entry_name(attrs, leaf);
  std::shared_ptr<const AggregateGraph> found;
  {
    std::shared_lock lock(mutex_);
    const auto it = entries_.find(name);
    if (it != entries_.end()) found = it->second;
  }
  if (!found && root_) {
    const auto path = *root_ / (name + ".json");
    std::ifstream in(path);
    if (in) {
      std::stringstream text;
      text << in.rdbuf();
      AggregateGraph loaded = aggregate_from_json(text.str());
      if (loaded.attrs.empty()) {
        // An empty aggregate is stored as "{}" and carries no schema.
        loaded.attrs = sorted_copy(attrs);
        loaded.mode = AggMode::kAll;
      }
      auto entry = std::make_shared<const AggregateGraph>(std::move(loaded));
      std::unique_lock lock(mutex_);
      found = entries_.emplace(name, std::move(entry)).first->second;
    }
  }
  if (!found) {
    ++misses_;
    return nullptr;
  }
  ++hits_;
  if (found->attrs == attrs) return found;
  return std::make_shared<const AggregateGraph>(rollup_attributes(*found, attrs));
}

void AggregateCache::store(const AggregateGraph& aggregate, const std::string& leaf) {
  const std::vector<std::string> sorted = sorted_copy(aggregate.attrs);
  auto entry = std::make_shared<const AggregateGraph>(
      aggregate.attrs == sorted ? aggregate : rollup_attributes(aggregate, sorted));
  const std::string name = entry_name(sorted, leaf);
  if (root_) {
    const auto path = *root_ / (name + ".json");
    std::filesystem::create_directories(path.parent_path());
    // Write to a temporary file first so readers never see a partial entry.
    const auto partial = path.string() + ".tmp";
    {
      std::ofstream out(partial);
      if (!out) throw Error("cannot write cache entry '" + path.string() + "'");
      out << aggregate_to_json(*entry) << '\n';
    }
    std::filesystem::rename(partial, path);
  }
  std::unique_lock lock(mutex_);
  entries_[name] = std::move(entry);
}

void AggregateCache::put_timepoint(std::size_t t, const AggregateGraph& aggregate) {
  if (t >= time_.size()) throw IntervalError("time index outside the cache's time domain");
  if (aggregate.mode != AggMode::kAll) throw UsageError("per-point cache entries are ALL aggregates");
  store(aggregate, timepoint_leaf(time_, t));
}

std::shared_ptr<const AggregateGraph> AggregateCache::get_timepoint(const std::vector<std::string>& attrs,
                                                                    std::size_t t) const {
  if (t >= time_.size()) throw IntervalError("time index outside the cache's time domain");
  return lookup(attrs, timepoint_leaf(time_, t));
}

void AggregateCache::put_interval(const AggregateGraph& aggregate) {
  store(aggregate, interval_leaf(time_, aggregate.interval, aggregate.mode));
}

std::shared_ptr<const AggregateGraph> AggregateCache::get_interval(const std::vector<std::string>& attrs,
                                                                   const IntervalSet& interval,
                                                                   AggMode mode) const {
  return lookup(attrs, interval_leaf(time_, interval, mode));
}

std::size_t AggregateCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void precompute_timepoint_aggregates(AggregateCache& cache, const TemporalGraph& graph,
                                     const std::vector<std::string>& attrs) {
  if (!(cache.time() == graph.time())) throw UsageError("cache and graph use different time domains");
  for (std::size_t t = 0; t < graph.time_points(); ++t) {
    cache.put_timepoint(t, aggregate(graph, IntervalSet::point(t), attrs, AggMode::kAll));
  }
}

AggregateGraph rollup_time_union_all(const AggregateCache& cache, const IntervalSet& t1, const IntervalSet& t2,
                                     const std::vector<std::string>& attrs, AggMode mode) {
  if (mode != AggMode::kAll) throw UnsupportedError("distinct union aggregates cannot be rolled up over time");
  const IntervalSet covered = t1.unite(t2);
  if (covered.empty()) throw IntervalError("rollup interval is empty");
  covered.check_within(cache.time().size());

  AggregateGraph out;
  out.attrs = attrs;
  out.mode = AggMode::kAll;
  out.interval = covered;
  bool first = true;
  bool shape_from_empty = true;
  for (const Interval& run : covered.intervals()) {
    for (std::size_t t = run.start; t <= run.end; ++t) {
      const auto entry = cache.get_timepoint(attrs, t);
      if (!entry) throw CacheMissError("no cached aggregate for '" + cache.time().label(t) + "'");
      // Empty entries read back from disk carry no shape; prefer a non-empty one.
      if (first || (!entry->empty() && shape_from_empty)) {
        out.directed = entry->directed;
        out.members = entry->members;
        shape_from_empty = entry->empty();
        first = false;
      }
      for (const auto& [key, weight] : entry->nodes) out.nodes[key] += weight;
      for (const auto& [key, weight] : entry->edges) out.edges[key] += weight;
    }
  }
  return out;
}

AggregateGraph rollup_attributes(const AggregateGraph& aggregate, const std::vector<std::string>& subset) {
  if (subset.empty()) throw UsageError("attribute rollup needs at least one attribute");
  std::vector<std::size_t> positions;
  for (const auto& name : subset) {
    const auto it = std::find(aggregate.attrs.begin(), aggregate.attrs.end(), name);
    if (it == aggregate.attrs.end()) {
      throw UsageError("attribute '" + name + "' is not part of the aggregate");
    }
    positions.push_back(static_cast<std::size_t>(it - aggregate.attrs.begin()));
  }
  {
    auto unique = positions;
    std::sort(unique.begin(), unique.end());
    if (std::adjacent_find(unique.begin(), unique.end()) != unique.end()) {
      throw UsageError("rollup attributes must be distinct");
    }
  }
  const bool drops = subset.size() < aggregate.attrs.size();
  if (drops && aggregate.mode == AggMode::kDist && aggregate.interval.point_count() > 1) {
    throw UnsupportedError("distinct aggregates over several time points cannot be rolled up to fewer attributes");
  }

  const std::size_t n = aggregate.attrs.size();
  const std::size_t members = aggregate.members;
  auto project = [&](const AttrTuple& key) {
    AttrTuple out;
    out.reserve(subset.size() * members);
    for (std::size_t m = 0; m < members; ++m) {
      for (std::size_t p : positions) out.push_back(key.at(m * n + p));
    }
    sort_member_blocks(out, members);
    return out;
  };

  AggregateGraph out;
  out.attrs = subset;
  out.mode = aggregate.mode;
  out.interval = aggregate.interval;
  out.directed = aggregate.directed;
  out.members = members;
  for (const auto& [key, weight] : aggregate.nodes) out.nodes[project(key)] += weight;
  for (const auto& [key, weight] : aggregate.edges) {
    AttrTuple a = project(key.first);
    AttrTuple b = project(key.second);
    if (!aggregate.directed && b < a) std::swap(a, b);
    out.edges[{std::move(a), std::move(b)}] += weight;
  }
  return out;
}

AggregateGraph union_all_cached(AggregateCache& cache, const TemporalGraph& graph, const IntervalSet& t1,
                                const IntervalSet& t2, const std::vector<std::string>& attrs) {
  const IntervalSet covered = t1.unite(t2);
  covered.check_within(graph.time_points());
  for (const Interval& run : covered.intervals()) {
    for (std::size_t t = run.start; t <= run.end; ++t) {
      if (!cache.get_timepoint(attrs, t)) {
        cache.put_timepoint(t, aggregate(graph, IntervalSet::point(t), attrs, AggMode::kAll));
      }
    }
  }
  return rollup_time_union_all(cache, t1, t2, attrs);
}

}  // namespace graphtempo
