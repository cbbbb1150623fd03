#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "graphtempo/aggregate.hpp"
#include "graphtempo/temporal_graph.hpp"

namespace graphtempo {

/// Thread-safe store of materialized aggregates. Entries are keyed by the
/// sorted attribute list and returned in the caller's attribute order.
/// With a root directory every insertion is also written to
/// `<root>/<attrs joined by '+'>/<time label>.json`, and lookups that miss
/// in memory fall back to those files.
class AggregateCache {
 public:
  explicit AggregateCache(TimeDomain time, std::optional<std::filesystem::path> root = std::nullopt);

  const TimeDomain& time() const noexcept { return time_; }
  const std::optional<std::filesystem::path>& root() const noexcept { return root_; }

  /// Stores the ALL-mode aggregate of a single time point.
  void put_timepoint(std::size_t t, const AggregateGraph& aggregate);
  std::shared_ptr<const AggregateGraph> get_timepoint(const std::vector<std::string>& attrs, std::size_t t) const;

  /// Stores an aggregate over an arbitrary interval set (any mode).
  void put_interval(const AggregateGraph& aggregate);
  std::shared_ptr<const AggregateGraph> get_interval(const std::vector<std::string>& attrs,
                                                     const IntervalSet& interval, AggMode mode) const;

  std::size_t size() const;
  std::uint64_t hits() const noexcept { return hits_.load(); }
  std::uint64_t misses() const noexcept { return misses_.load(); }

  /// Directory name used for an attribute list.
  static std::string attrs_key(const std::vector<std::string>& attrs);

 private:
  std::string entry_name(const std::vector<std::string>& sorted, const std::string& leaf) const;
  std::shared_ptr<const AggregateGraph> lookup(const std::vector<std::string>& attrs, const std::string& leaf) const;
  void store(const AggregateGraph& aggregate, const std::string& leaf);

  TimeDomain time_;
  std::optional<std::filesystem::path> root_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::string, std::shared_ptr<const AggregateGraph>> entries_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// Fills a cache with the ALL aggregate of every single time point.
void precompute_timepoint_aggregates(AggregateCache& cache, const TemporalGraph& graph,
                                     const std::vector<std::string>& attrs);

/// Keywise sum of cached per-point aggregates over t1 ∪ t2; equals the ALL
/// aggregate of the union graph. Throws UnsupportedError for DIST and
/// CacheMissError when a point is not cached.
AggregateGraph rollup_time_union_all(const AggregateCache& cache, const IntervalSet& t1, const IntervalSet& t2,
                                     const std::vector<std::string>& attrs, AggMode mode = AggMode::kAll);

/// Projects keys onto `subset` (any order) and sums weights. Throws
/// UsageError when `subset` is not contained in the aggregate's attributes,
/// and UnsupportedError for a DIST aggregate over more than one time point
/// that drops attributes (distinct counts do not add up there).
AggregateGraph rollup_attributes(const AggregateGraph& aggregate, const std::vector<std::string>& subset);

/// rollup_time_union_all, computing and caching any missing time points from
/// the graph first.
AggregateGraph union_all_cached(AggregateCache& cache, const TemporalGraph& graph, const IntervalSet& t1,
                                const IntervalSet& t2, const std::vector<std::string>& attrs);

}  // namespace graphtempo
