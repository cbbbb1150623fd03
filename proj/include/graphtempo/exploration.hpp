#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

#include "graphtempo/aggregate.hpp"
#include "graphtempo/temporal_graph.hpp"
#include "graphtempo/temporal_ops.hpp"

namespace graphtempo {

enum class Event { kStability, kGrowth, kShrinkage };
enum class Extremal { kMinimal, kMaximal };
/// Which side of the pair stays a single time point. OLD_FIXED extends the
/// new side to the right; NEW_FIXED extends the old side to the left.
enum class Reference { kOldFixed, kNewFixed };

std::string_view to_string(Event event);
std::string_view to_string(Extremal extremal);
std::string_view to_string(Reference reference);
Event parse_event(std::string_view text);
Extremal parse_extremal(std::string_view text);
Reference parse_reference(std::string_view text);

struct Target {
  enum class Kind { kNode, kEdge };

  Kind kind = Kind::kNode;
  AttrTuple node;  // kNode
  EdgeKey edge;    // kEdge
  std::vector<std::string> attrs;
  AggMode mode = AggMode::kDist;
  bool triangle = false;

  static Target node_key(AttrTuple key, std::vector<std::string> attrs, AggMode mode = AggMode::kDist);
  static Target edge_key(AttrTuple source, AttrTuple target, std::vector<std::string> attrs,
                         AggMode mode = AggMode::kDist);
  /// Triangle target; member tuples are put in canonical order.
  static Target pattern_key(AttrTuple key, std::vector<std::string> attrs, AggMode mode = AggMode::kDist);
};

/// Sentinel threshold that no weight reaches.
inline constexpr std::uint64_t kUnreachable = std::numeric_limits<std::uint64_t>::max();

struct ExplorationQuery {
  Event event = Event::kStability;
  Extremal extremal = Extremal::kMinimal;
  Reference reference = Reference::kOldFixed;
  std::uint64_t k = 1;
  Target target;
};

/// A reference time point and the contiguous run it is paired with.
struct IntervalPair {
  std::size_t reference = 0;
  Interval extended;

  /// Old and new sides in time order.
  Interval old_side(Reference ref) const;
  Interval new_side(Reference ref) const;

  friend auto operator<=>(const IntervalPair&, const IntervalPair&) = default;
};

struct ScoredPair {
  IntervalPair pair;
  std::uint64_t weight = 0;

  friend bool operator==(const ScoredPair&, const ScoredPair&) = default;
};

struct ExplorationResult {
  ExplorationQuery query;
  std::vector<ScoredPair> pairs;      // sorted by reference, then extension
  std::vector<ScoredPair> evaluated;  // every pair whose weight was computed
  std::size_t evaluations = 0;        // aggregate graphs computed
};

/// Weight of the target in the aggregate of the event graph: stability uses
/// intersection(old, new), growth difference(new, old), shrinkage
/// difference(old, new). Triangle targets are evaluated on the tri-graph.
std::uint64_t event_weight(const TemporalGraph& graph, Event event, const Side& old_side, const Side& new_side,
                           const Target& target);
std::uint64_t event_weight(const TemporalGraph& graph, Event event, const IntervalSet& t_old,
                           const IntervalSet& t_new, const Target& target);

/// True when the case's weight can only grow as the moving side is extended.
bool weight_increases(Event event, Extremal extremal, Reference reference);

/// Minimal pairs: extends the moving side by union until w >= k.
ExplorationResult u_explore(const TemporalGraph& graph, const ExplorationQuery& query);
/// Maximal pairs: extends the moving side by intersection while w >= k.
ExplorationResult i_explore(const TemporalGraph& graph, const ExplorationQuery& query);
/// Dispatches the twelve (event, extremal, reference) cases, taking the
/// consecutive-pairs-only and longest-extension-only shortcuts where the
/// weight is monotone in the useful direction.
ExplorationResult explore(const TemporalGraph& graph, const ExplorationQuery& query);

/// Evaluates every (reference, extension) pair and keeps the minimal or
/// maximal qualifying ones. Throws UsageError above `max_points` time points.
ExplorationResult brute_force_explore(const TemporalGraph& graph, const ExplorationQuery& query,
                                      std::size_t max_points = 8);

struct ThresholdHint {
  std::uint64_t w_min = 0;
  std::uint64_t w_max = 0;
  std::uint64_t start = 0;
  std::vector<std::uint64_t> consecutive;  // weight of ([t_i], [t_i+1])
};

/// Target weights of the event over all consecutive point pairs. The start
/// value is w_min for cases whose weight increases with extension, else w_max.
/// Throws UsageError when the domain has fewer than two points.
ThresholdHint init_threshold(const TemporalGraph& graph, Event event, Extremal extremal, Reference reference,
                             const Target& target);

/// Time points covered by a result pair (reference plus extension).
std::vector<std::size_t> pair_points(const IntervalPair& pair);
/// Point sets of the result, keeping only those not strictly contained in another.
std::vector<std::vector<std::size_t>> maximal_point_sets(const ExplorationResult& result);

}  // namespace graphtempo
