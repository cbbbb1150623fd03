#pragma once

#include "graphtempo/temporal_graph.hpp"
#include "graphtempo/time_domain.hpp"

namespace graphtempo {

enum class SetOp { kUnion, kIntersection, kDifference };

/// How an entity "exists in" a side: at some point (union semantics) or at
/// every point (intersection semantics) of the side's time points.
enum class Quantifier { kAny, kAll };

struct Side {
  TimeMask points;
  Quantifier quantifier = Quantifier::kAny;

  /// An empty side contains no entity under either quantifier.
  bool holds(BitRow presence) const noexcept {
    if (points.none()) return false;
    return quantifier == Quantifier::kAny ? presence.intersects(points) : presence.covers(points);
  }
};

Side any_of(const IntervalSet& points, std::size_t n);
Side all_of(const IntervalSet& points, std::size_t n);

/// Time points an operator result keeps: the union of both sides for union
/// and intersection, the first side for difference.
TimeMask retained_points(SetOp op, const Side& a, const Side& b);

/// Generic binary operator. The result keeps the full time domain; bits
/// outside retained_points() are zero.
///   union:        entities existing in a or in b
///   intersection: entities existing in a and in b
///   difference:   edges in a and not in b; nodes in a and (not in b or
///                 endpoint of a kept edge)
TemporalGraph combine(const TemporalGraph& graph, SetOp op, const Side& a, const Side& b);

/// Entities present at every point of `interval`, timestamps restricted to it.
TemporalGraph project(const TemporalGraph& graph, const Interval& interval);

TemporalGraph temporal_union(const TemporalGraph& graph, const IntervalSet& t1, const IntervalSet& t2);
TemporalGraph temporal_intersection(const TemporalGraph& graph, const IntervalSet& t1, const IntervalSet& t2);
TemporalGraph temporal_difference(const TemporalGraph& graph, const IntervalSet& t1, const IntervalSet& t2);

/// Applies one of the three binary operators with union semantics on both sides.
TemporalGraph apply(const TemporalGraph& graph, SetOp op, const IntervalSet& t1, const IntervalSet& t2);

}  // namespace graphtempo
