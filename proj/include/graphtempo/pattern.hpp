#pragma once

#include <optional>
#include <string_view>

#include "graphtempo/aggregate.hpp"
#include "graphtempo/temporal_graph.hpp"
#include "graphtempo/temporal_ops.hpp"

namespace graphtempo {

/// Structural patterns understood by pattern aggregation. Only the closed,
/// undirected triangle is implemented.
enum class Pattern { kTriangle };

/// Accepts "triangle"; any other name raises UnsupportedError.
Pattern parse_pattern(std::string_view name);

/// Order of composing a temporal operator with tri-graph construction.
enum class PatternStrategy {
  kTriFirst,  // build the tri-graph over T1 and T2, then apply the operator
  kOpFirst,   // apply the operator, then build the tri-graph of the result
};

std::string_view to_string(PatternStrategy strategy);
PatternStrategy parse_strategy(std::string_view text);
/// OP_FIRST for intersection, TRI_FIRST otherwise.
PatternStrategy default_strategy(SetOp op);

/// One node per triangle {a, b, c} that closes at some point of `interval`
/// (edge direction ignored), present exactly where all three edges are.
/// Two triangles sharing an original node are linked while both exist.
/// Node ids are "a|b|c" with members in id order; attribute cells hold the
/// three member values.
TemporalGraph build_tri_graph(const TemporalGraph& graph, const IntervalSet& interval);

struct PatternOp {
  SetOp op;
  IntervalSet t1;
  IntervalSet t2;
};

/// Aggregates the triangles of `graph` (restricted to `interval`), or of an
/// operator result when `op` is given, composing per `strategy`. `interval`
/// is ignored when `op` is present.
AggregateGraph aggregate_pattern(const TemporalGraph& graph, const std::optional<PatternOp>& op,
                                 const IntervalSet& interval, const std::vector<std::string>& attrs,
                                 AggMode mode, PatternStrategy strategy, Pattern pattern = Pattern::kTriangle);

}  // namespace graphtempo
