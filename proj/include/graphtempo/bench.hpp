#pragma once

#include <string>
#include <vector>

#include "graphtempo/temporal_graph.hpp"
#include "graphtempo/temporal_ops.hpp"

namespace graphtempo {

/// One timed comparison; times are the minimum over the repeats.
struct BenchRow {
  std::string label;
  double baseline_ms = 0;
  double candidate_ms = 0;
  bool agree = true;  // both paths produced the same aggregate

  double ratio() const { return candidate_ms > 0 ? baseline_ms / candidate_ms : 0; }
};

/// Direct union + ALL aggregation (baseline) against rollup of cached
/// per-point aggregates (candidate), for T1 = [t0..t(i-1)], T2 = [ti].
/// Cache construction is not part of the candidate time.
std::vector<BenchRow> bench_rollup(const TemporalGraph& graph, const std::vector<std::string>& attrs,
                                   std::size_t repeats);

/// Triangle aggregation of op([ti], [ti+1]) built tri-graph first (baseline)
/// against operator first (candidate).
std::vector<BenchRow> bench_pattern(const TemporalGraph& graph, SetOp op, const std::vector<std::string>& attrs,
                                    std::size_t repeats);

/// CSV with columns label,baseline_ms,candidate_ms,ratio,agree.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace graphtempo
