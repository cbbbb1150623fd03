#include "graphtempo/bench.hpp"

#include <chrono>
#include <limits>
#include <sstream>

#include "graphtempo/aggregate.hpp"
#include "graphtempo/errors.hpp"
#include "graphtempo/materialization.hpp"
#include "graphtempo/pattern.hpp"

namespace graphtempo {

namespace {

template <class F>
double best_of(std::size_t repeats, F&& body) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    best = std::min(best, elapsed.count());
  }
  return best;
}

}  // namespace

std::vector<BenchRow> bench_rollup(const TemporalGraph& graph, const std::vector<std::string>& attrs,
                                   std::size_t repeats) {
  const std::size_t n = graph.time_points();
  if (n < 2) throw UsageError("benchmark needs at least two time points");
  AggregateCache cache(graph.time());
  precompute_timepoint_aggregates(cache, graph, attrs);
  const IntervalSet all = IntervalSet::all(n);

  std::vector<BenchRow> rows;
  for (std::size_t i = 1; i < n; ++i) {
    const IntervalSet t1 = IntervalSet::range(0, i - 1);
    const IntervalSet t2 = IntervalSet::point(i);
    AggregateGraph direct;
    AggregateGraph rolled;
    BenchRow row;
    row.label = "union " + t1.to_string(graph.time()) + " " + t2.to_string(graph.time());
    row.baseline_ms = best_of(repeats, [&] {
      direct = aggregate(temporal_union(graph, t1, t2), all, attrs, AggMode::kAll);
    });
    row.candidate_ms = best_of(repeats, [&] { rolled = rollup_time_union_all(cache, t1, t2, attrs); });
    row.agree = direct == rolled;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BenchRow> bench_pattern(const TemporalGraph& graph, SetOp op, const std::vector<std::string>& attrs,
                                    std::size_t repeats) {
  const std::size_t n = graph.time_points();
  if (n < 2) throw UsageError("benchmark needs at least two time points");
  const IntervalSet all = IntervalSet::all(n);
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const PatternOp pattern_op{op, IntervalSet::point(i), IntervalSet::point(i + 1)};
    AggregateGraph tri_first;
    AggregateGraph op_first;
    BenchRow row;
    row.label = std::string(op == SetOp::kIntersection ? "intersection " : op == SetOp::kUnion ? "union " : "difference ") +
                graph.time().label(i) + " " + graph.time().label(i + 1);
    row.baseline_ms = best_of(repeats, [&] {
      tri_first = aggregate_pattern(graph, pattern_op, all, attrs, AggMode::kDist, PatternStrategy::kTriFirst);
    });
    row.candidate_ms = best_of(repeats, [&] {
      op_first = aggregate_pattern(graph, pattern_op, all, attrs, AggMode::kDist, PatternStrategy::kOpFirst);
    });
    row.agree = tri_first.nodes == op_first.nodes;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "label,baseline_ms,candidate_ms,ratio,agree\n";
  out.setf(std::ios::fixed);
  out.precision(4);
  for (const auto& row : rows) {
    out << row.label << ',' << row.baseline_ms << ',' << row.candidate_ms << ',' << row.ratio() << ','
        << (row.agree ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace graphtempo
