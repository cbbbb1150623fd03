#pragma once

#include <string>
#include <string_view>

#include "graphtempo/aggregate.hpp"
#include "graphtempo/evolution.hpp"
#include "graphtempo/exploration.hpp"
#include "graphtempo/temporal_graph.hpp"

namespace graphtempo {

enum class Format { kJson, kDot, kCsv };

Format parse_format(std::string_view text);

/// All renderers are deterministic: keys are emitted in sorted order and
/// percentages use four decimals.
std::string aggregate_to_json(const AggregateGraph& aggregate);
std::string aggregate_to_dot(const AggregateGraph& aggregate);
std::string aggregate_to_csv(const AggregateGraph& aggregate);
std::string render(const AggregateGraph& aggregate, Format format);

/// Inverse of aggregate_to_json. `{}` yields an empty aggregate.
AggregateGraph aggregate_from_json(std::string_view text);

std::string evolution_to_json(const AggregateEvolutionGraph& evolution);
std::string evolution_to_dot(const AggregateEvolutionGraph& evolution);
std::string evolution_to_csv(const AggregateEvolutionGraph& evolution);
std::string render(const AggregateEvolutionGraph& evolution, Format format);

std::string exploration_to_json(const ExplorationResult& result, const TimeDomain& time);
/// Reference x extension-length grid of evaluated weights; cells that were
/// never evaluated are empty.
std::string exploration_heatmap_csv(const ExplorationResult& result, const TimeDomain& time);

std::string graph_to_json(const TemporalGraph& graph);
std::string graph_to_dot(const TemporalGraph& graph);

}  // namespace graphtempo
