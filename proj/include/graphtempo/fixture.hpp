#pragma once

#include "graphtempo/temporal_graph.hpp"

namespace graphtempo {

/// The five-author running example: time points t0..t2, nodes u1..u5 with
/// static `gender` and time-varying `publications`. Directed edges:
///   t0: u1-u2 u1-u3 u1-u4 u2-u4 u3-u4
///   t1: u1-u2 u1-u4 u2-u4 u2-u5 u4-u5
///   t2: u2-u4 u4-u5
TemporalGraph build_fixture_authors();

}  // namespace graphtempo
