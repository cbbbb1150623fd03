#include "graphtempo/pattern.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "graphtempo/errors.hpp"

namespace graphtempo {

Pattern parse_pattern(std::string_view name) {
  if (name == "triangle") return Pattern::kTriangle;
  throw UnsupportedError("unsupported pattern '" + std::string(name) + "': only 'triangle' is available");
}

std::string_view to_string(PatternStrategy strategy) {
  return strategy == PatternStrategy::kTriFirst ? "tri-first" : "op-first";
}

PatternStrategy parse_strategy(std::string_view text) {
  if (text == "tri-first" || text == "TRI_FIRST") return PatternStrategy::kTriFirst;
  if (text == "op-first" || text == "OP_FIRST") return PatternStrategy::kOpFirst;
  throw UsageError("strategy must be 'tri-first' or 'op-first', got '" + std::string(text) + "'");
}

PatternStrategy default_strategy(SetOp op) {
  return op == SetOp::kIntersection ? PatternStrategy::kOpFirst : PatternStrategy::kTriFirst;
}

namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

struct Triangle {
  std::array<std::uint32_t, 3> members;  // sorted by node id string
  TimeMask bits;
};

}  // namespace

TemporalGraph build_tri_graph(const TemporalGraph& graph, const IntervalSet& interval) {
  const std::size_t n = graph.time_points();
  const TimeMask mask = interval.mask(n);

  // Undirected view: one row per unordered pair, restricted to the interval.
  std::unordered_map<std::uint64_t, TimeMask> links;
  std::vector<std::vector<std::uint32_t>> lower(graph.node_count());
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const EdgeEnds ends = graph.edge(e);
    if (ends.source == ends.target) continue;
    const TimeMask bits = mask & graph.edge_presence(e);
    if (bits.none()) continue;
    auto [it, inserted] = links.try_emplace(pair_key(ends.source, ends.target), bits);
    if (!inserted) {
      it->second |= bits;
      continue;
    }
    const std::uint32_t hi = std::max(ends.source, ends.target);
    const std::uint32_t lo = std::min(ends.source, ends.target);
    lower[hi].push_back(lo);
  }

  std::vector<Triangle> triangles;
  for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
    auto& neighbours = lower[v];
    std::sort(neighbours.begin(), neighbours.end());
    for (std::size_t x = 0; x < neighbours.size(); ++x) {
      const std::uint32_t i = neighbours[x];
      const TimeMask& iv = links.at(pair_key(i, v));
      for (std::size_t y = x + 1; y < neighbours.size(); ++y) {
        const std::uint32_t j = neighbours[y];
        const auto ij = links.find(pair_key(i, j));
        if (ij == links.end()) continue;
        TimeMask bits = iv & links.at(pair_key(j, v));
        bits &= ij->second;
        if (bits.none()) continue;
        std::array<std::uint32_t, 3> members{i, j, v};
        std::sort(members.begin(), members.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return graph.node_id(a) < graph.node_id(b); });
        triangles.push_back({members, std::move(bits)});
      }
    }
  }
  std::sort(triangles.begin(), triangles.end(), [&](const Triangle& a, const Triangle& b) {
    for (std::size_t m = 0; m < 3; ++m) {
      const auto& x = graph.node_id(a.members[m]);
      const auto& y = graph.node_id(b.members[m]);
      if (x != y) return x < y;
    }
    return false;
  });

  std::vector<std::string> ids;
  PresenceMatrix nodes(n);
  std::vector<std::vector<std::uint32_t>> containing(graph.node_count());
  for (std::uint32_t k = 0; k < triangles.size(); ++k) {
    const auto& members = triangles[k].members;
    ids.push_back(graph.node_id(members[0]) + "|" + graph.node_id(members[1]) + "|" + graph.node_id(members[2]));
    nodes.append_row(triangles[k].bits);
    for (std::uint32_t m : members) containing[m].push_back(k);
  }

  // Link triangles sharing a node; a pair sharing two nodes is seen twice.
  std::vector<std::uint64_t> pairs;
  for (const auto& list : containing) {
    for (std::size_t x = 0; x < list.size(); ++x) {
      for (std::size_t y = x + 1; y < list.size(); ++y) pairs.push_back(pair_key(list[x], list[y]));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<EdgeEnds> ends;
  PresenceMatrix edges(n);
  for (std::uint64_t p : pairs) {
    const auto a = static_cast<std::uint32_t>(p >> 32);
    const auto b = static_cast<std::uint32_t>(p & 0xffffffffU);
    const TimeMask bits = triangles[a].bits & triangles[b].bits;
    if (bits.none()) continue;
    ends.push_back({a, b});
    edges.append_row(bits);
  }

  AttributeCatalog attributes;
  for (const auto& column : graph.attributes().columns()) {
    if (column.arity() != 1) throw UsageError("tri-graphs can only be built from ordinary graphs");
    std::vector<std::int32_t> codes;
    if (column.is_static()) {
      codes.reserve(triangles.size() * 3);
      for (const auto& tri : triangles) {
        for (std::uint32_t m : tri.members) codes.push_back(column.cell(m, 0)[0]);
      }
    } else {
      codes.assign(triangles.size() * n * 3, kMissing);
      for (std::size_t k = 0; k < triangles.size(); ++k) {
        triangles[k].bits.for_each_set([&](std::size_t t) {
          std::array<std::int32_t, 3> cell{};
          for (std::size_t m = 0; m < 3; ++m) cell[m] = column.cell(triangles[k].members[m], t)[0];
          if (std::find(cell.begin(), cell.end(), kMissing) != cell.end()) return;
          std::copy(cell.begin(), cell.end(), codes.begin() + static_cast<std::ptrdiff_t>((k * n + t) * 3));
        });
      }
    }
    attributes.add(AttributeColumn(column.name(), column.kind(), column.dictionary(), std::move(codes),
                                   triangles.size(), n, 3));
  }
  return TemporalGraph(graph.time(), std::move(ids), std::move(nodes), std::move(ends), std::move(edges),
                       std::move(attributes), /*directed=*/false, 3);
}

AggregateGraph aggregate_pattern(const TemporalGraph& graph, const std::optional<PatternOp>& op,
                                 const IntervalSet& interval, const std::vector<std::string>& attrs,
                                 AggMode mode, PatternStrategy strategy, Pattern pattern) {
  if (pattern != Pattern::kTriangle) throw UnsupportedError("only triangle patterns are supported");
  const std::size_t n = graph.time_points();
  if (!op) return aggregate(build_tri_graph(graph, interval), interval, attrs, mode);

  const IntervalSet covered = op->t1.unite(op->t2);
  if (covered.empty()) throw IntervalError("operator intervals are empty");
  const IntervalSet all = IntervalSet::all(n);
  if (strategy == PatternStrategy::kTriFirst) {
    const TemporalGraph tri = build_tri_graph(graph, covered);
    return aggregate(apply(tri, op->op, op->t1, op->t2), all, attrs, mode);
  }
  const TemporalGraph reduced = apply(graph, op->op, op->t1, op->t2);
  return aggregate(build_tri_graph(reduced, all), all, attrs, mode);
}

}  // namespace graphtempo
