#include "graphtempo/evolution.hpp"

#include <algorithm>
#include <optional>

#include "graphtempo/errors.hpp"
#include "graphtempo/pattern.hpp"
#include "graphtempo/temporal_ops.hpp"
#include "key_codec.hpp"

namespace graphtempo {

EvolutionGraph evolution_graph(const TemporalGraph& graph, const IntervalSet& t_old, const IntervalSet& t_new) {
  EvolutionGraph out{temporal_intersection(graph, t_old, t_new), temporal_difference(graph, t_old, t_new),
                     temporal_difference(graph, t_new, t_old), {}, {}};
  auto label = [&](const TemporalGraph& part, std::uint8_t flag) {
    for (const auto& id : part.node_ids()) out.node_labels[id] |= flag;
    for (const EdgeEnds& e : part.edge_list()) {
      out.edge_labels[{part.node_id(e.source), part.node_id(e.target)}] |= flag;
    }
  };
  label(out.stable, kStable);
  label(out.grow, kGrown);
  label(out.shrink, kShrunk);
  return out;
}

EventWeights AggregateEvolutionGraph::node(const AttrTuple& key) const {
  const auto it = nodes.find(key);
  return it == nodes.end() ? EventWeights{} : it->second;
}

EventWeights AggregateEvolutionGraph::edge(const AttrTuple& source, const AttrTuple& target) const {
  auto it = edges.find({source, target});
  if (it == edges.end() && !directed) it = edges.find({target, source});
  return it == edges.end() ? EventWeights{} : it->second;
}

namespace {

using detail::Key;
using detail::KeyReader;

enum class Slot { kStability, kGrowth, kShrinkage };

struct Tally {
  std::unordered_map<Key, EventWeights, detail::KeyHash> counts;

  void add(const Key& key, Slot slot, std::uint64_t amount = 1) {
    EventWeights& w = counts[key];
    (slot == Slot::kStability ? w.stability : slot == Slot::kGrowth ? w.growth : w.shrinkage) += amount;
  }
};

// Collects the distinct keys of one entity over `points`, and optionally the
// per-appearance key sequence.
template <class Read>
void keys_over(const TimeMask& points, Read&& read, std::vector<Key>& distinct, std::vector<Key>* appearances) {
  Key key;
  points.for_each_set([&](std::size_t t) {
    if (!read(t, key)) return;
    if (std::find(distinct.begin(), distinct.end(), key) == distinct.end()) distinct.push_back(key);
    if (appearances) appearances->push_back(key);
  });
}

template <class Read>
void tally_entity(BitRow presence, const TimeMask& old_mask, const TimeMask& new_mask, bool dist, Read&& read,
                  Tally& tally) {
  const TimeMask in_old = old_mask & presence;
  const TimeMask in_new = new_mask & presence;
  const bool old_side = in_old.any();
  const bool new_side = in_new.any();
  if (!old_side && !new_side) return;

  if (old_side && new_side) {
    std::vector<Key> old_keys;
    std::vector<Key> new_keys;
    keys_over(in_old, read, old_keys, nullptr);
    keys_over(in_new, read, new_keys, nullptr);
    auto persistent = [&](const Key& key) {
      return std::find(old_keys.begin(), old_keys.end(), key) != old_keys.end() &&
             std::find(new_keys.begin(), new_keys.end(), key) != new_keys.end();
    };
    if (dist) {
      for (const Key& key : old_keys) {
        if (persistent(key)) tally.add(key, Slot::kStability);
      }
      return;
    }
    std::vector<Key> seen;
    std::vector<Key> appearances;
    keys_over(in_old | in_new, read, seen, &appearances);
    for (const Key& key : appearances) {
      if (persistent(key)) tally.add(key, Slot::kStability);
    }
    return;
  }

  const Slot slot = old_side ? Slot::kShrinkage : Slot::kGrowth;
  std::vector<Key> distinct;
  std::vector<Key> appearances;
  keys_over(old_side ? in_old : in_new, read, distinct, dist ? nullptr : &appearances);
  for (const Key& key : dist ? distinct : appearances) tally.add(key, slot);
}

}  // namespace

AggregateEvolutionGraph aggregate_evolution(const TemporalGraph& graph, const IntervalSet& t_old,
                                            const IntervalSet& t_new, const std::vector<std::string>& attrs,
                                            AggMode mode, EvolutionPattern pattern) {
  detail::check_attrs(attrs);
  const std::size_t n = graph.time_points();
  const TimeMask old_mask = t_old.mask(n);
  const TimeMask new_mask = t_new.mask(n);
  if (old_mask.none() || new_mask.none()) throw IntervalError("evolution intervals must not be empty");

  const TemporalGraph* base = &graph;
  std::optional<TemporalGraph> tri;
  if (pattern == EvolutionPattern::kTriangle) {
    tri.emplace(build_tri_graph(graph, t_old.unite(t_new)));
    base = &*tri;
  }
  const KeyReader reader(*base, attrs);
  const bool dist = mode == AggMode::kDist;

  Tally node_tally;
  for (std::uint32_t u = 0; u < base->node_count(); ++u) {
    auto read = [&](std::size_t t, Key& key) { return reader.read(u, t, key); };
    tally_entity(base->node_presence(u), old_mask, new_mask, dist, read, node_tally);
  }
  Tally edge_tally;
  for (std::size_t e = 0; e < base->edge_count(); ++e) {
    const EdgeEnds ends = base->edge(e);
    auto read = [&](std::size_t t, Key& key) { return reader.read_edge(ends, t, key); };
    tally_entity(base->edge_presence(e), old_mask, new_mask, dist, read, edge_tally);
  }

  AggregateEvolutionGraph out;
  out.attrs = attrs;
  out.mode = mode;
  out.directed = base->directed();
  out.members = base->arity();
  for (const auto& [key, weights] : node_tally.counts) out.nodes.emplace(reader.decode(key, 0), weights);
  for (const auto& [key, weights] : edge_tally.counts) {
    out.edges.emplace(EdgeKey{reader.decode(key, 0), reader.decode(key, reader.width())}, weights);
  }
  return out;
}

}  // namespace graphtempo
