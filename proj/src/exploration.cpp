#include "graphtempo/exploration.hpp"

#include <algorithm>
#include <optional>

#include "graphtempo/errors.hpp"
#include "graphtempo/pattern.hpp"

namespace graphtempo {

std::string_view to_string(Event event) {
  switch (event) {
    case Event::kStability: return "stability";
    case Event::kGrowth: return "growth";
    case Event::kShrinkage: return "shrinkage";
  }
  return "";
}

std::string_view to_string(Extremal extremal) { return extremal == Extremal::kMinimal ? "min" : "max"; }

std::string_view to_string(Reference reference) { return reference == Reference::kOldFixed ? "old" : "new"; }

Event parse_event(std::string_view text) {
  if (text == "stability") return Event::kStability;
  if (text == "growth") return Event::kGrowth;
  if (text == "shrinkage" || text == "shrink") return Event::kShrinkage;
  throw UsageError("event must be stability, growth or shrinkage, got '" + std::string(text) + "'");
}

Extremal parse_extremal(std::string_view text) {
  if (text == "min" || text == "minimal") return Extremal::kMinimal;
  if (text == "max" || text == "maximal") return Extremal::kMaximal;
  throw UsageError("extremal must be min or max, got '" + std::string(text) + "'");
}

Reference parse_reference(std::string_view text) {
  if (text == "old" || text == "old-fixed") return Reference::kOldFixed;
  if (text == "new" || text == "new-fixed") return Reference::kNewFixed;
  throw UsageError("reference must be old or new, got '" + std::string(text) + "'");
}

Target Target::node_key(AttrTuple key, std::vector<std::string> attrs, AggMode mode) {
  Target t;
  t.kind = Kind::kNode;
  t.node = std::move(key);
  t.attrs = std::move(attrs);
  t.mode = mode;
  if (t.node.size() != t.attrs.size()) throw UsageError("node target does not match the attribute list");
  return t;
}

Target Target::edge_key(AttrTuple source, AttrTuple target, std::vector<std::string> attrs, AggMode mode) {
  Target t;
  t.kind = Kind::kEdge;
  t.edge = {std::move(source), std::move(target)};
  t.attrs = std::move(attrs);
  t.mode = mode;
  if (t.edge.first.size() != t.attrs.size() || t.edge.second.size() != t.attrs.size()) {
    throw UsageError("edge target does not match the attribute list");
  }
  return t;
}

Target Target::pattern_key(AttrTuple key, std::vector<std::string> attrs, AggMode mode) {
  const std::size_t n = attrs.size();
  if (n == 0 || key.size() != 3 * n) throw UsageError("triangle target needs three values per attribute");
  std::vector<AttrTuple> members;
  for (std::size_t m = 0; m < 3; ++m) members.emplace_back(key.begin() + m * n, key.begin() + (m + 1) * n);
  std::sort(members.begin(), members.end());
  AttrTuple canonical;
  for (auto& member : members) canonical.insert(canonical.end(), member.begin(), member.end());
  Target t;
  t.node = std::move(canonical);
  t.attrs = std::move(attrs);
  t.mode = mode;
  t.triangle = true;
  return t;
}

Interval IntervalPair::old_side(Reference ref) const {
  return ref == Reference::kOldFixed ? Interval{reference, reference} : extended;
}

Interval IntervalPair::new_side(Reference ref) const {
  return ref == Reference::kOldFixed ? extended : Interval{reference, reference};
}

namespace {

std::uint64_t target_weight(const TemporalGraph& event_graph, const Target& target) {
  const AggregateGraph agg =
      aggregate(event_graph, IntervalSet::all(event_graph.time_points()), target.attrs, target.mode);
  if (target.kind == Target::Kind::kNode) return agg.node_weight(target.node);
  return agg.edge_weight(target.edge.first, target.edge.second);
}

std::uint64_t weight_on(const TemporalGraph& base, Event event, const Side& old_side, const Side& new_side,
                        const Target& target) {
  switch (event) {
    case Event::kStability:
      return target_weight(combine(base, SetOp::kIntersection, old_side, new_side), target);
    case Event::kGrowth: return target_weight(combine(base, SetOp::kDifference, new_side, old_side), target);
    case Event::kShrinkage: return target_weight(combine(base, SetOp::kDifference, old_side, new_side), target);
  }
  return 0;
}

// Evaluates pairs of one query on a fixed base graph (the tri-graph for
// triangle targets) and counts the aggregate graphs it computes.
class Evaluator {
 public:
  Evaluator(const TemporalGraph& graph, const ExplorationQuery& query) : query_(query) {
    if (query.k < 1) throw UsageError("threshold k must be at least 1");
    if (graph.time_points() < 2) throw UsageError("exploration needs at least two time points");
    if (query.target.triangle) {
      tri_.emplace(build_tri_graph(graph, IntervalSet::all(graph.time_points())));
    }
    base_ = tri_ ? &*tri_ : &graph;
    result_.query = query;
  }

  std::size_t points() const { return base_->time_points(); }

  std::size_t first_reference() const { return query_.reference == Reference::kOldFixed ? 0 : 1; }
  std::size_t last_reference() const {
    return query_.reference == Reference::kOldFixed ? points() - 2 : points() - 1;
  }
  std::size_t max_length(std::size_t ref) const {
    return query_.reference == Reference::kOldFixed ? points() - 1 - ref : ref;
  }

  IntervalPair pair(std::size_t ref, std::size_t length) const {
    if (query_.reference == Reference::kOldFixed) return {ref, {ref + 1, ref + length}};
    return {ref, {ref - length, ref - 1}};
  }

  std::uint64_t weight(const IntervalPair& p) {
    const std::size_t n = points();
    const Quantifier moving = query_.extremal == Extremal::kMinimal ? Quantifier::kAny : Quantifier::kAll;
    const Interval o = p.old_side(query_.reference);
    const Interval w = p.new_side(query_.reference);
    const bool old_moves = query_.reference == Reference::kNewFixed;
    const Side old_side{IntervalSet{o}.mask(n), old_moves ? moving : Quantifier::kAny};
    const Side new_side{IntervalSet{w}.mask(n), old_moves ? Quantifier::kAny : moving};
    const std::uint64_t value = weight_on(*base_, query_.event, old_side, new_side, query_.target);
    ++result_.evaluations;
    result_.evaluated.push_back({p, value});
    return value;
  }

  bool qualifies(std::uint64_t w) const { return w >= query_.k; }

  // Largest weight any key can reach on the base graph.
  std::uint64_t attainable() const {
    std::uint64_t total = 0;
    const bool dist = query_.target.mode == AggMode::kDist;
    if (query_.target.kind == Target::Kind::kNode) {
      for (std::size_t u = 0; u < base_->node_count(); ++u) total += dist ? 1 : base_->node_presence(u).count();
    } else {
      for (std::size_t e = 0; e < base_->edge_count(); ++e) total += dist ? 1 : base_->edge_presence(e).count();
    }
    return total;
  }

  void accept(const IntervalPair& p, std::uint64_t w) { result_.pairs.push_back({p, w}); }

  ExplorationResult finish() {
    std::sort(result_.pairs.begin(), result_.pairs.end(),
              [](const ScoredPair& a, const ScoredPair& b) { return a.pair < b.pair; });
    return std::move(result_);
  }

 private:
  const ExplorationQuery& query_;
  std::optional<TemporalGraph> tri_;
  const TemporalGraph* base_ = nullptr;
  ExplorationResult result_;
};

ExplorationResult consecutive_only(const TemporalGraph& graph, const ExplorationQuery& query) {
  Evaluator ev(graph, query);
  for (std::size_t ref = ev.first_reference(); ref <= ev.last_reference(); ++ref) {
    const IntervalPair p = ev.pair(ref, 1);
    const std::uint64_t w = ev.weight(p);
    if (ev.qualifies(w)) ev.accept(p, w);
  }
  return ev.finish();
}

ExplorationResult longest_only(const TemporalGraph& graph, const ExplorationQuery& query) {
  Evaluator ev(graph, query);
  for (std::size_t ref = ev.first_reference(); ref <= ev.last_reference(); ++ref) {
    const IntervalPair p = ev.pair(ref, ev.max_length(ref));
    const std::uint64_t w = ev.weight(p);
    if (ev.qualifies(w)) ev.accept(p, w);
  }
  return ev.finish();
}

}  // namespace

std::uint64_t event_weight(const TemporalGraph& graph, Event event, const Side& old_side, const Side& new_side,
                           const Target& target) {
  if (!target.triangle) return weight_on(graph, event, old_side, new_side, target);
  const TemporalGraph tri = build_tri_graph(graph, IntervalSet::all(graph.time_points()));
  return weight_on(tri, event, old_side, new_side, target);
}

std::uint64_t event_weight(const TemporalGraph& graph, Event event, const IntervalSet& t_old,
                           const IntervalSet& t_new, const Target& target) {
  const std::size_t n = graph.time_points();
  return event_weight(graph, event, any_of(t_old, n), any_of(t_new, n), target);
}

bool weight_increases(Event event, Extremal extremal, Reference reference) {
  const bool widening = extremal == Extremal::kMinimal;
  switch (event) {
    case Event::kStability: return widening;
    case Event::kGrowth: return widening != (reference == Reference::kNewFixed);
    case Event::kShrinkage: return widening != (reference == Reference::kOldFixed);
  }
  return widening;
}

ExplorationResult u_explore(const TemporalGraph& graph, const ExplorationQuery& query) {
  if (query.extremal != Extremal::kMinimal) throw UsageError("U-Explore computes minimal pairs");
  Evaluator ev(graph, query);
  std::vector<std::size_t> alive;
  for (std::size_t ref = ev.first_reference(); ref <= ev.last_reference(); ++ref) alive.push_back(ref);

  for (std::size_t length = 1; !alive.empty(); ++length) {
    std::vector<std::size_t> next;
    for (std::size_t ref : alive) {
      const IntervalPair p = ev.pair(ref, length);
      const std::uint64_t w = ev.weight(p);
      if (ev.qualifies(w)) {
        ev.accept(p, w);
      } else if (length < ev.max_length(ref)) {
        next.push_back(ref);
      }
    }
    if (length == 1 && query.k > ev.attainable()) break;
    alive = std::move(next);
  }
  return ev.finish();
}

ExplorationResult i_explore(const TemporalGraph& graph, const ExplorationQuery& query) {
  if (query.extremal != Extremal::kMaximal) throw UsageError("I-Explore computes maximal pairs");
  Evaluator ev(graph, query);
  for (std::size_t ref = ev.first_reference(); ref <= ev.last_reference(); ++ref) {
    IntervalPair best = ev.pair(ref, 1);
    std::uint64_t best_weight = ev.weight(best);
    if (!ev.qualifies(best_weight)) continue;
    // The candidate is replaced by its extension for as long as that qualifies.
    for (std::size_t length = 2; length <= ev.max_length(ref); ++length) {
      const IntervalPair p = ev.pair(ref, length);
      const std::uint64_t w = ev.weight(p);
      if (!ev.qualifies(w)) break;
      best = p;
      best_weight = w;
    }
    ev.accept(best, best_weight);
  }
  return ev.finish();
}

ExplorationResult explore(const TemporalGraph& graph, const ExplorationQuery& query) {
  const bool minimal = query.extremal == Extremal::kMinimal;
  if (query.event != Event::kStability) {
    // The subtracted side is the one being extended: growth subtracts the
    // old side, shrinkage the new one.
    const bool subtracted_moves = (query.event == Event::kGrowth) == (query.reference == Reference::kNewFixed);
    if (subtracted_moves) return minimal ? consecutive_only(graph, query) : longest_only(graph, query);
  }
  return minimal ? u_explore(graph, query) : i_explore(graph, query);
}

ExplorationResult brute_force_explore(const TemporalGraph& graph, const ExplorationQuery& query,
                                      std::size_t max_points) {
  if (graph.time_points() > max_points) {
    throw UsageError("brute-force exploration is limited to " + std::to_string(max_points) + " time points");
  }
  Evaluator ev(graph, query);
  std::vector<ScoredPair> qualifying;
  for (std::size_t ref = ev.first_reference(); ref <= ev.last_reference(); ++ref) {
    for (std::size_t length = 1; length <= ev.max_length(ref); ++length) {
      const IntervalPair p = ev.pair(ref, length);
      const std::uint64_t w = ev.weight(p);
      if (ev.qualifies(w)) qualifying.push_back({p, w});
    }
  }
  const bool minimal = query.extremal == Extremal::kMinimal;
  auto strictly_inside = [](const Interval& inner, const Interval& outer) {
    return outer.start <= inner.start && inner.end <= outer.end && inner != outer;
  };
  for (const ScoredPair& candidate : qualifying) {
    const bool dominated = std::any_of(qualifying.begin(), qualifying.end(), [&](const ScoredPair& other) {
      if (other.pair.reference != candidate.pair.reference) return false;
      return minimal ? strictly_inside(other.pair.extended, candidate.pair.extended)
                     : strictly_inside(candidate.pair.extended, other.pair.extended);
    });
    if (!dominated) ev.accept(candidate.pair, candidate.weight);
  }
  return ev.finish();
}

ThresholdHint init_threshold(const TemporalGraph& graph, Event event, Extremal extremal, Reference reference,
                             const Target& target) {
  const std::size_t n = graph.time_points();
  if (n < 2) throw UsageError("threshold initialization needs at least two time points");
  std::optional<TemporalGraph> tri;
  if (target.triangle) tri.emplace(build_tri_graph(graph, IntervalSet::all(n)));
  const TemporalGraph& base = tri ? *tri : graph;

  ThresholdHint hint;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    hint.consecutive.push_back(
        weight_on(base, event, any_of(IntervalSet::point(t), n), any_of(IntervalSet::point(t + 1), n), target));
  }
  hint.w_min = *std::min_element(hint.consecutive.begin(), hint.consecutive.end());
  hint.w_max = *std::max_element(hint.consecutive.begin(), hint.consecutive.end());
  hint.start = weight_increases(event, extremal, reference) ? hint.w_min : hint.w_max;
  return hint;
}

std::vector<std::size_t> pair_points(const IntervalPair& pair) {
  std::vector<std::size_t> points{pair.reference};
  for (std::size_t t = pair.extended.start; t <= pair.extended.end; ++t) points.push_back(t);
  std::sort(points.begin(), points.end());
  return points;
}

std::vector<std::vector<std::size_t>> maximal_point_sets(const ExplorationResult& result) {
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& scored : result.pairs) sets.push_back(pair_points(scored.pair));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : sets) {
    const bool contained = std::any_of(sets.begin(), sets.end(), [&](const auto& other) {
      return other.size() > s.size() && std::includes(other.begin(), other.end(), s.begin(), s.end());
    });
    if (!contained) out.push_back(s);
  }
  return out;
}

}  // namespace graphtempo
