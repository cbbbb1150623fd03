#include <random>

#include <gtest/gtest.h>

#include "graphtempo/errors.hpp"
#include "graphtempo/evolution.hpp"
#include "graphtempo/fixture.hpp"
#include "graphtempo/temporal_ops.hpp"
#include "oracles.hpp"
#include "random_graph.hpp"

namespace gt = graphtempo;
using gt::AggMode;
using gt::AttrTuple;
using gt::EventWeights;
using gt::IntervalSet;
using gt::testing::Points;

namespace {

std::optional<AttrTuple> tuple_at(const gt::TemporalGraph& g, const std::string& id,
                                  const std::vector<std::string>& attrs, std::size_t t) {
  AttrTuple out;
  for (const auto& a : attrs) {
    auto v = gt::lookup_attribute(g, id, a, t);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

template <class Key>
void tally(const std::map<std::size_t, Key>& old_side, const std::map<std::size_t, Key>& new_side, AggMode mode,
           std::map<Key, EventWeights>& out) {
  std::set<Key> old_keys;
  std::set<Key> new_keys;
  for (const auto& [t, k] : old_side) old_keys.insert(k);
  for (const auto& [t, k] : new_side) new_keys.insert(k);
  if (!old_side.empty() && !new_side.empty()) {
    std::map<std::size_t, Key> merged = old_side;
    merged.insert(new_side.begin(), new_side.end());
    if (mode == AggMode::kDist) {
      for (const auto& k : old_keys) {
        if (new_keys.count(k)) ++out[k].stability;
      }
    } else {
      for (const auto& [t, k] : merged) {
        if (old_keys.count(k) && new_keys.count(k)) ++out[k].stability;
      }
    }
    return;
  }
  const bool vanished = !old_side.empty();
  const auto& side = vanished ? old_side : new_side;
  const auto& keys = vanished ? old_keys : new_keys;
  const auto slot = vanished ? &EventWeights::shrinkage : &EventWeights::growth;
  if (mode == AggMode::kDist) {
    for (const auto& k : keys) ++(out[k].*slot);
  } else {
    for (const auto& [t, k] : side) ++(out[k].*slot);
  }
}

// Per-element event counting: an element on both sides contributes stability
// for keys it carries on both; an element on one side only contributes growth
// or shrinkage.
gt::AggregateEvolutionGraph oracle_evolution(const gt::TemporalGraph& g, const Points& t_old, const Points& t_new,
                                             const std::vector<std::string>& attrs, AggMode mode) {
  gt::AggregateEvolutionGraph out;
  out.directed = g.directed();
  for (std::size_t u = 0; u < g.node_count(); ++u) {
    std::map<std::size_t, AttrTuple> old_side;
    std::map<std::size_t, AttrTuple> new_side;
    for (std::size_t t : gt::testing::node_times(g, u)) {
      const auto key = tuple_at(g, g.node_id(u), attrs, t);
      if (!key) continue;
      if (t_old.count(t)) old_side[t] = *key;
      if (t_new.count(t)) new_side[t] = *key;
    }
    tally(old_side, new_side, mode, out.nodes);
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    std::map<std::size_t, gt::EdgeKey> old_side;
    std::map<std::size_t, gt::EdgeKey> new_side;
    for (std::size_t t : gt::testing::edge_times(g, e)) {
      const auto s = tuple_at(g, g.node_id(g.edge(e).source), attrs, t);
      const auto d = tuple_at(g, g.node_id(g.edge(e).target), attrs, t);
      if (!s || !d) continue;
      gt::EdgeKey key{*s, *d};
      if (!g.directed() && key.second < key.first) std::swap(key.first, key.second);
      if (t_old.count(t)) old_side[t] = key;
      if (t_new.count(t)) new_side[t] = key;
    }
    tally(old_side, new_side, mode, out.edges);
  }
  return out;
}

std::set<AttrTuple> node_keys(const gt::AggregateGraph& agg) {
  std::set<AttrTuple> out;
  for (const auto& [k, w] : agg.nodes) out.insert(k);
  return out;
}

}  // namespace

TEST(EvolutionGraph, FixtureLabels) {
  const auto g = gt::build_fixture_authors();
  const auto evo = gt::evolution_graph(g, IntervalSet::point(0), IntervalSet::point(1));
  EXPECT_TRUE(evo.node_labels.at("u2") & gt::kStable);
  EXPECT_TRUE(evo.node_labels.at("u4") & gt::kStable);
  EXPECT_TRUE(evo.edge_labels.at({"u2", "u4"}) & gt::kStable);
  EXPECT_EQ(evo.node_labels.at("u3"), gt::kShrunk);
  EXPECT_EQ(evo.edge_labels.at({"u1", "u3"}), gt::kShrunk);
  EXPECT_EQ(evo.edge_labels.at({"u3", "u4"}), gt::kShrunk);
  EXPECT_EQ(evo.node_labels.at("u5"), gt::kGrown);
  EXPECT_EQ(evo.edge_labels.at({"u2", "u5"}), gt::kGrown);
  EXPECT_EQ(evo.edge_labels.at({"u4", "u5"}), gt::kGrown);
  // u4 is also an endpoint of vanished and new edges.
  EXPECT_EQ(evo.node_labels.at("u4"), gt::kStable | gt::kShrunk | gt::kGrown);
}

TEST(EvolutionGraph, SelfEvolutionIsStable) {
  const auto g = gt::build_fixture_authors();
  const auto evo = gt::evolution_graph(g, IntervalSet::range(0, 1), IntervalSet::range(0, 1));
  EXPECT_EQ(evo.grow.node_count(), 0u);
  EXPECT_EQ(evo.shrink.node_count(), 0u);
  for (const auto& [id, label] : evo.node_labels) EXPECT_EQ(label, gt::kStable) << id;
  for (const auto& [id, label] : evo.edge_labels) EXPECT_EQ(label, gt::kStable);
}

TEST(EvolutionGraph, DisjointEntitiesHaveNoStability) {
  // Keep only what vanished between t0 and t2: nothing in it exists at t2.
  const auto g = gt::build_fixture_authors();
  const auto vanished = gt::temporal_difference(g, IntervalSet::point(0), IntervalSet::point(2));
  const auto evo = gt::evolution_graph(vanished, IntervalSet::point(0), IntervalSet::point(2));
  EXPECT_EQ(evo.stable.node_count(), 0u);
  for (const auto& [id, label] : evo.node_labels) EXPECT_FALSE(label & gt::kStable) << id;
  for (const auto& [id, label] : evo.edge_labels) EXPECT_FALSE(label & gt::kStable);
}

TEST(AggregateEvolution, FixtureNodeWeights) {
  const auto g = gt::build_fixture_authors();
  const auto agg = gt::aggregate_evolution(g, IntervalSet::point(0), IntervalSet::point(1), {"gender", "publications"},
                                           AggMode::kDist);
  EXPECT_EQ(agg.node({"f", "1"}), (EventWeights{1, 0, 1}));
}

TEST(AggregateEvolution, FixtureTriangleWeights) {
  const auto g = gt::build_fixture_authors();
  const auto agg = gt::aggregate_evolution(g, IntervalSet::point(0), IntervalSet::point(1), {"gender"},
                                           AggMode::kDist, gt::EvolutionPattern::kTriangle);
  EXPECT_EQ(agg.node(gt::parse_key("ffm", 3)), (EventWeights{1, 0, 1}));
  EXPECT_EQ(agg.node(gt::parse_key("fff", 3)), (EventWeights{0, 1, 0}));
  EXPECT_EQ(agg.members, 3u);
}

TEST(AggregateEvolution, SelfEvolutionHasNoChange) {
  const auto g = gt::build_fixture_authors();
  for (auto mode : {AggMode::kDist, AggMode::kAll}) {
    const auto agg = gt::aggregate_evolution(g, IntervalSet::range(1, 2), IntervalSet::range(1, 2),
                                             {"gender", "publications"}, mode);
    EXPECT_FALSE(agg.nodes.empty());
    for (const auto& [k, w] : agg.nodes) {
      EXPECT_EQ(w.growth, 0u);
      EXPECT_EQ(w.shrinkage, 0u);
    }
    for (const auto& [k, w] : agg.edges) EXPECT_EQ(w.growth + w.shrinkage, 0u);
  }
}

TEST(AggregateEvolution, Errors) {
  const auto g = gt::build_fixture_authors();
  EXPECT_THROW(gt::aggregate_evolution(g, IntervalSet{}, IntervalSet::point(1), {"gender"}, AggMode::kDist),
               gt::IntervalError);
  EXPECT_THROW(gt::aggregate_evolution(g, IntervalSet::point(0), IntervalSet::point(1), {}, AggMode::kDist),
               gt::UsageError);
  EXPECT_THROW(gt::aggregate_evolution(g, IntervalSet::point(0), IntervalSet::point(5), {"gender"}, AggMode::kDist),
               gt::IntervalError);
}

TEST(EvolutionProperty, MatchesPerElementOracle) {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 60; ++round) {
    gt::testing::RandomGraphSpec spec;
    spec.directed = round % 2 == 0;
    const auto g = gt::testing::random_graph(rng, spec);
    const auto sets = gt::testing::all_interval_sets(g.time_points());
    for (const auto& t_old : sets) {
      for (const auto& t_new : sets) {
        for (const std::vector<std::string>& attrs :
             {std::vector<std::string>{"gender"}, {"level"}, {"class", "level"}}) {
          for (auto mode : {AggMode::kDist, AggMode::kAll}) {
            const auto agg = gt::aggregate_evolution(g, t_old, t_new, attrs, mode);
            const auto oracle =
                oracle_evolution(g, gt::testing::points_of(t_old), gt::testing::points_of(t_new), attrs, mode);
            ASSERT_EQ(agg.nodes, oracle.nodes) << "round " << round;
            ASSERT_EQ(agg.edges, oracle.edges) << "round " << round;
          }
        }
      }
    }
  }
}

TEST(EvolutionProperty, ComponentKeysComeFromOperatorAggregates) {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 60; ++round) {
    const auto g = gt::testing::random_graph(rng);
    const auto sets = gt::testing::all_interval_sets(g.time_points());
    const auto everything = IntervalSet::all(g.time_points());
    for (const auto& t_old : sets) {
      for (const auto& t_new : sets) {
        const std::vector<std::string> attrs{"gender", "level"};
        const auto agg = gt::aggregate_evolution(g, t_old, t_new, attrs, AggMode::kDist);
        const auto evo = gt::evolution_graph(g, t_old, t_new);
        auto keys = [&](const gt::TemporalGraph& part) {
          return part.node_count() == 0 ? std::set<AttrTuple>{}
                                        : node_keys(gt::aggregate(part, everything, attrs, AggMode::kDist));
        };
        const auto stable = keys(evo.stable);
        const auto shrunk = keys(evo.shrink);
        const auto grown = keys(evo.grow);
        for (const auto& [k, w] : agg.nodes) {
          if (w.stability) EXPECT_TRUE(stable.count(k));
          if (w.shrinkage) EXPECT_TRUE(shrunk.count(k));
          if (w.growth) EXPECT_TRUE(grown.count(k));
          EXPECT_GT(w.total(), 0u);
        }
      }
    }
  }
}

// With static attributes the stability component is the plain aggregate of
// the intersection graph.
TEST(EvolutionProperty, StaticStabilityEqualsIntersectionAggregate) {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 60; ++round) {
    const auto g = gt::testing::random_graph(rng);
    const auto sets = gt::testing::all_interval_sets(g.time_points());
    for (const auto& t_old : sets) {
      for (const auto& t_new : sets) {
        const auto agg = gt::aggregate_evolution(g, t_old, t_new, {"gender"}, AggMode::kDist);
        const auto stable = gt::temporal_intersection(g, t_old, t_new);
        std::map<AttrTuple, std::uint64_t> expected;
        if (stable.node_count() > 0) {
          expected = gt::aggregate(stable, IntervalSet::all(g.time_points()), {"gender"}, AggMode::kDist).nodes;
        }
        std::map<AttrTuple, std::uint64_t> actual;
        for (const auto& [k, w] : agg.nodes) {
          if (w.stability) actual[k] = w.stability;
        }
        EXPECT_EQ(actual, expected);
      }
    }
  }
}
