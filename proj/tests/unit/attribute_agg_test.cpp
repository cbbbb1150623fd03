#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "graphtempo/aggregate.hpp"
#include "graphtempo/errors.hpp"
#include "graphtempo/fixture.hpp"
#include "graphtempo/graph_builder.hpp"
#include "graphtempo/temporal_ops.hpp"
#include "oracles.hpp"
#include "random_graph.hpp"

namespace gt = graphtempo;
using gt::AggMode;
using gt::AttrTuple;
using gt::IntervalSet;

namespace {

const std::vector<std::vector<std::string>> kAttributeLists{
    {"gender"}, {"class"}, {"level"}, {"gender", "class"}, {"level", "gender"}, {"class", "level", "gender"}};

std::uint64_t total(const std::map<AttrTuple, std::uint64_t>& weights) {
  return std::accumulate(weights.begin(), weights.end(), std::uint64_t{0},
                         [](std::uint64_t s, const auto& kv) { return s + kv.second; });
}

}  // namespace

TEST(Aggregate, GenderAtFirstPoint) {
  const auto g = gt::build_fixture_authors();
  const auto agg = gt::aggregate(g, IntervalSet::point(0), {"gender"}, AggMode::kDist);
  EXPECT_EQ(agg.nodes, (std::map<AttrTuple, std::uint64_t>{{{"f"}, 3}, {{"m"}, 1}}));
  EXPECT_EQ(agg.edge_weight({"m"}, {"f"}), 3u);
  EXPECT_EQ(agg.edge_weight({"f"}, {"f"}), 2u);
  EXPECT_EQ(agg.edge_weight({"f"}, {"m"}), 0u);
  EXPECT_EQ(agg.edges.size(), 2u);
}

TEST(Aggregate, UnionGraphDistinctGenderPublications) {
  const auto g = gt::build_fixture_authors();
  const auto u = gt::temporal_union(g, IntervalSet::point(0), IntervalSet::point(1));
  const auto all_points = IntervalSet::all(3);
  const auto dist = gt::aggregate(u, all_points, {"gender", "publications"}, AggMode::kDist);
  EXPECT_EQ(dist.node_weight({"f", "1"}), 3u);
  // Appearances: u2@t0, u3@t0, u2@t1, u4@t1.
  const auto all = gt::aggregate(u, all_points, {"gender", "publications"}, AggMode::kAll);
  const auto oracle = gt::testing::oracle_aggregate(u, {0, 1, 2}, {"gender", "publications"}, AggMode::kAll);
  EXPECT_EQ(all.node_weight({"f", "1"}), oracle.nodes.at({"f", "1"}));
  EXPECT_EQ(all.node_weight({"f", "1"}), 4u);
}

TEST(Aggregate, Singleton) {
  gt::GraphBuilder builder(gt::TimeDomain({"t0"}), true);
  const auto u = builder.add_node("solo");
  builder.set_present(u, 0);
  builder.set_static("colour", u, "red");
  const auto agg = gt::aggregate(builder.build(), IntervalSet::point(0), {"colour"}, AggMode::kDist);
  EXPECT_EQ(agg.nodes, (std::map<AttrTuple, std::uint64_t>{{{"red"}, 1}}));
  EXPECT_TRUE(agg.edges.empty());
}

TEST(Aggregate, MissingValuesAreSkipped) {
  const auto g = gt::build_fixture_authors();
  const auto agg = gt::aggregate(g, IntervalSet::point(2), {"publications"}, AggMode::kAll);
  EXPECT_EQ(total(agg.nodes), 3u);
  EXPECT_EQ(agg.node_weight({"1"}), 2u);
  EXPECT_EQ(agg.node_weight({"2"}), 1u);
}

TEST(Aggregate, Errors) {
  const auto g = gt::build_fixture_authors();
  EXPECT_THROW(gt::aggregate(g, IntervalSet::point(0), {}, AggMode::kDist), gt::UsageError);
  EXPECT_THROW(gt::aggregate(g, IntervalSet::point(0), {"gender", "gender"}, AggMode::kDist), gt::UsageError);
  EXPECT_THROW(gt::aggregate(g, IntervalSet::point(0), {"age"}, AggMode::kDist), gt::LookupError);
  EXPECT_THROW(gt::aggregate(g, IntervalSet{}, {"gender"}, AggMode::kDist), gt::IntervalError);
  EXPECT_THROW(gt::aggregate(g, IntervalSet::point(4), {"gender"}, AggMode::kDist), gt::IntervalError);
  EXPECT_THROW(gt::aggregate_static_fast(g, IntervalSet::point(0), {"publications"}, AggMode::kDist),
               gt::UsageError);
}

TEST(Aggregate, ModeParsing) {
  EXPECT_EQ(gt::parse_agg_mode("DIST"), AggMode::kDist);
  EXPECT_EQ(gt::parse_agg_mode("all"), AggMode::kAll);
  EXPECT_EQ(gt::to_string(AggMode::kAll), "all");
  EXPECT_THROW(gt::parse_agg_mode("sum"), gt::UsageError);
}

TEST(Aggregate, KeyParsingAndRendering) {
  EXPECT_EQ(gt::parse_key("ffm", 3), (AttrTuple{"f", "f", "m"}));
  EXPECT_EQ(gt::parse_key("f|f|m", 3), (AttrTuple{"f", "f", "m"}));
  EXPECT_EQ(gt::parse_key("f,1", 2), (AttrTuple{"f", "1"}));
  EXPECT_THROW(gt::parse_key("f,1", 3), gt::UsageError);
  EXPECT_EQ(gt::render_key({"f", "1", "m", "2"}, 2), "f,1|m,2");
}

TEST(StaticFastPath, Examples) {
  const auto g = gt::build_fixture_authors();
  const auto all = gt::aggregate_static_fast(g, IntervalSet::range(0, 1), {"gender"}, AggMode::kAll);
  EXPECT_EQ(all.nodes, (std::map<AttrTuple, std::uint64_t>{{{"f"}, 6}, {{"m"}, 2}}));
  EXPECT_EQ(gt::aggregate_static_fast(g, IntervalSet::point(0), {"gender"}, AggMode::kDist),
            gt::aggregate(g, IntervalSet::point(0), {"gender"}, AggMode::kDist));
  const auto dist = gt::aggregate_static_fast(g, IntervalSet::range(1, 2), {"gender"}, AggMode::kDist);
  EXPECT_EQ(dist.nodes, (std::map<AttrTuple, std::uint64_t>{{{"f"}, 3}, {{"m"}, 1}}));
}

TEST(AggregateProperty, MatchesTheOracle) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 80; ++round) {
    gt::testing::RandomGraphSpec spec;
    spec.directed = round % 2 == 0;
    const auto g = gt::testing::random_graph(rng, spec);
    for (const auto& interval : gt::testing::all_interval_sets(g.time_points())) {
      const auto points = gt::testing::points_of(interval);
      for (const auto& attrs : kAttributeLists) {
        for (auto mode : {AggMode::kDist, AggMode::kAll}) {
          const auto agg = gt::aggregate(g, interval, attrs, mode);
          ASSERT_TRUE(gt::testing::same_weights(gt::testing::oracle_aggregate(g, points, attrs, mode), agg))
              << "round " << round;
        }
      }
    }
  }
}

TEST(AggregateProperty, DistNeverExceedsAll) {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 60; ++round) {
    const auto g = gt::testing::random_graph(rng);
    for (const auto& interval : gt::testing::all_interval_sets(g.time_points())) {
      for (const auto& attrs : kAttributeLists) {
        const auto dist = gt::aggregate(g, interval, attrs, AggMode::kDist);
        const auto all = gt::aggregate(g, interval, attrs, AggMode::kAll);
        for (const auto& [key, w] : dist.nodes) EXPECT_LE(w, all.node_weight(key));
        for (const auto& [key, w] : dist.edges) EXPECT_LE(w, all.edges.at(key));
      }
    }
  }
}

TEST(AggregateProperty, FastPathEqualsGeneralPath) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 80; ++round) {
    gt::testing::RandomGraphSpec spec;
    spec.directed = round % 2 == 1;
    const auto g = gt::testing::random_graph(rng, spec);
    for (const auto& interval : gt::testing::all_interval_sets(g.time_points())) {
      for (const std::vector<std::string>& attrs :
           {std::vector<std::string>{"gender"}, {"class"}, {"class", "gender"}}) {
        for (auto mode : {AggMode::kDist, AggMode::kAll}) {
          ASSERT_EQ(gt::aggregate_static_fast(g, interval, attrs, mode), gt::aggregate(g, interval, attrs, mode));
        }
      }
    }
  }
}

TEST(AggregateProperty, SinglePointConservationAndModeAgreement) {
  std::mt19937_64 rng(24);
  for (int round = 0; round < 60; ++round) {
    const auto g = gt::testing::random_graph(rng);
    for (std::size_t t = 0; t < g.time_points(); ++t) {
      const auto all = gt::aggregate(g, IntervalSet::point(t), {"gender", "class"}, AggMode::kAll);
      const auto dist = gt::aggregate(g, IntervalSet::point(t), {"gender", "class"}, AggMode::kDist);
      EXPECT_EQ(total(all.nodes), g.nodes_at(t));
      std::uint64_t edges = 0;
      for (const auto& [key, w] : all.edges) edges += w;
      EXPECT_EQ(edges, g.edges_at(t));
      EXPECT_EQ(all.nodes, dist.nodes);
      EXPECT_EQ(all.edges, dist.edges);
    }
  }
}

TEST(AggregateProperty, UndirectedEdgeKeysAreCanonical) {
  std::mt19937_64 rng(25);
  gt::testing::RandomGraphSpec spec;
  spec.directed = false;
  for (int round = 0; round < 40; ++round) {
    const auto g = gt::testing::random_graph(rng, spec);
    const auto agg = gt::aggregate(g, IntervalSet::all(g.time_points()), {"gender"}, AggMode::kAll);
    for (const auto& [key, w] : agg.edges) {
      EXPECT_LE(key.first, key.second);
      EXPECT_EQ(agg.edge_weight(key.second, key.first), w);
    }
  }
}
