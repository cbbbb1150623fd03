#include "graphtempo/synthetic.hpp"

#include <random>
#include <set>

#include "graphtempo/errors.hpp"
#include "graphtempo/graph_builder.hpp"

namespace graphtempo {

TemporalGraph make_synthetic_graph(const SyntheticOptions& options) {
  if (options.nodes < 3 || options.communities == 0 || options.points == 0) {
    throw UsageError("synthetic graph needs at least three nodes, one community and one time point");
  }
  const std::size_t size = (options.nodes + options.communities - 1) / options.communities;
  const std::size_t capacity = options.communities * size * (size - 1) / (options.directed ? 1 : 2);
  if (options.edges > capacity / 2) throw UsageError("too many edges for the community layout");

  std::vector<std::string> labels;
  for (std::size_t t = 0; t < options.points; ++t) labels.push_back("t" + std::to_string(t));
  GraphBuilder builder(TimeDomain(labels), options.directed);
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(options.presence);

  for (std::size_t u = 0; u < options.nodes; ++u) builder.add_node("n" + std::to_string(u));

  std::uniform_int_distribution<std::size_t> pick_community(0, options.communities - 1);
  std::uniform_int_distribution<std::size_t> pick_member(0, size - 1);
  std::set<std::pair<std::uint32_t, std::uint32_t>> chosen;
  while (chosen.size() < options.edges) {
    const std::size_t base = pick_community(rng) * size;
    auto a = static_cast<std::uint32_t>(base + pick_member(rng));
    auto b = static_cast<std::uint32_t>(base + pick_member(rng));
    if (a == b || a >= options.nodes || b >= options.nodes) continue;
    if (!options.directed && a > b) std::swap(a, b);
    if (!chosen.emplace(a, b).second) continue;
    std::uniform_int_distribution<std::size_t> pick_point(0, options.points - 1);
    bool any = false;
    for (std::size_t t = 0; t < options.points; ++t) {
      if (coin(rng)) {
        builder.add_edge(a, b, t);
        any = true;
      }
    }
    if (!any) builder.add_edge(a, b, pick_point(rng));
  }

  // Presence follows the edges; attributes are filled afterwards.
  const TemporalGraph skeleton = builder.build(true);
  std::uniform_int_distribution<int> level(1, 3);
  const char* genders[] = {"f", "m"};
  const char* groups[] = {"a", "b", "c"};
  for (std::uint32_t u = 0; u < options.nodes; ++u) {
    builder.set_static("gender", u, genders[rng() % 2]);
    builder.set_static("group", u, groups[rng() % 3]);
    skeleton.node_presence(u).for_each_set([&](std::size_t t) {
      builder.set_present(u, t);
      builder.set_varying("level", u, t, std::to_string(level(rng)));
    });
  }
  return builder.build(true);
}

}  // namespace graphtempo
