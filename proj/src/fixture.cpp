#include "graphtempo/fixture.hpp"

#include <array>

#include "graphtempo/graph_builder.hpp"

namespace graphtempo {

TemporalGraph build_fixture_authors() {
  GraphBuilder builder(TimeDomain({"t0", "t1", "t2"}), /*directed=*/true);

  struct Author {
    const char* id;
    const char* gender;
    std::array<const char*, 3> publications;  // nullptr = absent
  };
  const std::array<Author, 5> authors{{
      {"u1", "m", {"3", "1", nullptr}},
      {"u2", "f", {"1", "1", "1"}},
      {"u3", "f", {"1", nullptr, nullptr}},
      {"u4", "f", {"2", "1", "1"}},
      {"u5", "f", {nullptr, "2", "2"}},
  }};
  for (const Author& a : authors) {
    const std::uint32_t u = builder.add_node(a.id);
    builder.set_static("gender", u, a.gender);
    for (std::size_t t = 0; t < 3; ++t) {
      if (a.publications[t] == nullptr) continue;
      builder.set_present(u, t);
      builder.set_varying("publications", u, t, a.publications[t]);
    }
  }

  struct Link {
    std::uint32_t source;
    std::uint32_t target;
    std::size_t t;
  };
  const std::array<Link, 12> links{{
      {0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 3, 0}, {2, 3, 0},
      {0, 1, 1}, {0, 3, 1}, {1, 3, 1}, {1, 4, 1}, {3, 4, 1},
      {1, 3, 2}, {3, 4, 2},
  }};
  for (const Link& l : links) builder.add_edge(l.source, l.target, l.t);
  return builder.build();
}

}  // namespace graphtempo
