#include <doctest.h>

#include "support.hpp"
#include "tablog/pathdecomp.hpp"
#include "tablog/reduction.hpp"

using namespace tablog;
using namespace tablog::testing;

namespace {

Graph path2() { return load_graph(read_text(data_path("path2.graph"))); }

}  // namespace

TEST_CASE("load and validate decompositions") {
  Graph g = path2();
  PathDecomposition d = load_decomposition(read_text(data_path("path2.decomp")), g.names());
  CHECK(d.bags == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});
  CHECK(decomposition_width(d) == 1);
  CHECK(validate_decomposition(g, d));
  CHECK(write_decomposition(d, g.names()) == "bag u v\nbag v w\n");
  CHECK(load_decomposition("bag w u w", g.names()).bags == std::vector<std::vector<std::size_t>>{{0, 2}});
  CHECK_THROWS_AS(load_decomposition("bag x", g.names()), ParseError);
  CHECK_THROWS_AS(load_decomposition("box u", g.names()), ParseError);

  CHECK_FALSE(validate_decomposition(g, PathDecomposition{{{0, 1}}}));           // w missing
  CHECK_FALSE(validate_decomposition(g, PathDecomposition{{{0, 1}, {2}}}));      // vw uncovered
  CHECK_FALSE(validate_decomposition(g, PathDecomposition{{{0, 1}, {1, 2}, {0}}}));  // u split
  CHECK(decomposition_width(PathDecomposition{}) == 0);
}

TEST_CASE("cover graph") {
  Graph c = cover_graph(load_poset(read_text(data_path("fork.poset"))));
  CHECK(c.size() == 3);
  CHECK(c.edges().size() == 2);
  CHECK(c.adjacent(0, 1));
  CHECK_FALSE(c.adjacent(1, 2));
}

TEST_CASE("transform_pathdecomp examples") {
  Graph g = path2();
  PathDecomposition d = load_decomposition(read_text(data_path("path2.decomp")), g.names());
  for (bool rooted : {false, true}) {
    auto t = transform_pathdecomp(g, d, rooted);
    CHECK(t.source_width == 1);
    CHECK(t.bound == (rooted ? 11u : 10u));
    CHECK(t.width <= t.bound);
    CHECK(validate_decomposition(cover_graph(t.pos.poset), t.decomposition));
  }

  Graph k2 = load_graph(read_text(data_path("k2.graph")));
  auto t = transform_pathdecomp(k2, load_decomposition(read_text(data_path("k2.decomp")), k2.names()), false);
  CHECK(t.decomposition.bags.size() == 3);
  CHECK(t.width <= 10);
  CHECK(validate_decomposition(cover_graph(t.pos.poset), t.decomposition));

  CHECK_THROWS_AS(transform_pathdecomp(g, PathDecomposition{{{0, 1}}}, false), ValidationError);
}

TEST_CASE("transform_pathdecomp on small graphs with a single bag") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Graph& g : all_graphs(n)) {
      PathDecomposition d;
      d.bags.emplace_back();
      for (Vertex v = 0; v < n; ++v) d.bags.back().push_back(v);
      for (bool rooted : {false, true}) {
        auto t = transform_pathdecomp(g, d, rooted);
        CHECK(validate_decomposition(cover_graph(t.pos.poset), t.decomposition));
        CHECK(t.width <= t.bound);
      }
    }
}
