#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "desmallworld/generators.hpp"
#include "desmallworld/graph.hpp"
#include "support/test_graphs.hpp"

using namespace desmallworld;

TEST_CASE("edge list loading") {
  SECTION("two-edge path") {
    std::istringstream in("0 1\n1 2");
    const LoadResult r = load_edge_list(in);
    CHECK(r.graph.vertex_count() == 3);
    CHECK(r.graph.edge_count() == 2);
    CHECK(r.stats.data_lines == 2);
  }

  SECTION("comments, duplicate merged, loop dropped") {
    std::istringstream in("# c\n0 1\n1 0\n0 0");
    const LoadResult r = load_edge_list(in);
    CHECK(r.graph.vertex_count() == 2);
    CHECK(r.graph.edge_count() == 1);
    CHECK(r.stats.self_loops_dropped == 1);
    CHECK(r.stats.duplicates_merged == 1);
  }

  SECTION("first-appearance compaction") {
    std::istringstream in("7 3\n3 9");
    const LoadResult r = load_edge_list(in);
    REQUIRE(r.graph.edge_count() == 2);
    // 7 -> 0, 3 -> 1, 9 -> 2
    CHECK(r.graph.edge(0).u == 0);
    CHECK(r.graph.edge(0).v == 1);
    CHECK(r.graph.edge(1).u == 1);
    CHECK(r.graph.edge(1).v == 2);
  }

  SECTION("malformed line reports its number") {
    std::istringstream in("0 1\nx 2\n");
    CHECK_THROWS_MATCHES(load_edge_list(in), ParseError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("line 2")));
  }

  SECTION("trailing token rejected") {
    std::istringstream in("0 1 2\n");
    CHECK_THROWS_AS(load_edge_list(in), ParseError);
  }

  SECTION("empty input rejected") {
    std::istringstream in("# nothing\n");
    CHECK_THROWS_AS(load_edge_list(in), ParseError);
  }
}

TEST_CASE("edge list round trip is a fixed point after one normalization") {
  const Graph g = generate_watts_strogatz(40, 4, 0.3, 7);
  std::ostringstream first;
  save_edge_list(g, first);

  std::istringstream back1(first.str());
  const Graph g1 = load_edge_list(back1).graph;
  std::ostringstream second;
  save_edge_list(g1, second);

  std::istringstream back2(second.str());
  const Graph g2 = load_edge_list(back2).graph;
  std::ostringstream third;
  save_edge_list(g2, third);

  CHECK(second.str() == third.str());
  CHECK(g1.vertex_count() == g.vertex_count());
  CHECK(g1.edge_count() == g.edge_count());

  // Degree multiset survives the relabeling.
  std::vector<std::size_t> d0, d1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    d0.push_back(g.degree(v));
    d1.push_back(g1.degree(v));
  }
  std::sort(d0.begin(), d0.end());
  std::sort(d1.begin(), d1.end());
  CHECK(d0 == d1);
}

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("remove_edges masks traversal only") {
  const Graph path = dsw_test::make_path(3);

  SECTION("masking isolates an endpoint") {
    const GraphView v = remove_edges(path, EdgeSubset::single(0));
    int live = 0;
    for (const auto& a : v.neighbors_raw(0))
      if (!v.edge_removed(a.edge)) ++live;
    CHECK(live == 0);
    CHECK(v.active_edge_count() == 1);
    CHECK(path.edge_count() == 2);  // original untouched
  }

  SECTION("empty subset is the identity") {
    const GraphView v = remove_edges(path, EdgeSubset{});
    CHECK(v.active_edge_count() == path.edge_count());
    CHECK_FALSE(v.edge_removed(0));
  }

  SECTION("removing all edges isolates every vertex") {
    const GraphView v = remove_edges(path, EdgeSubset(std::vector<EdgeId>{0, 1}));
    CHECK(v.active_edge_count() == 0);
  }

  SECTION("invalid id rejected") {
    CHECK_THROWS_AS(remove_edges(path, EdgeSubset::single(5)), std::invalid_argument);
  }

  SECTION("composition equals union for disjoint subsets") {
    const Graph g = dsw_test::random_gnm(12, 20, 3);
    const EdgeSubset a(std::vector<EdgeId>{0, 3, 7});
    const EdgeSubset b(std::vector<EdgeId>{1, 9, 15});
    const GraphView composed = remove_edges(remove_edges(g, a), b);
    const GraphView merged = remove_edges(g, subset_union(a, b));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      CHECK(composed.edge_removed(e) == merged.edge_removed(e));
  }
}

TEST_CASE("watts-strogatz generator") {
  SECTION("zero rewiring gives the ring lattice") {
    const Graph g = generate_watts_strogatz(10, 2, 0.0, 1);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 10);
    for (VertexId v = 0; v < 10; ++v) CHECK(g.degree(v) == 2);
  }

  SECTION("edge count is n*base/2 even with rewiring") {
    const Graph g = generate_watts_strogatz(100, 4, 0.4, 11);
    CHECK(g.edge_count() == 200);
  }

  SECTION("same seed, same graph") {
    const Graph a = generate_watts_strogatz(1000, 4, 0.1, 42);
    const Graph b = generate_watts_strogatz(1000, 4, 0.1, 42);
    REQUIRE(a.edge_count() == b.edge_count());
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
      CHECK(a.edge(e).u == b.edge(e).u);
      CHECK(a.edge(e).v == b.edge(e).v);
    }
  }

  SECTION("rejects degree too large for n") {
    CHECK_THROWS_AS(generate_watts_strogatz(4, 4, 0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_watts_strogatz(10, 3, 0.1, 0), std::invalid_argument);
  }
}

TEST_CASE("kleinberg grid generator") {
  SECTION("pure lattice") {
    const Graph g = generate_kleinberg_grid(3, 2.0, 0, 1);
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 12);
  }

  SECTION("long-range edges added per vertex") {
    const Graph g = generate_kleinberg_grid(8, 2.0, 1, 5);
    CHECK(g.vertex_count() == 64);
    CHECK(g.edge_count() > 2 * 8 * 7);
    CHECK(g.edge_count() <= 2 * 8 * 7 + 64);
  }

  SECTION("determinism") {
    const Graph a = generate_kleinberg_grid(10, 2.0, 2, 9);
    const Graph b = generate_kleinberg_grid(10, 2.0, 2, 9);
    REQUIRE(a.edge_count() == b.edge_count());
    for (EdgeId e = 0; e < a.edge_count(); ++e) {
      CHECK(a.edge(e).u == b.edge(e).u);
      CHECK(a.edge(e).v == b.edge(e).v);
    }
  }
}
