#include <doctest.h>

#include <random>

#include "sysstruct/error.hpp"
#include "sysstruct/gds.hpp"

using namespace sysstruct;

namespace {

std::vector<std::size_t> cyclic_inputs(std::size_t n, std::size_t count) {
  std::vector<std::size_t> u;
  for (std::size_t k = 0; k < count; ++k) u.push_back(1 + k % n);
  return u;
}

}  // namespace

TEST_SUITE_BEGIN("gds");

TEST_CASE("first update from the all-zero state") {
  const Gds g = Gds::ring(4);
  CHECK(gds_step(g, {0, 0, 0, 0}, 1) == GdsState{1, 0, 0, 0});
}

TEST_CASE("a one-valued neighbour annihilates the product") {
  const Gds g = Gds::ring(4);
  CHECK(gds_step(g, {1, 0, 0, 0}, 2) == GdsState{1, 0, 0, 0});
  CHECK(gds_step(g, {0, 1, 0, 1}, 1) == GdsState{0, 1, 0, 1});
  // and an already-set node resets itself
  CHECK(gds_step(g, {1, 0, 0, 0}, 1) == GdsState{0, 0, 0, 0});
}

TEST_CASE("node index is validated") {
  const Gds g = Gds::ring(4);
  CHECK_THROWS_WITH_AS(gds_step(g, {0, 0, 0, 0}, 0), doctest::Contains("BadNode"), error);
  CHECK_THROWS_AS(gds_step(g, {0, 0, 0, 0}, 5), error);
}

TEST_CASE("cyclic run reaches the printed checkpoints") {
  const Gds g = Gds::ring(4);
  const GdsTrajectory t = gds_simulate(g, {0, 0, 0, 0}, cyclic_inputs(4, 28), 28);
  CHECK(t.x[1] == GdsState{1, 0, 0, 0});
  CHECK(t.x[2] == GdsState{1, 0, 0, 0});
  CHECK(t.x[3] == GdsState{1, 0, 1, 0});
  CHECK(t.x[4] == GdsState{1, 0, 1, 0});
  CHECK(t.x[8] == GdsState{0, 0, 0, 1});
  CHECK(t.x[12] == GdsState{0, 1, 0, 0});
  CHECK(t.x[16] == GdsState{0, 0, 1, 0});
  CHECK(t.x[20] == GdsState{1, 0, 0, 0});
  CHECK(t.x[24] == GdsState{0, 1, 0, 1});
  CHECK(t.x[28] == GdsState{0, 0, 0, 0});  // the period closes
  CHECK(t.y[8] == 1);
  CHECK(t.y[12] == 0);
}

TEST_CASE("zero-length run returns the initial state only") {
  const Gds g = Gds::ring(4);
  const GdsTrajectory t = gds_simulate(g, {0, 1, 0, 1}, {}, 0);
  REQUIRE(t.x.size() == 1);
  CHECK(t.x[0] == GdsState{0, 1, 0, 1});
  CHECK(t.input.empty());
}

TEST_CASE("input sequence must cover the requested steps") {
  const Gds g = Gds::ring(4);
  CHECK_THROWS_AS(gds_simulate(g, {0, 0, 0, 0}, {1, 2}, 3), error);
}

TEST_CASE("sequential step changes only the selected node") {
  const Gds g = Gds::ring(6);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    GdsState x(6);
    for (auto& bit : x) bit = rng() % 2;
    const std::size_t u = 1 + rng() % 6;
    const GdsState next = gds_step(g, x, u);
    for (std::size_t i = 0; i < 6; ++i)
      if (i != u - 1) CHECK(next[i] == x[i]);
  }
}

TEST_CASE("parallel helper applies every update at once") {
  const Gds g = Gds::ring(4);
  CHECK(gds_step_parallel(g, {0, 0, 0, 0}) == GdsState{1, 1, 1, 1});
  CHECK(gds_step_parallel(g, {1, 1, 1, 1}) == GdsState{0, 0, 0, 0});
}

TEST_CASE("dependency graph of the four-ring") {
  const Gds g = Gds::ring(4);
  const GdsDependencyGraph dep = gds_dependency_graph(g);
  const auto f = [&](std::size_t i) { return dep.node_vertex(i - 1); };
  // bidirected ring edges plus self-loops
  for (std::size_t i = 1; i <= 4; ++i) {
    CHECK(dep.has(f(i), f(i)));
    CHECK(dep.has(GdsDependencyGraph::input_vertex(), f(i)));
  }
  for (const auto& [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{
           {1, 2}, {2, 3}, {3, 4}, {4, 1}}) {
    CHECK(dep.has(f(a), f(b)));
    CHECK(dep.has(f(b), f(a)));
  }
  CHECK_FALSE(dep.has(f(1), f(3)));
  CHECK_FALSE(dep.has(f(2), f(4)));
  CHECK(dep.has(f(4), dep.output_vertex()));
  CHECK_FALSE(dep.has(f(3), dep.output_vertex()));
  // 4 self loops + 8 ring edges + 4 input edges + 1 output edge
  CHECK(dep.edges.size() == 17);
}

TEST_CASE("constant update family has no incoming edges") {
  const GdsUpdate constant = [](const GdsState&, std::size_t, std::size_t) -> std::uint8_t {
    return 0;
  };
  const GdsDependencyGraph dep = gds_dependency_graph(3, constant, 2);
  for (const auto& [from, to] : dep.edges) CHECK(to == dep.output_vertex());
  CHECK(dep.edges.size() == 1);  // only the output read-out remains
}

TEST_CASE("path graph dependencies stay on the path") {
  const Gds g = Gds::path(3);
  const GdsDependencyGraph dep = gds_dependency_graph(g);
  const auto f = [&](std::size_t i) { return dep.node_vertex(i - 1); };
  CHECK(dep.has(f(1), f(2)));
  CHECK(dep.has(f(2), f(1)));
  CHECK(dep.has(f(2), f(3)));
  CHECK(dep.has(f(3), f(2)));
  CHECK_FALSE(dep.has(f(1), f(3)));
  CHECK_FALSE(dep.has(f(3), f(1)));
}

TEST_CASE("csv layout") {
  const Gds g = Gds::ring(4);
  const GdsTrajectory t = gds_simulate(g, {0, 0, 0, 0}, {1, 2}, 2);
  const std::string csv = to_csv(g, t);
  CHECK(csv == "t,x1,x2,x3,x4,u,y\n"
               "0,0,0,0,0,1,0\n"
               "1,1,0,0,0,2,0\n"
               "2,1,0,0,0,,0\n");
}

TEST_CASE("edge list parsing") {
  const Gds g = parse_gds("# ring\nnodes 4\nedge 1 2\nedge 2 3\nedge 3 4\nedge 4 1\noutput 4\n");
  CHECK(g.n == 4);
  CHECK(g.output_node == 3);
  CHECK(g.adjacency[0] == std::set<std::size_t>{1, 3});
  CHECK_THROWS_AS(parse_gds("edge 1 2\n"), error);
  CHECK_THROWS_AS(parse_gds("nodes 2\nedge 0 1\n"), error);
  CHECK_THROWS_AS(parse_gds("nodes 2\nedge 1 5\n"), error);
}

TEST_SUITE_END();
