#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "sepcirc/separators.hpp"

using namespace sepcirc;
using namespace test_helpers;

namespace {

SeparabilityParams sqrt_params(double alpha = 2.0 / 3.0) { return {alpha, 1.0, 2, SeparabilityFunction::power(0.5)}; }

}  // namespace

TEST_CASE("separability function") {
  CHECK(SeparabilityFunction::power(0.5)(16.0) == doctest::Approx(4.0));
  CHECK(SeparabilityFunction::logarithm()(8.0) == doctest::Approx(3.0));
  SeparabilityParams bad = sqrt_params(0.4);
  CHECK_THROWS_AS(bad.validate(), PreconditionError);
}

TEST_CASE("validate_vertex_separation") {
  const Support p3 = path(3);
  CHECK(validate_vertex_separation(p3, {{1}, {3}, {2}}, sqrt_params()));
  CHECK_FALSE(validate_vertex_separation(p3, {{1, 2}, {3}, {}}, sqrt_params()));
  CHECK(validate_vertex_separation(complete(1), {{1}, {}, {}}, sqrt_params(0.5)));
}

TEST_CASE("vertex_to_edge_separator examples") {
  const Support p3 = path(3);
  const EdgeSeparation s = vertex_to_edge_separator(p3, {{1}, {3}, {2}}, 2);
  CHECK(s.a == std::vector<VertexId>{1, 2});
  CHECK(s.b == std::vector<VertexId>{3});
  CHECK(s.cut == std::vector<Edge>{make_edge(2, 3)});

  const Support split({1, 2, 3, 4}, {make_edge(1, 2), make_edge(3, 4)});
  CHECK(vertex_to_edge_separator(split, {{1, 2}, {3, 4}, {}}, 2).cut.empty());

  // Star with center 4 and leaves 1, 2, 3.
  const Support star({1, 2, 3, 4}, {make_edge(1, 4), make_edge(2, 4), make_edge(3, 4)});
  const EdgeSeparation t = vertex_to_edge_separator(star, {{1}, {2, 3}, {4}}, 3);
  CHECK(t.a == std::vector<VertexId>{1, 4});
  CHECK(t.cut.size() == 2);
}

TEST_CASE("plane_separator examples") {
  const GridGraph g44 = grid({4, 4});
  const EdgeSeparation s = plane_separator(g44.support, g44.layout);
  CHECK(s.a.size() == 8);
  CHECK(s.b.size() == 8);
  CHECK(s.cut.size() == 4);

  const GridGraph g12 = grid({1, 2});
  CHECK(plane_separator(g12.support, g12.layout).cut.size() == 1);

  const GridGraph g23 = grid({2, 3});
  const EdgeSeparation u = plane_separator(g23.support, g23.layout);
  CHECK(u.cut.size() == 2);
  CHECK(std::max(u.a.size(), u.b.size()) == 4);
  CHECK(is_consistent(g23.support, u));
}

TEST_CASE("brute_force_min_cut examples") {
  CHECK(brute_force_min_cut(complete(2), 0.5).cut.size() == 1);
  CHECK(brute_force_min_cut(cycle(4), 0.5).cut.size() == 2);
  CHECK(brute_force_min_cut(grid({4, 4}).support, 0.5).cut.size() == 4);
  CHECK_THROWS_AS(brute_force_min_cut(grid({5, 5}).support), CapExceeded);
}

TEST_CASE("brute_force_vertex_separator on a path") {
  const VertexSeparation s = brute_force_vertex_separator(path(3));
  CHECK(s.c.size() == 1);
  CHECK(validate_vertex_separation(path(3), s, sqrt_params()));
}

TEST_CASE("property: plane and brute cuts agree with the crossing edges") {
  for (auto dims : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {3, 4}}) {
    const GridGraph g = grid(dims);
    const EdgeSeparation plane = plane_separator(g.support, g.layout);
    CHECK(is_consistent(g.support, plane));
    CHECK(plane.cut == crossing_edges(g.support, plane.a, plane.b));
    const EdgeSeparation brute = brute_force_min_cut(g.support);
    CHECK(is_consistent(g.support, brute));
    CHECK(brute.cut.size() <= plane.cut.size());
  }
}

TEST_CASE("property: vertex to edge conversion keeps balance and bounds the cut") {
  std::mt19937_64 rng(11);
  const int q = 4;
  for (int trial = 0; trial < 200; ++trial) {
    const int p = std::uniform_int_distribution<int>(2, 10)(rng);
    const Support g = random_bounded_degree(rng, p, q);
    const VertexSeparation vs = brute_force_vertex_separator(g);
    const EdgeSeparation es = vertex_to_edge_separator(g, vs, q);
    CHECK(is_consistent(g, es));
    CHECK(es.a.size() >= 1);
    CHECK(es.b.size() >= 1);
    CHECK(3 * std::max(es.a.size(), es.b.size()) <= 2 * static_cast<std::size_t>(p));
    CHECK(es.cut.size() <= q * vs.c.size());
  }
}
