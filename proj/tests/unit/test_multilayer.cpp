#include "doctest.h"
#include "helpers.hpp"
#include "sepcirc/multilayer.hpp"

using namespace sepcirc;
using namespace test_helpers;

namespace {

MultilayerCircuit embed(BooleanCircuit c, Support t, std::map<int, VertexId> map, int k = 1) {
  return {std::move(c), std::move(t), {std::move(map)}, k};
}

}  // namespace

TEST_CASE("identity on K1 is valid with complexity 1") {
  const auto mc = embed(identity_circuit(), complete(1), {{0, 1}});
  CHECK(validate(mc).ok());
  CHECK(complexity(mc) == 1);
}

TEST_CASE("NOT on P2 has complexity 2") {
  const auto mc = embed(not_circuit(), path(2), {{0, 1}, {1, 2}});
  CHECK(validate(mc).ok());
  CHECK(complexity(mc) == 2);
  const auto squeezed = embed(not_circuit(), complete(1), {{0, 1}, {1, 1}});
  // Wires run along support edges, so a wired pair cannot share a vertex.
  CHECK(validate(squeezed).count(ViolationKind::homomorphism) == 1);
}

TEST_CASE("co-located input and constant gate") {
  const BooleanCircuit zero{1, 1, {input(0), gate(1, GateFn::c0, {0})}, {}};
  const auto mc = embed(zero, complete(1), {{0, 1}, {1, 1}});
  CHECK(complexity(mc) == 1);
  ValidationOptions exclusive;
  exclusive.exclusive_sites = true;
  CHECK(validate(mc, exclusive).count(ViolationKind::constraint1) == 1);
}

TEST_CASE("two NOT gates on one vertex break constraint 1") {
  const BooleanCircuit c{1, 1, {input(0), gate(1, GateFn::not_), gate(2, GateFn::not_, {0})},
                         {{0, 1, 1}, {1, 2, 1}}};
  const auto mc = embed(c, path(2), {{0, 1}, {1, 2}, {2, 2}});
  const ValidationReport report = validate(mc);
  CHECK(report.count(ViolationKind::constraint1) == 1);
  CHECK_THROWS_AS(complexity(mc), InvalidMultilayerCircuit);
}

TEST_CASE("two wires on one edge break constraint 2 at k=1") {
  const auto mc = embed(and_circuit(), path(2), {{0, 1}, {1, 1}, {2, 2}});
  CHECK(validate(mc).count(ViolationKind::constraint2) == 1);
  auto wider = mc;
  wider.k = 2;
  CHECK(validate(wider).ok());
  const auto multi = embed(and_circuit(), Support({1, 2}, {make_edge(1, 2), make_edge(1, 2)}, true),
                           {{0, 1}, {1, 1}, {2, 2}});
  CHECK(validate(multi).ok());
}

TEST_CASE("homomorphism, unmapped and unknown vertices") {
  const auto far = embed(not_circuit(), path(3), {{0, 1}, {1, 3}});
  CHECK(validate(far).count(ViolationKind::homomorphism) == 1);
  const auto unmapped = embed(not_circuit(), path(2), {{0, 1}});
  CHECK(validate(unmapped).count(ViolationKind::unmapped_node) == 1);
  const auto unknown = embed(not_circuit(), path(2), {{0, 1}, {1, 9}});
  CHECK(validate(unknown).count(ViolationKind::unknown_vertex) == 1);
  const auto bad_k = embed(identity_circuit(), complete(1), {{0, 1}}, 0);
  CHECK(validate(bad_k).count(ViolationKind::malformed) == 1);
}

TEST_CASE("strict constraint 1 counts transit nodes") {
  // x on 1, NOT x and a copy of x on 2, AND of both on 3.
  const BooleanCircuit c{1, 1, {input(0), gate(1, GateFn::not_), transit(2), gate(3, GateFn::and_, {0})},
                         {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 2}}};
  const auto mc = embed(c, path(3), {{0, 1}, {1, 2}, {2, 2}, {3, 3}}, 2);
  CHECK(validate(mc).ok());
  ValidationOptions strict;
  strict.strict_constraint1 = true;
  CHECK(validate(mc, strict).count(ViolationKind::constraint1) == 1);
}

TEST_CASE("report text") {
  CHECK(validate(embed(identity_circuit(), complete(1), {{0, 1}})).to_string() == "valid\n");
  const auto mc = embed(and_circuit(), path(2), {{0, 1}, {1, 1}, {2, 2}});
  CHECK(validate(mc).to_string().starts_with("constraint-2: "));
}
