#pragma once

#include <random>
#include <vector>

#include "sepcirc/circuit.hpp"
#include "sepcirc/graph.hpp"
#include "sepcirc/multilayer.hpp"

namespace test_helpers {

using namespace sepcirc;

inline Support path(int p) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 1; i <= p; ++i) {
    vs.push_back(i);
    if (i > 1) es.push_back(make_edge(i - 1, i));
  }
  return Support(vs, es);
}

inline Support cycle(int p) {
  Support base = path(p);
  std::vector<Edge> es(base.edges().begin(), base.edges().end());
  es.push_back(make_edge(1, p));
  return Support(std::vector<VertexId>(base.vertices().begin(), base.vertices().end()), es);
}

inline Support complete(int p) {
  std::vector<VertexId> vs;
  std::vector<Edge> es;
  for (int i = 1; i <= p; ++i) {
    vs.push_back(i);
    for (int j = 1; j < i; ++j) es.push_back(make_edge(j, i));
  }
  return Support(vs, es);
}

inline GridGraph grid(std::vector<int> dims) { return make_grid(static_cast<int>(dims.size()), dims); }

inline Node input(int id, std::vector<int> out = {}) { return {id, NodeKind::input, std::nullopt, std::move(out)}; }
inline Node gate(int id, GateFn fn, std::vector<int> out = {}) { return {id, NodeKind::gate, fn, std::move(out)}; }
inline Node transit(int id, std::vector<int> out = {}) { return {id, NodeKind::transit, std::nullopt, std::move(out)}; }

inline BooleanCircuit identity_circuit() { return {1, 1, {input(0, {0})}, {}}; }

inline BooleanCircuit not_circuit() { return {1, 1, {input(0), gate(1, GateFn::not_, {0})}, {{0, 1, 1}}}; }

inline BooleanCircuit and_circuit() {
  return {2, 1, {input(0), input(1), gate(2, GateFn::and_, {0})}, {{0, 2, 1}, {1, 2, 2}}};
}

/// Random connected graph on p vertices with max degree <= q.
inline Support random_bounded_degree(std::mt19937_64& rng, int p, int q) {
  std::vector<VertexId> vs;
  std::vector<int> deg(p + 1, 0);
  std::vector<Edge> es;
  for (int i = 1; i <= p; ++i) vs.push_back(i);
  auto try_add = [&](int a, int b) {
    if (a == b || deg[a] >= q || deg[b] >= q) return false;
    const Edge e = make_edge(a, b);
    for (const Edge& f : es)
      if (f == e) return false;
    es.push_back(e);
    ++deg[a];
    ++deg[b];
    return true;
  };
  for (int i = 2; i <= p; ++i) {
    std::uniform_int_distribution<int> pick(1, i - 1);
    for (int attempt = 0; attempt < 16 && !try_add(pick(rng), i); ++attempt) {
    }
  }
  std::uniform_int_distribution<int> any(1, p);
  const int extra = std::uniform_int_distribution<int>(0, p)(rng);
  for (int i = 0; i < extra; ++i) try_add(any(rng), any(rng));
  return Support(vs, es);
}

}  // namespace test_helpers
