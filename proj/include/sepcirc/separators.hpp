#pragma once

#include <string>
#include <vector>

#include "sepcirc/graph.hpp"

namespace sepcirc {

/// Separability function f(p): either p^lambda or log2(p).
struct SeparabilityFunction {
  enum class Kind { power, logarithm };

  Kind kind = Kind::power;
  double lambda = 0.5;

  static SeparabilityFunction power(double lambda) { return {Kind::power, lambda}; }
  static SeparabilityFunction logarithm() { return {Kind::logarithm, 0.0}; }

  double operator()(double p) const;
  std::string describe() const;
};

/// (alpha, beta, m, f) of an edge or vertex separability contract.
struct SeparabilityParams {
  double alpha = 2.0 / 3.0;
  double beta = 1.0;
  int m_min = 2;
  SeparabilityFunction f = SeparabilityFunction::power(0.5);

  void validate() const;
};

struct VertexSeparation {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  std::vector<VertexId> c;
};

struct EdgeSeparation {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  std::vector<Edge> cut;
};

class SeparatorError : public Error {
 public:
  using Error::Error;
};

/// No axis-aligned cut meets the balance target. Callers may fall back to
/// brute_force_min_cut.
class NoBalancedCut : public SeparatorError {
 public:
  using SeparatorError::SeparatorError;
};

/// Edges of g with one endpoint in `a` and the other in `b`, sorted.
std::vector<Edge> crossing_edges(const Support& g, std::span<const VertexId> a, std::span<const VertexId> b);

/// Throws SeparatorError unless the parts are disjoint and cover V(g).
void require_partition(const Support& g, std::span<const std::vector<VertexId>> parts);

/// True iff sep.a/sep.b partition V(g) and sep.cut is exactly the A-B edge set.
bool is_consistent(const Support& g, const EdgeSeparation& sep);

/// Vertex-separator contract check. Graphs with fewer than params.m_min
/// vertices are accepted vacuously.
bool validate_vertex_separation(const Support& g, const VertexSeparation& s, const SeparabilityParams& params);

/// Edge-separator contract check: nonempty parts of at most alpha*p vertices
/// each, cut consistent with the parts and no larger than beta*f(p).
bool validate_edge_separation(const Support& g, const EdgeSeparation& s, const SeparabilityParams& params);

/// Turns a vertex separation into an edge separation by moving the separator
/// vertices, in ascending id order, to whichever side is currently smaller
/// (ties go to A). Requires p >= 2 and max degree <= q.
EdgeSeparation vertex_to_edge_separator(const Support& g, const VertexSeparation& s, int q);

/// Best axis-aligned hyperplane cut: both sides at most alpha_target * p,
/// minimum cut size, then most balanced, then lowest axis and threshold.
EdgeSeparation plane_separator(const Support& g, const GeometricLayout& layout, double alpha_target = 2.0 / 3.0);

inline constexpr std::size_t kDefaultBruteForceCap = 16;

/// Exact minimum edge cut over bipartitions with both sides nonempty and at
/// most alpha_target * p. A holds the smallest vertex id; among optimal cuts
/// the lexicographically smallest A wins.
EdgeSeparation brute_force_min_cut(const Support& g, double alpha_target = 2.0 / 3.0,
                                   std::size_t max_vertices = kDefaultBruteForceCap);

/// Exact minimum vertex separator: smallest C such that the components of
/// g - C split into A and B of at most alpha * p vertices each. Among optimal
/// C (lexicographic), the most balanced grouping of components is returned.
VertexSeparation brute_force_vertex_separator(const Support& g, double alpha = 2.0 / 3.0,
                                              std::size_t max_vertices = kDefaultBruteForceCap);

}  // namespace sepcirc
