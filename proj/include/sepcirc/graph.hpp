#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sepcirc/common.hpp"

namespace sepcirc {

using VertexId = int;

/// Unordered vertex pair, stored with u <= v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(VertexId a, VertexId b) { return a <= b ? Edge{a, b} : Edge{b, a}; }

class GraphError : public Error {
 public:
  using Error::Error;
};

/// A finite support graph.
///
/// Vertices are kept sorted by id and edges sorted lexicographically, so two
/// supports built from the same vertex/edge multisets compare and serialize
/// identically. Self-loops and parallel edges are rejected unless the graph is
/// built in multigraph mode.
class Support {
 public:
  Support() = default;
  Support(std::vector<VertexId> vertices, std::vector<Edge> edges, bool multigraph = false);

  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool is_multigraph() const { return multigraph_; }

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  bool contains(VertexId v) const { return index_.contains(v); }
  /// Dense index of v in vertices(); throws GraphError for unknown ids.
  std::size_t index_of(VertexId v) const;
  VertexId vertex_at(std::size_t index) const { return vertices_[index]; }

  /// Neighbour indices of the vertex at `index` (repeated for parallel edges).
  std::span<const std::size_t> neighbors(std::size_t index) const { return adjacency_[index]; }
  std::size_t degree(VertexId v) const { return adjacency_[index_of(v)].size(); }
  std::size_t max_degree() const;

  /// Number of parallel copies of {a, b}; 0 when absent.
  std::size_t multiplicity(VertexId a, VertexId b) const;
  bool has_edge(VertexId a, VertexId b) const { return multiplicity(a, b) > 0; }

  /// Subgraph induced by `subset` (ids must belong to this graph).
  Support induced(std::span<const VertexId> subset) const;

  bool operator==(const Support& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ && multigraph_ == other.multigraph_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  bool multigraph_ = false;
};

/// Placement of a support in R^d with c_v fixed to 1.
struct GeometricLayout {
  int d = 2;
  double c_e = 1.0;
  std::map<VertexId, std::vector<double>> coords;

  const std::vector<double>& at(VertexId v) const;
};

struct Ball {
  std::vector<double> center;
  double radius = 0.5;
};

/// Parameters of the class G(q, theta): degree bound and subgraph-count base.
struct ClassParams {
  int q = 1;
  double theta = 2.0;

  void validate() const;
};

struct GridGraph {
  Support support;
  GeometricLayout layout;
};

inline constexpr std::size_t kDefaultGridVertexCap = std::size_t{1} << 22;

/// Box grid with `dims` points per axis; vertex ids enumerate points in
/// row-major order (last axis fastest). Layout coordinates are the integer
/// points and c_e = 1.
GridGraph make_grid(int d, std::span<const int> dims, std::size_t max_vertices = kDefaultGridVertexCap);

double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// True iff every pair of vertices is at distance >= 1 and every edge is no
/// longer than layout.c_e. Throws GraphError when the layout misses a vertex
/// or coordinates disagree with layout.d.
bool check_d_embedding(const Support& g, const GeometricLayout& layout);

/// floor((2 c_e + 1)^d): the degree cap of a d-dimensional graph.
long long degree_bound(double c_e, int d);

class OverlapError : public GraphError {
 public:
  OverlapError(std::size_t first, std::size_t second, const std::string& what)
      : GraphError(what), first(first), second(second) {}
  std::size_t first;
  std::size_t second;
};

/// alpha-overlap graph of balls with pairwise disjoint interiors. Ball i gets
/// vertex id `ids[i]` when ids are given and i + 1 otherwise.
Support overlap_graph(std::span<const Ball> balls, double alpha,
                      std::optional<std::span<const VertexId>> ids = std::nullopt);

/// Overlap graph of radius-1/2 balls at the layout points with alpha = 2 c_e.
/// Keeps the vertex ids of g, so E(g) is a subset of the result's edges.
Support geometric_to_overlap(const Support& g, const GeometricLayout& layout);

struct SubgraphCountLimits {
  std::size_t max_vertices = 10;
  // Total (vertex subset, edge subset) pairs the enumeration may visit.
  std::uint64_t max_work = std::uint64_t{1} << 26;
};

/// Number of pairwise non-isomorphic subgraphs of g with exactly p vertices
/// (any vertex subset together with any subset of the edges among it).
std::uint64_t count_subgraphs(const Support& g, int p, const SubgraphCountLimits& limits = {});

/// Smallest theta with count_subgraphs(g, p) <= theta^p for p = 1..order, and
/// never below `floor_theta`.
double estimate_theta(const Support& g, double floor_theta = 2.0, const SubgraphCountLimits& limits = {});

}  // namespace sepcirc
