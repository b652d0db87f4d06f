#include "sepcirc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sepcirc {

Support::Support(std::vector<VertexId> vertices, std::vector<Edge> edges, bool multigraph)
    : vertices_(std::move(vertices)), multigraph_(multigraph) {
  if (vertices_.empty()) throw GraphError("a support needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw GraphError("duplicate vertex id");
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);

  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v)) {
      std::ostringstream msg;
      msg << "edge {" << e.u << "," << e.v << "} uses an undeclared vertex";
      throw GraphError(msg.str());
    }
    if (e.u == e.v && !multigraph_) {
      std::ostringstream msg;
      msg << "self-loop at vertex " << e.u << " (enable multigraph mode to allow it)";
      throw GraphError(msg.str());
    }
    edges_.push_back(make_edge(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (!multigraph_) {
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      std::ostringstream msg;
      msg << "parallel edge {" << dup->u << "," << dup->v << "} (enable multigraph mode to allow it)";
      throw GraphError(msg.str());
    }
  }

  adjacency_.assign(vertices_.size(), {});
  for (const Edge& e : edges_) {
    const std::size_t a = index_.at(e.u);
    const std::size_t b = index_.at(e.v);
    adjacency_[a].push_back(b);
    if (a != b) adjacency_[b].push_back(a);
  }
}

std::size_t Support::index_of(VertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw GraphError("unknown vertex id " + std::to_string(v));
  return it->second;
}

std::size_t Support::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

std::size_t Support::multiplicity(VertexId a, VertexId b) const {
  const Edge key = make_edge(a, b);
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), key);
  return static_cast<std::size_t>(hi - lo);
}

Support Support::induced(std::span<const VertexId> subset) const {
  std::unordered_set<VertexId> keep;
  for (VertexId v : subset) {
    if (!contains(v)) throw GraphError("induced(): unknown vertex id " + std::to_string(v));
    keep.insert(v);
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_)
    if (keep.contains(e.u) && keep.contains(e.v)) kept.push_back(e);
  return Support(std::vector<VertexId>(keep.begin(), keep.end()), std::move(kept), multigraph_);
}

const std::vector<double>& GeometricLayout::at(VertexId v) const {
  auto it = coords.find(v);
  if (it == coords.end()) throw GraphError("layout has no coordinates for vertex " + std::to_string(v));
  if (static_cast<int>(it->second.size()) != d)
    throw GraphError("vertex " + std::to_string(v) + " has " + std::to_string(it->second.size()) +
                     " coordinates, layout dimension is " + std::to_string(d));
  return it->second;
}

void ClassParams::validate() const {
  if (q < 1) throw PreconditionError("class parameter q must be >= 1");
  if (!(theta > 1.0)) throw PreconditionError("class parameter theta must be > 1");
}

GridGraph make_grid(int d, std::span<const int> dims, std::size_t max_vertices) {
  if (dims.empty()) throw GraphError("make_grid: empty dims list");
  if (d < 1) throw GraphError("make_grid: dimension must be >= 1");
  if (static_cast<std::size_t>(d) != dims.size())
    throw GraphError("make_grid: d = " + std::to_string(d) + " but " + std::to_string(dims.size()) +
                     " extents were given");
  std::size_t total = 1;
  for (int a : dims) {
    if (a < 1) throw GraphError("make_grid: every extent must be >= 1");
    if (total > max_vertices / static_cast<std::size_t>(a))
      throw CapExceeded("make_grid: vertex count exceeds cap " + std::to_string(max_vertices));
    total *= static_cast<std::size_t>(a);
  }

  // strides[i]: distance in vertex id between neighbours along axis i.
  std::vector<std::size_t> strides(d, 1);
  for (int i = d - 2; i >= 0; --i) strides[i] = strides[i + 1] * static_cast<std::size_t>(dims[i + 1]);

  GridGraph grid;
  grid.layout.d = d;
  grid.layout.c_e = 1.0;
  std::vector<VertexId> ids(total);
  std::iota(ids.begin(), ids.end(), 0);
  std::vector<Edge> edges;
  std::vector<int> point(d, 0);
  for (std::size_t id = 0; id < total; ++id) {
    std::size_t rest = id;
    for (int i = 0; i < d; ++i) {
      point[i] = static_cast<int>(rest / strides[i]);
      rest %= strides[i];
    }
    grid.layout.coords.emplace(static_cast<VertexId>(id), std::vector<double>(point.begin(), point.end()));
    for (int i = 0; i < d; ++i)
      if (point[i] + 1 < dims[i])
        edges.push_back({static_cast<VertexId>(id), static_cast<VertexId>(id + strides[i])});
  }
  grid.support = Support(std::move(ids), std::move(edges));
  return grid;
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

bool check_d_embedding(const Support& g, const GeometricLayout& layout) {
  if (layout.d < 1) throw GraphError("layout dimension must be >= 1");
  std::vector<const std::vector<double>*> points;
  points.reserve(g.order());
  for (VertexId v : g.vertices()) points.push_back(&layout.at(v));

  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (!ge_rounded(euclidean_distance(*points[i], *points[j]), 1.0)) return false;

  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    const double len = euclidean_distance(layout.at(e.u), layout.at(e.v));
    if (!le_rounded(len, layout.c_e)) return false;
  }
  return true;
}

long long degree_bound(double c_e, int d) {
  if (!(c_e > 0.0)) throw PreconditionError("degree_bound: c_e must be positive");
  if (d < 1) throw PreconditionError("degree_bound: d must be >= 1");
  const double volume_ratio = std::pow(2.0 * c_e + 1.0, d);
  return static_cast<long long>(std::floor(volume_ratio * (1.0 + kRoundingSlack)));
}

Support overlap_graph(std::span<const Ball> balls, double alpha, std::optional<std::span<const VertexId>> ids) {
  if (balls.empty()) throw GraphError("overlap_graph: no balls");
  if (!(alpha >= 1.0)) throw PreconditionError("overlap_graph: alpha must be >= 1");
  if (ids && ids->size() != balls.size()) throw GraphError("overlap_graph: id list length differs from ball count");
  const std::size_t dim = balls.front().center.size();
  for (const Ball& b : balls) {
    if (b.center.size() != dim) throw GraphError("overlap_graph: balls of different dimension");
    if (!(b.radius > 0.0)) throw GraphError("overlap_graph: radius must be positive");
  }

  std::vector<VertexId> vertex_ids(balls.size());
  for (std::size_t i = 0; i < balls.size(); ++i)
    vertex_ids[i] = ids ? (*ids)[i] : static_cast<VertexId>(i + 1);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    for (std::size_t j = i + 1; j < balls.size(); ++j) {
      const double dist = euclidean_distance(balls[i].center, balls[j].center);
      const double ri = balls[i].radius;
      const double rj = balls[j].radius;
      if (!ge_rounded(dist, ri + rj)) {
        std::ostringstream msg;
        msg << "balls " << vertex_ids[i] << " and " << vertex_ids[j] << " have overlapping interiors";
        throw OverlapError(i, j, msg.str());
      }
      if (le_rounded(dist, ri + alpha * rj) && le_rounded(dist, alpha * ri + rj))
        edges.push_back(make_edge(vertex_ids[i], vertex_ids[j]));
    }
  }
  return Support(std::move(vertex_ids), std::move(edges));
}

Support geometric_to_overlap(const Support& g, const GeometricLayout& layout) {
  if (!check_d_embedding(g, layout)) throw GraphError("geometric_to_overlap: layout is not a valid d-embedding");
  std::vector<Ball> balls;
  balls.reserve(g.order());
  for (VertexId v : g.vertices()) balls.push_back({layout.at(v), 0.5});
  std::vector<VertexId> ids(g.vertices().begin(), g.vertices().end());
  return overlap_graph(balls, 2.0 * layout.c_e, std::span<const VertexId>(ids));
}

namespace {

// Adjacency of a small simple graph as one bit per vertex pair (i < j).
using PairCode = std::uint64_t;

int pair_bit(int i, int j, int p) {
  if (i > j) std::swap(i, j);
  return i * p - i * (i + 1) / 2 + (j - i - 1);
}

PairCode encode(const std::vector<std::vector<bool>>& adj, std::span<const int> perm) {
  const int p = static_cast<int>(perm.size());
  PairCode code = 0;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (adj[perm[i]][perm[j]]) code |= PairCode{1} << pair_bit(i, j, p);
  return code;
}

// Canonical code: minimum encoding over vertex orders that respect a stable
// colour refinement (1-WL). Cells of isolated vertices are not permuted since
// swapping them never changes the encoding.
PairCode canonical_code(const std::vector<std::vector<bool>>& adj) {
  const int p = static_cast<int>(adj.size());
  std::vector<int> colour(p, 0);
  for (int round = 0; round < p; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(p);
    for (int v = 0; v < p; ++v) {
      std::vector<int> nb;
      for (int w = 0; w < p; ++w)
        if (adj[v][w]) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      nb.insert(nb.begin(), colour[v]);
      sig[v] = {std::move(nb), v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(p);
    for (int v = 0; v < p; ++v)
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    const bool stable = std::set<int>(next.begin(), next.end()).size() ==
                        std::set<int>(colour.begin(), colour.end()).size();
    colour = std::move(next);
    if (stable) break;
  }

  std::vector<int> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });

  struct Cell {
    int begin;
    int end;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < p;) {
    int j = i;
    while (j < p && colour[order[j]] == colour[order[i]]) ++j;
    bool isolated = true;
    for (int k = i; k < j && isolated; ++k)
      for (int w = 0; w < p; ++w)
        if (adj[order[k]][w]) {
          isolated = false;
          break;
        }
    if (j - i > 1 && !isolated) cells.push_back({i, j});
    i = j;
  }

  PairCode best = encode(adj, order);
  // Odometer over the permutations of every non-trivial cell.
  std::function<void(std::size_t)> permute = [&](std::size_t c) {
    if (c == cells.size()) {
      best = std::min(best, encode(adj, order));
      return;
    }
    auto first = order.begin() + cells[c].begin;
    auto last = order.begin() + cells[c].end;
    std::sort(first, last);
    do {
      permute(c + 1);
    } while (std::next_permutation(first, last));
  };
  permute(0);
  return best;
}

}  // namespace

std::uint64_t count_subgraphs(const Support& g, int p, const SubgraphCountLimits& limits) {
  if (p < 1) throw PreconditionError("count_subgraphs: p must be >= 1");
  if (g.is_multigraph()) throw PreconditionError("count_subgraphs: simple graphs only");
  const int n = static_cast<int>(g.order());
  if (static_cast<std::size_t>(n) > limits.max_vertices)
    throw CapExceeded("count_subgraphs: graph has " + std::to_string(n) + " vertices, cap is " +
                      std::to_string(limits.max_vertices));
  if (p > n) return 0;

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) {
    const auto a = g.index_of(e.u);
    const auto b = g.index_of(e.v);
    adj[a][b] = adj[b][a] = true;
  }

  // Work estimate first so oversized requests fail before doing anything.
  std::uint64_t work = 0;
  auto for_each_subset = [&](auto&& visit) {
    std::vector<int> idx(p);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      visit(idx);
      int i = p - 1;
      while (i >= 0 && idx[i] == n - p + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
    }
  };
  for_each_subset([&](const std::vector<int>& idx) {
    int edges_inside = 0;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) edges_inside += adj[idx[i]][idx[j]] ? 1 : 0;
    work += std::uint64_t{1} << edges_inside;
  });
  if (work > limits.max_work)
    throw CapExceeded("count_subgraphs: " + std::to_string(work) + " subgraphs to visit, cap is " +
                      std::to_string(limits.max_work));

  std::unordered_set<PairCode> seen;
  for_each_subset([&](const std::vector<int>& idx) {
    std::vector<std::pair<int, int>> inside;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j)
        if (adj[idx[i]][idx[j]]) inside.emplace_back(i, j);
    const std::uint64_t combos = std::uint64_t{1} << inside.size();
    std::vector<std::vector<bool>> local(p, std::vector<bool>(p, false));
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
      for (auto& row : local) std::fill(row.begin(), row.end(), false);
      for (std::size_t e = 0; e < inside.size(); ++e)
        if (mask >> e & 1U) local[inside[e].first][inside[e].second] = local[inside[e].second][inside[e].first] = true;
      seen.insert(canonical_code(local));
    }
  });
  return seen.size();
}

double estimate_theta(const Support& g, double floor_theta, const SubgraphCountLimits& limits) {
  double theta = floor_theta;
  for (int p = 1; p <= static_cast<int>(g.order()); ++p) {
    const auto count = static_cast<double>(count_subgraphs(g, p, limits));
    theta = std::max(theta, std::pow(count, 1.0 / p));
  }
  return theta;
}

}  // namespace sepcirc
