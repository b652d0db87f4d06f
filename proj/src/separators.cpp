#include "sepcirc/separators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace sepcirc {

double SeparabilityFunction::operator()(double p) const {
  switch (kind) {
    case Kind::power:
      return std::pow(p, lambda);
    case Kind::logarithm:
      return p <= 1.0 ? 0.0 : std::log2(p);
  }
  return 0.0;
}

std::string SeparabilityFunction::describe() const {
  if (kind == Kind::logarithm) return "log";
  std::ostringstream out;
  out << "p^" << lambda;
  return out.str();
}

void SeparabilityParams::validate() const {
  if (!(alpha >= 0.5 && alpha < 1.0)) throw PreconditionError("separability alpha must lie in [1/2, 1)");
  if (!(beta >= 0.0)) throw PreconditionError("separability beta must be >= 0");
  if (m_min < 2) throw PreconditionError("separability m must be >= 2");
  if (f.kind == SeparabilityFunction::Kind::power && !(f.lambda > 0.0 && f.lambda < 1.0))
    throw PreconditionError("separability exponent lambda must lie in (0, 1)");
}

std::vector<Edge> crossing_edges(const Support& g, std::span<const VertexId> a, std::span<const VertexId> b) {
  std::unordered_set<VertexId> in_a(a.begin(), a.end());
  std::unordered_set<VertexId> in_b(b.begin(), b.end());
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if ((in_a.contains(e.u) && in_b.contains(e.v)) || (in_b.contains(e.u) && in_a.contains(e.v))) out.push_back(e);
  return out;
}

void require_partition(const Support& g, std::span<const std::vector<VertexId>> parts) {
  std::unordered_set<VertexId> seen;
  std::size_t total = 0;
  for (const auto& part : parts) {
    for (VertexId v : part) {
      if (!g.contains(v)) throw SeparatorError("separation names vertex " + std::to_string(v) + " not in the graph");
      if (!seen.insert(v).second)
        throw SeparatorError("vertex " + std::to_string(v) + " appears in more than one part");
      ++total;
    }
  }
  if (total != g.order()) throw SeparatorError("separation does not cover every vertex");
}

bool is_consistent(const Support& g, const EdgeSeparation& sep) {
  const std::vector<VertexId> parts[] = {sep.a, sep.b};
  try {
    require_partition(g, parts);
  } catch (const SeparatorError&) {
    return false;
  }
  std::vector<Edge> cut = sep.cut;
  for (Edge& e : cut) e = make_edge(e.u, e.v);
  std::sort(cut.begin(), cut.end());
  return cut == crossing_edges(g, sep.a, sep.b);
}

bool validate_vertex_separation(const Support& g, const VertexSeparation& s, const SeparabilityParams& params) {
  const std::vector<VertexId> parts[] = {s.a, s.b, s.c};
  require_partition(g, parts);
  const auto p = static_cast<double>(g.order());
  if (g.order() < static_cast<std::size_t>(params.m_min)) return true;
  if (!crossing_edges(g, s.a, s.b).empty()) return false;
  return le_rounded(static_cast<double>(s.a.size()), params.alpha * p) &&
         le_rounded(static_cast<double>(s.b.size()), params.alpha * p) &&
         le_rounded(static_cast<double>(s.c.size()), params.beta * params.f(p));
}

bool validate_edge_separation(const Support& g, const EdgeSeparation& s, const SeparabilityParams& params) {
  if (!is_consistent(g, s)) return false;
  const auto p = static_cast<double>(g.order());
  if (s.a.empty() || s.b.empty()) return false;
  return le_rounded(static_cast<double>(s.a.size()), params.alpha * p) &&
         le_rounded(static_cast<double>(s.b.size()), params.alpha * p) &&
         le_rounded(static_cast<double>(s.cut.size()), params.beta * params.f(p));
}

EdgeSeparation vertex_to_edge_separator(const Support& g, const VertexSeparation& s, int q) {
  const std::vector<VertexId> parts[] = {s.a, s.b, s.c};
  require_partition(g, parts);
  if (g.order() < 2) throw PreconditionError("vertex_to_edge_separator: needs at least two vertices");
  if (g.max_degree() > static_cast<std::size_t>(q))
    throw SeparatorError("vertex_to_edge_separator: max degree " + std::to_string(g.max_degree()) +
                         " exceeds q = " + std::to_string(q));

  EdgeSeparation out;
  out.a = s.a;
  out.b = s.b;
  std::vector<VertexId> movers = s.c;
  std::sort(movers.begin(), movers.end());
  for (VertexId v : movers) {
    if (out.a.size() <= out.b.size())
      out.a.push_back(v);
    else
      out.b.push_back(v);
  }
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.b.begin(), out.b.end());
  out.cut = crossing_edges(g, out.a, out.b);
  return out;
}

EdgeSeparation plane_separator(const Support& g, const GeometricLayout& layout, double alpha_target) {
  const std::size_t p = g.order();
  if (p < 2) throw PreconditionError("plane_separator: needs at least two vertices");
  const double cap = alpha_target * static_cast<double>(p);

  struct Candidate {
    std::size_t cut = std::numeric_limits<std::size_t>::max();
    std::size_t larger = 0;
    int axis = -1;
    double threshold = 0.0;
  };
  Candidate best;

  std::vector<double> values;
  for (int axis = 0; axis < layout.d; ++axis) {
    values.clear();
    for (VertexId v : g.vertices()) values.push_back(layout.at(v)[axis]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t t = 0; t + 1 < values.size(); ++t) {
      const double threshold = values[t];
      std::size_t low = 0;
      for (VertexId v : g.vertices()) low += layout.at(v)[axis] <= threshold ? 1 : 0;
      const std::size_t high = p - low;
      if (!le_rounded(static_cast<double>(low), cap) || !le_rounded(static_cast<double>(high), cap)) continue;
      std::size_t cut = 0;
      for (const Edge& e : g.edges())
        cut += (layout.at(e.u)[axis] <= threshold) != (layout.at(e.v)[axis] <= threshold) ? 1 : 0;
      const std::size_t larger = std::max(low, high);
      if (cut < best.cut || (cut == best.cut && larger < best.larger)) best = {cut, larger, axis, threshold};
    }
  }
  if (best.axis < 0) {
    std::ostringstream msg;
    msg << "plane_separator: no axis cut keeps both sides within " << alpha_target << " * " << p;
    throw NoBalancedCut(msg.str());
  }

  EdgeSeparation out;
  for (VertexId v : g.vertices()) (layout.at(v)[best.axis] <= best.threshold ? out.a : out.b).push_back(v);
  out.cut = crossing_edges(g, out.a, out.b);
  return out;
}

EdgeSeparation brute_force_min_cut(const Support& g, double alpha_target, std::size_t max_vertices) {
  const std::size_t p = g.order();
  if (p > max_vertices || p > 30)
    throw CapExceeded("brute_force_min_cut: " + std::to_string(p) + " vertices exceeds cap " +
                      std::to_string(max_vertices));
  if (p < 2) throw PreconditionError("brute_force_min_cut: needs at least two vertices");
  const double cap = alpha_target * static_cast<double>(p);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(g.index_of(e.u), g.index_of(e.v));

  // Index 0 is pinned to A, so each unordered bipartition is visited once.
  const std::uint32_t rest_bits = static_cast<std::uint32_t>(p - 1);
  const std::uint32_t full = (std::uint32_t{1} << rest_bits) - 1;
  std::size_t best_cut = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best_a;
  std::vector<std::size_t> current;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    const std::uint32_t a_mask = (mask << 1) | 1U;
    const auto a_size = static_cast<std::size_t>(std::popcount(a_mask));
    if (!le_rounded(static_cast<double>(a_size), cap) || !le_rounded(static_cast<double>(p - a_size), cap)) continue;
    std::size_t cut = 0;
    for (auto [u, v] : edges) cut += ((a_mask >> u) & 1U) != ((a_mask >> v) & 1U) ? 1 : 0;
    if (cut > best_cut) continue;
    current.clear();
    for (std::size_t i = 0; i < p; ++i)
      if ((a_mask >> i) & 1U) current.push_back(i);
    if (cut < best_cut || current < best_a) {
      best_cut = cut;
      best_a = current;
    }
  }
  if (best_a.empty()) {
    std::ostringstream msg;
    msg << "brute_force_min_cut: no bipartition keeps both sides within " << alpha_target << " * " << p;
    throw NoBalancedCut(msg.str());
  }

  EdgeSeparation out;
  std::vector<bool> in_a(p, false);
  for (std::size_t i : best_a) in_a[i] = true;
  for (std::size_t i = 0; i < p; ++i) (in_a[i] ? out.a : out.b).push_back(g.vertex_at(i));
  out.cut = crossing_edges(g, out.a, out.b);
  return out;
}

VertexSeparation brute_force_vertex_separator(const Support& g, double alpha, std::size_t max_vertices) {
  const std::size_t p = g.order();
  if (p > max_vertices || p > 30)
    throw CapExceeded("brute_force_vertex_separator: " + std::to_string(p) + " vertices exceeds cap " +
                      std::to_string(max_vertices));
  const double cap = alpha * static_cast<double>(p);

  std::vector<std::uint32_t> adj(p, 0);
  for (const Edge& e : g.edges()) {
    const auto u = g.index_of(e.u);
    const auto v = g.index_of(e.v);
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }

  for (std::size_t size = 0; size <= p; ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint32_t c_mask = 0;
      for (std::size_t i : pick) c_mask |= std::uint32_t{1} << i;

      // Components of g - C, in order of their smallest vertex.
      std::vector<std::uint32_t> components;
      std::uint32_t seen = c_mask;
      for (std::size_t s = 0; s < p; ++s) {
        if ((seen >> s) & 1U) continue;
        std::uint32_t comp = std::uint32_t{1} << s;
        std::uint32_t frontier = comp;
        while (frontier) {
          std::uint32_t next = 0;
          for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
          next &= ~c_mask & ~comp;
          comp |= next;
          frontier = next;
        }
        seen |= comp;
        components.push_back(comp);
      }

      std::uint32_t best_group = 0;
      std::size_t best_larger = std::numeric_limits<std::size_t>::max();
      const std::size_t groups = components.empty() ? 1 : (std::size_t{1} << (components.size() - 1));
      for (std::size_t grp = 0; grp < groups; ++grp) {
        std::uint32_t a_mask = 0;
        std::uint32_t b_mask = 0;
        for (std::size_t k = 0; k < components.size(); ++k) {
          const bool to_a = k == 0 || ((grp >> (k - 1)) & 1U);
          (to_a ? a_mask : b_mask) |= components[k];
        }
        const auto a_size = static_cast<std::size_t>(std::popcount(a_mask));
        const auto b_size = static_cast<std::size_t>(std::popcount(b_mask));
        if (!le_rounded(static_cast<double>(a_size), cap) || !le_rounded(static_cast<double>(b_size), cap)) continue;
        const std::size_t larger = std::max(a_size, b_size);
        if (larger < best_larger) {
          best_larger = larger;
          best_group = a_mask;
        }
      }

      if (best_larger != std::numeric_limits<std::size_t>::max()) {
        VertexSeparation out;
        for (std::size_t i = 0; i < p; ++i) {
          const VertexId v = g.vertex_at(i);
          if ((c_mask >> i) & 1U)
            out.c.push_back(v);
          else if ((best_group >> i) & 1U)
            out.a.push_back(v);
          else
            out.b.push_back(v);
        }
        return out;
      }

      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == p - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw SeparatorError("brute_force_vertex_separator: no separator exists");
}

}  // namespace sepcirc
