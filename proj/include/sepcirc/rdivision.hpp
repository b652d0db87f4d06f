#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sepcirc/separators.hpp"

namespace sepcirc {

/// Cut budget of a recursive partition. delta_cut bounds the number of
/// inter-piece edges; delta_inc = 2 * delta_cut bounds the sum of per-piece
/// boundary counts, since every cut edge touches two pieces.
struct CutBudget {
  double delta_cut = 0.0;
  double delta_inc = 0.0;
};

/// beta / (alpha^lambda * (1 - alpha^(1 - lambda))) for f = p^lambda.
CutBudget delta_constant(const SeparabilityParams& params);

/// delta * p * r^lambda / r.
double division_budget(double delta, double p, double r, double lambda);

/// Splits a subgraph into two parts; expected to honour the edge-separator
/// contract of the SeparabilityParams passed to r_partition.
using Splitter = std::function<EdgeSeparation(const Support&)>;

Splitter make_plane_splitter(GeometricLayout layout, double alpha_target = 2.0 / 3.0);
Splitter make_brute_splitter(double alpha_target = 2.0 / 3.0, std::size_t max_vertices = kDefaultBruteForceCap);

struct RDivision {
  int r = 0;
  /// Pieces ordered by their smallest vertex id; each piece sorted.
  std::vector<std::vector<VertexId>> pieces;
  /// Edges whose endpoints lie in different pieces, sorted.
  std::vector<Edge> cut_edges;
  std::vector<std::size_t> p_bar;
  std::vector<std::size_t> s_bar;

  std::size_t t() const { return pieces.size(); }
};

class SplitterContractViolation : public SeparatorError {
 public:
  SplitterContractViolation(std::vector<VertexId> subgraph, const std::string& reason)
      : SeparatorError("splitter broke the separator contract on a " + std::to_string(subgraph.size()) +
                       "-vertex subgraph: " + reason),
        subgraph(std::move(subgraph)) {}
  std::vector<VertexId> subgraph;
};

class SplitterFailure : public SeparatorError {
 public:
  using SeparatorError::SeparatorError;
};

/// Recursively splits g until every piece has at most r vertices, validating
/// each splitter result against params (power-law f only).
RDivision r_partition(const Support& g, int r, const Splitter& splitter, const SeparabilityParams& params);

/// Rebuilds cut_edges, p_bar and s_bar of a division from its pieces.
RDivision division_from_pieces(const Support& g, int r, std::vector<std::vector<VertexId>> pieces);

/// Membership in K(M, S): every entry in [1, M] and the sum at most S. The
/// empty tuple is a member.
bool k_membership(std::span<const double> x, double m_cap, double s_cap);

/// p_bar in K(r, p) and the nonzero entries of s_bar in
/// K(q r, delta_inc * p * r^lambda / r).
bool check_division_tuples(const RDivision& div, int q, const CutBudget& budget, std::size_t p, double lambda);

/// sum x_i log x_i <= S log M for x in K(M, S). Throws when x is not a member.
bool xlogx_bound_check(std::span<const double> x, double m_cap, double s_cap);

/// (x+y) log(x+y) <= x log x + y log y + x + y for x, y >= 0.
bool logsum_check(double x, double y);

}  // namespace sepcirc
