#include "sepcirc/rdivision.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace sepcirc {

CutBudget delta_constant(const SeparabilityParams& params) {
  params.validate();
  if (params.f.kind != SeparabilityFunction::Kind::power)
    throw PreconditionError("delta_constant: needs a power-law separability function");
  const double alpha = params.alpha;
  const double lambda = params.f.lambda;
  const double delta = params.beta / (std::pow(alpha, lambda) * (1.0 - std::pow(alpha, 1.0 - lambda)));
  return {delta, 2.0 * delta};
}

double division_budget(double delta, double p, double r, double lambda) {
  return delta * p * std::pow(r, lambda) / r;
}

Splitter make_plane_splitter(GeometricLayout layout, double alpha_target) {
  return [layout = std::move(layout), alpha_target](const Support& g) {
    return plane_separator(g, layout, alpha_target);
  };
}

Splitter make_brute_splitter(double alpha_target, std::size_t max_vertices) {
  return [alpha_target, max_vertices](const Support& g) { return brute_force_min_cut(g, alpha_target, max_vertices); };
}

RDivision division_from_pieces(const Support& g, int r, std::vector<std::vector<VertexId>> pieces) {
  for (auto& piece : pieces) std::sort(piece.begin(), piece.end());
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  require_partition(g, pieces);

  std::unordered_map<VertexId, std::size_t> owner;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (VertexId v : pieces[i]) owner.emplace(v, i);

  RDivision div;
  div.r = r;
  div.p_bar.reserve(pieces.size());
  for (const auto& piece : pieces) div.p_bar.push_back(piece.size());
  div.s_bar.assign(pieces.size(), 0);
  for (const Edge& e : g.edges()) {
    const std::size_t a = owner.at(e.u);
    const std::size_t b = owner.at(e.v);
    if (a == b) continue;
    div.cut_edges.push_back(e);
    ++div.s_bar[a];
    ++div.s_bar[b];
  }
  div.pieces = std::move(pieces);
  return div;
}

namespace {

std::string describe_violation(const Support& sub, const EdgeSeparation& sep, const SeparabilityParams& params) {
  const auto p = static_cast<double>(sub.order());
  std::ostringstream msg;
  if (!is_consistent(sub, sep)) {
    msg << "parts do not partition the subgraph or the cut is not the A-B edge set";
  } else if (sep.a.empty() || sep.b.empty()) {
    msg << "one side is empty";
  } else if (!le_rounded(static_cast<double>(std::max(sep.a.size(), sep.b.size())), params.alpha * p)) {
    msg << "side of " << std::max(sep.a.size(), sep.b.size()) << " vertices exceeds alpha*p = " << params.alpha * p;
  } else {
    msg << "cut of " << sep.cut.size() << " edges exceeds beta*f(p) = " << params.beta * params.f(p);
  }
  return msg.str();
}

void split_recursively(const Support& g, std::vector<VertexId> part, int r, const Splitter& splitter,
                       const SeparabilityParams& params, std::vector<std::vector<VertexId>>& pieces) {
  if (part.size() <= static_cast<std::size_t>(r)) {
    pieces.push_back(std::move(part));
    return;
  }
  const Support sub = g.induced(part);
  EdgeSeparation sep;
  try {
    sep = splitter(sub);
  } catch (const SplitterContractViolation&) {
    throw;
  } catch (const std::exception& err) {
    throw SplitterFailure("splitter failed on a " + std::to_string(sub.order()) + "-vertex subgraph: " + err.what());
  }
  if (!validate_edge_separation(sub, sep, params))
    throw SplitterContractViolation(std::vector<VertexId>(sub.vertices().begin(), sub.vertices().end()),
                                    describe_violation(sub, sep, params));
  // Larger side first; the final piece order is fixed afterwards anyway.
  if (sep.a.size() >= sep.b.size()) {
    split_recursively(g, std::move(sep.a), r, splitter, params, pieces);
    split_recursively(g, std::move(sep.b), r, splitter, params, pieces);
  } else {
    split_recursively(g, std::move(sep.b), r, splitter, params, pieces);
    split_recursively(g, std::move(sep.a), r, splitter, params, pieces);
  }
}

}  // namespace

RDivision r_partition(const Support& g, int r, const Splitter& splitter, const SeparabilityParams& params) {
  params.validate();
  if (r < 1 || r < params.m_min - 1)
    throw PreconditionError("r_partition: r must be >= max(1, m - 1), got " + std::to_string(r));
  std::vector<std::vector<VertexId>> pieces;
  split_recursively(g, std::vector<VertexId>(g.vertices().begin(), g.vertices().end()), r, splitter, params, pieces);
  return division_from_pieces(g, r, std::move(pieces));
}

bool k_membership(std::span<const double> x, double m_cap, double s_cap) {
  double sum = 0.0;
  for (double v : x) {
    if (!(v >= 1.0 && v <= m_cap)) return false;
    sum += v;
  }
  return le_rounded(sum, s_cap);
}

bool check_division_tuples(const RDivision& div, int q, const CutBudget& budget, std::size_t p, double lambda) {
  std::vector<double> sizes(div.p_bar.begin(), div.p_bar.end());
  if (!k_membership(sizes, div.r, static_cast<double>(p))) return false;
  std::vector<double> boundary;
  for (std::size_t s : div.s_bar)
    if (s > 0) boundary.push_back(static_cast<double>(s));
  const double s_cap = division_budget(budget.delta_inc, static_cast<double>(p), div.r, lambda);
  return k_membership(boundary, static_cast<double>(q) * div.r, s_cap);
}

bool xlogx_bound_check(std::span<const double> x, double m_cap, double s_cap) {
  if (!k_membership(x, m_cap, s_cap)) throw PreconditionError("xlogx_bound_check: tuple is not in K(M, S)");
  double lhs = 0.0;
  for (double v : x) lhs += xlog2x(v);
  return le_rounded(lhs, s_cap * std::log2(m_cap));
}

bool logsum_check(double x, double y) {
  if (!(x >= 0.0 && y >= 0.0)) throw PreconditionError("logsum_check: arguments must be nonnegative");
  return le_rounded(xlog2x(x + y), xlog2x(x) + xlog2x(y) + x + y);
}

}  // namespace sepcirc
