#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepcirc/bounds.hpp"
#include "sepcirc/io.hpp"
#include "sepcirc/rdivision.hpp"

namespace sepcirc {

/// Shortest round-trip-stable text for CSV cells ("%.12g").
std::string format_real(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// RFC 4180 quoting for cells containing ',', '"' or newlines.
  std::string to_string() const;
};

struct NamedGraph {
  std::string name;
  GraphFile graph;
};

struct RdivisionReportOptions {
  SeparabilityParams params;
  /// "plane" (needs a layout) or "brute".
  std::string alg = "plane";
  /// Use lambda = (d - 1) / d from the layout (1/2 when d = 1).
  bool lambda_auto = false;
  std::size_t brute_max_vertices = kDefaultBruteForceCap;
  /// Keep each computed division in RdivisionRow::division.
  bool keep_divisions = false;
};

struct RdivisionRow {
  std::string graph;
  std::size_t p = 0;
  int r = 0;
  std::size_t t = 0;
  std::size_t total_cut = 0;
  double budget = 0.0;
  bool within_budget = false;
  /// "ok", "over-budget", "skipped: ..." or "contract-violation: ...".
  std::string status;
  std::optional<RDivision> division;
};

/// One row per (graph, r). The budget is delta_cut * p * r^lambda / r.
std::vector<RdivisionRow> rdivision_report(const std::vector<NamedGraph>& graphs, const std::vector<int>& rs,
                                           const RdivisionReportOptions& options);
CsvTable rdivision_csv(const std::vector<RdivisionRow>& rows);
/// True when every row is ok or skipped.
bool rdivision_passed(const std::vector<RdivisionRow>& rows);

/// Grid dimension lists from "AxB" items separated by commas, where an item
/// "AxB..CxD" expands to every dims vector between the two corners
/// (component-wise, last axis fastest).
std::vector<std::vector<int>> parse_grid_spec(std::string_view text);

/// Values of one swept parameter: "v", "a..b" (step 1), "a..b:s" (step s)
/// or "a..b*f" (geometric, factor f > 1).
std::vector<double> parse_range(std::string_view text);

/// "name=range,name=range,..." in order of appearance.
std::vector<std::pair<std::string, std::vector<double>>> parse_sweep(std::string_view text);

/// Formula ids: lambda, ddim, rect, corollary2, logcount, logN, leml5.
/// Unswept parameters take the defaults of BoundQuery (and b = 1, M = 0,
/// d_exp = 2 for leml5). logN uses `partition` for its piece tuples.
CsvTable bounds_sweep(std::string_view formula, std::string_view sweep, const PartitionTuples& partition = {});

/// Piece tuples of a division for log_N_rhs: p = piece sizes, s = k times the
/// boundary edge counts and all n + m inputs and outputs on the largest piece.
PartitionTuples tuples_from_division(const RDivision& div, int k, int io);

}  // namespace sepcirc
