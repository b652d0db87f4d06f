#include "sepcirc/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace sepcirc {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string CsvTable::to_string() const {
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      const std::string& cell = cells[i];
      if (cell.find_first_of(",\"\n\r") == std::string::npos) {
        out += cell;
        continue;
      }
      out += '"';
      for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    }
    out += '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out;
}

std::vector<RdivisionRow> rdivision_report(const std::vector<NamedGraph>& graphs, const std::vector<int>& rs,
                                           const RdivisionReportOptions& options) {
  options.params.validate();
  if (options.alg != "plane" && options.alg != "brute")
    throw PreconditionError("unknown splitter \"" + options.alg + "\" (expected plane or brute)");
  std::vector<RdivisionRow> rows;
  for (const NamedGraph& named : graphs) {
    const Support& g = named.graph.support;
    SeparabilityParams params = options.params;
    if (options.lambda_auto) {
      const int d = named.graph.layout ? named.graph.layout->d : 1;
      params.f = SeparabilityFunction::power(d >= 2 ? (d - 1.0) / d : 0.5);
    }
    const CutBudget budget = delta_constant(params);
    for (int r : rs) {
      RdivisionRow row;
      row.graph = named.name;
      row.p = g.order();
      row.r = r;
      row.budget = division_budget(budget.delta_cut, static_cast<double>(g.order()), r, params.f.lambda);
      if (r < std::max(1, params.m_min - 1)) {
        row.status = "skipped: r < max(1, m - 1)";
        rows.push_back(std::move(row));
        continue;
      }
      try {
        Splitter splitter;
        if (options.alg == "plane") {
          if (!named.graph.layout) throw PreconditionError("the plane splitter needs a layout");
          splitter = make_plane_splitter(*named.graph.layout, params.alpha);
        } else {
          splitter = make_brute_splitter(params.alpha, options.brute_max_vertices);
        }
        const RDivision div = r_partition(g, r, splitter, params);
        row.t = div.t();
        row.total_cut = div.cut_edges.size();
        row.within_budget = static_cast<double>(row.total_cut) <= row.budget;
        row.status = row.within_budget ? "ok" : "over-budget";
        if (options.keep_divisions) row.division = div;
      } catch (const SplitterContractViolation& err) {
        row.status = std::string("contract-violation: ") + err.what();
      } catch (const Error& err) {
        row.status = std::string("error: ") + err.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

CsvTable rdivision_csv(const std::vector<RdivisionRow>& rows) {
  CsvTable table{{"graph", "p", "r", "t", "total_cut", "budget", "within_budget", "status"}, {}};
  for (const auto& row : rows)
    table.rows.push_back({row.graph, std::to_string(row.p), std::to_string(row.r), std::to_string(row.t),
                          std::to_string(row.total_cut), format_real(row.budget), row.within_budget ? "true" : "false",
                          row.status});
  return table;
}

bool rdivision_passed(const std::vector<RdivisionRow>& rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RdivisionRow& row) { return row.status == "ok" || row.status.starts_with("skipped"); });
}

namespace {

double parse_number(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw PreconditionError("bad number \"" + std::string(text) + "\" in \"" + std::string(context) + "\"");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

constexpr std::size_t kMaxRangeValues = 1'000'000;

}  // namespace

std::vector<double> parse_range(std::string_view text) {
  text = trim(text);
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return {parse_number(text, text)};
  const double lo = parse_number(trim(text.substr(0, dots)), text);
  std::string_view rest = text.substr(dots + 2);
  double step = 1.0;
  bool geometric = false;
  if (const auto mark = rest.find_first_of(":*"); mark != std::string_view::npos) {
    geometric = rest[mark] == '*';
    step = parse_number(trim(rest.substr(mark + 1)), text);
    rest = rest.substr(0, mark);
  }
  const double hi = parse_number(trim(rest), text);
  if (hi < lo) throw PreconditionError("empty range \"" + std::string(text) + "\"");
  if (geometric ? !(step > 1.0 && lo > 0.0) : !(step > 0.0))
    throw PreconditionError("range \"" + std::string(text) + "\" needs a positive step (or factor > 1 from a positive start)");
  std::vector<double> values;
  const double slack = 1e-9 * std::max(1.0, std::abs(hi));
  for (std::size_t i = 0;; ++i) {
    const double v = geometric ? lo * std::pow(step, static_cast<double>(i)) : lo + step * static_cast<double>(i);
    if (v > hi + slack) break;
    values.push_back(v);
    if (values.size() > kMaxRangeValues) throw CapExceeded("range \"" + std::string(text) + "\" has too many values");
  }
  return values;
}

std::vector<std::pair<std::string, std::vector<double>>> parse_sweep(std::string_view text) {
  std::vector<std::pair<std::string, std::vector<double>>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw PreconditionError("sweep item \"" + std::string(item) + "\" lacks '='");
      std::string name(trim(item.substr(0, eq)));
      for (const auto& [existing, values] : out)
        if (existing == name) throw PreconditionError("parameter \"" + name + "\" swept twice");
      out.emplace_back(std::move(name), parse_range(item.substr(eq + 1)));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

std::vector<int> parse_dims(std::string_view text, std::string_view context) {
  std::vector<int> dims;
  std::size_t start = 0;
  while (true) {
    const auto x = text.find('x', start);
    const auto part = trim(text.substr(start, x == std::string_view::npos ? text.npos : x - start));
    const double v = parse_number(part, context);
    if (v < 1 || v != std::floor(v)) throw PreconditionError("bad grid size in \"" + std::string(context) + "\"");
    dims.push_back(static_cast<int>(v));
    if (x == std::string_view::npos) return dims;
    start = x + 1;
  }
}

}  // namespace

std::vector<std::vector<int>> parse_grid_spec(std::string_view text) {
  std::vector<std::vector<int>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    if (!item.empty()) {
      const auto dots = item.find("..");
      const auto lo = parse_dims(item.substr(0, dots), item);
      const auto hi = dots == std::string_view::npos ? lo : parse_dims(item.substr(dots + 2), item);
      if (lo.size() != hi.size()) throw PreconditionError("grid range \"" + std::string(item) + "\" mixes dimensions");
      for (std::size_t i = 0; i < lo.size(); ++i)
        if (hi[i] < lo[i]) throw PreconditionError("empty grid range \"" + std::string(item) + "\"");
      std::vector<int> dims = lo;
      while (true) {
        out.push_back(dims);
        std::size_t d = dims.size();
        while (d > 0 && dims[d - 1] == hi[d - 1]) {
          dims[d - 1] = lo[d - 1];
          --d;
        }
        if (d == 0) break;
        ++dims[d - 1];
      }
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

int as_int(double v, const std::string& name) {
  if (v != std::floor(v) || std::abs(v) > 1e9) throw PreconditionError("parameter " + name + " must be an integer");
  return static_cast<int>(v);
}

struct FormulaSpec {
  std::vector<std::string> params;
  std::function<double(const std::map<std::string, double>&)> eval;
};

FormulaSpec formula_spec(std::string_view formula, const PartitionTuples& partition) {
  using P = const std::map<std::string, double>&;
  if (formula == "lambda")
    return {{"n", "k", "lambda"}, [](P v) { return lower_bound_lambda(as_int(v.at("n"), "n"), v.at("k"), v.at("lambda")); }};
  if (formula == "ddim")
    return {{"n", "k", "d"}, [](P v) { return lower_bound_ddim(as_int(v.at("n"), "n"), v.at("k"), as_int(v.at("d"), "d")); }};
  if (formula == "rect")
    return {{"n", "k", "d"}, [](P v) { return asymptotic_rect(as_int(v.at("n"), "n"), v.at("k"), as_int(v.at("d"), "d")); }};
  if (formula == "corollary2")
    return {{"n", "k", "lambda0"},
            [](P v) { return corollary2_bound(as_int(v.at("n"), "n"), v.at("k"), v.at("lambda0")); }};
  if (formula == "logcount")
    return {{"n", "m", "L", "c"}, [](P v) {
              return log_count_bound(as_int(v.at("n"), "n"), as_int(v.at("m"), "m"), as_int(v.at("L"), "L"), v.at("c"));
            }};
  if (formula == "logN")
    return {{"n", "m", "L", "k", "lambda", "theta", "delta", "c"}, [partition](P v) {
              return log_N_rhs(as_int(v.at("n"), "n"), as_int(v.at("m"), "m"), as_int(v.at("L"), "L"), v.at("k"),
                               v.at("lambda"), v.at("theta"), v.at("delta"), partition, v.at("c"))
                  .total;
            }};
  if (formula == "leml5")
    return {{"L", "M", "k", "d_exp", "b", "c", "q"}, [](P v) {
              return leml5_rhs(v.at("L"), v.at("M"), v.at("k"), v.at("d_exp"), v.at("b"), v.at("c"), v.at("q")).total;
            }};
  throw PreconditionError("unknown formula \"" + std::string(formula) +
                          "\" (expected lambda, ddim, rect, corollary2, logcount, logN or leml5)");
}

}  // namespace

CsvTable bounds_sweep(std::string_view formula, std::string_view sweep, const PartitionTuples& partition) {
  const FormulaSpec spec = formula_spec(formula, partition);
  const BoundQuery q;
  std::map<std::string, double> defaults{
      {"n", q.n},          {"m", q.m},         {"L", q.L},         {"k", q.k},     {"lambda", q.lambda},
      {"lambda0", q.lambda0}, {"d", q.d},      {"q", q.q},         {"theta", q.theta}, {"delta", q.delta},
      {"c", q.c},          {"M", 0.0},         {"d_exp", 2.0},     {"b", 1.0}};
  auto swept = parse_sweep(sweep);
  for (const auto& [name, values] : swept)
    if (std::find(spec.params.begin(), spec.params.end(), name) == spec.params.end())
      throw PreconditionError("formula " + std::string(formula) + " has no parameter \"" + name + "\"");
  // Unswept parameters contribute their default as a one-value axis.
  for (const auto& name : spec.params)
    if (std::none_of(swept.begin(), swept.end(), [&](const auto& s) { return s.first == name; }))
      swept.emplace_back(name, std::vector<double>{defaults.at(name)});

  CsvTable table;
  table.header = spec.params;
  table.header.push_back("value");
  table.header.push_back("formula");
  std::vector<std::size_t> pick(swept.size(), 0);
  while (true) {
    std::map<std::string, double> values;
    for (std::size_t i = 0; i < swept.size(); ++i) values[swept[i].first] = swept[i].second[pick[i]];
    std::vector<std::string> row;
    for (const auto& name : spec.params) row.push_back(format_real(values.at(name)));
    row.push_back(format_real(spec.eval(values)));
    row.emplace_back(formula);
    table.rows.push_back(std::move(row));
    // The first swept parameter varies slowest.
    std::size_t d = swept.size();
    while (d > 0) {
      --d;
      if (++pick[d] < swept[d].second.size()) break;
      pick[d] = 0;
      if (d == 0) return table;
    }
    if (swept.empty()) return table;
  }
}

PartitionTuples tuples_from_division(const RDivision& div, int k, int io) {
  PartitionTuples out;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < div.t(); ++i) {
    out.p.push_back(static_cast<double>(div.p_bar[i]));
    out.s.push_back(static_cast<double>(k) * static_cast<double>(div.s_bar[i]));
    out.u.push_back(0.0);
    if (div.p_bar[i] > div.p_bar[largest]) largest = i;
  }
  if (!out.u.empty()) out.u[largest] = io;
  return out;
}

}  // namespace sepcirc
