// sepcirc: command-line front end.
//
// Exit status: 0 on success, 1 when the run completed but found violations
// (invalid circuit, over-budget division, contract violation), 2 when it
// could not run (usage errors, unreadable or malformed input, caps).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sepcirc/bounds.hpp"
#include "sepcirc/enumeration.hpp"
#include "sepcirc/io.hpp"
#include "sepcirc/report.hpp"

using namespace sepcirc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::uint64_t budget = EnumerationLimits{}.max_states;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content << std::flush;
  } else {
    write_text_atomic(out_path, content);
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const auto& [name, values] : parse_sweep(std::string("v=") + text)) {
    (void)name;
    for (double v : values) {
      if (v != static_cast<int>(v)) throw PreconditionError(std::string(what) + " must be integers");
      out.push_back(static_cast<int>(v));
    }
  }
  return out;
}

// "2,4,8" or "2..16" or "2..16*2".
std::vector<int> parse_int_values(const std::string& text, const char* what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty())
      for (int v : parse_int_list(item, what)) out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw PreconditionError(std::string(what) + " list is empty");
  return out;
}

Basis parse_basis(const std::string& text) {
  if (text.empty() || text == "standard") return Basis::standard();
  std::vector<GateFn> fns;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    fns.push_back(gate_fn_from_string(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return Basis(std::move(fns));
}

std::string complexity_cell(const std::optional<int>& c) { return c ? std::to_string(*c) : "inf"; }

struct RuleFlags {
  bool strict = false;
  bool exclusive = false;
  std::string basis;

  void add(CLI::App* cmd) {
    cmd->add_flag("--strict-constraint1", strict, "Transit nodes also occupy the one-per-vertex slot");
    cmd->add_flag("--exclusive-sites", exclusive, "Inputs and constant gates also occupy the slot");
    cmd->add_option("--basis", basis, "Comma-separated gate functions (default C0,C1,NOT,AND,OR)");
  }
  ValidationOptions rules() const {
    ValidationOptions o;
    o.strict_constraint1 = strict;
    o.exclusive_sites = exclusive;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separator, r-division, multilayer circuit and bound workbench"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for randomized sweeps")->capture_default_str();
  app.add_option("--format", globals.format, "Tabular output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--budget", globals.budget, "Search state cap for enumerate/shannon")->capture_default_str();

  int status = kExitOk;

  // gen-grid
  auto* gen = app.add_subcommand("gen-grid", "Write a box grid graph with its integer layout")->fallthrough();
  int gen_d = 2;
  std::string gen_dims, gen_out;
  gen->add_option("--d", gen_d, "Dimension")->required();
  gen->add_option("--dims", gen_dims, "Points per axis, e.g. 4,4")->required();
  gen->add_option("--out", gen_out, "Output file (default stdout)");
  gen->callback([&] {
    const auto dims = parse_int_values(gen_dims, "--dims");
    const GridGraph grid = make_grid(gen_d, dims);
    emit(gen_out, graph_to_json(grid.support, &grid.layout));
  });

  // separate
  auto* sep = app.add_subcommand("separate", "Find an edge separator")->fallthrough();
  std::string sep_graph, sep_alg = "plane", sep_out;
  double sep_alpha = 2.0 / 3.0;
  sep->add_option("--graph", sep_graph, "Graph JSON file")->required();
  sep->add_option("--alg", sep_alg, "plane (needs a layout) or brute")
      ->check(CLI::IsMember({"plane", "brute"}))
      ->capture_default_str();
  sep->add_option("--alpha", sep_alpha, "Balance target: both sides <= alpha * p")->capture_default_str();
  sep->add_option("--out", sep_out, "Output file (default stdout)");
  sep->callback([&] {
    const GraphFile g = read_graph(sep_graph);
    EdgeSeparation s;
    if (sep_alg == "plane") {
      if (!g.layout) throw PreconditionError(sep_graph + ": the plane separator needs a layout");
      s = plane_separator(g.support, *g.layout, sep_alpha);
    } else {
      s = brute_force_min_cut(g.support, sep_alpha);
    }
    emit(sep_out, separation_to_json(s));
  });

  // rdivide
  auto* rdiv = app.add_subcommand("rdivide", "Recursive r-division with cut budget check")->fallthrough();
  std::string rdiv_graph, rdiv_alg = "plane", rdiv_out, rdiv_report, rdiv_lambda = "0.5";
  int rdiv_r = 4, rdiv_m = 2;
  double rdiv_alpha = 2.0 / 3.0, rdiv_beta = 1.0;
  rdiv->add_option("--graph", rdiv_graph, "Graph JSON file")->required();
  rdiv->add_option("--r", rdiv_r, "Maximum piece size")->required();
  rdiv->add_option("--alg", rdiv_alg, "plane or brute")->check(CLI::IsMember({"plane", "brute"}))->capture_default_str();
  rdiv->add_option("--alpha", rdiv_alpha, "Separator balance alpha")->capture_default_str();
  rdiv->add_option("--beta", rdiv_beta, "Separator constant beta")->capture_default_str();
  rdiv->add_option("--lambda", rdiv_lambda, "Separability exponent, or auto for (d-1)/d")->capture_default_str();
  rdiv->add_option("--m-min", rdiv_m, "Smallest graph order the contract applies to")->capture_default_str();
  rdiv->add_option("--out", rdiv_out, "Division JSON output file");
  rdiv->add_option("--report", rdiv_report, "Also print a report to stdout (csv)")->check(CLI::IsMember({"csv"}));
  rdiv->footer("Report columns: graph,p,r,t,total_cut,budget,within_budget,status");
  rdiv->callback([&] {
    const GraphFile g = read_graph(rdiv_graph);
    RdivisionReportOptions opts;
    opts.alg = rdiv_alg;
    opts.params = {rdiv_alpha, rdiv_beta, rdiv_m, SeparabilityFunction::power(0.5)};
    if (rdiv_lambda == "auto") {
      opts.lambda_auto = true;
    } else {
      opts.params.f = SeparabilityFunction::power(std::stod(rdiv_lambda));
    }
    opts.keep_divisions = true;
    const auto rows = rdivision_report({{rdiv_graph, g}}, {rdiv_r}, opts);
    if (!rdiv_out.empty() && rows.front().division) emit(rdiv_out, division_to_json(*rows.front().division));
    if (rdiv_report == "csv") emit("", rdivision_csv(rows).to_string());
    if (!rdivision_passed(rows)) {
      std::cerr << "rdivide: " << rows.front().status << "\n";
      status = kExitViolations;
    }
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Validate a multilayer circuit")->fallthrough();
  std::string ver_circuit, ver_graph, ver_embedding;
  std::optional<int> ver_k;
  RuleFlags ver_rules;
  ver->add_option("--circuit", ver_circuit, "Circuit JSON file")->required();
  ver->add_option("--graph", ver_graph, "Support graph JSON file")->required();
  ver->add_option("--embedding", ver_embedding, "Embedding JSON file")->required();
  ver->add_option("--k", ver_k, "Layer count (overrides the embedding file; default 1)");
  ver_rules.add(ver);
  ver->callback([&] {
    const BooleanCircuit circuit = read_circuit(ver_circuit);
    const GraphFile g = read_graph(ver_graph);
    const EmbeddingFile e = read_embedding(ver_embedding);
    const int k = ver_k.value_or(e.k.value_or(1));
    const Basis basis = parse_basis(ver_rules.basis);
    const MultilayerCircuit mc{circuit, g.support, e.embedding, k};
    const auto report = validate(mc, ver_rules.rules(), basis);
    std::cout << report.to_string();
    if (!report.ok()) {
      status = kExitViolations;
      return;
    }
    std::cout << "complexity: " << complexity(mc, ver_rules.rules(), basis) << "\n";
    if (circuit.n <= kDefaultTruthTableInputCap)
      std::cout << "table: " << truth_table(circuit, kDefaultTruthTableInputCap, basis).to_string() << "\n";
  });

  // enumerate / shannon
  auto search_options = [&](const RuleFlags& flags) {
    SearchOptions o;
    o.basis = parse_basis(flags.basis);
    o.rules = flags.rules();
    o.limits.max_states = globals.budget;
    o.warn = [](const std::string& msg) { std::cerr << msg << "\n"; };
    return o;
  };

  auto* en = app.add_subcommand("enumerate", "Functions computable within L support vertices")->fallthrough();
  std::string en_graph, en_out;
  int en_k = 1, en_n = 1, en_m = 1, en_L = 1;
  RuleFlags en_rules;
  en->add_option("--graph", en_graph, "Support graph JSON file")->required();
  en->add_option("--k", en_k, "Layer count")->capture_default_str();
  en->add_option("--n", en_n, "Inputs")->capture_default_str();
  en->add_option("--m", en_m, "Outputs (only 1 is supported)")->capture_default_str();
  en->add_option("--L", en_L, "Maximum number of support vertices")->capture_default_str();
  en->add_option("--out", en_out, "Output file (default stdout)");
  en_rules.add(en);
  en->footer("CSV columns: table,min_complexity,basis");
  en->callback([&] {
    const GraphFile g = read_graph(en_graph);
    const SearchOptions opts = search_options(en_rules);
    const CountResult result = enumerate_computable(g.support, en_k, en_n, en_m, en_L, opts);
    if (globals.format == "json") {
      json rows = json::array();
      for (const auto& [table, w] : result.witnesses)
        rows.push_back({{"table", table.to_string()}, {"min_complexity", w.complexity}});
      emit(en_out, json{{"basis", opts.basis.describe()}, {"count", result.count()}, {"rows", rows}}.dump(1) + "\n");
      return;
    }
    CsvTable table{{"table", "min_complexity", "basis"}, {}};
    for (const auto& [t, w] : result.witnesses)
      table.rows.push_back({t.to_string(), std::to_string(w.complexity), opts.basis.describe()});
    emit(en_out, table.to_string());
  });

  auto* sh = app.add_subcommand("shannon", "Minimal complexity of every n-input function")->fallthrough();
  std::string sh_graph, sh_out;
  int sh_k = 1, sh_n = 1;
  RuleFlags sh_rules;
  sh->add_option("--graph", sh_graph, "Support graph JSON file")->required();
  sh->add_option("--k", sh_k, "Layer count")->capture_default_str();
  sh->add_option("--n", sh_n, "Inputs")->capture_default_str();
  sh->add_option("--out", sh_out, "Output file (default stdout)");
  sh_rules.add(sh);
  sh->footer("CSV columns: table,min_complexity,basis (inf = not computable); the Shannon value goes to stderr");
  sh->callback([&] {
    const GraphFile g = read_graph(sh_graph);
    const SearchOptions opts = search_options(sh_rules);
    const ShannonResult result = shannon_value(g.support, sh_k, sh_n, opts);
    if (globals.format == "json") {
      json rows = json::array();
      for (const auto& [table, c] : result.complexity)
        rows.push_back({{"table", table.to_string()}, {"min_complexity", c ? json(*c) : json(nullptr)}});
      emit(sh_out, json{{"basis", opts.basis.describe()},
                        {"shannon", result.shannon ? json(*result.shannon) : json(nullptr)},
                        {"rows", rows}}
                           .dump(1) +
                       "\n");
    } else {
      CsvTable table{{"table", "min_complexity", "basis"}, {}};
      for (const auto& [t, c] : result.complexity)
        table.rows.push_back({t.to_string(), complexity_cell(c), opts.basis.describe()});
      emit(sh_out, table.to_string());
    }
    std::cerr << "shannon value: " << complexity_cell(result.shannon) << "\n";
  });

  // bounds
  auto* bo = app.add_subcommand("bounds", "Evaluate a bound formula over a parameter sweep")->fallthrough();
  std::string bo_formula, bo_sweep, bo_out, bo_division;
  int bo_div_k = 1, bo_div_io = 2;
  bo->add_option("--formula", bo_formula, "lambda|ddim|rect|corollary2|logcount|logN|leml5")->required();
  bo->add_option("--sweep", bo_sweep, "e.g. \"n=4..20,k=2..1024*2,d=2..3\"")->required();
  bo->add_option("--division", bo_division, "Division JSON whose pieces feed logN");
  bo->add_option("--division-k", bo_div_k, "Wires per cut edge when reading --division")->capture_default_str();
  bo->add_option("--io", bo_div_io, "Inputs plus outputs placed on the largest piece")->capture_default_str();
  bo->add_option("--out", bo_out, "Output file (default stdout)");
  bo->footer("CSV columns: the formula's parameters, value, formula");
  bo->callback([&] {
    PartitionTuples partition;
    if (!bo_division.empty()) {
      const json doc = json::parse(read_text_file(bo_division));
      RDivision div;
      div.r = doc.at("r").get<int>();
      div.pieces = doc.at("pieces").get<std::vector<std::vector<VertexId>>>();
      div.p_bar = doc.at("p_bar").get<std::vector<std::size_t>>();
      div.s_bar = doc.at("s_bar").get<std::vector<std::size_t>>();
      partition = tuples_from_division(div, bo_div_k, bo_div_io);
    }
    const CsvTable table = bounds_sweep(bo_formula, bo_sweep, partition);
    if (globals.format == "json") {
      json rows = json::array();
      for (const auto& row : table.rows) {
        json obj;
        for (std::size_t i = 0; i < row.size(); ++i) obj[table.header[i]] = row[i];
        rows.push_back(std::move(obj));
      }
      emit(bo_out, rows.dump(1) + "\n");
    } else {
      emit(bo_out, table.to_string());
    }
  });

  // report
  auto* rep = app.add_subcommand("report", "Batch r-division budget report")->fallthrough();
  std::vector<std::string> rep_graphs;
  std::string rep_grids, rep_r = "2,4,8,16", rep_alg = "plane", rep_lambda = "auto", rep_out;
  double rep_alpha = 2.0 / 3.0, rep_beta = 1.0;
  int rep_m = 2;
  rep->add_option("--graphs", rep_graphs, "Graph JSON files");
  rep->add_option("--grids", rep_grids, "Generated grids, e.g. \"2x2..8x8\"");
  rep->add_option("--r", rep_r, "Piece sizes, e.g. 2,4,8,16")->capture_default_str();
  rep->add_option("--alg", rep_alg, "plane or brute")->check(CLI::IsMember({"plane", "brute"}))->capture_default_str();
  rep->add_option("--alpha", rep_alpha, "Separator balance alpha")->capture_default_str();
  rep->add_option("--beta", rep_beta, "Separator constant beta")->capture_default_str();
  rep->add_option("--lambda", rep_lambda, "Separability exponent, or auto for (d-1)/d")->capture_default_str();
  rep->add_option("--m-min", rep_m, "Smallest graph order the contract applies to")->capture_default_str();
  rep->add_option("--out", rep_out, "Output file (default stdout)");
  rep->footer("CSV columns: graph,p,r,t,total_cut,budget,within_budget,status");
  rep->callback([&] {
    std::vector<NamedGraph> graphs;
    for (const auto& path : rep_graphs) graphs.push_back({path, read_graph(path)});
    for (const auto& dims : parse_grid_spec(rep_grids)) {
      std::string name;
      for (int v : dims) name += (name.empty() ? "" : "x") + std::to_string(v);
      GridGraph grid = make_grid(static_cast<int>(dims.size()), dims);
      graphs.push_back({name, {std::move(grid.support), std::move(grid.layout)}});
    }
    if (graphs.empty()) throw PreconditionError("report needs --graphs or --grids");
    RdivisionReportOptions opts;
    opts.alg = rep_alg;
    opts.params = {rep_alpha, rep_beta, rep_m, SeparabilityFunction::power(0.5)};
    if (rep_lambda == "auto") {
      opts.lambda_auto = true;
    } else {
      opts.params.f = SeparabilityFunction::power(std::stod(rep_lambda));
    }
    const auto rows = rdivision_report(graphs, parse_int_values(rep_r, "--r"), opts);
    emit(rep_out, rdivision_csv(rows).to_string());
    std::size_t failed = 0;
    for (const auto& row : rows) failed += (row.status == "ok" || row.status.starts_with("skipped")) ? 0 : 1;
    std::cerr << "report: " << rows.size() << " rows, " << failed << " failing\n";
    if (failed) status = kExitViolations;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid number: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}
