#include "sepcirc/circuit.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sepcirc {

int arity(GateFn fn) {
  switch (fn) {
    case GateFn::c0:
    case GateFn::c1:
      return 0;
    case GateFn::not_:
      return 1;
    default:
      return 2;
  }
}

bool is_constant(GateFn fn) { return fn == GateFn::c0 || fn == GateFn::c1; }

bool apply_gate(GateFn fn, bool a, bool b) {
  switch (fn) {
    case GateFn::c0:
      return false;
    case GateFn::c1:
      return true;
    case GateFn::not_:
      return !a;
    case GateFn::and_:
      return a && b;
    case GateFn::or_:
      return a || b;
    case GateFn::xor_:
      return a != b;
    case GateFn::nand_:
      return !(a && b);
    case GateFn::nor_:
      return !(a || b);
  }
  return false;
}

std::string_view to_string(GateFn fn) {
  switch (fn) {
    case GateFn::c0:
      return "C0";
    case GateFn::c1:
      return "C1";
    case GateFn::not_:
      return "NOT";
    case GateFn::and_:
      return "AND";
    case GateFn::or_:
      return "OR";
    case GateFn::xor_:
      return "XOR";
    case GateFn::nand_:
      return "NAND";
    case GateFn::nor_:
      return "NOR";
  }
  return "?";
}

GateFn gate_fn_from_string(std::string_view label) {
  static const std::pair<std::string_view, GateFn> table[] = {
      {"C0", GateFn::c0},    {"C1", GateFn::c1},   {"NOT", GateFn::not_},   {"AND", GateFn::and_},
      {"OR", GateFn::or_},   {"XOR", GateFn::xor_}, {"NAND", GateFn::nand_}, {"NOR", GateFn::nor_},
  };
  for (auto [name, fn] : table)
    if (name == label) return fn;
  throw MalformedCircuit("unknown gate function '" + std::string(label) + "'");
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::input:
      return "input";
    case NodeKind::gate:
      return "gate";
    case NodeKind::transit:
      return "transit";
  }
  return "?";
}

Basis::Basis(std::vector<GateFn> fns) : fns_(std::move(fns)) {
  std::sort(fns_.begin(), fns_.end());
  fns_.erase(std::unique(fns_.begin(), fns_.end()), fns_.end());
}

Basis Basis::standard() { return Basis({GateFn::c0, GateFn::c1, GateFn::not_, GateFn::and_, GateFn::or_}); }

bool Basis::contains(GateFn fn) const { return std::binary_search(fns_.begin(), fns_.end(), fn); }

std::string Basis::describe() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fns_.size(); ++i) {
    if (i) out += ",";
    out += to_string(fns_[i]);
  }
  return out + "}";
}

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MalformedCircuit(what); }

// Deterministic topological order (smallest ready id first).
std::vector<std::size_t> topological_order(const BooleanCircuit& c,
                                           const std::unordered_map<int, std::size_t>& index) {
  const std::size_t count = c.nodes.size();
  std::vector<std::vector<std::size_t>> out(count);
  std::vector<std::size_t> indegree(count, 0);
  for (const Wire& w : c.wires) {
    out[index.at(w.from)].push_back(index.at(w.to));
    ++indegree[index.at(w.to)];
  }
  std::priority_queue<std::pair<int, std::size_t>, std::vector<std::pair<int, std::size_t>>, std::greater<>> ready;
  for (std::size_t i = 0; i < count; ++i)
    if (indegree[i] == 0) ready.emplace(c.nodes[i].id, i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t i = ready.top().second;
    ready.pop();
    order.push_back(i);
    for (std::size_t j : out[i])
      if (--indegree[j] == 0) ready.emplace(c.nodes[j].id, j);
  }
  if (order.size() != count) malformed("circuit contains a cycle");
  return order;
}

}  // namespace

void check_well_formed(const BooleanCircuit& c, const Basis& basis) {
  if (c.n < 0) malformed("negative input count");
  if (c.m < 1) malformed("a circuit needs at least one output");

  std::unordered_map<int, std::size_t> index;
  int inputs = 0;
  std::set<int> output_indices;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& node = c.nodes[i];
    if (!index.emplace(node.id, i).second) malformed("duplicate node id " + std::to_string(node.id));
    switch (node.kind) {
      case NodeKind::input:
        ++inputs;
        if (node.fn) malformed("input node " + std::to_string(node.id) + " carries a gate function");
        break;
      case NodeKind::transit:
        if (node.fn) malformed("transit node " + std::to_string(node.id) + " carries a gate function");
        break;
      case NodeKind::gate:
        if (!node.fn) malformed("gate node " + std::to_string(node.id) + " has no function");
        if (!basis.contains(*node.fn))
          malformed("gate node " + std::to_string(node.id) + " uses " + std::string(to_string(*node.fn)) +
                    " outside basis " + basis.describe());
        break;
    }
    for (int o : node.outputs) {
      if (o < 0 || o >= c.m) malformed("output index " + std::to_string(o) + " out of range");
      if (!output_indices.insert(o).second) malformed("output index " + std::to_string(o) + " used twice");
    }
  }
  if (inputs != c.n)
    malformed("circuit declares n = " + std::to_string(c.n) + " but has " + std::to_string(inputs) + " input nodes");
  if (static_cast<int>(output_indices.size()) != c.m)
    malformed("circuit declares m = " + std::to_string(c.m) + " but flags " + std::to_string(output_indices.size()) +
              " outputs");

  std::vector<std::vector<int>> args(c.nodes.size());
  for (const Wire& w : c.wires) {
    if (!index.contains(w.from) || !index.contains(w.to))
      malformed("wire " + std::to_string(w.from) + "->" + std::to_string(w.to) + " references an unknown node");
    args[index.at(w.to)].push_back(w.arg);
  }
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& node = c.nodes[i];
    const int expected = node.kind == NodeKind::input ? 0 : node.kind == NodeKind::transit ? 1 : arity(*node.fn);
    auto& slots = args[i];
    std::sort(slots.begin(), slots.end());
    bool ok = static_cast<int>(slots.size()) == expected;
    for (int k = 0; ok && k < expected; ++k) ok = slots[k] == k + 1;
    if (!ok)
      malformed(std::string(to_string(node.kind)) + " node " + std::to_string(node.id) + " needs arguments 1.." +
                std::to_string(expected) + " exactly once, has " + std::to_string(slots.size()) + " wires");
  }
  topological_order(c, index);
}

CompiledCircuit::CompiledCircuit(const BooleanCircuit& c, const Basis& basis) : n_(c.n), m_(c.m) {
  check_well_formed(c, basis);
  std::unordered_map<int, std::size_t> index;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) index.emplace(c.nodes[i].id, i);
  const auto order = topological_order(c, index);
  std::vector<int> position(c.nodes.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<int>(p);

  std::vector<int> input_ids;
  for (const Node& node : c.nodes)
    if (node.kind == NodeKind::input) input_ids.push_back(node.id);
  std::sort(input_ids.begin(), input_ids.end());

  std::vector<std::array<int, 2>> args(c.nodes.size(), {-1, -1});
  for (const Wire& w : c.wires) args[index.at(w.to)][w.arg - 1] = position[index.at(w.from)];

  output_slot_.assign(m_, -1);
  steps_.reserve(order.size());
  for (std::size_t i : order) {
    const Node& node = c.nodes[i];
    Step step{node.kind, node.fn.value_or(GateFn::c0), args[i][0], args[i][1], -1};
    if (node.kind == NodeKind::input)
      step.input_index =
          static_cast<int>(std::lower_bound(input_ids.begin(), input_ids.end(), node.id) - input_ids.begin());
    for (int o : node.outputs) output_slot_[o] = position[i];
    steps_.push_back(step);
  }
}

std::vector<bool> CompiledCircuit::evaluate(const std::vector<bool>& inputs) const {
  if (static_cast<int>(inputs.size()) != n_)
    throw PreconditionError("evaluate: expected " + std::to_string(n_) + " input bits, got " +
                            std::to_string(inputs.size()));
  std::vector<bool> value(steps_.size());
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    switch (s.kind) {
      case NodeKind::input:
        value[i] = inputs[s.input_index];
        break;
      case NodeKind::transit:
        value[i] = value[s.arg0];
        break;
      case NodeKind::gate:
        value[i] = apply_gate(s.fn, s.arg0 >= 0 && value[s.arg0], s.arg1 >= 0 && value[s.arg1]);
        break;
    }
  }
  std::vector<bool> out(m_);
  for (int o = 0; o < m_; ++o) out[o] = value[output_slot_[o]];
  return out;
}

std::vector<bool> evaluate(const BooleanCircuit& c, const std::vector<bool>& inputs) {
  return CompiledCircuit(c).evaluate(inputs);
}

TruthTable::TruthTable(int n, int m) : n_(n), m_(m), bits_((std::size_t{1} << n) * m, 0) {
  if (n < 0 || m < 1) throw PreconditionError("truth table needs n >= 0 and m >= 1");
}

std::string TruthTable::to_string() const {
  std::string out;
  for (int o = 0; o < m_; ++o) {
    if (o) out += '|';
    for (std::size_t r = 0; r < rows(); ++r) out += at(r, o) ? '1' : '0';
  }
  return out;
}

TruthTable TruthTable::from_string(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto bar = text.find('|', start);
    parts.push_back(text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  const std::size_t rows = parts.front().size();
  int n = 0;
  while ((std::size_t{1} << n) < rows) ++n;
  if ((std::size_t{1} << n) != rows) throw PreconditionError("truth table row count is not a power of two");
  TruthTable table(n, static_cast<int>(parts.size()));
  for (std::size_t o = 0; o < parts.size(); ++o) {
    if (parts[o].size() != rows) throw PreconditionError("truth table outputs have different lengths");
    for (std::size_t r = 0; r < rows; ++r) {
      if (parts[o][r] != '0' && parts[o][r] != '1') throw PreconditionError("truth table must contain only 0/1");
      table.set(r, static_cast<int>(o), parts[o][r] == '1');
    }
  }
  return table;
}

TruthTable truth_table(const BooleanCircuit& c, int max_inputs, const Basis& basis) {
  if (c.n > max_inputs)
    throw CapExceeded("truth_table: n = " + std::to_string(c.n) + " exceeds cap " + std::to_string(max_inputs));
  const CompiledCircuit compiled(c, basis);
  TruthTable table(c.n, c.m);
  std::vector<bool> in(c.n);
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (int i = 0; i < c.n; ++i) in[i] = (r >> (c.n - 1 - i)) & 1U;
    const auto out = compiled.evaluate(in);
    for (int o = 0; o < c.m; ++o) table.set(r, o, out[o]);
  }
  return table;
}

}  // namespace sepcirc
