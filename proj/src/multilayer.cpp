#include "sepcirc/multilayer.hpp"

#include <set>
#include <sstream>

namespace sepcirc {

bool ValidationOptions::occupies_slot(const Node& node) const {
  switch (node.kind) {
    case NodeKind::gate:
      return !(node.fn && is_constant(*node.fn)) || exclusive_sites;
    case NodeKind::transit:
      return strict_constraint1;
    case NodeKind::input:
      return exclusive_sites;
  }
  return false;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::malformed:
      return "malformed";
    case ViolationKind::unmapped_node:
      return "unmapped-node";
    case ViolationKind::unknown_vertex:
      return "unknown-vertex";
    case ViolationKind::homomorphism:
      return "homomorphism";
    case ViolationKind::constraint1:
      return "constraint-1";
    case ViolationKind::constraint2:
      return "constraint-2";
  }
  return "?";
}

std::size_t ValidationReport::count(ViolationKind kind) const {
  std::size_t total = 0;
  for (const auto& v : violations) total += v.kind == kind ? 1 : 0;
  return total;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid\n";
  std::ostringstream out;
  for (const auto& v : violations) out << sepcirc::to_string(v.kind) << ": " << v.detail << '\n';
  return out.str();
}

ValidationReport validate(const MultilayerCircuit& mc, const ValidationOptions& options, const Basis& basis) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string detail) { report.violations.push_back({kind, std::move(detail)}); };

  try {
    check_well_formed(mc.circuit, basis);
  } catch (const MalformedCircuit& err) {
    add(ViolationKind::malformed, err.what());
  }
  if (mc.k < 1) add(ViolationKind::malformed, "layer count k must be >= 1, got " + std::to_string(mc.k));

  std::map<int, const Node*> nodes;
  for (const Node& node : mc.circuit.nodes) nodes.emplace(node.id, &node);

  // Only nodes with a valid image take part in the remaining checks.
  std::map<int, VertexId> image;
  for (const Node& node : mc.circuit.nodes) {
    auto it = mc.embedding.map.find(node.id);
    if (it == mc.embedding.map.end()) {
      add(ViolationKind::unmapped_node, "node " + std::to_string(node.id) + " has no image");
    } else if (!mc.support.contains(it->second)) {
      add(ViolationKind::unknown_vertex,
          "node " + std::to_string(node.id) + " maps to unknown vertex " + std::to_string(it->second));
    } else {
      image.emplace(node.id, it->second);
    }
  }
  for (const auto& [id, v] : mc.embedding.map)
    if (!nodes.contains(id)) add(ViolationKind::unmapped_node, "embedding names unknown node " + std::to_string(id));

  std::map<Edge, std::size_t> load;
  for (const Wire& w : mc.circuit.wires) {
    auto from = image.find(w.from);
    auto to = image.find(w.to);
    if (from == image.end() || to == image.end()) continue;
    if (!mc.support.has_edge(from->second, to->second)) {
      if (options.homomorphism) {
        std::ostringstream msg;
        msg << "wire " << w.from << "->" << w.to << " maps to {" << from->second << "," << to->second
            << "}, which is not a support edge";
        add(ViolationKind::homomorphism, msg.str());
      }
      continue;
    }
    ++load[make_edge(from->second, to->second)];
  }

  if (options.constraint1) {
    std::map<VertexId, std::vector<int>> occupants;
    for (const Node& node : mc.circuit.nodes) {
      auto it = image.find(node.id);
      if (it != image.end() && options.occupies_slot(node)) occupants[it->second].push_back(node.id);
    }
    for (const auto& [v, ids] : occupants) {
      if (ids.size() <= 1) continue;
      std::ostringstream msg;
      msg << "vertex " << v << " hosts " << ids.size() << " slot-occupying nodes (";
      for (std::size_t i = 0; i < ids.size(); ++i) msg << (i ? "," : "") << ids[i];
      msg << ")";
      add(ViolationKind::constraint1, msg.str());
    }
  }

  if (options.constraint2) {
    for (const auto& [edge, wires] : load) {
      const std::size_t capacity = static_cast<std::size_t>(std::max(mc.k, 0)) * mc.support.multiplicity(edge.u, edge.v);
      if (wires <= capacity) continue;
      std::ostringstream msg;
      msg << "edge {" << edge.u << "," << edge.v << "} carries " << wires << " wires, capacity " << capacity;
      add(ViolationKind::constraint2, msg.str());
    }
  }
  return report;
}

std::size_t complexity(const MultilayerCircuit& mc, const ValidationOptions& options, const Basis& basis) {
  const auto report = validate(mc, options, basis);
  if (!report.ok()) throw InvalidMultilayerCircuit("complexity of an invalid multilayer circuit:\n" + report.to_string());
  std::set<VertexId> used;
  for (const Node& node : mc.circuit.nodes) used.insert(mc.embedding.map.at(node.id));
  return used.size();
}

}  // namespace sepcirc
