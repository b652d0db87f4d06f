#pragma once

#include <map>
#include <string>
#include <vector>

#include "sepcirc/circuit.hpp"
#include "sepcirc/graph.hpp"

namespace sepcirc {

/// Circuit node id -> support vertex id.
struct Embedding {
  std::map<int, VertexId> map;
};

struct MultilayerCircuit {
  BooleanCircuit circuit;
  Support support;
  Embedding embedding;
  int k = 1;
};

/// Which checks validate() runs and how Constraint 1 counts occupants.
///
/// By default a support vertex may host at most one gate with a non-constant
/// function; inputs, constant gates and transit nodes are free. With
/// strict_constraint1, transit nodes also take the slot. With exclusive_sites,
/// inputs and constant gates take it as well.
struct ValidationOptions {
  bool homomorphism = true;
  bool constraint1 = true;
  bool constraint2 = true;
  bool strict_constraint1 = false;
  bool exclusive_sites = false;

  /// Whether `node` competes for the one-per-vertex slot under these options.
  bool occupies_slot(const Node& node) const;
};

enum class ViolationKind { malformed, unmapped_node, unknown_vertex, homomorphism, constraint1, constraint2 };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::size_t count(ViolationKind kind) const;
  std::string to_string() const;
};

/// Collects every violation instead of stopping at the first one.
ValidationReport validate(const MultilayerCircuit& mc, const ValidationOptions& options = {},
                          const Basis& basis = Basis::standard());

class InvalidMultilayerCircuit : public Error {
 public:
  using Error::Error;
};

/// Number of distinct support vertices in the image of the embedding. Throws
/// InvalidMultilayerCircuit when validation fails.
std::size_t complexity(const MultilayerCircuit& mc, const ValidationOptions& options = {},
                       const Basis& basis = Basis::standard());

}  // namespace sepcirc
