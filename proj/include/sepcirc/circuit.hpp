#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepcirc/common.hpp"

namespace sepcirc {

enum class GateFn { c0, c1, not_, and_, or_, xor_, nand_, nor_ };

int arity(GateFn fn);
bool is_constant(GateFn fn);
bool apply_gate(GateFn fn, bool a, bool b);
std::string_view to_string(GateFn fn);
/// Accepts the labels used in circuit files: C0, C1, NOT, AND, OR, XOR, NAND, NOR.
GateFn gate_fn_from_string(std::string_view label);

/// Set of gate functions a circuit may use.
class Basis {
 public:
  Basis() = default;
  explicit Basis(std::vector<GateFn> fns);

  /// {C0, C1, NOT, AND, OR}.
  static Basis standard();

  bool contains(GateFn fn) const;
  const std::vector<GateFn>& functions() const { return fns_; }
  std::string describe() const;

 private:
  std::vector<GateFn> fns_;
};

enum class NodeKind { input, gate, transit };

std::string_view to_string(NodeKind kind);

struct Node {
  int id = 0;
  NodeKind kind = NodeKind::gate;
  std::optional<GateFn> fn;
  /// Output indices carried by this node (usually zero or one).
  std::vector<int> outputs;
};

/// Directed wire; `arg` is the 1-based argument slot at the target node.
struct Wire {
  int from = 0;
  int to = 0;
  int arg = 1;
};

/// Labeled DAG over a basis with n inputs and m outputs. Input variable i is
/// the i-th input node in ascending id order.
struct BooleanCircuit {
  int n = 0;
  int m = 0;
  std::vector<Node> nodes;
  std::vector<Wire> wires;
};

class MalformedCircuit : public Error {
 public:
  using Error::Error;
};

/// Throws MalformedCircuit describing the first broken invariant.
void check_well_formed(const BooleanCircuit& c, const Basis& basis = Basis::standard());

/// Precomputed evaluation order of a well-formed circuit.
class CompiledCircuit {
 public:
  explicit CompiledCircuit(const BooleanCircuit& c, const Basis& basis = Basis::standard());

  int inputs() const { return n_; }
  int outputs() const { return m_; }
  std::vector<bool> evaluate(const std::vector<bool>& inputs) const;

 private:
  struct Step {
    NodeKind kind;
    GateFn fn;
    int arg0 = -1;
    int arg1 = -1;
    int input_index = -1;
  };
  int n_ = 0;
  int m_ = 0;
  std::vector<Step> steps_;
  std::vector<int> output_slot_;
};

std::vector<bool> evaluate(const BooleanCircuit& c, const std::vector<bool>& inputs);

/// 2^n rows x m bits. Row r assigns x_1..x_n the binary digits of r with x_1
/// most significant, so rows follow lexicographic input order.
class TruthTable {
 public:
  TruthTable() = default;
  TruthTable(int n, int m);

  int inputs() const { return n_; }
  int outputs() const { return m_; }
  std::size_t rows() const { return std::size_t{1} << n_; }

  bool at(std::size_t row, int output) const { return bits_[row * m_ + output] != 0; }
  void set(std::size_t row, int output, bool value) { bits_[row * m_ + output] = value ? 1 : 0; }

  /// One 2^n-character bit string per output, joined by '|'.
  std::string to_string() const;
  static TruthTable from_string(std::string_view text);

  auto operator<=>(const TruthTable&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> bits_;
};

inline constexpr int kDefaultTruthTableInputCap = 10;

TruthTable truth_table(const BooleanCircuit& c, int max_inputs = kDefaultTruthTableInputCap,
                       const Basis& basis = Basis::standard());

}  // namespace sepcirc
