#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepcirc/circuit.hpp"
#include "sepcirc/multilayer.hpp"

namespace sepcirc {

/// Desk-scale caps of the exhaustive oracles. Every field may be raised, at
/// the cost of (quickly) exploding run time.
struct EnumerationLimits {
  std::size_t max_vertices = 6;
  int max_inputs = 2;
  int max_outputs = 1;
  int max_size = 6;
  int max_layers = 2;
  /// Hard cap on visited search states.
  std::uint64_t max_states = 100'000'000;
};

struct SearchOptions {
  /// Must contain C0, C1 and NOT; binary functions are taken from it as well.
  Basis basis = Basis::standard();
  /// Only strict_constraint1 and exclusive_sites are honoured; the three
  /// check toggles must stay on.
  ValidationOptions rules;
  EnumerationLimits limits;
  /// Receives the state estimate before a search starts (may be empty).
  std::function<void(const std::string&)> warn;
};

class SearchBudgetExceeded : public CapExceeded {
 public:
  SearchBudgetExceeded(std::uint64_t states, const std::string& what) : CapExceeded(what), states(states) {}
  std::uint64_t states;
};

struct Witness {
  MultilayerCircuit circuit;
  int complexity = 0;
};

struct CountResult {
  /// One minimal-complexity witness per computable table.
  std::map<TruthTable, Witness> witnesses;
  std::uint64_t states = 0;

  std::size_t count() const { return witnesses.size(); }
  std::vector<TruthTable> tables() const;
};

struct ShannonResult {
  /// Minimal complexity of every n-input table; nullopt when not computable
  /// on the support at all.
  std::map<TruthTable, std::optional<int>> complexity;
  std::map<TruthTable, Witness> witnesses;
  /// Maximum over all tables; nullopt when some table is not computable.
  std::optional<int> shannon;
  std::uint64_t states = 0;
};

/// Upper estimate of the states visited by a search up to size L.
double estimate_search_states(const Support& t, int n, int L, const SearchOptions& options = {});

/// Truth tables of all (n, m) functions computed by some valid k-layer
/// circuit on t whose embedding uses at most L support vertices.
CountResult enumerate_computable(const Support& t, int k, int n, int m, int L, const SearchOptions& options = {});

/// Minimal complexity of every single-output n-input function on t.
ShannonResult shannon_value(const Support& t, int k, int n, const SearchOptions& options = {});

struct AbstractLimits {
  int max_io = 4;
  int max_gates = 3;
};

/// Number of functions with at most n inputs and at most m outputs (at least
/// one) computed by support-free circuits with at most L gates. Constant
/// gates count as gates. With exact_signature only n inputs and m outputs.
std::uint64_t count_abstract(int n, int m, int L, bool exact_signature = false,
                             const Basis& basis = Basis::standard(), const AbstractLimits& limits = {});

struct ZLimits {
  int max_p = 3;
  int max_s = 4;
};

/// Functions with n' + m' <= s (m' >= 1) computed with at most p gates.
std::uint64_t z_oracle(int p, int s, const Basis& basis = Basis::standard(), const ZLimits& limits = {});

struct CalibrationRange {
  int max_n = 2;
  int m = 1;
  int max_L = 2;
  double max_c = 1 << 20;
};

/// Least c in {1, 2, 4, ...} with count_abstract(n, m, L) <= (c(n + L))^(n + m + L)
/// for every n <= max_n and L <= max_L. Throws when max_c is not enough.
double calibrate_count_constant(const CalibrationRange& range = {}, const Basis& basis = Basis::standard());

}  // namespace sepcirc
