#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "sepcirc/enumeration.hpp"

using namespace sepcirc;
using namespace test_helpers;

namespace {

SearchOptions mode(bool exclusive, bool strict = false) {
  SearchOptions o;
  o.rules.exclusive_sites = exclusive;
  o.rules.strict_constraint1 = strict;
  return o;
}

std::map<std::string, std::string> complexities(const ShannonResult& r) {
  std::map<std::string, std::string> out;
  for (const auto& [t, c] : r.complexity) out[t.to_string()] = c ? std::to_string(*c) : "inf";
  return out;
}

using Table = std::map<std::string, std::string>;

}  // namespace

TEST_CASE("enumerate_computable on P2 and K1") {
  const auto p2_l1 = enumerate_computable(path(2), 1, 1, 1, 1, mode(true));
  CHECK(p2_l1.count() == 1);
  CHECK(p2_l1.tables().front().to_string() == "01");
  CHECK(enumerate_computable(path(2), 1, 1, 1, 2, mode(true)).count() == 4);
  CHECK(enumerate_computable(complete(1), 1, 1, 1, 1, mode(true)).count() == 1);

  // Without exclusive sites a constant gate may share the input's vertex.
  CHECK(enumerate_computable(path(2), 1, 1, 1, 1, mode(false)).count() == 3);
  CHECK(enumerate_computable(path(2), 1, 1, 1, 2, mode(false)).count() == 4);
}

TEST_CASE("shannon values for one input") {
  for (const Support& t : {path(2), path(3), cycle(4)}) {
    const ShannonResult literal = shannon_value(t, 1, 1, mode(false));
    CHECK(complexities(literal) == Table{{"00", "1"}, {"01", "1"}, {"10", "2"}, {"11", "1"}});
    CHECK(literal.shannon == 2);
    const ShannonResult exclusive = shannon_value(t, 1, 1, mode(true));
    CHECK(complexities(exclusive) == Table{{"00", "2"}, {"01", "1"}, {"10", "2"}, {"11", "2"}});
    CHECK(exclusive.shannon == 2);
  }
  CHECK_FALSE(shannon_value(complete(1), 1, 1).shannon.has_value());
}

TEST_CASE("shannon values for two inputs") {
  const ShannonResult p2_k1 = shannon_value(path(2), 1, 2);
  CHECK(complexities(p2_k1).at("0001") == "inf");
  CHECK_FALSE(p2_k1.shannon.has_value());
  const ShannonResult p2_k2 = shannon_value(path(2), 2, 2);
  CHECK(complexities(p2_k2).at("0001") == "2");
  const ShannonResult c4_k1 = shannon_value(cycle(4), 1, 2);
  for (const char* t : {"0110", "1001", "1000", "1110"}) CHECK(complexities(c4_k1).at(t) == "inf");
}

TEST_CASE("witnesses are valid and compute their table") {
  const CountResult r = enumerate_computable(path(3), 2, 2, 1, 3);
  for (const auto& [table, w] : r.witnesses) {
    CHECK(validate(w.circuit).ok());
    CHECK(complexity(w.circuit) == static_cast<std::size_t>(w.complexity));
    CHECK(truth_table(w.circuit.circuit) == table);
  }
}

TEST_CASE("search preconditions and budget") {
  CHECK_THROWS_AS(enumerate_computable(path(2), 1, 1, 2, 2), PreconditionError);
  SearchOptions no_const;
  no_const.basis = Basis({GateFn::and_, GateFn::or_, GateFn::not_});
  CHECK_THROWS_AS(enumerate_computable(path(2), 1, 1, 1, 2, no_const), PreconditionError);
  SearchOptions tiny;
  tiny.limits.max_states = 10;
  CHECK_THROWS_AS(shannon_value(grid({2, 3}).support, 1, 2, tiny), SearchBudgetExceeded);
  std::string warned;
  SearchOptions noisy;
  noisy.warn = [&](const std::string& msg) { warned = msg; };
  enumerate_computable(path(2), 1, 1, 1, 1, noisy);
  CHECK(warned.find("states") != std::string::npos);
  CHECK(estimate_search_states(path(3), 1, 2) > 0);
}

TEST_CASE("count_abstract frozen values") {
  const std::vector<std::vector<std::uint64_t>> expected{{0, 2, 2, 2}, {1, 6, 6, 6}, {3, 14, 20, 20}, {6, 28, 60, 104}};
  for (int n = 0; n <= 3; ++n)
    for (int L = 0; L <= 3; ++L) CHECK(count_abstract(n, 1, L) == expected[n][L]);
}

TEST_CASE("z_oracle and calibration") {
  CHECK(z_oracle(1, 2) == 8);
  CHECK(z_oracle(0, 2) == 1);
  CHECK(z_oracle(2, 1) == 2);
  CHECK(z_oracle(0, 1) == 0);
  CHECK(calibrate_count_constant() == 2.0);
}

TEST_CASE("property: computable counts grow with L and never exceed the abstract count") {
  for (const Support& t : {path(2), path(3)}) {
    for (int k : {1, 2}) {
      std::size_t previous = 0;
      for (int L = 1; L <= static_cast<int>(t.order()); ++L) {
        const CountResult r = enumerate_computable(t, k, 2, 1, L);
        CHECK(r.count() >= previous);
        previous = r.count();
        int gates = 0;
        for (const auto& [table, w] : r.witnesses) {
          int g = 0;
          for (const Node& node : w.circuit.circuit.nodes) g += node.kind == NodeKind::gate ? 1 : 0;
          gates = std::max(gates, g);
        }
        CHECK(r.count() <= count_abstract(2, 1, gates));
      }
    }
  }
}

TEST_CASE("property: the Shannon value enumerates every function") {
  for (const Support& t : {path(2), path(3), grid({2, 2}).support}) {
    for (int k : {1, 2}) {
      const ShannonResult s = shannon_value(t, k, 1);
      if (!s.shannon) continue;
      CHECK(enumerate_computable(t, k, 1, 1, *s.shannon).count() == 4);
      CHECK(enumerate_computable(t, k, 1, 1, *s.shannon - 1).count() < 4);
    }
  }
}
