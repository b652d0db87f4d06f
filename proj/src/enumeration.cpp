#include "sepcirc/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

namespace sepcirc {

std::vector<TruthTable> CountResult::tables() const {
  std::vector<TruthTable> out;
  out.reserve(witnesses.size());
  for (const auto& [table, w] : witnesses) out.push_back(table);
  return out;
}

namespace {

using Mask = std::uint32_t;
using Bits = std::uint32_t;

// Hard limits imposed by the bit-level representations below.
constexpr int kMaxTableInputs = 5;
constexpr std::size_t kMaxSearchVertices = 20;

Bits full_table(int n) { return n >= 5 ? ~Bits{0} : (Bits{1} << (1U << n)) - 1; }

Bits input_table(int n, int i) {
  Bits t = 0;
  for (Bits r = 0; r < (1U << n); ++r)
    if ((r >> (n - 1 - i)) & 1U) t |= Bits{1} << r;
  return t;
}

Bits apply_table(GateFn fn, Bits a, Bits b, Bits full) {
  switch (fn) {
    case GateFn::c0:
      return 0;
    case GateFn::c1:
      return full;
    case GateFn::not_:
      return ~a & full;
    case GateFn::and_:
      return a & b;
    case GateFn::or_:
      return a | b;
    case GateFn::xor_:
      return a ^ b;
    case GateFn::nand_:
      return ~(a & b) & full;
    case GateFn::nor_:
      return ~(a | b) & full;
  }
  return 0;
}

TruthTable to_truth_table(int n, Bits bits) {
  TruthTable t(n, 1);
  for (std::size_t r = 0; r < t.rows(); ++r) t.set(r, 0, (bits >> r) & 1U);
  return t;
}

double binomial(int a, int b) {
  double out = 1.0;
  for (int i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

// Straight-line program of non-constant gates over inputs 0..n-1; gate i is
// signal n + i and the last gate is the only one nothing else reads.
struct ProgGate {
  GateFn fn;
  int a = -1;
  int b = -1;
};

struct Program {
  std::vector<ProgGate> gates;
  Bits table = 0;
  Mask used_inputs = 0;
};

// One way to deliver a signal from its source vertex to all its consumers:
// transit copies (at most one per vertex) forming a tree plus one feeder wire
// per consumer.
struct RouteOption {
  std::vector<std::uint8_t> usage;  // wires per support edge index
  Mask copies = 0;
  std::vector<int> parent;  // per vertex index; meaningful for copies
  std::vector<int> feeder;  // per consumer, a vertex index
};

struct Consumer {
  int gate;
  int slot;
  int vertex;
};

class Searcher {
 public:
  Searcher(const Support& t, int k, int n, const SearchOptions& options)
      : t_(t), k_(k), n_(n), options_(options), p_(static_cast<int>(t.order())), full_(full_table(n)) {
    edge_index_.assign(p_ * p_, -1);
    for (const Edge& e : t.edges()) {
      const int a = static_cast<int>(t.index_of(e.u));
      const int b = static_cast<int>(t.index_of(e.v));
      if (edge_index_[a * p_ + b] < 0) {
        edge_index_[a * p_ + b] = edge_index_[b * p_ + a] = static_cast<int>(capacity_.size());
        capacity_.push_back(0);
      }
      capacity_[edge_index_[a * p_ + b]] += k;
    }
    for (GateFn fn : options.basis.functions())
      if (arity(fn) == 2) binary_.push_back(fn);
    for (int i = 0; i < n; ++i) inputs_.push_back(input_table(n, i));
  }

  void run(int max_size, bool stop_when_complete) {
    const std::size_t total = std::size_t{1} << (std::size_t{1} << n_);
    for (int size = 1; size <= std::min(max_size, p_); ++size) {
      std::vector<int> u(size);
      for (int i = 0; i < size; ++i) u[i] = i;
      while (true) {
        search_subset(u);
        if (stop_when_complete && found_.size() == total) return;
        int i = size - 1;
        while (i >= 0 && u[i] == p_ - size + i) --i;
        if (i < 0) break;
        ++u[i];
        for (int j = i + 1; j < size; ++j) u[j] = u[j - 1] + 1;
      }
      if (found_.size() == total) return;
    }
  }

  std::map<Bits, Witness>& found() { return found_; }
  std::uint64_t states() const { return states_; }

 private:
  void tick() {
    if (++states_ > options_.limits.max_states) {
      std::ostringstream msg;
      msg << "search exceeded the budget of " << options_.limits.max_states << " states";
      throw SearchBudgetExceeded(states_, msg.str());
    }
  }

  bool exclusive() const { return options_.rules.exclusive_sites; }
  bool strict() const { return options_.rules.strict_constraint1; }
  int edge(int a, int b) const { return edge_index_[a * p_ + b]; }

  const std::vector<Program>& programs(int g) {
    while (static_cast<int>(programs_.size()) <= g) {
      std::vector<Program> level;
      const int target = static_cast<int>(programs_.size());
      if (target > 0) {
        std::vector<Bits> sig = inputs_;
        std::vector<int> readers(n_ + target, 0);
        Program prog;
        generate(target, sig, readers, prog, level);
      }
      programs_.push_back(std::move(level));
    }
    return programs_[g];
  }

  // Dominance pruning: a gate whose table is constant or equals an argument
  // or its negation can be replaced by a constant, transit or NOT node on the
  // same vertex without using more vertices, edges or slots. The same holds
  // for binary gates whose arguments share a table.
  void generate(int g, std::vector<Bits>& sig, std::vector<int>& readers, Program& prog, std::vector<Program>& out) {
    tick();
    const int done = static_cast<int>(prog.gates.size());
    int unread = 0;
    for (int i = 0; i < done; ++i) unread += readers[n_ + i] == 0 ? 1 : 0;
    if (done == g) {
      if (unread != 1) return;
      Program p = prog;
      p.table = sig.back();
      for (const auto& gate : prog.gates) {
        if (gate.a < n_) p.used_inputs |= Mask{1} << gate.a;
        if (gate.b >= 0 && gate.b < n_) p.used_inputs |= Mask{1} << gate.b;
      }
      out.push_back(std::move(p));
      return;
    }
    if (unread - (g - done) > 0) return;
    const int signals = static_cast<int>(sig.size());
    auto push = [&](ProgGate gate, Bits table) {
      prog.gates.push_back(gate);
      sig.push_back(table);
      ++readers[gate.a];
      if (gate.b >= 0) ++readers[gate.b];
      generate(g, sig, readers, prog, out);
      --readers[gate.a];
      if (gate.b >= 0) --readers[gate.b];
      sig.pop_back();
      prog.gates.pop_back();
    };
    for (int a = 0; a < signals; ++a) push({GateFn::not_, a, -1}, ~sig[a] & full_);
    for (GateFn fn : binary_) {
      for (int a = 0; a < signals; ++a) {
        for (int b = a + 1; b < signals; ++b) {
          const Bits ta = sig[a], tb = sig[b];
          if (ta == tb) continue;
          const Bits table = apply_table(fn, ta, tb, full_);
          const Bits nta = ~ta & full_, ntb = ~tb & full_;
          if (table == 0 || table == full_ || table == ta || table == tb || table == nta || table == ntb) continue;
          push({fn, a, b}, table);
        }
      }
    }
  }

  bool known(Bits table) const { return found_.contains(table); }

  void search_subset(const std::vector<int>& u) {
    Mask umask = 0;
    for (int v : u) umask |= Mask{1} << v;
    const int size = static_cast<int>(u.size());
    tick();
    try_constants_and_projections(u);
    for (int g = 1; g <= size; ++g) {
      for (const Program& prog : programs(g)) {
        if (known(prog.table)) continue;
        if (exclusive() && g + std::popcount(prog.used_inputs) > size) continue;
        std::vector<int> hosts(g, -1);
        place_gates(prog, u, umask, hosts, 0, 0);
      }
    }
  }

  void try_constants_and_projections(const std::vector<int>& u) {
    const int size = static_cast<int>(u.size());
    // Inputs share the first vertex unless sites are exclusive.
    auto input_vertex = [&](int i) { return exclusive() ? u[i] : u[0]; };
    if (!exclusive() || size >= n_) {
      for (int i = 0; i < n_; ++i) {
        if (known(inputs_[i])) continue;
        BooleanCircuit c{n_, 1, {}, {}};
        Embedding e;
        for (int j = 0; j < n_; ++j) {
          c.nodes.push_back({j + 1, NodeKind::input, std::nullopt, j == i ? std::vector<int>{0} : std::vector<int>{}});
          e.map[j + 1] = t_.vertex_at(input_vertex(j));
        }
        record(inputs_[i], std::move(c), std::move(e));
      }
    }
    if (!exclusive() || size >= n_ + 1) {
      for (GateFn fn : {GateFn::c0, GateFn::c1}) {
        const Bits table = apply_table(fn, 0, 0, full_);
        if (known(table) || !options_.basis.contains(fn)) continue;
        BooleanCircuit c{n_, 1, {}, {}};
        Embedding e;
        for (int j = 0; j < n_; ++j) {
          c.nodes.push_back({j + 1, NodeKind::input, std::nullopt, {}});
          e.map[j + 1] = t_.vertex_at(input_vertex(j));
        }
        c.nodes.push_back({n_ + 1, NodeKind::gate, fn, {0}});
        e.map[n_ + 1] = t_.vertex_at(exclusive() ? u[n_] : u[0]);
        record(table, std::move(c), std::move(e));
      }
    }
  }

  void place_gates(const Program& prog, const std::vector<int>& u, Mask umask, std::vector<int>& hosts,
                   std::size_t i, Mask taken) {
    if (known(prog.table)) return;
    if (i == hosts.size()) {
      std::vector<int> inputs(n_, -1);
      place_inputs(prog, u, umask, hosts, taken, inputs, 0, taken);
      return;
    }
    for (int v : u) {
      if (taken & (Mask{1} << v)) continue;
      hosts[i] = v;
      place_gates(prog, u, umask, hosts, i + 1, taken | (Mask{1} << v));
    }
  }

  void place_inputs(const Program& prog, const std::vector<int>& u, Mask umask, const std::vector<int>& hosts,
                    Mask host_mask, std::vector<int>& inputs, int i, Mask taken) {
    if (known(prog.table)) return;
    if (i == n_) {
      // Unread inputs need no wires; park them on a canonical vertex.
      std::vector<int> full = inputs;
      Mask occupied = taken;
      for (int j = 0; j < n_; ++j) {
        if (full[j] >= 0) continue;
        if (!exclusive()) {
          full[j] = u[0];
          continue;
        }
        for (int v : u) {
          if (!(occupied & (Mask{1} << v))) {
            full[j] = v;
            occupied |= Mask{1} << v;
            break;
          }
        }
        if (full[j] < 0) return;
      }
      route(prog, umask, hosts, host_mask, full);
      return;
    }
    if (!(prog.used_inputs & (Mask{1} << i))) {
      place_inputs(prog, u, umask, hosts, host_mask, inputs, i + 1, taken);
      return;
    }
    for (int v : u) {
      if (exclusive() && (taken & (Mask{1} << v))) continue;
      inputs[i] = v;
      place_inputs(prog, u, umask, hosts, host_mask, inputs, i + 1, taken | (Mask{1} << v));
    }
    inputs[i] = -1;
  }

  const std::vector<RouteOption>& route_options(int src, const std::vector<int>& consumers, Mask allowed) {
    auto key = std::make_tuple(src, consumers, allowed);
    auto it = route_cache_.find(key);
    if (it != route_cache_.end()) return it->second;

    std::vector<RouteOption> options;
    const std::size_t edges = capacity_.size();
    // Enumerate copy sets, then parents and feeders inside each set.
    for (Mask s = allowed;; s = (s - 1) & allowed) {
      std::vector<int> copies;
      for (int v = 0; v < p_; ++v)
        if (s & (Mask{1} << v)) copies.push_back(v);
      const Mask tree = s | (Mask{1} << src);
      std::vector<std::vector<int>> choices;
      for (int c : copies) {
        std::vector<int> opts;
        for (int v = 0; v < p_; ++v)
          if (v != c && (tree & (Mask{1} << v)) && edge(v, c) >= 0) opts.push_back(v);
        choices.push_back(std::move(opts));
      }
      for (int w : consumers) {
        std::vector<int> opts;
        for (int v = 0; v < p_; ++v)
          if ((tree & (Mask{1} << v)) && edge(v, w) >= 0) opts.push_back(v);
        choices.push_back(std::move(opts));
      }
      bool possible = std::all_of(choices.begin(), choices.end(), [](const auto& o) { return !o.empty(); });
      std::vector<std::size_t> pick(choices.size(), 0);
      while (possible) {
        tick();
        RouteOption opt;
        opt.copies = s;
        opt.parent.assign(p_, -1);
        for (std::size_t i = 0; i < copies.size(); ++i) opt.parent[copies[i]] = choices[i][pick[i]];
        for (std::size_t i = 0; i < consumers.size(); ++i) opt.feeder.push_back(choices[copies.size() + i][pick[copies.size() + i]]);
        if (tree_ok(opt, copies, src)) {
          opt.usage.assign(edges, 0);
          for (int c : copies) ++opt.usage[edge(opt.parent[c], c)];
          for (std::size_t i = 0; i < consumers.size(); ++i) ++opt.usage[edge(opt.feeder[i], consumers[i])];
          options.push_back(std::move(opt));
        }
        std::size_t d = 0;
        while (d < pick.size() && ++pick[d] == choices[d].size()) pick[d++] = 0;
        if (d == pick.size()) break;
      }
      if (s == 0) break;
    }

    // Keep only Pareto-minimal options (fewer wires per edge, fewer copies).
    std::vector<bool> keep(options.size(), false);
    for (std::size_t i = 0; i < options.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < options.size() && !dominated; ++j) {
        if (i == j) continue;
        const auto& a = options[j];
        const auto& b = options[i];
        const bool copies_le = !strict() || (a.copies & ~b.copies) == 0;
        if (!copies_le) continue;
        bool le = true, same = true;
        for (std::size_t e = 0; e < edges && le; ++e) {
          le = a.usage[e] <= b.usage[e];
          same = same && a.usage[e] == b.usage[e];
        }
        if (strict()) same = same && a.copies == b.copies;
        dominated = le && (!same || j < i);
      }
      keep[i] = !dominated;
    }
    std::vector<RouteOption> kept;
    for (std::size_t i = 0; i < options.size(); ++i)
      if (keep[i]) kept.push_back(std::move(options[i]));
    return route_cache_.emplace(std::move(key), std::move(kept)).first->second;
  }

  static bool tree_ok(const RouteOption& opt, const std::vector<int>& copies, int src) {
    Mask has_child = 0;
    for (int c : copies) has_child |= Mask{1} << opt.parent[c];
    for (int f : opt.feeder) has_child |= Mask{1} << f;
    for (int c : copies) {
      if (!(has_child & (Mask{1} << c))) return false;
      int v = c;
      std::size_t steps = 0;
      while (v != src && steps++ <= copies.size()) v = opt.parent[v];
      if (v != src) return false;
    }
    return true;
  }

  void route(const Program& prog, Mask umask, const std::vector<int>& hosts, Mask host_mask,
             const std::vector<int>& inputs) {
    tick();
    const int g = static_cast<int>(prog.gates.size());
    const int signals = n_ + g;
    std::vector<std::vector<Consumer>> consumers(signals);
    for (int j = 0; j < g; ++j) {
      consumers[prog.gates[j].a].push_back({j, 1, hosts[j]});
      if (prog.gates[j].b >= 0) consumers[prog.gates[j].b].push_back({j, 2, hosts[j]});
    }
    Mask input_mask = 0;
    for (int v : inputs) input_mask |= Mask{1} << v;
    Mask base_allowed = umask;
    if (strict()) base_allowed &= ~host_mask & ~(exclusive() ? input_mask : 0);

    std::vector<int> order, sources;
    std::vector<const std::vector<RouteOption>*> opts;
    for (int s = 0; s < signals; ++s) {
      if (consumers[s].empty()) continue;
      const int src = s < n_ ? inputs[s] : hosts[s - n_];
      std::vector<int> where;
      for (const Consumer& c : consumers[s]) where.push_back(c.vertex);
      const auto& o = route_options(src, where, base_allowed & ~(Mask{1} << src));
      if (o.empty()) return;
      order.push_back(s);
      sources.push_back(src);
      opts.push_back(&o);
    }
    std::vector<int> load(capacity_.size(), 0);
    std::vector<std::size_t> choice(order.size(), 0);
    if (!assign(0, opts, load, 0, choice)) return;

    BooleanCircuit c{n_, 1, {}, {}};
    Embedding e;
    for (int i = 0; i < n_; ++i) {
      c.nodes.push_back({i + 1, NodeKind::input, std::nullopt, {}});
      e.map[i + 1] = t_.vertex_at(inputs[i]);
    }
    for (int j = 0; j < g; ++j) {
      c.nodes.push_back({n_ + 1 + j, NodeKind::gate, prog.gates[j].fn, j == g - 1 ? std::vector<int>{0} : std::vector<int>{}});
      e.map[n_ + 1 + j] = t_.vertex_at(hosts[j]);
    }
    int next_id = n_ + g + 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int s = order[i];
      const RouteOption& opt = (*opts[i])[choice[i]];
      std::vector<int> node_at(p_, -1);
      node_at[sources[i]] = s + 1;
      for (int v = 0; v < p_; ++v) {
        if (!(opt.copies & (Mask{1} << v))) continue;
        node_at[v] = next_id++;
        c.nodes.push_back({node_at[v], NodeKind::transit, std::nullopt, {}});
        e.map[node_at[v]] = t_.vertex_at(v);
      }
      for (int v = 0; v < p_; ++v)
        if (opt.copies & (Mask{1} << v)) c.wires.push_back({node_at[opt.parent[v]], node_at[v], 1});
      for (std::size_t q = 0; q < consumers[s].size(); ++q) {
        const Consumer& con = consumers[s][q];
        c.wires.push_back({node_at[opt.feeder[q]], n_ + 1 + con.gate, con.slot});
      }
    }
    record(prog.table, std::move(c), std::move(e));
  }

  bool assign(std::size_t i, const std::vector<const std::vector<RouteOption>*>& opts, std::vector<int>& load,
              Mask copies_taken, std::vector<std::size_t>& choice) {
    if (i == opts.size()) return true;
    const auto& list = *opts[i];
    for (std::size_t o = 0; o < list.size(); ++o) {
      tick();
      const RouteOption& opt = list[o];
      if (strict() && (opt.copies & copies_taken)) continue;
      bool fits = true;
      for (std::size_t e = 0; e < load.size(); ++e) {
        load[e] += opt.usage[e];
        fits = fits && load[e] <= capacity_[e];
      }
      if (fits) {
        choice[i] = o;
        if (assign(i + 1, opts, load, copies_taken | opt.copies, choice)) return true;
      }
      for (std::size_t e = 0; e < load.size(); ++e) load[e] -= opt.usage[e];
    }
    return false;
  }

  void record(Bits table, BooleanCircuit c, Embedding e) {
    MultilayerCircuit mc{std::move(c), t_, std::move(e), k_};
    const auto report = validate(mc, options_.rules, options_.basis);
    if (!report.ok()) throw std::logic_error("enumeration produced an invalid witness:\n" + report.to_string());
    if (truth_table(mc.circuit, kMaxTableInputs, options_.basis) != to_truth_table(n_, table))
      throw std::logic_error("enumeration witness does not compute its table");
    const int cx = static_cast<int>(complexity(mc, options_.rules, options_.basis));
    found_.emplace(table, Witness{std::move(mc), cx});
  }

  const Support& t_;
  int k_;
  int n_;
  const SearchOptions& options_;
  int p_;
  Bits full_;
  std::vector<int> edge_index_;
  std::vector<int> capacity_;
  std::vector<GateFn> binary_;
  std::vector<Bits> inputs_;
  std::vector<std::vector<Program>> programs_;
  std::map<std::tuple<int, std::vector<int>, Mask>, std::vector<RouteOption>> route_cache_;
  std::map<Bits, Witness> found_;
  std::uint64_t states_ = 0;
};

void check_search_preconditions(const Support& t, int k, int n, int m, int L, const SearchOptions& options) {
  const auto& lim = options.limits;
  const auto& rules = options.rules;
  if (!rules.homomorphism || !rules.constraint1 || !rules.constraint2)
    throw PreconditionError("enumeration needs all three validation checks enabled");
  for (GateFn fn : {GateFn::c0, GateFn::c1, GateFn::not_})
    if (!options.basis.contains(fn))
      throw PreconditionError("enumeration needs a basis containing C0, C1 and NOT, got " + options.basis.describe());
  if (k < 1 || n < 0 || L < 0) throw PreconditionError("enumeration needs k >= 1, n >= 0 and L >= 0");
  if (m != 1) throw PreconditionError("enumeration supports single-output functions only (m = 1)");
  auto cap = [](const std::string& what, double value, double limit) {
    if (value > limit) {
      std::ostringstream msg;
      msg << what << " = " << value << " exceeds the cap " << limit;
      throw CapExceeded(msg.str());
    }
  };
  cap("|V(t)|", static_cast<double>(t.order()), static_cast<double>(std::min(lim.max_vertices, kMaxSearchVertices)));
  cap("n", n, std::min(lim.max_inputs, kMaxTableInputs));
  cap("m", m, lim.max_outputs);
  cap("L", L, lim.max_size);
  cap("k", k, lim.max_layers);
}

void announce(const Support& t, int n, int L, const SearchOptions& options) {
  if (!options.warn) return;
  std::ostringstream msg;
  msg << "search estimate: about " << estimate_search_states(t, n, L, options) << " states (budget "
      << options.limits.max_states << ")";
  options.warn(msg.str());
}

}  // namespace

double estimate_search_states(const Support& t, int n, int L, const SearchOptions& options) {
  int unary = 0, binary = 0;
  for (GateFn fn : options.basis.functions()) {
    unary += arity(fn) == 1 ? 1 : 0;
    binary += arity(fn) == 2 ? 1 : 0;
  }
  const int p = static_cast<int>(t.order());
  double total = 0.0;
  for (int size = 1; size <= std::min(L, p); ++size) {
    double per_subset = 1.0;
    double programs = 1.0;
    double injections = 1.0;
    for (int g = 1; g <= size; ++g) {
      const int signals = n + g - 1;
      programs *= unary * signals + binary * binomial(signals, 2);
      injections *= size - g + 1;
      per_subset += programs * injections * std::pow(size, n);
    }
    total += binomial(p, size) * per_subset;
  }
  return total;
}

CountResult enumerate_computable(const Support& t, int k, int n, int m, int L, const SearchOptions& options) {
  check_search_preconditions(t, k, n, m, L, options);
  announce(t, n, L, options);
  Searcher search(t, k, n, options);
  search.run(L, true);
  CountResult result;
  for (auto& [bits, w] : search.found()) result.witnesses.emplace(to_truth_table(n, bits), std::move(w));
  result.states = search.states();
  return result;
}

ShannonResult shannon_value(const Support& t, int k, int n, const SearchOptions& options) {
  const int L = static_cast<int>(t.order());
  check_search_preconditions(t, k, n, 1, L, options);
  announce(t, n, L, options);
  Searcher search(t, k, n, options);
  search.run(L, true);
  ShannonResult result;
  result.states = search.states();
  const std::size_t total = std::size_t{1} << (std::size_t{1} << n);
  int worst = 0;
  bool all = true;
  for (std::size_t bits = 0; bits < total; ++bits) {
    auto table = to_truth_table(n, static_cast<Bits>(bits));
    auto it = search.found().find(static_cast<Bits>(bits));
    if (it == search.found().end()) {
      all = false;
      result.complexity.emplace(std::move(table), std::nullopt);
      continue;
    }
    worst = std::max(worst, it->second.complexity);
    result.complexity.emplace(table, it->second.complexity);
    result.witnesses.emplace(std::move(table), std::move(it->second));
  }
  if (all) result.shannon = worst;
  return result;
}

namespace {

// |F(n, m, L)|: m-tuples of tables realised by circuits over exactly n inputs
// with at most L gates. A state is the sorted set of distinct signal tables;
// a gate repeating an existing table adds nothing new to any output tuple.
std::uint64_t count_signature(int n, int m, int L, const Basis& basis) {
  if (n > kMaxTableInputs) throw CapExceeded("count_abstract: n = " + std::to_string(n) + " is too large");
  const Bits full = full_table(n);
  std::vector<Bits> start;
  for (int i = 0; i < n; ++i) start.push_back(input_table(n, i));
  std::sort(start.begin(), start.end());

  std::set<std::vector<Bits>> seen{start};
  std::vector<std::vector<Bits>> frontier{start};
  for (int level = 0; level < L; ++level) {
    std::vector<std::vector<Bits>> next;
    for (const auto& state : frontier) {
      std::set<Bits> fresh;
      for (GateFn fn : basis.functions()) {
        if (arity(fn) == 0) {
          fresh.insert(apply_table(fn, 0, 0, full));
        } else if (arity(fn) == 1) {
          for (Bits a : state) fresh.insert(apply_table(fn, a, 0, full));
        } else {
          for (Bits a : state)
            for (Bits b : state) fresh.insert(apply_table(fn, a, b, full));
        }
      }
      for (Bits t : fresh) {
        if (std::binary_search(state.begin(), state.end(), t)) continue;
        auto grown = state;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), t), t);
        if (seen.insert(grown).second) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }

  std::set<std::vector<Bits>> tuples;
  for (const auto& state : seen) {
    if (state.empty()) continue;
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      std::vector<Bits> tuple(m);
      for (int o = 0; o < m; ++o) tuple[o] = state[pick[o]];
      tuples.insert(std::move(tuple));
      int d = 0;
      while (d < m && ++pick[d] == state.size()) pick[d++] = 0;
      if (d == m) break;
    }
  }
  return tuples.size();
}

}  // namespace

std::uint64_t count_abstract(int n, int m, int L, bool exact_signature, const Basis& basis,
                             const AbstractLimits& limits) {
  if (n < 0 || m < 1 || L < 0) throw PreconditionError("count_abstract needs n >= 0, m >= 1 and L >= 0");
  if (n + m > limits.max_io)
    throw CapExceeded("count_abstract: n + m = " + std::to_string(n + m) + " exceeds the cap " +
                      std::to_string(limits.max_io));
  if (L > limits.max_gates)
    throw CapExceeded("count_abstract: L = " + std::to_string(L) + " exceeds the cap " +
                      std::to_string(limits.max_gates));
  if (exact_signature) return count_signature(n, m, L, basis);
  std::uint64_t total = 0;
  for (int ni = 0; ni <= n; ++ni)
    for (int mi = 1; mi <= m; ++mi) total += count_signature(ni, mi, L, basis);
  return total;
}

std::uint64_t z_oracle(int p, int s, const Basis& basis, const ZLimits& limits) {
  if (p < 0 || s < 0) throw PreconditionError("z_oracle needs p >= 0 and s >= 0");
  if (p > limits.max_p) throw CapExceeded("z_oracle: p = " + std::to_string(p) + " exceeds the cap");
  if (s > limits.max_s) throw CapExceeded("z_oracle: s = " + std::to_string(s) + " exceeds the cap");
  std::uint64_t total = 0;
  for (int mi = 1; mi <= s; ++mi)
    for (int ni = 0; ni + mi <= s; ++ni) total += count_signature(ni, mi, p, basis);
  return total;
}

double calibrate_count_constant(const CalibrationRange& range, const Basis& basis) {
  if (range.max_n < 0 || range.m < 1 || range.max_L < 0)
    throw PreconditionError("calibration range needs max_n >= 0, m >= 1 and max_L >= 0");
  struct Sample {
    int n, L;
    std::uint64_t count;
  };
  std::vector<Sample> samples;
  AbstractLimits limits{range.max_n + range.m, range.max_L};
  for (int n = 0; n <= range.max_n; ++n)
    for (int L = 0; L <= range.max_L; ++L) samples.push_back({n, L, count_abstract(n, range.m, L, false, basis, limits)});
  for (double c = 1.0; c <= range.max_c; c *= 2.0) {
    bool ok = true;
    for (const auto& s : samples) {
      if (s.count == 0) continue;
      if (s.n + s.L == 0) {
        ok = false;
        break;
      }
      const double rhs = (s.n + range.m + s.L) * std::log2(c * (s.n + s.L));
      if (!le_rounded(std::log2(static_cast<double>(s.count)), rhs)) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  throw CapExceeded("calibration found no c <= " + std::to_string(range.max_c));
}

}  // namespace sepcirc
