#pragma once

// Test-only oracle: minimal complexity per single-output table found by
// brute force over raw labelled DAGs (inputs plus up to `max_nodes` gate or
// transit nodes) and all vertex placements. It shares no code with the
// library search beyond the Support type.

#include <cstdint>
#include <map>
#include <vector>

#include "sepcirc/graph.hpp"

namespace raw_oracle {

enum Kind { kInput, kC0, kC1, kNot, kAnd, kOr, kTransit };

struct RawNode {
  Kind kind;
  int a = -1;
  int b = -1;
};

struct Mode {
  bool strict = false;
  bool exclusive = false;
};

class Oracle {
 public:
  Oracle(const sepcirc::Support& t, int k, int n, int max_nodes, Mode mode)
      : k_(k), n_(n), max_nodes_(max_nodes), mode_(mode), p_(static_cast<int>(t.order())) {
    adj_.assign(p_ * p_, 0);
    for (const auto& e : t.edges()) {
      const int a = static_cast<int>(t.index_of(e.u)), b = static_cast<int>(t.index_of(e.v));
      ++adj_[a * p_ + b];
      if (a != b) ++adj_[b * p_ + a];
    }
  }

  std::map<std::uint32_t, int> run() {
    std::vector<RawNode> nodes;
    std::vector<std::uint32_t> tables;
    const std::uint32_t rows = 1U << n_;
    for (int i = 0; i < n_; ++i) {
      std::uint32_t t = 0;
      for (std::uint32_t r = 0; r < rows; ++r)
        if ((r >> (n_ - 1 - i)) & 1U) t |= 1U << r;
      nodes.push_back({kInput});
      tables.push_back(t);
    }
    full_ = rows == 32 ? ~0U : (1U << rows) - 1;
    grow(nodes, tables);
    return best_;
  }

 private:
  bool occupies(Kind kind) const {
    switch (kind) {
      case kNot:
      case kAnd:
      case kOr:
        return true;
      case kTransit:
        return mode_.strict;
      default:
        return mode_.exclusive;
    }
  }

  void grow(std::vector<RawNode>& nodes, std::vector<std::uint32_t>& tables) {
    if (static_cast<int>(nodes.size()) > n_) {
      std::vector<int> place(nodes.size(), -1);
      std::vector<int> load(p_ * p_, 0), slots(p_, 0);
      place_all(nodes, tables, place, load, slots, 0);
    } else {
      // Pure projections: inputs only.
      std::vector<int> place(nodes.size(), -1);
      std::vector<int> load(p_ * p_, 0), slots(p_, 0);
      place_all(nodes, tables, place, load, slots, 0);
    }
    if (static_cast<int>(nodes.size()) >= n_ + max_nodes_) return;
    const int j = static_cast<int>(nodes.size());
    auto push = [&](RawNode node, std::uint32_t t) {
      nodes.push_back(node);
      tables.push_back(t);
      grow(nodes, tables);
      nodes.pop_back();
      tables.pop_back();
    };
    push({kC0}, 0);
    push({kC1}, full_);
    for (int a = 0; a < j; ++a) {
      push({kNot, a}, ~tables[a] & full_);
      push({kTransit, a}, tables[a]);
      for (int b = a; b < j; ++b) {
        push({kAnd, a, b}, tables[a] & tables[b]);
        push({kOr, a, b}, tables[a] | tables[b]);
      }
    }
  }

  void place_all(const std::vector<RawNode>& nodes, const std::vector<std::uint32_t>& tables,
                 std::vector<int>& place, std::vector<int>& load, std::vector<int>& slots, std::size_t i) {
    if (i == nodes.size()) {
      std::uint32_t used = 0;
      for (int v : place) used |= 1U << v;
      const int image = __builtin_popcount(used);
      for (std::size_t s = 0; s < nodes.size(); ++s) {
        auto it = best_.find(tables[s]);
        if (it == best_.end() || it->second > image) best_[tables[s]] = image;
      }
      return;
    }
    const RawNode& node = nodes[i];
    for (int v = 0; v < p_; ++v) {
      if (occupies(node.kind) && slots[v] > 0) continue;
      bool ok = true;
      std::vector<int> touched;
      for (int arg : {node.a, node.b}) {
        if (arg < 0) continue;
        const int u = place[arg];
        const int cap = adj_[u * p_ + v] * k_;
        int& l = load[std::min(u, v) * p_ + std::max(u, v)];
        ++l;
        touched.push_back(std::min(u, v) * p_ + std::max(u, v));
        if (l > cap) ok = false;
      }
      if (ok) {
        place[i] = v;
        if (occupies(node.kind)) ++slots[v];
        place_all(nodes, tables, place, load, slots, i + 1);
        if (occupies(node.kind)) --slots[v];
      }
      for (int idx : touched) --load[idx];
    }
    place[i] = -1;
  }

  int k_, n_, max_nodes_;
  Mode mode_;
  int p_;
  std::uint32_t full_ = 0;
  std::vector<int> adj_;
  std::map<std::uint32_t, int> best_;
};

}  // namespace raw_oracle
