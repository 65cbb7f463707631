#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "stdma/core.hpp"
#include "stdma/radio.hpp"

namespace stdma {

enum class EdgeKind : std::uint8_t { kNone, kCommunication, kInterference };

/// Directed communication edges (D <= R_c) and interference edges
/// (R_c < D <= R_i) over the node set. Both relations are symmetric.
class TwoTierGraph {
 public:
  explicit TwoTierGraph(std::size_t n) : n_(n), kind_(n * n, EdgeKind::kNone) {}

  std::size_t num_vertices() const { return n_; }

  EdgeKind kind(NodeId j, NodeId k) const {
    if (j < 1 || k < 1 || j > n_ || k > n_) return EdgeKind::kNone;
    return kind_[(j - 1) * n_ + (k - 1)];
  }

  bool has_edge(NodeId j, NodeId k) const { return kind(j, k) != EdgeKind::kNone; }

  /// Sorted by (tx, rx).
  const std::vector<Link>& comm_edges() const { return comm_; }
  const std::vector<Link>& intf_edges() const { return intf_; }

  void add_symmetric(NodeId j, NodeId k, EdgeKind kind) {
    if (j == k || kind == EdgeKind::kNone) {
      throw std::invalid_argument("TwoTierGraph: invalid edge");
    }
    if (has_edge(j, k)) throw std::invalid_argument("TwoTierGraph: duplicate edge");
    kind_.at((j - 1) * n_ + (k - 1)) = kind;
    kind_.at((k - 1) * n_ + (j - 1)) = kind;
    auto& list = kind == EdgeKind::kCommunication ? comm_ : intf_;
    for (Link l : {Link{j, k}, Link{k, j}}) {
      list.insert(std::lower_bound(list.begin(), list.end(), l), l);
    }
  }

 private:
  std::size_t n_;
  std::vector<EdgeKind> kind_;
  std::vector<Link> comm_;
  std::vector<Link> intf_;
};

/// Thresholds are inclusive: D == R_c is a communication edge, D == R_i an
/// interference edge.
inline TwoTierGraph build_two_tier_graph(const Network& net, const RadioParams& rp) {
  const double rc = comm_range(rp);
  const double ri = interference_range(rp);
  const auto n = static_cast<NodeId>(net.size());
  TwoTierGraph g(n);
  for (NodeId j = 1; j <= n; ++j) {
    for (NodeId k = j + 1; k <= n; ++k) {
      const double d = net.distance(j, k);
      if (d <= rc) {
        g.add_symmetric(j, k, EdgeKind::kCommunication);
      } else if (d <= ri) {
        g.add_symmetric(j, k, EdgeKind::kInterference);
      }
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Conflict predicates
// ---------------------------------------------------------------------------

inline bool has_primary_conflict(Link a, Link b) {
  return a.tx == b.tx || a.tx == b.rx || a.rx == b.tx || a.rx == b.rx;
}

/// Callers rule out a primary conflict first.
inline bool has_secondary_conflict(Link a, Link b, const TwoTierGraph& g) {
  return g.has_edge(a.tx, b.rx) || g.has_edge(b.tx, a.rx);
}

// ---------------------------------------------------------------------------
// Labeling
// ---------------------------------------------------------------------------

/// A bijection vertex -> label, both 1-based.
class Labeling {
 public:
  explicit Labeling(std::vector<NodeId> labels) : label_(std::move(labels)) {
    vertex_.assign(label_.size(), 0);
    for (std::size_t i = 0; i < label_.size(); ++i) {
      const NodeId l = label_[i];
      if (l < 1 || l > label_.size() || vertex_[l - 1] != 0) {
        throw std::invalid_argument("Labeling: not a permutation of 1..v");
      }
      vertex_[l - 1] = static_cast<NodeId>(i + 1);
    }
  }

  static Labeling identity(std::size_t v) {
    std::vector<NodeId> labels(v);
    std::iota(labels.begin(), labels.end(), NodeId{1});
    return Labeling(std::move(labels));
  }

  std::size_t size() const { return label_.size(); }
  NodeId label(NodeId vertex) const { return label_.at(vertex - 1); }
  NodeId vertex_with_label(NodeId label) const { return vertex_.at(label - 1); }
  const std::vector<NodeId>& labels() const { return label_; }

 private:
  std::vector<NodeId> label_;
  std::vector<NodeId> vertex_;
};

/// Fisher-Yates shuffle of (1..v); vertex i receives the i-th entry.
inline Labeling random_labeling(std::size_t v, Rng& rng) {
  if (v == 0) throw std::invalid_argument("random_labeling: need at least one vertex");
  std::vector<NodeId> perm(v);
  std::iota(perm.begin(), perm.end(), NodeId{1});
  for (std::size_t i = v - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_index(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return Labeling(std::move(perm));
}

// ---------------------------------------------------------------------------
// Oriented forests
// ---------------------------------------------------------------------------

enum class Orientation : std::uint8_t { kOut, kIn };

/// Out-oriented: edges point away from the roots, in-degree <= 1.
/// In-oriented: edges point toward the roots, out-degree <= 1.
struct OrientedForest {
  Orientation orientation = Orientation::kOut;
  std::vector<Link> edges;
};

/// Result of splitting the undirected communication graph into BFS forests.
struct ForestDecomposition {
  std::size_t undirected_forests = 0;  // upper bound on the graph thickness
  std::vector<OrientedForest> forests;
};

/// Successive breadth-first searches over the undirected communication
/// graph. Each round starts from the lowest unvisited vertex id and visits
/// neighbours in ascending id; tree edges are removed from the graph and
/// the rest is left for later rounds. Every round emits the out-oriented
/// forest (parent -> child) followed by its in-oriented twin (child ->
/// parent), so every directed communication edge lands in exactly one
/// forest.
inline ForestDecomposition decompose_into_oriented_forests(const TwoTierGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::set<NodeId>> remaining(n + 1);
  std::size_t undirected_left = 0;
  for (const Link& l : g.comm_edges()) {
    if (l.tx < l.rx) {
      remaining[l.tx].insert(l.rx);
      remaining[l.rx].insert(l.tx);
      ++undirected_left;
    }
  }

  ForestDecomposition out;
  while (undirected_left > 0) {
    OrientedForest down{Orientation::kOut, {}};
    OrientedForest up{Orientation::kIn, {}};
    std::vector<bool> visited(n + 1, false);
    for (NodeId root = 1; root <= n; ++root) {
      if (visited[root]) continue;
      visited[root] = true;
      std::deque<NodeId> queue{root};
      while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        std::vector<NodeId> taken;
        for (NodeId w : remaining[u]) {
          if (visited[w]) continue;
          visited[w] = true;
          taken.push_back(w);
          down.edges.push_back(Link{u, w});
          up.edges.push_back(Link{w, u});
          queue.push_back(w);
        }
        for (NodeId w : taken) {
          remaining[u].erase(w);
          remaining[w].erase(u);
          --undirected_left;
        }
      }
    }
    ++out.undirected_forests;
    out.forests.push_back(std::move(down));
    out.forests.push_back(std::move(up));
  }
  return out;
}

}  // namespace stdma
