#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stdma/core.hpp"
#include "stdma/graph.hpp"

namespace stdma {

/// Partial or complete assignment of communication edges to colors 1..C.
/// A color is a time slot; colors are allocated contiguously.
class Coloring {
 public:
  explicit Coloring(std::size_t num_vertices) : touching_(num_vertices + 1) {}

  std::size_t num_colors() const { return classes_.size(); }
  std::size_t num_colored() const { return color_.size(); }

  std::optional<std::size_t> color_of(Link l) const {
    auto it = color_.find(l);
    if (it == color_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<Link>& edges_with_color(std::size_t c) const { return classes_.at(c - 1); }

  /// Colors already used by some edge incident to `node`, ascending.
  const std::vector<std::size_t>& colors_touching(NodeId node) const { return touching_.at(node); }

  /// `c` may be an existing color or exactly num_colors() + 1.
  void assign(Link l, std::size_t c) {
    if (c == 0 || c > classes_.size() + 1) {
      throw std::invalid_argument("Coloring::assign: colors must stay contiguous");
    }
    if (color_.count(l) != 0) throw std::invalid_argument("Coloring::assign: edge already colored");
    if (l.tx >= touching_.size() || l.rx >= touching_.size() || l.tx == 0 || l.rx == 0) {
      throw std::out_of_range("Coloring::assign: node id out of range");
    }
    if (c == classes_.size() + 1) classes_.emplace_back();
    classes_[c - 1].push_back(l);
    color_.emplace(l, c);
    for (NodeId v : {l.tx, l.rx}) {
      auto& cs = touching_[v];
      auto pos = std::lower_bound(cs.begin(), cs.end(), c);
      if (pos == cs.end() || *pos != c) cs.insert(pos, c);
    }
  }

  Schedule to_schedule() const { return Schedule(classes_); }

 private:
  std::vector<std::vector<Link>> classes_;
  std::map<Link, std::size_t> color_;
  std::vector<std::vector<std::size_t>> touching_;
};

/// First existing color, in ascending order, that shares no node with `x`
/// and for which `accepts(x, edges_of_that_color)` holds; otherwise a fresh
/// color.
template <class Accepts>
std::size_t first_fit_color(Link x, const Coloring& partial, Accepts&& accepts) {
  const auto& a = partial.colors_touching(x.tx);
  const auto& b = partial.colors_touching(x.rx);
  for (std::size_t c = 1; c <= partial.num_colors(); ++c) {
    if (std::binary_search(a.begin(), a.end(), c) || std::binary_search(b.begin(), b.end(), c)) {
      continue;
    }
    if (accepts(x, partial.edges_with_color(c))) return c;
  }
  return partial.num_colors() + 1;
}

/// Colors every edge of the decomposition. Forests are taken in order; in
/// each forest vertices are visited by increasing label and the unique edge
/// whose head (out-oriented) or tail (in-oriented) is that vertex is colored.
/// Labels with no such edge are skipped.
template <class ChooseColor>
Coloring color_in_forest_order(std::size_t num_vertices, const Labeling& labels,
                               const ForestDecomposition& decomposition, ChooseColor&& choose) {
  if (labels.size() != num_vertices) {
    throw std::invalid_argument("color_in_forest_order: labeling size mismatch");
  }
  Coloring coloring(num_vertices);
  std::vector<std::optional<Link>> keyed(num_vertices + 1);
  for (const auto& forest : decomposition.forests) {
    std::fill(keyed.begin(), keyed.end(), std::nullopt);
    for (const Link& e : forest.edges) {
      const NodeId key = forest.orientation == Orientation::kOut ? e.rx : e.tx;
      if (keyed.at(key)) throw std::logic_error("color_in_forest_order: forest is not oriented");
      keyed[key] = e;
    }
    for (NodeId j = 1; j <= num_vertices; ++j) {
      const auto& x = keyed[labels.vertex_with_label(j)];
      if (!x) continue;
      coloring.assign(*x, choose(*x, std::as_const(coloring)));
    }
  }
  return coloring;
}

}  // namespace stdma
