#pragma once

#include <algorithm>
#include <vector>

#include "stdma/coloring.hpp"
#include "stdma/core.hpp"
#include "stdma/graph.hpp"

namespace stdma {

// Graph-based reference scheduler: same labeling and forest order as the
// SINR scheduler, but a color is acceptable when none of its edges has a
// primary or secondary conflict with the candidate. No SINR is evaluated,
// so cumulative interference can break the resulting slots.

inline Coloring graph_based_coloring(const TwoTierGraph& g, const Labeling& labels,
                                     const ForestDecomposition& decomposition) {
  auto no_conflict = [&](Link x, const std::vector<Link>& slot) {
    return std::none_of(slot.begin(), slot.end(), [&](Link h) {
      return has_primary_conflict(x, h) || has_secondary_conflict(x, h, g);
    });
  };
  return color_in_forest_order(g.num_vertices(), labels, decomposition,
                               [&](Link x, const Coloring& partial) {
                                 return first_fit_color(x, partial, no_conflict);
                               });
}

inline Schedule graph_based_link_schedule(const TwoTierGraph& g, Rng& rng) {
  const Labeling labels = random_labeling(g.num_vertices(), rng);
  return graph_based_coloring(g, labels, decompose_into_oriented_forests(g)).to_schedule();
}

}  // namespace stdma
