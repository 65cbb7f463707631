#pragma once

#include <vector>

#include "stdma/coloring.hpp"
#include "stdma/core.hpp"
#include "stdma/graph.hpp"
#include "stdma/radio.hpp"

namespace stdma {

/// True when every receiver of `slot` plus `x`, with all their transmitters
/// active, sees SINR >= gamma_c.
inline bool sinr_admits(Link x, const std::vector<Link>& slot, const Network& net,
                        const RadioParams& rp) {
  std::vector<Link> active(slot);
  active.push_back(x);
  const double p = rp.power_watts();
  for (const Link& target : active) {
    double interference = 0.0;
    for (const Link& other : active) {
      if (other == target) continue;
      interference += received_power(p, net.distance(other.tx, target.rx), rp.alpha());
    }
    const double signal = received_power(p, net.distance(target.tx, target.rx), rp.alpha());
    if (!(signal / (rp.noise_watts() + interference) >= rp.gamma_c())) return false;
  }
  return true;
}

inline std::size_t first_conflict_free_color(Link x, const Coloring& partial, const Network& net,
                                             const RadioParams& rp) {
  if (partial.color_of(x)) throw std::invalid_argument("first_conflict_free_color: already colored");
  return first_fit_color(x, partial, [&](Link e, const std::vector<Link>& slot) {
    return sinr_admits(e, slot, net, rp);
  });
}

/// SINR-aware coloring with a caller-provided labeling and decomposition.
inline Coloring conflict_free_coloring(const Network& net, const RadioParams& rp,
                                       const Labeling& labels,
                                       const ForestDecomposition& decomposition) {
  return color_in_forest_order(net.size(), labels, decomposition,
                               [&](Link x, const Coloring& partial) {
                                 return first_conflict_free_color(x, partial, net, rp);
                               });
}

/// Random labeling, BFS forest decomposition, then first-fit SINR coloring.
inline Schedule conflict_free_link_schedule(const Network& net, const TwoTierGraph& g,
                                            const RadioParams& rp, Rng& rng) {
  const Labeling labels = random_labeling(g.num_vertices(), rng);
  return conflict_free_coloring(net, rp, labels, decompose_into_oriented_forests(g)).to_schedule();
}

}  // namespace stdma
