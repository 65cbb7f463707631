#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stdma/core.hpp"
#include "stdma/graph.hpp"
#include "stdma/radio.hpp"

// Schedule checks written against Network and RadioParams only. Nothing in
// here calls into the schedulers' conflict or SINR helpers, so a verifier
// pass is an independent confirmation of a scheduler's output.

namespace stdma {

struct LinkOutcome {
  Link link;
  double sinr_db = 0.0;  // NaN for malformed links, -inf for a zero signal
  bool success = false;
};

enum class ViolationKind : std::uint8_t { kOperational, kRange, kExhaustive, kSinr };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kOperational: return "operational";
    case ViolationKind::kRange: return "range";
    case ViolationKind::kExhaustive: return "exhaustive";
    case ViolationKind::kSinr: return "sinr";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::optional<std::size_t> slot;  // 0-based; empty for whole-schedule checks
  std::vector<Link> links;
  std::string detail;
};

struct EvaluationReport {
  double spatial_reuse = 0.0;
  std::size_t num_slots = 0;
  std::vector<std::vector<LinkOutcome>> slots;
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
  std::size_t successes() const {
    std::size_t s = 0;
    for (const auto& slot : slots)
      for (const auto& o : slot) s += o.success ? 1 : 0;
    return s;
  }
};

namespace detail {

inline bool well_formed(const Network& net, Link l) {
  return net.contains(l.tx) && net.contains(l.rx) && l.tx != l.rx;
}

inline double path_power(const Network& net, const RadioParams& rp, const GainMatrix* gains,
                         NodeId from, NodeId to) {
  const double d = net.distance(from, to);
  double p = rp.power_watts() * std::pow(d, -rp.alpha());
  if (gains != nullptr) p *= gains->v(from, to) * std::pow(10.0, gains->w(from, to));
  return p;
}

/// Linear SINR at every receiver of `slot`, all well-formed links active.
/// Malformed links get NaN and do not transmit.
inline std::vector<double> slot_sinrs(const Network& net, const RadioParams& rp,
                                      const GainMatrix* gains, const Slot& slot) {
  std::vector<double> out(slot.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t j = 0; j < slot.size(); ++j) {
    if (!well_formed(net, slot[j])) continue;
    const NodeId rx = slot[j].rx;
    double interference = 0.0;
    for (std::size_t k = 0; k < slot.size(); ++k) {
      if (k == j || !well_formed(net, slot[k])) continue;
      if (slot[k].tx == rx) continue;  // operational violation, reported separately
      interference += path_power(net, rp, gains, slot[k].tx, rx);
    }
    out[j] = path_power(net, rp, gains, slot[j].tx, rx) / (rp.noise_watts() + interference);
  }
  return out;
}

inline std::string link_str(Link l) {
  return std::to_string(l.tx) + "->" + std::to_string(l.rx);
}

}  // namespace detail

/// Checks the operational, range, exhaustiveness and SINR constraints and
/// computes spatial reuse. With `gains`, SINRs include fading and shadowing.
/// Malformed links are reported, never thrown on.
inline EvaluationReport verify_schedule(const Network& net, const Schedule& schedule,
                                        const RadioParams& rp, const GainMatrix* gains = nullptr) {
  EvaluationReport report;
  report.num_slots = schedule.num_slots();
  const double rc = std::pow(rp.power_watts() / (rp.noise_watts() * rp.gamma_c()), 1.0 / rp.alpha());
  const std::size_t n = net.size();
  std::vector<bool> scheduled(n * n, false);

  for (std::size_t i = 0; i < schedule.num_slots(); ++i) {
    const Slot& slot = schedule.slot(i);

    std::vector<int> uses(n + 1, 0);
    for (const Link& l : slot) {
      if (!net.contains(l.tx) || !net.contains(l.rx)) {
        report.violations.push_back({ViolationKind::kRange, i, {l},
                                     "link " + detail::link_str(l) + " references an unknown node"});
        continue;
      }
      if (l.tx == l.rx) {
        report.violations.push_back({ViolationKind::kOperational, i, {l},
                                     "node " + std::to_string(l.tx) + " transmits to itself"});
        continue;
      }
      ++uses[l.tx];
      ++uses[l.rx];
      scheduled[(l.tx - 1) * n + (l.rx - 1)] = true;
      if (net.distance(l.tx, l.rx) > rc) {
        report.violations.push_back({ViolationKind::kRange, i, {l},
                                     "receiver " + std::to_string(l.rx) +
                                         " is outside the communication range of " +
                                         std::to_string(l.tx)});
      }
    }
    for (NodeId v = 1; v <= n; ++v) {
      if (uses[v] < 2) continue;
      std::vector<Link> involved;
      for (const Link& l : slot)
        if (l.tx == v || l.rx == v) involved.push_back(l);
      report.violations.push_back({ViolationKind::kOperational, i, involved,
                                   "node " + std::to_string(v) + " has " +
                                       std::to_string(uses[v]) + " roles in one slot"});
    }

    const auto sinrs = detail::slot_sinrs(net, rp, gains, slot);
    std::vector<LinkOutcome> outcomes;
    for (std::size_t j = 0; j < slot.size(); ++j) {
      LinkOutcome o{slot[j], std::numeric_limits<double>::quiet_NaN(), false};
      if (!std::isnan(sinrs[j])) {
        o.sinr_db = sinrs[j] > 0.0 ? 10.0 * std::log10(sinrs[j])
                                   : -std::numeric_limits<double>::infinity();
        o.success = sinrs[j] >= rp.gamma_c();
        if (!o.success) {
          report.violations.push_back({ViolationKind::kSinr, i, {slot[j]},
                                       "SINR " + std::to_string(o.sinr_db) + " dB at receiver " +
                                           std::to_string(slot[j].rx) +
                                           " is below the communication threshold"});
        }
      }
      outcomes.push_back(o);
    }
    report.slots.push_back(std::move(outcomes));
  }

  for (NodeId j = 1; j <= n; ++j) {
    for (NodeId k = 1; k <= n; ++k) {
      if (j == k || net.distance(j, k) > rc) continue;
      if (!scheduled[(j - 1) * n + (k - 1)]) {
        report.violations.push_back({ViolationKind::kExhaustive, std::nullopt, {Link{j, k}},
                                     "in-range link " + detail::link_str(Link{j, k}) +
                                         " is never scheduled"});
      }
    }
  }

  if (report.num_slots > 0) {
    report.spatial_reuse =
        static_cast<double>(report.successes()) / static_cast<double>(report.num_slots);
  }
  return report;
}

/// Average number of successful receptions per slot.
inline double spatial_reuse(const Network& net, const Schedule& schedule, const RadioParams& rp,
                            const GainMatrix* gains = nullptr) {
  if (schedule.empty()) throw std::invalid_argument("spatial_reuse: empty schedule");
  std::size_t successes = 0;
  for (const Slot& slot : schedule.slots()) {
    for (double s : detail::slot_sinrs(net, rp, gains, slot)) {
      if (!std::isnan(s) && s >= rp.gamma_c()) ++successes;
    }
  }
  return static_cast<double>(successes) / static_cast<double>(schedule.num_slots());
}

// ---------------------------------------------------------------------------
// Brute-force optimum
// ---------------------------------------------------------------------------

class InstanceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultOracleMaxEdges = 8;

namespace detail {

struct PartitionSearch {
  const Network& net;
  const RadioParams& rp;
  const std::vector<Link>& edges;
  std::vector<Slot> blocks;
  std::vector<Slot> best;
  std::size_t best_count = std::numeric_limits<std::size_t>::max();

  bool block_valid(const Slot& block) const {
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        const Link x = block[a], y = block[b];
        if (x.tx == y.tx || x.tx == y.rx || x.rx == y.tx || x.rx == y.rx) return false;
      }
    for (double s : slot_sinrs(net, rp, nullptr, block))
      if (!(s >= rp.gamma_c())) return false;
    return true;
  }

  // Restricted-growth enumeration in lexicographic order. Adding a link to
  // a block only lowers SINRs, so an invalid partial block is pruned.
  void run(std::size_t i) {
    if (i == edges.size()) {
      if (blocks.size() < best_count) {
        best_count = blocks.size();
        best = blocks;
      }
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(edges[i]);
      if (block_valid(blocks[b])) run(i + 1);
      blocks[b].pop_back();
    }
    if (blocks.size() + 1 < best_count) {
      blocks.push_back({edges[i]});
      if (block_valid(blocks.back())) run(i + 1);
      blocks.pop_back();
    }
  }
};

}  // namespace detail

/// Enumerates every set partition of the communication edges and returns a
/// valid one with the fewest slots, which is the maximum spatial reuse when
/// all transmissions succeed. Ties go to the lexicographically first
/// partition over the sorted edge list.
inline Schedule optimal_schedule_bruteforce(const Network& net, const TwoTierGraph& g,
                                            const RadioParams& rp,
                                            std::size_t max_edges = kDefaultOracleMaxEdges) {
  const auto& edges = g.comm_edges();
  if (edges.size() > max_edges) {
    throw InstanceTooLarge("optimal_schedule_bruteforce: " + std::to_string(edges.size()) +
                           " communication edges exceed the limit of " +
                           std::to_string(max_edges));
  }
  if (edges.empty()) return Schedule{};
  detail::PartitionSearch search{net, rp, edges, {}, {}};
  search.run(0);
  return Schedule(std::move(search.best));
}

}  // namespace stdma
