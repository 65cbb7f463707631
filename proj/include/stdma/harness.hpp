#pragma once

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stdma/baseline.hpp"
#include "stdma/cfls.hpp"
#include "stdma/core.hpp"
#include "stdma/graph.hpp"
#include "stdma/radio.hpp"
#include "stdma/verifier.hpp"

namespace stdma {

// ---------------------------------------------------------------------------
// Network generation
// ---------------------------------------------------------------------------

/// One point uniform on the disc of radius R: r = R sqrt(u), theta = 2 pi u'.
inline Point sample_disc_point(double radius, Rng& rng) {
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  const double r = radius * std::sqrt(rng.uniform01());
  const double theta = kTwoPi * rng.uniform01();
  return Point{r * std::cos(theta), r * std::sin(theta)};
}

/// n i.i.d. disc points; a point coinciding with an earlier one is redrawn.
inline Network generate_network(std::size_t n, double radius, Rng& rng) {
  if (n < 2) throw std::invalid_argument("generate_network: need at least two nodes");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("generate_network: radius must be positive");
  }
  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const Point p = sample_disc_point(radius, rng);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return Network(std::move(pts));
}

// ---------------------------------------------------------------------------
// Experiments
// ---------------------------------------------------------------------------

enum class Algorithm : std::uint8_t { kCfls, kGraphBaseline };

inline const char* to_string(Algorithm a) {
  return a == Algorithm::kCfls ? "cfls" : "graph-baseline";
}

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "cfls") return Algorithm::kCfls;
  if (s == "graph-baseline") return Algorithm::kGraphBaseline;
  throw std::invalid_argument("unknown algorithm '" + s + "' (expected cfls or graph-baseline)");
}

inline Schedule run_scheduler(Algorithm a, const Network& net, const TwoTierGraph& g,
                              const RadioParams& rp, Rng& rng) {
  switch (a) {
    case Algorithm::kCfls: return conflict_free_link_schedule(net, g, rp, rng);
    case Algorithm::kGraphBaseline: return graph_based_link_schedule(g, rng);
  }
  throw std::logic_error("run_scheduler: unhandled algorithm");
}

struct ExperimentPreset {
  std::string name;
  double radius = 0.0;  // deployment disc, m
  double power_mw = 0.0;
  double noise_dbm = 0.0;
  double gamma_c_db = 0.0;
  double gamma_i_db = 0.0;
  double alpha = 0.0;
  std::vector<std::size_t> node_counts;
  std::size_t trials = 200;
  std::optional<FadingParams> fading;

  RadioParams radio() const {
    return RadioParams::from_config(power_mw, noise_dbm, gamma_c_db, gamma_i_db, alpha);
  }
};

inline std::vector<std::size_t> node_range(std::size_t first, std::size_t last, std::size_t step) {
  std::vector<std::size_t> out;
  for (std::size_t n = first; n <= last; n += step) out.push_back(n);
  return out;
}

inline ExperimentPreset experiment1_preset() {
  return {"exp1", 500.0, 10.0, -90.0, 20.0, 10.0, 4.0, node_range(30, 110, 5), 200, std::nullopt};
}

inline ExperimentPreset experiment2_preset() {
  return {"exp2", 700.0, 15.0, -85.0, 15.0, 7.0, 4.0, node_range(70, 150, 5), 200, std::nullopt};
}

inline ExperimentPreset preset_by_name(const std::string& name) {
  if (name == "exp1") return experiment1_preset();
  if (name == "exp2") return experiment2_preset();
  throw std::invalid_argument("unknown preset '" + name + "' (expected exp1 or exp2)");
}

struct TrialRecord {
  std::string preset;
  std::size_t n_nodes = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kCfls;
  bool fading = false;
  std::size_t num_comm_edges = 0;
  std::size_t forest_count = 0;
  std::size_t num_slots = 0;
  double spatial_reuse = 0.0;
};

/// Seed for one (preset, n, trial) cell; every algorithm in the cell shares it.
inline std::uint64_t trial_seed(std::uint64_t master, const std::string& preset, std::size_t n,
                                std::size_t trial) {
  return hash_combine(hash_combine(hash_combine(master, preset), n), trial);
}
inline std::uint64_t labeling_seed(std::uint64_t trial) { return hash_combine(trial, "label"); }
inline std::uint64_t fading_seed(std::uint64_t trial) { return hash_combine(trial, "fade"); }

/// Runs one (preset, n, trial) cell: one network, every algorithm with the
/// same labeling seed, and when fading is configured one gain draw shared
/// by all algorithms and applied to the already computed schedules.
inline std::vector<TrialRecord> run_trial(const ExperimentPreset& preset,
                                          const std::vector<Algorithm>& algorithms,
                                          std::uint64_t master_seed, std::size_t n,
                                          std::size_t trial) {
  const RadioParams rp = preset.radio();
  const std::uint64_t seed = trial_seed(master_seed, preset.name, n, trial);
  std::vector<TrialRecord> out;
  try {
    Rng net_rng(seed);
    const Network net = generate_network(n, preset.radius, net_rng);
    const TwoTierGraph g = build_two_tier_graph(net, rp);
    const std::size_t forests = decompose_into_oriented_forests(g).undirected_forests;
    std::optional<GainMatrix> gains;
    if (preset.fading) {
      Rng fade_rng(fading_seed(seed));
      gains = sample_gains(fade_rng, n, *preset.fading);
    }
    for (Algorithm a : algorithms) {
      Rng label_rng(labeling_seed(seed));
      const Schedule s = run_scheduler(a, net, g, rp, label_rng);
      TrialRecord rec{preset.name, n, trial, seed, a, false, g.comm_edges().size(), forests,
                      s.num_slots(), 0.0};
      if (!s.empty()) rec.spatial_reuse = spatial_reuse(net, s, rp);
      out.push_back(rec);
      if (gains) {
        rec.fading = true;
        rec.spatial_reuse = s.empty() ? 0.0 : spatial_reuse(net, s, rp, &*gains);
        out.push_back(rec);
      }
    }
  } catch (const std::exception& e) {
    throw std::runtime_error("trial failed (preset " + preset.name + ", n=" + std::to_string(n) +
                             ", trial " + std::to_string(trial) + ", seed " +
                             std::to_string(seed) + "): " + e.what());
  }
  return out;
}

/// Records ordered by (n, trial, algorithm, fading).
inline std::vector<TrialRecord> run_experiment(const ExperimentPreset& preset,
                                               const std::vector<Algorithm>& algorithms,
                                               std::uint64_t master_seed) {
  if (preset.node_counts.empty() ||
      !std::is_sorted(preset.node_counts.begin(), preset.node_counts.end())) {
    throw std::invalid_argument("run_experiment: node counts must be nonempty and ascending");
  }
  std::vector<TrialRecord> records;
  for (std::size_t n : preset.node_counts) {
    for (std::size_t t = 0; t < preset.trials; ++t) {
      auto cell = run_trial(preset, algorithms, master_seed, n, t);
      records.insert(records.end(), cell.begin(), cell.end());
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline constexpr const char* kCsvHeader =
    "preset,n_nodes,trial,seed,algorithm,fading,num_comm_edges,forest_count,num_slots,"
    "spatial_reuse";

/// Shortest round-trip decimal form.
inline std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, end);
}

inline void write_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.preset << ',' << r.n_nodes << ',' << r.trial << ',' << r.seed << ','
       << to_string(r.algorithm) << ',' << (r.fading ? "true" : "false") << ','
       << r.num_comm_edges << ',' << r.forest_count << ',' << r.num_slots << ','
       << format_double(r.spatial_reuse) << '\n';
  }
}

inline std::string to_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream os;
  write_csv(os, records);
  return os.str();
}

// ---------------------------------------------------------------------------
// Worked-example regression
// ---------------------------------------------------------------------------

struct PaperCheck {
  std::string name;
  std::string unit;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;

  bool passed() const { return std::abs(actual - expected) <= tolerance; }
};

struct PaperCheckReport {
  std::vector<PaperCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
};

/// Six collinear nodes where three protocol-compatible links interfere too much.
inline Network cumulative_interference_network() {
  return Network({{-360, 0}, {-450, 0}, {90, 0}, {0, 0}, {360, 0}, {450, 0}});
}

/// Four collinear nodes where two links conflict in the graph model yet
/// both succeed under SINR.
inline Network conservative_graph_network() {
  return Network({{0, 0}, {50, 0}, {220, 0}, {170, 0}});
}

inline PaperCheckReport run_paper_examples() {
  constexpr double kDbTol = 0.01;
  constexpr double kRangeTol = 0.05;
  PaperCheckReport report;
  const RadioParams exp1 = experiment1_preset().radio();
  const RadioParams exp2 = experiment2_preset().radio();

  auto sinr_db = [&](const Network& net, NodeId rx, NodeId tx, std::vector<NodeId> others) {
    return linear_to_db(sinr(rx, tx, others, net, exp1));
  };

  const Network six = cumulative_interference_network();
  report.checks.push_back({"six-node SINR at receiver 2", "dB", 21.26, sinr_db(six, 2, 1, {3, 5}), kDbTol});
  report.checks.push_back({"six-node SINR at receiver 4", "dB", 18.42, sinr_db(six, 4, 3, {1, 5}), kDbTol});
  report.checks.push_back({"six-node SINR at receiver 6", "dB", 19.74, sinr_db(six, 6, 5, {1, 3}), kDbTol});

  const Network four = conservative_graph_network();
  report.checks.push_back({"four-node SINR at receiver 2", "dB", 20.91, sinr_db(four, 2, 1, {3}), kDbTol});
  report.checks.push_back({"four-node SINR at receiver 4", "dB", 20.91, sinr_db(four, 4, 3, {1}), kDbTol});

  report.checks.push_back({"exp1 communication range", "m", 100.0, comm_range(exp1), kRangeTol});
  report.checks.push_back({"exp1 interference range", "m", 177.8, interference_range(exp1), kRangeTol});
  report.checks.push_back({"exp2 communication range", "m", 110.7, comm_range(exp2), kRangeTol});
  report.checks.push_back({"exp2 interference range", "m", 175.4, interference_range(exp2), kRangeTol});
  return report;
}

inline void print_paper_report(std::ostream& os, const PaperCheckReport& report) {
  for (const auto& c : report.checks) {
    char line[160];
    std::snprintf(line, sizeof line, "%-4s %-32s expected %8.2f %-2s actual %10.4f %-2s (tol %.2f)\n",
                  c.passed() ? "PASS" : "FAIL", c.name.c_str(), c.expected, c.unit.c_str(),
                  c.actual, c.unit.c_str(), c.tolerance);
    os << line;
  }
}

}  // namespace stdma
