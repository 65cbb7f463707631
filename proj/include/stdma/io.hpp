#pragma once

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stdma/core.hpp"
#include "stdma/graph.hpp"
#include "stdma/verifier.hpp"

// JSON file formats:
//   network:  {"nodes": [{"id": 1, "x": 0.0, "y": 0.0}, ...]}   (meters)
//   params:   {"power_mw", "noise_dbm", "gamma_c_db", "gamma_i_db", "alpha"}
//   schedule: {"slots": [[{"tx": 1, "rx": 2}, ...], ...]}
//   report:   {"spatial_reuse", "num_slots", "violations": [...], "slots": [...]}

namespace stdma::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path + "': " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

// -- network ---------------------------------------------------------------

inline json network_to_json(const Network& net) {
  json nodes = json::array();
  for (std::size_t i = 0; i < net.size(); ++i) {
    const Point& p = net.points()[i];
    nodes.push_back({{"id", i + 1}, {"x", p.x}, {"y", p.y}});
  }
  return {{"nodes", nodes}};
}

/// Ids must be exactly 1..N (any order in the file).
inline Network network_from_json(const json& j) {
  try {
    const auto& nodes = j.at("nodes");
    if (!nodes.is_array()) throw FormatError("network: 'nodes' must be an array");
    const std::size_t n = nodes.size();
    std::vector<Point> pts(n);
    std::vector<bool> seen(n, false);
    for (const auto& node : nodes) {
      const auto id = node.at("id").get<long long>();
      if (id < 1 || static_cast<std::size_t>(id) > n || seen[id - 1]) {
        throw FormatError("network: node ids must be unique and cover 1.." + std::to_string(n) +
                          " (bad id " + std::to_string(id) + ")");
      }
      seen[id - 1] = true;
      pts[id - 1] = Point{node.at("x").get<double>(), node.at("y").get<double>()};
    }
    return Network(std::move(pts));
  } catch (const json::exception& e) {
    throw FormatError(std::string("network: ") + e.what());
  }
}

// -- params ----------------------------------------------------------------

inline RadioParams params_from_json(const json& j) {
  try {
    return RadioParams::from_config(j.at("power_mw").get<double>(), j.at("noise_dbm").get<double>(),
                                    j.at("gamma_c_db").get<double>(),
                                    j.at("gamma_i_db").get<double>(), j.at("alpha").get<double>());
  } catch (const json::exception& e) {
    throw FormatError(std::string("params: ") + e.what());
  }
}

inline json params_to_json(const RadioParams& rp) {
  return {{"power_mw", rp.power_watts() * 1000.0},
          {"noise_dbm", watts_to_dbm(rp.noise_watts())},
          {"gamma_c_db", linear_to_db(rp.gamma_c())},
          {"gamma_i_db", linear_to_db(rp.gamma_i())},
          {"alpha", rp.alpha()}};
}

// -- schedule --------------------------------------------------------------

inline json schedule_to_json(const Schedule& s) {
  json slots = json::array();
  for (const Slot& slot : s.slots()) {
    json links = json::array();
    for (const Link& l : slot) links.push_back({{"tx", l.tx}, {"rx", l.rx}});
    slots.push_back(std::move(links));
  }
  return {{"slots", slots}};
}

/// Node ids are not range-checked here; the verifier reports bad ids.
inline Schedule schedule_from_json(const json& j) {
  try {
    std::vector<Slot> slots;
    for (const auto& slot : j.at("slots")) {
      Slot links;
      for (const auto& l : slot) {
        links.push_back(Link{l.at("tx").get<NodeId>(), l.at("rx").get<NodeId>()});
      }
      slots.push_back(std::move(links));
    }
    return Schedule(std::move(slots));
  } catch (const json::exception& e) {
    throw FormatError(std::string("schedule: ") + e.what());
  }
}

// -- report ----------------------------------------------------------------

inline json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json report_to_json(const EvaluationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    json links = json::array();
    for (const Link& l : v.links) links.push_back({{"tx", l.tx}, {"rx", l.rx}});
    violations.push_back({{"kind", to_string(v.kind)},
                          {"slot", v.slot ? json(*v.slot) : json(nullptr)},
                          {"links", links},
                          {"detail", v.detail}});
  }
  json slots = json::array();
  for (const auto& slot : r.slots) {
    json outcomes = json::array();
    for (const auto& o : slot) {
      outcomes.push_back({{"tx", o.link.tx},
                          {"rx", o.link.rx},
                          {"sinr_db", finite_or_null(o.sinr_db)},
                          {"success", o.success}});
    }
    slots.push_back(std::move(outcomes));
  }
  return {{"spatial_reuse", r.spatial_reuse},
          {"num_slots", r.num_slots},
          {"violations", violations},
          {"slots", slots}};
}

// -- graph dump ------------------------------------------------------------

/// One directed edge per line: "tx rx kind", kind C (communication) or I
/// (interference). Communication edges first, each block sorted by (tx, rx).
inline std::string graph_to_edge_list(const TwoTierGraph& g) {
  std::ostringstream os;
  for (const Link& l : g.comm_edges()) os << l.tx << ' ' << l.rx << " C\n";
  for (const Link& l : g.intf_edges()) os << l.tx << ' ' << l.rx << " I\n";
  return os.str();
}

}  // namespace stdma::io
