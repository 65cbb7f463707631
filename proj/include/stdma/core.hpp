#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stdma {

// ---------------------------------------------------------------------------
// Units. Everything inside the library is SI: watts, meters, linear ratios.
// ---------------------------------------------------------------------------

namespace detail {
inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + ": non-finite input");
  }
}
}  // namespace detail

inline double db_to_linear(double x_db) {
  detail::require_finite(x_db, "db_to_linear");
  return std::pow(10.0, x_db / 10.0);
}

inline double linear_to_db(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("linear_to_db: input must be positive and finite");
  }
  return 10.0 * std::log10(x);
}

inline double dbm_to_watts(double x_dbm) {
  detail::require_finite(x_dbm, "dbm_to_watts");
  return std::pow(10.0, x_dbm / 10.0) / 1000.0;
}

inline double watts_to_dbm(double watts) { return linear_to_db(watts * 1000.0); }

// ---------------------------------------------------------------------------
// RadioParams
// ---------------------------------------------------------------------------

/// Uniform transmit power, noise power and the two SINR thresholds.
///
/// `gamma_c` is the communication threshold and `gamma_i` the interference
/// threshold; 0 < gamma_i < gamma_c must hold. The noise term is a power in
/// watts added to the interference sum.
class RadioParams {
 public:
  RadioParams(double power_watts, double noise_watts, double gamma_c_linear,
              double gamma_i_linear, double alpha)
      : power_watts_(power_watts),
        noise_watts_(noise_watts),
        gamma_c_(gamma_c_linear),
        gamma_i_(gamma_i_linear),
        alpha_(alpha) {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(power_watts_) || !positive(noise_watts_) || !positive(gamma_c_) ||
        !positive(gamma_i_) || !positive(alpha_)) {
      throw std::invalid_argument("RadioParams: all fields must be positive and finite");
    }
    if (!(gamma_i_ < gamma_c_)) {
      throw std::invalid_argument("RadioParams: interference threshold must be below the "
                                  "communication threshold");
    }
  }

  /// Builds from the configuration units used by params files.
  static RadioParams from_config(double power_mw, double noise_dbm, double gamma_c_db,
                                 double gamma_i_db, double alpha) {
    detail::require_finite(power_mw, "power_mw");
    detail::require_finite(alpha, "alpha");
    return RadioParams(power_mw / 1000.0, dbm_to_watts(noise_dbm), db_to_linear(gamma_c_db),
                       db_to_linear(gamma_i_db), alpha);
  }

  double power_watts() const { return power_watts_; }
  double noise_watts() const { return noise_watts_; }
  double gamma_c() const { return gamma_c_; }
  double gamma_i() const { return gamma_i_; }
  double alpha() const { return alpha_; }

 private:
  double power_watts_;
  double noise_watts_;
  double gamma_c_;
  double gamma_i_;
  double alpha_;
};

// ---------------------------------------------------------------------------
// Network
// ---------------------------------------------------------------------------

/// Node ids are 1-based everywhere in the public API.
using NodeId = std::uint32_t;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Static node placement with a precomputed Euclidean distance matrix.
class Network {
 public:
  explicit Network(std::vector<Point> points) : points_(std::move(points)) {
    const std::size_t n = points_.size();
    if (n < 2) {
      throw std::invalid_argument("Network: at least two nodes are required");
    }
    for (const auto& p : points_) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw std::invalid_argument("Network: non-finite coordinate");
      }
    }
    distances_.assign(n * n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double d = std::hypot(points_[j].x - points_[k].x, points_[j].y - points_[k].y);
        if (d == 0.0) {
          throw std::invalid_argument("Network: nodes " + std::to_string(j + 1) + " and " +
                                      std::to_string(k + 1) + " share identical coordinates");
        }
        distances_[j * n + k] = d;
        distances_[k * n + j] = d;
      }
    }
  }

  std::size_t size() const { return points_.size(); }
  bool contains(NodeId id) const { return id >= 1 && id <= points_.size(); }
  const Point& position(NodeId id) const { return points_.at(id - 1); }
  const std::vector<Point>& points() const { return points_; }

  double distance(NodeId j, NodeId k) const {
    if (!contains(j) || !contains(k)) {
      throw std::out_of_range("Network::distance: unknown node id");
    }
    return distances_[(j - 1) * points_.size() + (k - 1)];
  }

 private:
  std::vector<Point> points_;
  std::vector<double> distances_;
};

inline Network build_network(std::vector<Point> coords) { return Network(std::move(coords)); }

// ---------------------------------------------------------------------------
// Links and schedules
// ---------------------------------------------------------------------------

struct Link {
  NodeId tx = 0;
  NodeId rx = 0;

  friend auto operator<=>(const Link&, const Link&) = default;
};

inline Link make_link(NodeId tx, NodeId rx) {
  if (tx == rx) {
    throw std::invalid_argument("Link: transmitter and receiver must differ");
  }
  return Link{tx, rx};
}

inline Link reversed(Link l) { return Link{l.rx, l.tx}; }

using Slot = std::vector<Link>;

/// Ordered slots of concurrently active links. Empty slots are never stored.
class Schedule {
 public:
  Schedule() = default;
  explicit Schedule(std::vector<Slot> slots) {
    for (auto& s : slots) {
      if (!s.empty()) slots_.push_back(std::move(s));
    }
  }

  std::size_t num_slots() const { return slots_.size(); }
  bool empty() const { return slots_.empty(); }
  const std::vector<Slot>& slots() const { return slots_; }
  const Slot& slot(std::size_t i) const { return slots_.at(i); }

  std::size_t num_links() const {
    std::size_t total = 0;
    for (const auto& s : slots_) total += s.size();
    return total;
  }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<Slot> slots_;
};

// ---------------------------------------------------------------------------
// Deterministic randomness
// ---------------------------------------------------------------------------

/// Seeded pseudorandom source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. All distributions are derived here rather than through
/// <random>'s distribution classes, whose algorithms are implementation
/// defined, so integer draws and uniform doubles are identical on every
/// conforming platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t uniform_index(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::uniform_index: bound must be positive");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
      r = next_u64();
    } while (r >= limit);
    return r % bound;
  }

  double exponential(double mean) { return -mean * std::log1p(-uniform01()); }

  // Box-Muller; one variate per call, the sine branch is discarded.
  double normal(double mean, double stddev) {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    return mean + stddev * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Seed derivation
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return splitmix64(seed ^ splitmix64(value));
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::string_view tag) {
  return hash_combine(seed, fnv1a64(tag));
}

}  // namespace stdma
