#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "stdma/core.hpp"

namespace stdma {

/// Path-loss received power p / d^alpha.
inline double received_power(double p, double d, double alpha) {
  if (!(d > 0.0)) {
    throw std::invalid_argument("received_power: distance must be positive");
  }
  return p / std::pow(d, alpha);
}

/// SINR at `rx` for the signal from `tx`, with every node in `other_txs`
/// transmitting concurrently. Linear ratio.
inline double sinr(NodeId rx, NodeId tx, std::span<const NodeId> other_txs, const Network& net,
                   const RadioParams& rp) {
  if (tx == rx) throw std::invalid_argument("sinr: tx and rx must differ");
  const double p = rp.power_watts();
  const double signal = received_power(p, net.distance(tx, rx), rp.alpha());
  double interference = 0.0;
  for (NodeId k : other_txs) {
    if (k == rx || k == tx) {
      throw std::invalid_argument("sinr: interferer coincides with the link endpoints");
    }
    interference += received_power(p, net.distance(k, rx), rp.alpha());
  }
  return signal / (rp.noise_watts() + interference);
}

inline double snr(NodeId tx, NodeId rx, const Network& net, const RadioParams& rp) {
  return sinr(rx, tx, {}, net, rp);
}

/// Largest distance at which SNR alone meets the communication threshold.
inline double comm_range(const RadioParams& rp) {
  return std::pow(rp.power_watts() / (rp.noise_watts() * rp.gamma_c()), 1.0 / rp.alpha());
}

/// Distance beyond which a lone interferer's SNR falls under gamma_i.
inline double interference_range(const RadioParams& rp) {
  return std::pow(rp.power_watts() / (rp.noise_watts() * rp.gamma_i()), 1.0 / rp.alpha());
}

// ---------------------------------------------------------------------------
// Fading and shadowing
// ---------------------------------------------------------------------------

struct FadingParams {
  double sigma_v_sq = 1.0;  // mean of the exponential power gain
  double sigma_w = 1.0;     // std of the Gaussian shadowing exponent

  FadingParams() = default;
  FadingParams(double v_sq, double w) : sigma_v_sq(v_sq), sigma_w(w) {
    if (!(v_sq > 0.0) || !(w > 0.0) || !std::isfinite(v_sq) || !std::isfinite(w)) {
      throw std::invalid_argument("FadingParams: both parameters must be positive");
    }
  }
};

/// Per ordered node pair Rayleigh power gain `v` and shadowing exponent `w`.
/// The path (k -> l) is scaled by v(k,l) * 10^w(k,l). Diagonal entries are
/// unused and hold v = 1, w = 0.
class GainMatrix {
 public:
  explicit GainMatrix(std::size_t n) : n_(n), v_(n * n, 1.0), w_(n * n, 0.0) {}

  std::size_t size() const { return n_; }

  double v(NodeId k, NodeId l) const { return v_.at(index(k, l)); }
  double w(NodeId k, NodeId l) const { return w_.at(index(k, l)); }

  void set(NodeId k, NodeId l, double v, double w) {
    if (!(v >= 0.0) || !std::isfinite(v) || !std::isfinite(w)) {
      throw std::invalid_argument("GainMatrix: v must be finite and >= 0, w finite");
    }
    v_.at(index(k, l)) = v;
    w_.at(index(k, l)) = w;
  }

  double factor(NodeId k, NodeId l) const {
    const std::size_t i = index(k, l);
    return v_[i] * std::pow(10.0, w_[i]);
  }

 private:
  std::size_t index(NodeId k, NodeId l) const {
    if (k < 1 || l < 1 || k > n_ || l > n_) {
      throw std::out_of_range("GainMatrix: node id out of range");
    }
    return (k - 1) * n_ + (l - 1);
  }

  std::size_t n_;
  std::vector<double> v_;
  std::vector<double> w_;
};

/// Draws all v(k,l) first (row-major over ordered pairs, k != l), then all
/// w(k,l) in the same order.
inline GainMatrix sample_gains(Rng& rng, std::size_t n, const FadingParams& fp) {
  if (n < 2) throw std::invalid_argument("sample_gains: need at least two nodes");
  GainMatrix g(n);
  std::vector<double> vs;
  vs.reserve(n * (n - 1));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = 1; l <= n; ++l) {
      if (k != l) vs.push_back(rng.exponential(fp.sigma_v_sq));
    }
  }
  std::size_t i = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = 1; l <= n; ++l) {
      if (k == l) continue;
      g.set(static_cast<NodeId>(k), static_cast<NodeId>(l), vs[i++], rng.normal(0.0, fp.sigma_w));
    }
  }
  return g;
}

/// SINR with every path power multiplied by v * 10^w (the exponent is used
/// as is, not divided by ten).
inline double faded_sinr(NodeId rx, NodeId tx, std::span<const NodeId> other_txs,
                         const Network& net, const RadioParams& rp, const GainMatrix& gains) {
  if (tx == rx) throw std::invalid_argument("faded_sinr: tx and rx must differ");
  const double p = rp.power_watts();
  const double signal = received_power(p, net.distance(tx, rx), rp.alpha()) * gains.factor(tx, rx);
  double interference = 0.0;
  for (NodeId k : other_txs) {
    if (k == rx || k == tx) {
      throw std::invalid_argument("faded_sinr: interferer coincides with the link endpoints");
    }
    interference += received_power(p, net.distance(k, rx), rp.alpha()) * gains.factor(k, rx);
  }
  return signal / (rp.noise_watts() + interference);
}

}  // namespace stdma
