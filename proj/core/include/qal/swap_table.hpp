#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "qal/device.hpp"

namespace qal {

/// All-pairs optimal SWAP routes over the coupling graph.
///
/// For every ordered pair (u, v) the table holds the route maximizing the
/// product of per-edge SWAP fidelities (fidelity2 cubed). Internally the
/// routes are shortest paths under the additive weight -ln(swap_fidelity);
/// products are reconstructed by exponentiation on access. Zero-fidelity
/// edges are excluded from routes entirely.
class SwapPathTable {
 public:
  bool reachable(PhysicalQubit u, PhysicalQubit v) const {
    return log_cost_[idx(u, v)] < kUnreachable;
  }

  /// Product of swap_fidelity over the route's edges; 1 for u == v,
  /// 0 when unreachable.
  double swap_fidelity_product(PhysicalQubit u, PhysicalQubit v) const {
    const double c = log_cost_[idx(u, v)];
    return c < kUnreachable ? std::exp(-c) : 0.0;
  }

  /// Additive route cost -ln(product); +inf when unreachable.
  double log_cost(PhysicalQubit u, PhysicalQubit v) const {
    const double c = log_cost_[idx(u, v)];
    return c < kUnreachable ? c : std::numeric_limits<double>::infinity();
  }

  /// Route edges from u toward v in traversal order. Empty for u == v and
  /// for unreachable pairs.
  std::vector<std::pair<PhysicalQubit, PhysicalQubit>> path_edges(
      PhysicalQubit u, PhysicalQubit v) const;

  /// First hop on the route from u toward v. Requires reachable(u, v)
  /// and u != v.
  PhysicalQubit next_hop(PhysicalQubit u, PhysicalQubit v) const {
    return next_[idx(u, v)];
  }

  std::uint32_t num_qubits() const { return n_; }

 private:
  friend SwapPathTable build_swap_table(const DeviceModel& device);

  std::size_t idx(PhysicalQubit u, PhysicalQubit v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  static constexpr double kUnreachable = std::numeric_limits<double>::max();

  std::uint32_t n_ = 0;
  std::vector<double> log_cost_;
  std::vector<PhysicalQubit> next_;
};

/// Floyd-Warshall over the device's coupling graph, O(n^3).
SwapPathTable build_swap_table(const DeviceModel& device);

}  // namespace qal
