#include "qal/swap_table.hpp"

#include <cmath>

namespace qal {

SwapPathTable build_swap_table(const DeviceModel& device) {
  const std::uint32_t n = device.num_qubits();
  SwapPathTable table;
  table.n_ = n;
  table.log_cost_.assign(static_cast<std::size_t>(n) * n,
                         SwapPathTable::kUnreachable);
  table.next_.assign(static_cast<std::size_t>(n) * n, 0);

  for (std::uint32_t u = 0; u < n; ++u) {
    table.log_cost_[table.idx(u, u)] = 0.0;
    table.next_[table.idx(u, u)] = u;
  }
  for (const CouplingEdge& e : device.edges()) {
    if (e.fidelity2 <= 0.0) continue;  // zero-fidelity edges carry no route
    const double w = -3.0 * std::log(e.fidelity2);
    table.log_cost_[table.idx(e.a, e.b)] = w;
    table.log_cost_[table.idx(e.b, e.a)] = w;
    table.next_[table.idx(e.a, e.b)] = e.b;
    table.next_[table.idx(e.b, e.a)] = e.a;
  }

  // Floyd-Warshall; strict improvement keeps routes deterministic.
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::uint32_t i = 0; i < n; ++i) {
      const double dik = table.log_cost_[table.idx(i, k)];
      if (dik >= SwapPathTable::kUnreachable) continue;
      for (std::uint32_t j = 0; j < n; ++j) {
        const double dkj = table.log_cost_[table.idx(k, j)];
        if (dkj >= SwapPathTable::kUnreachable) continue;
        const double through = dik + dkj;
        if (through < table.log_cost_[table.idx(i, j)]) {
          table.log_cost_[table.idx(i, j)] = through;
          table.next_[table.idx(i, j)] = table.next_[table.idx(i, k)];
        }
      }
    }
  }
  return table;
}

std::vector<std::pair<PhysicalQubit, PhysicalQubit>> SwapPathTable::path_edges(
    PhysicalQubit u, PhysicalQubit v) const {
  std::vector<std::pair<PhysicalQubit, PhysicalQubit>> edges;
  if (u == v || !reachable(u, v)) return edges;
  PhysicalQubit cur = u;
  while (cur != v) {
    const PhysicalQubit nxt = next_[idx(cur, v)];
    edges.emplace_back(cur, nxt);
    cur = nxt;
  }
  return edges;
}

}  // namespace qal
