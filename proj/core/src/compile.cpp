#include "qal/compile.hpp"

#include <cmath>
#include <stdexcept>

#include "qal/errors.hpp"

namespace qal {

namespace {

// Exchange the occupants of adjacent slots a and b in a running map.
void apply_swap(std::vector<std::int32_t>& l2p, std::vector<std::int32_t>& p2l,
                PhysicalQubit a, PhysicalQubit b) {
  const std::int32_t la = p2l[a];
  const std::int32_t lb = p2l[b];
  if (la >= 0) l2p[la] = static_cast<std::int32_t>(b);
  if (lb >= 0) l2p[lb] = static_cast<std::int32_t>(a);
  p2l[a] = lb;
  p2l[b] = la;
}

Allocation allocation_from_l2p(const std::vector<std::int32_t>& l2p,
                               std::uint32_t num_physical) {
  Allocation a(static_cast<std::uint32_t>(l2p.size()), num_physical);
  for (std::uint32_t l = 0; l < l2p.size(); ++l) {
    if (l2p[l] >= 0) a = extend(a, l, static_cast<PhysicalQubit>(l2p[l]));
  }
  return a;
}

}  // namespace

CompiledCircuit insert_swaps(const Circuit& circuit, const DeviceModel& device,
                             const Allocation& full,
                             const SwapPathTable& table) {
  if (!full.is_full() || full.num_logical() != circuit.num_qubits ||
      full.num_physical() != device.num_qubits()) {
    throw std::invalid_argument("insert_swaps requires a full allocation "
                                "matching circuit and device");
  }
  CompiledCircuit out;
  out.initial_map = full;
  out.source_name = circuit.source_name;

  std::vector<std::int32_t> l2p = full.logical_to_physical();
  std::vector<std::int32_t> p2l(device.num_qubits(), -1);
  for (std::uint32_t l = 0; l < l2p.size(); ++l) p2l[l2p[l]] = l;

  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::OneQubit: {
        PhysicalGate pg;
        pg.kind = PhysicalGateKind::OneQubit;
        pg.name = g.name;
        pg.params = g.params;
        pg.q0 = static_cast<PhysicalQubit>(l2p[g.target]);
        out.physical_gates.push_back(std::move(pg));
        break;
      }
      case GateKind::Measure:
        out.measures.emplace_back(static_cast<PhysicalQubit>(l2p[g.target]),
                                  g.classical_bit);
        break;
      case GateKind::TwoQubit: {
        PhysicalQubit pc = static_cast<PhysicalQubit>(l2p[g.control]);
        const PhysicalQubit pt = static_cast<PhysicalQubit>(l2p[g.target]);
        if (!device.adjacent(pc, pt)) {
          if (!table.reachable(pc, pt)) {
            throw InfeasibleError("qubits " + std::to_string(pc) + " and " +
                                  std::to_string(pt) +
                                  " are not connected on " + device.name());
          }
          // Swap the control along the route until the pair is adjacent
          // (possibly before the route's end, through an off-route edge).
          while (!device.adjacent(pc, pt)) {
            const PhysicalQubit nxt = table.next_hop(pc, pt);
            PhysicalGate sw;
            sw.kind = PhysicalGateKind::Swap;
            sw.name = "swap";
            sw.q0 = pc;
            sw.q1 = nxt;
            out.physical_gates.push_back(std::move(sw));
            apply_swap(l2p, p2l, pc, nxt);
            pc = nxt;
          }
        }
        PhysicalGate pg;
        pg.kind = PhysicalGateKind::TwoQubit;
        pg.name = g.name;
        pg.q0 = pc;
        pg.q1 = pt;
        out.physical_gates.push_back(std::move(pg));
        break;
      }
    }
  }
  out.final_map = allocation_from_l2p(l2p, device.num_qubits());
  return out;
}

double total_fidelity(const CompiledCircuit& compiled,
                      const DeviceModel& device) {
  double product = 1.0;
  for (const PhysicalGate& g : compiled.physical_gates) {
    switch (g.kind) {
      case PhysicalGateKind::OneQubit:
        product *= device.qubit_fidelity1(g.q0);
        break;
      case PhysicalGateKind::TwoQubit: {
        const double f = device.edge_fidelity(g.q0, g.q1);
        if (f < 0.0) {
          throw std::invalid_argument("two-qubit gate off the coupling graph");
        }
        product *= f;
        break;
      }
      case PhysicalGateKind::Swap: {
        const double f = device.edge_fidelity(g.q0, g.q1);
        if (f < 0.0) {
          throw std::invalid_argument("swap off the coupling graph");
        }
        product *= f * f * f;
        break;
      }
    }
  }
  return product;
}

double fidelity_bound(const Circuit& circuit, const DeviceModel& device,
                      const Allocation& a, const SwapPathTable& table) {
  if (a.num_logical() != circuit.num_qubits ||
      a.num_physical() != device.num_qubits()) {
    throw std::invalid_argument("allocation does not match circuit/device");
  }
  const BestGateFidelities best = best_gate_fidelities(device);
  const double log_best1 = std::log(best.best1);
  const bool has_best2 = best.best2.has_value();
  const double log_best2 = has_best2 ? std::log(*best.best2) : 0.0;

  std::vector<std::int32_t> l2p = a.logical_to_physical();
  std::vector<std::int32_t> p2l(device.num_qubits(), -1);
  for (std::uint32_t l = 0; l < l2p.size(); ++l) {
    if (l2p[l] >= 0) p2l[l2p[l]] = l;
  }

  double log_sum = 0.0;
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::Measure:
        break;
      case GateKind::OneQubit:
        log_sum += l2p[g.target] >= 0
                       ? std::log(device.qubit_fidelity1(
                             static_cast<PhysicalQubit>(l2p[g.target])))
                       : log_best1;
        break;
      case GateKind::TwoQubit: {
        const std::int32_t c = l2p[g.control];
        const std::int32_t t = l2p[g.target];
        if (c < 0 || t < 0) {
          if (!has_best2) return 0.0;  // edgeless device cannot host the gate
          log_sum += log_best2;
          break;
        }
        PhysicalQubit pc = static_cast<PhysicalQubit>(c);
        const PhysicalQubit pt = static_cast<PhysicalQubit>(t);
        if (!device.adjacent(pc, pt) && !table.reachable(pc, pt)) return 0.0;
        while (!device.adjacent(pc, pt)) {
          const PhysicalQubit nxt = table.next_hop(pc, pt);
          log_sum += 3.0 * std::log(device.edge_fidelity(pc, nxt));
          apply_swap(l2p, p2l, pc, nxt);
          pc = nxt;
        }
        log_sum += std::log(device.edge_fidelity(pc, pt));
        break;
      }
    }
  }
  return std::exp(log_sum);
}

double edge_weight(double parent_bound, double child_bound) {
  if (child_bound > parent_bound + 1e-12) {
    throw std::logic_error("fidelity bound increased under extension");
  }
  return child_bound >= parent_bound ? 0.0 : parent_bound - child_bound;
}

std::uint32_t swap_count(const CompiledCircuit& compiled) {
  std::uint32_t count = 0;
  for (const PhysicalGate& g : compiled.physical_gates) {
    if (g.kind == PhysicalGateKind::Swap) ++count;
  }
  return count;
}

std::pair<std::uint64_t, std::uint64_t> gate_counts(
    const CompiledCircuit& compiled) {
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  for (const PhysicalGate& g : compiled.physical_gates) {
    switch (g.kind) {
      case PhysicalGateKind::OneQubit: ++n1; break;
      case PhysicalGateKind::TwoQubit: ++n2; break;
      case PhysicalGateKind::Swap: n2 += 3; break;
    }
  }
  return {n1, n2};
}

}  // namespace qal
