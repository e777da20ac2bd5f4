#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qal/allocation.hpp"
#include "qal/circuit.hpp"
#include "qal/device.hpp"
#include "qal/swap_table.hpp"

namespace qal {

enum class PhysicalGateKind { OneQubit, TwoQubit, Swap };

/// Instruction over physical qubits. Swaps are kept as explicit markers;
/// they expand to three CNOTs on the same edge at emission time.
struct PhysicalGate {
  PhysicalGateKind kind = PhysicalGateKind::OneQubit;
  std::string name;
  std::vector<double> params;
  PhysicalQubit q0 = 0;  // target for OneQubit, control for TwoQubit
  PhysicalQubit q1 = 0;

  bool operator==(const PhysicalGate&) const = default;
};

/// Program routed onto a device: relabeled gates plus the SWAPs required
/// by connectivity, with the maps before and after routing.
struct CompiledCircuit {
  std::vector<PhysicalGate> physical_gates;
  Allocation initial_map;
  Allocation final_map;
  std::vector<std::pair<PhysicalQubit, std::uint32_t>> measures;
  std::string source_name;
};

/// Routes `circuit` under the full allocation `full`, inserting SWAPs only
/// where a two-qubit gate's endpoints are not adjacent, each chain emitted
/// immediately before the gate that needs it.
///
/// A non-adjacent pair is routed along the table's optimal path for
/// (control slot, target slot): the control is swapped along the path until
/// one hop short of the target, and the running map keeps every
/// displacement permanently. Throws InfeasibleError when a pair is
/// unreachable.
CompiledCircuit insert_swaps(const Circuit& circuit, const DeviceModel& device,
                             const Allocation& full,
                             const SwapPathTable& table);

/// Product over all physical gates of their fidelities: fidelity2 per
/// two-qubit gate, fidelity2 cubed per SWAP, the host's fidelity1 per
/// single-qubit gate. Measures are excluded. Empty circuits yield 1.
double total_fidelity(const CompiledCircuit& compiled,
                      const DeviceModel& device);

/// Optimistic total fidelity of the partial allocation `a`: gates between
/// mapped qubits are charged their real routing cost (advancing a running
/// map exactly as insert_swaps would), gates touching unmapped qubits are
/// charged the device's best fidelity of matching arity. Equals
/// total_fidelity of the routed circuit when `a` is full.
double fidelity_bound(const Circuit& circuit, const DeviceModel& device,
                      const Allocation& a, const SwapPathTable& table);

/// Weight of the search edge from a parent allocation to a child extending
/// it by one mapping: parent bound minus child bound, never negative.
/// Throws std::logic_error if the child bound exceeds the parent bound by
/// more than 1e-12.
double edge_weight(double parent_bound, double child_bound);

/// Number of SWAP markers in a compiled circuit.
std::uint32_t swap_count(const CompiledCircuit& compiled);

/// Physical gate counts (n1, n2); each SWAP counts as three two-qubit
/// gates.
std::pair<std::uint64_t, std::uint64_t> gate_counts(
    const CompiledCircuit& compiled);

}  // namespace qal
