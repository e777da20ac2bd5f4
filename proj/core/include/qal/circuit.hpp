#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qal {

/// Index of a qubit named in the program text.
using LogicalQubit = std::uint32_t;

/// Index of a hardware qubit on the device.
using PhysicalQubit = std::uint32_t;

enum class GateKind { OneQubit, TwoQubit, Measure };

/// One program instruction over logical qubits.
///
/// OneQubit gates keep their textual name and real-valued parameters;
/// TwoQubit gates are always CNOTs in the supported subset; Measure pairs a
/// qubit with a classical bit.
struct Gate {
  GateKind kind = GateKind::OneQubit;
  std::string name;
  std::vector<double> params;
  LogicalQubit control = 0;  // TwoQubit only
  LogicalQubit target = 0;
  std::uint32_t classical_bit = 0;  // Measure only

  static Gate one_qubit(std::string name, std::vector<double> params,
                        LogicalQubit target);
  static Gate two_qubit(std::string name, LogicalQubit control,
                        LogicalQubit target);
  static Gate measure(LogicalQubit target, std::uint32_t classical_bit);

  bool operator==(const Gate&) const = default;
};

/// Gate-list program over logical qubits, in source order.
struct Circuit {
  std::uint32_t num_qubits = 0;
  std::vector<Gate> gates;
  std::string source_name;
};

/// Number of two-qubit gates in which each qubit appears as the control.
/// Indexed by qubit; qubits never used as a control map to 0.
std::vector<std::uint32_t> control_counts(const Circuit& circuit);

/// Qubits from most to least constrained: descending control count, ties
/// broken by ascending index. Always a permutation of 0..num_qubits-1.
std::vector<LogicalQubit> qubit_order(const Circuit& circuit);

/// Circuit of `num_cnots` CNOTs whose (control, target) pairs are drawn
/// uniformly from ordered pairs of distinct qubits. Pure function of its
/// arguments. Requires num_qubits >= 2.
Circuit generate_random_cnot_circuit(std::uint32_t num_qubits,
                                     std::uint32_t num_cnots,
                                     std::uint64_t seed);

}  // namespace qal
