#include "qal/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qal/rng.hpp"

namespace qal {

Gate Gate::one_qubit(std::string name, std::vector<double> params,
                     LogicalQubit target) {
  Gate g;
  g.kind = GateKind::OneQubit;
  g.name = std::move(name);
  g.params = std::move(params);
  g.target = target;
  return g;
}

Gate Gate::two_qubit(std::string name, LogicalQubit control,
                     LogicalQubit target) {
  Gate g;
  g.kind = GateKind::TwoQubit;
  g.name = std::move(name);
  g.control = control;
  g.target = target;
  return g;
}

Gate Gate::measure(LogicalQubit target, std::uint32_t classical_bit) {
  Gate g;
  g.kind = GateKind::Measure;
  g.target = target;
  g.classical_bit = classical_bit;
  return g;
}

std::vector<std::uint32_t> control_counts(const Circuit& circuit) {
  std::vector<std::uint32_t> counts(circuit.num_qubits, 0);
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::TwoQubit) ++counts[g.control];
  }
  return counts;
}

std::vector<LogicalQubit> qubit_order(const Circuit& circuit) {
  const auto counts = control_counts(circuit);
  std::vector<LogicalQubit> order(circuit.num_qubits);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](LogicalQubit a, LogicalQubit b) {
    if (counts[a] != counts[b]) return counts[a] > counts[b];
    return a < b;
  });
  return order;
}

Circuit generate_random_cnot_circuit(std::uint32_t num_qubits,
                                     std::uint32_t num_cnots,
                                     std::uint64_t seed) {
  if (num_qubits < 2) {
    throw std::invalid_argument(
        "random CNOT circuit needs at least two qubits");
  }
  Rng rng(seed);
  Circuit circuit;
  circuit.num_qubits = num_qubits;
  circuit.source_name =
      "q" + std::to_string(num_qubits) + "c" + std::to_string(num_cnots);
  circuit.gates.reserve(num_cnots);
  for (std::uint32_t i = 0; i < num_cnots; ++i) {
    const auto control = static_cast<LogicalQubit>(rng.below(num_qubits));
    auto target = static_cast<LogicalQubit>(rng.below(num_qubits - 1));
    if (target >= control) ++target;
    circuit.gates.push_back(Gate::two_qubit("cx", control, target));
  }
  return circuit;
}

}  // namespace qal
