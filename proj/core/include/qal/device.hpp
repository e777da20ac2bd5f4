#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qal/circuit.hpp"

namespace qal {

struct PhysicalQubitInfo {
  PhysicalQubit index = 0;
  double fidelity1 = 1.0;
  std::optional<double> readout_fidelity;
};

/// Undirected coupling between two physical qubits, stored with a < b.
struct CouplingEdge {
  PhysicalQubit a = 0;
  PhysicalQubit b = 0;
  double fidelity2 = 1.0;
};

/// Coupling graph of a device with calibrated gate fidelities.
class DeviceModel {
 public:
  DeviceModel() = default;

  /// Validates and normalizes: edges reordered to a < b, self-loops,
  /// duplicates, dangling endpoints and out-of-range fidelities rejected.
  DeviceModel(std::string name, std::vector<PhysicalQubitInfo> qubits,
              std::vector<CouplingEdge> edges);

  const std::string& name() const { return name_; }
  std::uint32_t num_qubits() const {
    return static_cast<std::uint32_t>(qubits_.size());
  }
  const std::vector<PhysicalQubitInfo>& qubits() const { return qubits_; }
  const std::vector<CouplingEdge>& edges() const { return edges_; }

  bool adjacent(PhysicalQubit a, PhysicalQubit b) const {
    return edge_fidelity(a, b) >= 0.0;
  }

  /// Two-qubit gate fidelity of the edge {a, b}, or -1 if not coupled.
  double edge_fidelity(PhysicalQubit a, PhysicalQubit b) const {
    return fid2_[static_cast<std::size_t>(a) * qubits_.size() + b];
  }

  double qubit_fidelity1(PhysicalQubit q) const {
    return qubits_[q].fidelity1;
  }

 private:
  std::string name_;
  std::vector<PhysicalQubitInfo> qubits_;
  std::vector<CouplingEdge> edges_;
  std::vector<double> fid2_;  // dense n*n lookup, -1 where not coupled
};

/// Parses a calibration JSON document:
/// {"name": str,
///  "qubits": [{"id": int, "fidelity1": float, "readout": float?}, ...],
///  "edges":  [{"a": int, "b": int, "fidelity2": float}, ...]}
/// Qubit ids must cover 0..n-1. Fidelities outside [0, 1] are rejected,
/// not clamped. Throws CalibrationError.
DeviceModel load_calibration(std::string_view text);

/// Serializes a device back to the calibration schema.
std::string calibration_json(const DeviceModel& device);

/// Fidelity of one SWAP executed on an edge: fidelity2 cubed, from the
/// three-CNOT decomposition.
inline double swap_fidelity(const CouplingEdge& edge) {
  return edge.fidelity2 * edge.fidelity2 * edge.fidelity2;
}

struct BestGateFidelities {
  double best1 = 0.0;
  std::optional<double> best2;  // absent on edgeless devices
};

/// Highest single-qubit and two-qubit gate fidelities anywhere on the
/// device, ignoring connectivity. Requires at least one qubit.
BestGateFidelities best_gate_fidelities(const DeviceModel& device);

}  // namespace qal
