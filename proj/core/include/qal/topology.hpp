#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qal/device.hpp"
#include "qal/rng.hpp"

namespace qal {

enum class Topology { Line, Ring, Ladder, Grid, Complete };

Topology topology_from_name(const std::string& name);
std::string topology_name(Topology t);

/// Inclusive fidelity range for synthetic calibrations.
struct FidelityRange {
  double lo = 1.0;
  double hi = 1.0;
};

struct SyntheticDeviceSpec {
  Topology topology = Topology::Line;
  std::uint32_t num_qubits = 0;
  FidelityRange fidelity1{0.995, 0.9995};
  FidelityRange fidelity2{0.85, 0.99};
  std::optional<FidelityRange> readout;
  std::string name;
};

/// Edge list of a named topology. Ladders are two rows of n/2 (the longer
/// row first when n is odd) with rungs between them; grids are as close to
/// square as the qubit count allows.
std::vector<std::pair<PhysicalQubit, PhysicalQubit>> topology_edges(
    Topology topology, std::uint32_t num_qubits);

/// Device with the requested topology and fidelities drawn uniformly from
/// the configured ranges. Pure function of (spec, seed).
DeviceModel synthesize_device(const SyntheticDeviceSpec& spec,
                              std::uint64_t seed);

/// Device with the given uniform fidelities on every qubit and edge.
DeviceModel uniform_device(Topology topology, std::uint32_t num_qubits,
                           double fidelity1, double fidelity2,
                           const std::string& name = "uniform");

}  // namespace qal
