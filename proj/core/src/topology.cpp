#include "qal/topology.hpp"

#include <cmath>
#include <stdexcept>

namespace qal {

Topology topology_from_name(const std::string& name) {
  if (name == "line") return Topology::Line;
  if (name == "ring") return Topology::Ring;
  if (name == "ladder") return Topology::Ladder;
  if (name == "grid") return Topology::Grid;
  if (name == "complete") return Topology::Complete;
  throw std::invalid_argument("unknown topology '" + name + "'");
}

std::string topology_name(Topology t) {
  switch (t) {
    case Topology::Line: return "line";
    case Topology::Ring: return "ring";
    case Topology::Ladder: return "ladder";
    case Topology::Grid: return "grid";
    case Topology::Complete: return "complete";
  }
  return "?";
}

std::vector<std::pair<PhysicalQubit, PhysicalQubit>> topology_edges(
    Topology topology, std::uint32_t n) {
  std::vector<std::pair<PhysicalQubit, PhysicalQubit>> edges;
  switch (topology) {
    case Topology::Line:
      for (PhysicalQubit i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Topology::Ring:
      for (PhysicalQubit i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      if (n > 2) edges.emplace_back(0, n - 1);
      break;
    case Topology::Ladder: {
      // Two rows, the longer one first when n is odd, rungs between them.
      const std::uint32_t top = (n + 1) / 2;
      for (PhysicalQubit i = 0; i + 1 < top; ++i) edges.emplace_back(i, i + 1);
      for (PhysicalQubit i = top; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      for (PhysicalQubit i = 0; top + i < n; ++i) {
        edges.emplace_back(i, top + i);
      }
      break;
    }
    case Topology::Grid: {
      const auto cols = static_cast<std::uint32_t>(
          std::ceil(std::sqrt(static_cast<double>(n))));
      for (PhysicalQubit i = 0; i < n; ++i) {
        const std::uint32_t col = i % cols;
        if (col + 1 < cols && i + 1 < n) edges.emplace_back(i, i + 1);
        if (i + cols < n) edges.emplace_back(i, i + cols);
      }
      break;
    }
    case Topology::Complete:
      for (PhysicalQubit i = 0; i < n; ++i) {
        for (PhysicalQubit j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      }
      break;
  }
  return edges;
}

DeviceModel synthesize_device(const SyntheticDeviceSpec& spec,
                              std::uint64_t seed) {
  const auto draw = [](Rng& rng, const FidelityRange& range) {
    return range.lo + (range.hi - range.lo) * rng.uniform01();
  };
  Rng rng(seed);
  std::vector<PhysicalQubitInfo> qubits(spec.num_qubits);
  for (std::uint32_t i = 0; i < spec.num_qubits; ++i) {
    qubits[i].index = i;
    qubits[i].fidelity1 = draw(rng, spec.fidelity1);
    if (spec.readout) qubits[i].readout_fidelity = draw(rng, *spec.readout);
  }
  std::vector<CouplingEdge> edges;
  for (const auto& [a, b] : topology_edges(spec.topology, spec.num_qubits)) {
    edges.push_back({a, b, draw(rng, spec.fidelity2)});
  }
  std::string name = spec.name;
  if (name.empty()) {
    name = topology_name(spec.topology) + std::to_string(spec.num_qubits) +
           "-synthetic";
  }
  return DeviceModel(name, std::move(qubits), std::move(edges));
}

DeviceModel uniform_device(Topology topology, std::uint32_t num_qubits,
                           double fidelity1, double fidelity2,
                           const std::string& name) {
  std::vector<PhysicalQubitInfo> qubits(num_qubits);
  for (std::uint32_t i = 0; i < num_qubits; ++i) {
    qubits[i].index = i;
    qubits[i].fidelity1 = fidelity1;
  }
  std::vector<CouplingEdge> edges;
  for (const auto& [a, b] : topology_edges(topology, num_qubits)) {
    edges.push_back({a, b, fidelity2});
  }
  return DeviceModel(name, std::move(qubits), std::move(edges));
}

}  // namespace qal
