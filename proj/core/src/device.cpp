#include "qal/device.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "qal/errors.hpp"

namespace qal {

namespace {

void require_fidelity(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw CalibrationError(std::string(what) + " outside [0, 1]: " +
                           std::to_string(value));
  }
}

}  // namespace

DeviceModel::DeviceModel(std::string name,
                         std::vector<PhysicalQubitInfo> qubits,
                         std::vector<CouplingEdge> edges)
    : name_(std::move(name)),
      qubits_(std::move(qubits)),
      edges_(std::move(edges)) {
  const auto n = qubits_.size();
  for (std::size_t i = 0; i < n; ++i) {
    qubits_[i].index = static_cast<PhysicalQubit>(i);
    require_fidelity(qubits_[i].fidelity1, "qubit fidelity1");
    if (qubits_[i].readout_fidelity) {
      require_fidelity(*qubits_[i].readout_fidelity, "readout fidelity");
    }
  }
  fid2_.assign(n * n, -1.0);
  std::set<std::pair<PhysicalQubit, PhysicalQubit>> seen;
  for (CouplingEdge& e : edges_) {
    if (e.a == e.b) throw CalibrationError("self-loop edge");
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a >= n || e.b >= n) {
      throw CalibrationError("edge endpoint out of range");
    }
    require_fidelity(e.fidelity2, "edge fidelity2");
    if (!seen.insert({e.a, e.b}).second) {
      throw CalibrationError("duplicate edge " + std::to_string(e.a) + "-" +
                             std::to_string(e.b));
    }
    fid2_[static_cast<std::size_t>(e.a) * n + e.b] = e.fidelity2;
    fid2_[static_cast<std::size_t>(e.b) * n + e.a] = e.fidelity2;
  }
}

DeviceModel load_calibration(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CalibrationError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("qubits") || !doc.contains("edges")) {
      throw CalibrationError("calibration must have qubits and edges arrays");
    }
    const std::string name = doc.value("name", std::string{});
    const auto& jq = doc.at("qubits");
    const auto& je = doc.at("edges");
    if (!jq.is_array() || !je.is_array()) {
      throw CalibrationError("qubits and edges must be arrays");
    }
    std::vector<PhysicalQubitInfo> qubits(jq.size());
    std::vector<bool> present(jq.size(), false);
    for (const auto& q : jq) {
      const auto id = q.at("id").get<std::int64_t>();
      if (id < 0 || static_cast<std::size_t>(id) >= qubits.size()) {
        throw CalibrationError("qubit id out of range: " + std::to_string(id));
      }
      if (present[id]) {
        throw CalibrationError("duplicate qubit id " + std::to_string(id));
      }
      present[id] = true;
      PhysicalQubitInfo info;
      info.index = static_cast<PhysicalQubit>(id);
      info.fidelity1 = q.at("fidelity1").get<double>();
      if (q.contains("readout")) {
        info.readout_fidelity = q.at("readout").get<double>();
      }
      qubits[id] = info;
    }
    std::vector<CouplingEdge> edges;
    edges.reserve(je.size());
    for (const auto& e : je) {
      const auto a = e.at("a").get<std::int64_t>();
      const auto b = e.at("b").get<std::int64_t>();
      if (a < 0 || b < 0) throw CalibrationError("negative edge endpoint");
      CouplingEdge edge;
      edge.a = static_cast<PhysicalQubit>(a);
      edge.b = static_cast<PhysicalQubit>(b);
      edge.fidelity2 = e.at("fidelity2").get<double>();
      edges.push_back(edge);
    }
    return DeviceModel(name, std::move(qubits), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw CalibrationError(std::string("missing or mistyped field: ") +
                           e.what());
  }
}

std::string calibration_json(const DeviceModel& device) {
  nlohmann::json doc;
  doc["name"] = device.name();
  auto& jq = doc["qubits"] = nlohmann::json::array();
  for (const PhysicalQubitInfo& q : device.qubits()) {
    nlohmann::json entry{{"id", q.index}, {"fidelity1", q.fidelity1}};
    if (q.readout_fidelity) entry["readout"] = *q.readout_fidelity;
    jq.push_back(std::move(entry));
  }
  auto& je = doc["edges"] = nlohmann::json::array();
  for (const CouplingEdge& e : device.edges()) {
    je.push_back({{"a", e.a}, {"b", e.b}, {"fidelity2", e.fidelity2}});
  }
  return doc.dump(2) + "\n";
}

BestGateFidelities best_gate_fidelities(const DeviceModel& device) {
  if (device.num_qubits() == 0) {
    throw std::invalid_argument("device has no qubits");
  }
  BestGateFidelities best;
  for (const PhysicalQubitInfo& q : device.qubits()) {
    best.best1 = std::max(best.best1, q.fidelity1);
  }
  for (const CouplingEdge& e : device.edges()) {
    best.best2 = std::max(best.best2.value_or(0.0), e.fidelity2);
  }
  return best;
}

}  // namespace qal
