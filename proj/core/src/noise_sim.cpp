#include "qal/noise_sim.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include "qal/errors.hpp"

namespace qal {

namespace {

struct NoisyCnot {
  PhysicalQubit control = 0;
  PhysicalQubit target = 0;
  double eps = 0.0;  // 1 - fidelity2 of the hosting edge
};

// Flattens a compiled circuit to its physical CNOT sequence; SWAPs become
// their three-CNOT expansion on the same edge.
std::vector<NoisyCnot> flatten_to_cnots(const CompiledCircuit& compiled,
                                        const DeviceModel& device) {
  std::vector<NoisyCnot> cnots;
  for (const PhysicalGate& g : compiled.physical_gates) {
    switch (g.kind) {
      case PhysicalGateKind::OneQubit:
        throw std::invalid_argument(
            "measured-error test expects a CNOT-only circuit");
      case PhysicalGateKind::TwoQubit: {
        if (g.name != "cx") {
          throw std::invalid_argument("non-cx two-qubit gate '" + g.name +
                                      "' in measured-error test");
        }
        const double f = device.edge_fidelity(g.q0, g.q1);
        if (f < 0.0) throw std::invalid_argument("gate off the coupling graph");
        cnots.push_back({g.q0, g.q1, 1.0 - f});
        break;
      }
      case PhysicalGateKind::Swap: {
        const double f = device.edge_fidelity(g.q0, g.q1);
        if (f < 0.0) throw std::invalid_argument("swap off the coupling graph");
        const double eps = 1.0 - f;
        cnots.push_back({g.q0, g.q1, eps});
        cnots.push_back({g.q1, g.q0, eps});
        cnots.push_back({g.q0, g.q1, eps});
        break;
      }
    }
  }
  return cnots;
}

std::vector<PhysicalQubit> involved_qubits(const CompiledCircuit& compiled,
                                           const std::vector<NoisyCnot>& cnots) {
  std::set<PhysicalQubit> touched;
  for (const NoisyCnot& c : cnots) {
    touched.insert(c.control);
    touched.insert(c.target);
  }
  for (const auto& [q, bit] : compiled.measures) touched.insert(q);
  return {touched.begin(), touched.end()};
}

double readout_flip_probability(const DeviceModel& device, PhysicalQubit q) {
  const auto& info = device.qubits()[q];
  return info.readout_fidelity ? 1.0 - *info.readout_fidelity : 0.0;
}

}  // namespace

ErrorReport simulate_measured_error(const CompiledCircuit& compiled,
                                    const DeviceModel& device,
                                    std::uint32_t shots, std::uint64_t seed,
                                    bool readout) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  const std::vector<NoisyCnot> cnots = flatten_to_cnots(compiled, device);
  const std::vector<PhysicalQubit> qubits = involved_qubits(compiled, cnots);

  ErrorReport report;
  report.shots_per_qubit = shots;
  std::vector<std::uint8_t> bits(device.num_qubits(), 0);

  for (const PhysicalQubit measured : qubits) {
    Rng rng = Rng::substream(seed, measured);
    const double flip = readout ? readout_flip_probability(device, measured)
                                : 0.0;
    std::uint64_t errors = 0;
    for (std::uint32_t shot = 0; shot < shots; ++shot) {
      std::fill(bits.begin(), bits.end(), 0);
      for (const NoisyCnot& c : cnots) {
        bits[c.target] ^= bits[c.control];
        if (c.eps > 0.0 && rng.uniform01() < c.eps) {
          if (rng.uniform01() < 0.5) bits[c.control] ^= 1;
          if (rng.uniform01() < 0.5) bits[c.target] ^= 1;
        }
      }
      std::uint8_t outcome = bits[measured];
      if (flip > 0.0 && rng.uniform01() < flip) outcome ^= 1;
      errors += outcome;
    }
    report.per_qubit[measured] = static_cast<double>(errors) / shots;
    report.total_errors += errors;
  }
  const std::uint64_t total_shots =
      static_cast<std::uint64_t>(shots) * qubits.size();
  report.percent_error =
      total_shots ? static_cast<double>(report.total_errors) / total_shots
                  : 0.0;
  return report;
}

std::map<PhysicalQubit, double> expected_error(const CompiledCircuit& compiled,
                                               const DeviceModel& device,
                                               bool readout,
                                               std::uint32_t max_bits) {
  const std::vector<NoisyCnot> cnots = flatten_to_cnots(compiled, device);
  const std::vector<PhysicalQubit> qubits = involved_qubits(compiled, cnots);
  if (qubits.size() > max_bits) {
    throw ResourceLimitError("joint distribution over " +
                             std::to_string(qubits.size()) +
                             " bits exceeds the cap of " +
                             std::to_string(max_bits));
  }
  std::vector<std::uint32_t> dense(device.num_qubits(), 0);
  for (std::uint32_t i = 0; i < qubits.size(); ++i) dense[qubits[i]] = i;

  // Joint distribution over the touched bits, ground state initially.
  std::vector<double> dist(std::size_t{1} << qubits.size(), 0.0);
  dist[0] = 1.0;
  std::vector<double> next(dist.size());

  for (const NoisyCnot& c : cnots) {
    const std::size_t mc = std::size_t{1} << dense[c.control];
    const std::size_t mt = std::size_t{1} << dense[c.target];
    // ideal CNOT: permutes states with the control bit set
    for (std::size_t s = 0; s < dist.size(); ++s) {
      if (s & mc) {
        next[s] = dist[s ^ mt];
      } else {
        next[s] = dist[s];
      }
    }
    if (c.eps > 0.0) {
      // flip event: each operand flips independently with probability 1/2
      const double keep = 1.0 - 0.75 * c.eps;
      const double mix = 0.25 * c.eps;
      for (std::size_t s = 0; s < dist.size(); ++s) {
        dist[s] = keep * next[s] +
                  mix * (next[s ^ mc] + next[s ^ mt] + next[s ^ mc ^ mt]);
      }
    } else {
      std::swap(dist, next);
    }
  }

  std::map<PhysicalQubit, double> rates;
  for (std::uint32_t i = 0; i < qubits.size(); ++i) {
    const std::size_t mask = std::size_t{1} << i;
    double excited = 0.0;
    for (std::size_t s = 0; s < dist.size(); ++s) {
      if (s & mask) excited += dist[s];
    }
    if (readout) {
      const double flip = readout_flip_probability(device, qubits[i]);
      excited = excited * (1.0 - flip) + (1.0 - excited) * flip;
    }
    rates[qubits[i]] = excited;
  }
  return rates;
}

Allocation make_allocation(const AllocationStrategy& strategy,
                           const Circuit& circuit, const DeviceModel& device,
                           const SwapPathTable& table, Rng& rng) {
  switch (strategy.kind) {
    case AllocatorKind::Identity:
      return identity_allocation(circuit.num_qubits, device.num_qubits());
    case AllocatorKind::Random: {
      if (circuit.num_qubits > device.num_qubits()) {
        throw InfeasibleError("device has fewer qubits than the program");
      }
      Allocation a(circuit.num_qubits, device.num_qubits());
      std::vector<PhysicalQubit> slots(device.num_qubits());
      for (PhysicalQubit p = 0; p < device.num_qubits(); ++p) slots[p] = p;
      for (LogicalQubit l = 0; l < circuit.num_qubits; ++l) {
        const std::size_t pick = l + rng.below(slots.size() - l);
        std::swap(slots[l], slots[pick]);
        a = extend(a, l, slots[l]);
      }
      return a;
    }
    case AllocatorKind::LocalSearch:
      return local_allocate(circuit, device, table).compiled.initial_map;
    case AllocatorKind::Hybrid: {
      AnnealConfig config = strategy.anneal;
      config.seed = rng.next_u64();
      return hybrid_allocate(circuit, device, table, config)
          .compiled.initial_map;
    }
  }
  throw std::logic_error("unknown allocation strategy");
}

std::vector<BenchmarkEntry> run_benchmark(
    const std::vector<Circuit>& circuits, const DeviceModel& device,
    const SwapPathTable& table,
    const std::vector<AllocationStrategy>& strategies, std::uint32_t shots,
    std::uint64_t seed, unsigned jobs, bool readout) {
  const std::size_t tasks = circuits.size() * strategies.size();
  std::vector<BenchmarkEntry> entries(tasks);
  std::vector<std::exception_ptr> failures(tasks);

  const auto run_task = [&](std::size_t index) {
    const std::size_t ci = index / strategies.size();
    const std::size_t si = index % strategies.size();
    try {
      const Circuit& circuit = circuits[ci];
      const AllocationStrategy& strategy = strategies[si];
      Rng alloc_rng = Rng::substream(seed, 2 * index);
      const Allocation full =
          make_allocation(strategy, circuit, device, table, alloc_rng);
      const CompiledCircuit compiled =
          insert_swaps(circuit, device, full, table);
      BenchmarkEntry entry;
      entry.circuit = circuit.source_name;
      entry.allocator = strategy.name;
      entry.swaps = swap_count(compiled);
      entry.fidelity = total_fidelity(compiled, device);
      entry.report = simulate_measured_error(
          compiled, device, shots, substream_seed(seed, 2 * index + 1),
          readout);
      entries[index] = std::move(entry);
    } catch (...) {
      failures[index] = std::current_exception();
    }
  };

  if (jobs <= 1 || tasks <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) run_task(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    const auto workers = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = cursor.fetch_add(1); i < tasks;
             i = cursor.fetch_add(1)) {
          run_task(i);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return entries;
}

namespace {

void append_double(std::string& out, double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

}  // namespace

void write_benchmark_csv(std::ostream& out,
                         const std::vector<BenchmarkEntry>& entries) {
  std::string text = "circuit,allocator,qubit,shots,errors,rate\n";
  for (const BenchmarkEntry& e : entries) {
    for (const auto& [qubit, rate] : e.report.per_qubit) {
      const auto errors = static_cast<std::uint64_t>(
          std::llround(rate * e.report.shots_per_qubit));
      text += e.circuit + ',' + e.allocator + ',' + std::to_string(qubit) +
              ',' + std::to_string(e.report.shots_per_qubit) + ',' +
              std::to_string(errors) + ',';
      append_double(text, rate);
      text += '\n';
    }
    const std::uint64_t total_shots =
        static_cast<std::uint64_t>(e.report.shots_per_qubit) *
        e.report.per_qubit.size();
    text += e.circuit + ',' + e.allocator + ",all," +
            std::to_string(total_shots) + ',' +
            std::to_string(e.report.total_errors) + ',';
    append_double(text, e.report.percent_error);
    text += '\n';
  }
  out << text;
}

}  // namespace qal
