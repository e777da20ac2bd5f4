#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qal/annealer.hpp"
#include "qal/compile.hpp"

namespace qal {

/// Per-qubit measured error rates from a ground-state test.
struct ErrorReport {
  std::map<PhysicalQubit, double> per_qubit;
  std::uint32_t shots_per_qubit = 0;
  std::uint64_t total_errors = 0;
  /// Pooled incorrect-measurement fraction across all per-qubit trials.
  double percent_error = 0.0;
};

/// Monte-Carlo ground-state test of a CNOT-only compiled circuit.
///
/// Classical bits start at 0. Each physical CNOT (SWAPs count as their
/// three CNOTs) applies the ideal gate, then with probability
/// eps = 1 - fidelity2 of its edge flips each of its two bits independently
/// with probability 1/2. When `readout` is set, the measured bit is
/// additionally flipped with probability 1 - readout_fidelity.
///
/// Every qubit the circuit touches is measured one at a time, `shots`
/// fresh runs per qubit (stream q of `seed` drives the runs for qubit q);
/// its error rate is the fraction of excited-state outcomes. Throws
/// std::invalid_argument if the circuit contains anything besides CNOTs,
/// SWAPs and measures.
ErrorReport simulate_measured_error(const CompiledCircuit& compiled,
                                    const DeviceModel& device,
                                    std::uint32_t shots, std::uint64_t seed,
                                    bool readout = false);

/// Exact per-qubit excited-state probability under the same channel, by
/// forward propagation of the joint distribution over the circuit's
/// touched bits. Throws ResourceLimitError when more than `max_bits` bits
/// are touched.
std::map<PhysicalQubit, double> expected_error(const CompiledCircuit& compiled,
                                               const DeviceModel& device,
                                               bool readout = false,
                                               std::uint32_t max_bits = 20);

enum class AllocatorKind { Identity, Random, LocalSearch, Hybrid };

struct AllocationStrategy {
  AllocatorKind kind = AllocatorKind::Identity;
  std::string name;
  AnnealConfig anneal;  // Hybrid only
};

struct BenchmarkEntry {
  std::string circuit;
  std::string allocator;
  std::uint32_t swaps = 0;
  double fidelity = 0.0;
  ErrorReport report;
};

/// Compiles every circuit under every strategy and runs the measured-error
/// test on each result.
///
/// Outcomes are a pure function of (inputs, seed): task (ci, si) draws its
/// allocation randomness from stream 2*(ci*|strategies|+si) of `seed` and
/// its shots from stream 2*(ci*|strategies|+si)+1, so `jobs` only changes
/// wall time.
std::vector<BenchmarkEntry> run_benchmark(
    const std::vector<Circuit>& circuits, const DeviceModel& device,
    const SwapPathTable& table,
    const std::vector<AllocationStrategy>& strategies, std::uint32_t shots,
    std::uint64_t seed, unsigned jobs = 1, bool readout = false);

/// Writes `circuit,allocator,qubit,shots,errors,rate` rows, one per
/// measured qubit plus an `all` summary row per (circuit, allocator).
void write_benchmark_csv(std::ostream& out,
                         const std::vector<BenchmarkEntry>& entries);

/// Materializes a strategy into a full allocation for the given instance.
/// Identity maps logical i to physical i; Random draws an injective map
/// from `rng`; the search strategies run their allocator (their compiled
/// result is recomputed by the caller).
Allocation make_allocation(const AllocationStrategy& strategy,
                           const Circuit& circuit, const DeviceModel& device,
                           const SwapPathTable& table, Rng& rng);

}  // namespace qal
