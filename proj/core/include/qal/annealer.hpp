#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qal/local_search.hpp"
#include "qal/rng.hpp"

namespace qal {

struct AnnealConfig {
  /// Local-search step budget per evaluation; 0 gives pure simulated
  /// annealing over static bounds.
  std::uint64_t n = 10;
  double t0 = 10.0;
  double tau = 25.0;
  std::uint32_t iters_per_round = 50;
  std::uint64_t seed = 0;
  std::uint32_t restarts = 1;
  std::size_t frontier_cap = std::size_t{1} << 20;
};

/// One annealing iteration as recorded for trace export.
struct AnnealRecord {
  std::uint32_t round = 0;  // 1-based; one round per allocated qubit
  std::uint32_t s = 0;      // iteration within the round
  double temperature = 0.0;
  double proposed_bound = 0.0;
  bool accepted = false;
  std::uint32_t full_found = 0;  // full allocations recorded this iteration
};

struct AnnealTrace {
  std::vector<AnnealRecord> records;
};

/// Writes `round,s,temperature,bound,accepted,full_found` rows.
void write_trace_csv(std::ostream& out, const AnnealTrace& trace);

/// Cooling schedule T0 * exp(-s / tau).
double temperature(std::uint64_t s, double t0, double tau);

/// Metropolis criterion on fidelity bounds: a proposal at least as good is
/// always accepted, a worse one with probability exp(-(current -
/// proposed) / t) against the uniform draw `u`.
bool metropolis_accept(double f_current, double f_proposed, double t,
                       double u);

/// Single-site move: one uniformly chosen qubit among `round_qubits` is
/// remapped to a uniform draw over the slots not used by the others (its
/// own slot may be redrawn). `current` must map exactly round_qubits.
Allocation propose(const Allocation& current, const DeviceModel& device,
                   const std::vector<LogicalQubit>& round_qubits, Rng& rng);

struct HybridResult {
  CompiledCircuit compiled;
  double fidelity = 1.0;
  AnnealTrace trace;
};

/// The hybrid allocator: simulated annealing over progressively larger
/// sub-allocations, each proposal scored by a budgeted local search.
///
/// An initial n-step local search from the empty allocation returns
/// immediately if it completes. Otherwise round r anneals the placement of
/// the first r qubits of the fixed order, the temperature resetting to T0
/// each round; every scoring search records the full allocations it pops,
/// and the best one found during a round is returned at that round's end.
///
/// `restarts` independent runs are executed on seed substreams (stream k
/// for restart k) and merged by highest fidelity, ties to the lowest
/// restart index; `jobs` > 1 runs restarts on that many threads without
/// changing the result.
HybridResult hybrid_allocate(const Circuit& circuit, const DeviceModel& device,
                             const SwapPathTable& table,
                             const AnnealConfig& config,
                             unsigned jobs = 1);

}  // namespace qal
