#include "qal/annealer.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "qal/errors.hpp"

namespace qal {

double temperature(std::uint64_t s, double t0, double tau) {
  return t0 * std::exp(-static_cast<double>(s) / tau);
}

bool metropolis_accept(double f_current, double f_proposed, double t,
                       double u) {
  if (f_proposed >= f_current) return true;
  return u < std::exp(-(f_current - f_proposed) / t);
}

Allocation propose(const Allocation& current, const DeviceModel& device,
                   const std::vector<LogicalQubit>& round_qubits, Rng& rng) {
  if (round_qubits.empty()) {
    throw std::invalid_argument("propose needs at least one round qubit");
  }
  const LogicalQubit moved =
      round_qubits[rng.below(round_qubits.size())];
  const PhysicalQubit own = current.physical_of(moved);
  std::vector<PhysicalQubit> slots;
  slots.reserve(device.num_qubits());
  for (PhysicalQubit p = 0; p < device.num_qubits(); ++p) {
    if (!current.is_used(p) || p == own) slots.push_back(p);
  }
  if (slots.empty()) throw InfeasibleError("no free physical qubit");
  return remapped(current, moved, slots[rng.below(slots.size())]);
}

void write_trace_csv(std::ostream& out, const AnnealTrace& trace) {
  out << "round,s,temperature,bound,accepted,full_found\n";
  for (const AnnealRecord& r : trace.records) {
    out << r.round << ',' << r.s << ',' << r.temperature << ','
        << r.proposed_bound << ',' << (r.accepted ? 1 : 0) << ','
        << r.full_found << '\n';
  }
}

namespace {

struct FullPot {
  std::optional<SearchNode> best;
  std::uint32_t found_this_iter = 0;

  void offer(const Allocation& allocation, double fidelity) {
    ++found_this_iter;
    if (!best || fidelity > best->bound) {
      best = SearchNode{allocation, fidelity, allocation.size()};
    }
  }
};

// Refined score of a sub-allocation: the tightest optimistic bound after an
// n-step search from it. Full allocations popped along the way land in the
// pot.
double score_proposal(const Circuit& circuit, const DeviceModel& device,
                      const SwapPathTable& table, const Allocation& proposal,
                      const AnnealConfig& config, FullPot& pot) {
  if (config.n == 0) {
    const double bound = fidelity_bound(circuit, device, proposal, table);
    if (proposal.is_full()) pot.offer(proposal, bound);
    return bound;
  }
  SearchState state = search_init(circuit, device, table, proposal);
  state.set_frontier_cap(config.frontier_cap);
  search_step(state, config.n);
  if (state.best_full()) {
    pot.offer(state.best_full()->allocation, state.best_full()->bound);
  }
  if (state.complete()) {
    return state.best_full() ? state.best_full()->bound : 0.0;
  }
  return state.best_frontier_bound();
}

HybridResult run_one(const Circuit& circuit, const DeviceModel& device,
                     const SwapPathTable& table, const AnnealConfig& config,
                     std::uint64_t run_seed) {
  const std::uint32_t num_logical = circuit.num_qubits;
  const std::uint32_t num_physical = device.num_qubits();
  HybridResult result;

  const auto finish = [&](const Allocation& full, AnnealTrace trace) {
    result.compiled = insert_swaps(circuit, device, full, table);
    result.fidelity = total_fidelity(result.compiled, device);
    result.trace = std::move(trace);
    return result;
  };

  if (num_logical == 0) {
    return finish(Allocation(0, num_physical), {});
  }

  if (config.n > 0) {
    SearchState state = search_init(
        circuit, device, table, Allocation(num_logical, num_physical));
    state.set_frontier_cap(config.frontier_cap);
    search_step(state, config.n);
    if (state.complete() && state.best_full()) {
      return finish(state.best_full()->allocation, {});
    }
  }

  Rng rng(run_seed);
  const std::vector<LogicalQubit> order = qubit_order(circuit);
  AnnealTrace trace;
  Allocation current(num_logical, num_physical);

  for (std::uint32_t round = 1; round <= num_logical; ++round) {
    // Bring the next qubit of the fixed order into the annealed set on a
    // random free slot.
    const LogicalQubit entering = order[round - 1];
    std::vector<PhysicalQubit> free_slots;
    for (PhysicalQubit p = 0; p < num_physical; ++p) {
      if (!current.is_used(p)) free_slots.push_back(p);
    }
    if (free_slots.empty()) throw InfeasibleError("no free physical qubit");
    current = extend(current, entering,
                     free_slots[rng.below(free_slots.size())]);
    const std::vector<LogicalQubit> round_qubits(order.begin(),
                                                 order.begin() + round);

    FullPot pot;
    double current_score =
        score_proposal(circuit, device, table, current, config, pot);

    for (std::uint32_t s = 0; s < config.iters_per_round; ++s) {
      const double t = temperature(s, config.t0, config.tau);
      const Allocation proposal = propose(current, device, round_qubits, rng);
      pot.found_this_iter = 0;
      const double proposal_score =
          score_proposal(circuit, device, table, proposal, config, pot);
      const bool accepted =
          metropolis_accept(current_score, proposal_score, t, rng.uniform01());
      trace.records.push_back({round, s, t, proposal_score, accepted,
                               pot.found_this_iter});
      if (accepted) {
        current = proposal;
        current_score = proposal_score;
      }
    }

    if (pot.best) {
      return finish(pot.best->allocation, std::move(trace));
    }
  }
  // The final round proposes full allocations, so the pot cannot be empty
  // unless it never iterated.
  throw InfeasibleError("annealing finished without a full allocation");
}

}  // namespace

HybridResult hybrid_allocate(const Circuit& circuit, const DeviceModel& device,
                             const SwapPathTable& table,
                             const AnnealConfig& config, unsigned jobs) {
  if (device.num_qubits() < circuit.num_qubits) {
    throw InfeasibleError("device has fewer qubits than the program");
  }
  if (config.t0 <= 0.0 || config.tau <= 0.0) {
    throw std::invalid_argument("T0 and tau must be positive");
  }
  const std::uint32_t restarts = std::max(1u, config.restarts);

  std::vector<HybridResult> results(restarts);
  std::vector<std::exception_ptr> failures(restarts);
  const auto run_range = [&](std::uint32_t begin, std::uint32_t end) {
    for (std::uint32_t k = begin; k < end; ++k) {
      try {
        results[k] = run_one(circuit, device, table, config,
                             substream_seed(config.seed, k));
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };

  if (jobs <= 1 || restarts == 1) {
    run_range(0, restarts);
  } else {
    const unsigned workers = std::min<unsigned>(jobs, restarts);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint32_t begin = restarts * w / workers;
      const std::uint32_t end = restarts * (w + 1) / workers;
      pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (results[k].fidelity > results[best].fidelity) best = k;
  }
  return std::move(results[best]);
}

}  // namespace qal
