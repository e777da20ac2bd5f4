#include "qal/local_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "qal/errors.hpp"

namespace qal {

SearchState search_init(const Circuit& circuit, const DeviceModel& device,
                        const SwapPathTable& table, const Allocation& root) {
  if (root.num_logical() != circuit.num_qubits ||
      root.num_physical() != device.num_qubits()) {
    throw std::invalid_argument("root allocation does not match instance");
  }
  SearchState state;
  state.circuit_ = &circuit;
  state.device_ = &device;
  state.table_ = &table;
  state.root_size_ = root.size();
  state.bound_empty_ = fidelity_bound(
      circuit, device, Allocation(circuit.num_qubits, device.num_qubits()),
      table);

  for (LogicalQubit q : qubit_order(circuit)) {
    if (!root.is_mapped(q)) state.order_.push_back(q);
  }

  SearchState::Entry entry;
  entry.bound = fidelity_bound(circuit, device, root, table);
  entry.cost = std::max(0.0, state.bound_empty_ - entry.bound);
  entry.seq = state.seq_++;
  entry.allocation = root;
  state.frontier_.push(std::move(entry));
  return state;
}

void search_step(SearchState& state, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("search budget must be >= 1");
  const Circuit& circuit = *state.circuit_;
  const DeviceModel& device = *state.device_;
  const SwapPathTable& table = *state.table_;
  const std::uint32_t num_logical = circuit.num_qubits;
  const std::uint32_t num_physical = device.num_qubits();

  for (std::uint64_t pops = 0; pops < budget; ++pops) {
    if (state.complete_) return;
    if (state.frontier_.empty()) {
      state.complete_ = true;
      return;
    }
    SearchState::Entry node = state.frontier_.top();
    state.frontier_.pop();
    ++state.steps_;
    state.last_popped_cost_ = node.cost;

    const std::uint32_t depth = node.allocation.size();
    if (depth == num_logical) {
      // First leaf popped has minimal cost among everything still open,
      // which certifies optimality.
      if (!state.best_full_ || node.bound > state.best_full_->bound) {
        state.best_full_ = SearchNode{node.allocation, node.bound, depth};
      }
      state.complete_ = true;
      return;
    }

    const LogicalQubit next_qubit = state.order_[depth - state.root_size_];
    for (PhysicalQubit p = 0; p < num_physical; ++p) {
      if (node.allocation.is_used(p)) continue;
      SearchState::Entry child;
      child.allocation = extend(node.allocation, next_qubit, p);
      child.bound = fidelity_bound(circuit, device, child.allocation, table);
      child.cost = std::max(0.0, state.bound_empty_ - child.bound);
      child.seq = state.seq_++;
      ++state.generated_;
      if (state.frontier_.size() >= state.frontier_cap_) {
        throw ResourceLimitError("search frontier exceeds cap of " +
                                 std::to_string(state.frontier_cap_) +
                                 " nodes");
      }
      state.frontier_.push(std::move(child));
    }
  }
}

Allocation greedy_complete(const SearchState& state, const SearchNode& node) {
  const Circuit& circuit = *state.circuit_;
  const DeviceModel& device = *state.device_;
  const SwapPathTable& table = *state.table_;
  Allocation current = node.allocation;
  while (!current.is_full()) {
    const LogicalQubit next =
        state.order_[current.size() - state.root_size_];
    double best_bound = -1.0;
    PhysicalQubit best_slot = 0;
    for (PhysicalQubit p = 0; p < device.num_qubits(); ++p) {
      if (current.is_used(p)) continue;
      const double bound =
          fidelity_bound(circuit, device, extend(current, next, p), table);
      if (bound > best_bound) {
        best_bound = bound;
        best_slot = p;
      }
    }
    if (best_bound < 0.0) throw InfeasibleError("no free physical qubit");
    current = extend(current, next, best_slot);
  }
  return current;
}

AllocationResult local_allocate(const Circuit& circuit,
                                const DeviceModel& device,
                                const SwapPathTable& table,
                                std::size_t frontier_cap) {
  if (device.num_qubits() < circuit.num_qubits) {
    throw InfeasibleError("device has " + std::to_string(device.num_qubits()) +
                          " qubits, program needs " +
                          std::to_string(circuit.num_qubits));
  }
  SearchState state = search_init(
      circuit, device, table,
      Allocation(circuit.num_qubits, device.num_qubits()));
  state.set_frontier_cap(frontier_cap);

  AllocationResult result;
  Allocation chosen;
  try {
    while (!state.complete()) search_step(state, 4096);
    if (!state.best_full()) {
      throw InfeasibleError("search exhausted without a full allocation");
    }
    chosen = state.best_full()->allocation;
    result.fidelity = state.best_full()->bound;
  } catch (const ResourceLimitError&) {
    // Programs that trigger the search's exponential growth get the best
    // frontier node completed greedily instead of an error.
    chosen = greedy_complete(state, state.best_frontier_node());
    result.fidelity = fidelity_bound(circuit, device, chosen, table);
    result.truncated = true;
  }
  result.compiled = insert_swaps(circuit, device, chosen, table);
  return result;
}

}  // namespace qal
