#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "qal/allocation.hpp"
#include "qal/compile.hpp"

namespace qal {

struct SearchNode {
  Allocation allocation;
  double bound = 1.0;
  std::uint32_t depth = 0;  // = allocation.size()
};

/// Dijkstra search over the tree of partial allocations.
///
/// Nodes are partial allocations; children extend a node by mapping the
/// next logical qubit of a fixed most-constrained-first order onto each
/// free physical slot. Path cost of a node is bound(empty) - bound(node),
/// so the first leaf popped is the order-restricted optimum. Equal costs
/// pop in insertion order; children are inserted by ascending physical
/// index, which makes ties deterministic.
///
/// A state owns its frontier but only observes the circuit, device and
/// table, which must outlive it. States are copyable; independent states
/// over the same inputs may run on different threads.
class SearchState {
 public:
  bool complete() const { return complete_; }
  std::uint64_t steps_taken() const { return steps_; }

  /// Child nodes created so far (tree edges traversed).
  std::uint64_t children_generated() const { return generated_; }

  const std::optional<SearchNode>& best_full() const { return best_full_; }

  std::size_t frontier_size() const { return frontier_.size(); }
  bool frontier_empty() const { return frontier_.empty(); }

  /// Bound of the cheapest frontier node; requires a non-empty frontier.
  double best_frontier_bound() const { return frontier_.top().bound; }
  double best_frontier_cost() const { return frontier_.top().cost; }

  /// Copy of the cheapest frontier node; requires a non-empty frontier.
  SearchNode best_frontier_node() const {
    const Entry& top = frontier_.top();
    return {top.allocation, top.bound, top.allocation.size()};
  }

  /// Cost of the most recently popped node; NaN before the first pop.
  double last_popped_cost() const { return last_popped_cost_; }

  double empty_allocation_bound() const { return bound_empty_; }

  /// Allocation order still pending under the root (fixed qubit order with
  /// root-mapped qubits excluded).
  const std::vector<LogicalQubit>& pending_order() const { return order_; }

  std::size_t frontier_cap() const { return frontier_cap_; }
  void set_frontier_cap(std::size_t cap) { frontier_cap_ = cap; }

 private:
  friend SearchState search_init(const Circuit& circuit,
                                 const DeviceModel& device,
                                 const SwapPathTable& table,
                                 const Allocation& root);
  friend void search_step(SearchState& state, std::uint64_t budget);
  friend Allocation greedy_complete(const SearchState& state,
                                    const SearchNode& node);

  struct Entry {
    double cost = 0.0;
    std::uint64_t seq = 0;
    double bound = 1.0;
    Allocation allocation;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.cost != b.cost) return a.cost > b.cost;
      return a.seq > b.seq;
    }
  };

  const Circuit* circuit_ = nullptr;
  const DeviceModel* device_ = nullptr;
  const SwapPathTable* table_ = nullptr;
  std::priority_queue<Entry, std::vector<Entry>, Later> frontier_;
  std::vector<LogicalQubit> order_;
  std::uint32_t root_size_ = 0;
  double bound_empty_ = 1.0;
  std::optional<SearchNode> best_full_;
  std::uint64_t steps_ = 0;
  std::uint64_t generated_ = 0;
  std::uint64_t seq_ = 0;
  double last_popped_cost_ = std::numeric_limits<double>::quiet_NaN();
  bool complete_ = false;
  std::size_t frontier_cap_ = std::size_t{1} << 20;
};

/// Seeds a search at `root` (any sub-allocation; the empty allocation for a
/// search of the whole space).
SearchState search_init(const Circuit& circuit, const DeviceModel& device,
                        const SwapPathTable& table, const Allocation& root);

/// Pops up to `budget` nodes in ascending cost order, expanding non-leaves
/// and recording popped leaves. The search is marked complete when a popped
/// leaf certifies optimality or the frontier is exhausted. Composable:
/// stepping a+b equals stepping a then b. Throws ResourceLimitError when
/// the frontier would exceed its cap.
void search_step(SearchState& state, std::uint64_t budget);

struct AllocationResult {
  CompiledCircuit compiled;
  double fidelity = 1.0;
  /// True when the frontier cap forced a greedy completion instead of a
  /// certified search result.
  bool truncated = false;
};

/// Extends `node` to a full allocation, at each level placing the pending
/// qubit on the free slot with the highest fidelity bound (ties to the
/// lowest index). Deterministic.
Allocation greedy_complete(const SearchState& state, const SearchNode& node);

/// Runs the search from the empty allocation to completion and routes the
/// best full allocation found. Exact under the connectivity-only policy and
/// the fixed qubit order whenever the search completes within the frontier
/// cap; programs that trigger the search's exponential growth fall back to
/// a greedy completion of the cheapest frontier node (reported via
/// `truncated`). Throws InfeasibleError when the device is too small or a
/// required pair is unreachable.
AllocationResult local_allocate(const Circuit& circuit,
                                const DeviceModel& device,
                                const SwapPathTable& table,
                                std::size_t frontier_cap = std::size_t{1}
                                                           << 20);

}  // namespace qal
