#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "qal/local_search.hpp"

namespace qal {

struct OracleResult {
  Allocation best_allocation;
  double best_fidelity = 0.0;
  std::uint64_t num_enumerated = 0;
};

/// Ground truth by brute force: every injective full allocation is routed
/// and evaluated, the maximum kept (ties to the lexicographically smallest
/// mapping). Throws ResourceLimitError when the number of allocations
/// exceeds `cap`.
OracleResult exhaustive_allocate(const Circuit& circuit,
                                 const DeviceModel& device,
                                 const SwapPathTable& table,
                                 std::uint64_t cap = 1000000);

/// Tree edges traversed by a worst-case search in which every allocation
/// ties: sum over n = 1..q_l of q_p! / (q_p - n)!. Exact at any size.
/// Requires q_l <= q_p.
boost::multiprecision::cpp_int count_worst_case_edges(std::uint32_t q_l,
                                                      std::uint32_t q_p);

}  // namespace qal
