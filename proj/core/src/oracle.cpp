#include "qal/oracle.hpp"

#include <stdexcept>

#include "qal/errors.hpp"

namespace qal {

namespace {

boost::multiprecision::cpp_int falling_factorial(std::uint32_t q_p,
                                                 std::uint32_t n) {
  boost::multiprecision::cpp_int value = 1;
  for (std::uint32_t i = 0; i < n; ++i) value *= q_p - i;
  return value;
}

}  // namespace

boost::multiprecision::cpp_int count_worst_case_edges(std::uint32_t q_l,
                                                      std::uint32_t q_p) {
  if (q_l > q_p) {
    throw std::invalid_argument("more logical than physical qubits");
  }
  boost::multiprecision::cpp_int total = 0;
  for (std::uint32_t n = 1; n <= q_l; ++n) {
    total += falling_factorial(q_p, n);
  }
  return total;
}

OracleResult exhaustive_allocate(const Circuit& circuit,
                                 const DeviceModel& device,
                                 const SwapPathTable& table,
                                 std::uint64_t cap) {
  const std::uint32_t num_logical = circuit.num_qubits;
  const std::uint32_t num_physical = device.num_qubits();
  if (num_logical > num_physical) {
    throw InfeasibleError("device has fewer qubits than the program");
  }
  const auto expected = count_worst_case_edges(num_logical, num_physical) -
                        (num_logical > 1
                             ? count_worst_case_edges(num_logical - 1,
                                                      num_physical)
                             : 0);
  if (expected > cap) {
    throw ResourceLimitError("enumeration of " + expected.str() +
                             " allocations exceeds cap of " +
                             std::to_string(cap));
  }

  OracleResult result;
  result.best_allocation = Allocation(num_logical, num_physical);
  result.best_fidelity = -1.0;

  // Lexicographic enumeration over the mapping vector (slot of logical 0,
  // slot of logical 1, ...), so ties resolve to the smallest mapping.
  std::vector<std::int32_t> l2p(num_logical, -1);
  std::vector<bool> used(num_physical, false);

  const auto evaluate = [&] {
    Allocation full(num_logical, num_physical);
    for (LogicalQubit l = 0; l < num_logical; ++l) {
      full = extend(full, l, static_cast<PhysicalQubit>(l2p[l]));
    }
    ++result.num_enumerated;
    double fidelity = 0.0;
    try {
      fidelity =
          total_fidelity(insert_swaps(circuit, device, full, table), device);
    } catch (const InfeasibleError&) {
      return;  // unreachable pair under this allocation
    }
    if (fidelity > result.best_fidelity) {
      result.best_fidelity = fidelity;
      result.best_allocation = full;
    }
  };

  const auto recurse = [&](auto&& self, LogicalQubit l) -> void {
    if (l == num_logical) {
      evaluate();
      return;
    }
    for (PhysicalQubit p = 0; p < num_physical; ++p) {
      if (used[p]) continue;
      l2p[l] = static_cast<std::int32_t>(p);
      used[p] = true;
      self(self, l + 1);
      l2p[l] = -1;
      used[p] = false;
    }
  };
  recurse(recurse, 0);

  if (result.best_fidelity < 0.0) {
    throw InfeasibleError("no feasible allocation exists");
  }
  return result;
}

}  // namespace qal
