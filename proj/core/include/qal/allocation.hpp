#pragma once

#include <cstdint>
#include <vector>

#include "qal/circuit.hpp"

namespace qal {

/// Partial injective map from logical to physical qubits.
///
/// Injectivity is maintained by construction; both directions of the map
/// are stored so occupancy queries are O(1). Values are small and cheap
/// to copy.
class Allocation {
 public:
  Allocation() = default;
  Allocation(std::uint32_t num_logical, std::uint32_t num_physical);

  std::uint32_t num_logical() const {
    return static_cast<std::uint32_t>(l2p_.size());
  }
  std::uint32_t num_physical() const {
    return static_cast<std::uint32_t>(p2l_.size());
  }

  /// Number of mapped logical qubits.
  std::uint32_t size() const { return size_; }
  bool is_full() const { return size_ == num_logical(); }
  bool empty() const { return size_ == 0; }

  bool is_mapped(LogicalQubit l) const { return l2p_[l] >= 0; }
  bool is_used(PhysicalQubit p) const { return p2l_[p] >= 0; }

  /// Physical slot of `l`; requires is_mapped(l).
  PhysicalQubit physical_of(LogicalQubit l) const {
    return static_cast<PhysicalQubit>(l2p_[l]);
  }

  /// Logical qubit at slot `p`, or -1 when free.
  std::int32_t logical_at(PhysicalQubit p) const { return p2l_[p]; }

  /// Logical -> physical with -1 for unmapped entries.
  const std::vector<std::int32_t>& logical_to_physical() const { return l2p_; }

  bool operator==(const Allocation&) const = default;

 private:
  friend Allocation extend(const Allocation& a, LogicalQubit l,
                           PhysicalQubit p);
  friend Allocation remapped(const Allocation& a, LogicalQubit l,
                             PhysicalQubit p);

  std::vector<std::int32_t> l2p_;
  std::vector<std::int32_t> p2l_;
  std::uint32_t size_ = 0;
};

/// New allocation with the additional mapping l -> p. Throws
/// std::invalid_argument if l is already mapped or p is already used.
Allocation extend(const Allocation& a, LogicalQubit l, PhysicalQubit p);

/// New allocation with l moved to slot p (l must be mapped, p free or l's
/// own slot). Used by annealing proposals.
Allocation remapped(const Allocation& a, LogicalQubit l, PhysicalQubit p);

/// Full allocation mapping logical i to physical i. Throws
/// InfeasibleError if the device is smaller than the program.
Allocation identity_allocation(std::uint32_t num_logical,
                               std::uint32_t num_physical);

}  // namespace qal
