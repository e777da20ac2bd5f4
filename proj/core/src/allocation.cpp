#include "qal/allocation.hpp"

#include <stdexcept>
#include <string>

#include "qal/errors.hpp"

namespace qal {

Allocation::Allocation(std::uint32_t num_logical, std::uint32_t num_physical)
    : l2p_(num_logical, -1), p2l_(num_physical, -1) {}

Allocation extend(const Allocation& a, LogicalQubit l, PhysicalQubit p) {
  if (l >= a.num_logical() || p >= a.num_physical()) {
    throw std::invalid_argument("extend: qubit index out of range");
  }
  if (a.is_mapped(l)) {
    throw std::invalid_argument("extend: logical qubit " + std::to_string(l) +
                                " already mapped");
  }
  if (a.is_used(p)) {
    throw std::invalid_argument("extend: physical qubit " + std::to_string(p) +
                                " already used");
  }
  Allocation out = a;
  out.l2p_[l] = static_cast<std::int32_t>(p);
  out.p2l_[p] = static_cast<std::int32_t>(l);
  ++out.size_;
  return out;
}

Allocation remapped(const Allocation& a, LogicalQubit l, PhysicalQubit p) {
  if (!a.is_mapped(l)) {
    throw std::invalid_argument("remapped: logical qubit not mapped");
  }
  if (a.is_used(p) && a.physical_of(l) != p) {
    throw std::invalid_argument("remapped: physical qubit already used");
  }
  Allocation out = a;
  out.p2l_[out.l2p_[l]] = -1;
  out.l2p_[l] = static_cast<std::int32_t>(p);
  out.p2l_[p] = static_cast<std::int32_t>(l);
  return out;
}

Allocation identity_allocation(std::uint32_t num_logical,
                               std::uint32_t num_physical) {
  if (num_logical > num_physical) {
    throw InfeasibleError("device has fewer qubits than the program");
  }
  Allocation a(num_logical, num_physical);
  for (LogicalQubit l = 0; l < num_logical; ++l) {
    a = extend(a, l, static_cast<PhysicalQubit>(l));
  }
  return a;
}

}  // namespace qal
