#include <benchmark/benchmark.h>

#include "qal/annealer.hpp"
#include "qal/local_search.hpp"
#include "qal/oracle.hpp"
#include "qal/topology.hpp"

using namespace qal;

namespace {

DeviceModel make_device(std::uint32_t qubits, Topology topology) {
  SyntheticDeviceSpec spec;
  spec.topology = topology;
  spec.num_qubits = qubits;
  return synthesize_device(spec, 3);
}

void BM_BuildSwapTable(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const DeviceModel device = make_device(n, Topology::Grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_swap_table(device));
  }
}
BENCHMARK(BM_BuildSwapTable)->Arg(16)->Arg(64)->Arg(256);

void BM_FidelityBound(benchmark::State& state) {
  const DeviceModel device = make_device(16, Topology::Ladder);
  const SwapPathTable table = build_swap_table(device);
  const Circuit circuit = generate_random_cnot_circuit(10, 30, 7);
  const Allocation full = identity_allocation(10, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fidelity_bound(circuit, device, full, table));
  }
}
BENCHMARK(BM_FidelityBound);

void BM_InsertSwaps(benchmark::State& state) {
  const DeviceModel device = make_device(16, Topology::Ladder);
  const SwapPathTable table = build_swap_table(device);
  const Circuit circuit = generate_random_cnot_circuit(10, 30, 7);
  const Allocation full = identity_allocation(10, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(insert_swaps(circuit, device, full, table));
  }
}
BENCHMARK(BM_InsertSwaps);

void BM_LocalAllocateExact(benchmark::State& state) {
  // Small enough for the search to certify optimality.
  const DeviceModel device = make_device(6, Topology::Ladder);
  const SwapPathTable table = build_swap_table(device);
  const Circuit circuit = generate_random_cnot_circuit(4, 12, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_allocate(circuit, device, table));
  }
}
BENCHMARK(BM_LocalAllocateExact);

void BM_ExhaustiveOracle(benchmark::State& state) {
  const DeviceModel device = make_device(6, Topology::Ladder);
  const SwapPathTable table = build_swap_table(device);
  const Circuit circuit = generate_random_cnot_circuit(4, 12, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_allocate(circuit, device, table));
  }
}
BENCHMARK(BM_ExhaustiveOracle);

void BM_HybridAllocate(benchmark::State& state) {
  const DeviceModel device = make_device(16, Topology::Ladder);
  const SwapPathTable table = build_swap_table(device);
  const Circuit circuit = generate_random_cnot_circuit(10, 30, 5);
  AnnealConfig config;
  config.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hybrid_allocate(circuit, device, table, config));
  }
}
BENCHMARK(BM_HybridAllocate);

}  // namespace

BENCHMARK_MAIN();
