#include <benchmark/benchmark.h>

#include "qal/noise_sim.hpp"
#include "qal/topology.hpp"

using namespace qal;

namespace {

CompiledCircuit compiled_q10c30(const DeviceModel& device,
                                const SwapPathTable& table) {
  const Circuit circuit = generate_random_cnot_circuit(10, 30, 5);
  return insert_swaps(circuit, device, identity_allocation(10, 16), table);
}

void BM_Simulate1024Shots(benchmark::State& state) {
  SyntheticDeviceSpec spec;
  spec.topology = Topology::Ladder;
  spec.num_qubits = 16;
  const DeviceModel device = synthesize_device(spec, 3);
  const SwapPathTable table = build_swap_table(device);
  const CompiledCircuit compiled = compiled_q10c30(device, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_measured_error(compiled, device, 1024, 7));
  }
}
BENCHMARK(BM_Simulate1024Shots);

void BM_ExpectedError(benchmark::State& state) {
  SyntheticDeviceSpec spec;
  spec.topology = Topology::Ladder;
  spec.num_qubits = 16;
  const DeviceModel device = synthesize_device(spec, 3);
  const SwapPathTable table = build_swap_table(device);
  const CompiledCircuit compiled = compiled_q10c30(device, table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_error(compiled, device));
  }
}
BENCHMARK(BM_ExpectedError);

}  // namespace

BENCHMARK_MAIN();
