#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qal/annealer.hpp"
#include "qal/errors.hpp"
#include "qal/local_search.hpp"
#include "qal/noise_sim.hpp"
#include "qal/oracle.hpp"
#include "qal/qasm.hpp"
#include "qal/topology.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

qal::DeviceModel load_device(std::string path) {
  if (path.empty()) {
    if (const char* env = std::getenv("QALLOC_DEVICE")) path = env;
  }
  if (path.empty()) {
    throw std::runtime_error(
        "no device given: pass a calibration file or set QALLOC_DEVICE");
  }
  return qal::load_calibration(read_file(path));
}

qal::FidelityRange parse_range(const std::string& text) {
  const auto colon = text.find(':');
  qal::FidelityRange range;
  if (colon == std::string::npos) {
    range.lo = range.hi = std::stod(text);
  } else {
    range.lo = std::stod(text.substr(0, colon));
    range.hi = std::stod(text.substr(colon + 1));
  }
  if (range.lo > range.hi) std::swap(range.lo, range.hi);
  return range;
}

nlohmann::json map_json(const qal::Allocation& a) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::int32_t p : a.logical_to_physical()) arr.push_back(p);
  return arr;
}

struct AnnealFlags {
  std::uint64_t n = 10;
  double t0 = 10.0;
  double tau = 25.0;
  std::uint32_t iters = 50;
  std::uint32_t restarts = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "local-search steps per annealing evaluation");
    cmd->add_option("--t0", t0, "initial annealing temperature");
    cmd->add_option("--tau", tau, "annealing cooling constant");
    cmd->add_option("--iters", iters, "Metropolis iterations per round");
    cmd->add_option("--restarts", restarts, "independent annealing restarts");
  }

  qal::AnnealConfig config(std::uint64_t seed) const {
    qal::AnnealConfig c;
    c.n = n;
    c.t0 = t0;
    c.tau = tau;
    c.iters_per_round = iters;
    c.restarts = restarts;
    c.seed = seed;
    return c;
  }
};

int cmd_compile(const std::string& qasm_path, const std::string& device_path,
                const std::string& allocator, const AnnealFlags& flags,
                std::uint64_t seed, unsigned jobs, const std::string& out_path,
                const std::string& report_path,
                const std::string& trace_path) {
  const auto t_start = std::chrono::steady_clock::now();
  const qal::Circuit circuit = qal::parse_qasm(read_file(qasm_path));
  const qal::DeviceModel device = load_device(device_path);
  const qal::SwapPathTable table = qal::build_swap_table(device);

  qal::CompiledCircuit compiled;
  qal::AnnealTrace trace;
  if (allocator == "local") {
    compiled = qal::local_allocate(circuit, device, table).compiled;
  } else if (allocator == "hybrid") {
    auto result =
        qal::hybrid_allocate(circuit, device, table, flags.config(seed), jobs);
    compiled = std::move(result.compiled);
    trace = std::move(result.trace);
  } else if (allocator == "identity") {
    compiled = qal::insert_swaps(
        circuit, device,
        qal::identity_allocation(circuit.num_qubits, device.num_qubits()),
        table);
  } else if (allocator == "random") {
    qal::Rng rng(seed);
    qal::AllocationStrategy strategy;
    strategy.kind = qal::AllocatorKind::Random;
    compiled = qal::insert_swaps(
        circuit, device,
        qal::make_allocation(strategy, circuit, device, table, rng), table);
  } else {
    throw CLI::ValidationError("--allocator",
                               "must be local, hybrid, identity or random");
  }

  const std::string emitted = qal::emit_qasm(compiled, device);
  const auto [n1, n2] = qal::gate_counts(compiled);
  const auto t_end = std::chrono::steady_clock::now();

  nlohmann::json report{
      {"input", qasm_path},
      {"allocator", allocator},
      {"initial_map", map_json(compiled.initial_map)},
      {"final_map", map_json(compiled.final_map)},
      {"swaps", qal::swap_count(compiled)},
      {"n1", n1},
      {"n2", n2},
      {"f_tot", qal::total_fidelity(compiled, device)},
      {"seed", seed},
      {"wall_time_s",
       std::chrono::duration<double>(t_end - t_start).count()},
  };
  if (allocator == "hybrid") {
    report["params"] = {{"n", flags.n},
                        {"t0", flags.t0},
                        {"tau", flags.tau},
                        {"iters", flags.iters},
                        {"restarts", flags.restarts}};
  }

  if (!out_path.empty()) {
    write_file(out_path, emitted);
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << emitted;
  }
  if (!report_path.empty()) write_file(report_path, report.dump(2) + "\n");
  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    qal::write_trace_csv(out, trace);
  }
  return 0;
}

int cmd_benchmark(const std::string& device_path, std::uint32_t num_circuits,
                  std::uint32_t qubits, std::uint32_t cnots,
                  std::uint32_t shots, std::uint64_t seed, unsigned jobs,
                  bool readout, const AnnealFlags& flags,
                  const std::string& out_path) {
  const qal::DeviceModel device = load_device(device_path);
  const qal::SwapPathTable table = qal::build_swap_table(device);

  std::vector<qal::Circuit> circuits;
  circuits.reserve(num_circuits);
  for (std::uint32_t i = 0; i < num_circuits; ++i) {
    qal::Circuit c = qal::generate_random_cnot_circuit(
        qubits, cnots, qal::substream_seed(seed, 0x100000 + i));
    c.source_name += "-" + std::to_string(i);
    circuits.push_back(std::move(c));
  }

  std::vector<qal::AllocationStrategy> strategies(4);
  strategies[0] = {qal::AllocatorKind::Identity, "identity", {}};
  strategies[1] = {qal::AllocatorKind::Random, "random", {}};
  strategies[2] = {qal::AllocatorKind::LocalSearch, "local", {}};
  strategies[3] = {qal::AllocatorKind::Hybrid, "hybrid", flags.config(0)};

  const auto entries = qal::run_benchmark(circuits, device, table, strategies,
                                          shots, seed, jobs, readout);
  if (out_path.empty()) {
    qal::write_benchmark_csv(std::cout, entries);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    qal::write_benchmark_csv(out, entries);
  }
  return 0;
}

int cmd_gen_circuit(std::uint32_t qubits, std::uint32_t cnots,
                    std::uint64_t seed, const std::string& out_path) {
  const qal::Circuit circuit =
      qal::generate_random_cnot_circuit(qubits, cnots, seed);
  const std::string text = qal::emit_qasm(circuit);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

int cmd_gen_device(const std::string& topology, std::uint32_t qubits,
                   const std::string& f1, const std::string& f2,
                   const std::string& readout, std::uint64_t seed,
                   const std::string& name, const std::string& out_path) {
  qal::SyntheticDeviceSpec spec;
  spec.topology = qal::topology_from_name(topology);
  spec.num_qubits = qubits;
  spec.fidelity1 = parse_range(f1);
  spec.fidelity2 = parse_range(f2);
  if (!readout.empty()) spec.readout = parse_range(readout);
  spec.name = name;
  const std::string text =
      qal::calibration_json(qal::synthesize_device(spec, seed));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qalloc: noise-aware qubit allocation for OpenQASM programs.\n"
      "The QALLOC_DEVICE environment variable supplies a default device\n"
      "calibration when no path is given."};
  app.require_subcommand(1);

  // compile
  auto* compile = app.add_subcommand(
      "compile", "map a program onto a device and emit OpenQASM");
  std::string qasm_path;
  std::string device_path;
  std::string allocator = "local";
  std::string out_path;
  std::string report_path;
  std::string trace_path;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  AnnealFlags flags;
  compile->add_option("qasm", qasm_path, "input OpenQASM 2.0 file")
      ->required();
  compile->add_option("device", device_path, "device calibration JSON");
  compile->add_option("--allocator", allocator,
                      "local | hybrid | identity | random");
  compile->add_option("--seed", seed, "random seed");
  compile->add_option("--jobs", jobs, "worker threads for restarts");
  compile->add_option("--out", out_path, "compiled OpenQASM output path");
  compile->add_option("--report", report_path, "compile report JSON path");
  compile->add_option("--trace", trace_path, "annealing trace CSV path");
  flags.attach(compile);

  // benchmark
  auto* benchmark = app.add_subcommand(
      "benchmark",
      "measured-error comparison of allocators on random CNOT circuits");
  std::string bench_device;
  std::string bench_out;
  std::uint32_t num_circuits = 20;
  std::uint32_t bench_qubits = 10;
  std::uint32_t bench_cnots = 30;
  std::uint32_t shots = 1024;
  std::uint64_t bench_seed = 0;
  unsigned bench_jobs = 1;
  bool bench_readout = false;
  AnnealFlags bench_flags;
  benchmark->add_option("device", bench_device, "device calibration JSON");
  benchmark->add_option("--circuits", num_circuits, "number of random circuits");
  benchmark->add_option("--qubits", bench_qubits, "qubits per circuit");
  benchmark->add_option("--cnots", bench_cnots, "CNOTs per circuit");
  benchmark->add_option("--shots", shots, "shots per measured qubit");
  benchmark->add_option("--seed", bench_seed, "random seed");
  benchmark->add_option("--jobs", bench_jobs, "worker threads");
  benchmark->add_flag("--readout", bench_readout,
                      "apply readout errors from the calibration");
  benchmark->add_option("--out", bench_out, "CSV output path");
  bench_flags.attach(benchmark);

  // gen
  auto* gen = app.add_subcommand("gen", "generate circuits and calibrations");
  gen->require_subcommand(1);
  auto* gen_circuit = gen->add_subcommand("circuit", "random CNOT circuit");
  std::uint32_t gc_qubits = 10;
  std::uint32_t gc_cnots = 30;
  std::uint64_t gc_seed = 0;
  std::string gc_out;
  gen_circuit->add_option("--qubits", gc_qubits, "number of qubits");
  gen_circuit->add_option("--cnots", gc_cnots, "number of CNOTs");
  gen_circuit->add_option("--seed", gc_seed, "random seed");
  gen_circuit->add_option("--out", gc_out, "output path");

  auto* gen_device = gen->add_subcommand("device", "synthetic calibration");
  std::string gd_topology = "ladder";
  std::uint32_t gd_qubits = 16;
  std::string gd_f1 = "0.995:0.9995";
  std::string gd_f2 = "0.85:0.99";
  std::string gd_readout;
  std::string gd_name;
  std::uint64_t gd_seed = 0;
  std::string gd_out;
  gen_device->add_option("--topology", gd_topology,
                         "line | ring | ladder | grid | complete");
  gen_device->add_option("--qubits", gd_qubits, "number of qubits");
  gen_device->add_option("--f1", gd_f1, "single-qubit fidelity range lo:hi");
  gen_device->add_option("--f2", gd_f2, "edge fidelity range lo:hi");
  gen_device->add_option("--readout", gd_readout, "readout fidelity range");
  gen_device->add_option("--name", gd_name, "device name");
  gen_device->add_option("--seed", gd_seed, "random seed");
  gen_device->add_option("--out", gd_out, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) {
      return cmd_compile(qasm_path, device_path, allocator, flags, seed, jobs,
                         out_path, report_path, trace_path);
    }
    if (benchmark->parsed()) {
      return cmd_benchmark(bench_device, num_circuits, bench_qubits,
                           bench_cnots, shots, bench_seed, bench_jobs,
                           bench_readout, bench_flags, bench_out);
    }
    if (gen->parsed()) {
      if (gen_circuit->parsed()) {
        return cmd_gen_circuit(gc_qubits, gc_cnots, gc_seed, gc_out);
      }
      return cmd_gen_device(gd_topology, gd_qubits, gd_f1, gd_f2, gd_readout,
                            gd_seed, gd_name, gd_out);
    }
  } catch (const qal::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const qal::CalibrationError& e) {
    std::cerr << "calibration error: " << e.what() << "\n";
    return 1;
  } catch (const qal::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const qal::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
