#include <set>
#include <stdexcept>

#include "doctest.h"
#include "qal/circuit.hpp"

using namespace qal;

TEST_CASE("control counts") {
  Circuit c;
  c.num_qubits = 3;

  SUBCASE("no gates maps everything to zero") {
    const auto counts = control_counts(c);
    CHECK(counts == std::vector<std::uint32_t>{0, 0, 0});
  }

  SUBCASE("counts follow the control operand") {
    c.gates = {Gate::two_qubit("cx", 0, 1), Gate::two_qubit("cx", 0, 2),
               Gate::two_qubit("cx", 1, 0)};
    const auto counts = control_counts(c);
    CHECK(counts == std::vector<std::uint32_t>{2, 1, 0});
  }

  SUBCASE("one-qubit gates and measures do not count") {
    c.gates = {Gate::one_qubit("h", {}, 0), Gate::measure(1, 0)};
    CHECK(control_counts(c) == std::vector<std::uint32_t>{0, 0, 0});
  }
}

TEST_CASE("random cnot circuit counts sum to the gate count") {
  const Circuit c = generate_random_cnot_circuit(10, 30, 99);
  const auto counts = control_counts(c);
  std::uint32_t sum = 0;
  for (auto v : counts) sum += v;
  CHECK(sum == 30);
}

TEST_CASE("qubit order sorts most constrained first") {
  Circuit c;
  c.num_qubits = 3;
  c.gates = {Gate::two_qubit("cx", 0, 1), Gate::two_qubit("cx", 0, 2),
             Gate::two_qubit("cx", 1, 0)};
  CHECK(qubit_order(c) == std::vector<LogicalQubit>{0, 1, 2});
}

TEST_CASE("qubit order breaks ties by ascending index") {
  Circuit c;
  c.num_qubits = 2;
  c.gates = {Gate::two_qubit("cx", 0, 1), Gate::two_qubit("cx", 1, 0)};
  CHECK(qubit_order(c) == std::vector<LogicalQubit>{0, 1});
}

TEST_CASE("qubit order is a permutation on random circuits") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Circuit c = generate_random_cnot_circuit(7, 15, seed);
    const auto order = qubit_order(c);
    REQUIRE(order.size() == 7);
    CHECK(std::set<LogicalQubit>(order.begin(), order.end()).size() == 7);
    const auto counts = control_counts(c);
    for (std::size_t i = 1; i < order.size(); ++i) {
      CHECK(counts[order[i - 1]] >= counts[order[i]]);
    }
  }
}

TEST_CASE("random cnot circuits") {
  SUBCASE("two qubits leave only the two ordered pairs") {
    const Circuit c = generate_random_cnot_circuit(2, 1, 5);
    REQUIRE(c.gates.size() == 1);
    const Gate& g = c.gates[0];
    CHECK(g.kind == GateKind::TwoQubit);
    CHECK(g.control != g.target);
    CHECK(g.control < 2);
    CHECK(g.target < 2);
  }

  SUBCASE("deterministic for a fixed seed") {
    const Circuit a = generate_random_cnot_circuit(10, 30, 1234);
    const Circuit b = generate_random_cnot_circuit(10, 30, 1234);
    CHECK(a.gates == b.gates);
  }

  SUBCASE("structure: all cx, indices in range, exact count") {
    const Circuit c = generate_random_cnot_circuit(10, 30, 7);
    CHECK(c.num_qubits == 10);
    REQUIRE(c.gates.size() == 30);
    for (const Gate& g : c.gates) {
      CHECK(g.kind == GateKind::TwoQubit);
      CHECK(g.name == "cx");
      CHECK(g.control < 10);
      CHECK(g.target < 10);
      CHECK(g.control != g.target);
    }
  }

  SUBCASE("rejects fewer than two qubits") {
    CHECK_THROWS_AS(generate_random_cnot_circuit(1, 1, 0),
                    std::invalid_argument);
  }
}
