#include <cmath>

#include "doctest.h"
#include "qal/errors.hpp"
#include "qal/local_search.hpp"
#include "qal/qasm.hpp"
#include "qal/topology.hpp"

using namespace qal;

TEST_CASE("parses a minimal two-qubit program") {
  const Circuit c = parse_qasm("qreg q[2]; cx q[0],q[1];");
  CHECK(c.num_qubits == 2);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0] == Gate::two_qubit("cx", 0, 1));
}

TEST_CASE("parses an empty program") {
  const Circuit c = parse_qasm("qreg q[1];");
  CHECK(c.num_qubits == 1);
  CHECK(c.gates.empty());
}

TEST_CASE("full header, gates, params, measure and barrier") {
  const char* src =
      "OPENQASM 2.0;\n"
      "include \"qelib1.inc\";\n"
      "// a comment\n"
      "qreg q[3];\n"
      "creg c[2];\n"
      "h q[0];\n"
      "u2(0,pi) q[1];\n"
      "u3(-pi/2,0.25,2*pi) q[2];\n"
      "barrier q[0],q[1];\n"
      "mygate q[1];\n"
      "cx q[0],q[2];\n"
      "measure q[2] -> c[1];\n";
  const Circuit c = parse_qasm(src);
  CHECK(c.num_qubits == 3);
  REQUIRE(c.gates.size() == 6);  // barrier dropped
  CHECK(c.gates[0] == Gate::one_qubit("h", {}, 0));
  CHECK(c.gates[1].params == std::vector<double>{0.0, 3.141592653589793});
  CHECK(c.gates[2].params[0] == doctest::Approx(-3.141592653589793 / 2));
  CHECK(c.gates[2].params[2] == doctest::Approx(2 * 3.141592653589793));
  CHECK(c.gates[3] == Gate::one_qubit("mygate", {}, 1));  // unknown kept
  CHECK(c.gates[4] == Gate::two_qubit("cx", 0, 2));
  CHECK(c.gates[5] == Gate::measure(2, 1));
}

TEST_CASE("crlf input is accepted") {
  const Circuit c = parse_qasm("qreg q[2];\r\ncx q[1],q[0];\r\n");
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0] == Gate::two_qubit("cx", 1, 0));
}

TEST_CASE("parse errors carry positions") {
  SUBCASE("syntax error") {
    try {
      parse_qasm("qreg q[2];\ncx q[0] q[1];");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() > 1);
    }
  }
  SUBCASE("multiple qregs") {
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; qreg r[2];"), ParseError);
  }
  SUBCASE("qubit index out of range") {
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; h q[2];"), ParseError);
  }
  SUBCASE("two-qubit gate other than cx") {
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; cz q[0],q[1];"), ParseError);
  }
  SUBCASE("classical control is unsupported") {
    CHECK_THROWS_AS(
        parse_qasm("qreg q[1]; creg c[1]; if (c==1) x q[0];"), ParseError);
  }
  SUBCASE("measure requires a creg") {
    CHECK_THROWS_AS(parse_qasm("qreg q[1]; measure q[0] -> c[0];"),
                    ParseError);
  }
  SUBCASE("self-targeting cx") {
    CHECK_THROWS_AS(parse_qasm("qreg q[2]; cx q[0],q[0];"), ParseError);
  }
}

TEST_CASE("q10c30 shape round-trips through emit and parse") {
  const Circuit original = generate_random_cnot_circuit(10, 30, 42);
  // On a fully connected device the identity allocation needs no swaps.
  const DeviceModel device =
      uniform_device(Topology::Complete, 10, 0.999, 0.99);
  const SwapPathTable table = build_swap_table(device);
  const CompiledCircuit compiled = insert_swaps(
      original, device, identity_allocation(10, 10), table);
  CHECK(swap_count(compiled) == 0);

  const Circuit reparsed = parse_qasm(emit_qasm(compiled, device));
  CHECK(reparsed.num_qubits == 10);
  REQUIRE(reparsed.gates.size() == 30);
  for (std::size_t i = 0; i < 30; ++i) {
    CHECK(reparsed.gates[i] == original.gates[i]);
  }
}

TEST_CASE("emitting an empty compiled circuit gives header and qreg only") {
  const DeviceModel device = uniform_device(Topology::Ladder, 16, 1.0, 1.0);
  CompiledCircuit compiled;
  compiled.initial_map = Allocation(0, 16);
  compiled.final_map = Allocation(0, 16);
  CHECK(emit_qasm(compiled, device) ==
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[16];\n");
}

TEST_CASE("a single physical cx is emitted verbatim") {
  const DeviceModel device = uniform_device(Topology::Line, 6, 1.0, 1.0);
  CompiledCircuit compiled;
  PhysicalGate g;
  g.kind = PhysicalGateKind::TwoQubit;
  g.name = "cx";
  g.q0 = 3;
  g.q1 = 4;
  compiled.physical_gates.push_back(g);
  const std::string text = emit_qasm(compiled, device);
  CHECK(text.find("cx q[3],q[4];\n") != std::string::npos);
  CHECK(text.find("qreg q[6];") != std::string::npos);
}

TEST_CASE("swaps expand to three cx gates and measures come last") {
  const DeviceModel device = uniform_device(Topology::Line, 3, 1.0, 0.9);
  CompiledCircuit compiled;
  PhysicalGate sw;
  sw.kind = PhysicalGateKind::Swap;
  sw.q0 = 0;
  sw.q1 = 1;
  compiled.physical_gates.push_back(sw);
  compiled.measures.emplace_back(1, 0);
  const std::string text = emit_qasm(compiled, device);
  CHECK(text.find("cx q[0],q[1];\ncx q[1],q[0];\ncx q[0],q[1];\n") !=
        std::string::npos);
  CHECK(text.find("measure q[1] -> c[0];\n") != std::string::npos);
  // three cx plus the measure parse back
  const Circuit reparsed = parse_qasm(text);
  CHECK(reparsed.gates.size() == 4);
}

TEST_CASE("compiled circuits re-parse to their swap expansion") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const DeviceModel device = uniform_device(Topology::Line, 5, 0.999, 0.95);
    const SwapPathTable table = build_swap_table(device);
    const Circuit circuit = generate_random_cnot_circuit(
        4, 6, rng.next_u64());
    const CompiledCircuit compiled = insert_swaps(
        circuit, device, identity_allocation(4, 5), table);
    const Circuit reparsed = parse_qasm(emit_qasm(compiled, device));

    std::vector<Gate> expected;
    for (const PhysicalGate& g : compiled.physical_gates) {
      if (g.kind == PhysicalGateKind::Swap) {
        expected.push_back(Gate::two_qubit("cx", g.q0, g.q1));
        expected.push_back(Gate::two_qubit("cx", g.q1, g.q0));
        expected.push_back(Gate::two_qubit("cx", g.q0, g.q1));
      } else if (g.kind == PhysicalGateKind::TwoQubit) {
        expected.push_back(Gate::two_qubit(g.name, g.q0, g.q1));
      } else {
        expected.push_back(Gate::one_qubit(g.name, g.params, g.q0));
      }
    }
    REQUIRE(reparsed.gates.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(reparsed.gates[i] == expected[i]);
    }
  }
}

TEST_CASE("parse of emit preserves logical circuits with parameters") {
  Circuit c;
  c.num_qubits = 3;
  c.gates = {Gate::one_qubit("u3", {0.1, -2.5e-7, 3.141592653589793}, 2),
             Gate::two_qubit("cx", 2, 0), Gate::measure(0, 0)};
  const Circuit reparsed = parse_qasm(emit_qasm(c));
  CHECK(reparsed.num_qubits == 3);
  REQUIRE(reparsed.gates.size() == 3);
  CHECK(reparsed.gates[0] == c.gates[0]);  // exact doubles round-trip
  CHECK(reparsed.gates[1] == c.gates[1]);
  CHECK(reparsed.gates[2] == c.gates[2]);
}
