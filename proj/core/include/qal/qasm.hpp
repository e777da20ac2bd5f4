#pragma once

#include <string>
#include <string_view>

#include "qal/circuit.hpp"
#include "qal/compile.hpp"
#include "qal/device.hpp"

namespace qal {

/// Parses an OpenQASM 2.0 subset: a single qreg, an optional creg, the
/// standard one-qubit gates plus any well-formed named one-qubit gate, cx,
/// measure, and barrier (dropped). `include "qelib1.inc";` is accepted and
/// skipped. LF and CRLF both accepted.
///
/// Throws ParseError with source position for syntax errors, multiple
/// qregs, out-of-range indices, two-qubit gates other than cx, and
/// classical control (`if`).
Circuit parse_qasm(std::string_view text);

/// Emits a routed circuit as OpenQASM 2.0 over one device-sized qreg, LF
/// line endings. SWAP markers expand to three cx gates; measures are
/// emitted last in recorded order. Floating-point parameters use
/// shortest-round-trip formatting.
std::string emit_qasm(const CompiledCircuit& compiled,
                      const DeviceModel& device);

/// Emits an unrouted circuit over a qreg of its own size.
std::string emit_qasm(const Circuit& circuit);

}  // namespace qal
