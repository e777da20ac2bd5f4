#include "qal/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "qal/errors.hpp"

namespace qal {

namespace {

struct Token {
  enum class Type { Ident, Number, String, Symbol, End };
  Type type = Type::End;
  std::string text;
  double number = 0.0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  const Token& peek() {
    if (!lookahead_) lookahead_ = lex();
    return *lookahead_;
  }

  Token next() {
    Token t = peek();
    lookahead_.reset();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.column);
  }

 private:
  Token lex() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) {
      t.type = Token::Type::End;
      return t;
    }
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Token::Type::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        t.text.push_back(src_[pos_]);
        advance();
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      t.type = Token::Type::Number;
      while (pos_ < src_.size() && is_number_char(src_[pos_])) {
        t.text.push_back(src_[pos_]);
        advance();
      }
      const char* begin = t.text.data();
      const char* end = begin + t.text.size();
      const auto [ptr, ec] = std::from_chars(begin, end, t.number);
      if (ec != std::errc{} || ptr != end) {
        throw ParseError("bad numeric literal '" + t.text + "'", t.line,
                         t.column);
      }
      return t;
    }
    if (c == '"') {
      t.type = Token::Type::String;
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"') {
        t.text.push_back(src_[pos_]);
        advance();
      }
      if (pos_ >= src_.size()) {
        throw ParseError("unterminated string", t.line, t.column);
      }
      advance();  // closing quote
      return t;
    }
    t.type = Token::Type::Symbol;
    t.text.push_back(c);
    advance();
    if (t.text == "-" && pos_ < src_.size() && src_[pos_] == '>') {
      t.text = "->";
      advance();
    }
    return t;
  }

  bool is_number_char(char c) const {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return true;
    if (c == 'e' || c == 'E') return true;
    // sign directly after an exponent marker
    if ((c == '+' || c == '-') && pos_ > 0 &&
        (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E')) {
      return true;
    }
    return false;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::optional<Token> lookahead_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  Circuit parse() {
    for (;;) {
      const Token& t = lex_.peek();
      if (t.type == Token::Type::End) break;
      statement();
    }
    Circuit circuit;
    circuit.num_qubits = qreg_size_.value_or(0);
    circuit.gates = std::move(gates_);
    return circuit;
  }

 private:
  void statement() {
    Token t = lex_.next();
    if (t.type != Token::Type::Ident) {
      lex_.fail("expected a statement", t);
    }
    if (t.text == "OPENQASM") {
      expect_number();
      expect_symbol(";");
    } else if (t.text == "include") {
      const Token file = lex_.next();
      if (file.type != Token::Type::String || file.text != "qelib1.inc") {
        lex_.fail("only include \"qelib1.inc\" is supported", file);
      }
      expect_symbol(";");
    } else if (t.text == "qreg") {
      declare_register(t, /*quantum=*/true);
    } else if (t.text == "creg") {
      declare_register(t, /*quantum=*/false);
    } else if (t.text == "barrier") {
      // no effect under connectivity-only insertion; consume to ';'
      for (Token u = lex_.next(); !(u.type == Token::Type::Symbol &&
                                    u.text == ";");
           u = lex_.next()) {
        if (u.type == Token::Type::End) lex_.fail("unterminated barrier", u);
      }
    } else if (t.text == "if") {
      lex_.fail("classical control is not supported", t);
    } else if (t.text == "measure") {
      const std::uint32_t q = qubit_operand(t);
      expect_symbol("->");
      const std::uint32_t c = classical_operand();
      expect_symbol(";");
      gates_.push_back(Gate::measure(q, c));
    } else if (t.text == "gate" || t.text == "opaque" || t.text == "reset") {
      lex_.fail("'" + t.text + "' is not supported", t);
    } else {
      gate_application(t);
    }
  }

  void declare_register(const Token& kw, bool quantum) {
    const Token name = lex_.next();
    if (name.type != Token::Type::Ident) lex_.fail("expected register name",
                                                   name);
    expect_symbol("[");
    const Token size = lex_.next();
    if (size.type != Token::Type::Number ||
        size.number != std::floor(size.number) || size.number < 0) {
      lex_.fail("expected register size", size);
    }
    expect_symbol("]");
    expect_symbol(";");
    if (quantum) {
      if (qreg_size_) lex_.fail("multiple qregs are not supported", kw);
      qreg_size_ = static_cast<std::uint32_t>(size.number);
      qreg_name_ = name.text;
    } else {
      if (creg_size_) lex_.fail("multiple cregs are not supported", kw);
      creg_size_ = static_cast<std::uint32_t>(size.number);
      creg_name_ = name.text;
    }
  }

  void gate_application(const Token& name) {
    std::vector<double> params;
    if (lex_.peek().type == Token::Type::Symbol && lex_.peek().text == "(") {
      lex_.next();
      if (!(lex_.peek().type == Token::Type::Symbol &&
            lex_.peek().text == ")")) {
        params.push_back(parse_param());
        while (lex_.peek().type == Token::Type::Symbol &&
               lex_.peek().text == ",") {
          lex_.next();
          params.push_back(parse_param());
        }
      }
      expect_symbol(")");
    }
    std::vector<std::uint32_t> operands;
    operands.push_back(qubit_operand(name));
    while (lex_.peek().type == Token::Type::Symbol && lex_.peek().text == ",") {
      lex_.next();
      operands.push_back(qubit_operand(name));
    }
    expect_symbol(";");
    if (operands.size() == 1) {
      gates_.push_back(Gate::one_qubit(name.text, std::move(params),
                                       operands[0]));
    } else if (operands.size() == 2) {
      if (name.text != "cx") {
        lex_.fail("two-qubit gate '" + name.text +
                  "' is not supported (only cx)", name);
      }
      if (!params.empty()) lex_.fail("cx takes no parameters", name);
      if (operands[0] == operands[1]) {
        lex_.fail("cx control and target must differ", name);
      }
      gates_.push_back(Gate::two_qubit("cx", operands[0], operands[1]));
    } else {
      lex_.fail("gates on more than two qubits are not supported", name);
    }
  }

  // number | pi, optionally signed, with '*' and '/' chains
  double parse_param() {
    double value = parse_param_factor();
    for (;;) {
      const Token& t = lex_.peek();
      if (t.type == Token::Type::Symbol && (t.text == "*" || t.text == "/")) {
        const bool mul = t.text == "*";
        lex_.next();
        const double rhs = parse_param_factor();
        value = mul ? value * rhs : value / rhs;
      } else {
        return value;
      }
    }
  }

  double parse_param_factor() {
    Token t = lex_.next();
    double sign = 1.0;
    while (t.type == Token::Type::Symbol && (t.text == "-" || t.text == "+")) {
      if (t.text == "-") sign = -sign;
      t = lex_.next();
    }
    if (t.type == Token::Type::Number) return sign * t.number;
    if (t.type == Token::Type::Ident && t.text == "pi") {
      return sign * std::numbers::pi;
    }
    lex_.fail("expected a numeric parameter", t);
  }

  std::uint32_t qubit_operand(const Token& context) {
    if (!qreg_size_) lex_.fail("no qreg declared", context);
    const Token name = lex_.next();
    if (name.type != Token::Type::Ident || name.text != qreg_name_) {
      lex_.fail("expected qubit register '" + qreg_name_ + "'", name);
    }
    expect_symbol("[");
    const Token index = lex_.next();
    if (index.type != Token::Type::Number ||
        index.number != std::floor(index.number)) {
      lex_.fail("expected qubit index", index);
    }
    expect_symbol("]");
    const auto value = static_cast<std::uint64_t>(index.number);
    if (value >= *qreg_size_) {
      lex_.fail("qubit index " + std::to_string(value) +
                " out of declared range", index);
    }
    return static_cast<std::uint32_t>(value);
  }

  std::uint32_t classical_operand() {
    const Token name = lex_.next();
    if (!creg_size_) lex_.fail("no creg declared", name);
    if (name.type != Token::Type::Ident || name.text != creg_name_) {
      lex_.fail("expected classical register '" + creg_name_ + "'", name);
    }
    expect_symbol("[");
    const Token index = lex_.next();
    if (index.type != Token::Type::Number ||
        index.number != std::floor(index.number)) {
      lex_.fail("expected classical bit index", index);
    }
    expect_symbol("]");
    const auto value = static_cast<std::uint64_t>(index.number);
    if (value >= *creg_size_) {
      lex_.fail("classical bit " + std::to_string(value) +
                " out of declared range", index);
    }
    return static_cast<std::uint32_t>(value);
  }

  void expect_symbol(const std::string& symbol) {
    const Token t = lex_.next();
    if (t.type != Token::Type::Symbol || t.text != symbol) {
      lex_.fail("expected '" + symbol + "'", t);
    }
  }

  void expect_number() {
    const Token t = lex_.next();
    if (t.type != Token::Type::Number) lex_.fail("expected a number", t);
  }

  Lexer lex_;
  std::optional<std::uint32_t> qreg_size_;
  std::optional<std::uint32_t> creg_size_;
  std::string qreg_name_;
  std::string creg_name_;
  std::vector<Gate> gates_;
};

void format_double(std::string& out, double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  return Parser(text).parse();
}

std::string emit_qasm(const CompiledCircuit& compiled,
                      const DeviceModel& device) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(device.num_qubits()) + "];\n";
  if (!compiled.measures.empty()) {
    std::uint32_t max_bit = 0;
    for (const auto& [q, c] : compiled.measures) max_bit = std::max(max_bit, c);
    out += "creg c[" + std::to_string(max_bit + 1) + "];\n";
  }
  const auto qubit = [](PhysicalQubit q) {
    return "q[" + std::to_string(q) + "]";
  };
  for (const PhysicalGate& g : compiled.physical_gates) {
    switch (g.kind) {
      case PhysicalGateKind::OneQubit: {
        out += g.name;
        if (!g.params.empty()) {
          out += '(';
          for (std::size_t i = 0; i < g.params.size(); ++i) {
            if (i) out += ',';
            format_double(out, g.params[i]);
          }
          out += ')';
        }
        out += ' ';
        out += qubit(g.q0);
        out += ";\n";
        break;
      }
      case PhysicalGateKind::TwoQubit:
        out += g.name + " " + qubit(g.q0) + "," + qubit(g.q1) + ";\n";
        break;
      case PhysicalGateKind::Swap:
        out += "cx " + qubit(g.q0) + "," + qubit(g.q1) + ";\n";
        out += "cx " + qubit(g.q1) + "," + qubit(g.q0) + ";\n";
        out += "cx " + qubit(g.q0) + "," + qubit(g.q1) + ";\n";
        break;
    }
  }
  for (const auto& [q, c] : compiled.measures) {
    out += "measure " + qubit(q) + " -> c[" + std::to_string(c) + "];\n";
  }
  return out;
}

std::string emit_qasm(const Circuit& circuit) {
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.num_qubits) + "];\n";
  std::uint32_t max_bit = 0;
  bool has_measure = false;
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::Measure) {
      has_measure = true;
      max_bit = std::max(max_bit, g.classical_bit);
    }
  }
  if (has_measure) {
    out += "creg c[" + std::to_string(max_bit + 1) + "];\n";
  }
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::OneQubit:
        out += g.name;
        if (!g.params.empty()) {
          out += '(';
          for (std::size_t i = 0; i < g.params.size(); ++i) {
            if (i) out += ',';
            format_double(out, g.params[i]);
          }
          out += ')';
        }
        out += " q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::TwoQubit:
        out += g.name + " q[" + std::to_string(g.control) + "],q[" +
               std::to_string(g.target) + "];\n";
        break;
      case GateKind::Measure:
        out += "measure q[" + std::to_string(g.target) + "] -> c[" +
               std::to_string(g.classical_bit) + "];\n";
        break;
    }
  }
  return out;
}

}  // namespace qal
