// Copyright 2026 The qlbm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlbm/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace qlbm {

std::string_view qasm_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::T: return "t";
    case GateKind::Phase: return "u1";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::CPhase: return "cu1";
    case GateKind::Swap: return "swap";
    case GateKind::Toffoli: return "ccx";
  }
  return "?";
}

std::string emit_qasm(const Kernel& kernel) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << kernel.num_qubits() << "];\n";
  out << std::setprecision(17);
  for (const auto& inst : kernel.instructions()) {
    out << qasm_name(inst.kind);
    if (is_parametric(inst.kind)) out << '(' << inst.angle << ')';
    const auto qs = inst.operands();
    for (std::size_t i = 0; i < qs.size(); ++i) out << (i == 0 ? " " : ",") << "q[" << qs[i] << ']';
    out << ";\n";
  }
  return out.str();
}

namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t end_line = 1;    // position just past the token
  std::size_t end_column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> tokenize() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        t.kind = Tok::End;
        t.end_line = line_;
        t.end_column = col_;
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          t.text += advance();
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        t.kind = Tok::Number;
        while (pos_ < src_.size()) {
          const char d = src_[pos_];
          if (std::isdigit(static_cast<unsigned char>(d)) || d == '.') {
            t.text += advance();
          } else if ((d == 'e' || d == 'E')) {
            t.text += advance();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) t.text += advance();
          } else {
            break;
          }
        }
      } else if (c == '"') {
        t.kind = Tok::String;
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') t.text += advance();
        if (pos_ >= src_.size() || src_[pos_] != '"')
          throw QasmError(t.line, t.column, "unterminated string literal");
        advance();
      } else if (std::string_view("[](),;+-*/").find(c) != std::string_view::npos) {
        t.kind = Tok::Symbol;
        t.text = advance();
      } else {
        throw QasmError(t.line, t.column, std::string("unexpected character '") + c + "'");
      }
      t.end_line = line_;
      t.end_column = col_;
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::optional<GateKind> gate_from_qasm(std::string_view name) {
  for (const GateKind k : kAllGateKinds)
    if (qasm_name(k) == name) return k;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Kernel parse(std::string name) {
    expect_ident("OPENQASM", "program must start with 'OPENQASM 2.0;'");
    const Token& ver = next();
    if (ver.kind != Tok::Number || (ver.text != "2.0" && ver.text != "2"))
      throw error_at(ver, "unsupported OpenQASM version '" + ver.text + "'");
    expect_semicolon();

    if (is_ident("include")) {
      next();
      const Token& file = next();
      if (file.kind != Tok::String) throw error_at(file, "expected include file name");
      expect_semicolon();
    }

    expect_ident("qreg", "expected 'qreg' declaration");
    const Token& reg = next();
    if (reg.kind != Tok::Ident) throw error_at(reg, "expected register name");
    reg_name_ = reg.text;
    expect_symbol("[");
    width_ = parse_index();
    if (width_ == 0) throw error_at(previous(), "register must have at least one qubit");
    expect_symbol("]");
    expect_semicolon();

    std::vector<GateInstruction> instructions;
    while (peek().kind != Tok::End) {
      const Token& head = next();
      if (head.kind != Tok::Ident) throw error_at(head, "expected a gate statement");
      if (head.text == "barrier") {
        parse_barrier();
        continue;
      }
      if (head.text == "qreg") throw error_at(head, "only one qreg declaration is supported");
      const auto kind = gate_from_qasm(head.text);
      if (!kind) throw error_at(head, "unknown gate '" + head.text + "'");

      double angle = 0.0;
      if (is_parametric(*kind)) {
        expect_symbol("(");
        angle = parse_expr();
        expect_symbol(")");
      } else if (is_symbol("(")) {
        throw error_at(peek(), "gate '" + head.text + "' takes no parameters");
      }

      std::vector<Qubit> operands;
      std::vector<const Token*> operand_tokens;
      do {
        operand_tokens.push_back(&peek());
        operands.push_back(parse_qubit());
      } while (accept_symbol(","));
      expect_semicolon();

      if (operands.size() != arity(*kind))
        throw error_at(head, "gate '" + head.text + "' expects " + std::to_string(arity(*kind)) +
                                 " qubit(s), got " + std::to_string(operands.size()));
      for (std::size_t i = 0; i < operands.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (operands[i] == operands[j])
            throw error_at(*operand_tokens[i], "repeated qubit operand");
      instructions.push_back(make_instruction(*kind, operands, angle));
    }
    return build_kernel(std::move(name), width_, std::move(instructions));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& previous() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  static QasmError error_at(const Token& t, const std::string& msg) {
    return QasmError(t.line, t.column, msg);
  }

  bool is_ident(std::string_view s) const {
    return peek().kind == Tok::Ident && peek().text == s;
  }
  bool is_symbol(std::string_view s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }
  bool accept_symbol(std::string_view s) {
    if (!is_symbol(s)) return false;
    next();
    return true;
  }

  void expect_ident(std::string_view s, const std::string& msg) {
    if (!is_ident(s)) throw error_at(peek(), msg);
    next();
  }
  void expect_symbol(std::string_view s) {
    if (!is_symbol(s))
      throw error_at(peek(), "expected '" + std::string(s) + "'" + found());
    next();
  }
  // A missing ';' is reported where the statement ended, not at the next token.
  void expect_semicolon() {
    if (is_symbol(";")) {
      next();
      return;
    }
    const Token& prev = previous();
    throw QasmError(prev.end_line, prev.end_column, "expected ';'" + found());
  }
  std::string found() const {
    if (peek().kind == Tok::End) return " before end of input";
    return " before '" + peek().text + "'";
  }

  std::size_t parse_index() {
    const Token& t = next();
    std::size_t value = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    if (t.kind != Tok::Number || std::from_chars(first, last, value).ptr != last)
      throw error_at(t, "expected an integer index");
    return value;
  }

  Qubit parse_qubit() {
    const Token& reg = next();
    if (reg.kind != Tok::Ident) throw error_at(reg, "expected qubit reference");
    if (reg.text != reg_name_) throw error_at(reg, "unknown register '" + reg.text + "'");
    expect_symbol("[");
    const Token& idx_tok = peek();
    const std::size_t idx = parse_index();
    if (idx >= width_)
      throw error_at(idx_tok, "qubit index " + std::to_string(idx) + " exceeds register width " +
                                  std::to_string(width_));
    expect_symbol("]");
    return static_cast<Qubit>(idx);
  }

  void parse_barrier() {
    do {
      const Token& reg = next();
      if (reg.kind != Tok::Ident || reg.text != reg_name_)
        throw error_at(reg, "barrier expects qubits of register '" + reg_name_ + "'");
      if (is_symbol("[")) {
        --pos_;
        parse_qubit();
      }
    } while (accept_symbol(","));
    expect_semicolon();
  }

  // expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
  double parse_expr() {
    double v = parse_term();
    for (;;) {
      if (accept_symbol("+")) v += parse_term();
      else if (accept_symbol("-")) v -= parse_term();
      else return v;
    }
  }
  double parse_term() {
    double v = parse_unary();
    for (;;) {
      if (accept_symbol("*")) v *= parse_unary();
      else if (accept_symbol("/")) v /= parse_unary();
      else return v;
    }
  }
  double parse_unary() {
    if (accept_symbol("-")) return -parse_unary();
    if (accept_symbol("+")) return parse_unary();
    if (accept_symbol("(")) {
      const double v = parse_expr();
      expect_symbol(")");
      return v;
    }
    const Token& t = next();
    if (t.kind == Tok::Ident && t.text == "pi") return std::numbers::pi;
    if (t.kind == Tok::Number) {
      char* end = nullptr;
      const double v = std::strtod(t.text.c_str(), &end);
      if (end != t.text.c_str() + t.text.size()) throw error_at(t, "malformed number '" + t.text + "'");
      return v;
    }
    throw error_at(t, "expected an angle expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string reg_name_;
  std::size_t width_ = 0;
};

}  // namespace

Kernel parse_qasm(std::string_view text, std::string name) {
  Parser parser(Lexer(text).tokenize());
  return parser.parse(std::move(name));
}

}  // namespace qlbm
