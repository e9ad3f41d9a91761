#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bfa/truth_table.hpp"

namespace bfa {

enum class GateKind { and_gate, or_gate };

// Leveled alternating AND/OR circuit. Level-1 operands are signed literals
// (+i for x_i, -i for ~x_i, 1-based); higher-level operands are 1-based gate
// ordinals in the previous level. The last level has exactly one gate.
struct Circuit {
  struct Level {
    GateKind kind = GateKind::and_gate;
    std::vector<std::vector<std::int32_t>> gates;

    friend bool operator==(const Level&, const Level&) = default;
  };

  int n = 0;
  std::vector<Level> levels;

  int depth() const { return static_cast<int>(levels.size()); }
  int size() const {
    int total = 0;
    for (const Level& level : levels) total += static_cast<int>(level.gates.size());
    return total;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct CircuitParseError : std::runtime_error {
  int line;
  int column;
  CircuitParseError(int line_no, int col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ":" +
                           std::to_string(col) + ": " + message),
        line(line_no),
        column(col) {}
};

// Text format:
//   circuit n=<int>
//   level <t> <AND|OR>
//   g<t>.<j> = <operand> <operand> ...
// Levels are numbered 1..d in order, gate ordinals are sequential, `#`
// starts a comment. Gate types must alternate between consecutive levels.
Circuit parse_circuit(const std::string& text);
std::string print_circuit(const Circuit& c);

// Truth table over all 2^n inputs (circuit computes the {0,1} value,
// mapped to ±1 by a -> (-1)^a). Requires n <= 16.
TruthTable evaluate_circuit(const Circuit& c);

// Two-level OR-of-minterms computing exactly tt (an AND of a contradictory
// literal pair when tt is constant +1).
Circuit canonical_dnf(const TruthTable& tt);

}  // namespace bfa
