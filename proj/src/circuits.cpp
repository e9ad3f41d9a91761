#include "bfa/circuits.hpp"

#include <charconv>
#include <sstream>

#include "bfa/bits.hpp"

namespace bfa {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#')
      ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

int parse_int(const std::string& s, int line_no, int col, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw CircuitParseError(line_no, col, std::string("expected ") + what);
  return value;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool seen_header = false;
  int gates_in_level = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> tok = tokenize(line);
    if (tok.empty()) continue;

    if (!seen_header) {
      if (tok[0].text != "circuit")
        throw CircuitParseError(line_no, tok[0].column, "expected 'circuit n=<int>' header");
      if (tok.size() != 2 || tok[1].text.substr(0, 2) != "n=")
        throw CircuitParseError(line_no, tok.size() > 1 ? tok[1].column : tok[0].column,
                                "expected 'n=<int>'");
      c.n = parse_int(tok[1].text.substr(2), line_no, tok[1].column + 2, "variable count");
      if (c.n < 1 || c.n > TruthTable::max_vars)
        throw CircuitParseError(line_no, tok[1].column, "n out of range [1, 20]");
      seen_header = true;
      continue;
    }

    if (tok[0].text == "level") {
      if (tok.size() != 3)
        throw CircuitParseError(line_no, tok[0].column, "expected 'level <t> <AND|OR>'");
      int t = parse_int(tok[1].text, line_no, tok[1].column, "level number");
      if (t != static_cast<int>(c.levels.size()) + 1)
        throw CircuitParseError(line_no, tok[1].column,
                                "levels must be numbered consecutively from 1");
      if (!c.levels.empty() && gates_in_level == 0)
        throw CircuitParseError(line_no, tok[0].column, "previous level has no gates");
      GateKind kind;
      if (tok[2].text == "AND")
        kind = GateKind::and_gate;
      else if (tok[2].text == "OR")
        kind = GateKind::or_gate;
      else
        throw CircuitParseError(line_no, tok[2].column, "gate type must be AND or OR");
      if (!c.levels.empty() && c.levels.back().kind == kind)
        throw CircuitParseError(line_no, tok[2].column,
                                "gate types must alternate between levels");
      c.levels.push_back({kind, {}});
      gates_in_level = 0;
      continue;
    }

    // gate line: g<t>.<j> = operands
    if (c.levels.empty())
      throw CircuitParseError(line_no, tok[0].column, "gate before any level declaration");
    const std::string& name = tok[0].text;
    std::size_t dot = name.find('.');
    if (name.size() < 4 || name[0] != 'g' || dot == std::string::npos)
      throw CircuitParseError(line_no, tok[0].column, "expected gate name g<t>.<j>");
    int t = parse_int(name.substr(1, dot - 1), line_no, tok[0].column + 1, "level number");
    int ordinal = parse_int(name.substr(dot + 1), line_no,
                            tok[0].column + static_cast<int>(dot) + 1, "gate ordinal");
    if (t != static_cast<int>(c.levels.size()))
      throw CircuitParseError(line_no, tok[0].column, "gate declared outside the current level");
    if (ordinal != gates_in_level + 1)
      throw CircuitParseError(line_no, tok[0].column, "gate ordinals must be sequential");
    if (tok.size() < 3 || tok[1].text != "=")
      throw CircuitParseError(line_no, tok.size() > 1 ? tok[1].column : tok[0].column,
                              "expected '=' and a nonempty operand list");

    std::vector<std::int32_t> operands;
    bool first_level = c.levels.size() == 1;
    for (std::size_t k = 2; k < tok.size(); ++k) {
      const std::string& op = tok[k].text;
      if (first_level) {
        bool negated = op.size() > 0 && op[0] == '~';
        std::string body = negated ? op.substr(1) : op;
        if (body.size() < 2 || body[0] != 'x')
          throw CircuitParseError(line_no, tok[k].column,
                                  "level-1 operands must be literals x<i> or ~x<i>");
        int var = parse_int(body.substr(1), line_no, tok[k].column, "variable index");
        if (var < 1 || var > c.n)
          throw CircuitParseError(line_no, tok[k].column, "literal references unknown variable");
        operands.push_back(negated ? -var : var);
      } else {
        std::size_t d = op.find('.');
        if (op.size() < 4 || op[0] != 'g' || d == std::string::npos)
          throw CircuitParseError(line_no, tok[k].column, "expected operand g<t-1>.<j>");
        int ot = parse_int(op.substr(1, d - 1), line_no, tok[k].column, "operand level");
        int oj = parse_int(op.substr(d + 1), line_no, tok[k].column, "operand ordinal");
        if (ot != static_cast<int>(c.levels.size()) - 1)
          throw CircuitParseError(line_no, tok[k].column,
                                  "operands must come from the previous level");
        int prev_gates = static_cast<int>(c.levels[c.levels.size() - 2].gates.size());
        if (oj < 1 || oj > prev_gates)
          throw CircuitParseError(line_no, tok[k].column, "dangling gate reference");
        operands.push_back(oj);
      }
    }
    c.levels.back().gates.push_back(std::move(operands));
    ++gates_in_level;
  }

  if (!seen_header) throw CircuitParseError(1, 1, "missing 'circuit' header");
  if (c.levels.empty()) throw CircuitParseError(line_no, 1, "circuit has no levels");
  if (c.levels.back().gates.size() != 1)
    throw CircuitParseError(line_no, 1, "last level must declare exactly one output gate");
  if (gates_in_level == 0) throw CircuitParseError(line_no, 1, "last level has no gates");
  return c;
}

std::string print_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "circuit n=" << c.n << "\n";
  for (std::size_t t = 0; t < c.levels.size(); ++t) {
    const Circuit::Level& level = c.levels[t];
    out << "level " << t + 1 << ' '
        << (level.kind == GateKind::and_gate ? "AND" : "OR") << "\n";
    for (std::size_t j = 0; j < level.gates.size(); ++j) {
      out << 'g' << t + 1 << '.' << j + 1 << " =";
      for (std::int32_t op : level.gates[j]) {
        if (t == 0)
          out << (op < 0 ? " ~x" + std::to_string(-op) : " x" + std::to_string(op));
        else
          out << " g" << t << '.' << op;
      }
      out << "\n";
    }
  }
  return out.str();
}

TruthTable evaluate_circuit(const Circuit& c) {
  if (c.n > 16) throw std::invalid_argument("evaluate_circuit: n must be <= 16");
  if (c.levels.empty() || c.levels.back().gates.size() != 1)
    throw std::invalid_argument("evaluate_circuit: malformed circuit");

  std::size_t words = c.n <= 6 ? 1 : (std::size_t{1} << (c.n - 6));
  std::uint64_t valid = c.n < 6 ? (1ULL << (1 << c.n)) - 1 : ~0ULL;
  using BitVec = std::vector<std::uint64_t>;

  auto literal_vec = [&](std::int32_t lit) {
    BitVec v(words);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t pat = bits::var_pattern_word(lit < 0 ? -lit : lit, w);
      v[w] = (lit < 0 ? ~pat : pat) & valid;
    }
    return v;
  };

  std::vector<BitVec> prev, cur;
  for (std::size_t t = 0; t < c.levels.size(); ++t) {
    const Circuit::Level& level = c.levels[t];
    cur.clear();
    for (const auto& gate : level.gates) {
      if (gate.empty()) throw std::invalid_argument("evaluate_circuit: empty gate");
      bool is_and = level.kind == GateKind::and_gate;
      BitVec acc(words, is_and ? valid : 0);
      for (std::int32_t op : gate) {
        BitVec operand = t == 0 ? literal_vec(op) : prev[op - 1];
        for (std::size_t w = 0; w < words; ++w)
          acc[w] = is_and ? (acc[w] & operand[w]) : (acc[w] | operand[w]);
      }
      cur.push_back(std::move(acc));
    }
    prev = std::move(cur);
  }

  TruthTable out(c.n);
  out.words = prev[0];
  return out;
}

Circuit canonical_dnf(const TruthTable& tt) {
  Circuit c;
  c.n = tt.n;
  Circuit::Level minterms{GateKind::and_gate, {}};
  for (std::size_t j = 0; j < tt.size(); ++j) {
    if (!tt.bit(j)) continue;
    std::vector<std::int32_t> gate;
    for (int i = 1; i <= tt.n; ++i)
      gate.push_back((j >> (i - 1)) & 1 ? i : -i);
    minterms.gates.push_back(std::move(gate));
  }
  if (minterms.gates.empty()) {
    // constant +1: a contradictory AND feeds the OR
    minterms.gates.push_back({1, -1});
  }
  std::vector<std::int32_t> output;
  for (std::size_t g = 1; g <= minterms.gates.size(); ++g)
    output.push_back(static_cast<std::int32_t>(g));
  c.levels.push_back(std::move(minterms));
  c.levels.push_back({GateKind::or_gate, {std::move(output)}});
  return c;
}

}  // namespace bfa
