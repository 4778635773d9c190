#include "hornlog/minsky.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "hornlog/syntax.hpp"

namespace hornlog {

MinskyMachine::MinskyMachine(std::uint32_t counters, std::vector<Instruction> instructions)
    : counters_(counters), instructions_(std::move(instructions)) {
  if (counters_ == 0) throw std::invalid_argument("a machine needs at least one counter");
  std::set<std::uint32_t> declared{0};
  std::size_t halts = 0;
  for (std::size_t i = 0; i < instructions_.size(); ++i) {
    const auto& ins = instructions_[i];
    const std::string where = "instruction I" + std::to_string(i + 1) + ": ";
    if (ins.kind == InstructionKind::Halt) {
      if (ins.label != 0) throw std::invalid_argument(where + "halt must be labelled L0");
      ++halts;
      continue;
    }
    if (ins.label == 0) throw std::invalid_argument(where + "only halt may be labelled L0");
    if (ins.counter == 0 || ins.counter > counters_) {
      throw std::invalid_argument(where + "counter x" + std::to_string(ins.counter) + " out of range");
    }
    declared.insert(ins.label);
  }
  if (halts > 1) throw std::invalid_argument("more than one halt instruction");
  for (std::size_t i = 0; i < instructions_.size(); ++i) {
    const auto& ins = instructions_[i];
    if (ins.kind != InstructionKind::Halt && !declared.contains(ins.target)) {
      throw std::invalid_argument("instruction I" + std::to_string(i + 1) + ": goto L" +
                                  std::to_string(ins.target) + " has no instruction");
    }
  }
  if (halts == 0) instructions_.push_back(Instruction{InstructionKind::Halt, 0});
}

std::vector<std::uint32_t> MinskyMachine::labels() const {
  std::set<std::uint32_t> all{0};
  for (const auto& ins : instructions_) all.insert(ins.label);
  return {all.begin(), all.end()};
}

Configuration halting_configuration(std::uint32_t counters) {
  return Configuration{0, std::vector<std::uint32_t>(counters, 0)};
}

bool is_halting(const Configuration& k) noexcept {
  return k.label == 0 && std::all_of(k.counters.begin(), k.counters.end(), [](auto c) { return c == 0; });
}

std::vector<Move> successors(const MinskyMachine& machine, const Configuration& k) {
  if (k.counters.size() != machine.counters()) {
    throw std::invalid_argument("configuration has " + std::to_string(k.counters.size()) +
                                " counters, machine has " + std::to_string(machine.counters()));
  }
  std::vector<Move> moves;
  const auto& program = machine.instructions();
  for (std::size_t i = 0; i < program.size(); ++i) {
    const auto& ins = program[i];
    if (ins.kind == InstructionKind::Halt || ins.label != k.label) continue;
    const std::size_t m = ins.counter - 1;
    Configuration next{ins.target, k.counters};
    switch (ins.kind) {
      case InstructionKind::Inc:
        ++next.counters[m];
        break;
      case InstructionKind::Dec:
        if (k.counters[m] == 0) continue;
        --next.counters[m];
        break;
      case InstructionKind::IfPos:
        if (k.counters[m] == 0) continue;
        break;
      case InstructionKind::IfZero:
        if (k.counters[m] != 0) continue;
        break;
      case InstructionKind::Halt:
        continue;
    }
    moves.push_back(Move{i, std::move(next)});
  }
  return moves;
}

ComputationCheck validate_computation(const MinskyMachine& machine, const Computation& c) {
  auto reject = [](std::size_t index, std::string reason) {
    return ComputationCheck{false, index, std::move(reason)};
  };
  if (c.configs.empty()) return reject(0, "computation has no configurations");
  if (c.moves.size() + 1 != c.configs.size()) {
    return reject(0, "expected " + std::to_string(c.configs.size() - 1) + " moves, found " +
                         std::to_string(c.moves.size()));
  }
  for (std::size_t u = 0; u < c.configs.size(); ++u) {
    if (c.configs[u].counters.size() != machine.counters()) {
      return reject(u, "configuration " + std::to_string(u) + " has the wrong number of counters");
    }
  }
  for (std::size_t u = 0; u < c.moves.size(); ++u) {
    const std::size_t index = c.moves[u];
    if (index >= machine.instructions().size()) {
      return reject(u, "move " + std::to_string(u) + " names a missing instruction");
    }
    const auto moves = successors(machine, c.configs[u]);
    const bool enabled = std::any_of(moves.begin(), moves.end(), [&](const Move& mv) {
      return mv.instruction == index && mv.next == c.configs[u + 1];
    });
    if (!enabled) {
      return reject(u, "move " + std::to_string(u) + ": I" + std::to_string(index + 1) + " (" +
                           to_string(machine.instruction(index)) + ") does not lead from " +
                           to_string(c.configs[u]) + " to " + to_string(c.configs[u + 1]));
    }
  }
  return {};
}

namespace {

struct ConfigHash {
  std::size_t operator()(const Configuration& k) const noexcept {
    std::size_t h = k.label;
    for (auto c : k.counters) h = h * 1000003u ^ c;
    return h;
  }
};

}  // namespace

std::optional<Computation> search_halting(const MinskyMachine& machine, const Configuration& init,
                                          SearchBounds bounds) {
  if (bounds.max_steps == 0 || bounds.max_counter == 0) {
    throw std::invalid_argument("search bounds must be positive");
  }
  struct Node {
    Configuration config;
    std::size_t parent;
    std::size_t instruction;
    std::size_t depth;
  };
  std::vector<Node> nodes{Node{init, 0, 0, 0}};
  std::unordered_set<Configuration, ConfigHash> seen{init};

  auto unwind = [&](std::size_t at) {
    Computation c;
    for (std::size_t i = at;; i = nodes[i].parent) {
      c.configs.push_back(nodes[i].config);
      if (i == 0) break;
      c.moves.push_back(nodes[i].instruction);
    }
    std::reverse(c.configs.begin(), c.configs.end());
    std::reverse(c.moves.begin(), c.moves.end());
    return c;
  };

  if (is_halting(init)) return unwind(0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= bounds.max_steps) continue;
    for (auto& move : successors(machine, nodes[head].config)) {
      const bool too_big = std::any_of(move.next.counters.begin(), move.next.counters.end(),
                                       [&](auto c) { return c > bounds.max_counter; });
      if (too_big || !seen.insert(move.next).second) continue;
      nodes.push_back(Node{std::move(move.next), head, move.instruction, nodes[head].depth + 1});
      if (is_halting(nodes.back().config)) return unwind(nodes.size() - 1);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text forms

std::string to_string(const Instruction& ins) {
  const std::string head = "L" + std::to_string(ins.label) + ": ";
  const std::string tail = " x" + std::to_string(ins.counter) + " goto L" + std::to_string(ins.target);
  switch (ins.kind) {
    case InstructionKind::Inc: return head + "inc" + tail;
    case InstructionKind::Dec: return head + "dec" + tail;
    case InstructionKind::IfPos: return head + "ifpos" + tail;
    case InstructionKind::IfZero: return head + "ifzero" + tail;
    case InstructionKind::Halt: return head + "halt";
  }
  return head;
}

std::string to_string(const MinskyMachine& machine) {
  std::string out = "counters " + std::to_string(machine.counters()) + "\n";
  for (const auto& ins : machine.instructions()) out += to_string(ins) + "\n";
  return out;
}

std::string to_string(const Configuration& k) {
  std::string out = "(L" + std::to_string(k.label);
  for (auto c : k.counters) out += "," + std::to_string(c);
  return out + ")";
}

namespace {

struct Word {
  std::string text;
  std::size_t column;
};

// Splits a line into words; ':' and ',' are standalone words.
std::vector<Word> split_words(std::string_view line) {
  std::vector<Word> words;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == ':' || line[i] == ',') {
      words.push_back(Word{std::string(1, line[i]), i + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != ':' &&
           line[j] != ',' && line[j] != '#') {
      ++j;
    }
    words.push_back(Word{std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return words;
}

std::optional<std::uint32_t> parse_number(std::string_view text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return std::nullopt;
  }
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::optional<std::uint32_t> parse_prefixed(std::string_view text, char prefix) {
  if (text.size() < 2 || text.front() != prefix) return std::nullopt;
  return parse_number(text.substr(1));
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    fn(line_no, text.substr(start, end - start));
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
}

}  // namespace

std::uint32_t parse_label(std::string_view text) {
  auto value = parse_prefixed(text, 'L');
  if (!value) throw std::invalid_argument("expected a label L<i>, found '" + std::string(text) + "'");
  return *value;
}

MinskyMachine parse_machine(std::string_view text) {
  std::optional<std::uint32_t> counters;
  std::vector<Instruction> program;
  std::vector<std::pair<std::size_t, std::size_t>> target_at;  // line, column of each goto target
  std::optional<std::size_t> halt_line;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto words = split_words(line);
    if (words.empty()) return;
    auto fail = [&](std::size_t word, const std::string& message) -> void {
      const std::size_t column = word < words.size() ? words[word].column : line.size() + 1;
      throw ParseError(message, line_no, column);
    };
    if (words[0].text == "counters") {
      if (counters) fail(0, "duplicate 'counters' declaration");
      if (words.size() != 2) fail(words.size() > 2 ? 2 : 1, "expected 'counters <n>'");
      counters = parse_number(words[1].text);
      if (!counters || *counters == 0) fail(1, "counter count must be a positive integer");
      return;
    }
    if (!counters) fail(0, "expected 'counters <n>' before the first instruction");
    auto label = parse_prefixed(words[0].text, 'L');
    if (!label) fail(0, "expected a label L<i>");
    if (words.size() < 2 || words[1].text != ":") fail(1, "expected ':' after the label");
    if (words.size() < 3) fail(2, "expected an instruction");
    const std::string& op = words[2].text;
    if (op == "halt") {
      if (words.size() != 3) fail(3, "unexpected text after 'halt'");
      if (*label != 0) fail(0, "halt must be labelled L0");
      if (halt_line) fail(0, "second halt instruction (first on line " + std::to_string(*halt_line) + ")");
      halt_line = line_no;
      program.push_back(Instruction{InstructionKind::Halt, 0});
      target_at.emplace_back(line_no, words[0].column);
      return;
    }
    InstructionKind kind;
    if (op == "inc") {
      kind = InstructionKind::Inc;
    } else if (op == "dec") {
      kind = InstructionKind::Dec;
    } else if (op == "ifpos") {
      kind = InstructionKind::IfPos;
    } else if (op == "ifzero") {
      kind = InstructionKind::IfZero;
    } else {
      fail(2, "unknown instruction '" + op + "'");
      return;
    }
    if (words.size() != 6) fail(std::min<std::size_t>(words.size(), 6), "expected '<op> x<m> goto L<j>'");
    auto counter = parse_prefixed(words[3].text, 'x');
    if (!counter || *counter == 0 || *counter > *counters) fail(3, "expected a counter x1..x" + std::to_string(*counters));
    if (words[4].text != "goto") fail(4, "expected 'goto'");
    auto target = parse_prefixed(words[5].text, 'L');
    if (!target) fail(5, "expected a target label L<j>");
    if (*label == 0) fail(0, "only halt may be labelled L0");
    program.push_back(Instruction{kind, *label, *counter, *target});
    target_at.emplace_back(line_no, words[5].column);
  });
  if (!counters) throw ParseError("missing 'counters <n>' declaration", 1, 1);
  std::vector<std::uint32_t> labels{0};
  for (const auto& ins : program) labels.push_back(ins.label);
  for (std::size_t i = 0; i < program.size(); ++i) {
    const auto target = program[i].target;
    if (program[i].kind != InstructionKind::Halt && std::find(labels.begin(), labels.end(), target) == labels.end()) {
      throw ParseError("goto L" + std::to_string(target) + " has no instruction", target_at[i].first, target_at[i].second);
    }
  }
  try {
    return MinskyMachine(*counters, std::move(program));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string format_computation(const Computation& c) {
  std::string out;
  for (std::size_t u = 0; u < c.configs.size(); ++u) {
    const auto& k = c.configs[u];
    out += "L" + std::to_string(k.label) + " : ";
    for (std::size_t i = 0; i < k.counters.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(k.counters[i]);
    }
    if (u > 0 && u - 1 < c.moves.size()) out += " via I" + std::to_string(c.moves[u - 1] + 1);
    out += "\n";
  }
  return out;
}

Computation parse_computation(std::string_view text) {
  Computation c;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto words = split_words(line);
    if (words.empty()) return;
    auto fail = [&](std::size_t word, const std::string& message) -> void {
      const std::size_t column = word < words.size() ? words[word].column : line.size() + 1;
      throw ParseError(message, line_no, column);
    };
    auto label = parse_prefixed(words[0].text, 'L');
    if (!label) fail(0, "expected a label L<i>");
    if (words.size() < 3 || words[1].text != ":") fail(1, "expected ':' after the label");
    Configuration k{*label, {}};
    std::size_t w = 2;
    while (true) {
      if (w >= words.size()) fail(w, "expected a counter value");
      auto value = parse_number(words[w].text);
      if (!value) fail(w, "expected a counter value");
      k.counters.push_back(*value);
      ++w;
      if (w < words.size() && words[w].text == ",") {
        ++w;
        continue;
      }
      break;
    }
    const bool first = c.configs.empty();
    if (w < words.size()) {
      if (first) fail(w, "the first configuration has no move");
      if (words[w].text != "via" || w + 2 != words.size()) fail(w, "expected 'via I<k>'");
      auto index = parse_prefixed(words[w + 1].text, 'I');
      if (!index || *index == 0) fail(w + 1, "expected an instruction reference I<k>");
      c.moves.push_back(*index - 1);
    } else if (!first) {
      fail(w, "missing 'via I<k>' move annotation");
    }
    if (!first && k.counters.size() != c.configs.front().counters.size()) {
      fail(2, "configurations disagree on the number of counters");
    }
    c.configs.push_back(std::move(k));
  });
  if (c.configs.empty()) throw ParseError("empty computation", 1, 1);
  return c;
}

}  // namespace hornlog
