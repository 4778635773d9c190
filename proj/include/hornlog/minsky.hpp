#pragma once

// Nondeterministic n-counter Minsky machines.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hornlog {

enum class InstructionKind { Inc, Dec, IfPos, IfZero, Halt };

/// `L<label>: <kind> x<counter> goto L<target>`; counters are 1-based.
/// Halt instructions carry label 0 and ignore the other fields.
struct Instruction {
  InstructionKind kind;
  std::uint32_t label;
  std::uint32_t counter = 0;
  std::uint32_t target = 0;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

class MinskyMachine {
 public:
  /// Validates the program and appends the `L0: halt` instruction when it
  /// is missing. Throws std::invalid_argument on:
  ///  - zero counters,
  ///  - a non-halt instruction at L0, or a halt anywhere else,
  ///  - more than one halt,
  ///  - a counter index outside [1..n],
  ///  - a goto target that is neither L0 nor the label of some instruction.
  MinskyMachine(std::uint32_t counters, std::vector<Instruction> instructions);

  std::uint32_t counters() const noexcept { return counters_; }
  const std::vector<Instruction>& instructions() const noexcept { return instructions_; }
  const Instruction& instruction(std::size_t index) const { return instructions_.at(index); }
  /// Labels of all instructions, sorted, including 0.
  std::vector<std::uint32_t> labels() const;

 private:
  std::uint32_t counters_;
  std::vector<Instruction> instructions_;
};

struct Configuration {
  std::uint32_t label;
  std::vector<std::uint32_t> counters;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

Configuration halting_configuration(std::uint32_t counters);
bool is_halting(const Configuration& k) noexcept;

struct Move {
  std::size_t instruction;  // index into MinskyMachine::instructions()
  Configuration next;

  friend bool operator==(const Move&, const Move&) = default;
};

/// All enabled moves from `k`, in program order. Test instructions block
/// when their condition fails and decrement at zero is disabled.
/// Throws std::invalid_argument if `k` has the wrong number of counters.
std::vector<Move> successors(const MinskyMachine& machine, const Configuration& k);

struct Computation {
  std::vector<Configuration> configs;
  std::vector<std::size_t> moves;

  friend bool operator==(const Computation&, const Computation&) = default;
};

struct ComputationCheck {
  bool ok = true;
  std::size_t index = 0;  // first offending move (or configuration for shape errors)
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

ComputationCheck validate_computation(const MinskyMachine& machine, const Computation& c);

struct SearchBounds {
  std::size_t max_steps;
  std::uint32_t max_counter;
};

/// Breadth-first search for a shortest computation from `init` to the
/// halting configuration. Configurations with a counter above
/// `max_counter` are pruned. Absence is not a proof of non-halting.
std::optional<Computation> search_halting(const MinskyMachine& machine, const Configuration& init,
                                          SearchBounds bounds);

std::string to_string(const Instruction& instruction);
std::string to_string(const MinskyMachine& machine);
std::string to_string(const Configuration& k);

/// Machine text format, one instruction per line, `#` comments:
///   counters 2
///   L1: ifzero x1 goto L0
///   L1: dec x1 goto L1
///   L0: halt
MinskyMachine parse_machine(std::string_view text);

/// One configuration per line, `L<i> : c1,...,cn`; every line after the
/// first carries the move that produced it as ` via I<k>` (1-based).
std::string format_computation(const Computation& c);
Computation parse_computation(std::string_view text);

/// Parses `L<i>` into i. Throws std::invalid_argument.
std::uint32_t parse_label(std::string_view text);

}  // namespace hornlog
