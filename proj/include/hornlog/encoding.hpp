#pragma once

// Encoding of Minsky machines as Horn sequents.
//
// Label L_i is the literal `l<i>`, counter x_m is `r<m>`, and the killer
// literal κ_m is spelled `k<m>`. A configuration (L_i, c_1..c_n) becomes
// l_i ⊗ r_1^c_1 ⊗ ... ⊗ r_n^c_n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hornlog/minsky.hpp"
#include "hornlog/syntax.hpp"

namespace hornlog {

class EncodingContext {
 public:
  /// Throws std::invalid_argument for zero counters.
  explicit EncodingContext(std::uint32_t counters);

  std::uint32_t counters() const noexcept { return counters_; }

  std::string label_literal(std::uint32_t label) const;
  std::string counter_literal(std::uint32_t m) const;
  std::string killer_literal(std::uint32_t m) const;

 private:
  std::uint32_t counters_;
};

/// φ_I for instruction types inc, dec, ifpos, ifzero:
///   inc    l_i -o (l_j ⊗ r_m)
///   dec    (l_i ⊗ r_m) -o l_j
///   ifpos  (l_i ⊗ r_m) -o (l_j ⊗ r_m)
///   ifzero l_i -o (l_j ⊕ κ_m)
/// Throws std::invalid_argument for halt.
HornFormula encode_instruction(const EncodingContext& ctx, const Instruction& instruction);

/// 𝒦_m: κ_m -o l_0 followed by (κ_m ⊗ r_i) -o κ_m for i ≠ m ascending.
std::vector<HornFormula> build_killers_for(const EncodingContext& ctx, std::uint32_t m);
/// 𝒦 = 𝒦_1 ∪ ... ∪ 𝒦_n, n² formulas.
std::vector<HornFormula> build_killers(const EncodingContext& ctx);

SimpleProduct encode_config(const EncodingContext& ctx, const Configuration& k);
/// κ_m ⊗ r_1^c_1 ⊗ ... ⊗ r_n^c_n
SimpleProduct encode_killer_state(const EncodingContext& ctx, std::uint32_t m,
                                  const std::vector<std::uint32_t>& counters);

enum class HeadKind { Label, Killer };

struct DecodedState {
  HeadKind head;
  std::uint32_t index;  // label i, or killer counter m
  std::vector<std::uint32_t> counters;

  friend bool operator==(const DecodedState&, const DecodedState&) = default;
};

/// Inverse of encode_config / encode_killer_state. Absent unless the product
/// holds exactly one label-or-killer literal and otherwise only counter
/// literals r_1..r_n.
std::optional<DecodedState> decode_product(const EncodingContext& ctx, const SimpleProduct& x);

/// A formula of Φ_M ∪ 𝒦 together with where it came from.
struct EncodedFormula {
  enum class Origin { Program, Killer };

  HornFormula formula;
  Origin origin;
  std::size_t instruction = 0;  // Program: index into the machine's instructions
  std::uint32_t killer = 0;     // Killer: the m of 𝒦_m
};

struct EncodedMachine {
  std::vector<EncodedFormula> program;  // Φ_M, in instruction order
  std::vector<EncodedFormula> killers;  // 𝒦

  /// Φ_M followed by 𝒦, as a banged zone.
  std::vector<HornFormula> banged_zone() const;
};

/// Throws std::invalid_argument when the context and machine disagree on n.
EncodedMachine encode_machine(const EncodingContext& ctx, const MinskyMachine& machine);

/// l_1 ⊗ r^inputs ; ; !Φ_M, !𝒦 |- l_0
HornSequent build_sequent(const EncodingContext& ctx, const MinskyMachine& machine,
                          const std::vector<std::uint32_t>& inputs);

}  // namespace hornlog
