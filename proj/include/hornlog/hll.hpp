#pragma once

// Horn Linear Logic derivations, their checker, and compilation of a
// checked derivation into a strong-solution Horn program.

#include <optional>
#include <string>
#include <vector>

#include "hornlog/program.hpp"
#include "hornlog/syntax.hpp"

namespace hornlog {

enum class HllRule { I, LTensor, H, M, OplusH, LBang, WBang, CBang, Cut };

std::string_view rule_tag(HllRule rule);
std::optional<HllRule> parse_hll_rule(std::string_view tag);

/// One inference with its full conclusion. Rule parameters:
///   M        frame V (non-empty)
///   OplusH   formula X -o (Y1 + Y2) and frame V (may be empty)
///   LBang, WBang, CBang  formula A
///   Cut      cut product U; the zone split is given by the premises
struct HllProof {
  HllRule rule;
  HornSequent conclusion;
  std::vector<HllProof> premises;
  Frame frame;
  std::optional<HornFormula> formula;
  std::optional<SimpleProduct> cut;
};

/// Builders compute the conclusion from the premises and throw
/// std::invalid_argument when the rule does not apply.
namespace hll {

HllProof identity(SimpleProduct x);
HllProof horn(HornFormula f);
/// Restates the premise; `conclusion` must be equivalent to it.
HllProof tensor_left(HllProof premise, HornSequent conclusion);
HllProof tensor_left(HllProof premise);
HllProof frame(HllProof premise, Frame v);
/// Premise i proves (Y_i ⊗ V), Γ, !Δ |- Z for A = X -o (Y1 + Y2).
HllProof oplus_horn(HornFormula a, Frame v, HllProof left, HllProof right);
/// Moves one linear occurrence of `a` to the banged zone.
HllProof bang_left(HllProof premise, HornFormula a);
HllProof weaken(HllProof premise, HornFormula a);
/// Merges two banged occurrences of `a`.
HllProof contract(HllProof premise, HornFormula a);
HllProof cut(HllProof first, HllProof second);

}  // namespace hll

struct ProofCheck {
  bool ok = true;
  std::string path;  // "root", "root.1.0", ...: premise indices from the root
  std::string rule;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
  std::string describe() const;
};

/// Checks every node against its rule schema, up to ≅ and multiset equality
/// of zones. Reports the first failing node in preorder.
ProofCheck check_hll_proof(const HllProof& proof);

/// Throws std::invalid_argument when the proof does not check.
HornProgram compile_hll_to_program(const HllProof& proof);

std::size_t proof_size(const HllProof& proof);

}  // namespace hornlog
