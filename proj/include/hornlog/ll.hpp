#pragma once

// Cut-free derivations in the linear-logic fragment for Horn sequents, the
// L⊕ push-down normalization, and translation into Horn Linear Logic.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hornlog/hll.hpp"
#include "hornlog/syntax.hpp"

namespace hornlog {

/// (Y1 ⊕ Y2) introduced by the L⊸⊕ inference carrying `tag`. Tags tell apart
/// equal ⊕-products living in one context.
struct OplusProduct {
  SimpleProduct left;
  SimpleProduct right;
  std::uint32_t tag;

  friend auto operator<=>(const OplusProduct&, const OplusProduct&) = default;
  friend bool operator==(const OplusProduct&, const OplusProduct&) = default;
};

struct Banged {
  HornFormula formula;

  friend auto operator<=>(const Banged&, const Banged&) = default;
  friend bool operator==(const Banged&, const Banged&) = default;
};

using LlFormula = std::variant<SimpleProduct, HornFormula, Banged, OplusProduct>;

struct LlSequent {
  std::vector<LlFormula> context;
  SimpleProduct goal;
};

/// Contexts equal as multisets (implications up to ⊕ commutativity) and goals equal.
bool ll_sequent_equiv(const LlSequent& a, const LlSequent& b);

enum class LlRule { I, LTensor, RTensor, LImp, LImpOplus, LOplus, LBang, WBang, CBang };

std::string_view rule_tag(LlRule rule);
std::optional<LlRule> parse_ll_rule(std::string_view tag);

/// Rule parameters:
///   LTensor    parts (X, Y) joined into X ⊗ Y
///   LImp       formula X -o Y
///   LImpOplus  formula X -o (Y1 + Y2) and the tag of the ⊕-product it creates
///   LOplus     the ⊕-product it consumes
///   LBang, WBang, CBang  formula A
/// Context splits are given by the premises.
struct LlProof {
  LlRule rule;
  LlSequent conclusion;
  std::vector<LlProof> premises;
  std::optional<HornFormula> formula;
  std::optional<std::pair<SimpleProduct, SimpleProduct>> parts;
  std::optional<OplusProduct> oplus;
};

namespace ll {

LlProof identity(SimpleProduct x);
/// Premise holds X and Y separately.
LlProof tensor_left(LlProof premise, SimpleProduct x, SimpleProduct y);
LlProof tensor_right(LlProof left, LlProof right);
/// Σ1 |- X and Y, Σ2 |- Z give Σ1, X -o Y, Σ2 |- Z.
LlProof imp_left(LlProof left, HornFormula a, LlProof right);
/// Σ1 |- X and (Y1 ⊕ Y2)#tag, Σ2 |- Z give Σ1, X -o (Y1 + Y2), Σ2 |- Z.
LlProof imp_oplus_left(LlProof left, HornFormula a, LlProof right, std::uint32_t tag);
/// Σ, Y1 |- Z and Σ, Y2 |- Z give Σ, (Y1 ⊕ Y2)#tag |- Z.
LlProof oplus_left(LlProof left, LlProof right, OplusProduct occurrence);
LlProof bang_left(LlProof premise, HornFormula a);
LlProof weaken(LlProof premise, HornFormula a);
LlProof contract(LlProof premise, HornFormula a);

}  // namespace ll

ProofCheck check_ll_proof(const LlProof& proof);

/// Horn reading W, Γ, !Δ |- Z of an LL sequent: products tensored into W,
/// implications into Γ, banged implications into Δ. Absent when the context
/// has no product or holds a ⊕-product.
std::optional<HornSequent> horn_reading(const LlSequent& s);

/// Every L⊕ is the right premise of the L⊸⊕ that created its ⊕-product.
bool oplus_adjacent(const LlProof& proof);

/// Largest number of inferences strictly between an L⊸⊕ and an L⊕ that
/// consumes its ⊕-product.
std::size_t oplus_separation(const LlProof& proof);

struct NormalizationTrace {
  std::size_t conversions = 0;
  /// For each normalized L⊸⊕, the sum of the depths of its L⊕ nodes above
  /// it, recorded before and after each conversion.
  std::vector<std::vector<std::size_t>> measures;
};

/// Commutes every L⊕ down until it sits directly on its L⊸⊕. The result has
/// the same conclusion and checks. Throws std::invalid_argument on an
/// unchecked proof, or an L⊕ without a matching L⊸⊕ below it.
LlProof push_oplus_down(const LlProof& proof, NormalizationTrace* trace = nullptr);

/// Normalizes, then simulates each LL inference with HLL rules. Throws
/// std::invalid_argument when the conclusion has no Horn reading.
HllProof translate_ll_to_hll(const LlProof& proof);

std::string to_string(const LlFormula& formula);
std::string to_string(const LlSequent& sequent);
/// `a*b, a -o (b + c), !(a -o b), (b + c)#1 |- goal`
LlSequent parse_ll_sequent(std::string_view text);
LlFormula parse_ll_formula(std::string_view text);

std::size_t proof_size(const LlProof& proof);

}  // namespace hornlog
