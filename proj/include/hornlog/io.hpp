#pragma once

// Serialization of programs and proofs.
//
// Program text:
//   vertices 3
//   root 0
//   0 -> 1 : (l1*r1) -o l1
//   1 -> 2 : l1 -o l0
// Program JSON:
//   {"vertices":[0,1,2],"root":0,"edges":[{"parent":0,"child":1,"label":"..."}]}
// Proof JSON nodes carry "rule", "conclusion" (sequent text), the rule
// parameters, and "premises".

#include <optional>
#include <string>
#include <string_view>

#include "hornlog/hll.hpp"
#include "hornlog/ll.hpp"
#include "hornlog/program.hpp"

namespace hornlog {

std::string format_program(const HornProgram& program);
std::string program_to_json(const HornProgram& program);
/// Accepts either form; JSON is recognized by a leading '{'. Throws
/// ParseError on malformed text and std::invalid_argument on a structure
/// that is not a binary tree program.
HornProgram parse_program(std::string_view text);

/// Graphviz export; vertices show their OUT value when `input` is given.
std::string program_to_dot(const HornProgram& program, const std::optional<SimpleProduct>& input = std::nullopt);

std::string hll_proof_to_json(const HllProof& proof);
HllProof parse_hll_proof(std::string_view text);

std::string ll_proof_to_json(const LlProof& proof);
LlProof parse_ll_proof(std::string_view text);

}  // namespace hornlog
