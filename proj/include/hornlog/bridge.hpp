#pragma once

// Minsky computations and strong-solution Horn programs, both ways, plus
// a bounded round-trip harness comparing machine search with proof search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hornlog/encoding.hpp"
#include "hornlog/minsky.hpp"
#include "hornlog/program.hpp"

namespace hornlog {

/// A zero-test side branch: the fork vertex on the main branch, the vertices
/// w_u, w_u^1, ..., w_u^(t_u+1), and the number t_u of killing edges.
struct SideChain {
  std::size_t move;  // index of the zero-test move in the computation
  VertexId fork;
  std::uint32_t counter;
  std::vector<VertexId> vertices;
  std::size_t kills;
};

struct BridgeProgram {
  HornProgram program;
  std::vector<VertexId> main_branch;  // v_0..v_t, one vertex per configuration
  std::vector<SideChain> side_chains;
};

/// Throws std::invalid_argument unless the computation is valid and ends at
/// the halting configuration.
BridgeProgram computation_to_program(const EncodingContext& ctx, const MinskyMachine& machine, const Computation& c);

enum class ExtractionErrorKind {
  MainLeafNotL0,
  SideChainForeignFormula,
  SideChainNotKilled,
  NonEncodingEdge,
  UndefinedVertex,
};

std::string_view to_string(ExtractionErrorKind kind);

struct ExtractionError {
  ExtractionErrorKind kind;
  std::optional<EdgeId> edge;
  std::optional<VertexId> vertex;
  std::string detail;

  std::string describe() const;
};

struct Extraction {
  std::optional<Computation> computation;
  std::optional<ExtractionError> error;
  std::vector<VertexId> main_branch;

  explicit operator bool() const noexcept { return computation.has_value(); }
};

/// Reads the computation off the main branch of `program` run on the encoded
/// input (L1, inputs). Every structural claim is checked; the first
/// violation is reported.
Extraction program_to_computation(const EncodingContext& ctx, const MinskyMachine& machine,
                                  const HornProgram& program, const std::vector<std::uint32_t>& inputs);

enum class Verdict { AgreeHalts, AgreeNoWitness, BoundsExhausted, Disagreement };

std::string_view to_string(Verdict verdict);

struct RoundTripBounds {
  std::size_t max_steps = 1000;
  std::uint32_t max_counter = 10;
  std::size_t max_depth = 20;
};

struct RoundTripReport {
  Verdict verdict = Verdict::Disagreement;
  std::optional<Computation> search_witness;
  std::optional<HornProgram> built_program;
  bool built_program_verified = false;
  std::optional<Computation> extracted;
  bool extracted_matches = false;
  std::optional<HornProgram> proof_witness;
  std::optional<Computation> proof_extracted;
  std::vector<std::string> notes;

  std::string describe() const;
};

/// Throws std::invalid_argument when a bound is zero.
RoundTripReport round_trip_check(const EncodingContext& ctx, const MinskyMachine& machine,
                                 const std::vector<std::uint32_t>& inputs, RoundTripBounds bounds);

}  // namespace hornlog
