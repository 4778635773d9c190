#include "hornlog/bridge.hpp"

#include <algorithm>
#include <stdexcept>

namespace hornlog {

BridgeProgram computation_to_program(const EncodingContext& ctx, const MinskyMachine& machine, const Computation& c) {
  if (auto check = validate_computation(machine, c); !check) {
    throw std::invalid_argument("invalid computation at " + std::to_string(check.index) + ": " + check.reason);
  }
  if (!is_halting(c.configs.back())) {
    throw std::invalid_argument("computation ends at " + to_string(c.configs.back()) + ", not the halting configuration");
  }
  BridgeProgram out;
  VertexId v = out.program.root();
  out.main_branch.push_back(v);
  for (std::size_t u = 0; u < c.moves.size(); ++u) {
    const Instruction& ins = machine.instruction(c.moves[u]);
    const HornFormula phi = encode_instruction(ctx, ins);
    if (!phi.is_oplus()) {
      v = out.program.add_child(v, phi);
      out.main_branch.push_back(v);
      continue;
    }
    const SimpleProduct km{ctx.killer_literal(ins.counter)};
    const VertexId fork = v;
    v = out.program.add_child(fork, HornFormula::plain(phi.antecedent(), phi.left()));
    out.main_branch.push_back(v);

    SideChain chain{u, fork, ins.counter, {}, 0};
    VertexId w = out.program.add_child(fork, HornFormula::plain(phi.antecedent(), km));
    chain.vertices.push_back(w);
    const auto& counters = c.configs[u].counters;
    for (std::uint32_t i = 1; i <= ctx.counters(); ++i) {
      if (i == ins.counter) continue;
      const HornFormula kill = HornFormula::plain(km * SimpleProduct{ctx.counter_literal(i)}, km);
      for (std::uint32_t unit = 0; unit < counters[i - 1]; ++unit) {
        w = out.program.add_child(w, kill);
        chain.vertices.push_back(w);
        ++chain.kills;
      }
    }
    w = out.program.add_child(w, HornFormula::plain(km, SimpleProduct{ctx.label_literal(0)}));
    chain.vertices.push_back(w);
    out.side_chains.push_back(std::move(chain));
  }
  return out;
}

std::string_view to_string(ExtractionErrorKind kind) {
  switch (kind) {
    case ExtractionErrorKind::MainLeafNotL0: return "MAIN_LEAF_NOT_L0";
    case ExtractionErrorKind::SideChainForeignFormula: return "SIDE_CHAIN_FOREIGN_FORMULA";
    case ExtractionErrorKind::SideChainNotKilled: return "SIDE_CHAIN_NOT_KILLED";
    case ExtractionErrorKind::NonEncodingEdge: return "NON_ENCODING_EDGE";
    case ExtractionErrorKind::UndefinedVertex: return "UNDEFINED_VERTEX";
  }
  return "?";
}

std::string ExtractionError::describe() const {
  std::string out(to_string(kind));
  if (edge) out += " edge " + std::to_string(*edge);
  if (vertex) out += " vertex " + std::to_string(*vertex);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

namespace {

Extraction failure(ExtractionErrorKind kind, std::optional<EdgeId> edge, std::optional<VertexId> vertex,
                   std::string detail) {
  Extraction out;
  out.error = ExtractionError{kind, edge, vertex, std::move(detail)};
  return out;
}

std::string show(const std::optional<SimpleProduct>& x) { return x ? to_string(*x) : "undefined"; }

}  // namespace

Extraction program_to_computation(const EncodingContext& ctx, const MinskyMachine& machine,
                                  const HornProgram& program, const std::vector<std::uint32_t>& inputs) {
  const EncodedMachine encoded = encode_machine(ctx, machine);
  const SimpleProduct l0{ctx.label_literal(0)};
  const Evaluation eval = evaluate(program, encode_config(ctx, Configuration{1, inputs}));

  Computation comp;
  comp.configs.push_back(Configuration{1, inputs});
  std::vector<VertexId> branch{program.root()};
  VertexId v = program.root();

  auto lookup = [&](const HornFormula& f) -> std::optional<std::size_t> {
    for (const auto& e : encoded.program) {
      if (formula_equiv(e.formula, f)) return e.instruction;
    }
    return std::nullopt;
  };
  auto step_to = [&](EdgeId e) -> std::optional<Extraction> {
    const VertexId child = program.edge(e).child;
    const auto& out = eval.at(child);
    if (!out) return failure(ExtractionErrorKind::UndefinedVertex, e, child, "antecedent does not match");
    auto state = decode_product(ctx, *out);
    if (!state || state->head != HeadKind::Label) {
      return failure(ExtractionErrorKind::NonEncodingEdge, e, child, "OUT " + to_string(*out) + " is not a configuration");
    }
    comp.configs.push_back(Configuration{state->index, state->counters});
    branch.push_back(child);
    v = child;
    return std::nullopt;
  };

  while (!program.is_leaf(v)) {
    if (!program.is_divergent(v)) {
      const EdgeId e = program.outgoing(v)[0];
      const HornFormula& label = program.edge(e).label;
      const auto ins = lookup(label);
      if (!ins) return failure(ExtractionErrorKind::NonEncodingEdge, e, std::nullopt, to_string(label) + " is not in Φ_M");
      comp.moves.push_back(*ins);
      if (auto err = step_to(e)) return *err;
      continue;
    }

    const auto pair = program.outgoing(v);
    const HornFormula used = used_formula(program, pair[0]);
    const auto ins = lookup(used);
    if (!ins || machine.instruction(*ins).kind != InstructionKind::IfZero) {
      return failure(ExtractionErrorKind::NonEncodingEdge, pair[0], v, to_string(used) + " is not a zero-test of Φ_M");
    }
    const Instruction& test = machine.instruction(*ins);
    const SimpleProduct target{ctx.label_literal(test.target)};
    const EdgeId main = program.edge(pair[0]).label.consequent() == target ? pair[0] : pair[1];
    const EdgeId side = main == pair[0] ? pair[1] : pair[0];

    const auto killers = build_killers_for(ctx, test.counter);
    VertexId w = program.edge(side).child;
    for (;;) {
      if (program.is_leaf(w)) break;
      if (program.is_divergent(w)) {
        return failure(ExtractionErrorKind::SideChainForeignFormula, program.outgoing(w)[0], w,
                       "side chain branches at a ⊕-implication");
      }
      const EdgeId e = program.outgoing(w)[0];
      const HornFormula& label = program.edge(e).label;
      if (std::find(killers.begin(), killers.end(), label) == killers.end()) {
        return failure(ExtractionErrorKind::SideChainForeignFormula, e, std::nullopt,
                       to_string(label) + " is not a killing implication for x" + std::to_string(test.counter));
      }
      w = program.edge(e).child;
    }
    if (eval.at(w) != l0) {
      return failure(ExtractionErrorKind::SideChainNotKilled, std::nullopt, w,
                     "side leaf computes " + show(eval.at(w)) + ", so x" + std::to_string(test.counter) + " is not zero");
    }
    comp.moves.push_back(*ins);
    if (auto err = step_to(main)) return *err;
  }

  if (eval.at(v) != l0) {
    return failure(ExtractionErrorKind::MainLeafNotL0, std::nullopt, v, "main leaf computes " + show(eval.at(v)));
  }
  if (auto check = validate_computation(machine, comp); !check) {
    throw std::logic_error("extracted computation is invalid at " + std::to_string(check.index) + ": " + check.reason);
  }
  Extraction out;
  out.computation = std::move(comp);
  out.main_branch = std::move(branch);
  return out;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::AgreeHalts: return "AGREE_HALTS";
    case Verdict::AgreeNoWitness: return "AGREE_NO_WITNESS_WITHIN_BOUNDS";
    case Verdict::BoundsExhausted: return "BOUNDS_EXHAUSTED";
    case Verdict::Disagreement: return "DISAGREEMENT";
  }
  return "?";
}

std::string RoundTripReport::describe() const {
  std::string out = std::string(to_string(verdict)) + "\n";
  out += "search: " + (search_witness ? std::to_string(search_witness->moves.size()) + " moves" : std::string("none")) + "\n";
  if (search_witness) {
    out += "program: " + std::string(built_program_verified ? "strong solution" : "REJECTED") + "\n";
    out += "extraction: " + std::string(extracted_matches ? "matches" : "MISMATCH") + "\n";
  }
  out += "prove: " + (proof_witness ? "witness of depth " + std::to_string(proof_witness->depth()) : std::string("none")) + "\n";
  if (proof_witness) {
    out += "witness extraction: " +
           (proof_extracted ? std::to_string(proof_extracted->moves.size()) + " moves" : std::string("FAILED")) + "\n";
  }
  for (const auto& n : notes) out += "note: " + n + "\n";
  return out;
}

RoundTripReport round_trip_check(const EncodingContext& ctx, const MinskyMachine& machine,
                                 const std::vector<std::uint32_t>& inputs, RoundTripBounds bounds) {
  if (bounds.max_steps == 0 || bounds.max_counter == 0 || bounds.max_depth == 0) {
    throw std::invalid_argument("round-trip bounds must be positive");
  }
  RoundTripReport report;
  const HornSequent sequent = build_sequent(ctx, machine, inputs);
  const Configuration init{1, inputs};

  report.search_witness = search_halting(machine, init, SearchBounds{bounds.max_steps, bounds.max_counter});
  if (report.search_witness) {
    BridgeProgram built = computation_to_program(ctx, machine, *report.search_witness);
    report.built_program_verified = verify_strong_solution(built.program, sequent).accepted();
    Extraction back = program_to_computation(ctx, machine, built.program, inputs);
    if (back.computation) {
      report.extracted_matches = back.computation->configs == report.search_witness->configs;
      report.extracted = std::move(back.computation);
    } else {
      report.notes.push_back("extraction from the built program failed: " + back.error->describe());
    }
    report.built_program = std::move(built.program);
  }

  report.proof_witness = prove_bounded(sequent, bounds.max_depth);
  if (report.proof_witness) {
    Extraction back = program_to_computation(ctx, machine, *report.proof_witness, inputs);
    if (back.computation) {
      report.proof_extracted = std::move(back.computation);
    } else {
      report.notes.push_back("extraction from the proof witness failed: " + back.error->describe());
    }
  }

  const bool searched = report.search_witness.has_value();
  const bool proved = report.proof_witness.has_value();
  if (searched && proved) {
    const bool ok = report.built_program_verified && report.extracted_matches && report.proof_extracted;
    report.verdict = ok ? Verdict::AgreeHalts : Verdict::Disagreement;
  } else if (!searched && !proved) {
    report.verdict = Verdict::AgreeNoWitness;
  } else if (searched) {
    const std::size_t needed = report.built_program->depth();
    if (needed > bounds.max_depth) {
      report.verdict = Verdict::BoundsExhausted;
      report.notes.push_back("halting computation needs a proof of depth " + std::to_string(needed) + " > " +
                             std::to_string(bounds.max_depth));
    } else {
      report.verdict = Verdict::Disagreement;
    }
  } else if (report.proof_extracted) {
    const auto& comp = *report.proof_extracted;
    std::uint32_t peak = 0;
    for (const auto& k : comp.configs) {
      for (auto x : k.counters) peak = std::max(peak, x);
    }
    if (comp.moves.size() > bounds.max_steps || peak > bounds.max_counter) {
      report.verdict = Verdict::BoundsExhausted;
      report.notes.push_back("witness computation has " + std::to_string(comp.moves.size()) + " moves and peak counter " +
                             std::to_string(peak) + ", outside the search bounds");
    } else {
      report.verdict = Verdict::Disagreement;
    }
  } else {
    report.verdict = Verdict::Disagreement;
  }
  return report;
}

}  // namespace hornlog
