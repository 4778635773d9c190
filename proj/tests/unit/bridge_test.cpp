#include <doctest.h>

#include "generators.hpp"
#include "hornlog/bridge.hpp"

using namespace hornlog;

namespace {
HornFormula F(std::string_view text) { return parse_formula(text); }

Configuration K(std::uint32_t label, std::uint32_t a, std::uint32_t b) { return Configuration{label, {a, b}}; }

const EncodingContext kCtx(2);

Computation dec_run() { return Computation{{K(1, 2, 0), K(1, 1, 0), K(1, 0, 0), K(0, 0, 0)}, {1, 1, 0}}; }
}  // namespace

TEST_CASE("DEC computation to program") {
  const BridgeProgram b = computation_to_program(kCtx, gen::dec_machine(), dec_run());
  const HornProgram& p = b.program;
  CHECK(p.vertex_count() == 6);
  REQUIRE(p.edges().size() == 5);
  CHECK(p.edge(0).label == F("(l1*r1) -o l1"));
  CHECK(p.edge(1).label == F("(l1*r1) -o l1"));
  CHECK(p.edge(2).label == F("l1 -o l0"));
  CHECK(p.edge(3).label == F("l1 -o k1"));
  CHECK(p.edge(4).label == F("k1 -o l0"));
  CHECK(p.edge(4).parent == 4);
  CHECK(p.edge(4).child == 5);

  const Evaluation eval = evaluate(p, parse_product("l1*r1*r1"));
  for (VertexId leaf : p.leaves()) CHECK(eval.at(leaf) == parse_product("l0"));
  CHECK(verify_strong_solution(p, build_sequent(kCtx, gen::dec_machine(), {2, 0})).accepted());

  CHECK(b.main_branch == std::vector<VertexId>{0, 1, 2, 3});
  REQUIRE(b.side_chains.size() == 1);
  CHECK(b.side_chains[0].move == 2);
  CHECK(b.side_chains[0].fork == 2);
  CHECK(b.side_chains[0].kills == 0);
  CHECK(b.side_chains[0].vertices == std::vector<VertexId>{4, 5});
}

TEST_CASE("side chains kill the other counters") {
  const MinskyMachine m = parse_machine(
      "counters 2\n"
      "L1: ifzero x1 goto L2\n"
      "L2: dec x2 goto L2\n"
      "L2: ifzero x2 goto L0\n");
  const auto c = search_halting(m, K(1, 0, 1), SearchBounds{10, 5});
  REQUIRE(c);
  const BridgeProgram b = computation_to_program(kCtx, m, *c);
  REQUIRE(b.side_chains.size() == 2);
  const SideChain& first = b.side_chains[0];
  CHECK(first.kills == 1);
  const HornProgram& p = b.program;
  const VertexId w = first.vertices[0];
  CHECK(p.edge(p.outgoing(w)[0]).label == F("(k1*r2) -o k1"));
  CHECK(evaluate(p, parse_product("l1*r2")).at(w) == parse_product("k1*r2"));
  CHECK(b.side_chains[1].kills == 0);
  CHECK(verify_strong_solution(p, build_sequent(kCtx, m, {0, 1})).accepted());
}

TEST_CASE("the empty computation is a single vertex") {
  const BridgeProgram b = computation_to_program(kCtx, gen::dec_machine(), Computation{{K(0, 0, 0)}, {}});
  CHECK(b.program.vertex_count() == 1);
  CHECK(evaluate(b.program, parse_product("l0")).at(0) == parse_product("l0"));
}

TEST_CASE("computations must be valid and halted") {
  CHECK_THROWS_AS(computation_to_program(kCtx, gen::dec_machine(), Computation{{K(1, 2, 0), K(1, 1, 0)}, {1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(computation_to_program(kCtx, gen::dec_machine(), Computation{{K(1, 2, 0), K(1, 0, 0)}, {1}}),
                  std::invalid_argument);
}

TEST_CASE("extracting the DEC computation") {
  const BridgeProgram b = computation_to_program(kCtx, gen::dec_machine(), dec_run());
  const Extraction e = program_to_computation(kCtx, gen::dec_machine(), b.program, {2, 0});
  REQUIRE(e);
  CHECK(*e.computation == dec_run());
  CHECK(e.main_branch == b.main_branch);
}

TEST_CASE("extraction errors") {
  const MinskyMachine dec = gen::dec_machine();

  // Main leaf l0*r2 from (L1, 0, 1).
  HornProgram leaf;
  leaf.add_child(0, F("l1 -o l0"));
  VertexId w = leaf.add_child(0, F("l1 -o k1"));
  w = leaf.add_child(w, F("(k1*r2) -o k1"));
  leaf.add_child(w, F("k1 -o l0"));
  const Extraction e1 = program_to_computation(kCtx, dec, leaf, {0, 1});
  REQUIRE(e1.error);
  CHECK(e1.error->kind == ExtractionErrorKind::MainLeafNotL0);
  CHECK(e1.error->describe().rfind("MAIN_LEAF_NOT_L0", 0) == 0);

  // A program formula on the side chain.
  HornProgram foreign;
  foreign.add_child(0, F("l1 -o l0"));
  w = foreign.add_child(0, F("l1 -o k1"));
  w = foreign.add_child(w, F("(l1*r1) -o l1"));
  const Extraction e2 = program_to_computation(kCtx, dec, foreign, {0, 0});
  REQUIRE(e2.error);
  CHECK(e2.error->kind == ExtractionErrorKind::SideChainForeignFormula);
  CHECK(e2.error->edge == 2);

  // A zero test taken with x1 = 1: the main branch recovers, the side chain cannot kill r1.
  const MinskyMachine late = parse_machine(
      "counters 2\n"
      "L1: ifzero x1 goto L2\n"
      "L2: dec x1 goto L0\n");
  HornProgram unkilled;
  const VertexId v = unkilled.add_child(0, F("l1 -o l2"));
  unkilled.add_child(v, F("(l2*r1) -o l0"));
  w = unkilled.add_child(0, F("l1 -o k1"));
  unkilled.add_child(w, F("k1 -o l0"));
  const Extraction e3 = program_to_computation(kCtx, late, unkilled, {1, 0});
  REQUIRE(e3.error);
  CHECK(e3.error->kind == ExtractionErrorKind::SideChainNotKilled);

  // An edge that encodes no instruction.
  const Extraction e4 = program_to_computation(kCtx, dec, HornProgram::single_edge(F("l1 -o l0")), {0, 0});
  REQUIRE(e4.error);
  CHECK(e4.error->kind == ExtractionErrorKind::NonEncodingEdge);
  CHECK(e4.error->edge == 0);

  // Evaluation leaves the program at the first edge.
  const Extraction e5 = program_to_computation(kCtx, dec, HornProgram::single_edge(F("(l1*r1) -o l1")), {0, 0});
  REQUIRE(e5.error);
  CHECK(e5.error->kind == ExtractionErrorKind::UndefinedVertex);
}

TEST_CASE("extraction from proof witnesses") {
  const HornSequent s = build_sequent(kCtx, gen::dec_machine(), {3, 0});
  const auto witness = prove_bounded(s, 10);
  REQUIRE(witness);
  const Extraction e = program_to_computation(kCtx, gen::dec_machine(), *witness, {3, 0});
  REQUIRE(e);
  CHECK(validate_computation(gen::dec_machine(), *e.computation));
  CHECK(e.computation->configs.back() == K(0, 0, 0));
  CHECK(e.computation->moves.size() == 4);
}

TEST_CASE("round trips") {
  const RoundTripReport halts = round_trip_check(kCtx, gen::dec_machine(), {2, 0}, RoundTripBounds{});
  CHECK(halts.verdict == Verdict::AgreeHalts);
  CHECK(halts.built_program_verified);
  CHECK(halts.extracted_matches);
  CHECK(halts.proof_extracted);
  CHECK(halts.describe().rfind("AGREE_HALTS\n", 0) == 0);

  CHECK(round_trip_check(kCtx, gen::dec_machine(), {0, 1}, RoundTripBounds{}).verdict == Verdict::AgreeNoWitness);
  const RoundTripReport inc = round_trip_check(kCtx, gen::inc_machine(), {0, 0}, RoundTripBounds{});
  CHECK(inc.verdict == Verdict::AgreeNoWitness);
  CHECK(to_string(inc.verdict) == "AGREE_NO_WITNESS_WITHIN_BOUNDS");

  // The search finds DEC(5) but the proof depth cannot hold it.
  const RoundTripReport shallow = round_trip_check(kCtx, gen::dec_machine(), {5, 0}, RoundTripBounds{100, 10, 4});
  CHECK(shallow.verdict == Verdict::BoundsExhausted);
  // The proof finds it but the step bound is too small for the search.
  const RoundTripReport short_search = round_trip_check(kCtx, gen::dec_machine(), {5, 0}, RoundTripBounds{3, 10, 20});
  CHECK(short_search.verdict == Verdict::BoundsExhausted);

  CHECK_THROWS_AS(round_trip_check(kCtx, gen::dec_machine(), {0, 0}, RoundTripBounds{0, 10, 20}), std::invalid_argument);
}
