#include <doctest.h>

#include "generators.hpp"
#include "hornlog/encoding.hpp"

using namespace hornlog;

namespace {
std::string show(const std::vector<HornFormula>& fs) {
  std::string out;
  for (const auto& f : fs) out += (out.empty() ? "" : ", ") + to_string(f);
  return out;
}
}  // namespace

TEST_CASE("instruction formulas") {
  const EncodingContext ctx(2);
  CHECK(to_string(encode_instruction(ctx, {InstructionKind::Inc, 2, 1, 3})) == "l2 -o (l3*r1)");
  CHECK(to_string(encode_instruction(ctx, {InstructionKind::IfZero, 1, 1, 0})) == "l1 -o (l0 + k1)");
  CHECK(to_string(encode_instruction(ctx, {InstructionKind::Dec, 1, 1, 1})) == "(l1*r1) -o l1");
  CHECK(to_string(encode_instruction(ctx, {InstructionKind::IfPos, 1, 2, 3})) == "(l1*r2) -o (l3*r2)");
  CHECK_THROWS_AS(encode_instruction(ctx, {InstructionKind::Halt, 0}), std::invalid_argument);
}

TEST_CASE("killers") {
  CHECK(show(build_killers(EncodingContext(2))) == "k1 -o l0, (k1*r2) -o k1, k2 -o l0, (k2*r1) -o k2");
  CHECK(show(build_killers(EncodingContext(1))) == "k1 -o l0");
  const auto k2 = build_killers_for(EncodingContext(3), 2);
  CHECK(show(k2) == "k2 -o l0, (k2*r1) -o k2, (k2*r3) -o k2");
  CHECK(build_killers(EncodingContext(3)).size() == 9);
  CHECK_THROWS_AS(EncodingContext(0), std::invalid_argument);
}

TEST_CASE("configurations as products") {
  const EncodingContext ctx(2);
  CHECK(to_string(encode_config(ctx, {1, {2, 0}})) == "l1*r1*r1");
  CHECK(to_string(encode_config(ctx, {0, {0, 0}})) == "l0");
  CHECK(to_string(encode_config(ctx, {2, {0, 3}})) == "l2*r2*r2*r2");
  CHECK(to_string(encode_killer_state(ctx, 1, {0, 1})) == "k1*r2");
}

TEST_CASE("decoding products") {
  const EncodingContext ctx(2);
  CHECK(decode_product(ctx, parse_product("l1*r1*r1")) == DecodedState{HeadKind::Label, 1, {2, 0}});
  CHECK(decode_product(ctx, parse_product("k1*r2")) == DecodedState{HeadKind::Killer, 1, {0, 1}});
  CHECK_FALSE(decode_product(ctx, parse_product("r1*r2")));
  CHECK_FALSE(decode_product(ctx, parse_product("l1*l2")));
  CHECK_FALSE(decode_product(ctx, parse_product("l1*k1")));
  CHECK_FALSE(decode_product(ctx, parse_product("l1*r3")));
  CHECK_FALSE(decode_product(ctx, parse_product("l1*q")));
  CHECK_FALSE(decode_product(ctx, parse_product("k0")));
}

TEST_CASE("encoded sequents") {
  const EncodingContext ctx(2);
  const HornSequent s = build_sequent(ctx, gen::dec_machine(), {2, 0});
  CHECK(to_string(s) ==
        "l1*r1*r1 ; ; l1 -o (l0 + k1), (l1*r1) -o l1, k1 -o l0, (k1*r2) -o k1, k2 -o l0, (k2*r1) -o k2 |- l0");
  CHECK(to_string(build_sequent(ctx, gen::inc_machine(), {0, 0}).input) == "l1");

  const MinskyMachine one = parse_machine("counters 1\nL1: inc x1 goto L1\n");
  const HornSequent s1 = build_sequent(EncodingContext(1), one, {3});
  CHECK(show(s1.banged) == "l1 -o (l1*r1), k1 -o l0");

  CHECK_THROWS_AS(build_sequent(EncodingContext(1), gen::dec_machine(), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(build_sequent(ctx, gen::dec_machine(), {0}), std::invalid_argument);
}

TEST_CASE("encoded formulas keep their origin") {
  const EncodingContext ctx(2);
  const EncodedMachine em = encode_machine(ctx, gen::dec_machine());
  REQUIRE(em.program.size() == 2);
  CHECK(em.program[1].instruction == 1);
  CHECK(em.program[1].origin == EncodedFormula::Origin::Program);
  REQUIRE(em.killers.size() == 4);
  CHECK(em.killers[3].killer == 2);
  CHECK(em.killers[3].origin == EncodedFormula::Origin::Killer);
  CHECK(em.banged_zone().size() == 6);
}
