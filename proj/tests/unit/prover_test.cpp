#include <doctest.h>

#include "generators.hpp"
#include "hornlog/encoding.hpp"
#include "hornlog/program.hpp"

using namespace hornlog;

TEST_CASE("proving the fork sequent") {
  const auto witness = prove_bounded(gen::fork_sequent(), 5);
  REQUIRE(witness);
  CHECK(same_tree(*witness, gen::fork_program()));
  CHECK(verify_strong_solution(*witness, gen::fork_sequent()).accepted());
  CHECK_FALSE(prove_bounded(gen::fork_sequent(), 1));
  CHECK(prove_bounded(gen::fork_sequent(), 2));
}

TEST_CASE("the INC machine has no witness") {
  const HornSequent s = build_sequent(EncodingContext(2), gen::inc_machine(), {0, 0});
  CHECK_FALSE(prove_bounded(s, 12));
}

TEST_CASE("input equal to the goal needs no edges") {
  const auto witness = prove_bounded(parse_sequent("q ; ; |- q"), 1);
  REQUIRE(witness);
  CHECK(witness->vertex_count() == 1);
  CHECK_THROWS_AS(prove_bounded(parse_sequent("q ; ; |- q"), 0), std::invalid_argument);
}

TEST_CASE("linear formulas must all be consumed") {
  CHECK_FALSE(prove_bounded(parse_sequent("q ; a -o b ; |- q"), 6));
  const auto witness = prove_bounded(parse_sequent("a ; b -o c, a -o b ; |- c"), 3);
  REQUIRE(witness);
  CHECK(witness->vertex_count() == 3);
  CHECK_FALSE(prove_bounded(parse_sequent("a ; a -o b, a -o b ; |- b"), 6));
  CHECK(prove_bounded(parse_sequent("a*a ; a -o b, a -o b ; |- b*b"), 2));
}

TEST_CASE("linear oplus formulas are consumed on both branches") {
  const HornSequent s = parse_sequent("f ; f -o (g + h) ; g -o m, h -o m |- m");
  const auto witness = prove_bounded(s, 2);
  REQUIRE(witness);
  CHECK(same_tree(*witness, gen::fork_program()));
  CHECK_FALSE(prove_bounded(parse_sequent("f ; f -o (g + h) ; g -o m |- m"), 6));
}

TEST_CASE("DEC witnesses are found at the expected depth") {
  const EncodingContext ctx(2);
  for (std::uint32_t k1 = 0; k1 <= 3; ++k1) {
    const HornSequent s = build_sequent(ctx, gen::dec_machine(), {k1, 0});
    CHECK(prove_bounded(s, 2 * k1 + 4));
    CHECK_FALSE(prove_bounded(s, k1 + 1));
    CHECK(prove_bounded(s, k1 + 2));
  }
  CHECK_FALSE(prove_bounded(build_sequent(ctx, gen::dec_machine(), {0, 1}), 20));
}

TEST_CASE("witnesses are deterministic") {
  const HornSequent s = build_sequent(EncodingContext(2), gen::dec_machine(), {2, 0});
  const auto a = prove_bounded(s, 10);
  const auto b = prove_bounded(s, 10);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(same_tree(*a, *b));
}
