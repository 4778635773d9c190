// Randomized laws. Each case draws from a fixed seed so failures replay.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "hornlog/bridge.hpp"
#include "hornlog/encoding.hpp"
#include "hornlog/io.hpp"

using namespace hornlog;

namespace {

constexpr int kTrials = 200;

std::string shuffled_text(gen::Rng& rng, const SimpleProduct& x) {
  std::vector<std::string> lits;
  for (const auto& [lit, n] : x.items().entries()) lits.insert(lits.end(), n, lit);
  std::shuffle(lits.begin(), lits.end(), rng);
  std::string out;
  for (const auto& l : lits) out += (out.empty() ? "" : " * ") + l;
  return out;
}

Configuration random_config(gen::Rng& rng, std::uint32_t n, std::uint32_t max_label) {
  Configuration k{static_cast<std::uint32_t>(gen::uniform(rng, 0, max_label)), {}};
  for (std::uint32_t i = 0; i < n; ++i) k.counters.push_back(static_cast<std::uint32_t>(gen::uniform(rng, 0, 4)));
  return k;
}

std::size_t expected_leaves(const HllProof& p) {
  switch (p.rule) {
    case HllRule::I:
    case HllRule::H: return 1;
    case HllRule::OplusH: return expected_leaves(p.premises[0]) + expected_leaves(p.premises[1]);
    case HllRule::Cut: return expected_leaves(p.premises[0]) * expected_leaves(p.premises[1]);
    default: return expected_leaves(p.premises[0]);
  }
}

HllProof permute_zones(gen::Rng& rng, HllProof p) {
  std::shuffle(p.conclusion.linear.begin(), p.conclusion.linear.end(), rng);
  std::shuffle(p.conclusion.banged.begin(), p.conclusion.banged.end(), rng);
  for (auto& q : p.premises) q = permute_zones(rng, std::move(q));
  return p;
}

bool divergent_antecedents_agree(const HornProgram& p) {
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    const auto out = p.outgoing(v);
    if (out.size() == 2 && p.edge(out[0]).label.antecedent() != p.edge(out[1]).label.antecedent()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonical products") {
  gen::Rng rng(1);
  for (int i = 0; i < kTrials; ++i) {
    const SimpleProduct x = gen::product(rng, 4, 6);
    const SimpleProduct y = parse_product(shuffled_text(rng, x));
    const SimpleProduct z = parse_product(shuffled_text(rng, y));
    CHECK(product_equiv(x, x));
    CHECK(product_equiv(x, y) == product_equiv(y, x));
    CHECK(product_equiv(y, z));
    CHECK(product_equiv(x, z));
    CHECK(to_string(parse_product(to_string(x))) == to_string(x));
    const SimpleProduct w = gen::product(rng, 4, 6);
    CHECK(product_equiv(x, w) == (to_string(x) == to_string(w)));
  }
}

TEST_CASE("matching round trip") {
  gen::Rng rng(2);
  for (int i = 0; i < kTrials; ++i) {
    const SimpleProduct x = gen::product(rng, 3, 6);
    const SimpleProduct a = gen::product(rng, 3, 3);
    const auto v = match_antecedent(x, a);
    CHECK(v.has_value() == x.items().includes(a.items()));
    if (v) CHECK(product_equiv(a * *v, x));
  }
}

TEST_CASE("pointwise frame law") {
  gen::Rng rng(3);
  for (int i = 0; i < kTrials; ++i) {
    const SimpleProduct x = gen::product(rng, 3, 4);
    const Frame v = gen::frame(rng, 3, 3);
    const HornFormula f = gen::plain_formula(rng, 3, 2);
    const auto base = apply_implication(x, f);
    if (!base) continue;
    CHECK(apply_implication(x * v, f) == *base * v);
  }
}

TEST_CASE("formula and sequent text round trip") {
  gen::Rng rng(4);
  for (int i = 0; i < kTrials; ++i) {
    const HornFormula f = gen::coin(rng) ? gen::plain_formula(rng, 4, 3) : gen::oplus_formula(rng, 4, 3);
    CHECK(parse_formula(to_string(f)) == f);
    HornSequent s{gen::product(rng, 4, 3), {f}, {gen::plain_formula(rng, 4, 2)}, gen::product(rng, 4, 2)};
    CHECK(to_string(parse_sequent(to_string(s))) == to_string(s));
  }
}

TEST_CASE("successors keep counters non-negative") {
  gen::Rng rng(5);
  for (int i = 0; i < kTrials; ++i) {
    const MinskyMachine m = gen::machine(rng);
    const Configuration k = random_config(rng, 2, 3);
    for (const auto& move : successors(m, k)) {
      const Instruction& ins = m.instruction(move.instruction);
      CHECK(ins.label == k.label);
      CHECK(move.next.label == ins.target);
      for (std::uint32_t c = 0; c < 2; ++c) {
        const auto before = static_cast<long>(k.counters[c]);
        const auto after = static_cast<long>(move.next.counters[c]);
        CHECK(after >= 0);
        CHECK(std::abs(after - before) <= 1);
      }
    }
  }
}

TEST_CASE("search agrees with exhaustive path enumeration") {
  gen::Rng rng(6);
  std::size_t halting = 0;
  for (int i = 0; i < kTrials; ++i) {
    const MinskyMachine m = gen::machine(rng);
    const Configuration init{1, {static_cast<std::uint32_t>(gen::uniform(rng, 0, 2)),
                                 static_cast<std::uint32_t>(gen::uniform(rng, 0, 2))}};
    const auto found = search_halting(m, init, SearchBounds{8, 6});
    const auto shortest = gen::brute_force_halting_length(m, init, 8, 6);
    REQUIRE(found.has_value() == shortest.has_value());
    if (!found) continue;
    ++halting;
    CHECK(found->moves.size() == *shortest);
    CHECK(validate_computation(m, *found));
    CHECK(found->configs.front() == init);
    CHECK(is_halting(found->configs.back()));

    // Larger bounds never lose the witness.
    const auto wider = search_halting(m, init, SearchBounds{20, 12});
    REQUIRE(wider);
    CHECK(wider->moves.size() <= found->moves.size());
  }
  CHECK(halting > 5);
}

TEST_CASE("configuration encoding round trip") {
  gen::Rng rng(7);
  for (int i = 0; i < kTrials; ++i) {
    const auto n = static_cast<std::uint32_t>(gen::uniform(rng, 1, 4));
    const EncodingContext ctx(n);
    const Configuration k = random_config(rng, n, 9);
    CHECK(decode_product(ctx, encode_config(ctx, k)) == DecodedState{HeadKind::Label, k.label, k.counters});
    const auto m = static_cast<std::uint32_t>(gen::uniform(rng, 1, n));
    CHECK(decode_product(ctx, encode_killer_state(ctx, m, k.counters)) == DecodedState{HeadKind::Killer, m, k.counters});
  }
}

TEST_CASE("encoded formulas have one head literal in the antecedent") {
  gen::Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const MinskyMachine m = gen::machine(rng);
    const EncodingContext ctx(m.counters());
    const EncodedMachine em = encode_machine(ctx, m);
    const auto non_halt = std::count_if(m.instructions().begin(), m.instructions().end(),
                                        [](const Instruction& ins) { return ins.kind != InstructionKind::Halt; });
    CHECK(em.program.size() == static_cast<std::size_t>(non_halt));
    CHECK(em.killers.size() == m.counters() * m.counters());

    auto heads = [&](const SimpleProduct& x) {
      std::size_t n = 0;
      for (const auto& [lit, count] : x.items().entries()) {
        if (lit[0] == 'l' || lit[0] == 'k') n += count;
      }
      return n;
    };
    for (const auto& f : em.banged_zone()) {
      CHECK(heads(f.antecedent()) == 1);
      std::size_t total = heads(f.antecedent()) + heads(f.left());
      if (f.is_oplus()) total += heads(f.right());
      CHECK(total >= 2);
      CHECK(total <= 3);
    }
  }
}

TEST_CASE("frame law on random programs") {
  gen::Rng rng(9);
  std::size_t defined = 0;
  for (int i = 0; i < kTrials; ++i) {
    const SimpleProduct x = gen::product(rng, 5, 4);
    const HornProgram p = gen::coin(rng) ? gen::program_for(rng, x, 6, 5) : gen::program(rng, 6, 5);
    const Frame v = gen::frame(rng, 5, 3);
    const Evaluation base = evaluate(p, x);
    if (!base.fully_defined()) continue;
    ++defined;
    const Evaluation framed = evaluate(p, x * v);
    for (VertexId w = 0; w < p.vertex_count(); ++w) {
      REQUIRE(framed.at(w));
      CHECK(*framed.at(w) == *base.at(w) * v);
    }
  }
  CHECK(defined > kTrials / 4);
}

TEST_CASE("undefined values propagate to descendants") {
  gen::Rng rng(10);
  for (int i = 0; i < kTrials; ++i) {
    const HornProgram p = gen::program(rng, 6, 3);
    const Evaluation e = evaluate(p, gen::product(rng, 3, 3));
    CHECK(e.at(p.root()));
    for (const auto& edge : p.edges()) {
      if (!e.at(edge.parent)) CHECK_FALSE(e.at(edge.child));
    }
  }
}

TEST_CASE("composition and forking keep the tree invariants") {
  gen::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const HornProgram a = gen::program(rng, 5, 3);
    const HornProgram b = gen::program(rng, 5, 3);
    const HornProgram c = compose(a, b);
    CHECK(c.leaves().size() == a.leaves().size() * b.leaves().size());
    CHECK(divergent_antecedents_agree(c));
    CHECK(same_tree(parse_program(format_program(c)), c));

    const HornProgram f = strong_fork(gen::product(rng, 3, 2), gen::product(rng, 3, 2), gen::product(rng, 3, 2), a, b);
    CHECK(f.leaves().size() == a.leaves().size() + b.leaves().size());
    CHECK(f.is_divergent(f.root()));
    CHECK(divergent_antecedents_agree(f));
    CHECK(same_tree(parse_program(program_to_json(f)), f));
  }
}

TEST_CASE("compiled HLL derivations are strong solutions") {
  gen::Rng rng(12);
  const auto corpus = gen::hll_corpus(rng, 80, 5);
  for (const auto& p : corpus) {
    const HornProgram prog = compile_hll_to_program(p);
    const SolutionReport report = verify_strong_solution(prog, p.conclusion);
    CHECK_MESSAGE(report.accepted(), std::string(hll_proof_to_json(p) + report.describe()));
    CHECK(prog.leaves().size() == expected_leaves(p));
    CHECK(check_hll_proof(permute_zones(rng, p)));
  }
}

TEST_CASE("the prover finds a witness wherever a derivation compiles to one") {
  gen::Rng rng(13);
  const auto corpus = gen::hll_corpus(rng, 40, 2);
  for (const auto& p : corpus) {
    const HornProgram prog = compile_hll_to_program(p);
    const auto witness = prove_bounded(p.conclusion, std::max<std::size_t>(prog.depth(), 1));
    CHECK_MESSAGE(witness.has_value(), to_string(p.conclusion));
    if (witness) CHECK(verify_strong_solution(*witness, p.conclusion).accepted());
  }
}

TEST_CASE("prover witnesses on random sequents are strong solutions") {
  gen::Rng rng(14);
  std::size_t found = 0;
  for (int i = 0; i < kTrials; ++i) {
    HornSequent s{gen::product(rng, 3, 2), {}, {}, gen::product(rng, 3, 2)};
    const std::size_t linear = gen::uniform(rng, 0, 2);
    for (std::size_t k = 0; k < linear; ++k) s.linear.push_back(gen::plain_formula(rng, 3, 2));
    const std::size_t banged = gen::uniform(rng, 0, 3);
    for (std::size_t k = 0; k < banged; ++k) {
      s.banged.push_back(gen::coin(rng, 0.7) ? gen::plain_formula(rng, 3, 2) : gen::oplus_formula(rng, 3, 2));
    }
    const auto witness = prove_bounded(s, 4);
    if (!witness) continue;
    ++found;
    CHECK(witness->depth() <= 4);
    CHECK(verify_strong_solution(*witness, s).accepted());
  }
  CHECK(found > 0);
}

TEST_CASE("normalization and translation on the LL corpus") {
  gen::Rng rng(15);
  const auto corpus = gen::ll_corpus(rng, 40);
  for (const auto& p : corpus) {
    REQUIRE(check_ll_proof(p));
    NormalizationTrace trace;
    const LlProof q = push_oplus_down(p, &trace);
    CHECK(ll_sequent_equiv(q.conclusion, p.conclusion));
    CHECK(check_ll_proof(q));
    CHECK(oplus_adjacent(q));
    CHECK(oplus_separation(q) == 0);
    for (const auto& m : trace.measures) {
      for (std::size_t k = 1; k < m.size(); ++k) CHECK(m[k] < m[k - 1]);
    }
    // Normal forms are fixpoints.
    NormalizationTrace again;
    push_oplus_down(q, &again);
    CHECK(again.conversions == 0);

    const HllProof h = translate_ll_to_hll(p);
    CHECK(check_hll_proof(h));
    const auto reading = horn_reading(p.conclusion);
    REQUIRE(reading);
    CHECK(sequent_equiv(h.conclusion, *reading));
    CHECK(verify_strong_solution(compile_hll_to_program(h), *reading).accepted());
  }
}

TEST_CASE("bridge laws on random halting computations") {
  gen::Rng rng(16);
  std::size_t computations = 0;
  for (int i = 0; i < 400 && computations < 40; ++i) {
    const MinskyMachine m = gen::machine(rng);
    const EncodingContext ctx(2);
    const std::vector<std::uint32_t> inputs{static_cast<std::uint32_t>(gen::uniform(rng, 0, 2)),
                                            static_cast<std::uint32_t>(gen::uniform(rng, 0, 2))};
    const auto c = search_halting(m, Configuration{1, inputs}, SearchBounds{30, 10});
    if (!c) continue;
    ++computations;
    const BridgeProgram b = computation_to_program(ctx, m, *c);
    CHECK(verify_strong_solution(b.program, build_sequent(ctx, m, inputs)).accepted());

    const Evaluation eval = evaluate(b.program, encode_config(ctx, c->configs.front()));
    REQUIRE(b.main_branch.size() == c->configs.size());
    for (std::size_t u = 0; u < c->configs.size(); ++u) {
      CHECK(eval.at(b.main_branch[u]) == encode_config(ctx, c->configs[u]));
    }
    for (const auto& chain : b.side_chains) {
      const auto& a = c->configs[chain.move].counters;
      std::size_t t = 0;
      for (std::uint32_t k = 1; k <= 2; ++k) {
        if (k != chain.counter) t += a[k - 1];
      }
      CHECK(chain.kills == t);
      CHECK(chain.vertices.size() == t + 2);
      CHECK(a[chain.counter - 1] == 0);
      for (std::size_t j = 0; j + 1 < chain.vertices.size(); ++j) {
        const auto state = decode_product(ctx, *eval.at(chain.vertices[j]));
        REQUIRE(state);
        CHECK(state->head == HeadKind::Killer);
      }
      CHECK(eval.at(chain.vertices.back()) == parse_product("l0"));
    }

    const Extraction e = program_to_computation(ctx, m, b.program, inputs);
    REQUIRE(e);
    CHECK(e.computation->configs == c->configs);
    CHECK(validate_computation(m, *e.computation));
  }
  CHECK(computations >= 20);
}
